#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace emodyn::dynamics {

inline constexpr std::size_t kDefaultTrajectoryWindow = 10;

/// Word-level (warmth, competence) pair.
struct WordPoint {
  double w = 0.0;
  double c = 0.0;
};

/// Windowed average position in warmth-competence space. `index` is the
/// position of the window's first word.
struct TrajectoryPoint {
  std::size_t index = 0;
  double mean_w = 0.0;
  double mean_c = 0.0;
};

/// Sliding-window means with step 1. A window longer than the series yields a
/// single point over the whole series and a warning. Throws ParameterError
/// for window < 1.
std::vector<TrajectoryPoint> trajectory(std::span<const WordPoint> words, std::size_t window,
                                        std::vector<std::string>* warnings = nullptr);

/// Streaming sliding window over N-dimensional word scores. Each full window
/// yields its mean; values are summed in window order so results match the
/// batch function exactly.
template <std::size_t N>
class SlidingWindow {
 public:
  explicit SlidingWindow(std::size_t window) : buffer_(window) {}

  std::optional<std::array<double, N>> push(const std::array<double, N>& v) {
    buffer_[head_] = v;
    head_ = (head_ + 1) % buffer_.size();
    if (filled_ < buffer_.size()) ++filled_;
    if (filled_ < buffer_.size()) return std::nullopt;
    std::array<double, N> mean{};
    for (std::size_t k = 0; k < buffer_.size(); ++k) {
      const auto& x = buffer_[(head_ + k) % buffer_.size()];
      for (std::size_t d = 0; d < N; ++d) mean[d] += x[d];
    }
    for (auto& m : mean) m /= static_cast<double>(buffer_.size());
    return mean;
  }

  void reset() noexcept { head_ = filled_ = 0; }

 private:
  std::vector<std::array<double, N>> buffer_;
  std::size_t head_ = 0;
  std::size_t filled_ = 0;
};

}  // namespace emodyn::dynamics
