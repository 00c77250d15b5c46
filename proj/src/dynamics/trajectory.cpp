#include "emodyn/dynamics/trajectory.hpp"

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "emodyn/common/error.hpp"

namespace emodyn::dynamics {

std::vector<TrajectoryPoint> trajectory(std::span<const WordPoint> words, std::size_t window,
                                        std::vector<std::string>* warnings) {
  if (window < 1) throw ParameterError("trajectory window must be at least 1");
  if (words.empty()) return {};
  if (window > words.size()) {
    const auto msg = fmt::format("trajectory window {} exceeds series length {}; using one window over the series",
                                 window, words.size());
    spdlog::warn("{}", msg);
    if (warnings != nullptr) warnings->push_back(msg);
    window = words.size();
  }
  std::vector<TrajectoryPoint> out;
  out.reserve(words.size() - window + 1);
  SlidingWindow<2> sliding(window);
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (auto mean = sliding.push({words[i].w, words[i].c})) {
      out.push_back(TrajectoryPoint{i + 1 - window, (*mean)[0], (*mean)[1]});
    }
  }
  return out;
}

}  // namespace emodyn::dynamics
