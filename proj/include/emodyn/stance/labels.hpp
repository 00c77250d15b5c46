#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace emodyn::stance {

enum class StanceLabel { favor, against, neutral };

inline constexpr std::size_t kLabelCount = 3;
inline constexpr std::array<StanceLabel, kLabelCount> kAllLabels = {StanceLabel::favor, StanceLabel::against,
                                                                    StanceLabel::neutral};

std::string_view to_string(StanceLabel label) noexcept;
constexpr std::size_t index(StanceLabel label) noexcept { return static_cast<std::size_t>(label); }

/// Maps a model answer onto a label. Only the first non-empty line is read;
/// case, surrounding quotes and punctuation, and a leading "stance:" or
/// "answer:" are ignored. Returns nullopt for anything not in the table.
std::optional<StanceLabel> normalize_label(std::string_view response);

/// Strict form of normalize_label; throws DataError naming the input.
StanceLabel parse_label(std::string_view text);

}  // namespace emodyn::stance
