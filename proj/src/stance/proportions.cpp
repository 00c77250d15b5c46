#include "emodyn/stance/proportions.hpp"

#include <map>
#include <unordered_map>

#include "emodyn/common/error.hpp"
#include "emodyn/common/format.hpp"

namespace emodyn::stance {

std::vector<MonthlyStance> monthly_proportions(std::span<const corpus::PostRecord> sample,
                                               std::span<const StanceRecord> records) {
  std::map<Month, MonthlyStance> months;
  std::unordered_map<std::string_view, Month> month_of_post;
  for (const auto& post : sample) {
    const Month m = month_of(post.created_at);
    month_of_post.emplace(post.id, m);
    auto& row = months[m];
    row.month = m;
    ++row.n_sampled;
  }
  for (const auto& r : records) {
    const auto it = month_of_post.find(r.post_id);
    if (it == month_of_post.end()) throw DataError("stance record for unknown post '" + r.post_id + "'");
    ++months[it->second].counts[index(r.label)];
  }
  std::vector<MonthlyStance> out;
  for (auto& [m, row] : months) out.push_back(row);
  return out;
}

std::string proportions_csv(std::span<const MonthlyStance> rows) {
  std::string out = "month,n_sampled,favor_frac,against_frac,neutral_frac\n";
  for (const auto& row : rows) {
    out += row.month.key() + "," + std::to_string(row.n_sampled);
    for (auto l : kAllLabels) out += "," + (row.labeled() == 0 ? std::string() : format_real(row.fraction(l)));
    out += "\n";
  }
  return out;
}

}  // namespace emodyn::stance
