// Criteria 1 and 2: arithmetic reproduction of the printed table values.

#include <array>
#include <cmath>
#include <string>

#include "criteria.hpp"
#include "emodyn/common/format.hpp"
#include "emodyn/stance/evaluate.hpp"
#include "emodyn/stats/percent_change.hpp"

namespace emodyn::acceptance {

namespace {

struct PrintedRow {
  const char* emotion;
  double pre;
  double covid;
  double change;  // printed percent change
};

// Era means and percent change as printed for the ten emotion categories.
constexpr std::array<PrintedRow, 10> kTable1 = {{
    {"negative", 0.0876, 0.0760, -13.22},
    {"positive", 0.0777, 0.0770, -0.84},
    {"anger", 0.0292, 0.0281, -3.85},
    {"anticipation", 0.0371, 0.0381, 2.65},
    {"disgust", 0.0301, 0.0217, -27.81},
    {"fear", 0.0632, 0.0481, -23.89},
    {"joy", 0.0276, 0.0243, -11.87},
    {"sadness", 0.0406, 0.0348, -14.23},
    {"surprise", 0.0156, 0.0190, 21.66},
    {"trust", 0.0459, 0.0508, 10.64},
}};

// The printed means are rounded to 4 decimals, which moves the recomputed
// change by up to about 0.15 percentage points (surprise).
constexpr double kChangeTolerancePp = 0.2;

struct PrintedClass {
  const char* label;
  double precision, recall, f1;
  double support;
};

constexpr std::array<PrintedClass, 3> kTable2 = {{
    {"against", 0.5464, 0.9282, 0.6875, 141},
    {"favor", 0.7458, 0.8775, 0.8062, 192},
    {"neutral", 0.8087, 0.2254, 0.3520, 167},
}};
constexpr double kMacroP = 0.7003, kMacroR = 0.6770, kMacroF1 = 0.6152;
constexpr double kWeightedRecall = 0.6632, kAccuracy = 0.6632, kWeightedF1 = 0.6170;

// Per-class F1 is printed as a mean over runs, not F1 of the mean P and R.
constexpr double kF1Tolerance = 0.002;
// Weighted F1 of run means differs from the mean of per-run weighted F1s.
constexpr double kWeightedF1Tolerance = 0.01;

std::string num(double v, int digits = 4) { return format_fixed(v, digits); }

}  // namespace

Outcome table1_percent_change(const Settings&) {
  Outcome o;
  double worst = 0;
  const char* worst_row = "";
  for (const auto& row : kTable1) {
    const double got = stats::percent_change(row.pre, row.covid);
    const double diff = std::abs(got - row.change);
    o.expect(diff <= kChangeTolerancePp,
             std::string(row.emotion) + " " + num(got, 2) + " vs printed " + num(row.change, 2));
    if (diff > worst) worst = diff, worst_row = row.emotion;
  }
  o.note("max |diff| " + num(worst, 3) + " pp (" + worst_row + ")");
  return o;
}

Outcome table2_identities(const Settings&) {
  Outcome o;
  double worst = 0, f1_sum = 0, p_sum = 0, r_sum = 0, weighted = 0, recall_weighted = 0, support = 0;
  for (const auto& c : kTable2) {
    const double f = stance::f1(c.precision, c.recall);
    const double diff = std::abs(f - c.f1);
    worst = std::max(worst, diff);
    o.expect(diff <= kF1Tolerance, std::string(c.label) + " F1 " + num(f) + " vs printed " + num(c.f1));
    f1_sum += c.f1;
    p_sum += c.precision;
    r_sum += c.recall;
    weighted += c.f1 * c.support;
    recall_weighted += c.recall * c.support;
    support += c.support;
  }
  const std::string macro_f1 = num(f1_sum / 3);
  o.expect(macro_f1 == num(kMacroF1), "macro F1 " + macro_f1 + " vs printed " + num(kMacroF1));
  o.expect(num(p_sum / 3) == num(kMacroP), "macro precision " + num(p_sum / 3) + " vs printed " + num(kMacroP));
  o.expect(num(r_sum / 3) == num(kMacroR), "macro recall " + num(r_sum / 3) + " vs printed " + num(kMacroR));
  const double w_f1 = weighted / support;
  o.expect(std::abs(w_f1 - kWeightedF1) <= kWeightedF1Tolerance,
           "weighted F1 " + num(w_f1) + " vs printed " + num(kWeightedF1));
  // Support-weighted recall is accuracy. The printed column obeys that, but
  // the printed per-class recall means with the printed supports do not, so
  // the recomputed value is reported rather than asserted.
  o.note("support-weighted recall of printed means " + num(recall_weighted / support));
  o.expect(kWeightedRecall == kAccuracy, "printed weighted recall differs from printed accuracy");
  o.note("max per-class F1 diff " + num(worst) + ", macro F1 " + macro_f1 + ", weighted F1 " + num(w_f1) +
         " vs " + num(kWeightedF1));
  return o;
}

}  // namespace emodyn::acceptance
