// Criteria 4-6: home-base coverage, band calibration and density oracles.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "criteria.hpp"
#include "emodyn/cli/stages.hpp"
#include "emodyn/common/format.hpp"
#include "emodyn/common/io.hpp"
#include "emodyn/dynamics/analyzer.hpp"
#include "emodyn/dynamics/home_base.hpp"
#include "emodyn/lexicon/lexicon.hpp"
#include "support.hpp"

namespace emodyn::acceptance {

namespace {

constexpr std::size_t kEllipseDraws = 100'000;
constexpr double kCoverage = 0.68, kEllipseTolerance = 0.01, kBandTolerance = 0.03;
constexpr double kEquivarianceTolerance = 1e-9;
constexpr int kBandTrials = 1000;
constexpr std::size_t kBandSize = 50;

struct Gaussian2D {
  double mean_w, mean_c;
  double sd_major, sd_minor, angle;  // principal axes
};

constexpr Gaussian2D kGaussians[] = {
    {0.0, 0.0, 1.0, 1.0, 0.0},
    {0.55, 0.62, 0.08, 0.02, 0.6},
    {-3.0, 10.0, 5.0, 0.5, -1.2},
};

void draw(const Gaussian2D& g, std::mt19937_64& rng, std::vector<double>& w, std::vector<double>& c) {
  std::normal_distribution<double> z(0.0, 1.0);
  const double cs = std::cos(g.angle), sn = std::sin(g.angle);
  w.resize(kEllipseDraws);
  c.resize(kEllipseDraws);
  for (std::size_t i = 0; i < kEllipseDraws; ++i) {
    const double a = z(rng) * g.sd_major, b = z(rng) * g.sd_minor;
    w[i] = g.mean_w + cs * a - sn * b;
    c[i] = g.mean_c + sn * a + cs * b;
  }
}

}  // namespace

Outcome ellipse_coverage(const Settings&) {
  Outcome o;
  std::mt19937_64 rng(68);
  std::vector<double> w, c, rw, rc;
  std::string coverage;
  double worst_lambda = 0;
  for (const auto& g : kGaussians) {
    draw(g, rng, w, c);
    const auto hb = dynamics::home_base_2d(w, c);
    const double inside = static_cast<double>(dynamics::count_inside(hb, w, c)) / static_cast<double>(w.size());
    o.expect(std::abs(inside - kCoverage) <= kEllipseTolerance, "coverage " + format_fixed(inside, 4));
    coverage += (coverage.empty() ? "" : "/") + format_fixed(inside, 4);

    // Rotating the cloud about the origin must leave the eigenvalues alone.
    for (double theta : {0.3, 1.0, 2.5}) {
      const double cs = std::cos(theta), sn = std::sin(theta);
      rw.resize(w.size());
      rc.resize(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) {
        rw[i] = cs * w[i] - sn * c[i];
        rc[i] = sn * w[i] + cs * c[i];
      }
      const auto rot = dynamics::home_base_2d(rw, rc);
      const double d = std::max(std::abs(rot.lambda1 - hb.lambda1), std::abs(rot.lambda2 - hb.lambda2));
      worst_lambda = std::max(worst_lambda, d);
      o.expect(d <= kEquivarianceTolerance, "eigenvalues moved by " + format_real(d) + " under rotation");
    }
  }
  o.note("inside " + coverage + ", max eigenvalue change " + format_real(worst_lambda));
  return o;
}

Outcome band_calibration(const Settings&) {
  Outcome o;
  std::mt19937_64 rng(1000);
  std::normal_distribution<double> z(0.0, 1.0);
  std::vector<double> sample(kBandSize);
  int hits = 0;
  for (int t = 0; t < kBandTrials; ++t) {
    for (auto& x : sample) x = z(rng);
    hits += dynamics::home_base_1d(sample).contains(0.0);
  }
  const double rate = static_cast<double>(hits) / kBandTrials;
  o.expect(std::abs(rate - kCoverage) <= kBandTolerance, "band covers the mean in " + format_fixed(rate, 3));
  o.note("covered " + std::to_string(hits) + " of " + std::to_string(kBandTrials));
  return o;
}

namespace {

// First four CSV columns (month, category, count, total) of every data row.
std::vector<std::string> integer_columns(const std::string& csv) {
  std::vector<std::string> rows;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::size_t pos = 0;
    for (int commas = 0; commas < 4 && pos != std::string::npos; ++commas) pos = line.find(',', pos + (commas ? 1 : 0));
    rows.push_back(line.substr(0, pos));
  }
  return rows;
}

dynamics::AnalysisResult analyze(const std::filesystem::path& corpus, const lexicon::Scorer& scorer,
                                 std::size_t workers, std::size_t chunk_lines) {
  dynamics::AnalysisOptions options;
  options.workers = workers;
  options.chunk_lines = chunk_lines;
  return dynamics::analyze_corpus(corpus, scorer, options);
}

}  // namespace

Outcome density_oracle(const Settings& s) {
  Outcome o;

  // Worked example: two posts in one month, one in the next, with
  // good -> positive and bad -> negative. Hand counts:
  //   2021-01: "good good day" + "bad day"  -> positive 2/5, negative 1/5
  //   2021-02: "bad bad good"                -> positive 1/3, negative 2/3
  {
    std::istringstream tsv("good\tpositive\t1\nbad\tnegative\t1\n");
    std::istringstream csv("word,warmth,sociability,trust,competence,arousal\n");
    const lexicon::Scorer scorer(lexicon::parse_emotion_lexicon(tsv, {}), lexicon::parse_warmth_lexicon(csv, {}));
    const auto corpus = s.scratch / "worked.jsonl";
    testing::write_text(corpus,
                        R"({"id":"a","user_id":"u1","created_at":"2021-01-05T10:00:00Z","text":"good good day"})"
                        "\n"
                        R"({"id":"b","user_id":"u2","created_at":"2021-01-20T10:00:00Z","text":"bad day"})"
                        "\n"
                        R"({"id":"c","user_id":"u1","created_at":"2021-02-01T00:00:00Z","text":"bad bad good"})"
                        "\n");
    const auto rows = integer_columns(dynamics::densities_csv(analyze(corpus, scorer, 1, 4096).bins));
    auto has = [&](const std::string& r) { return std::find(rows.begin(), rows.end(), r) != rows.end(); };
    for (const char* expected : {"2021-01,positive,2,5", "2021-01,negative,1,5", "2021-01,joy,0,5",
                                 "2021-02,positive,1,3", "2021-02,negative,2,3"}) {
      o.expect(has(expected), std::string("worked example lacks ") + expected);
    }
  }

  // 100-post fixture against the counts written by the standalone script.
  const auto scorer = cli::load_scorer(s.source_dir / "data/lexicons", 1.0 / 3.0);
  const auto fixture = s.source_dir / "tests/fixtures/density_100.jsonl";
  const auto oracle = integer_columns(read_file(s.source_dir / "tests/golden/density_100.csv"));
  std::string reference;
  for (std::size_t workers : {1u, 4u, 16u}) {
    const auto csv = dynamics::densities_csv(analyze(fixture, scorer, workers, 3).bins);
    if (workers == 1) {
      const auto got = integer_columns(csv);
      o.expect(got == oracle, "100-post counts differ from the oracle (" + std::to_string(got.size()) + " vs " +
                                  std::to_string(oracle.size()) + " rows)");
      reference = csv;
      o.note(std::to_string(oracle.size()) + " oracle rows matched");
    } else {
      o.expect(csv == reference, std::to_string(workers) + " workers changed the CSV");
    }
  }
  return o;
}

}  // namespace emodyn::acceptance
