#include <doctest.h>

#include <cstdlib>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "emodyn/common/error.hpp"
#include "emodyn/common/io.hpp"
#include "emodyn/dynamics/home_base.hpp"
#include "emodyn/report/charts.hpp"
#include "emodyn/report/low_scores.hpp"
#include "emodyn/report/manifest.hpp"
#include "emodyn/report/svg.hpp"
#include "emodyn/report/treemap.hpp"
#include "support.hpp"

using namespace emodyn;
using namespace emodyn::report;
using emodyn::testing::source_path;
using lexicon::Dimension;
using stance::StanceLabel;

namespace {

std::size_t count_of(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

// Well-formedness check: balanced tags and a single svg root.
bool balanced_xml(const std::string& s) {
  std::vector<std::string> stack;
  const std::regex tag(R"(<(/?)([a-zA-Z]+)[^>]*?(/?)>)");
  bool saw_root = false;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), tag); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (m[1] == "/") {
      if (stack.empty() || stack.back() != m[2]) return false;
      stack.pop_back();
    } else if (m[3] != "/") {
      if (stack.empty()) {
        if (saw_root || m[2] != "svg") return false;
        saw_root = true;
      }
      stack.push_back(m[2]);
    }
  }
  return saw_root && stack.empty();
}

lexicon::Scorer scorer() {
  std::istringstream tsv("");
  std::istringstream csv(
      "word,warmth,sociability,trust,competence,arousal\n"
      "bad,0.1,0.5,0.5,0.5,0.5\n"
      "liar,0.05,0.2,0.0,0.4,0.6\n"
      "lazy,0.4,0.3,0.3,0.1,0.1\n"
      "cruel,0.05,0.1,0.1,0.5,0.8\n"
      "fool,0.3,0.4,0.4,0.05,0.3\n"
      "kind,0.9,0.95,0.85,0.6,0.3\n");
  return lexicon::Scorer(lexicon::parse_emotion_lexicon(tsv, {}), lexicon::parse_warmth_lexicon(csv, {}));
}

corpus::PostRecord post(std::string id, std::string ts, std::string text) {
  return corpus::PostRecord{std::move(id), "u", *parse_timestamp(ts), std::move(text), 0};
}

void check_golden(const std::string& name, const std::string& actual) {
  const auto path = source_path("tests/golden/" + name);
  if (std::getenv("EMODYN_UPDATE_GOLDEN") != nullptr) write_file_atomic(path, actual);
  REQUIRE(std::filesystem::exists(path));
  CHECK(read_file(path) == actual);
}

dynamics::HomeBase2D ellipse(double w, double c, double l1, double l2, double angle) {
  dynamics::HomeBase2D hb;
  hb.mean_w = w;
  hb.mean_c = c;
  hb.lambda1 = l1;
  hb.lambda2 = l2;
  hb.angle = angle;
  hb.psi = 2.278868566376729;
  hb.n = 100;
  return hb;
}

}  // namespace

TEST_CASE("svg primitives") {
  CHECK(coord(-0.001) == "0.00");
  CHECK(coord(1.005) == "1.00");
  CHECK(coord(12.345) == "12.35");
  CHECK(xml_escape("a<b & \"c\"") == "a&lt;b &amp; &quot;c&quot;");
  SvgDocument doc(10, 20);
  doc.text(1, 2, "x<y", "label");
  CHECK(doc.str().find("x&lt;y") != std::string::npos);
  CHECK(balanced_xml(doc.str()));
}

TEST_CASE("two-point series draws one polyline") {
  const auto svg = render_timeseries(TimeseriesChart{"t", {"2020-01", "2020-02"}, {Series{"joy", {0.1, 0.2}, {}}}});
  CHECK(balanced_xml(svg));
  CHECK(count_of(svg, "<polyline") == 1);
  CHECK_THROWS_AS(render_timeseries(TimeseriesChart{"t", {"a", "b"}, {Series{"x", {0.1}, {}}}}), ParameterError);
  CHECK_THROWS_AS(render_timeseries(TimeseriesChart{"t", {}, {}}), ParameterError);
}

TEST_CASE("two home bases draw two styled ellipses") {
  const std::vector<EllipseSeries> eras = {{"pre", ellipse(0.5, 0.5, 0.01, 0.004, 0.6)},
                                           {"covid", ellipse(0.45, 0.55, 0.012, 0.003, 0.5)}};
  const auto svg = render_ellipses(eras, "home base");
  CHECK(balanced_xml(svg));
  CHECK(count_of(svg, "<ellipse") == 2);
  CHECK(svg.find("class=\"era-0\"") != std::string::npos);
  CHECK(svg.find("class=\"era-1\"") != std::string::npos);
}

TEST_CASE("chart output matches the frozen golden files") {
  const TimeseriesChart chart{"Sentiment",
                              {"2019-11", "2019-12", "2020-01", "2020-02", "2020-03"},
                              {Series{"negative", {0.08, 0.09, 0.07, 0.075, 0.072}, {0.08, 0.085, 0.08, 0.0783, 0.0723}},
                               Series{"positive", {0.12, 0.11, 0.13, 0.125, 0.14}, {}}}};
  check_golden("timeseries.svg", render_timeseries(chart));
  const std::vector<EllipseSeries> eras = {{"pre", ellipse(0.5, 0.5, 0.01, 0.004, 0.6)},
                                           {"covid", ellipse(0.45, 0.55, 0.012, 0.003, -0.2)}};
  check_golden("home_base.svg", render_ellipses(eras, "Warmth-competence home base"));
  TreemapSpec spec{StanceLabel::against, Dimension::warmth, TreemapWeighting::tokens,
                   {{"liar", 9}, {"bad", 5}, {"cruel", 3}, {"scam", 2}, {"fraud", 1}}};
  check_golden("treemap.svg", render_treemap(spec));
}

TEST_CASE("top-k low words") {
  const auto s = scorer();
  const std::vector<corpus::PostRecord> only_bad = {post("1", "2020-01-01T00:00:00Z", "bad kind day bad"),
                                                    post("2", "2020-01-02T00:00:00Z", "so bad")};
  const auto spec = top_k_low_words(only_bad, s, StanceLabel::against, Dimension::warmth, 15);
  CHECK(spec.entries == std::vector<TreemapEntry>{{"bad", 3}});
  const auto by_post =
      top_k_low_words(only_bad, s, StanceLabel::against, Dimension::warmth, 15, TreemapWeighting::posts);
  CHECK(by_post.entries == std::vector<TreemapEntry>{{"bad", 2}});

  CHECK(top_k_low_words({}, s, StanceLabel::favor, Dimension::warmth).entries.empty());
  CHECK_THROWS_AS(top_k_low_words(only_bad, s, StanceLabel::favor, Dimension::warmth, 0), ParameterError);
}

TEST_CASE("top-k on a twenty-word subset matches a hand ranking") {
  // Low warmth words: bad, liar, cruel, fool (lazy is 0.4, kind is high).
  // Hand counts: liar 6, bad 5, cruel 5, fool 2; lazy and kind never count.
  const auto s = scorer();
  const std::vector<corpus::PostRecord> subset = {
      post("1", "2020-01-01T00:00:00Z", "liar liar bad cruel kind"),
      post("2", "2020-01-01T00:00:00Z", "cruel lazy liar bad fool"),
      post("3", "2020-01-01T00:00:00Z", "bad bad liar cruel cruel"),
      post("4", "2020-01-01T00:00:00Z", "liar liar bad cruel fool"),
  };
  const auto all = top_k_low_words(subset, s, StanceLabel::against, Dimension::warmth, 15);
  CHECK(all.entries == std::vector<TreemapEntry>{{"liar", 6}, {"bad", 5}, {"cruel", 5}, {"fool", 2}});
  const auto top2 = top_k_low_words(subset, s, StanceLabel::against, Dimension::warmth, 2);
  CHECK(top2.entries == std::vector<TreemapEntry>{{"liar", 6}, {"bad", 5}});
  const auto competence = top_k_low_words(subset, s, StanceLabel::against, Dimension::competence, 15);
  CHECK(competence.entries == std::vector<TreemapEntry>{{"fool", 2}, {"lazy", 1}});
}

TEST_CASE("treemap layout and serialization") {
  const std::vector<TreemapEntry> entries = {{"a", 6}, {"b", 6}, {"c", 4}, {"d", 3}, {"e", 2}, {"f", 2}, {"g", 1}};
  const auto cells = squarify(entries, 600, 400);
  REQUIRE(cells.size() == entries.size());
  double area = 0;
  for (const auto& c : cells) {
    area += c.w * c.h;
    CHECK(c.x >= -1e-9);
    CHECK(c.y >= -1e-9);
    CHECK(c.x + c.w <= 600 + 1e-9);
    CHECK(c.y + c.h <= 400 + 1e-9);
    CHECK(c.w * c.h == doctest::Approx(600.0 * 400.0 * static_cast<double>(c.entry.frequency) / 24.0));
  }
  CHECK(area == doctest::Approx(600.0 * 400.0));

  const TreemapSpec spec{StanceLabel::favor, Dimension::competence, TreemapWeighting::posts, entries};
  const auto back = parse_treemap(to_json(spec));
  CHECK(back.entries == spec.entries);
  CHECK(back.stance == spec.stance);
  CHECK(back.dimension == spec.dimension);
  CHECK(back.weighting == spec.weighting);
  CHECK(treemap_stem(StanceLabel::favor, Dimension::competence) == "treemap_favor_low-competence");
}

TEST_CASE("low-score density by stance and era") {
  const auto s = scorer();
  const std::vector<corpus::PostRecord> posts = {
      post("1", "2019-05-01T00:00:00Z", "bad day"),       post("2", "2019-06-01T00:00:00Z", "bad bad x y"),
      post("3", "2020-05-01T00:00:00Z", "bad x x x"),     post("4", "2020-06-01T00:00:00Z", "x"),
      post("5", "2019-05-01T00:00:00Z", "fool kind"),     post("6", "2020-05-01T00:00:00Z", "nothing labeled"),
  };
  const std::vector<stance::StanceRecord> records = {
      {"1", StanceLabel::against, "m", 0.4, "h", "r"}, {"2", StanceLabel::against, "m", 0.4, "h", "r"},
      {"3", StanceLabel::against, "m", 0.4, "h", "r"}, {"4", StanceLabel::against, "m", 0.4, "h", "r"},
      {"5", StanceLabel::favor, "m", 0.4, "h", "r"}};
  const auto rows = low_score_density(posts, records, s, *parse_date("2020-01-01"));
  REQUIRE(rows.size() == 4);
  const auto& against_warmth = *std::find_if(rows.begin(), rows.end(), [](const LowScoreRow& r) {
    return r.dimension == Dimension::warmth && r.stance == StanceLabel::against;
  });
  CHECK(against_warmth.pre_posts == 2);
  CHECK(against_warmth.pre_mean == 0.5);
  CHECK(against_warmth.covid_posts == 2);
  CHECK(against_warmth.covid_mean == 0.125);
  REQUIRE(against_warmth.pct_change.has_value());
  CHECK(*against_warmth.pct_change == -75.0);
  REQUIRE(against_warmth.p_value.has_value());

  const auto& favor_competence = *std::find_if(rows.begin(), rows.end(), [](const LowScoreRow& r) {
    return r.dimension == Dimension::competence && r.stance == StanceLabel::favor;
  });
  CHECK(favor_competence.pre_mean == 0.5);
  CHECK(favor_competence.covid_posts == 0);
  CHECK_FALSE(favor_competence.p_value.has_value());
  const auto csv = low_score_csv(rows);
  CHECK(csv.rfind("dimension,stance,pre_mean,pre_posts,covid_mean,covid_posts,pct_change,p_value,significant_at_0.001\n", 0) == 0);
}

TEST_CASE("manifest lists artifacts and detects tampering") {
  emodyn::testing::TempDir dir;
  emodyn::testing::write_text(dir / "b.csv", "x\n");
  emodyn::testing::write_text(dir / "a" / "c.txt", "hello");
  write_manifest(dir.path(), "demo", "fp1");
  const auto doc = nlohmann::json::parse(read_file(dir / kManifestFile));
  CHECK(doc.at("stage") == "demo");
  CHECK(doc.at("config_sha256") == "fp1");
  REQUIRE(doc.at("artifacts").size() == 2);
  CHECK(doc.at("artifacts")[0].at("path") == "a/c.txt");
  CHECK(doc.at("artifacts")[0].at("bytes") == 5);
  CHECK(doc.at("artifacts")[0].at("sha256") == "2cf24dba5fb0a30e26e83b2ac5b9e29e1b161e5c1fa7425e73043362938b9824");
  CHECK(manifest_matches(dir.path(), "fp1"));
  CHECK_FALSE(manifest_matches(dir.path(), "fp2"));
  emodyn::testing::write_text(dir / "b.csv", "y\n");
  CHECK_FALSE(manifest_matches(dir.path(), "fp1"));
  CHECK(manifest_json(dir.path(), "demo", "fp1") == manifest_json(dir.path(), "demo", "fp1"));
}
