#include <doctest.h>

#include <atomic>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "emodyn/common/error.hpp"
#include "emodyn/common/hash.hpp"
#include "emodyn/stance/classify.hpp"
#include "emodyn/stance/evaluate.hpp"
#include "emodyn/stance/labels.hpp"
#include "emodyn/stance/llm.hpp"
#include "emodyn/stance/proportions.hpp"
#include "emodyn/stance/sample.hpp"
#include "mock_server.hpp"
#include "support.hpp"

using namespace emodyn;
using namespace emodyn::stance;
using corpus::PostRecord;

namespace {

PostRecord post(std::string id, std::string ts, std::string text = "some text") {
  return PostRecord{std::move(id), "u", *parse_timestamp(ts), std::move(text), 0};
}

std::vector<PostRecord> numbered(int n, const std::string& month = "2020-04") {
  std::vector<PostRecord> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(post("p" + std::to_string(100 + i), month + "-0" + std::to_string(1 + i % 9) + "T12:00:00Z",
                       i % 2 ? "so grateful, booked my dose" : "this is poison"));
  }
  return out;
}

ClassifyOptions quiet(std::size_t concurrency = 2) {
  ClassifyOptions o;
  o.concurrency = concurrency;
  o.retry = RetryPolicy{1, std::chrono::milliseconds{0}};
  return o;
}

/// Answers through `inner` until `budget` calls are spent, then fails.
class FailingClient : public LlmClient {
 public:
  FailingClient(LlmClient& inner, int budget) : inner_(inner), budget_(budget) {}
  std::string complete(const LlmRequest& r) override {
    if (budget_.fetch_sub(1) <= 0) throw ProviderError("endpoint down");
    return inner_.complete(r);
  }
  std::string model_id() const override { return inner_.model_id(); }

 private:
  LlmClient& inner_;
  std::atomic<int> budget_;
};

StanceRecord rec(std::string id, StanceLabel label) { return StanceRecord{std::move(id), label, "m", 0.4, "h", "r"}; }

}  // namespace

TEST_CASE("label normalization table") {
  CHECK(normalize_label("favor") == StanceLabel::favor);
  CHECK(normalize_label("FAVOR\n") == StanceLabel::favor);
  CHECK(normalize_label("  \"Against.\"  ") == StanceLabel::against);
  CHECK(normalize_label("Stance: in favour") == StanceLabel::favor);
  CHECK(normalize_label("\nneutral\nbecause reasons") == StanceLabel::neutral);
  CHECK(normalize_label("Neither of the two inferences can be reasonably made.") == StanceLabel::neutral);
  CHECK_FALSE(normalize_label("maybe").has_value());
  CHECK_FALSE(normalize_label("").has_value());
  CHECK_THROWS_AS(parse_label("probably favor"), DataError);
}

TEST_CASE("monthly sampler") {
  SUBCASE("deterministic for a fixed seed and independent of order") {
    auto month = numbered(5);
    const auto a = sample_monthly(month, 2, 42);
    std::reverse(month.begin(), month.end());
    const auto b = sample_monthly(month, 2, 42);
    REQUIRE(a.size() == 2);
    CHECK(a[0].id == b[0].id);
    CHECK(a[1].id == b[1].id);
  }
  SUBCASE("exhausted month returns everything with a warning") {
    std::vector<std::string> warnings;
    CHECK(sample_monthly(numbered(3), 2000, 1, &warnings).size() == 3);
    CHECK(warnings.size() == 1);
  }
  SUBCASE("24 months of 150 posts") {
    std::vector<PostRecord> corpus;
    for (int m = 0; m < 24; ++m) {
      const std::string key = std::to_string(2019 + m / 12) + "-" + (m % 12 < 9 ? "0" : "") + std::to_string(1 + m % 12);
      for (int i = 0; i < 150; ++i) corpus.push_back(post(key + "-" + std::to_string(i), key + "-11T10:00:00Z"));
    }
    const auto s = sample_monthly(corpus, 100, 7);
    CHECK(s.size() == 2400);
    std::map<Month, int> per;
    for (const auto& p : s) ++per[month_of(p.created_at)];
    CHECK(per.size() == 24);
    for (const auto& [m, n] : per) CHECK(n == 100);
  }
  SUBCASE("invalid input") {
    CHECK_THROWS_AS(sample_monthly(std::vector<PostRecord>{}, 2, 1), DataError);
    CHECK_THROWS_AS(sample_monthly(numbered(3), 0, 1), ParameterError);
  }
  CHECK(sample_key(1, Month{2020, 1}, "a") != sample_key(2, Month{2020, 1}, "a"));
}

TEST_CASE("prompt rendering") {
  CHECK(render_prompt("About {target}: {text} {other}", "hi", "vaccines") == "About vaccines: hi {other}");
  CHECK_THROWS_AS(render_prompt("no slot", "x", "y"), ConfigError);
  CHECK(default_prompt_template().find("{text}") != std::string::npos);
}

TEST_CASE("classification with a constant mock") {
  MockLlmClient client(MockOptions{MockMode::constant, 0, "favor", {}});
  const auto posts = numbered(8);
  const auto result = classify(posts, client, default_prompt_template(), quiet());
  REQUIRE(result.records.size() == 8);
  CHECK(result.failures.empty());
  for (const auto& r : result.records) {
    CHECK(r.label == StanceLabel::favor);
    CHECK(r.prompt_hash == sha256_hex(default_prompt_template()));
    CHECK(r.temperature == 0.4);
    CHECK(r.model_id == client.model_id());
  }
  CHECK(std::is_sorted(result.records.begin(), result.records.end(),
                       [](const auto& a, const auto& b) { return a.post_id < b.post_id; }));

  MockLlmClient noisy(MockOptions{MockMode::constant, 0, "FAVOR\n", {}});
  CHECK(classify(posts, noisy, default_prompt_template(), quiet()).records[3].label == StanceLabel::favor);
}

TEST_CASE("unparseable answers become parse failures") {
  const auto posts = numbered(10);
  MockLlmClient client(MockOptions{MockMode::keyword, 0, "favor", {posts[4].id}});
  const auto result = classify(posts, client, default_prompt_template(), quiet(3));
  CHECK(result.records.size() == 9);
  REQUIRE(result.failures.size() == 1);
  CHECK(result.failures[0].post_id == posts[4].id);
  const auto json = nlohmann::json::parse(to_jsonl(result.failures[0]));
  CHECK(json.at("parse_failure") == "I am not sure what you mean.");
}

TEST_CASE("classification validates its inputs") {
  MockLlmClient client;
  auto opts = quiet();
  opts.temperature = 2.5;
  CHECK_THROWS_AS(classify(numbered(2), client, default_prompt_template(), opts), ParameterError);
  auto dup = numbered(2);
  dup[1].id = dup[0].id;
  CHECK_THROWS_AS(classify(dup, client, default_prompt_template(), quiet()), DataError);
  CHECK_THROWS_AS(classify(numbered(2), client, "no slot", quiet()), ConfigError);
}

TEST_CASE("checkpoint resume reproduces an uninterrupted run") {
  emodyn::testing::TempDir dir;
  const auto posts = numbered(30);
  MockLlmClient mock(MockOptions{MockMode::random, 17, "favor", {posts[7].id}});
  auto options = quiet(1);
  options.checkpoint_dir = dir.path();
  options.run_id = "r1";

  FailingClient flaky(mock, 12);
  CHECK_THROWS_WITH_AS(classify(posts, flaky, default_prompt_template(), options),
                       doctest::Contains("stance_records.r1.partial.jsonl"), ProviderError);
  REQUIRE(std::filesystem::exists(checkpoint_path(dir.path(), "r1")));

  auto resumed_options = options;
  resumed_options.concurrency = 4;
  FailingClient counted(mock, 1000);
  const auto resumed = classify(posts, counted, default_prompt_template(), resumed_options);
  CHECK_FALSE(std::filesystem::exists(checkpoint_path(dir.path(), "r1")));

  auto plain = options;
  plain.checkpoint_dir.clear();
  const auto direct = classify(posts, mock, default_prompt_template(), plain);
  CHECK(resumed.records == direct.records);
  CHECK(resumed.failures == direct.failures);

  SUBCASE("a different prompt cannot resume the log") {
    FailingClient again(mock, 3);
    CHECK_THROWS_AS(classify(posts, again, default_prompt_template(), options), ProviderError);
    CHECK_THROWS_AS(classify(posts, mock, default_prompt_template() + " ", options), ConfigError);
  }
}

TEST_CASE("stance records round-trip through JSONL") {
  const StanceRecord r{"p1", StanceLabel::against, "mock-keyword", 0.7, "abc", "run-2"};
  CHECK(parse_stance_record(to_jsonl(r)) == r);
}

TEST_CASE("http LLM client") {
  std::string seen_auth;
  nlohmann::json seen_body;
  emodyn::testing::MockServer server("/v1/chat/completions", [&](const httplib::Request& req, httplib::Response& res) {
    seen_auth = req.get_header_value("Authorization");
    seen_body = nlohmann::json::parse(req.body);
    res.set_content(R"({"choices":[{"message":{"role":"assistant","content":"Against"}}]})", "application/json");
  });
  HttpLlmClient client(HttpLlmConfig{server.url("/v1/chat/completions"), "model-x", "secret", std::chrono::seconds{5}});
  const auto answer = client.complete(LlmRequest{"p1", "raw", "rendered prompt", 0.25, "r"});
  CHECK(normalize_label(answer) == StanceLabel::against);
  CHECK(seen_auth == "Bearer secret");
  CHECK(seen_body.at("model") == "model-x");
  CHECK(seen_body.at("temperature") == 0.25);
  CHECK(seen_body.at("messages").back().at("content") == "rendered prompt");
  CHECK(client.model_id() == "model-x");

  HttpLlmClient dead(HttpLlmConfig{"http://127.0.0.1:9/none", "m", "", std::chrono::seconds{1}});
  CHECK_THROWS_AS(dead.complete(LlmRequest{"p1", "raw", "x", 0.4, "r"}), ProviderError);
}

TEST_CASE("metrics from a hand-built 12-item confusion matrix") {
  // Rows are gold, columns predicted: favor, against, neutral.
  const Confusion m = {{{3, 1, 0}, {1, 2, 1}, {0, 2, 2}}};
  const auto r = report_from_confusion(m);
  CHECK(r.total == 12);
  CHECK(r.accuracy == doctest::Approx(7.0 / 12));
  CHECK(r[StanceLabel::favor].precision == doctest::Approx(0.75));
  CHECK(r[StanceLabel::favor].recall == doctest::Approx(0.75));
  CHECK(r[StanceLabel::against].precision == doctest::Approx(0.4));
  CHECK(r[StanceLabel::against].recall == doctest::Approx(0.5));
  CHECK(r[StanceLabel::against].f1 == doctest::Approx(4.0 / 9));
  CHECK(r[StanceLabel::neutral].precision == doctest::Approx(2.0 / 3));
  CHECK(r[StanceLabel::neutral].recall == doctest::Approx(0.5));
  CHECK(r[StanceLabel::neutral].f1 == doctest::Approx(4.0 / 7));
  CHECK(r[StanceLabel::neutral].support == 4.0);
  CHECK(r.macro_avg.f1 == doctest::Approx((0.75 + 4.0 / 9 + 4.0 / 7) / 3));
  CHECK(r.weighted_avg.recall == doctest::Approx(r.accuracy));
}

TEST_CASE("evaluation against gold labels") {
  const std::map<std::string, StanceLabel> gold = {
      {"a", StanceLabel::favor}, {"b", StanceLabel::against}, {"c", StanceLabel::neutral}};
  const std::vector<StanceRecord> perfect = {rec("a", StanceLabel::favor), rec("b", StanceLabel::against),
                                             rec("c", StanceLabel::neutral)};
  const auto r = evaluate(perfect, gold);
  CHECK(r.accuracy == 1.0);
  for (auto l : kAllLabels) {
    CHECK(r[l].precision == 1.0);
    CHECK(r[l].recall == 1.0);
    CHECK(r[l].f1 == 1.0);
  }
  CHECK(r.macro_avg.f1 == 1.0);
  CHECK(r.weighted_avg.f1 == 1.0);

  const std::vector<StanceRecord> partial = {rec("a", StanceLabel::favor), rec("z", StanceLabel::against)};
  CHECK_THROWS_WITH_AS(evaluate(partial, gold), doctest::Contains("z"), DataError);

  CHECK(f1(0.5464, 0.9282) == doctest::Approx(0.6875).epsilon(0.002 / 0.6875));
  CHECK(f1(0.0, 0.0) == 0.0);
}

TEST_CASE("aggregate over runs") {
  const Confusion a = {{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}};
  const Confusion b = {{{1, 1, 0}, {0, 2, 0}, {0, 0, 2}}};
  const std::vector<ClassificationReport> runs = {report_from_confusion(a), report_from_confusion(b)};
  const auto agg = aggregate(runs);
  CHECK(agg.runs == 2);
  CHECK(agg.accuracy.mean == doctest::Approx((1.0 + 5.0 / 6) / 2));
  CHECK(agg.accuracy.sd == doctest::Approx(std::sqrt(2 * std::pow((1.0 - 5.0 / 6) / 2, 2))));
  const auto doc = nlohmann::json::parse(to_json(agg, runs));
  CHECK(doc.at("runs") == 2);
  CHECK(doc.at("per_run").size() == 2);
}

TEST_CASE("monthly proportions on a six-month fixture") {
  // Month: sampled posts, labels (x = parse failure, no record).
  // 2020-01: F F A N   2020-02: A A   2020-03: N x   2020-04: x x
  // 2020-05: F A N F A N   2020-06: F
  struct Row { const char* month; const char* labels; };
  const Row rows[] = {{"2020-01", "FFAN"}, {"2020-02", "AA"}, {"2020-03", "Nx"},
                      {"2020-04", "xx"},   {"2020-05", "FANFAN"}, {"2020-06", "F"}};
  std::vector<PostRecord> sample;
  std::vector<StanceRecord> records;
  int id = 0;
  for (const auto& row : rows) {
    for (const char* l = row.labels; *l; ++l) {
      const std::string pid = "q" + std::to_string(id++);
      sample.push_back(post(pid, std::string(row.month) + "-15T00:00:00Z"));
      if (*l == 'F') records.push_back(rec(pid, StanceLabel::favor));
      if (*l == 'A') records.push_back(rec(pid, StanceLabel::against));
      if (*l == 'N') records.push_back(rec(pid, StanceLabel::neutral));
    }
  }
  const auto csv = proportions_csv(monthly_proportions(sample, records));
  CHECK(csv ==
        "month,n_sampled,favor_frac,against_frac,neutral_frac\n"
        "2020-01,4,0.5,0.25,0.25\n"
        "2020-02,2,0,1,0\n"
        "2020-03,2,0,0,1\n"
        "2020-04,2,,,\n"
        "2020-05,6,0.3333333333333333,0.3333333333333333,0.3333333333333333\n"
        "2020-06,1,1,0,0\n");
  records.push_back(rec("stranger", StanceLabel::favor));
  CHECK_THROWS_AS(monthly_proportions(sample, records), DataError);
}
