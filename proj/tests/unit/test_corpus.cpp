#include <doctest.h>

#include <cmath>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "emodyn/common/error.hpp"
#include "emodyn/common/io.hpp"
#include "emodyn/corpus/clean.hpp"
#include "emodyn/corpus/dedup.hpp"
#include "emodyn/corpus/embedding.hpp"
#include "emodyn/corpus/filter.hpp"
#include "emodyn/corpus/ingest.hpp"
#include "mock_server.hpp"
#include "support.hpp"

using namespace emodyn;
using namespace emodyn::corpus;
using emodyn::testing::TempDir;
using emodyn::testing::write_text;

namespace {

RawPost raw(std::string id, std::string user, std::string ts, std::string text = "hello") {
  return RawPost{std::move(id), std::move(user), *parse_timestamp(ts), std::move(text), false};
}

PostRecord record(std::string id, std::string text) {
  return PostRecord{std::move(id), "u", Timestamp{0}, std::move(text), 0};
}

std::string post_line(const std::string& id, const std::string& user, const std::string& ts, const std::string& text) {
  return nlohmann::json{{"id", id}, {"user_id", user}, {"created_at", ts}, {"text", text}}.dump();
}

/// Vectors scripted per text; anything else maps to the orthogonal axis.
class TableProvider : public EmbeddingProvider {
 public:
  explicit TableProvider(std::map<std::string, std::vector<double>> table) : table_(std::move(table)) {}
  std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) override {
    ++calls;
    if (fail_after >= 0 && calls > fail_after) throw ProviderError("scripted outage");
    std::vector<std::vector<double>> out;
    for (const auto& t : texts) {
      auto it = table_.find(t);
      out.push_back(it != table_.end() ? it->second : std::vector<double>{0, 1, 0, 0});
    }
    return out;
  }
  int calls = 0;
  int fail_after = -1;

 private:
  std::map<std::string, std::vector<double>> table_;
};

const std::vector<double> kAnchor = {1, 0, 0, 0};

}  // namespace

TEST_CASE("clean_text removes urls, mentions and non-ascii") {
  CHECK(clean_text("Get vaxxed! https://t.co/abc @who \xf0\x9f\x92\x89") == "Get vaxxed!");
  CHECK(clean_text("plain ascii text") == "plain ascii text");
  CHECK(clean_text("caf\xc3\xa9  &  na\xc3\xafve") == "caf & nave");
  CHECK(clean_text("") == "");
  CHECK(clean_text("see www.example.org/x now") == "see now");
  CHECK(clean_text("mail me at me@example.org") == "mail me at me@example.org");
  CHECK(clean_text("so happy :) today <3") == "so happy today");
  CHECK(clean_text("a\xc2\xa0" "b\tc\n\nd") == "a b c d");
}

TEST_CASE("clean_text is idempotent") {
  for (const char* s : {"RT @x: hi http://a.b @y :)", "  \xe2\x80\x83 x  ", "@@a @_b c@d", "www.x"}) {
    const auto once = clean_text(s);
    CHECK(clean_text(once) == once);
  }
}

TEST_CASE("re-posts are recognised by prefix or flag") {
  CHECK(is_repost(raw("1", "u", "2020-01-01T00:00:00Z", "RT @who: text")));
  CHECK_FALSE(is_repost(raw("1", "u", "2020-01-01T00:00:00Z", "ART @who")));
  auto flagged = raw("1", "u", "2020-01-01T00:00:00Z", "text");
  flagged.is_repost = true;
  CHECK(is_repost(flagged));
}

TEST_CASE("parse_raw_post rejects malformed input") {
  CHECK(parse_raw_post(post_line("a", "u", "2020-01-01T10:00:00+02:00", "x")).created_at ==
        *parse_timestamp("2020-01-01T08:00:00Z"));
  CHECK_THROWS_AS(parse_raw_post("{not json"), DataError);
  CHECK_THROWS_AS(parse_raw_post(R"({"id":"a","user_id":"u","text":"x"})"), DataError);
  CHECK_THROWS_AS(parse_raw_post(R"({"id":"","user_id":"u","created_at":"2020-01-01T00:00:00Z","text":"x"})"),
                  DataError);
  CHECK_THROWS_AS(parse_raw_post(R"({"id":"a","user_id":"u","created_at":"2020-13-01T00:00:00Z","text":"x"})"),
                  DataError);
}

TEST_CASE("dedup keeps the earliest post per user and day") {
  SUBCASE("same day") {
    const auto out = dedup_daily({raw("b", "u1", "2020-03-01T17:00:00Z"), raw("a", "u1", "2020-03-01T09:00:00Z")});
    REQUIRE(out.size() == 1);
    CHECK(out[0].id == "a");
  }
  SUBCASE("adjacent days") {
    CHECK(dedup_daily({raw("a", "u1", "2020-03-01T23:59:59Z"), raw("b", "u1", "2020-03-02T00:00:00Z")}).size() == 2);
  }
  SUBCASE("timestamp tie goes to the smallest id") {
    const auto out = dedup_daily({raw("z", "u1", "2020-03-01T09:00:00Z"), raw("m", "u1", "2020-03-01T09:00:00Z")});
    REQUIRE(out.size() == 1);
    CHECK(out[0].id == "m");
  }
  SUBCASE("5 users x 3 posts x 2 days") {
    std::vector<RawPost> posts;
    for (int u = 0; u < 5; ++u)
      for (int d = 1; d <= 2; ++d)
        for (int h = 0; h < 3; ++h) {
          posts.push_back(raw("p" + std::to_string(u) + std::to_string(d) + std::to_string(h), "u" + std::to_string(u),
                              "2020-03-0" + std::to_string(d) + "T1" + std::to_string(h) + ":00:00Z"));
        }
    const auto out = dedup_daily(posts);
    CHECK(out.size() == 10);
    for (const auto& p : out) CHECK(p.id.back() == '0');
  }
  SUBCASE("duplicate id is an error naming it") {
    CHECK_THROWS_WITH_AS(dedup_daily({raw("dup", "u1", "2020-03-01T09:00:00Z"), raw("dup", "u2", "2020-03-02T09:00:00Z")}),
                         doctest::Contains("dup"), DataError);
  }
}

TEST_CASE("dedup shards merge to the single-pass result") {
  std::vector<RawPost> posts;
  for (int i = 0; i < 200; ++i) {
    posts.push_back(raw("id" + std::to_string(1000 + (i * 37) % 200), "u" + std::to_string(i % 7),
                        "2020-03-0" + std::to_string(1 + i % 3) + "T0" + std::to_string(i % 10) + ":00:00Z"));
  }
  DailyDeduplicator a, b;
  for (std::size_t i = 0; i < posts.size(); ++i) (i % 2 ? a : b).add(posts[i]);
  a.merge(std::move(b));
  const auto merged = std::move(a).finish();
  const auto single = dedup_daily(posts);
  REQUIRE(merged.size() == single.size());
  for (std::size_t i = 0; i < merged.size(); ++i) CHECK(merged[i].id == single[i].id);
}

TEST_CASE("cosine similarity") {
  CHECK(cosine_similarity(std::vector<double>{1, 0}, std::vector<double>{0, 1}) == 0.0);
  CHECK(cosine_similarity(std::vector<double>{2, 0}, std::vector<double>{3, 0}) == 1.0);
  CHECK_THROWS_AS(cosine_similarity(std::vector<double>{0, 0}, std::vector<double>{1, 0}), ProviderError);
  CHECK_THROWS_AS(cosine_similarity(std::vector<double>{1}, std::vector<double>{1, 0}), ProviderError);
}

TEST_CASE("semantic filter keeps strictly below the threshold") {
  TableProvider provider({{"The Vaccines music band", kAnchor},
                          {"band post", kAnchor},
                          {"orthogonal", {0, 1, 0, 0}},
                          {"boundary", {7, 1, 5, 5}},  // cosine exactly 7/10
                          {"empty", {0, 0, 0, 0}}});
  const auto result = semantic_filter(
      {record("1", "band post"), record("2", "orthogonal"), record("3", "boundary"), record("4", "empty")}, provider);
  REQUIRE(result.decisions.size() == 4);
  CHECK(result.decisions[0].similarity == 1.0);
  CHECK_FALSE(result.decisions[0].kept);
  CHECK(result.decisions[1].kept);
  CHECK(result.decisions[2].similarity == 0.7);
  CHECK_FALSE(result.decisions[2].kept);
  CHECK(result.decisions[3].kept);
  REQUIRE(result.kept.size() == 2);
  CHECK(result.kept[0].id == "2");
  CHECK(result.kept[1].id == "4");
}

TEST_CASE("semantic filter validates its parameters") {
  TableProvider provider({});
  FilterOptions bad;
  bad.threshold = 0.0;
  CHECK_THROWS_AS(semantic_filter({record("1", "x")}, provider, bad), ParameterError);
  FilterOptions zero_batch;
  zero_batch.batch_size = 0;
  CHECK_THROWS_AS(semantic_filter({record("1", "x")}, provider, zero_batch), ParameterError);
  TableProvider dead_anchor({{"The Vaccines music band", {0, 0, 0, 0}}});
  CHECK_THROWS_AS(semantic_filter({record("1", "x")}, dead_anchor), ProviderError);
}

TEST_CASE("semantic filter resumes from its checkpoint after an outage") {
  TempDir dir;
  std::vector<PostRecord> posts;
  std::map<std::string, std::vector<double>> table{{"The Vaccines music band", kAnchor}};
  for (int i = 0; i < 10; ++i) {
    const std::string text = "text " + std::to_string(i);
    posts.push_back(record(std::to_string(i), text));
    table[text] = i % 3 == 0 ? kAnchor : std::vector<double>{1, 2, 0, 0};
  }
  FilterOptions options;
  options.batch_size = 3;
  options.retry = RetryPolicy{1, std::chrono::milliseconds{0}};
  options.checkpoint = dir / "filter.ckpt";

  TableProvider flaky(table);
  flaky.fail_after = 3;  // anchor + two batches succeed
  CHECK_THROWS_WITH_AS(semantic_filter(posts, flaky, options), doctest::Contains("filter.ckpt"), ProviderError);
  REQUIRE(std::filesystem::exists(options.checkpoint));
  std::size_t logged = 0;
  for_each_line(options.checkpoint, [&](std::size_t, std::string_view) { ++logged; });
  CHECK(logged == 6);

  TableProvider healthy(table);
  const auto resumed = semantic_filter(posts, healthy, options);
  CHECK_FALSE(std::filesystem::exists(options.checkpoint));
  CHECK(healthy.calls == 3);  // anchor + the two remaining batches

  TableProvider fresh(table);
  FilterOptions plain = options;
  plain.checkpoint.clear();
  const auto direct = semantic_filter(posts, fresh, plain);
  REQUIRE(resumed.decisions.size() == direct.decisions.size());
  for (std::size_t i = 0; i < direct.decisions.size(); ++i) {
    CHECK(resumed.decisions[i].post_id == direct.decisions[i].post_id);
    CHECK(resumed.decisions[i].similarity == direct.decisions[i].similarity);
    CHECK(resumed.decisions[i].kept == direct.decisions[i].kept);
  }
  CHECK(resumed.kept.size() == 6);
}

TEST_CASE("hashing embedding provider") {
  HashingEmbeddingProvider p(64);
  const auto v = p.embed({"Band band", "", "band"});
  REQUIRE(v.size() == 3);
  CHECK(v[0].size() == 64);
  double total = 0;
  for (double x : v[0]) total += x;
  CHECK(total == 2.0);
  CHECK(cosine_similarity(v[0], v[2]) == doctest::Approx(1.0));
  for (double x : v[1]) CHECK(x == 0.0);
}

TEST_CASE("http embedding provider") {
  int requests = 0;
  emodyn::testing::MockServer server("/embed", [&](const httplib::Request& req, httplib::Response& res) {
    if (++requests == 1) {
      res.status = 503;
      return;
    }
    const auto body = nlohmann::json::parse(req.body);
    nlohmann::json vectors = nlohmann::json::array();
    for (const auto& t : body.at("texts")) vectors.push_back({static_cast<double>(t.get<std::string>().size()), 1.0});
    res.set_content(nlohmann::json{{"vectors", vectors}}.dump(), "application/json");
  });
  HttpEmbeddingProvider provider(server.url("/embed"), std::chrono::seconds{5});
  CHECK_THROWS_AS(provider.embed({"abc"}), ProviderError);  // the 503
  const auto v = with_retries(RetryPolicy{2, std::chrono::milliseconds{1}}, "embed",
                              [&] { return provider.embed({"abc", "hello"}); });
  REQUIRE(v.size() == 2);
  CHECK(v[0] == std::vector<double>{3.0, 1.0});
  CHECK(v[1] == std::vector<double>{5.0, 1.0});
  CHECK_THROWS_AS(HttpEmbeddingProvider("ftp://host/x"), ConfigError);
}

TEST_CASE("ingest bookkeeping") {
  TempDir dir;
  SUBCASE("empty file") {
    write_text(dir / "empty.jsonl", "");
    IngestOptions options;
    options.filter_enabled = false;
    const auto s = ingest(dir / "empty.jsonl", dir / "out", options, nullptr);
    CHECK(s == CorpusSummary{});
    CHECK(read_file(dir / "out" / kCorpusFile).empty());
  }
  SUBCASE("10 valid lines and 2 malformed") {
    std::string text;
    for (int i = 0; i < 10; ++i) {
      text += post_line("p" + std::to_string(i), "u" + std::to_string(i), "2020-02-0" + std::to_string(i % 9 + 1) + "T10:00:00Z",
                        "post number " + std::to_string(i)) + "\n";
      if (i == 3) text += "{broken\n";
      if (i == 6) text += R"({"id":"x","user_id":"u","created_at":"yesterday","text":"t"})" "\n";
    }
    write_text(dir / "in.jsonl", text);
    HashingEmbeddingProvider provider;
    const auto s = ingest(dir / "in.jsonl", dir / "out", IngestOptions{}, &provider);
    CHECK(s.lines == 12);
    CHECK(s.rejected == 2);
    CHECK(s.raw == 10);
    CHECK(s.after_filter == 10);
    CHECK(s.unique_users == 10);
    std::size_t rejects = 0;
    for_each_line(dir / "out" / kRejectsFile, [&](std::size_t, std::string_view line) {
      ++rejects;
      CHECK(line.find("\"line\"") != std::string_view::npos);
    });
    CHECK(rejects == 2);
  }
}

TEST_CASE("ingest output is independent of the worker count") {
  TempDir dir;
  std::string text;
  for (int i = 0; i < 300; ++i) {
    text += post_line("p" + std::to_string(i), "u" + std::to_string(i % 11),
                      "2020-02-" + std::to_string(10 + i % 5) + "T0" + std::to_string(i % 10) + ":00:00Z",
                      i % 17 == 0 ? "The Vaccines music band live" : "shot number " + std::to_string(i)) + "\n";
  }
  write_text(dir / "in.jsonl", text);
  std::string reference;
  for (std::size_t workers : {1u, 3u, 8u}) {
    IngestOptions options;
    options.workers = workers;
    options.chunk_lines = 16;
    HashingEmbeddingProvider provider;
    const auto out = dir / ("w" + std::to_string(workers));
    ingest(dir / "in.jsonl", out, options, &provider);
    const auto corpus = read_file(out / kCorpusFile);
    if (reference.empty()) reference = corpus;
    CHECK(corpus == reference);
  }
}
