#include "emodyn/corpus/post.hpp"

#include <json.hpp>

#include "emodyn/common/error.hpp"
#include "emodyn/common/format.hpp"
#include "emodyn/lexicon/tokenize.hpp"

namespace emodyn::corpus {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

json parse_object(std::string_view line) {
  json doc = json::parse(line.begin(), line.end(), nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw DataError("malformed JSON");
  if (!doc.is_object()) throw DataError("expected a JSON object");
  return doc;
}

std::string string_field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw DataError(std::string("missing field '") + name + "'");
  if (!it->is_string()) throw DataError(std::string("field '") + name + "' is not a string");
  return it->get<std::string>();
}

Timestamp timestamp_field(const json& doc) {
  const std::string raw = string_field(doc, "created_at");
  auto ts = parse_timestamp(raw);
  if (!ts) throw DataError("unparseable created_at '" + raw + "'");
  return *ts;
}

}  // namespace

RawPost parse_raw_post(std::string_view line) {
  const json doc = parse_object(line);
  RawPost post;
  post.id = string_field(doc, "id");
  if (post.id.empty()) throw DataError("empty id");
  post.user_id = string_field(doc, "user_id");
  post.created_at = timestamp_field(doc);
  post.text = string_field(doc, "text");
  if (auto it = doc.find("is_repost"); it != doc.end()) {
    if (!it->is_boolean()) throw DataError("field 'is_repost' is not a boolean");
    post.is_repost = it->get<bool>();
  }
  return post;
}

PostRecord parse_post_record(std::string_view line) {
  const json doc = parse_object(line);
  PostRecord post;
  post.id = string_field(doc, "id");
  if (post.id.empty()) throw DataError("empty id");
  post.user_id = string_field(doc, "user_id");
  post.created_at = timestamp_field(doc);
  post.text = string_field(doc, "text");
  if (auto it = doc.find("token_count"); it != doc.end() && it->is_number_unsigned()) {
    post.token_count = it->get<std::size_t>();
  } else {
    post.token_count = lexicon::count_tokens(post.text);
  }
  return post;
}

std::string to_jsonl(const PostRecord& post) {
  ordered_json doc;
  doc["id"] = post.id;
  doc["user_id"] = post.user_id;
  doc["created_at"] = format_timestamp(post.created_at);
  doc["text"] = post.text;
  doc["token_count"] = post.token_count;
  return doc.dump(-1, ' ', false, json::error_handler_t::replace);
}

std::string to_jsonl(const FilterDecision& decision) {
  // Similarity goes through format_real so the text round-trips exactly.
  return "{\"post_id\":" + json(decision.post_id).dump() + ",\"similarity\":" + format_real(decision.similarity) +
         ",\"kept\":" + (decision.kept ? "true" : "false") + "}";
}

FilterDecision parse_filter_decision(std::string_view line) {
  const json doc = parse_object(line);
  FilterDecision d;
  d.post_id = string_field(doc, "post_id");
  auto sim = doc.find("similarity");
  auto kept = doc.find("kept");
  if (sim == doc.end() || !sim->is_number() || kept == doc.end() || !kept->is_boolean()) {
    throw DataError("malformed filter decision");
  }
  d.similarity = sim->get<double>();
  d.kept = kept->get<bool>();
  return d;
}

}  // namespace emodyn::corpus
