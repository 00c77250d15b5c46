#include "emodyn/corpus/clean.hpp"

#include <algorithm>
#include <array>

#include "emodyn/simd/kernels.hpp"

namespace emodyn::corpus {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }

bool is_alnum(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'); }

bool is_handle_char(char c) { return is_alnum(c) || c == '_'; }

bool is_unicode_space(char32_t cp) {
  return cp == 0x00A0 || cp == 0x1680 || (cp >= 0x2000 && cp <= 0x200A) || cp == 0x2028 || cp == 0x2029 ||
         cp == 0x202F || cp == 0x205F || cp == 0x3000 || cp == 0x0085;
}

// Drops every byte >= 0x80. Well-formed multi-byte sequences that encode a
// Unicode space become a single ASCII space; ASCII controls become spaces.
std::string strip_non_ascii(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  std::size_t i = 0;
  while (i < in.size()) {
    const std::size_t run = simd::first_non_ascii(in.substr(i));
    for (std::size_t k = i; k < i + run; ++k) {
      const char c = in[k];
      out.push_back((static_cast<unsigned char>(c) < 0x20 || c == 0x7F) ? ' ' : c);
    }
    i += run;
    if (i >= in.size()) break;

    const auto lead = static_cast<unsigned char>(in[i]);
    const std::size_t len = lead >= 0xF8 ? 1 : lead >= 0xF0 ? 4 : lead >= 0xE0 ? 3 : lead >= 0xC0 ? 2 : 1;
    if (len > 1 && len <= 4 && i + len <= in.size()) {
      char32_t cp = lead & (0x7F >> len);
      bool ok = true;
      for (std::size_t k = 1; k < len; ++k) {
        const auto cont = static_cast<unsigned char>(in[i + k]);
        if ((cont & 0xC0) != 0x80) {
          ok = false;
          break;
        }
        cp = (cp << 6) | (cont & 0x3F);
      }
      if (ok) {
        if (is_unicode_space(cp)) out.push_back(' ');
        i += len;
        continue;
      }
    }
    ++i;  // stray or truncated byte
  }
  return out;
}

bool starts_with_ci(std::string_view s, std::size_t pos, std::string_view prefix) {
  if (pos + prefix.size() > s.size()) return false;
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    char c = s[pos + k];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c | 0x20);
    if (c != prefix[k]) return false;
  }
  return true;
}

bool url_at(std::string_view s, std::size_t pos) {
  return starts_with_ci(s, pos, "http://") || starts_with_ci(s, pos, "https://") || starts_with_ci(s, pos, "www.");
}

// URLs run to the next whitespace; mentions are '@' + handle not glued to a
// preceding alphanumeric (keeps e-mail addresses). Both become a space so the
// removal never joins neighbouring text into a new URL or mention.
std::string strip_urls_and_mentions(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (url_at(s, i)) {
      while (i < s.size() && !is_space(s[i])) ++i;
      out.push_back(' ');
      continue;
    }
    if (s[i] == '@' && i + 1 < s.size() && is_handle_char(s[i + 1]) && (out.empty() || !is_alnum(out.back()))) {
      ++i;
      while (i < s.size() && is_handle_char(s[i])) ++i;
      out.push_back(' ');
      continue;
    }
    out.push_back(s[i]);
    ++i;
  }
  return out;
}

}  // namespace

std::vector<std::string> default_emoticons() {
  return {":)",  ":-)", ":(",  ":-(", ":D",  ":-D", ";)",  ";-)", ":P",  ":-P", ":p",  ":-p",  ":'(",
          ":/",  ":-/", ":|",  ":-|", ":o",  ":O",  ":-O", "<3",  "</3", "=)",  "=(",  ":]",   ":[",
          ";D",  "xD",  "XD",  ":*",  ":-*", "^_^", "-_-", "o_O", "O_o", "T_T", ":')", ":-))", ":-(("};
}

std::string clean_text(std::string_view raw, const CleanOptions& options) {
  const std::string ascii = strip_non_ascii(raw);
  const std::string stripped = strip_urls_and_mentions(ascii);

  std::string out;
  out.reserve(stripped.size());
  std::size_t i = 0;
  while (i < stripped.size()) {
    while (i < stripped.size() && is_space(stripped[i])) ++i;
    const std::size_t start = i;
    while (i < stripped.size() && !is_space(stripped[i])) ++i;
    if (start == i) break;
    const std::string_view token(stripped.data() + start, i - start);
    if (std::find(options.emoticons.begin(), options.emoticons.end(), token) != options.emoticons.end()) continue;
    if (!out.empty()) out.push_back(' ');
    out.append(token);
  }
  return out;
}

bool is_repost(const RawPost& post) { return post.is_repost || post.text.starts_with("RT @"); }

}  // namespace emodyn::corpus
