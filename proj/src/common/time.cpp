#include "emodyn/common/time.hpp"

#include <charconv>
#include <chrono>

#include <fmt/format.h>

namespace emodyn {

namespace {

using namespace std::chrono;

bool read_int(std::string_view text, std::size_t pos, std::size_t len, int& out) {
  if (pos + len > text.size()) return false;
  for (std::size_t i = pos; i < pos + len; ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + pos + len, out);
  return ec == std::errc{} && ptr == text.data() + pos + len;
}

std::optional<sys_days> read_date(std::string_view text) {
  int y = 0, m = 0, d = 0;
  if (text.size() < 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  if (!read_int(text, 0, 4, y) || !read_int(text, 5, 2, m) || !read_int(text, 8, 2, d)) return std::nullopt;
  const year_month_day ymd{year{y}, month{static_cast<unsigned>(m)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  return sys_days{ymd};
}

}  // namespace

std::string Month::key() const { return fmt::format("{:04d}-{:02d}", year, month); }

Month Month::next() const { return month == 12 ? Month{year + 1, 1} : Month{year, month + 1}; }

std::optional<Timestamp> parse_timestamp(std::string_view text) {
  auto date = read_date(text);
  if (!date || text.size() < 20 || text[10] != 'T' || text[13] != ':' || text[16] != ':') return std::nullopt;
  int hh = 0, mm = 0, ss = 0;
  if (!read_int(text, 11, 2, hh) || !read_int(text, 14, 2, mm) || !read_int(text, 17, 2, ss)) return std::nullopt;
  if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;

  std::size_t pos = 19;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == digits) return std::nullopt;
  }
  if (pos >= text.size()) return std::nullopt;

  std::int64_t offset = 0;
  if (text[pos] == 'Z') {
    ++pos;
  } else if (text[pos] == '+' || text[pos] == '-') {
    int oh = 0, om = 0;
    if (pos + 6 != text.size() || text[pos + 3] != ':' || !read_int(text, pos + 1, 2, oh) ||
        !read_int(text, pos + 4, 2, om) || oh > 23 || om > 59) {
      return std::nullopt;
    }
    offset = (text[pos] == '+' ? 1 : -1) * (oh * 3600 + om * 60);
    pos += 6;
  } else {
    return std::nullopt;
  }
  if (pos != text.size()) return std::nullopt;

  const std::int64_t days = date->time_since_epoch().count();
  return Timestamp{days * 86400 + hh * 3600 + mm * 60 + ss - offset};
}

std::optional<Timestamp> parse_date(std::string_view text) {
  if (text.size() != 10) return std::nullopt;
  auto date = read_date(text);
  if (!date) return std::nullopt;
  return Timestamp{date->time_since_epoch().count() * std::int64_t{86400}};
}

std::optional<Month> parse_month(std::string_view text) {
  int y = 0, m = 0;
  if (text.size() != 7 || text[4] != '-' || !read_int(text, 0, 4, y) || !read_int(text, 5, 2, m) || m < 1 ||
      m > 12) {
    return std::nullopt;
  }
  return Month{y, static_cast<unsigned>(m)};
}

std::int64_t utc_day(Timestamp ts) {
  const std::int64_t s = ts.seconds;
  return (s >= 0 ? s : s - 86399) / 86400;
}

namespace {
year_month_day civil(Timestamp ts) { return year_month_day{sys_days{days{utc_day(ts)}}}; }
}  // namespace

Month month_of(Timestamp ts) {
  const auto ymd = civil(ts);
  return Month{static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month())};
}

Timestamp month_start(Month m) {
  const sys_days d{year_month_day{year{m.year}, month{m.month}, day{1}}};
  return Timestamp{d.time_since_epoch().count() * std::int64_t{86400}};
}

std::string format_timestamp(Timestamp ts) {
  const auto ymd = civil(ts);
  const std::int64_t secs = ts.seconds - utc_day(ts) * 86400;
  return fmt::format("{:04d}-{:02d}-{:02d}T{:02d}:{:02d}:{:02d}Z", static_cast<int>(ymd.year()),
                     static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()), secs / 3600,
                     (secs / 60) % 60, secs % 60);
}

std::string format_date(Timestamp ts) {
  const auto ymd = civil(ts);
  return fmt::format("{:04d}-{:02d}-{:02d}", static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                     static_cast<unsigned>(ymd.day()));
}

}  // namespace emodyn
