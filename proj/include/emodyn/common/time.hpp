#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace emodyn {

/// UTC instant at second precision.
struct Timestamp {
  std::int64_t seconds = 0;  // since 1970-01-01T00:00:00Z

  auto operator<=>(const Timestamp&) const = default;
};

/// Calendar month, ordered chronologically.
struct Month {
  int year = 1970;
  unsigned month = 1;  // 1..12

  auto operator<=>(const Month&) const = default;

  std::string key() const;  // "YYYY-MM"
  Month next() const;
};

/// Parses ISO-8601 `YYYY-MM-DDTHH:MM:SS[.fff](Z|+HH:MM|-HH:MM)`; fractional
/// seconds are truncated and offsets folded into UTC.
std::optional<Timestamp> parse_timestamp(std::string_view text);

/// `YYYY-MM-DD`, interpreted as midnight UTC.
std::optional<Timestamp> parse_date(std::string_view text);

std::optional<Month> parse_month(std::string_view text);

/// `YYYY-MM-DDTHH:MM:SSZ`
std::string format_timestamp(Timestamp ts);
std::string format_date(Timestamp ts);

/// Days since epoch of the UTC calendar day containing `ts`.
std::int64_t utc_day(Timestamp ts);

Month month_of(Timestamp ts);

/// First instant of the month.
Timestamp month_start(Month m);

}  // namespace emodyn
