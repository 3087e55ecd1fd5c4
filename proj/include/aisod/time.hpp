#ifndef AISOD_TIME_HPP
#define AISOD_TIME_HPP

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include "aisod/csv.hpp"

namespace aisod {

namespace detail {

// Proleptic Gregorian conversions (H. Hinnant's civil calendar algorithms).
constexpr std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) noexcept {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

struct Civil {
  std::int64_t year;
  unsigned month;
  unsigned day;
};

constexpr Civil civil_from_days(std::int64_t z) noexcept {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp < 10 ? mp + 3 : mp - 9;
  return {y + (m <= 2), m, d};
}

inline std::optional<unsigned> digits(std::string_view s, std::size_t pos, std::size_t n) {
  if (pos + n > s.size()) return std::nullopt;
  unsigned v = 0;
  for (std::size_t i = pos; i < pos + n; ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    v = v * 10 + static_cast<unsigned>(s[i] - '0');
  }
  return v;
}

}  // namespace detail

/// Parses RFC 3339 ("2020-01-08T00:00:00Z", offsets, fractional seconds,
/// space separator; no zone means UTC). Fractions are truncated.
inline std::optional<std::int64_t> parse_rfc3339(std::string_view s) {
  using detail::digits;
  auto y = digits(s, 0, 4), mo = digits(s, 5, 2), d = digits(s, 8, 2);
  if (!y || !mo || !d || s.size() < 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
  if (*mo < 1 || *mo > 12 || *d < 1 || *d > 31) return std::nullopt;
  unsigned hh = 0, mm = 0, ss = 0;
  std::size_t pos = 10;
  if (pos < s.size() && (s[pos] == 'T' || s[pos] == 't' || s[pos] == ' ')) {
    auto h = digits(s, pos + 1, 2), mi = digits(s, pos + 4, 2);
    if (!h || !mi || s[pos + 3] != ':') return std::nullopt;
    hh = *h;
    mm = *mi;
    pos += 6;
    if (pos < s.size() && s[pos] == ':') {
      auto sec = digits(s, pos + 1, 2);
      if (!sec) return std::nullopt;
      ss = *sec;
      pos += 3;
    }
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    }
  }
  if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
  std::int64_t offset = 0;
  if (pos < s.size()) {
    char z = s[pos];
    if (z == 'Z' || z == 'z') {
      ++pos;
    } else if (z == '+' || z == '-') {
      auto oh = digits(s, pos + 1, 2), om = digits(s, pos + 4, 2);
      if (!oh || !om || s[pos + 3] != ':') return std::nullopt;
      offset = (z == '+' ? 1 : -1) * static_cast<std::int64_t>(*oh * 3600 + *om * 60);
      pos += 6;
    }
  }
  if (pos != s.size()) return std::nullopt;
  return detail::days_from_civil(*y, *mo, *d) * 86400 + hh * 3600 + mm * 60 + ss - offset;
}

/// Epoch seconds (integer or decimal, fraction truncated) or RFC 3339.
inline std::optional<std::int64_t> parse_timestamp(std::string_view s) {
  std::string t = trim(s);
  if (t.empty()) return std::nullopt;
  if (auto i = parse_integer<std::int64_t>(t)) return i;
  if (t.find_first_not_of("0123456789.-") == std::string::npos) {
    if (auto d = parse_double(t)) return static_cast<std::int64_t>(*d);
  }
  return parse_rfc3339(t);
}

inline std::string format_rfc3339(std::int64_t epoch) {
  std::int64_t days = epoch >= 0 ? epoch / 86400 : -((-epoch + 86399) / 86400);
  std::int64_t secs = epoch - days * 86400;
  auto c = detail::civil_from_days(days);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                static_cast<long long>(c.year), c.month, c.day, static_cast<long long>(secs / 3600),
                static_cast<long long>(secs / 60 % 60), static_cast<long long>(secs % 60));
  return buf;
}

}  // namespace aisod

#endif  // AISOD_TIME_HPP
