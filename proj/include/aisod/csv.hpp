#ifndef AISOD_CSV_HPP
#define AISOD_CSV_HPP

#include <charconv>
#include <cmath>
#include <initializer_list>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aisod/error.hpp"

namespace aisod {

/// Splits one CSV record. Handles double-quoted fields with "" escapes;
/// embedded newlines are not supported.
inline void split_csv_line(std::string_view line, std::vector<std::string>& out) {
  out.clear();
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.find('"') == std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      auto comma = line.find(',', start);
      out.emplace_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
      if (comma == std::string_view::npos) return;
      start = comma + 1;
    }
  }
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  out.push_back(std::move(field));
}

inline std::string csv_escape(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

/// Fixed-point formatting; NaN renders as an empty field.
inline std::string format_fixed(double v, int precision) {
  if (std::isnan(v)) return {};
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
  std::string s(buf, ptr);
  if (s.size() > 1 && s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline std::optional<double> parse_double(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '+')) s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) return std::nullopt;
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

template <typename Int>
std::optional<Int> parse_integer(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) return std::nullopt;
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

/// Header row with name lookup.
class CsvHeader {
 public:
  CsvHeader() = default;
  explicit CsvHeader(std::vector<std::string> names) : names_(std::move(names)) {
    if (!names_.empty() && names_[0].rfind("\xEF\xBB\xBF", 0) == 0) names_[0].erase(0, 3);
    for (auto& n : names_) n = trim(n);
    for (std::size_t i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);
  }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// First column matching any of the candidates.
  std::optional<std::size_t> find_any(const std::vector<std::string>& candidates) const {
    for (const auto& c : candidates) {
      if (auto i = find(c)) return i;
    }
    return std::nullopt;
  }

  /// As find_any, but a miss is a configuration error listing what exists.
  std::size_t require(const std::vector<std::string>& candidates, std::string_view role) const {
    if (auto i = find_any(candidates)) return *i;
    std::string msg = "missing required column for " + std::string(role) + " (tried";
    for (const auto& c : candidates) msg += " '" + c + "'";
    msg += "); available headers:";
    for (const auto& n : names_) msg += " '" + n + "'";
    throw ConfigError(msg);
  }

  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Line-oriented CSV reader; the first non-empty line is the header.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {
    std::string line;
    while (std::getline(in_, line)) {
      if (trim(line).empty()) continue;
      std::vector<std::string> names;
      split_csv_line(line, names);
      header_ = CsvHeader(std::move(names));
      return;
    }
  }

  const CsvHeader& header() const noexcept { return header_; }
  bool has_header() const noexcept { return !header_.names().empty(); }

  /// Next non-empty record; false at end of input.
  bool next(std::vector<std::string>& row) {
    while (std::getline(in_, line_)) {
      if (!line_.empty() && line_.back() == '\r') line_.pop_back();
      if (line_.empty()) continue;
      split_csv_line(line_, row);
      return true;
    }
    return false;
  }

 private:
  std::istream& in_;
  CsvHeader header_;
  std::string line_;
};

}  // namespace aisod

#endif  // AISOD_CSV_HPP
