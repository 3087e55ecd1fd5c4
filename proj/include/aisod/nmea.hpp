#ifndef AISOD_NMEA_HPP
#define AISOD_NMEA_HPP

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aisod/bits.hpp"
#include "aisod/error.hpp"

namespace aisod {

/// Checksum field present but not matching the sentence body.
class ChecksumError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// One framed AIVDM/AIVDO sentence.
struct RawSentence {
  std::string talker;
  int fragment_count = 1;
  int fragment_index = 1;
  std::optional<int> sequence_id;
  std::optional<char> channel;
  std::string payload;
  int fill_bits = 0;
  std::uint8_t checksum = 0;
  std::optional<std::int64_t> receiver_timestamp;
};

namespace detail {

inline int hex_digit(char c) noexcept {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

inline std::string_view trim_trailing(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

struct Framing {
  std::string_view body;  // between '!' and '*'
  std::uint8_t declared = 0;
};

inline Framing split_framing(std::string_view sentence) {
  sentence = trim_trailing(sentence);
  if (sentence.empty() || sentence.front() != '!') {
    throw ParseError("sentence does not begin with '!'");
  }
  if (sentence.size() < 4 || sentence[sentence.size() - 3] != '*') {
    throw ParseError("sentence lacks '*hh' checksum suffix");
  }
  int hi = hex_digit(sentence[sentence.size() - 2]);
  int lo = hex_digit(sentence[sentence.size() - 1]);
  if (hi < 0 || lo < 0) throw ParseError("checksum suffix is not two hex digits");
  return {sentence.substr(1, sentence.size() - 4), static_cast<std::uint8_t>(hi * 16 + lo)};
}

template <typename Int>
bool parse_int(std::string_view s, Int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace detail

inline std::uint8_t nmea_checksum(std::string_view body) noexcept {
  std::uint8_t x = 0;
  for (char c : body) x ^= static_cast<std::uint8_t>(c);
  return x;
}

/// True iff the XOR of the bytes between '!' and '*' equals the trailing hex
/// value. Malformed framing throws ParseError rather than returning false.
inline bool verify_checksum(std::string_view sentence) {
  auto f = detail::split_framing(sentence);
  return nmea_checksum(f.body) == f.declared;
}

/// Parses and validates one sentence. Checksum mismatches throw ChecksumError.
inline RawSentence parse_sentence(std::string_view sentence,
                                  std::optional<std::int64_t> receiver_timestamp = std::nullopt) {
  auto f = detail::split_framing(sentence);
  if (nmea_checksum(f.body) != f.declared) throw ChecksumError("checksum mismatch");

  std::vector<std::string_view> fields;
  std::string_view rest = f.body;
  while (true) {
    auto comma = rest.find(',');
    fields.push_back(rest.substr(0, comma));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (fields.size() != 7) {
    throw ParseError("expected 7 fields, found " + std::to_string(fields.size()));
  }

  RawSentence s;
  s.talker = std::string(fields[0]);
  if (s.talker.size() != 5 || (s.talker.substr(2) != "VDM" && s.talker.substr(2) != "VDO")) {
    throw ParseError("not a VDM/VDO sentence: " + s.talker);
  }
  if (!detail::parse_int(fields[1], s.fragment_count) || s.fragment_count < 1) {
    throw ParseError("bad fragment count");
  }
  if (!detail::parse_int(fields[2], s.fragment_index) || s.fragment_index < 1 ||
      s.fragment_index > s.fragment_count) {
    throw ParseError("bad fragment index");
  }
  if (!fields[3].empty()) {
    int seq = 0;
    if (!detail::parse_int(fields[3], seq) || seq < 0) throw ParseError("bad sequence id");
    s.sequence_id = seq;
  }
  if (fields[4].size() > 1) throw ParseError("bad channel");
  if (fields[4].size() == 1) s.channel = fields[4][0];
  for (std::size_t i = 0; i < fields[5].size(); ++i) {
    if (detail::armor_value(fields[5][i]) < 0) {
      throw ParseError(std::string("invalid payload character '") + fields[5][i] + "' at offset " +
                       std::to_string(i));
    }
  }
  s.payload = std::string(fields[5]);
  if (!detail::parse_int(fields[6], s.fill_bits) || s.fill_bits < 0 || s.fill_bits > 5) {
    throw ParseError("bad fill bits");
  }
  s.checksum = f.declared;
  s.receiver_timestamp = receiver_timestamp;
  return s;
}

/// A line split into its optional receiver timestamp and the sentence proper.
struct TaggedLine {
  std::optional<std::int64_t> timestamp;
  std::string_view sentence;
};

/// Accepts "epoch<TAB or space>!AIVDM...", an NMEA 4.0 tag block
/// "\c:epoch,...*hh\!AIVDM...", or a bare sentence.
inline TaggedLine split_line(std::string_view line) {
  line = detail::trim_trailing(line);
  TaggedLine out;
  if (!line.empty() && line.front() == '\\') {
    auto close = line.find('\\', 1);
    if (close == std::string_view::npos) throw ParseError("unterminated tag block");
    std::string_view tags = line.substr(1, close - 1);
    if (auto star = tags.rfind('*'); star != std::string_view::npos) tags = tags.substr(0, star);
    while (!tags.empty()) {
      auto comma = tags.find(',');
      std::string_view tag = tags.substr(0, comma);
      if (tag.size() > 2 && tag.substr(0, 2) == "c:") {
        std::int64_t t = 0;
        if (detail::parse_int(tag.substr(2), t)) {
          // Some receivers stamp milliseconds.
          out.timestamp = t > 100000000000LL ? t / 1000 : t;
        }
      }
      if (comma == std::string_view::npos) break;
      tags.remove_prefix(comma + 1);
    }
    out.sentence = line.substr(close + 1);
    return out;
  }
  auto bang = line.find('!');
  if (bang != std::string_view::npos && bang > 0) {
    std::string_view prefix = line.substr(0, bang);
    while (!prefix.empty() && (prefix.back() == '\t' || prefix.back() == ' ')) prefix.remove_suffix(1);
    if (auto dot = prefix.find('.'); dot != std::string_view::npos) prefix = prefix.substr(0, dot);
    std::int64_t t = 0;
    if (!detail::parse_int(prefix, t)) throw ParseError("unrecognized line prefix before '!'");
    out.timestamp = t;
  }
  out.sentence = bang == std::string_view::npos ? line : line.substr(bang);
  return out;
}

/// Builds a framed sentence with its checksum.
inline std::string format_sentence(std::string_view talker, int count, int index,
                                   std::optional<int> sequence_id, std::optional<char> channel,
                                   std::string_view payload, int fill_bits) {
  std::string body(talker);
  body += ',' + std::to_string(count) + ',' + std::to_string(index) + ',';
  if (sequence_id) body += std::to_string(*sequence_id);
  body += ',';
  if (channel) body += *channel;
  body += ',';
  body += payload;
  body += ',' + std::to_string(fill_bits);
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::uint8_t cs = nmea_checksum(body);
  std::string out = "!" + body + "*";
  out += kHex[cs >> 4];
  out += kHex[cs & 0xF];
  return out;
}

/// Armors a message and splits it into as many sentences as needed.
inline std::vector<std::string> to_sentences(const BitBuffer& bits, char channel = 'A',
                                             int sequence_id = 0, std::string_view talker = "AIVDM",
                                             std::size_t max_payload_chars = 60) {
  auto [payload, fill] = encode_sixbit(bits);
  std::size_t parts = payload.empty() ? 1 : (payload.size() + max_payload_chars - 1) / max_payload_chars;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < parts; ++i) {
    std::string_view chunk = std::string_view(payload).substr(i * max_payload_chars, max_payload_chars);
    out.push_back(format_sentence(talker, static_cast<int>(parts), static_cast<int>(i + 1),
                                  parts > 1 ? std::optional<int>(sequence_id) : std::nullopt, channel,
                                  chunk, i + 1 == parts ? fill : 0));
  }
  return out;
}

}  // namespace aisod

#endif  // AISOD_NMEA_HPP
