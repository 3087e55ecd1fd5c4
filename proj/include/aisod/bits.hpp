#ifndef AISOD_BITS_HPP
#define AISOD_BITS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aisod/error.hpp"

namespace aisod {

/// Ordered, MSB-first bit sequence as carried by an AIS payload.
class BitBuffer {
 public:
  BitBuffer() = default;

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool bit(std::size_t i) const {
    if (i >= length_) throw TruncationError("bit index " + std::to_string(i) + " past end");
    return (bytes_[i >> 3] >> (7 - (i & 7))) & 1U;
  }

  void push_bit(bool b) {
    if ((length_ & 7) == 0) bytes_.push_back(0);
    if (b) bytes_.back() |= static_cast<std::uint8_t>(1U << (7 - (length_ & 7)));
    ++length_;
  }

  /// Appends the low `width` bits of `value`, most significant first.
  void push_uint(std::uint64_t value, unsigned width) {
    for (unsigned i = width; i-- > 0;) push_bit((value >> i) & 1U);
  }

  /// Appends `value` as a `width`-bit two's complement field.
  void push_int(std::int64_t value, unsigned width) {
    push_uint(static_cast<std::uint64_t>(value), width);
  }

  void append(const BitBuffer& other) {
    for (std::size_t i = 0; i < other.size(); ++i) push_bit(other.bit(i));
  }

  /// Drops trailing bits so that size() == n.
  void truncate(std::size_t n) {
    if (n >= length_) return;
    length_ = n;
    bytes_.resize((n + 7) / 8);
    if (n & 7) bytes_.back() &= static_cast<std::uint8_t>(0xFFU << (8 - (n & 7)));
  }

  std::uint64_t get_uint(std::size_t start, unsigned width) const {
    if (start + width > length_) {
      throw TruncationError("field [" + std::to_string(start) + ", " +
                            std::to_string(start + width) + ") exceeds " +
                            std::to_string(length_) + " bits");
    }
    std::uint64_t v = 0;
    for (std::size_t i = start; i < start + width; ++i) {
      v = (v << 1) | ((bytes_[i >> 3] >> (7 - (i & 7))) & 1U);
    }
    return v;
  }

  std::int64_t get_int(std::size_t start, unsigned width) const {
    std::uint64_t v = get_uint(start, width);
    if (width > 0 && width < 64 && (v >> (width - 1)) & 1U) {
      return static_cast<std::int64_t>(v) - (std::int64_t{1} << width);
    }
    return static_cast<std::int64_t>(v);
  }

  bool has(std::size_t start, unsigned width) const noexcept { return start + width <= length_; }

  std::string to_string() const {
    std::string s;
    s.reserve(length_);
    for (std::size_t i = 0; i < length_; ++i) s.push_back(bit(i) ? '1' : '0');
    return s;
  }

  static BitBuffer from_string(std::string_view s) {
    BitBuffer b;
    for (char c : s) {
      if (c != '0' && c != '1') throw ParseError("bit string contains non-binary character");
      b.push_bit(c == '1');
    }
    return b;
  }

  friend bool operator==(const BitBuffer& a, const BitBuffer& b) {
    return a.length_ == b.length_ && a.bytes_ == b.bytes_;
  }

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t length_ = 0;
};

namespace detail {

/// Armored character to its 6-bit value, or -1 if not in the payload alphabet.
constexpr int armor_value(char c) noexcept {
  // '0'..'W' map to 0..39 and '`'..'w' to 40..63; 'X'..'_' are not armor.
  unsigned char uc = static_cast<unsigned char>(c);
  if (uc < '0' || uc > 'w' || (uc > 'W' && uc < '`')) return -1;
  int v = uc - 48;
  return v > 40 ? v - 8 : v;
}

constexpr char armor_char(unsigned v) noexcept {
  return static_cast<char>(v < 40 ? v + 48 : v + 56);
}

constexpr std::string_view kSixbitText =
    "@ABCDEFGHIJKLMNOPQRSTUVWXYZ[\\]^_ !\"#$%&'()*+,-./0123456789:;<=>?";

}  // namespace detail

inline void append_sixbit(BitBuffer& out, std::string_view payload) {
  for (std::size_t i = 0; i < payload.size(); ++i) {
    int v = detail::armor_value(payload[i]);
    if (v < 0) {
      throw ParseError(std::string("invalid payload character '") + payload[i] + "' at offset " +
                       std::to_string(i));
    }
    out.push_uint(static_cast<unsigned>(v), 6);
  }
}

/// Unpacks an armored payload. Result length is 6 * payload.size() - fill_bits.
inline BitBuffer decode_sixbit(std::string_view payload, int fill_bits) {
  if (fill_bits < 0 || fill_bits > 5) {
    throw ParseError("fill bits out of range: " + std::to_string(fill_bits));
  }
  if (static_cast<std::size_t>(fill_bits) > 6 * payload.size()) {
    throw ParseError("fill bits exceed payload length");
  }
  BitBuffer b;
  append_sixbit(b, payload);
  b.truncate(b.size() - static_cast<std::size_t>(fill_bits));
  return b;
}

/// Armors a bit buffer; the second member is the number of zero fill bits added.
inline std::pair<std::string, int> encode_sixbit(const BitBuffer& bits) {
  std::string payload;
  payload.reserve((bits.size() + 5) / 6);
  std::size_t full = bits.size() / 6;
  for (std::size_t i = 0; i < full; ++i) {
    payload.push_back(detail::armor_char(static_cast<unsigned>(bits.get_uint(i * 6, 6))));
  }
  int fill = 0;
  if (std::size_t rem = bits.size() % 6; rem != 0) {
    fill = static_cast<int>(6 - rem);
    auto v = static_cast<unsigned>(bits.get_uint(full * 6, static_cast<unsigned>(rem)) << fill);
    payload.push_back(detail::armor_char(v));
  }
  return {std::move(payload), fill};
}

/// Decodes up to `nchars` 6-bit text characters starting at `start`; stops at
/// the end of the buffer, so a truncated field yields a shorter string.
inline std::string decode_sixbit_text(const BitBuffer& bits, std::size_t start, std::size_t nchars) {
  std::string out;
  for (std::size_t i = 0; i < nchars && bits.has(start + 6 * i, 6); ++i) {
    out.push_back(detail::kSixbitText[bits.get_uint(start + 6 * i, 6)]);
  }
  return out;
}

/// Appends `text` as exactly `nchars` 6-bit characters, padding with '@'.
inline void push_sixbit_text(BitBuffer& out, std::string_view text, std::size_t nchars) {
  if (text.size() > nchars) throw ContractError("text field longer than " + std::to_string(nchars));
  for (std::size_t i = 0; i < nchars; ++i) {
    char c = i < text.size() ? text[i] : '@';
    auto pos = detail::kSixbitText.find(c);
    if (pos == std::string_view::npos) {
      throw ContractError(std::string("character '") + c + "' not representable in 6-bit text");
    }
    out.push_uint(pos, 6);
  }
}

/// Strips the trailing '@' padding and spaces AIS text fields carry.
inline std::string trim_sixbit_text(std::string_view s) {
  std::size_t end = s.size();
  while (end > 0 && (s[end - 1] == '@' || s[end - 1] == ' ')) --end;
  return std::string(s.substr(0, end));
}

}  // namespace aisod

#endif  // AISOD_BITS_HPP
