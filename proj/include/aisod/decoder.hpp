#ifndef AISOD_DECODER_HPP
#define AISOD_DECODER_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "aisod/bits.hpp"
#include "aisod/csv.hpp"
#include "aisod/error.hpp"
#include "aisod/messages.hpp"
#include "aisod/nmea.hpp"

namespace aisod {

/// Concatenates fragment payloads in index order and unpacks them. Fill bits
/// come from the final fragment only.
inline BitBuffer assemble_multipart(std::vector<RawSentence> fragments) {
  if (fragments.empty()) throw ReassemblyError("no fragments");
  const int count = fragments.front().fragment_count;
  for (const auto& f : fragments) {
    if (f.fragment_count != count || f.sequence_id != fragments.front().sequence_id) {
      throw ReassemblyError("fragments disagree on count or sequence id");
    }
  }
  std::sort(fragments.begin(), fragments.end(),
            [](const RawSentence& a, const RawSentence& b) { return a.fragment_index < b.fragment_index; });
  for (std::size_t i = 1; i < fragments.size(); ++i) {
    if (fragments[i].fragment_index == fragments[i - 1].fragment_index) {
      throw ReassemblyError("duplicate fragment index " + std::to_string(fragments[i].fragment_index));
    }
  }
  if (static_cast<int>(fragments.size()) != count) {
    throw ReassemblyError("incomplete message: " + std::to_string(fragments.size()) + " of " +
                          std::to_string(count) + " fragments");
  }
  BitBuffer bits;
  for (const auto& f : fragments) append_sixbit(bits, f.payload);
  int fill = fragments.back().fill_bits;
  if (static_cast<std::size_t>(fill) > bits.size()) throw ParseError("fill bits exceed payload length");
  bits.truncate(bits.size() - static_cast<std::size_t>(fill));
  return bits;
}

/// Bounds on how long a partial multipart message waits for its fragments.
struct ReassemblyWindow {
  std::size_t max_sentences = 64;
  std::int64_t max_seconds = 60;
};

struct DecodeStats {
  std::size_t lines = 0;
  std::size_t sentences = 0;
  std::size_t messages = 0;
  std::size_t checksum_failures = 0;
  std::size_t parse_errors = 0;
  std::size_t truncated = 0;
  std::size_t incomplete_messages = 0;
  std::size_t duplicate_fragments = 0;
  std::size_t position_reports = 0;
  std::size_t static_reports = 0;
  std::size_t position_unavailable = 0;
  std::size_t missing_timestamp = 0;
  std::map<int, std::size_t> unsupported_types;

  std::size_t unsupported() const {
    std::size_t n = 0;
    for (const auto& [t, c] : unsupported_types) n += c;
    return n;
  }
};

inline void write_stats(std::ostream& os, const DecodeStats& s) {
  os << "lines=" << s.lines << '\n'
     << "sentences=" << s.sentences << '\n'
     << "messages=" << s.messages << '\n'
     << "position_reports=" << s.position_reports << '\n'
     << "static_reports=" << s.static_reports << '\n'
     << "position_unavailable=" << s.position_unavailable << '\n'
     << "missing_timestamp=" << s.missing_timestamp << '\n'
     << "checksum_failures=" << s.checksum_failures << '\n'
     << "parse_errors=" << s.parse_errors << '\n'
     << "truncated=" << s.truncated << '\n'
     << "incomplete_messages=" << s.incomplete_messages << '\n'
     << "duplicate_fragments=" << s.duplicate_fragments << '\n'
     << "unsupported_types=" << s.unsupported() << '\n';
  for (const auto& [t, c] : s.unsupported_types) os << "unsupported_type." << t << '=' << c << '\n';
}

struct DecodedBatch {
  std::vector<PositionReading> readings;
  std::vector<VesselRecord> vessels;
};

/// Incremental decoder over a sentence stream. Holds only the pending
/// multipart fragments; bad input is counted, never thrown.
class StreamDecoder {
 public:
  explicit StreamDecoder(ReassemblyWindow window = {}) : window_(window) {}

  void feed_line(std::string_view line, DecodedBatch& out) {
    ++stats_.lines;
    if (line.find_first_not_of(" \t\r\n") == std::string_view::npos) return;
    RawSentence s;
    try {
      auto tagged = split_line(line);
      s = parse_sentence(tagged.sentence, tagged.timestamp);
    } catch (const ChecksumError&) {
      ++stats_.checksum_failures;
      return;
    } catch (const ParseError&) {
      ++stats_.parse_errors;
      return;
    }
    feed_sentence(std::move(s), out);
  }

  void feed_sentence(RawSentence s, DecodedBatch& out) {
    ++stats_.sentences;
    expire(s.receiver_timestamp);
    if (s.fragment_count == 1) {
      std::int64_t ts = s.receiver_timestamp.value_or(kNoTimestamp);
      try {
        handle_message(decode_sixbit(s.payload, s.fill_bits), ts, out);
      } catch (const ParseError&) {
        ++stats_.parse_errors;
      }
      return;
    }
    Key key{s.sequence_id.value_or(-1), s.channel.value_or('\0'), s.fragment_count};
    auto it = pending_.find(key);
    if (it != pending_.end()) {
      bool dup = std::any_of(it->second.fragments.begin(), it->second.fragments.end(),
                             [&](const RawSentence& f) { return f.fragment_index == s.fragment_index; });
      if (dup) {
        ++stats_.duplicate_fragments;
        pending_.erase(it);
        it = pending_.end();
      }
    }
    if (it == pending_.end()) {
      it = pending_.emplace(key, Pending{{}, stats_.sentences, s.receiver_timestamp}).first;
    }
    it->second.fragments.push_back(std::move(s));
    if (static_cast<int>(it->second.fragments.size()) == std::get<2>(key)) {
      std::int64_t ts = kNoTimestamp;
      for (const auto& f : it->second.fragments) {
        if (f.receiver_timestamp) {
          ts = ts == kNoTimestamp ? *f.receiver_timestamp : std::min(ts, *f.receiver_timestamp);
        }
      }
      try {
        handle_message(assemble_multipart(std::move(it->second.fragments)), ts, out);
      } catch (const ReassemblyError&) {
        ++stats_.incomplete_messages;
      } catch (const ParseError&) {
        ++stats_.parse_errors;
      }
      pending_.erase(it);
    }
  }

  /// Flushes the reassembly buffer; anything left is an incomplete message.
  void finish() {
    stats_.incomplete_messages += pending_.size();
    pending_.clear();
  }

  std::size_t pending() const noexcept { return pending_.size(); }
  const DecodeStats& stats() const noexcept { return stats_; }

 private:
  using Key = std::tuple<int, char, int>;
  struct Pending {
    std::vector<RawSentence> fragments;
    std::size_t first_sentence = 0;
    std::optional<std::int64_t> first_timestamp;
  };

  void expire(std::optional<std::int64_t> now) {
    for (auto it = pending_.begin(); it != pending_.end();) {
      bool stale = stats_.sentences - it->second.first_sentence > window_.max_sentences;
      if (now && it->second.first_timestamp && *now - *it->second.first_timestamp > window_.max_seconds) {
        stale = true;
      }
      if (stale) {
        ++stats_.incomplete_messages;
        it = pending_.erase(it);
      } else {
        ++it;
      }
    }
  }

  void handle_message(const BitBuffer& bits, std::int64_t ts, DecodedBatch& out) {
    ++stats_.messages;
    unsigned type = 0;
    try {
      type = message_type(bits);
      switch (type) {
        case 1:
        case 2:
        case 3:
        case 18:
          push_position(decode_position_report(bits, ts), out);
          break;
        case 19: {
          auto m = ClassBExtended::decode(bits);
          push_position(decode_position_report(bits, ts), out);
          out.vessels.push_back(to_vessel_record(m, ts));
          ++stats_.static_reports;
          break;
        }
        case 5:
          out.vessels.push_back(decode_static_report(bits, ts));
          ++stats_.static_reports;
          break;
        default:
          ++stats_.unsupported_types[static_cast<int>(type)];
          break;
      }
    } catch (const TruncationError&) {
      ++stats_.truncated;
    }
  }

  void push_position(PositionReading r, DecodedBatch& out) {
    ++stats_.position_reports;
    if (!r.position_available()) ++stats_.position_unavailable;
    if (!r.has_timestamp()) ++stats_.missing_timestamp;
    out.readings.push_back(r);
  }

  ReassemblyWindow window_;
  DecodeStats stats_;
  std::map<Key, Pending> pending_;
};

/// Decodes a whole line-oriented stream.
inline DecodedBatch decode_stream(std::istream& in, DecodeStats* stats = nullptr,
                                  ReassemblyWindow window = {}) {
  StreamDecoder dec(window);
  DecodedBatch out;
  std::string line;
  while (std::getline(in, line)) dec.feed_line(line, out);
  dec.finish();
  if (stats) *stats = dec.stats();
  return out;
}

inline constexpr std::string_view kReadingsCsvHeader = "mmsi,timestamp,lat,lon,sog_knots,cog_deg,msg_type";

inline void write_reading_row(std::ostream& os, const PositionReading& r) {
  os << r.mmsi << ',';
  if (r.has_timestamp()) os << r.timestamp;
  os << ',' << format_fixed(r.latitude, 6) << ',' << format_fixed(r.longitude, 6) << ','
     << format_fixed(r.sog_knots, 1) << ',' << format_fixed(r.cog_deg, 1) << ',' << r.message_type
     << '\n';
}

inline void write_readings_csv(std::ostream& os, const std::vector<PositionReading>& readings) {
  os << kReadingsCsvHeader << '\n';
  for (const auto& r : readings) write_reading_row(os, r);
}

inline constexpr std::string_view kVesselsCsvHeader =
    "mmsi,timestamp,vessel_type,name,callsign,imo,destination,flag,length_m,beam_m,msg_type";

inline void write_vessels_csv(std::ostream& os, const std::vector<VesselRecord>& vessels) {
  os << kVesselsCsvHeader << '\n';
  for (const auto& v : vessels) {
    os << v.mmsi << ',';
    if (v.timestamp != kNoTimestamp) os << v.timestamp;
    os << ',' << v.vessel_type_code << ',' << csv_escape(v.name) << ',' << csv_escape(v.callsign)
       << ',';
    if (v.imo) os << *v.imo;
    os << ',' << csv_escape(v.destination) << ',' << v.flag << ',';
    if (v.dimensions) os << v.dimensions->length_m() << ',' << v.dimensions->beam_m();
    else os << ',';
    os << ',' << v.message_type << '\n';
  }
}

}  // namespace aisod

#endif  // AISOD_DECODER_HPP
