#ifndef AISOD_MESSAGES_HPP
#define AISOD_MESSAGES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>

#include "aisod/bits.hpp"
#include "aisod/error.hpp"
#include "aisod/mid.hpp"

namespace aisod {

// Raw message layouts (ITU-R M.1371). Every field is kept so that
// decode followed by encode reproduces the original bits exactly.

namespace detail {

/// Sequential field reader. Fields that end before `required` bits must be
/// present; later fields read as zero and set `partial` when the buffer ends.
class FieldReader {
 public:
  FieldReader(const BitBuffer& bits, std::size_t required) : bits_(bits), required_(required) {
    if (bits.size() < required) {
      throw TruncationError("message needs at least " + std::to_string(required) + " bits, got " +
                            std::to_string(bits.size()));
    }
  }

  std::uint64_t u(unsigned width) {
    std::size_t start = advance(width);
    return bits_.has(start, width) ? bits_.get_uint(start, width) : 0;
  }

  std::int64_t s(unsigned width) {
    std::size_t start = advance(width);
    return bits_.has(start, width) ? bits_.get_int(start, width) : 0;
  }

  std::string text(std::size_t nchars) {
    std::size_t start = pos_;
    advance(static_cast<unsigned>(6 * nchars));
    return decode_sixbit_text(bits_, start, nchars);
  }

  bool partial() const noexcept { return partial_; }

 private:
  std::size_t advance(unsigned width) {
    std::size_t start = pos_;
    pos_ += width;
    if (pos_ > bits_.size()) partial_ = true;
    return start;
  }

  const BitBuffer& bits_;
  std::size_t required_;
  std::size_t pos_ = 0;
  bool partial_ = false;
};

}  // namespace detail

/// Message types 1, 2 and 3.
struct ClassAPosition {
  static constexpr std::size_t kBits = 168;
  static constexpr std::size_t kRequiredBits = 143;  // through the timestamp field

  unsigned type = 1;
  unsigned repeat = 0;
  std::uint32_t mmsi = 0;
  unsigned nav_status = 15;
  int rot = -128;
  unsigned sog = 1023;
  bool accuracy = false;
  std::int32_t lon = 108600000;
  std::int32_t lat = 54600000;
  unsigned cog = 3600;
  unsigned heading = 511;
  unsigned second = 60;
  unsigned maneuver = 0;
  unsigned spare = 0;
  bool raim = false;
  std::uint32_t radio = 0;
  bool partial = false;

  static ClassAPosition decode(const BitBuffer& b) {
    detail::FieldReader r(b, kRequiredBits);
    ClassAPosition m;
    m.type = static_cast<unsigned>(r.u(6));
    m.repeat = static_cast<unsigned>(r.u(2));
    m.mmsi = static_cast<std::uint32_t>(r.u(30));
    m.nav_status = static_cast<unsigned>(r.u(4));
    m.rot = static_cast<int>(r.s(8));
    m.sog = static_cast<unsigned>(r.u(10));
    m.accuracy = r.u(1);
    m.lon = static_cast<std::int32_t>(r.s(28));
    m.lat = static_cast<std::int32_t>(r.s(27));
    m.cog = static_cast<unsigned>(r.u(12));
    m.heading = static_cast<unsigned>(r.u(9));
    m.second = static_cast<unsigned>(r.u(6));
    m.maneuver = static_cast<unsigned>(r.u(2));
    m.spare = static_cast<unsigned>(r.u(3));
    m.raim = r.u(1);
    m.radio = static_cast<std::uint32_t>(r.u(19));
    m.partial = r.partial();
    return m;
  }

  BitBuffer encode() const {
    BitBuffer b;
    b.push_uint(type, 6);
    b.push_uint(repeat, 2);
    b.push_uint(mmsi, 30);
    b.push_uint(nav_status, 4);
    b.push_int(rot, 8);
    b.push_uint(sog, 10);
    b.push_uint(accuracy, 1);
    b.push_int(lon, 28);
    b.push_int(lat, 27);
    b.push_uint(cog, 12);
    b.push_uint(heading, 9);
    b.push_uint(second, 6);
    b.push_uint(maneuver, 2);
    b.push_uint(spare, 3);
    b.push_uint(raim, 1);
    b.push_uint(radio, 19);
    return b;
  }
};

/// Message type 18, the class B position report.
struct ClassBPosition {
  static constexpr std::size_t kBits = 168;
  static constexpr std::size_t kRequiredBits = 139;

  unsigned type = 18;
  unsigned repeat = 0;
  std::uint32_t mmsi = 0;
  unsigned reserved = 0;
  unsigned sog = 1023;
  bool accuracy = false;
  std::int32_t lon = 108600000;
  std::int32_t lat = 54600000;
  unsigned cog = 3600;
  unsigned heading = 511;
  unsigned second = 60;
  unsigned regional = 0;
  bool cs_unit = false;
  bool display = false;
  bool dsc = false;
  bool band = false;
  bool msg22 = false;
  bool assigned = false;
  bool raim = false;
  std::uint32_t radio = 0;
  bool partial = false;

  static ClassBPosition decode(const BitBuffer& b) {
    detail::FieldReader r(b, kRequiredBits);
    ClassBPosition m;
    m.type = static_cast<unsigned>(r.u(6));
    m.repeat = static_cast<unsigned>(r.u(2));
    m.mmsi = static_cast<std::uint32_t>(r.u(30));
    m.reserved = static_cast<unsigned>(r.u(8));
    m.sog = static_cast<unsigned>(r.u(10));
    m.accuracy = r.u(1);
    m.lon = static_cast<std::int32_t>(r.s(28));
    m.lat = static_cast<std::int32_t>(r.s(27));
    m.cog = static_cast<unsigned>(r.u(12));
    m.heading = static_cast<unsigned>(r.u(9));
    m.second = static_cast<unsigned>(r.u(6));
    m.regional = static_cast<unsigned>(r.u(2));
    m.cs_unit = r.u(1);
    m.display = r.u(1);
    m.dsc = r.u(1);
    m.band = r.u(1);
    m.msg22 = r.u(1);
    m.assigned = r.u(1);
    m.raim = r.u(1);
    m.radio = static_cast<std::uint32_t>(r.u(20));
    m.partial = r.partial();
    return m;
  }

  BitBuffer encode() const {
    BitBuffer b;
    b.push_uint(type, 6);
    b.push_uint(repeat, 2);
    b.push_uint(mmsi, 30);
    b.push_uint(reserved, 8);
    b.push_uint(sog, 10);
    b.push_uint(accuracy, 1);
    b.push_int(lon, 28);
    b.push_int(lat, 27);
    b.push_uint(cog, 12);
    b.push_uint(heading, 9);
    b.push_uint(second, 6);
    b.push_uint(regional, 2);
    b.push_uint(cs_unit, 1);
    b.push_uint(display, 1);
    b.push_uint(dsc, 1);
    b.push_uint(band, 1);
    b.push_uint(msg22, 1);
    b.push_uint(assigned, 1);
    b.push_uint(raim, 1);
    b.push_uint(radio, 20);
    return b;
  }
};

/// Ship dimensions relative to the position reference point, in meters.
struct ShipDimensions {
  unsigned to_bow = 0;
  unsigned to_stern = 0;
  unsigned to_port = 0;
  unsigned to_starboard = 0;

  unsigned length_m() const noexcept { return to_bow + to_stern; }
  unsigned beam_m() const noexcept { return to_port + to_starboard; }
  bool available() const noexcept { return length_m() > 0 || beam_m() > 0; }
  friend bool operator==(const ShipDimensions&, const ShipDimensions&) = default;
};

/// Message type 19, the extended class B report (position plus static data).
struct ClassBExtended {
  static constexpr std::size_t kBits = 312;
  static constexpr std::size_t kRequiredBits = 139;

  unsigned type = 19;
  unsigned repeat = 0;
  std::uint32_t mmsi = 0;
  unsigned reserved = 0;
  unsigned sog = 1023;
  bool accuracy = false;
  std::int32_t lon = 108600000;
  std::int32_t lat = 54600000;
  unsigned cog = 3600;
  unsigned heading = 511;
  unsigned second = 60;
  unsigned regional = 0;
  std::string name = std::string(20, '@');
  unsigned ship_type = 0;
  ShipDimensions dims;
  unsigned epfd = 0;
  bool raim = false;
  bool dte = true;
  bool assigned = false;
  unsigned spare = 0;
  bool partial = false;

  static ClassBExtended decode(const BitBuffer& b) {
    detail::FieldReader r(b, kRequiredBits);
    ClassBExtended m;
    m.type = static_cast<unsigned>(r.u(6));
    m.repeat = static_cast<unsigned>(r.u(2));
    m.mmsi = static_cast<std::uint32_t>(r.u(30));
    m.reserved = static_cast<unsigned>(r.u(8));
    m.sog = static_cast<unsigned>(r.u(10));
    m.accuracy = r.u(1);
    m.lon = static_cast<std::int32_t>(r.s(28));
    m.lat = static_cast<std::int32_t>(r.s(27));
    m.cog = static_cast<unsigned>(r.u(12));
    m.heading = static_cast<unsigned>(r.u(9));
    m.second = static_cast<unsigned>(r.u(6));
    m.regional = static_cast<unsigned>(r.u(4));
    m.name = r.text(20);
    m.ship_type = static_cast<unsigned>(r.u(8));
    m.dims.to_bow = static_cast<unsigned>(r.u(9));
    m.dims.to_stern = static_cast<unsigned>(r.u(9));
    m.dims.to_port = static_cast<unsigned>(r.u(6));
    m.dims.to_starboard = static_cast<unsigned>(r.u(6));
    m.epfd = static_cast<unsigned>(r.u(4));
    m.raim = r.u(1);
    m.dte = r.u(1);
    m.assigned = r.u(1);
    m.spare = static_cast<unsigned>(r.u(4));
    m.partial = r.partial();
    return m;
  }

  BitBuffer encode() const {
    BitBuffer b;
    b.push_uint(type, 6);
    b.push_uint(repeat, 2);
    b.push_uint(mmsi, 30);
    b.push_uint(reserved, 8);
    b.push_uint(sog, 10);
    b.push_uint(accuracy, 1);
    b.push_int(lon, 28);
    b.push_int(lat, 27);
    b.push_uint(cog, 12);
    b.push_uint(heading, 9);
    b.push_uint(second, 6);
    b.push_uint(regional, 4);
    push_sixbit_text(b, name, 20);
    b.push_uint(ship_type, 8);
    b.push_uint(dims.to_bow, 9);
    b.push_uint(dims.to_stern, 9);
    b.push_uint(dims.to_port, 6);
    b.push_uint(dims.to_starboard, 6);
    b.push_uint(epfd, 4);
    b.push_uint(raim, 1);
    b.push_uint(dte, 1);
    b.push_uint(assigned, 1);
    b.push_uint(spare, 4);
    return b;
  }
};

/// Message type 5, static and voyage related data.
struct StaticVoyageData {
  static constexpr std::size_t kBits = 424;
  static constexpr std::size_t kRequiredBits = 240;  // through the ship type field

  unsigned type = 5;
  unsigned repeat = 0;
  std::uint32_t mmsi = 0;
  unsigned ais_version = 0;
  std::uint32_t imo = 0;
  std::string callsign = std::string(7, '@');
  std::string name = std::string(20, '@');
  unsigned ship_type = 0;
  ShipDimensions dims;
  unsigned epfd = 0;
  unsigned month = 0;
  unsigned day = 0;
  unsigned hour = 24;
  unsigned minute = 60;
  unsigned draught = 0;
  std::string destination = std::string(20, '@');
  bool dte = true;
  bool spare = false;
  bool partial = false;

  static StaticVoyageData decode(const BitBuffer& b) {
    detail::FieldReader r(b, kRequiredBits);
    StaticVoyageData m;
    m.type = static_cast<unsigned>(r.u(6));
    m.repeat = static_cast<unsigned>(r.u(2));
    m.mmsi = static_cast<std::uint32_t>(r.u(30));
    m.ais_version = static_cast<unsigned>(r.u(2));
    m.imo = static_cast<std::uint32_t>(r.u(30));
    m.callsign = r.text(7);
    m.name = r.text(20);
    m.ship_type = static_cast<unsigned>(r.u(8));
    m.dims.to_bow = static_cast<unsigned>(r.u(9));
    m.dims.to_stern = static_cast<unsigned>(r.u(9));
    m.dims.to_port = static_cast<unsigned>(r.u(6));
    m.dims.to_starboard = static_cast<unsigned>(r.u(6));
    m.epfd = static_cast<unsigned>(r.u(4));
    m.month = static_cast<unsigned>(r.u(4));
    m.day = static_cast<unsigned>(r.u(5));
    m.hour = static_cast<unsigned>(r.u(5));
    m.minute = static_cast<unsigned>(r.u(6));
    m.draught = static_cast<unsigned>(r.u(8));
    m.destination = r.text(20);
    m.dte = r.u(1);
    m.spare = r.u(1);
    m.partial = r.partial();
    return m;
  }

  BitBuffer encode() const {
    BitBuffer b;
    b.push_uint(type, 6);
    b.push_uint(repeat, 2);
    b.push_uint(mmsi, 30);
    b.push_uint(ais_version, 2);
    b.push_uint(imo, 30);
    push_sixbit_text(b, callsign, 7);
    push_sixbit_text(b, name, 20);
    b.push_uint(ship_type, 8);
    b.push_uint(dims.to_bow, 9);
    b.push_uint(dims.to_stern, 9);
    b.push_uint(dims.to_port, 6);
    b.push_uint(dims.to_starboard, 6);
    b.push_uint(epfd, 4);
    b.push_uint(month, 4);
    b.push_uint(day, 5);
    b.push_uint(hour, 5);
    b.push_uint(minute, 6);
    b.push_uint(draught, 8);
    push_sixbit_text(b, destination, 20);
    b.push_uint(dte, 1);
    b.push_uint(spare, 1);
    return b;
  }
};

using AisMessage = std::variant<ClassAPosition, ClassBPosition, ClassBExtended, StaticVoyageData>;

inline unsigned message_type(const BitBuffer& bits) {
  if (!bits.has(0, 6)) throw TruncationError("buffer too short for message type");
  return static_cast<unsigned>(bits.get_uint(0, 6));
}

/// Decodes any supported message; other types throw UnsupportedTypeError.
inline AisMessage decode_message(const BitBuffer& bits) {
  switch (unsigned t = message_type(bits)) {
    case 1:
    case 2:
    case 3:
      return ClassAPosition::decode(bits);
    case 18:
      return ClassBPosition::decode(bits);
    case 19:
      return ClassBExtended::decode(bits);
    case 5:
      return StaticVoyageData::decode(bits);
    default:
      throw UnsupportedTypeError(static_cast<int>(t));
  }
}

inline BitBuffer encode_message(const AisMessage& m) {
  return std::visit([](const auto& msg) { return msg.encode(); }, m);
}

// ---------------------------------------------------------------------------
// Domain records

using Mmsi = std::uint32_t;

inline constexpr std::int64_t kNoTimestamp = std::numeric_limits<std::int64_t>::min();
inline constexpr double kNotAvailable = std::numeric_limits<double>::quiet_NaN();

/// One timestamped vessel position. Unavailable quantities are NaN.
struct PositionReading {
  Mmsi mmsi = 0;
  std::int64_t timestamp = kNoTimestamp;
  double latitude = kNotAvailable;
  double longitude = kNotAvailable;
  double sog_knots = kNotAvailable;
  double cog_deg = kNotAvailable;
  int message_type = 0;

  bool has_timestamp() const noexcept { return timestamp != kNoTimestamp; }
  bool position_available() const noexcept {
    return !std::isnan(latitude) && !std::isnan(longitude);
  }
  bool speed_available() const noexcept { return !std::isnan(sog_knots); }
};

/// Static vessel identity as reported by message 5 or 19.
struct VesselRecord {
  Mmsi mmsi = 0;
  std::int64_t timestamp = kNoTimestamp;
  int vessel_type_code = 0;  // 0 = not available
  std::string name;
  std::string callsign;
  std::optional<std::uint32_t> imo;
  std::string destination;
  std::string flag;
  std::optional<ShipDimensions> dimensions;
  int message_type = 5;
  bool partial = false;
};

inline constexpr std::int32_t kLonNotAvailable = 181 * 600000;
inline constexpr std::int32_t kLatNotAvailable = 91 * 600000;
inline constexpr unsigned kSogNotAvailable = 1023;
inline constexpr unsigned kCogNotAvailable = 3600;

namespace detail {

inline void apply_kinematics(PositionReading& r, std::int32_t raw_lat, std::int32_t raw_lon,
                             unsigned raw_sog, unsigned raw_cog) {
  double lat = raw_lat / 600000.0;
  double lon = raw_lon / 600000.0;
  if (raw_lat != kLatNotAvailable && raw_lon != kLonNotAvailable && std::abs(lat) <= 90.0 &&
      std::abs(lon) <= 180.0) {
    r.latitude = lat;
    r.longitude = lon;
  }
  if (raw_sog != kSogNotAvailable) r.sog_knots = raw_sog / 10.0;
  if (raw_cog < kCogNotAvailable) r.cog_deg = raw_cog / 10.0;
}

inline std::int32_t to_raw_coordinate(double deg, std::int32_t sentinel) {
  return std::isnan(deg) ? sentinel : static_cast<std::int32_t>(std::lround(deg * 600000.0));
}

inline std::optional<ShipDimensions> dims_if_available(const ShipDimensions& d) {
  return d.available() ? std::optional<ShipDimensions>(d) : std::nullopt;
}

inline int vessel_type_or_unknown(unsigned code) { return code <= 99 ? static_cast<int>(code) : 0; }

}  // namespace detail

/// Decodes message types 1, 2, 3, 18 and 19 into a position reading.
inline PositionReading decode_position_report(const BitBuffer& bits,
                                              std::int64_t receiver_timestamp = kNoTimestamp) {
  PositionReading r;
  r.timestamp = receiver_timestamp;
  unsigned t = message_type(bits);
  r.message_type = static_cast<int>(t);
  switch (t) {
    case 1:
    case 2:
    case 3: {
      auto m = ClassAPosition::decode(bits);
      r.mmsi = m.mmsi;
      detail::apply_kinematics(r, m.lat, m.lon, m.sog, m.cog);
      break;
    }
    case 18: {
      auto m = ClassBPosition::decode(bits);
      r.mmsi = m.mmsi;
      detail::apply_kinematics(r, m.lat, m.lon, m.sog, m.cog);
      break;
    }
    case 19: {
      auto m = ClassBExtended::decode(bits);
      r.mmsi = m.mmsi;
      detail::apply_kinematics(r, m.lat, m.lon, m.sog, m.cog);
      break;
    }
    default:
      throw UnsupportedTypeError(static_cast<int>(t));
  }
  return r;
}

inline VesselRecord to_vessel_record(const StaticVoyageData& m,
                                     std::int64_t receiver_timestamp = kNoTimestamp) {
  VesselRecord v;
  v.mmsi = m.mmsi;
  v.timestamp = receiver_timestamp;
  v.vessel_type_code = detail::vessel_type_or_unknown(m.ship_type);
  v.name = trim_sixbit_text(m.name);
  v.callsign = trim_sixbit_text(m.callsign);
  if (m.imo != 0) v.imo = m.imo;
  v.destination = trim_sixbit_text(m.destination);
  v.flag = flag_for_mmsi(m.mmsi);
  v.dimensions = detail::dims_if_available(m.dims);
  v.message_type = 5;
  v.partial = m.partial;
  return v;
}

inline VesselRecord to_vessel_record(const ClassBExtended& m,
                                     std::int64_t receiver_timestamp = kNoTimestamp) {
  VesselRecord v;
  v.mmsi = m.mmsi;
  v.timestamp = receiver_timestamp;
  v.vessel_type_code = detail::vessel_type_or_unknown(m.ship_type);
  v.name = trim_sixbit_text(m.name);
  v.flag = flag_for_mmsi(m.mmsi);
  v.dimensions = detail::dims_if_available(m.dims);
  v.message_type = 19;
  v.partial = m.partial;
  return v;
}

/// Decodes a type 5 message. Text fields past the end of a short buffer are
/// decoded as far as present and the record is flagged partial.
inline VesselRecord decode_static_report(const BitBuffer& bits,
                                         std::int64_t receiver_timestamp = kNoTimestamp) {
  if (unsigned t = message_type(bits); t != 5) throw UnsupportedTypeError(static_cast<int>(t));
  return to_vessel_record(StaticVoyageData::decode(bits), receiver_timestamp);
}

/// Builds a type 1 report carrying the reading's kinematics.
inline ClassAPosition make_class_a_report(const PositionReading& r, unsigned nav_status = 0) {
  ClassAPosition m;
  m.type = 1;
  m.mmsi = r.mmsi;
  m.nav_status = nav_status;
  m.lat = detail::to_raw_coordinate(r.latitude, kLatNotAvailable);
  m.lon = detail::to_raw_coordinate(r.longitude, kLonNotAvailable);
  if (!r.position_available()) {
    m.lat = kLatNotAvailable;
    m.lon = kLonNotAvailable;
  }
  m.sog = r.speed_available()
              ? static_cast<unsigned>(std::min<long>(1022, std::lround(r.sog_knots * 10.0)))
              : kSogNotAvailable;
  m.cog = std::isnan(r.cog_deg) ? kCogNotAvailable
                                : static_cast<unsigned>(std::lround(r.cog_deg * 10.0)) % 3600;
  m.second = r.has_timestamp() ? static_cast<unsigned>(((r.timestamp % 60) + 60) % 60) : 60;
  return m;
}

/// Builds a type 5 message from a vessel record. Text is truncated to field width.
inline StaticVoyageData make_static_report(const VesselRecord& v) {
  StaticVoyageData m;
  m.mmsi = v.mmsi;
  m.imo = v.imo.value_or(0);
  m.callsign = v.callsign.substr(0, 7);
  m.name = v.name.substr(0, 20);
  m.ship_type = static_cast<unsigned>(v.vessel_type_code);
  if (v.dimensions) m.dims = *v.dimensions;
  m.destination = v.destination.substr(0, 20);
  return m;
}

/// Broad ship category from the ITU type-of-ship code.
enum class ShipCategory {
  NotAvailable,
  Reserved,
  WingInGround,
  Fishing,
  Towing,
  Dredging,
  Diving,
  Military,
  Sailing,
  PleasureCraft,
  HighSpeedCraft,
  PilotVessel,
  SearchAndRescue,
  Tug,
  PortTender,
  AntiPollution,
  LawEnforcement,
  LocalVessel,
  MedicalTransport,
  NonCombatant,
  Passenger,
  Cargo,
  Tanker,
  Other,
};

inline constexpr ShipCategory ship_category(int code) noexcept {
  if (code <= 0 || code > 99) return ShipCategory::NotAvailable;
  if (code < 20) return ShipCategory::Reserved;
  if (code < 30) return ShipCategory::WingInGround;
  switch (code) {
    case 30: return ShipCategory::Fishing;
    case 31:
    case 32: return ShipCategory::Towing;
    case 33: return ShipCategory::Dredging;
    case 34: return ShipCategory::Diving;
    case 35: return ShipCategory::Military;
    case 36: return ShipCategory::Sailing;
    case 37: return ShipCategory::PleasureCraft;
    case 38:
    case 39: return ShipCategory::Reserved;
    case 50: return ShipCategory::PilotVessel;
    case 51: return ShipCategory::SearchAndRescue;
    case 52: return ShipCategory::Tug;
    case 53: return ShipCategory::PortTender;
    case 54: return ShipCategory::AntiPollution;
    case 55: return ShipCategory::LawEnforcement;
    case 56:
    case 57: return ShipCategory::LocalVessel;
    case 58: return ShipCategory::MedicalTransport;
    case 59: return ShipCategory::NonCombatant;
    default: break;
  }
  if (code < 50) return ShipCategory::HighSpeedCraft;
  if (code < 70) return ShipCategory::Passenger;
  if (code < 80) return ShipCategory::Cargo;
  if (code < 90) return ShipCategory::Tanker;
  return ShipCategory::Other;
}

inline constexpr const char* to_string(ShipCategory c) noexcept {
  switch (c) {
    case ShipCategory::NotAvailable: return "not available";
    case ShipCategory::Reserved: return "reserved";
    case ShipCategory::WingInGround: return "wing in ground";
    case ShipCategory::Fishing: return "fishing";
    case ShipCategory::Towing: return "towing";
    case ShipCategory::Dredging: return "dredging";
    case ShipCategory::Diving: return "diving";
    case ShipCategory::Military: return "military";
    case ShipCategory::Sailing: return "sailing";
    case ShipCategory::PleasureCraft: return "pleasure craft";
    case ShipCategory::HighSpeedCraft: return "high speed craft";
    case ShipCategory::PilotVessel: return "pilot vessel";
    case ShipCategory::SearchAndRescue: return "search and rescue";
    case ShipCategory::Tug: return "tug";
    case ShipCategory::PortTender: return "port tender";
    case ShipCategory::AntiPollution: return "anti-pollution";
    case ShipCategory::LawEnforcement: return "law enforcement";
    case ShipCategory::LocalVessel: return "local vessel";
    case ShipCategory::MedicalTransport: return "medical transport";
    case ShipCategory::NonCombatant: return "non-combatant";
    case ShipCategory::Passenger: return "passenger";
    case ShipCategory::Cargo: return "cargo";
    case ShipCategory::Tanker: return "tanker";
    case ShipCategory::Other: return "other";
  }
  return "other";
}

}  // namespace aisod

#endif  // AISOD_MESSAGES_HPP
