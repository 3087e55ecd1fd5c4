#ifndef AISOD_TRACK_HPP
#define AISOD_TRACK_HPP

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "aisod/csv.hpp"
#include "aisod/decoder.hpp"
#include "aisod/error.hpp"
#include "aisod/messages.hpp"
#include "aisod/time.hpp"

namespace aisod {

struct Track {
  Mmsi mmsi = 0;
  std::vector<PositionReading> readings;  // canonical time order
  std::optional<VesselRecord> vessel;
};

/// Reading counts through ingestion. rows_in == kept + dropped_total().
struct IngestStats {
  std::size_t rows_in = 0;
  std::size_t kept = 0;
  std::size_t position_unavailable = 0;  // kept but flagged
  std::map<std::string, std::size_t> dropped;

  std::size_t dropped_total() const {
    std::size_t n = 0;
    for (const auto& [reason, c] : dropped) n += c;
    return n;
  }
  std::size_t dropped_for(const std::string& reason) const {
    auto it = dropped.find(reason);
    return it == dropped.end() ? 0 : it->second;
  }
};

inline const std::string kDropUnparseable = "unparseable";
inline const std::string kDropMissingTimestamp = "missing_timestamp";
inline const std::string kDropDuplicate = "duplicate";

struct TrackSet {
  std::map<Mmsi, Track> tracks;
  std::vector<VesselRecord> vessel_observations;
  std::string provenance;
  IngestStats stats;

  std::size_t reading_count() const {
    std::size_t n = 0;
    for (const auto& [m, t] : tracks) n += t.readings.size();
    return n;
  }
  bool empty() const noexcept { return tracks.empty(); }
  bool contains(Mmsi m) const { return tracks.count(m) != 0; }
};

namespace detail {

inline double order_key(double v) noexcept {
  return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
}

inline bool same_value(double a, double b) noexcept {
  return (std::isnan(a) && std::isnan(b)) || a == b;
}

}  // namespace detail

/// Canonical reading order: time, then position and kinematics. A total order
/// on distinguishable readings, which makes sorting idempotent and merge
/// order-independent.
inline bool reading_before(const PositionReading& a, const PositionReading& b) noexcept {
  using detail::order_key;
  return std::make_tuple(a.timestamp, order_key(a.latitude), order_key(a.longitude),
                         order_key(a.sog_knots), order_key(a.cog_deg), a.message_type) <
         std::make_tuple(b.timestamp, order_key(b.latitude), order_key(b.longitude),
                         order_key(b.sog_knots), order_key(b.cog_deg), b.message_type);
}

/// Exact duplicate: same MMSI, timestamp, latitude and longitude.
inline bool same_fix(const PositionReading& a, const PositionReading& b) noexcept {
  return a.mmsi == b.mmsi && a.timestamp == b.timestamp &&
         detail::same_value(a.latitude, b.latitude) && detail::same_value(a.longitude, b.longitude);
}

/// Sorts canonically and collapses exact duplicates; returns how many were removed.
inline std::size_t normalize_readings(std::vector<PositionReading>& readings) {
  std::stable_sort(readings.begin(), readings.end(), reading_before);
  auto end = std::unique(readings.begin(), readings.end(), same_fix);
  std::size_t removed = static_cast<std::size_t>(readings.end() - end);
  readings.erase(end, readings.end());
  return removed;
}

/// Latest observation per MMSI becomes the track's vessel record.
inline void attach_vessels(TrackSet& ts, std::vector<VesselRecord> observations) {
  for (auto& v : observations) ts.vessel_observations.push_back(std::move(v));
  std::map<Mmsi, const VesselRecord*> latest;
  for (const auto& v : ts.vessel_observations) {
    auto& slot = latest[v.mmsi];
    if (!slot || v.timestamp >= slot->timestamp) slot = &v;
  }
  for (auto& [mmsi, track] : ts.tracks) {
    auto it = latest.find(mmsi);
    if (it != latest.end()) track.vessel = *it->second;
  }
}

/// Groups readings into per-MMSI canonical tracks. Readings without a
/// timestamp are dropped (time-windowed analysis needs them).
inline TrackSet build_trackset(std::vector<PositionReading> readings, std::string provenance = {},
                               IngestStats stats = {}) {
  TrackSet ts;
  ts.provenance = std::move(provenance);
  stats.rows_in += readings.size();
  for (auto& r : readings) {
    if (!r.has_timestamp()) {
      ++stats.dropped[kDropMissingTimestamp];
      continue;
    }
    auto& track = ts.tracks[r.mmsi];
    track.mmsi = r.mmsi;
    track.readings.push_back(r);
  }
  std::size_t kept = 0;
  for (auto& [m, t] : ts.tracks) {
    if (std::size_t dups = normalize_readings(t.readings)) stats.dropped[kDropDuplicate] += dups;
    kept += t.readings.size();
    for (const auto& r : t.readings) stats.position_unavailable += !r.position_available();
  }
  stats.kept = kept;
  ts.stats = std::move(stats);
  return ts;
}

/// Candidate header names per field. Setting a field to a single name makes
/// that the only accepted header.
struct ColumnMapping {
  std::vector<std::string> mmsi{"mmsi", "MMSI"};
  std::vector<std::string> timestamp{"timestamp", "BaseDateTime", "time", "TIMESTAMP"};
  std::vector<std::string> latitude{"lat", "LAT", "latitude", "Latitude"};
  std::vector<std::string> longitude{"lon", "LON", "longitude", "Longitude"};
  std::vector<std::string> speed{"sog_knots", "sog", "SOG", "speed"};
  std::vector<std::string> course{"cog_deg", "cog", "COG", "course"};
  std::vector<std::string> message_type{"msg_type", "message_type"};
  std::vector<std::string> vessel_type{"vessel_type", "VesselType", "ship_type"};

  /// Overrides one field by key ("mmsi", "timestamp", "lat", "lon", "sog",
  /// "cog", "msg_type", "vessel_type").
  void set(const std::string& key, const std::string& column) {
    std::vector<std::string>* slot = nullptr;
    if (key == "mmsi") slot = &mmsi;
    else if (key == "timestamp") slot = &timestamp;
    else if (key == "lat") slot = &latitude;
    else if (key == "lon") slot = &longitude;
    else if (key == "sog") slot = &speed;
    else if (key == "cog") slot = &course;
    else if (key == "msg_type") slot = &message_type;
    else if (key == "vessel_type") slot = &vessel_type;
    if (!slot) throw ConfigError("unknown column mapping key '" + key + "'");
    *slot = {column};
  }
};

namespace detail {

// Empty or out-of-range coordinate fields mean "not available"; garbage is an error.
inline bool parse_optional_measure(const std::string& field, double& out, double lo, double hi) {
  if (trim(field).empty()) {
    out = kNotAvailable;
    return true;
  }
  auto v = parse_double(field);
  if (!v) return false;
  out = (std::isfinite(*v) && *v >= lo && *v <= hi) ? *v : kNotAvailable;
  return true;
}

}  // namespace detail

/// Reads position rows from CSV. Unparseable rows are counted and skipped.
/// If the file has a vessel type column, each row with a nonzero type also
/// yields a vessel observation.
inline TrackSet ingest_csv(std::istream& in, const ColumnMapping& mapping = {},
                           std::string provenance = {}) {
  CsvReader reader(in);
  if (!reader.has_header()) return build_trackset({}, std::move(provenance));
  const auto& h = reader.header();
  std::size_t c_mmsi = h.require(mapping.mmsi, "mmsi");
  std::size_t c_ts = h.require(mapping.timestamp, "timestamp");
  std::size_t c_lat = h.require(mapping.latitude, "latitude");
  std::size_t c_lon = h.require(mapping.longitude, "longitude");
  std::size_t c_sog = h.require(mapping.speed, "speed");
  auto c_cog = h.find_any(mapping.course);
  auto c_type = h.find_any(mapping.message_type);
  auto c_vtype = h.find_any(mapping.vessel_type);

  std::vector<PositionReading> readings;
  std::vector<VesselRecord> vessels;
  IngestStats stats;
  std::vector<std::string> row;
  std::size_t needed = std::max({c_mmsi, c_ts, c_lat, c_lon, c_sog});
  while (reader.next(row)) {
    if (row.size() <= needed) {
      ++stats.rows_in;
      ++stats.dropped[kDropUnparseable];
      continue;
    }
    PositionReading r;
    auto mmsi = parse_integer<std::uint32_t>(row[c_mmsi]);
    bool ok = mmsi.has_value();
    if (ok) r.mmsi = *mmsi;
    std::string ts_field = trim(row[c_ts]);
    if (ok && ts_field.empty()) {
      ++stats.rows_in;
      ++stats.dropped[kDropMissingTimestamp];
      continue;
    }
    if (ok) {
      auto ts = parse_timestamp(ts_field);
      ok = ts.has_value();
      if (ok) r.timestamp = *ts;
    }
    ok = ok && detail::parse_optional_measure(row[c_lat], r.latitude, -90.0, 90.0);
    ok = ok && detail::parse_optional_measure(row[c_lon], r.longitude, -180.0, 180.0);
    if (ok && !r.position_available()) r.latitude = r.longitude = kNotAvailable;
    ok = ok && detail::parse_optional_measure(row[c_sog], r.sog_knots, 0.0, 102.2);
    if (ok && c_cog && *c_cog < row.size()) {
      ok = detail::parse_optional_measure(row[*c_cog], r.cog_deg, 0.0, 359.9999);
    }
    if (ok && c_type && *c_type < row.size()) {
      r.message_type = parse_integer<int>(row[*c_type]).value_or(0);
    }
    if (!ok) {
      ++stats.rows_in;
      ++stats.dropped[kDropUnparseable];
      continue;
    }
    if (c_vtype && *c_vtype < row.size()) {
      if (auto vt = parse_integer<int>(row[*c_vtype]); vt && *vt > 0 && *vt <= 99) {
        VesselRecord v;
        v.mmsi = r.mmsi;
        v.timestamp = r.timestamp;
        v.vessel_type_code = *vt;
        v.flag = flag_for_mmsi(r.mmsi);
        v.message_type = 0;
        vessels.push_back(std::move(v));
      }
    }
    readings.push_back(r);
  }
  TrackSet ts = build_trackset(std::move(readings), std::move(provenance), std::move(stats));
  if (!vessels.empty()) attach_vessels(ts, std::move(vessels));
  return ts;
}

/// Reads vessel records in the format written by write_vessels_csv; only the
/// mmsi and vessel_type columns are required.
inline std::vector<VesselRecord> read_vessels_csv(std::istream& in) {
  CsvReader reader(in);
  std::vector<VesselRecord> out;
  if (!reader.has_header()) return out;
  const auto& h = reader.header();
  std::size_t c_mmsi = h.require({"mmsi", "MMSI"}, "mmsi");
  std::size_t c_type = h.require({"vessel_type", "VesselType", "ship_type"}, "vessel_type");
  auto c_ts = h.find("timestamp");
  auto c_name = h.find_any({"name", "VesselName"});
  auto c_call = h.find_any({"callsign", "CallSign"});
  auto c_imo = h.find_any({"imo", "IMO"});
  auto c_dest = h.find("destination");
  auto c_len = h.find_any({"length_m", "Length"});
  auto c_beam = h.find_any({"beam_m", "Width"});
  auto c_msg = h.find("msg_type");
  auto field = [](const std::vector<std::string>& row, std::optional<std::size_t> c) -> std::string {
    return c && *c < row.size() ? row[*c] : std::string();
  };
  std::vector<std::string> row;
  while (reader.next(row)) {
    auto mmsi = parse_integer<std::uint32_t>(field(row, c_mmsi));
    if (!mmsi) continue;
    VesselRecord v;
    v.mmsi = *mmsi;
    auto vt = parse_integer<int>(field(row, c_type)).value_or(0);
    v.vessel_type_code = vt >= 0 && vt <= 99 ? vt : 0;
    if (auto t = parse_timestamp(field(row, c_ts))) v.timestamp = *t;
    v.name = field(row, c_name);
    v.callsign = field(row, c_call);
    if (auto imo = parse_integer<std::uint32_t>(field(row, c_imo))) v.imo = *imo;
    v.destination = field(row, c_dest);
    v.flag = flag_for_mmsi(v.mmsi);
    auto len = parse_integer<unsigned>(field(row, c_len));
    auto beam = parse_integer<unsigned>(field(row, c_beam));
    if (len || beam) v.dimensions = ShipDimensions{len.value_or(0), 0, beam.value_or(0), 0};
    v.message_type = parse_integer<int>(field(row, c_msg)).value_or(5);
    out.push_back(std::move(v));
  }
  return out;
}

/// Per-MMSI union with canonical re-sort; exact duplicates across the inputs
/// collapse and are counted as dropped duplicates.
inline TrackSet merge(const TrackSet& a, const TrackSet& b) {
  TrackSet out;
  if (a.provenance.empty()) out.provenance = b.provenance;
  else if (b.provenance.empty()) out.provenance = a.provenance;
  else out.provenance = a.provenance + "; " + b.provenance;

  out.stats.rows_in = a.stats.rows_in + b.stats.rows_in;
  out.stats.dropped = a.stats.dropped;
  for (const auto& [reason, c] : b.stats.dropped) out.stats.dropped[reason] += c;

  out.tracks = a.tracks;
  for (const auto& [mmsi, track] : b.tracks) {
    auto& dst = out.tracks[mmsi];
    dst.mmsi = mmsi;
    dst.readings.insert(dst.readings.end(), track.readings.begin(), track.readings.end());
  }
  std::size_t kept = 0;
  for (auto& [mmsi, track] : out.tracks) {
    track.vessel.reset();
    if (std::size_t dups = normalize_readings(track.readings)) out.stats.dropped[kDropDuplicate] += dups;
    kept += track.readings.size();
    for (const auto& r : track.readings) out.stats.position_unavailable += !r.position_available();
  }
  out.stats.kept = kept;
  std::vector<VesselRecord> obs = a.vessel_observations;
  obs.insert(obs.end(), b.vessel_observations.begin(), b.vessel_observations.end());
  attach_vessels(out, std::move(obs));
  return out;
}

/// Writes all readings, MMSI-major, in the decoded-readings CSV format.
inline void write_tracks_csv(std::ostream& os, const TrackSet& ts) {
  os << kReadingsCsvHeader << '\n';
  for (const auto& [mmsi, track] : ts.tracks) {
    for (const auto& r : track.readings) write_reading_row(os, r);
  }
}

inline void write_ingest_stats(std::ostream& os, const IngestStats& s) {
  os << "rows_in=" << s.rows_in << '\n'
     << "kept=" << s.kept << '\n'
     << "position_unavailable=" << s.position_unavailable << '\n';
  for (const auto& [reason, c] : s.dropped) os << "dropped." << reason << '=' << c << '\n';
}

}  // namespace aisod

#endif  // AISOD_TRACK_HPP
