// Reference implementations and generators shared by the unit tests and the
// acceptance runner. Written independently of the library passes they check.

#ifndef AISOD_TESTS_ORACLES_HPP
#define AISOD_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "aisod.hpp"

namespace oracle {

using aisod::Mmsi;
using aisod::PositionReading;
using aisod::TrackSet;

inline PositionReading reading(Mmsi mmsi, std::int64_t ts, double lat, double lon, double sog = 0.0,
                               double cog = 0.0, int type = 1) {
  PositionReading r;
  r.mmsi = mmsi;
  r.timestamp = ts;
  r.latitude = lat;
  r.longitude = lon;
  r.sog_knots = sog;
  r.cog_deg = cog;
  r.message_type = type;
  return r;
}

inline aisod::VesselRecord vessel(Mmsi mmsi, int type, std::int64_t ts = 0) {
  aisod::VesselRecord v;
  v.mmsi = mmsi;
  v.vessel_type_code = type;
  v.timestamp = ts;
  return v;
}

using Fix = std::tuple<std::int64_t, double, double, double, double, int>;
using KeptSet = std::map<Mmsi, std::vector<Fix>>;

inline Fix fix_of(const PositionReading& r) {
  auto key = [](double v) { return std::isnan(v) ? 1e300 : v; };
  return {r.timestamp, key(r.latitude), key(r.longitude), key(r.sog_knots), key(r.cog_deg), r.message_type};
}

inline KeptSet kept_set(const TrackSet& ts) {
  KeptSet out;
  for (const auto& [m, t] : ts.tracks) {
    auto& v = out[m];
    for (const auto& r : t.readings) v.push_back(fix_of(r));
  }
  return out;
}

/// Naive single-pass version of the four cleaning rules.
inline KeptSet naive_clean(const TrackSet& ts, const aisod::FilterConfig& cfg) {
  std::map<Mmsi, std::set<int>> types;
  for (const auto& v : ts.vessel_observations) {
    if (v.vessel_type_code != 0) types[v.mmsi].insert(v.vessel_type_code);
  }
  KeptSet out;
  for (const auto& [mmsi, track] : ts.tracks) {
    if (cfg.drop_invalid_mmsi && static_cast<int>(std::to_string(mmsi).size()) < cfg.min_mmsi_digits) continue;
    if (cfg.drop_conflicting_vessel_types && types[mmsi].size() > 1) continue;

    std::vector<PositionReading> kept;
    std::optional<PositionReading> last;
    for (const auto& r : track.readings) {
      bool has_pos = !std::isnan(r.latitude) && !std::isnan(r.longitude);
      if (has_pos && last && cfg.drop_micro_moves) {
        double dlat = std::abs(r.latitude - last->latitude);
        double dlon = std::abs(r.longitude - last->longitude);
        if (dlon > 180.0) dlon = 360.0 - dlon;
        if (dlat < cfg.micro_move_threshold_deg && dlon < cfg.micro_move_threshold_deg) continue;
      }
      kept.push_back(r);
      if (has_pos) last = r;
    }

    if (cfg.drop_speed_jumps) {
      bool jumped = false;
      std::optional<PositionReading> prev;
      for (const auto& r : kept) {
        if (std::isnan(r.latitude) || std::isnan(r.longitude)) continue;
        if (prev) {
          double dlat = std::abs(r.latitude - prev->latitude);
          double dlon = std::abs(r.longitude - prev->longitude);
          if (dlon > 180.0) dlon = 360.0 - dlon;
          double disp = dlat > dlon ? dlat : dlon;
          std::int64_t dt = r.timestamp - prev->timestamp;
          if (dt == 0 ? disp > 0.0 : disp * 3600.0 / static_cast<double>(dt) > cfg.max_jump_rate_deg_per_hr) {
            jumped = true;
          }
        }
        prev = r;
      }
      if (jumped) continue;
    }
    auto& v = out[mmsi];
    for (const auto& r : kept) v.push_back(fix_of(r));
  }
  return out;
}

/// Random fleet aimed at the cleaning rule boundaries: short MMSIs, type
/// conflicts, sub-threshold steps, exact-threshold jumps, zero time steps,
/// readings without a position and antimeridian crossings.
inline TrackSet random_cleaning_fleet(std::mt19937_64& rng, std::size_t max_ships = 50,
                                      std::size_t max_readings = 200) {
  auto uni = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  std::vector<PositionReading> readings;
  std::vector<aisod::VesselRecord> vessels;
  std::size_t ships = 1 + pick(max_ships);
  std::set<Mmsi> used;
  for (std::size_t s = 0; s < ships; ++s) {
    Mmsi mmsi;
    do {
      switch (pick(8)) {
        case 0: mmsi = static_cast<Mmsi>(1000000 + pick(9000000)); break;
        case 1: mmsi = static_cast<Mmsi>(10000000 + pick(90000000)); break;
        case 2: mmsi = pick(2) ? 100000000 : 99999999; break;
        default: mmsi = static_cast<Mmsi>(200000000 + pick(600000000)); break;
      }
    } while (!used.insert(mmsi).second);

    std::size_t nobs = pick(4);
    for (std::size_t i = 0; i < nobs; ++i) {
      static constexpr int kTypes[] = {0, 70, 70, 70, 80, 60};
      vessels.push_back(vessel(mmsi, kTypes[pick(std::size(kTypes))], static_cast<std::int64_t>(i)));
    }

    const bool dateline = pick(6) == 0;
    double lat = uni(-60.0, 60.0);
    double lon = dateline ? 179.99 : uni(-170.0, 170.0);
    std::int64_t t = 1578441600 + static_cast<std::int64_t>(pick(86400));
    std::size_t n = 1 + pick(max_readings);
    const bool jumpy = pick(4) == 0;
    const bool short_steps = pick(4) == 0;  // admits dt of 0 and 1 s
    for (std::size_t i = 0; i < n; ++i) {
      PositionReading r = reading(mmsi, t, lat, lon, std::round(uni(0.0, 15.0) * 10) / 10,
                                  std::round(uni(0.0, 359.0) * 10) / 10, pick(3) ? 1 : 18);
      if (pick(25) == 0) {
        r.latitude = r.longitude = aisod::kNotAvailable;
      }
      readings.push_back(r);

      static constexpr std::int64_t kDt[] = {0, 1, 60, 120, 600, 600, 3600};
      std::int64_t dt = short_steps ? kDt[pick(std::size(kDt))] : kDt[2 + pick(std::size(kDt) - 2)];
      double dlat = 0.0, dlon = 0.0;
      switch (pick(jumpy ? 7 : 5)) {
        case 0: dlat = uni(-0.0009, 0.0009); dlon = uni(-0.0009, 0.0009); break;
        case 1: dlat = pick(2) ? 0.001 : 0.0; dlon = dlat == 0.0 ? 0.001 : 0.0; break;
        case 2: dlat = 0.0; dlon = 0.0; break;
        case 3: case 4: dlat = uni(-0.02, 0.02) * static_cast<double>(dt) / 600.0;
                        dlon = uni(-0.02, 0.02) * static_cast<double>(dt) / 600.0; break;
        case 5: dt = 3600; dlat = pick(2) ? 1.7 : 1.7000001; break;
        default: dlat = uni(-3.0, 3.0); break;
      }
      if (dateline) dlon = std::abs(dlon) + 0.002;
      t += dt;
      lat = std::clamp(lat + dlat, -89.0, 89.0);
      lon += dlon;
      if (lon > 180.0) lon -= 360.0;
      if (lon < -180.0) lon += 360.0;
      if (pick(30) == 0) readings.push_back(readings.back());
    }
  }
  auto ts = aisod::build_trackset(std::move(readings), "random");
  aisod::attach_vessels(ts, std::move(vessels));
  return ts;
}

/// Chord-based great-circle distance: an independent formula for the same
/// sphere.
inline double chord_km(const aisod::GeoPoint& a, const aisod::GeoPoint& b) {
  auto xyz = [](const aisod::GeoPoint& p) {
    double la = p.latitude * std::numbers::pi / 180.0, lo = p.longitude * std::numbers::pi / 180.0;
    return std::array<double, 3>{std::cos(la) * std::cos(lo), std::cos(la) * std::sin(lo), std::sin(la)};
  };
  auto u = xyz(a), v = xyz(b);
  double c = std::sqrt((u[0] - v[0]) * (u[0] - v[0]) + (u[1] - v[1]) * (u[1] - v[1]) + (u[2] - v[2]) * (u[2] - v[2]));
  return 2.0 * 6371.0 * std::asin(std::min(1.0, c / 2.0));
}

inline std::set<Mmsi> brute_select(const TrackSet& ts, const aisod::SelectionQuery& q) {
  std::set<Mmsi> out;
  for (const auto& [m, t] : ts.tracks) {
    for (const auto& r : t.readings) {
      if (std::isnan(r.latitude) || std::isnan(r.longitude) || std::isnan(r.sog_knots)) continue;
      if (r.timestamp < q.window.start || r.timestamp > q.window.end) continue;
      if (!(r.sog_knots < q.max_speed_knots)) continue;
      if (chord_km(q.fence.center, {r.latitude, r.longitude}) > q.fence.radius_km) continue;
      out.insert(m);
      break;
    }
  }
  return out;
}

/// Ships scattered around a fence center at a mix of distances and speeds.
inline TrackSet random_query_fleet(std::mt19937_64& rng, const aisod::SelectionQuery& q, std::size_t ships) {
  auto uni = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  std::vector<PositionReading> readings;
  const double span_deg = q.fence.radius_km / 111.0 * 2.5 + 0.01;
  for (std::size_t s = 0; s < ships; ++s) {
    Mmsi m = static_cast<Mmsi>(300000000 + s);
    int n = 1 + static_cast<int>(uni(0, 60));
    for (int i = 0; i < n; ++i) {
      double lat = std::clamp(q.fence.center.latitude + uni(-span_deg, span_deg), -89.9, 89.9);
      double lon = q.fence.center.longitude + uni(-span_deg, span_deg) * 1.5;
      if (lon > 180.0) lon -= 360.0;
      if (lon < -180.0) lon += 360.0;
      static constexpr double kSpeeds[] = {0.0, 0.5, 1.9, 2.0, 2.1, 8.0, 12.0};
      double sog = kSpeeds[static_cast<std::size_t>(uni(0, std::size(kSpeeds) - 1e-9))];
      std::int64_t t = q.window.start + static_cast<std::int64_t>(
                                            uni(-0.3, 1.3) * static_cast<double>(q.window.end - q.window.start));
      auto r = reading(m, t, lat, lon, sog);
      if (uni(0, 1) < 0.03) r.sog_knots = aisod::kNotAvailable;
      if (uni(0, 1) < 0.03) r.latitude = r.longitude = aisod::kNotAvailable;
      readings.push_back(r);
    }
  }
  return aisod::build_trackset(std::move(readings));
}

/// Linear scan with the same inclusive cap and port_id tie rule.
inline std::optional<std::pair<std::string, double>> linear_nearest(const std::vector<aisod::PortRecord>& ports,
                                                                    const aisod::GeoPoint& p, double max_km) {
  std::optional<double> best;
  for (const auto& port : ports) {
    double d = aisod::haversine_km(p, port.location);
    if (d <= max_km && (!best || d < *best)) best = d;
  }
  if (!best) return std::nullopt;
  std::optional<std::pair<std::string, double>> out;
  for (const auto& port : ports) {
    double d = aisod::haversine_km(p, port.location);
    if (d <= max_km && d <= *best + 1e-9 && (!out || port.port_id < out->first)) out = {port.port_id, d};
  }
  return out;
}

namespace detail {

inline void check_position(const nlohmann::json& p, const std::string& where, std::vector<std::string>& err) {
  if (!p.is_array() || p.size() < 2 || p.size() > 3) {
    err.push_back(where + ": position must be an array of 2 or 3 numbers");
    return;
  }
  for (const auto& c : p) {
    if (!c.is_number()) {
      err.push_back(where + ": non-numeric coordinate");
      return;
    }
  }
  double lon = p[0].get<double>(), lat = p[1].get<double>();
  if (!(lon >= -180.0 && lon <= 180.0)) err.push_back(where + ": longitude out of range");
  if (!(lat >= -90.0 && lat <= 90.0)) err.push_back(where + ": latitude out of range");
}

inline void check_geometry(const nlohmann::json& g, const std::string& where, std::vector<std::string>& err) {
  if (g.is_null()) return;
  if (!g.is_object() || !g.contains("type") || !g["type"].is_string()) {
    err.push_back(where + ": geometry must be an object with a type");
    return;
  }
  const std::string type = g["type"];
  if (type == "GeometryCollection") {
    if (!g.contains("geometries") || !g["geometries"].is_array()) err.push_back(where + ": missing geometries");
    else for (const auto& sub : g["geometries"]) check_geometry(sub, where + "/geometries", err);
    return;
  }
  if (!g.contains("coordinates") || !g["coordinates"].is_array()) {
    err.push_back(where + ": missing coordinates array");
    return;
  }
  const auto& c = g["coordinates"];
  auto line = [&](const nlohmann::json& l, const std::string& w, std::size_t min) {
    if (!l.is_array() || l.size() < min) {
      err.push_back(w + ": needs at least " + std::to_string(min) + " positions");
      return;
    }
    for (std::size_t i = 0; i < l.size(); ++i) check_position(l[i], w + "[" + std::to_string(i) + "]", err);
  };
  if (type == "Point") check_position(c, where, err);
  else if (type == "MultiPoint") line(c, where, 0);
  else if (type == "LineString") line(c, where, 2);
  else if (type == "MultiLineString") for (const auto& l : c) line(l, where, 2);
  else if (type == "Polygon" || type == "MultiPolygon") {
    // Not produced by the exporter.
    err.push_back(where + ": unexpected polygon geometry");
  } else {
    err.push_back(where + ": unknown geometry type " + type);
  }
}

}  // namespace detail

/// RFC 7946 structural validation of a FeatureCollection.
inline std::vector<std::string> validate_geojson(const nlohmann::json& doc) {
  std::vector<std::string> err;
  if (!doc.is_object() || doc.value("type", "") != "FeatureCollection") {
    err.push_back("root must be a FeatureCollection object");
    return err;
  }
  if (doc.contains("crs")) err.push_back("crs member is not allowed");
  if (!doc.contains("features") || !doc["features"].is_array()) {
    err.push_back("features must be an array");
    return err;
  }
  for (std::size_t i = 0; i < doc["features"].size(); ++i) {
    const auto& f = doc["features"][i];
    std::string where = "features[" + std::to_string(i) + "]";
    if (!f.is_object() || f.value("type", "") != "Feature") {
      err.push_back(where + ": type must be Feature");
      continue;
    }
    if (!f.contains("geometry")) err.push_back(where + ": missing geometry member");
    else detail::check_geometry(f["geometry"], where + "/geometry", err);
    if (!f.contains("properties") || !(f["properties"].is_object() || f["properties"].is_null())) {
      err.push_back(where + ": properties must be an object or null");
    }
  }
  return err;
}

/// Largest longitude step between consecutive positions of any LineString.
inline double max_intra_segment_lon_jump(const nlohmann::json& doc) {
  double worst = 0.0;
  for (const auto& f : doc["features"]) {
    const auto& g = f["geometry"];
    if (g["type"] != "LineString") continue;
    const auto& c = g["coordinates"];
    for (std::size_t i = 1; i < c.size(); ++i) {
      worst = std::max(worst, std::abs(c[i][0].get<double>() - c[i - 1][0].get<double>()));
    }
  }
  return worst;
}

/// Transitions tabulated directly from generator ground truth.
inline std::map<std::pair<std::string, std::string>, std::pair<std::size_t, std::set<Mmsi>>> tabulate_truth(
    const std::vector<aisod::TruthTransition>& truth) {
  std::map<std::pair<std::string, std::string>, std::pair<std::size_t, std::set<Mmsi>>> out;
  for (const auto& t : truth) {
    auto& e = out[{t.origin, t.destination}];
    ++e.first;
    e.second.insert(t.mmsi);
  }
  return out;
}

inline std::map<std::pair<std::string, std::string>, std::pair<std::size_t, std::set<Mmsi>>> tabulate_matrix(
    const aisod::OdMatrix& m) {
  std::map<std::pair<std::string, std::string>, std::pair<std::size_t, std::set<Mmsi>>> out;
  for (const auto& [k, e] : m.edges) out[k] = {e.trip_count, e.ships};
  return out;
}

/// Random bit-exact messages of every supported layout.
inline aisod::AisMessage random_message(std::mt19937_64& rng) {
  auto bits = [&](unsigned w) { return w >= 64 ? rng() : rng() & ((std::uint64_t{1} << w) - 1); };
  auto sbits = [&](unsigned w) {
    std::int64_t v = static_cast<std::int64_t>(bits(w));
    if (v & (std::int64_t{1} << (w - 1))) v -= std::int64_t{1} << w;
    return v;
  };
  auto text = [&](std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += aisod::detail::kSixbitText[bits(6)];
    return s;
  };
  aisod::ShipDimensions dims{static_cast<unsigned>(bits(9)), static_cast<unsigned>(bits(9)),
                             static_cast<unsigned>(bits(6)), static_cast<unsigned>(bits(6))};
  switch (rng() % 4) {
    case 0: {
      aisod::ClassAPosition m;
      m.type = 1 + static_cast<unsigned>(rng() % 3);
      m.repeat = static_cast<unsigned>(bits(2));
      m.mmsi = static_cast<std::uint32_t>(bits(30));
      m.nav_status = static_cast<unsigned>(bits(4));
      m.rot = static_cast<int>(sbits(8));
      m.sog = static_cast<unsigned>(bits(10));
      m.accuracy = bits(1);
      m.lon = static_cast<std::int32_t>(sbits(28));
      m.lat = static_cast<std::int32_t>(sbits(27));
      m.cog = static_cast<unsigned>(bits(12));
      m.heading = static_cast<unsigned>(bits(9));
      m.second = static_cast<unsigned>(bits(6));
      m.maneuver = static_cast<unsigned>(bits(2));
      m.spare = static_cast<unsigned>(bits(3));
      m.raim = bits(1);
      m.radio = static_cast<std::uint32_t>(bits(19));
      return m;
    }
    case 1: {
      aisod::ClassBPosition m;
      m.repeat = static_cast<unsigned>(bits(2));
      m.mmsi = static_cast<std::uint32_t>(bits(30));
      m.reserved = static_cast<unsigned>(bits(8));
      m.sog = static_cast<unsigned>(bits(10));
      m.accuracy = bits(1);
      m.lon = static_cast<std::int32_t>(sbits(28));
      m.lat = static_cast<std::int32_t>(sbits(27));
      m.cog = static_cast<unsigned>(bits(12));
      m.heading = static_cast<unsigned>(bits(9));
      m.second = static_cast<unsigned>(bits(6));
      m.regional = static_cast<unsigned>(bits(2));
      m.cs_unit = bits(1);
      m.display = bits(1);
      m.dsc = bits(1);
      m.band = bits(1);
      m.msg22 = bits(1);
      m.assigned = bits(1);
      m.raim = bits(1);
      m.radio = static_cast<std::uint32_t>(bits(20));
      return m;
    }
    case 2: {
      aisod::ClassBExtended m;
      m.repeat = static_cast<unsigned>(bits(2));
      m.mmsi = static_cast<std::uint32_t>(bits(30));
      m.reserved = static_cast<unsigned>(bits(8));
      m.sog = static_cast<unsigned>(bits(10));
      m.accuracy = bits(1);
      m.lon = static_cast<std::int32_t>(sbits(28));
      m.lat = static_cast<std::int32_t>(sbits(27));
      m.cog = static_cast<unsigned>(bits(12));
      m.heading = static_cast<unsigned>(bits(9));
      m.second = static_cast<unsigned>(bits(6));
      m.regional = static_cast<unsigned>(bits(4));
      m.name = text(20);
      m.ship_type = static_cast<unsigned>(bits(8));
      m.dims = dims;
      m.epfd = static_cast<unsigned>(bits(4));
      m.raim = bits(1);
      m.dte = bits(1);
      m.assigned = bits(1);
      m.spare = static_cast<unsigned>(bits(4));
      return m;
    }
    default: {
      aisod::StaticVoyageData m;
      m.repeat = static_cast<unsigned>(bits(2));
      m.mmsi = static_cast<std::uint32_t>(bits(30));
      m.ais_version = static_cast<unsigned>(bits(2));
      m.imo = static_cast<std::uint32_t>(bits(30));
      m.callsign = text(7);
      m.name = text(20);
      m.ship_type = static_cast<unsigned>(bits(8));
      m.dims = dims;
      m.epfd = static_cast<unsigned>(bits(4));
      m.month = static_cast<unsigned>(bits(4));
      m.day = static_cast<unsigned>(bits(5));
      m.hour = static_cast<unsigned>(bits(5));
      m.minute = static_cast<unsigned>(bits(6));
      m.draught = static_cast<unsigned>(bits(8));
      m.destination = text(20);
      m.dte = bits(1);
      m.spare = bits(1);
      return m;
    }
  }
}

}  // namespace oracle

#endif  // AISOD_TESTS_ORACLES_HPP
