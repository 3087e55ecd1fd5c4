#ifndef AISOD_GEO_HPP
#define AISOD_GEO_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "aisod/csv.hpp"
#include "aisod/error.hpp"
#include "aisod/parallel.hpp"
#include "aisod/track.hpp"

namespace aisod {

inline constexpr double kEarthRadiusKm = 6371.0;

struct GeoPoint {
  double latitude = 0.0;
  double longitude = 0.0;

  bool valid() const noexcept {
    return std::abs(latitude) <= 90.0 && std::abs(longitude) <= 180.0;
  }
  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

inline GeoPoint make_point(double lat, double lon) {
  GeoPoint p{lat, lon};
  if (!p.valid()) throw ContractError("coordinate out of range");
  return p;
}

inline GeoPoint point_of(const PositionReading& r) { return {r.latitude, r.longitude}; }

inline double deg_to_rad(double d) noexcept { return d * std::numbers::pi / 180.0; }
inline double rad_to_deg(double r) noexcept { return r * 180.0 / std::numbers::pi; }

/// Great-circle distance on a 6371 km sphere.
inline double haversine_km(const GeoPoint& a, const GeoPoint& b) noexcept {
  const double phi1 = deg_to_rad(a.latitude), phi2 = deg_to_rad(b.latitude);
  const double dphi = phi2 - phi1;
  const double dlambda = deg_to_rad(b.longitude - a.longitude);
  const double s1 = std::sin(dphi / 2), s2 = std::sin(dlambda / 2);
  double h = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
  h = std::clamp(h, 0.0, 1.0);
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(h));
}

/// Signed longitude difference b - a wrapped into [-180, 180].
inline double wrapped_lon_delta(double a, double b) noexcept {
  double d = std::fmod(b - a, 360.0);
  if (d > 180.0) d -= 360.0;
  if (d < -180.0) d += 360.0;
  return d;
}

struct Geofence {
  GeoPoint center;
  double radius_km = 50.0;

  void validate() const {
    if (!center.valid()) throw ConfigError("geofence center out of range");
    if (!(radius_km > 0.0)) throw ConfigError("geofence radius must be > 0");
  }
  /// Inclusive: a point exactly radius_km away is inside.
  bool contains(const GeoPoint& p) const noexcept { return haversine_km(center, p) <= radius_km; }
};

/// Latitude/longitude box that circumscribes a fence. Used as a conservative
/// prefilter: every point inside the fence is inside the box.
struct BoundingBox {
  double min_lat, max_lat;
  double min_lon, max_lon;  // may wrap: min_lon > max_lon means it crosses 180
  bool all_lon = false;

  static BoundingBox around(const Geofence& f) {
    // Slight inflation covers rounding in the trigonometry.
    const double ang = f.radius_km / kEarthRadiusKm * (1.0 + 1e-9) + 1e-12;
    const double lat = deg_to_rad(f.center.latitude);
    BoundingBox b{};
    b.min_lat = rad_to_deg(lat - ang);
    b.max_lat = rad_to_deg(lat + ang);
    if (b.max_lat >= 90.0 || b.min_lat <= -90.0 || ang >= std::numbers::pi / 2) {
      b.min_lat = std::max(b.min_lat, -90.0);
      b.max_lat = std::min(b.max_lat, 90.0);
      b.all_lon = true;
      return b;
    }
    const double dlon = rad_to_deg(std::asin(std::min(1.0, std::sin(ang) / std::cos(lat))));
    if (dlon >= 180.0) {
      b.all_lon = true;
      return b;
    }
    b.min_lon = f.center.longitude - dlon;
    b.max_lon = f.center.longitude + dlon;
    if (b.min_lon < -180.0) b.min_lon += 360.0;
    if (b.max_lon > 180.0) b.max_lon -= 360.0;
    return b;
  }

  bool contains(const GeoPoint& p) const noexcept {
    if (p.latitude < min_lat || p.latitude > max_lat) return false;
    if (all_lon) return true;
    if (min_lon <= max_lon) return p.longitude >= min_lon && p.longitude <= max_lon;
    return p.longitude >= min_lon || p.longitude <= max_lon;
  }
};

struct TimeWindow {
  std::int64_t start = 0;
  std::int64_t end = 0;  // inclusive

  bool contains(std::int64_t t) const noexcept { return t >= start && t <= end; }
};

struct SelectionQuery {
  Geofence fence;
  double max_speed_knots = 2.0;
  TimeWindow window;

  void validate() const {
    fence.validate();
    if (!(window.start < window.end)) throw ConfigError("selection window start must precede end");
    if (!(max_speed_knots >= 0.0)) throw ConfigError("max speed must be >= 0");
  }

  /// Time and speed clauses: in window and strictly slower than the cap.
  bool slow_in_window(const PositionReading& r) const noexcept {
    return r.position_available() && r.speed_available() && window.contains(r.timestamp) &&
           r.sog_knots < max_speed_knots;
  }
};

/// MMSIs with at least one reading inside the fence, inside the window and
/// below the speed cap.
inline std::set<Mmsi> select_mmsis(const TrackSet& ts, const SelectionQuery& q, unsigned threads = 1) {
  q.validate();
  const BoundingBox box = BoundingBox::around(q.fence);
  std::vector<const Track*> tracks;
  tracks.reserve(ts.tracks.size());
  for (const auto& [m, t] : ts.tracks) tracks.push_back(&t);
  std::vector<char> hit(tracks.size(), 0);
  parallel_for(tracks.size(), threads, [&](std::size_t i) {
    for (const auto& r : tracks[i]->readings) {
      if (!q.slow_in_window(r)) continue;
      GeoPoint p = point_of(r);
      if (box.contains(p) && q.fence.contains(p)) {
        hit[i] = 1;
        return;
      }
    }
  });
  std::set<Mmsi> out;
  for (std::size_t i = 0; i < tracks.size(); ++i) {
    if (hit[i]) out.insert(tracks[i]->mmsi);
  }
  return out;
}

/// Second-stage extraction: every in-window, below-cap reading of the listed
/// ships, wherever it lies. There is deliberately no radius clause here.
inline TrackSet extract_window(const TrackSet& ts, const std::set<Mmsi>& mmsis,
                               const SelectionQuery& q) {
  TrackSet out;
  out.provenance = ts.provenance;
  out.stats = ts.stats;
  for (Mmsi m : mmsis) {
    auto it = ts.tracks.find(m);
    if (it == ts.tracks.end()) continue;
    Track t;
    t.mmsi = m;
    t.vessel = it->second.vessel;
    for (const auto& r : it->second.readings) {
      if (q.slow_in_window(r)) t.readings.push_back(r);
    }
    if (!t.readings.empty()) out.tracks.emplace(m, std::move(t));
  }
  for (const auto& v : ts.vessel_observations) {
    if (out.tracks.count(v.mmsi)) out.vessel_observations.push_back(v);
  }
  return out;
}

/// Named fence presets. Coordinates are gazetteer values for the city and
/// the archipelago centroid.
inline std::map<std::string, Geofence> builtin_fences() {
  return {
      {"wuhan", Geofence{{30.59, 114.31}, 50.0}},
      {"canary", Geofence{{28.29, -16.63}, 300.0}},
  };
}

/// Parses "name = lat, lon, radius_km" lines ('#' comments allowed).
inline std::map<std::string, Geofence> parse_fences(std::istream& in) {
  std::map<std::string, Geofence> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("fence line " + std::to_string(lineno) + ": expected name = lat,lon,radius_km");
    std::string name = trim(line.substr(0, eq));
    std::vector<std::string> parts;
    split_csv_line(trim(line.substr(eq + 1)), parts);
    if (parts.size() != 3) throw ConfigError("fence '" + name + "': expected lat,lon,radius_km");
    auto lat = parse_double(parts[0]), lon = parse_double(parts[1]), r = parse_double(parts[2]);
    if (!lat || !lon || !r) throw ConfigError("fence '" + name + "': non-numeric value");
    Geofence f{{*lat, *lon}, *r};
    f.validate();
    out[name] = f;
  }
  return out;
}

}  // namespace aisod

#endif  // AISOD_GEO_HPP
