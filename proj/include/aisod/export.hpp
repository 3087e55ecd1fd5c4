#ifndef AISOD_EXPORT_HPP
#define AISOD_EXPORT_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "aisod/csv.hpp"
#include "aisod/error.hpp"
#include "aisod/geo.hpp"
#include "aisod/messages.hpp"
#include "aisod/time.hpp"
#include "aisod/track.hpp"

namespace aisod {

/// Path pieces of one vessel. Segment boundaries fall where readings are more
/// than the gap threshold apart or where the path crosses the antimeridian.
struct TrackGeometry {
  Mmsi mmsi = 0;
  std::vector<std::vector<PositionReading>> segments;
  std::optional<VesselRecord> vessel;
};

inline TrackGeometry track_geometry(const Track& track, double gap_split_hours = 6.0) {
  TrackGeometry g;
  g.mmsi = track.mmsi;
  g.vessel = track.vessel;
  const double gap_s = gap_split_hours * 3600.0;
  const PositionReading* prev = nullptr;
  for (const auto& r : track.readings) {
    if (!r.position_available()) continue;
    bool split = !prev || static_cast<double>(r.timestamp - prev->timestamp) > gap_s ||
                 std::abs(r.longitude - prev->longitude) > 180.0;
    if (split) g.segments.emplace_back();
    g.segments.back().push_back(r);
    prev = &r;
  }
  return g;
}

namespace detail {

inline void check_known(const TrackSet& ts, const std::vector<Mmsi>& mmsis) {
  for (Mmsi m : mmsis) {
    if (ts.contains(m)) continue;
    std::string msg = "unknown MMSI " + std::to_string(m) + "; known MMSIs:";
    std::size_t n = 0;
    for (const auto& [k, t] : ts.tracks) {
      if (n++ == 50) {
        msg += " ... (" + std::to_string(ts.tracks.size()) + " total)";
        break;
      }
      msg += ' ' + std::to_string(k);
    }
    throw ConfigError(msg);
  }
}

}  // namespace detail

/// GeoJSON FeatureCollection (RFC 7946, longitude first): one LineString per
/// segment, or a Point where a segment holds a single reading.
inline nlohmann::json export_geojson(const TrackSet& ts, const std::vector<Mmsi>& mmsis,
                                     double gap_split_hours = 6.0) {
  detail::check_known(ts, mmsis);
  nlohmann::json features = nlohmann::json::array();
  for (Mmsi m : std::set<Mmsi>(mmsis.begin(), mmsis.end())) {
    TrackGeometry g = track_geometry(ts.tracks.at(m), gap_split_hours);
    for (std::size_t s = 0; s < g.segments.size(); ++s) {
      const auto& seg = g.segments[s];
      nlohmann::json coords = nlohmann::json::array();
      for (const auto& r : seg) coords.push_back({r.longitude, r.latitude});
      nlohmann::json geometry;
      if (seg.size() == 1) {
        geometry = {{"type", "Point"}, {"coordinates", coords[0]}};
      } else {
        geometry = {{"type", "LineString"}, {"coordinates", coords}};
      }
      nlohmann::json props = {
          {"mmsi", m},
          {"segment", s},
          {"points", seg.size()},
          {"start", format_rfc3339(seg.front().timestamp)},
          {"end", format_rfc3339(seg.back().timestamp)},
      };
      if (g.vessel) {
        props["name"] = g.vessel->name;
        props["vessel_type"] = g.vessel->vessel_type_code;
        props["vessel_category"] = to_string(ship_category(g.vessel->vessel_type_code));
        props["flag"] = g.vessel->flag;
      }
      features.push_back({{"type", "Feature"}, {"geometry", geometry}, {"properties", props}});
    }
  }
  return {{"type", "FeatureCollection"}, {"features", features}};
}

inline constexpr std::string_view kTrackCsvHeader = "mmsi,segment,timestamp,lat,lon,sog_knots,cog_deg";

/// Same segmentation as the GeoJSON export, one row per reading.
inline void export_tracks_csv(std::ostream& os, const TrackSet& ts, const std::vector<Mmsi>& mmsis,
                              double gap_split_hours = 6.0) {
  detail::check_known(ts, mmsis);
  os << kTrackCsvHeader << '\n';
  for (Mmsi m : std::set<Mmsi>(mmsis.begin(), mmsis.end())) {
    TrackGeometry g = track_geometry(ts.tracks.at(m), gap_split_hours);
    for (std::size_t s = 0; s < g.segments.size(); ++s) {
      for (const auto& r : g.segments[s]) {
        os << m << ',' << s << ',' << r.timestamp << ',' << format_fixed(r.latitude, 6) << ','
           << format_fixed(r.longitude, 6) << ',' << format_fixed(r.sog_knots, 1) << ','
           << format_fixed(r.cog_deg, 1) << '\n';
      }
    }
  }
}

}  // namespace aisod

#endif  // AISOD_EXPORT_HPP
