#ifndef AISOD_PORTS_HPP
#define AISOD_PORTS_HPP

#include <algorithm>
#include <cmath>
#include <istream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "aisod/csv.hpp"
#include "aisod/error.hpp"
#include "aisod/geo.hpp"

namespace aisod {

struct PortRecord {
  std::string port_id;
  std::string name;
  std::string country;
  GeoPoint location;
};

/// Distances within this many km of the minimum are ties, resolved by port_id.
inline constexpr double kPortTieToleranceKm = 1e-9;

struct NearestPort {
  const PortRecord* port = nullptr;
  double distance_km = 0.0;
};

/// Immutable port list with a latitude-sorted view for nearest queries.
/// A port d km away differs in latitude by at most d / R radians, so only
/// the latitude band around the query needs a distance check.
class PortIndex {
 public:
  PortIndex() = default;

  explicit PortIndex(std::vector<PortRecord> ports) : ports_(std::move(ports)) {
    for (std::size_t i = 0; i < ports_.size(); ++i) {
      if (!ports_[i].location.valid()) throw ContractError("port " + ports_[i].port_id + " has invalid location");
      if (!by_id_.emplace(ports_[i].port_id, i).second) {
        throw ContractError("duplicate port id " + ports_[i].port_id);
      }
    }
    by_lat_.resize(ports_.size());
    for (std::size_t i = 0; i < ports_.size(); ++i) by_lat_[i] = i;
    std::sort(by_lat_.begin(), by_lat_.end(), [&](std::size_t a, std::size_t b) {
      return ports_[a].location.latitude < ports_[b].location.latitude;
    });
  }

  std::size_t size() const noexcept { return ports_.size(); }
  bool empty() const noexcept { return ports_.empty(); }
  const std::vector<PortRecord>& ports() const noexcept { return ports_; }

  const PortRecord* find(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &ports_[it->second];
  }

  /// Nearest port within max_km (inclusive); ties go to the smallest port_id.
  std::optional<NearestPort> nearest(const GeoPoint& p, double max_km = 50.0) const {
    const double band = rad_to_deg(max_km / kEarthRadiusKm) * (1.0 + 1e-9) + 1e-9;
    auto lo = std::lower_bound(by_lat_.begin(), by_lat_.end(), p.latitude - band,
                               [&](std::size_t i, double lat) { return ports_[i].location.latitude < lat; });
    auto hi = std::upper_bound(lo, by_lat_.end(), p.latitude + band,
                               [&](double lat, std::size_t i) { return lat < ports_[i].location.latitude; });
    // Two passes over the band: minimum distance, then the tie set.
    double best = 0.0;
    bool any = false;
    for (auto it = lo; it != hi; ++it) {
      double d = haversine_km(p, ports_[*it].location);
      if (d <= max_km && (!any || d < best)) {
        best = d;
        any = true;
      }
    }
    if (!any) return std::nullopt;
    NearestPort out;
    for (auto it = lo; it != hi; ++it) {
      const PortRecord& port = ports_[*it];
      double d = haversine_km(p, port.location);
      if (d <= max_km && d <= best + kPortTieToleranceKm && (!out.port || port.port_id < out.port->port_id)) {
        out.port = &port;
        out.distance_km = d;
      }
    }
    return out;
  }

 private:
  std::vector<PortRecord> ports_;
  std::vector<std::size_t> by_lat_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

inline std::optional<NearestPort> nearest_port(const GeoPoint& p, const PortIndex& idx, double max_km = 50.0) {
  return idx.nearest(p, max_km);
}

/// Column names for port CSVs. The defaults cover the NGA World Port Index
/// CSV ("UpdatedPub150"), its older shapefile-derived export, and a plain
/// "port_id,name,country,latitude,longitude" layout.
struct PortColumns {
  std::vector<std::string> id{"port_id", "World Port Index Number", "INDEX_NO", "PORT_ID"};
  std::vector<std::string> name{"name", "Main Port Name", "PORT_NAME"};
  std::vector<std::string> country{"country", "Country Code", "COUNTRY"};
  std::vector<std::string> latitude{"latitude", "Latitude", "LATITUDE", "lat"};
  std::vector<std::string> longitude{"longitude", "Longitude", "LONGITUDE", "lon"};
};

struct PortLoadStats {
  std::size_t rows = 0;
  std::size_t loaded = 0;
  std::size_t invalid = 0;
  std::size_t duplicate_ids = 0;
};

/// Loads a port list. Rows with missing or out-of-range coordinates are
/// skipped and counted; a later row repeating an id is skipped too.
inline PortIndex load_wpi(std::istream& in, const PortColumns& cols = {}, PortLoadStats* stats = nullptr) {
  CsvReader reader(in);
  PortLoadStats st;
  std::vector<PortRecord> ports;
  if (reader.has_header()) {
    const auto& h = reader.header();
    std::size_t c_lat = h.require(cols.latitude, "port latitude");
    std::size_t c_lon = h.require(cols.longitude, "port longitude");
    std::size_t c_id = h.require(cols.id, "port id");
    auto c_name = h.find_any(cols.name);
    auto c_country = h.find_any(cols.country);
    std::unordered_map<std::string, bool> seen;
    std::vector<std::string> row;
    while (reader.next(row)) {
      ++st.rows;
      auto get = [&](std::optional<std::size_t> c) { return c && *c < row.size() ? trim(row[*c]) : std::string(); };
      auto lat = parse_double(get(c_lat));
      auto lon = parse_double(get(c_lon));
      std::string id = get(c_id);
      if (!lat || !lon || id.empty() || std::abs(*lat) > 90.0 || std::abs(*lon) > 180.0) {
        ++st.invalid;
        continue;
      }
      if (seen[id]) {
        ++st.duplicate_ids;
        continue;
      }
      seen[id] = true;
      ports.push_back({id, get(c_name), get(c_country), {*lat, *lon}});
    }
  }
  st.loaded = ports.size();
  if (stats) *stats = st;
  return PortIndex(std::move(ports));
}

}  // namespace aisod

#endif  // AISOD_PORTS_HPP
