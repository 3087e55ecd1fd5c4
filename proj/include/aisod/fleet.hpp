#ifndef AISOD_FLEET_HPP
#define AISOD_FLEET_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "aisod/csv.hpp"
#include "aisod/error.hpp"
#include "aisod/geo.hpp"
#include "aisod/messages.hpp"
#include "aisod/nmea.hpp"
#include "aisod/ports.hpp"

namespace aisod {

/// A ship with a fixed route through port ids.
struct ScriptedShip {
  Mmsi mmsi = 0;
  int vessel_type = 70;
  std::string name;
  std::vector<std::string> route;
};

struct FleetOptions {
  std::uint64_t seed = 1;
  std::size_t ships = 8;
  std::int64_t start = 1578441600;  // 2020-01-08T00:00:00Z
  std::int64_t cadence_s = 600;
  std::int64_t cadence_jitter_s = 60;
  double dwell_hours_min = 6.0;
  double dwell_hours_max = 18.0;
  double cruise_knots_min = 10.0;
  double cruise_knots_max = 16.0;
  std::size_t visits_min = 2;
  std::size_t visits_max = 4;
  double approach_km = 2.0;  // no cruise-speed reports this close to either end of a leg
  std::optional<std::int64_t> duration_s;  // random routes continue until this much time has passed
  std::int64_t static_interval_s = 6 * 3600;
  std::size_t bad_mmsi = 0;
  std::size_t type_conflict = 0;
  std::size_t teleport = 0;
  std::vector<ScriptedShip> scripted;  // replaces random ships when non-empty
};

struct TruthTransition {
  Mmsi mmsi = 0;
  std::string origin;
  std::string destination;
  std::int64_t depart = 0;
  std::int64_t arrive = 0;
};

struct InjectedAnomaly {
  std::string kind;  // bad_mmsi, type_conflict, teleport
  std::size_t ship_index = 0;
  Mmsi mmsi = 0;
  std::string detail;
};

struct Fleet {
  std::vector<std::string> lines;  // "epoch<TAB>!AIVDM..." in time order
  std::vector<TruthTransition> truth;
  std::vector<InjectedAnomaly> manifest;
  std::size_t position_reports = 0;
};

namespace detail {

/// Uniform double in [0, 1) from the engine's raw output, so results do not
/// depend on the standard library's distribution implementations.
inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
inline double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * unit(rng); }
inline std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::min(n - 1, static_cast<std::size_t>(unit(rng) * static_cast<double>(n)));
}

/// Point at fraction f along the great circle from a to b.
inline GeoPoint interpolate_gc(const GeoPoint& a, const GeoPoint& b, double f) {
  const double p1 = deg_to_rad(a.latitude), l1 = deg_to_rad(a.longitude);
  const double p2 = deg_to_rad(b.latitude), l2 = deg_to_rad(b.longitude);
  const double d = haversine_km(a, b) / kEarthRadiusKm;
  if (d < 1e-12) return a;
  const double A = std::sin((1 - f) * d) / std::sin(d), B = std::sin(f * d) / std::sin(d);
  const double x = A * std::cos(p1) * std::cos(l1) + B * std::cos(p2) * std::cos(l2);
  const double y = A * std::cos(p1) * std::sin(l1) + B * std::cos(p2) * std::sin(l2);
  const double z = A * std::sin(p1) + B * std::sin(p2);
  return {rad_to_deg(std::atan2(z, std::sqrt(x * x + y * y))), rad_to_deg(std::atan2(y, x))};
}

inline double initial_bearing(const GeoPoint& a, const GeoPoint& b) {
  const double p1 = deg_to_rad(a.latitude), p2 = deg_to_rad(b.latitude);
  const double dl = deg_to_rad(b.longitude - a.longitude);
  double brg = rad_to_deg(std::atan2(std::sin(dl) * std::cos(p2),
                                     std::cos(p1) * std::sin(p2) - std::sin(p1) * std::cos(p2) * std::cos(dl)));
  return std::fmod(brg + 360.0, 360.0);
}

struct Emission {
  std::int64_t t;
  std::size_t ship;
  std::size_t order;
  std::vector<std::string> sentences;
};

inline constexpr std::uint16_t kFleetMids[] = {412, 413, 431, 440, 477, 563, 636, 538, 351, 370};
inline constexpr int kFleetTypes[] = {60, 69, 70, 70, 71, 79, 80, 81, 89, 52, 30};

}  // namespace detail

/// Reads "mmsi,vessel_type,name,route" with route as ';'-separated port ids.
inline std::vector<ScriptedShip> read_routes_csv(std::istream& in) {
  CsvReader reader(in);
  std::vector<ScriptedShip> out;
  if (!reader.has_header()) return out;
  const auto& h = reader.header();
  std::size_t cm = h.require({"mmsi"}, "mmsi");
  std::size_t ct = h.require({"vessel_type"}, "vessel_type");
  std::size_t cn = h.require({"name"}, "name");
  std::size_t cr = h.require({"route"}, "route");
  std::vector<std::string> row;
  while (reader.next(row)) {
    if (row.size() <= std::max({cm, ct, cn, cr})) throw ConfigError("short route row");
    ScriptedShip s;
    auto m = parse_integer<Mmsi>(row[cm]);
    auto t = parse_integer<int>(row[ct]);
    if (!m || !t) throw ConfigError("bad mmsi or vessel_type in route file");
    s.mmsi = *m;
    s.vessel_type = *t;
    s.name = trim(row[cn]);
    std::string route = row[cr];
    std::size_t start = 0;
    while (start <= route.size()) {
      auto semi = route.find(';', start);
      std::string id = trim(route.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
      if (!id.empty()) s.route.push_back(id);
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    if (s.route.size() < 1) throw ConfigError("ship " + row[cm] + " has an empty route");
    out.push_back(std::move(s));
  }
  return out;
}

/// Deterministic synthetic fleet moving between ports: dwell at each port at
/// under 1.5 knots, transit along great circles at cruise speed. Ground truth
/// records a transition once the ship reports from the destination port.
inline Fleet generate_fleet(const PortIndex& ports, const FleetOptions& opt) {
  if (ports.size() < 2) throw ConfigError("fleet generation needs at least two ports");
  if (opt.scripted.empty() && opt.ships < 1) throw ConfigError("fleet needs at least one ship");
  if (opt.cadence_s <= opt.cadence_jitter_s) throw ConfigError("cadence must exceed its jitter");
  std::mt19937_64 rng(opt.seed);

  std::vector<ScriptedShip> ships = opt.scripted;
  if (ships.empty()) {
    std::set<Mmsi> used;
    for (std::size_t i = 0; i < opt.ships; ++i) {
      ScriptedShip s;
      do {
        auto mid = detail::kFleetMids[detail::pick(rng, std::size(detail::kFleetMids))];
        s.mmsi = static_cast<Mmsi>(mid) * 1000000U + 100000U + static_cast<Mmsi>(detail::pick(rng, 900000));
      } while (!used.insert(s.mmsi).second);
      s.vessel_type = detail::kFleetTypes[detail::pick(rng, std::size(detail::kFleetTypes))];
      s.name = "SYN VESSEL " + std::to_string(i + 1);
      std::size_t visits = opt.duration_s ? 2
                                          : opt.visits_min + detail::pick(rng, opt.visits_max - opt.visits_min + 1);
      for (std::size_t v = 0; v < visits; ++v) {
        std::size_t p;
        do {
          p = detail::pick(rng, ports.size());
        } while (!s.route.empty() && ports.ports()[p].port_id == s.route.back());
        s.route.push_back(ports.ports()[p].port_id);
      }
      ships.push_back(std::move(s));
    }
  }
  for (const auto& s : ships) {
    for (const auto& id : s.route) {
      if (!ports.find(id)) throw ConfigError("route references unknown port " + id);
    }
  }

  Fleet fleet;
  const std::size_t n_anom = opt.bad_mmsi + opt.type_conflict + opt.teleport;
  if (n_anom > ships.size()) throw ConfigError("more anomalies requested than ships");
  std::vector<std::string> kind(ships.size());
  for (std::size_t i = 0; i < n_anom; ++i) {
    kind[i] = i < opt.bad_mmsi ? "bad_mmsi" : i < opt.bad_mmsi + opt.type_conflict ? "type_conflict" : "teleport";
  }
  for (std::size_t i = 0; i < opt.bad_mmsi; ++i) {
    ships[i].mmsi = 10000000U + static_cast<Mmsi>(detail::pick(rng, 89999999));
  }

  std::vector<detail::Emission> emissions;
  std::size_t order = 0;
  int seq_id = 0;
  auto push_static = [&](std::size_t si, std::int64_t t, int vtype) {
    VesselRecord v;
    v.mmsi = ships[si].mmsi;
    v.vessel_type_code = vtype;
    v.name = ships[si].name;
    v.callsign = "SYN" + std::to_string(si % 10000);
    v.dimensions = ShipDimensions{100, 20, 10, 10};
    v.destination = ships[si].route.back();
    emissions.push_back({t, si, order++,
                         to_sentences(make_static_report(v).encode(), si % 2 ? 'B' : 'A', seq_id)});
    seq_id = (seq_id + 1) % 10;
  };

  for (std::size_t si = 0; si < ships.size(); ++si) {
    ScriptedShip& ship = ships[si];
    const bool class_b = si % 5 == 4;
    std::int64_t t = opt.start + static_cast<std::int64_t>(detail::uniform(rng, 0.0, 6.0 * 3600.0));
    const std::int64_t t_end = opt.duration_s ? opt.start + *opt.duration_s : INT64_MAX;
    std::vector<PositionReading> readings;
    std::size_t visit = 0;
    std::string last_port;
    std::int64_t depart = 0;
    auto step = [&] {
      return opt.cadence_s + static_cast<std::int64_t>(
                                 detail::uniform(rng, -static_cast<double>(opt.cadence_jitter_s),
                                                 static_cast<double>(opt.cadence_jitter_s)));
    };
    const bool open_ended = opt.duration_s && opt.scripted.empty();
    auto extend_route = [&] {
      std::size_t p;
      do {
        p = detail::pick(rng, ports.size());
      } while (ports.ports()[p].port_id == ship.route.back());
      ship.route.push_back(ports.ports()[p].port_id);
    };
    while (t <= t_end) {
      const PortRecord& port = *ports.find(ship.route[visit]);
      const std::int64_t dwell_end =
          t + static_cast<std::int64_t>(detail::uniform(rng, opt.dwell_hours_min, opt.dwell_hours_max) * 3600.0);
      bool first = true;
      for (; t < dwell_end && t <= t_end; t += step()) {
        PositionReading r;
        r.mmsi = ship.mmsi;
        r.timestamp = t;
        r.latitude = port.location.latitude + detail::uniform(rng, -0.0003, 0.0003);
        r.longitude = port.location.longitude + detail::uniform(rng, -0.0003, 0.0003);
        r.sog_knots = std::round(detail::uniform(rng, 0.0, 1.5) * 10.0) / 10.0;
        r.cog_deg = std::round(detail::uniform(rng, 0.0, 359.9) * 10.0) / 10.0;
        readings.push_back(r);
        if (first && !last_port.empty()) {
          fleet.truth.push_back({ship.mmsi, last_port, port.port_id, depart, t});
        }
        first = false;
      }
      if (!first) last_port = port.port_id;
      depart = t;
      if (++visit >= ship.route.size()) {
        if (!open_ended) break;
        extend_route();
      }
      const PortRecord& next = *ports.find(ship.route[visit]);
      const double knots = detail::uniform(rng, opt.cruise_knots_min, opt.cruise_knots_max);
      const double hours = haversine_km(port.location, next.location) / (knots * 1.852);
      const std::int64_t t0 = t;
      const std::int64_t t1 = t0 + std::max<std::int64_t>(1, static_cast<std::int64_t>(hours * 3600.0));
      for (; t < t1 && t <= t_end; t += step()) {
        const double f = static_cast<double>(t - t0) / static_cast<double>(t1 - t0);
        GeoPoint p = detail::interpolate_gc(port.location, next.location, f);
        if (haversine_km(p, port.location) < opt.approach_km || haversine_km(p, next.location) < opt.approach_km) {
          continue;
        }
        PositionReading r;
        r.mmsi = ship.mmsi;
        r.timestamp = t;
        r.latitude = p.latitude;
        r.longitude = p.longitude;
        r.sog_knots = std::round((knots + detail::uniform(rng, -0.5, 0.5)) * 10.0) / 10.0;
        double cog = std::round(detail::initial_bearing(p, next.location) * 10.0) / 10.0;
        r.cog_deg = cog >= 360.0 ? 0.0 : cog;
        readings.push_back(r);
      }
      t = std::max(t, t1);
    }

    if (kind[si] == "teleport" && readings.size() >= 3) {
      PositionReading& r = readings[readings.size() / 2];
      r.latitude += r.latitude > 0 ? -5.0 : 5.0;
      fleet.manifest.push_back({"teleport", si, ship.mmsi, "reading " + std::to_string(readings.size() / 2)});
    } else if (kind[si] == "teleport") {
      throw ConfigError("teleport anomaly needs a ship with at least 3 readings");
    }
    if (kind[si] == "bad_mmsi") fleet.manifest.push_back({"bad_mmsi", si, ship.mmsi, "8-digit mmsi"});

    const std::int64_t first_t = readings.empty() ? t : readings.front().timestamp;
    const std::int64_t last_t = readings.empty() ? t : readings.back().timestamp;
    for (std::int64_t next_static = first_t; next_static <= last_t; next_static += opt.static_interval_s) {
      push_static(si, next_static, ship.vessel_type);
    }
    if (kind[si] == "type_conflict") {
      int other = ship.vessel_type == 80 ? 70 : 80;
      push_static(si, last_t, other);
      fleet.manifest.push_back({"type_conflict", si, ship.mmsi,
                                std::to_string(ship.vessel_type) + " vs " + std::to_string(other)});
    }
    for (const auto& r : readings) {
      BitBuffer bits;
      if (class_b) {
        ClassAPosition a = make_class_a_report(r);
        ClassBPosition b;
        b.mmsi = a.mmsi;
        b.sog = a.sog;
        b.lon = a.lon;
        b.lat = a.lat;
        b.cog = a.cog;
        b.second = a.second;
        b.cs_unit = true;
        bits = b.encode();
      } else {
        bits = make_class_a_report(r, r.sog_knots < 2.0 ? 5 : 0).encode();
      }
      const char channel = order % 2 ? 'B' : 'A';
      emissions.push_back({r.timestamp, si, order++, to_sentences(bits, channel)});
      ++fleet.position_reports;
    }
  }

  std::sort(emissions.begin(), emissions.end(), [](const detail::Emission& a, const detail::Emission& b) {
    return std::tie(a.t, a.ship, a.order) < std::tie(b.t, b.ship, b.order);
  });
  fleet.lines.reserve(emissions.size());
  for (const auto& e : emissions) {
    for (const auto& s : e.sentences) fleet.lines.push_back(std::to_string(e.t) + '\t' + s);
  }
  return fleet;
}

inline void write_fleet_nmea(std::ostream& os, const Fleet& f) {
  for (const auto& l : f.lines) os << l << '\n';
}

inline void write_truth_csv(std::ostream& os, const Fleet& f) {
  os << "mmsi,origin_port_id,dest_port_id,depart_ts,arrive_ts\n";
  for (const auto& t : f.truth) {
    os << t.mmsi << ',' << csv_escape(t.origin) << ',' << csv_escape(t.destination) << ',' << t.depart
       << ',' << t.arrive << '\n';
  }
}

inline void write_manifest_csv(std::ostream& os, const Fleet& f) {
  os << "kind,ship_index,mmsi,detail\n";
  for (const auto& a : f.manifest) {
    os << a.kind << ',' << a.ship_index << ',' << a.mmsi << ',' << csv_escape(a.detail) << '\n';
  }
}

}  // namespace aisod

#endif  // AISOD_FLEET_HPP
