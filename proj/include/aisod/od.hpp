#ifndef AISOD_OD_HPP
#define AISOD_OD_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aisod/csv.hpp"
#include "aisod/error.hpp"
#include "aisod/parallel.hpp"
#include "aisod/ports.hpp"
#include "aisod/track.hpp"

namespace aisod {

struct PortVisit {
  std::string port_id;
  std::int64_t first_seen = 0;
  std::int64_t last_seen = 0;
  std::size_t readings = 0;
};

/// Time-ordered port calls of one ship. Consecutive visits name different
/// ports, except where a visit was split because the ship went unseen for
/// longer than split_gap_seconds.
struct PortVisitSequence {
  Mmsi mmsi = 0;
  std::vector<PortVisit> visits;
  std::optional<std::int64_t> split_gap_seconds;
};

/// Associates each positioned reading with its nearest port within max_km,
/// discards the rest, and collapses runs at the same port into one visit.
/// With max_dwell_gap_s set, a silence longer than that splits the visit.
inline PortVisitSequence snap_track(const Track& track, const PortIndex& idx, double max_km = 50.0,
                                    std::optional<std::int64_t> max_dwell_gap_s = std::nullopt) {
  PortVisitSequence seq;
  seq.mmsi = track.mmsi;
  seq.split_gap_seconds = max_dwell_gap_s;
  for (const auto& r : track.readings) {
    if (!r.position_available()) continue;
    auto hit = idx.nearest(point_of(r), max_km);
    if (!hit) continue;
    const std::string& id = hit->port->port_id;
    if (!seq.visits.empty() && seq.visits.back().port_id == id) {
      PortVisit& v = seq.visits.back();
      if (!max_dwell_gap_s || r.timestamp - v.last_seen <= *max_dwell_gap_s) {
        v.last_seen = r.timestamp;
        ++v.readings;
        continue;
      }
    }
    seq.visits.push_back({id, r.timestamp, r.timestamp, 1});
  }
  return seq;
}

using Transition = std::pair<std::string, std::string>;

/// Consecutive visit pairs. Pairs from a port to itself (gap-split visits)
/// are not connections and are dropped. Throws ContractError on a sequence
/// that was not collapsed.
inline std::vector<Transition> transitions(const PortVisitSequence& seq) {
  std::vector<Transition> out;
  for (std::size_t i = 1; i < seq.visits.size(); ++i) {
    const PortVisit& a = seq.visits[i - 1];
    const PortVisit& b = seq.visits[i];
    if (b.first_seen < a.last_seen) throw ContractError("port visits out of time order");
    if (a.port_id == b.port_id) {
      bool split = seq.split_gap_seconds && b.first_seen - a.last_seen > *seq.split_gap_seconds;
      if (!split) throw ContractError("uncollapsed visit sequence: repeated port " + a.port_id);
      continue;
    }
    out.emplace_back(a.port_id, b.port_id);
  }
  return out;
}

struct OdEdge {
  std::size_t trip_count = 0;
  std::set<Mmsi> ships;
  std::size_t unique_ships() const noexcept { return ships.size(); }
};

/// Directed port-to-port trip counts. Edges are ordered by origin id, then
/// destination id, which is also the serialization order.
struct OdMatrix {
  std::map<Transition, OdEdge> edges;
  std::map<std::string, PortRecord> ports;  // labels for every port on an edge

  bool empty() const noexcept { return edges.empty(); }

  void add(Mmsi mmsi, const Transition& t) {
    if (t.first == t.second) throw ContractError("self-loop edge " + t.first);
    OdEdge& e = edges[t];
    ++e.trip_count;
    e.ships.insert(mmsi);
  }

  std::string name_of(const std::string& id) const {
    auto it = ports.find(id);
    return it == ports.end() ? std::string() : it->second.name;
  }
};

/// Snaps every track, then sums transitions per (origin, destination).
inline OdMatrix build_od(const TrackSet& ts, const PortIndex& idx, double max_km = 50.0,
                         unsigned threads = 1,
                         std::optional<std::int64_t> max_dwell_gap_s = std::nullopt) {
  std::vector<const Track*> tracks;
  tracks.reserve(ts.tracks.size());
  for (const auto& [m, t] : ts.tracks) tracks.push_back(&t);
  std::vector<std::vector<Transition>> per_ship(tracks.size());
  parallel_for(tracks.size(), threads, [&](std::size_t i) {
    per_ship[i] = transitions(snap_track(*tracks[i], idx, max_km, max_dwell_gap_s));
  });
  OdMatrix m;
  for (std::size_t i = 0; i < tracks.size(); ++i) {
    for (const auto& t : per_ship[i]) {
      m.add(tracks[i]->mmsi, t);
      for (const auto* id : {&t.first, &t.second}) {
        if (!m.ports.count(*id)) {
          if (const PortRecord* p = idx.find(*id)) m.ports.emplace(*id, *p);
        }
      }
    }
  }
  return m;
}

struct EdgeSummary {
  std::string origin;
  std::string destination;
  std::size_t trip_count = 0;
  std::size_t unique_ships = 0;
};

struct MatrixSummary {
  std::size_t ports = 0;
  std::size_t ships = 0;
  std::size_t trips = 0;
  std::size_t edges = 0;
  std::vector<EdgeSummary> top_edges;  // by trips desc, then origin, destination
};

inline MatrixSummary matrix_stats(const OdMatrix& m, std::size_t top_k = 10) {
  MatrixSummary s;
  std::set<std::string> ports;
  std::set<Mmsi> ships;
  std::vector<EdgeSummary> all;
  for (const auto& [key, e] : m.edges) {
    ports.insert(key.first);
    ports.insert(key.second);
    ships.insert(e.ships.begin(), e.ships.end());
    s.trips += e.trip_count;
    all.push_back({key.first, key.second, e.trip_count, e.unique_ships()});
  }
  s.ports = ports.size();
  s.ships = ships.size();
  s.edges = m.edges.size();
  std::stable_sort(all.begin(), all.end(),
                   [](const EdgeSummary& a, const EdgeSummary& b) { return a.trip_count > b.trip_count; });
  if (all.size() > top_k) all.resize(top_k);
  s.top_edges = std::move(all);
  return s;
}

inline void write_summary(std::ostream& os, const MatrixSummary& s) {
  os << "ports=" << s.ports << '\n'
     << "ships=" << s.ships << '\n'
     << "trips=" << s.trips << '\n'
     << "edges=" << s.edges << '\n';
  for (std::size_t i = 0; i < s.top_edges.size(); ++i) {
    const auto& e = s.top_edges[i];
    os << "top." << i + 1 << '=' << e.origin << "->" << e.destination << " trips=" << e.trip_count
       << " ships=" << e.unique_ships << '\n';
  }
}

inline constexpr std::string_view kOdCsvHeader =
    "origin_port_id,origin_name,dest_port_id,dest_name,trip_count,unique_ships";

inline void write_od_csv(std::ostream& os, const OdMatrix& m) {
  os << kOdCsvHeader << '\n';
  for (const auto& [key, e] : m.edges) {
    os << csv_escape(key.first) << ',' << csv_escape(m.name_of(key.first)) << ','
       << csv_escape(key.second) << ',' << csv_escape(m.name_of(key.second)) << ',' << e.trip_count
       << ',' << e.unique_ships() << '\n';
  }
}

enum class GridValue { Trips, Ships };

/// Dense labeled matrix over every port on an edge, rows = origins.
inline void write_od_grid(std::ostream& os, const OdMatrix& m, GridValue value = GridValue::Trips) {
  std::set<std::string> ids;
  for (const auto& [key, e] : m.edges) {
    ids.insert(key.first);
    ids.insert(key.second);
  }
  os << "origin_port_id,origin_name";
  for (const auto& id : ids) os << ',' << csv_escape(id);
  os << '\n';
  for (const auto& o : ids) {
    os << csv_escape(o) << ',' << csv_escape(m.name_of(o));
    for (const auto& d : ids) {
      auto it = m.edges.find({o, d});
      std::size_t v = 0;
      if (it != m.edges.end()) v = value == GridValue::Trips ? it->second.trip_count : it->second.unique_ships();
      os << ',' << v;
    }
    os << '\n';
  }
}

/// Edge rows read back from an OD CSV; ship identities are not serialized.
struct OdCsvRow {
  EdgeSummary edge;
  std::string origin_name;
  std::string dest_name;
};

inline std::vector<OdCsvRow> read_od_csv(std::istream& in) {
  CsvReader reader(in);
  std::vector<OdCsvRow> out;
  if (!reader.has_header()) return out;
  const auto& h = reader.header();
  std::size_t co = h.require({"origin_port_id"}, "origin_port_id");
  std::size_t cd = h.require({"dest_port_id"}, "dest_port_id");
  std::size_t ct = h.require({"trip_count"}, "trip_count");
  std::size_t cs = h.require({"unique_ships"}, "unique_ships");
  auto con = h.find("origin_name");
  auto cdn = h.find("dest_name");
  std::vector<std::string> row;
  while (reader.next(row)) {
    if (row.size() <= std::max({co, cd, ct, cs})) throw ConfigError("short OD CSV row");
    OdCsvRow r;
    r.edge.origin = row[co];
    r.edge.destination = row[cd];
    auto t = parse_integer<std::size_t>(row[ct]);
    auto s = parse_integer<std::size_t>(row[cs]);
    if (!t || !s) throw ConfigError("non-numeric count in OD CSV");
    r.edge.trip_count = *t;
    r.edge.unique_ships = *s;
    if (con && *con < row.size()) r.origin_name = row[*con];
    if (cdn && *cdn < row.size()) r.dest_name = row[*cdn];
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace aisod

#endif  // AISOD_OD_HPP
