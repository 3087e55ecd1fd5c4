#ifndef AISOD_CLEANING_HPP
#define AISOD_CLEANING_HPP

#include <array>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aisod/error.hpp"
#include "aisod/geo.hpp"
#include "aisod/parallel.hpp"
#include "aisod/track.hpp"

namespace aisod {

struct FilterConfig {
  int min_mmsi_digits = 9;
  double micro_move_threshold_deg = 0.001;
  double max_jump_rate_deg_per_hr = 1.7;  // roughly 100 knots
  bool drop_invalid_mmsi = true;
  bool drop_conflicting_vessel_types = true;
  bool drop_micro_moves = true;
  bool drop_speed_jumps = true;

  void validate() const {
    if (min_mmsi_digits <= 0 || min_mmsi_digits > 10) throw ConfigError("min_mmsi_digits must be in 1..10");
    if (!(micro_move_threshold_deg > 0.0)) throw ConfigError("micro move threshold must be > 0");
    if (!(max_jump_rate_deg_per_hr > 0.0)) throw ConfigError("max jump rate must be > 0");
  }

  std::uint64_t min_mmsi_value() const noexcept {
    std::uint64_t v = 1;
    for (int i = 1; i < min_mmsi_digits; ++i) v *= 10;
    return min_mmsi_digits <= 1 ? 0 : v;
  }
};

enum class FilterRule { InvalidMmsi, ConflictingType, MicroMove, SpeedJump };

inline constexpr std::array kFilterRules = {FilterRule::InvalidMmsi, FilterRule::ConflictingType,
                                            FilterRule::MicroMove, FilterRule::SpeedJump};

inline constexpr const char* rule_name(FilterRule r) noexcept {
  switch (r) {
    case FilterRule::InvalidMmsi: return "invalid_mmsi";
    case FilterRule::ConflictingType: return "conflicting_type";
    case FilterRule::MicroMove: return "micro_move";
    case FilterRule::SpeedJump: return "speed_jump";
  }
  return "unknown";
}

struct RuleCounts {
  std::size_t ships_dropped = 0;
  std::size_t readings_dropped = 0;
  friend bool operator==(const RuleCounts&, const RuleCounts&) = default;
};

/// Drop accounting for one or more passes. When ships are dropped whole,
/// their readings count under readings_dropped too, so
/// input_readings == kept_readings + sum of readings_dropped.
struct FilterReport {
  std::size_t input_ships = 0;
  std::size_t input_readings = 0;
  std::size_t kept_ships = 0;
  std::size_t kept_readings = 0;
  std::map<FilterRule, RuleCounts> rules;

  const RuleCounts& operator[](FilterRule r) const {
    static const RuleCounts zero{};
    auto it = rules.find(r);
    return it == rules.end() ? zero : it->second;
  }

  std::size_t total_readings_dropped() const {
    std::size_t n = 0;
    for (const auto& [r, c] : rules) n += c.readings_dropped;
    return n;
  }
  std::size_t total_ships_dropped() const {
    std::size_t n = 0;
    for (const auto& [r, c] : rules) n += c.ships_dropped;
    return n;
  }

  /// Chains a later pass's report onto this one.
  void then(const FilterReport& next) {
    for (const auto& [r, c] : next.rules) {
      rules[r].ships_dropped += c.ships_dropped;
      rules[r].readings_dropped += c.readings_dropped;
    }
    kept_ships = next.kept_ships;
    kept_readings = next.kept_readings;
  }
};

inline void write_report_kv(std::ostream& os, const FilterReport& r) {
  os << "input_ships=" << r.input_ships << '\n' << "input_readings=" << r.input_readings << '\n';
  for (FilterRule rule : kFilterRules) {
    os << rule_name(rule) << ".ships_dropped=" << r[rule].ships_dropped << '\n'
       << rule_name(rule) << ".readings_dropped=" << r[rule].readings_dropped << '\n';
  }
  os << "kept_ships=" << r.kept_ships << '\n' << "kept_readings=" << r.kept_readings << '\n';
}

inline void write_report_csv(std::ostream& os, const FilterReport& r) {
  os << "rule,ships_dropped,readings_dropped\n";
  for (FilterRule rule : kFilterRules) {
    os << rule_name(rule) << ',' << r[rule].ships_dropped << ',' << r[rule].readings_dropped << '\n';
  }
  os << "total," << r.total_ships_dropped() << ',' << r.total_readings_dropped() << '\n';
  os << "kept," << r.kept_ships << ',' << r.kept_readings << '\n';
}

namespace detail {

inline FilterReport start_report(const TrackSet& ts) {
  FilterReport r;
  r.input_ships = ts.tracks.size();
  r.input_readings = ts.reading_count();
  return r;
}

inline void finish_report(FilterReport& r, const TrackSet& out) {
  r.kept_ships = out.tracks.size();
  r.kept_readings = out.reading_count();
}

inline TrackSet shell_of(const TrackSet& ts) {
  TrackSet out;
  out.provenance = ts.provenance;
  out.stats = ts.stats;
  return out;
}

/// Keeps whole ships for which keep(track) holds; the rest count against `rule`.
template <typename Pred>
std::pair<TrackSet, FilterReport> filter_ships(const TrackSet& ts, FilterRule rule, Pred keep) {
  FilterReport report = start_report(ts);
  TrackSet out = shell_of(ts);
  RuleCounts& counts = report.rules[rule];
  for (const auto& [mmsi, track] : ts.tracks) {
    if (keep(track)) {
      out.tracks.emplace(mmsi, track);
    } else {
      ++counts.ships_dropped;
      counts.readings_dropped += track.readings.size();
    }
  }
  for (const auto& v : ts.vessel_observations) {
    if (out.tracks.count(v.mmsi) || !ts.tracks.count(v.mmsi)) out.vessel_observations.push_back(v);
  }
  finish_report(report, out);
  return {std::move(out), std::move(report)};
}

inline std::vector<const Track*> track_list(const TrackSet& ts) {
  std::vector<const Track*> v;
  v.reserve(ts.tracks.size());
  for (const auto& [m, t] : ts.tracks) v.push_back(&t);
  return v;
}

}  // namespace detail

/// Drops ships whose MMSI has fewer than cfg.min_mmsi_digits decimal digits.
inline std::pair<TrackSet, FilterReport> filter_invalid_mmsi(const TrackSet& ts, const FilterConfig& cfg) {
  cfg.validate();
  const std::uint64_t min_value = cfg.min_mmsi_value();
  return detail::filter_ships(ts, FilterRule::InvalidMmsi,
                              [&](const Track& t) { return t.mmsi >= min_value; });
}

/// MMSIs reported with two or more distinct vessel types. Type code 0 means
/// "not available" and is not evidence of a conflict.
inline std::set<Mmsi> conflicting_mmsis(std::span<const VesselRecord> static_records) {
  std::map<Mmsi, std::set<int>> types;
  for (const auto& v : static_records) {
    if (v.vessel_type_code != 0) types[v.mmsi].insert(v.vessel_type_code);
  }
  std::set<Mmsi> out;
  for (const auto& [m, s] : types) {
    if (s.size() >= 2) out.insert(m);
  }
  return out;
}

/// Drops ships observed with more than one vessel type. Ships with no static
/// record pass.
inline std::pair<TrackSet, FilterReport> filter_conflicting_vessel_type(
    const TrackSet& ts, std::span<const VesselRecord> static_records) {
  const std::set<Mmsi> conflicts = conflicting_mmsis(static_records);
  return detail::filter_ships(ts, FilterRule::ConflictingType,
                              [&](const Track& t) { return !conflicts.count(t.mmsi); });
}

/// Micro-move filter for one track: a reading is dropped when it moved less
/// than the threshold on both axes relative to the last kept reading.
/// Readings without a position pass through and never serve as reference.
inline std::vector<PositionReading> drop_micro_moves(const std::vector<PositionReading>& readings,
                                                     double threshold_deg) {
  std::vector<PositionReading> kept;
  kept.reserve(readings.size());
  const PositionReading* ref = nullptr;
  for (const auto& r : readings) {
    if (!r.position_available()) {
      kept.push_back(r);
      continue;
    }
    if (ref) {
      const double dlat = std::abs(r.latitude - ref->latitude);
      const double dlon = std::abs(wrapped_lon_delta(ref->longitude, r.longitude));
      if (dlat < threshold_deg && dlon < threshold_deg) continue;
    }
    kept.push_back(r);
    ref = &r;
  }
  return kept;
}

inline std::pair<TrackSet, FilterReport> drop_micro_moves(const TrackSet& ts, const FilterConfig& cfg,
                                                          unsigned threads = 1) {
  cfg.validate();
  FilterReport report = detail::start_report(ts);
  auto tracks = detail::track_list(ts);
  std::vector<std::vector<PositionReading>> kept(tracks.size());
  parallel_for(tracks.size(), threads, [&](std::size_t i) {
    kept[i] = drop_micro_moves(tracks[i]->readings, cfg.micro_move_threshold_deg);
  });
  TrackSet out = detail::shell_of(ts);
  out.vessel_observations = ts.vessel_observations;
  RuleCounts& counts = report.rules[FilterRule::MicroMove];
  for (std::size_t i = 0; i < tracks.size(); ++i) {
    counts.readings_dropped += tracks[i]->readings.size() - kept[i].size();
    Track t;
    t.mmsi = tracks[i]->mmsi;
    t.vessel = tracks[i]->vessel;
    t.readings = std::move(kept[i]);
    out.tracks.emplace(t.mmsi, std::move(t));
  }
  detail::finish_report(report, out);
  return {std::move(out), std::move(report)};
}

/// True when consecutive positioned readings move faster than the cap on
/// either axis (degrees per hour; longitude difference wrapped). A nonzero
/// move with no elapsed time counts as an infinite rate.
inline bool has_speed_jump(const std::vector<PositionReading>& readings, double max_rate_deg_per_hr) {
  const PositionReading* prev = nullptr;
  for (const auto& r : readings) {
    if (!r.position_available()) continue;
    if (prev) {
      const double disp = std::max(std::abs(r.latitude - prev->latitude),
                                   std::abs(wrapped_lon_delta(prev->longitude, r.longitude)));
      const std::int64_t dt = r.timestamp - prev->timestamp;
      if (dt <= 0) {
        if (disp > 0.0) return true;
      } else if (disp * 3600.0 / static_cast<double>(dt) > max_rate_deg_per_hr) {
        return true;
      }
    }
    prev = &r;
  }
  return false;
}

inline std::pair<TrackSet, FilterReport> filter_speed_jumps(const TrackSet& ts, const FilterConfig& cfg,
                                                            unsigned threads = 1) {
  cfg.validate();
  auto tracks = detail::track_list(ts);
  std::vector<char> jump(tracks.size(), 0);
  parallel_for(tracks.size(), threads, [&](std::size_t i) {
    jump[i] = has_speed_jump(tracks[i]->readings, cfg.max_jump_rate_deg_per_hr);
  });
  std::set<Mmsi> offenders;
  for (std::size_t i = 0; i < tracks.size(); ++i) {
    if (jump[i]) offenders.insert(tracks[i]->mmsi);
  }
  return detail::filter_ships(ts, FilterRule::SpeedJump,
                              [&](const Track& t) { return !offenders.count(t.mmsi); });
}

/// All enabled passes in order: invalid MMSI, conflicting vessel type,
/// micro-moves, speed jumps. Static records come from the TrackSet.
inline std::pair<TrackSet, FilterReport> clean(const TrackSet& ts, const FilterConfig& cfg,
                                               unsigned threads = 1) {
  cfg.validate();
  FilterReport report = detail::start_report(ts);
  TrackSet cur = ts;
  for (FilterRule rule : kFilterRules) report.rules[rule];
  auto step = [&](std::pair<TrackSet, FilterReport> r) {
    report.then(r.second);
    cur = std::move(r.first);
  };
  if (cfg.drop_invalid_mmsi) step(filter_invalid_mmsi(cur, cfg));
  if (cfg.drop_conflicting_vessel_types) {
    auto obs = cur.vessel_observations;
    step(filter_conflicting_vessel_type(cur, obs));
  }
  if (cfg.drop_micro_moves) step(drop_micro_moves(cur, cfg, threads));
  if (cfg.drop_speed_jumps) step(filter_speed_jumps(cur, cfg, threads));
  detail::finish_report(report, cur);
  return {std::move(cur), std::move(report)};
}

}  // namespace aisod

#endif  // AISOD_CLEANING_HPP
