#ifndef AISOD_PIPELINE_HPP
#define AISOD_PIPELINE_HPP

#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "aisod/cleaning.hpp"
#include "aisod/decoder.hpp"
#include "aisod/error.hpp"
#include "aisod/geo.hpp"
#include "aisod/od.hpp"
#include "aisod/parallel.hpp"
#include "aisod/ports.hpp"
#include "aisod/track.hpp"

namespace aisod {

/// A failure inside one pipeline stage; what() is prefixed with the stage.
class StageError : public std::runtime_error {
 public:
  enum class Kind { Io, Config };
  StageError(std::string stage, Kind kind, const std::string& msg)
      : std::runtime_error("[" + stage + "] " + msg), stage_(std::move(stage)), kind_(kind) {}
  const std::string& stage() const noexcept { return stage_; }
  Kind kind() const noexcept { return kind_; }

 private:
  std::string stage_;
  Kind kind_;
};

/// True when the stream looks like NMEA sentences (optionally timestamp
/// prefixed or tag-blocked) rather than CSV.
inline bool looks_like_nmea(std::string_view first_line) {
  auto pos = first_line.find_first_not_of(" \t");
  if (pos == std::string_view::npos) return false;
  char c = first_line[pos];
  if (c == '!' || c == '\\') return true;
  auto bang = first_line.find('!');
  if (bang == std::string_view::npos) return false;
  auto prefix = first_line.substr(pos, bang - pos);
  return prefix.find_first_not_of("0123456789.\t ") == std::string_view::npos;
}

struct LoadedInput {
  TrackSet tracks;
  std::optional<DecodeStats> decode;  // set for NMEA inputs
};

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

/// Loads one NMEA or CSV file into a TrackSet.
inline LoadedInput load_input(const std::string& path, const ColumnMapping& columns = {},
                              ReassemblyWindow window = {}) {
  std::ifstream in = open_input(path);
  std::string first;
  while (std::getline(in, first) && trim(first).empty()) {
  }
  in.clear();
  in.seekg(0);
  LoadedInput out;
  if (looks_like_nmea(first)) {
    DecodeStats stats;
    DecodedBatch batch = decode_stream(in, &stats, window);
    out.tracks = build_trackset(std::move(batch.readings), path);
    attach_vessels(out.tracks, std::move(batch.vessels));
    out.decode = stats;
  } else {
    out.tracks = ingest_csv(in, columns, path);
  }
  if (in.bad()) throw IoError("read error on " + path);
  return out;
}

inline std::vector<VesselRecord> load_vessels(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_vessels_csv(in);
}

/// Loads inputs (one shard per file, in parallel) and merges them in order.
inline TrackSet load_inputs(const std::vector<std::string>& paths, const ColumnMapping& columns,
                            const std::vector<std::string>& vessel_paths, unsigned threads,
                            DecodeStats* decode_total = nullptr) {
  std::vector<LoadedInput> shards(paths.size());
  parallel_for(paths.size(), threads, [&](std::size_t i) { shards[i] = load_input(paths[i], columns); });
  TrackSet ts;
  DecodeStats total;
  for (std::size_t i = 0; i < shards.size(); ++i) {
    auto& s = shards[i];
    ts = i == 0 ? std::move(s.tracks) : merge(ts, s.tracks);
    if (s.decode) {
      const DecodeStats& d = *s.decode;
      total.lines += d.lines;
      total.sentences += d.sentences;
      total.messages += d.messages;
      total.checksum_failures += d.checksum_failures;
      total.parse_errors += d.parse_errors;
      total.truncated += d.truncated;
      total.incomplete_messages += d.incomplete_messages;
      total.duplicate_fragments += d.duplicate_fragments;
      total.position_reports += d.position_reports;
      total.static_reports += d.static_reports;
      total.position_unavailable += d.position_unavailable;
      total.missing_timestamp += d.missing_timestamp;
      for (const auto& [t, c] : d.unsupported_types) total.unsupported_types[t] += c;
    }
  }
  std::vector<VesselRecord> vessels;
  for (const auto& p : vessel_paths) {
    auto v = load_vessels(p);
    vessels.insert(vessels.end(), v.begin(), v.end());
  }
  if (!vessels.empty()) attach_vessels(ts, std::move(vessels));
  if (decode_total) *decode_total = total;
  return ts;
}

inline PortIndex load_ports(const std::string& path, const PortColumns& cols = {},
                            PortLoadStats* stats = nullptr) {
  std::ifstream in = open_input(path);
  return load_wpi(in, cols, stats);
}

struct PipelineConfig {
  std::vector<std::string> inputs;
  std::vector<std::string> vessel_inputs;
  ColumnMapping columns;
  FilterConfig filter;
  bool skip_clean = false;
  std::optional<SelectionQuery> query;  // absent: every cleaned ship, unfiltered
  std::string ports_path;
  PortColumns port_columns;
  double snap_max_km = 50.0;
  std::optional<std::int64_t> max_dwell_gap_s;
  unsigned threads = 1;

  void validate() const {
    if (inputs.empty()) throw ConfigError("no input files");
    for (const auto& p : inputs) {
      if (!std::filesystem::exists(p)) throw IoError("input not found: " + p);
    }
    for (const auto& p : vessel_inputs) {
      if (!std::filesystem::exists(p)) throw IoError("vessel file not found: " + p);
    }
    if (ports_path.empty()) throw ConfigError("no ports file given");
    if (!std::filesystem::exists(ports_path)) throw IoError("ports file not found: " + ports_path);
    filter.validate();
    if (query) query->validate();
    if (!(snap_max_km > 0.0)) throw ConfigError("snapping distance must be > 0");
    if (max_dwell_gap_s && *max_dwell_gap_s <= 0) throw ConfigError("max dwell gap must be > 0");
  }
};

struct PipelineResult {
  DecodeStats decode;
  IngestStats ingest;
  FilterReport filter;
  std::set<Mmsi> selected;
  TrackSet extracted;
  OdMatrix matrix;
  MatrixSummary summary;
};

/// ingest -> clean -> select -> extract -> build OD.
inline PipelineResult run_pipeline(const PipelineConfig& cfg) {
  auto stage = [](const char* name, auto&& fn) {
    try {
      return fn();
    } catch (const IoError& e) {
      throw StageError(name, StageError::Kind::Io, e.what());
    } catch (const ConfigError& e) {
      throw StageError(name, StageError::Kind::Config, e.what());
    } catch (const ContractError& e) {
      throw StageError(name, StageError::Kind::Config, e.what());
    }
  };
  stage("config", [&] { cfg.validate(); return 0; });
  PipelineResult res;
  PortIndex ports = stage("ports", [&] { return load_ports(cfg.ports_path, cfg.port_columns); });
  TrackSet ts = stage("ingest", [&] {
    return load_inputs(cfg.inputs, cfg.columns, cfg.vessel_inputs, cfg.threads, &res.decode);
  });
  res.ingest = ts.stats;
  if (!cfg.skip_clean) {
    auto cleaned = stage("clean", [&] { return clean(ts, cfg.filter, cfg.threads); });
    ts = std::move(cleaned.first);
    res.filter = std::move(cleaned.second);
  } else {
    res.filter.input_ships = res.filter.kept_ships = ts.tracks.size();
    res.filter.input_readings = res.filter.kept_readings = ts.reading_count();
  }
  if (cfg.query) {
    res.selected = stage("select", [&] { return select_mmsis(ts, *cfg.query, cfg.threads); });
    res.extracted = stage("extract", [&] { return extract_window(ts, res.selected, *cfg.query); });
  } else {
    for (const auto& [m, t] : ts.tracks) res.selected.insert(m);
    res.extracted = std::move(ts);
  }
  res.matrix = stage("od", [&] {
    return build_od(res.extracted, ports, cfg.snap_max_km, cfg.threads, cfg.max_dwell_gap_s);
  });
  res.summary = matrix_stats(res.matrix);
  return res;
}

}  // namespace aisod

#endif  // AISOD_PIPELINE_HPP
