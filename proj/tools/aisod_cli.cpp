// aisod command line: decode, ingest, clean, select, od, tracks, generate, stats.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aisod.hpp"

namespace {

enum ExitCode { kOk = 0, kIoError = 1, kConfigError = 2, kEmptyResult = 3 };

/// Output file or stdout ("-" or empty path).
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw aisod::IoError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  void close() {
    if (file_.is_open()) {
      file_.close();
      if (file_.fail()) throw aisod::IoError("write failed");
    } else {
      std::cout.flush();
    }
  }

 private:
  std::ofstream file_;
};

struct GlobalOptions {
  std::string config;
  unsigned threads = 0;
  bool verbose = false;
};

struct InputOptions {
  std::vector<std::string> inputs;
  std::vector<std::string> vessels;
  std::map<std::string, std::string> columns;

  void add_to(CLI::App* app) {
    app->add_option("inputs", inputs, "Position CSV or NMEA files");
    app->add_option("-i,--input", inputs, "Additional input file");
    app->add_option("--vessels", vessels, "Vessel (static) CSV files");
    for (const char* key : {"mmsi", "timestamp", "lat", "lon", "sog", "cog", "msg_type", "vessel_type"}) {
      app->add_option_function<std::string>(std::string("--col-") + key,
                                            [this, key](const std::string& v) { columns[key] = v; },
                                            std::string("CSV header for the ") + key + " column");
    }
  }

  aisod::ColumnMapping mapping() const {
    aisod::ColumnMapping m;
    for (const auto& [k, v] : columns) m.set(k, v);
    return m;
  }

  void require() const {
    if (inputs.empty()) throw aisod::ConfigError("no input files given");
  }
};

struct FilterOptions {
  aisod::FilterConfig cfg;
  bool no_invalid_mmsi = false, no_type_conflict = false, no_micro_moves = false, no_speed_jumps = false;

  void add_to(CLI::App* app) {
    app->add_option("--min-mmsi-digits", cfg.min_mmsi_digits, "Minimum MMSI digit count")->capture_default_str();
    app->add_option("--micro-move-deg", cfg.micro_move_threshold_deg, "Micro-move threshold (degrees)")
        ->capture_default_str();
    app->add_option("--max-jump-deg-hr", cfg.max_jump_rate_deg_per_hr, "Jump rate cap (degrees/hour)")
        ->capture_default_str();
    app->add_flag("--no-invalid-mmsi", no_invalid_mmsi, "Disable the MMSI length rule");
    app->add_flag("--no-type-conflict", no_type_conflict, "Disable the conflicting vessel type rule");
    app->add_flag("--no-micro-moves", no_micro_moves, "Disable the micro-move rule");
    app->add_flag("--no-speed-jumps", no_speed_jumps, "Disable the position jump rule");
  }

  aisod::FilterConfig config() const {
    aisod::FilterConfig c = cfg;
    c.drop_invalid_mmsi = !no_invalid_mmsi;
    c.drop_conflicting_vessel_types = !no_type_conflict;
    c.drop_micro_moves = !no_micro_moves;
    c.drop_speed_jumps = !no_speed_jumps;
    c.validate();
    return c;
  }
};

struct QueryOptions {
  std::optional<double> lat, lon;
  double radius_km = 50.0;
  double max_knots = 2.0;
  std::string from, to;
  std::string fence;
  std::string fences_file;

  void add_to(CLI::App* app) {
    app->add_option("--lat", lat, "Fence center latitude");
    app->add_option("--lon", lon, "Fence center longitude");
    app->add_option("--radius-km", radius_km, "Fence radius (km, inclusive)")->capture_default_str();
    app->add_option("--max-knots", max_knots, "Speed cap (knots, strict)")->capture_default_str();
    app->add_option("--from", from, "Window start (epoch seconds or RFC 3339)");
    app->add_option("--to", to, "Window end, inclusive");
    app->add_option("--fence", fence, "Named fence preset (wuhan, canary, or from --fences)");
    app->add_option("--fences", fences_file, "File of named fences");
  }

  bool given() const { return lat || lon || !fence.empty(); }

  aisod::SelectionQuery query() const {
    aisod::SelectionQuery q;
    if (!fence.empty()) {
      auto presets = aisod::builtin_fences();
      if (!fences_file.empty()) {
        std::ifstream in(fences_file);
        if (!in) throw aisod::IoError("cannot open " + fences_file);
        for (auto& [k, v] : aisod::parse_fences(in)) presets[k] = v;
      }
      auto it = presets.find(fence);
      if (it == presets.end()) throw aisod::ConfigError("unknown fence preset '" + fence + "'");
      q.fence = it->second;
      if (lat || lon) throw aisod::ConfigError("--fence and --lat/--lon are exclusive");
    } else {
      if (!lat || !lon) throw aisod::ConfigError("both --lat and --lon are required");
      q.fence = {{*lat, *lon}, radius_km};
    }
    q.max_speed_knots = max_knots;
    if (from.empty() || to.empty()) throw aisod::ConfigError("--from and --to are required");
    auto s = aisod::parse_timestamp(from), e = aisod::parse_timestamp(to);
    if (!s || !e) throw aisod::ConfigError("cannot parse --from/--to timestamps");
    q.window = {*s, *e};
    q.validate();
    return q;
  }
};

std::vector<aisod::Mmsi> parse_mmsi_list(const std::vector<std::string>& items) {
  std::vector<aisod::Mmsi> out;
  for (const auto& item : items) {
    std::vector<std::string> parts;
    aisod::split_csv_line(item, parts);
    for (const auto& p : parts) {
      if (aisod::trim(p).empty()) continue;
      auto m = aisod::parse_integer<aisod::Mmsi>(aisod::trim(p));
      if (!m) throw aisod::ConfigError("bad MMSI '" + p + "'");
      out.push_back(*m);
    }
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  if (path.empty()) return;
  Output out(path);
  out.stream() << content;
  out.close();
}

template <typename Fn>
std::string render(Fn&& fn) {
  std::ostringstream os;
  fn(os);
  return os.str();
}

// --- config file handling --------------------------------------------------

/// key=value lines; "[name]" starts a section that applies only to that
/// subcommand. Keys are long option names without the leading dashes.
std::map<std::string, std::vector<std::pair<std::string, std::string>>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw aisod::IoError("cannot open config " + path);
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> out;
  std::string section, line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = aisod::trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = aisod::trim(line.substr(1, line.size() - 2));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw aisod::ConfigError(path + ":" + std::to_string(n) + ": expected key = value");
    out[section].emplace_back(aisod::trim(line.substr(0, eq)), aisod::trim(line.substr(eq + 1)));
  }
  return out;
}

const std::set<std::string> kSubcommands = {"decode", "ingest", "clean", "select", "od", "tracks", "generate", "stats"};

/// Appends config entries as "--key=value" unless the option was given on the
/// command line, so explicit flags win.
std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::string config;
  std::string sub;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) config = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) config = args[i].substr(9);
    else if (sub.empty() && kSubcommands.count(args[i])) sub = args[i];
  }
  if (config.empty()) return args;
  auto sections = read_config(config);
  auto given = [&](const std::string& key) {
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == "--" + key || a.rfind("--" + key + "=", 0) == 0;
    });
  };
  std::vector<std::string> extra;
  std::vector<std::string> applicable{""};
  if (!sub.empty()) applicable.push_back(sub);
  for (const auto& section : applicable) {
    auto it = sections.find(section);
    if (it == sections.end()) continue;
    for (const auto& [k, v] : it->second) {
      if (!given(k)) extra.push_back("--" + k + "=" + v);
    }
  }
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> raw(argv, argv + argc);
  try {
    raw = apply_config(raw);
  } catch (const aisod::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  }

  CLI::App app{"AIS trajectories to origin-destination matrices", "aisod_cli"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--config", g.config, "key=value config file ([subcommand] sections allowed)");
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_flag("-v,--verbose", g.verbose, "Print stage statistics to stderr");

  // decode
  auto* decode = app.add_subcommand("decode", "Decode AIVDM/AIVDO sentences to a readings CSV");
  std::string dec_in = "-", dec_out = "-", dec_static, dec_stats;
  std::size_t win_sentences = 64;
  std::int64_t win_seconds = 60;
  decode->add_option("input", dec_in, "NMEA file ('-' for stdin)");
  decode->add_option("-o,--out", dec_out, "Readings CSV ('-' for stdout)");
  decode->add_option("--static-out", dec_static, "Vessel records CSV");
  decode->add_option("--stats-out", dec_stats, "Decode statistics (key=value)");
  decode->add_option("--window-sentences", win_sentences, "Multipart reassembly window (sentences)")
      ->capture_default_str();
  decode->add_option("--window-seconds", win_seconds, "Multipart reassembly window (seconds)")
      ->capture_default_str();

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Group readings into time-ordered tracks");
  InputOptions ing_in;
  std::string ing_out = "-", ing_stats;
  ing_in.add_to(ingest);
  ingest->add_option("-o,--out", ing_out, "Normalized readings CSV");
  ingest->add_option("--stats-out", ing_stats, "Ingest statistics (key=value)");

  // clean
  auto* cleancmd = app.add_subcommand("clean", "Apply the MMSI, vessel type, micro-move and jump filters");
  InputOptions cl_in;
  FilterOptions cl_f;
  std::string cl_out = "-", cl_report, cl_report_csv;
  cl_in.add_to(cleancmd);
  cl_f.add_to(cleancmd);
  cleancmd->add_option("-o,--out", cl_out, "Cleaned readings CSV");
  cleancmd->add_option("--report", cl_report, "Filter report (key=value)");
  cleancmd->add_option("--report-csv", cl_report_csv, "Filter report (CSV)");

  // select
  auto* select = app.add_subcommand("select", "Two-stage geofence, speed and window selection");
  InputOptions sel_in;
  QueryOptions sel_q;
  std::string sel_out = "-", sel_mmsi_out;
  sel_in.add_to(select);
  sel_q.add_to(select);
  select->add_option("-o,--out", sel_out, "Extracted readings CSV");
  select->add_option("--mmsi-out", sel_mmsi_out, "Selected MMSIs, one per line");

  // od
  auto* od = app.add_subcommand("od", "Full pipeline: ingest, clean, select, extract, OD matrix");
  InputOptions od_in;
  FilterOptions od_f;
  QueryOptions od_q;
  std::string od_ports, od_out = "-", od_format = "csv", od_grid_value = "trips", od_report, od_report_csv,
                        od_stats;
  std::map<std::string, std::string> port_cols;
  double snap_km = 50.0;
  std::optional<double> dwell_gap_hours;
  bool no_clean = false;
  od_in.add_to(od);
  od_f.add_to(od);
  od_q.add_to(od);
  od->add_option("--ports", od_ports, "Port list CSV (World Port Index layout or port_id,name,...)")
      ->required();
  for (const char* key : {"id", "name", "country", "lat", "lon"}) {
    od->add_option_function<std::string>(std::string("--port-col-") + key,
                                         [&port_cols, key](const std::string& v) { port_cols[key] = v; },
                                         std::string("Ports CSV header for ") + key);
  }
  od->add_option("--snap-km", snap_km, "Maximum distance to a port (km)")->capture_default_str();
  od->add_option("--max-dwell-gap", dwell_gap_hours, "Split a port visit after this many unseen hours");
  od->add_flag("--no-clean", no_clean, "Input is already cleaned");
  od->add_option("--format", od_format, "csv or grid")->check(CLI::IsMember({"csv", "grid"}));
  od->add_option("--grid-value", od_grid_value, "Grid cell value")->check(CLI::IsMember({"trips", "ships"}));
  od->add_option("-o,--out", od_out, "OD matrix output");
  od->add_option("--report", od_report, "Filter report (key=value)");
  od->add_option("--report-csv", od_report_csv, "Filter report (CSV)");
  od->add_option("--stats-out", od_stats, "Matrix summary (key=value)");

  // tracks
  auto* tracks = app.add_subcommand("tracks", "Export vessel paths as GeoJSON or CSV");
  InputOptions tr_in;
  std::vector<std::string> tr_mmsi;
  std::string tr_out = "-", tr_format = "geojson";
  double gap_hours = 6.0;
  tr_in.add_to(tracks);
  tracks->add_option("--mmsi", tr_mmsi, "MMSI list (comma separated)")->required();
  tracks->add_option("--out", tr_out, "Output file");
  tracks->add_option("--gap-hours", gap_hours, "Split segments at gaps longer than this")->capture_default_str();
  tracks->add_option("--format", tr_format, "geojson or csv")->check(CLI::IsMember({"geojson", "csv"}));

  // generate
  auto* gen = app.add_subcommand("generate", "Synthetic fleet: NMEA stream plus ground truth");
  aisod::FleetOptions fo;
  std::string gen_ports, gen_out = "-", gen_truth, gen_manifest, gen_routes, gen_start;
  std::optional<double> gen_days;
  gen->add_option("--seed", fo.seed, "Random seed")->capture_default_str();
  gen->add_option("--ships", fo.ships, "Number of ships")->capture_default_str()->check(CLI::PositiveNumber);
  gen->add_option("--ports", gen_ports, "Port list CSV")->required();
  gen->add_option("--routes", gen_routes, "Scripted routes CSV (mmsi,vessel_type,name,route)")
      ;
  gen->add_option("--out", gen_out, "NMEA output");
  gen->add_option("--truth", gen_truth, "Ground-truth transitions CSV");
  gen->add_option("--manifest", gen_manifest, "Injected anomalies CSV");
  gen->add_option("--start", gen_start, "Start time (epoch or RFC 3339)");
  gen->add_option("--days", gen_days, "Keep ships moving for this many days");
  gen->add_option("--cadence-s", fo.cadence_s, "Seconds between reports")->capture_default_str();
  gen->add_option("--jitter-s", fo.cadence_jitter_s, "Cadence jitter (seconds)")->capture_default_str();
  gen->add_option("--bad-mmsi", fo.bad_mmsi, "Ships given an 8-digit MMSI");
  gen->add_option("--type-conflict", fo.type_conflict, "Ships reporting two vessel types");
  gen->add_option("--teleport", fo.teleport, "Ships with one displaced position");

  // stats
  auto* stats = app.add_subcommand("stats", "Summarize an OD matrix CSV");
  std::string st_in;
  std::size_t top_k = 10;
  stats->add_option("input", st_in, "OD matrix CSV")->required();
  stats->add_option("--top", top_k, "Number of top edges")->capture_default_str();

  std::vector<std::string> parse_args(raw.rbegin(), raw.rend() - 1);
  try {
    app.parse(parse_args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  auto log = [&](const std::string& s) {
    if (g.verbose) std::cerr << s;
  };

  try {
    if (*decode) {
      std::ifstream file;
      std::istream* in = &std::cin;
      if (dec_in != "-") {
        file.open(dec_in, std::ios::binary);
        if (!file) throw aisod::IoError("cannot open " + dec_in);
        in = &file;
      }
      aisod::DecodeStats st;
      auto batch = aisod::decode_stream(*in, &st, {win_sentences, win_seconds});
      if (in->bad()) throw aisod::IoError("read error on " + dec_in);
      Output out(dec_out);
      aisod::write_readings_csv(out.stream(), batch.readings);
      out.close();
      if (!dec_static.empty()) write_file(dec_static, render([&](std::ostream& os) { aisod::write_vessels_csv(os, batch.vessels); }));
      std::string s = render([&](std::ostream& os) { aisod::write_stats(os, st); });
      write_file(dec_stats, s);
      log(s);
      return kOk;
    }

    if (*ingest) {
      ing_in.require();
      auto ts = aisod::load_inputs(ing_in.inputs, ing_in.mapping(), ing_in.vessels, g.threads);
      Output out(ing_out);
      aisod::write_tracks_csv(out.stream(), ts);
      out.close();
      std::string s = render([&](std::ostream& os) { aisod::write_ingest_stats(os, ts.stats); });
      write_file(ing_stats, s);
      log(s);
      return kOk;
    }

    if (*cleancmd) {
      cl_in.require();
      auto cfg = cl_f.config();
      auto ts = aisod::load_inputs(cl_in.inputs, cl_in.mapping(), cl_in.vessels, g.threads);
      auto [cleaned, report] = aisod::clean(ts, cfg, g.threads);
      Output out(cl_out);
      aisod::write_tracks_csv(out.stream(), cleaned);
      out.close();
      std::string kv = render([&](std::ostream& os) { aisod::write_report_kv(os, report); });
      write_file(cl_report, kv);
      write_file(cl_report_csv, render([&](std::ostream& os) { aisod::write_report_csv(os, report); }));
      log(kv);
      return cleaned.empty() ? kEmptyResult : kOk;
    }

    if (*select) {
      sel_in.require();
      auto q = sel_q.query();
      auto ts = aisod::load_inputs(sel_in.inputs, sel_in.mapping(), sel_in.vessels, g.threads);
      auto mmsis = aisod::select_mmsis(ts, q, g.threads);
      auto extracted = aisod::extract_window(ts, mmsis, q);
      Output out(sel_out);
      aisod::write_tracks_csv(out.stream(), extracted);
      out.close();
      write_file(sel_mmsi_out, render([&](std::ostream& os) {
                   for (auto m : mmsis) os << m << '\n';
                 }));
      log("selected_ships=" + std::to_string(mmsis.size()) + "\nextracted_readings=" +
          std::to_string(extracted.reading_count()) + "\n");
      return mmsis.empty() ? kEmptyResult : kOk;
    }

    if (*od) {
      od_in.require();
      aisod::PipelineConfig cfg;
      cfg.inputs = od_in.inputs;
      cfg.vessel_inputs = od_in.vessels;
      cfg.columns = od_in.mapping();
      cfg.filter = od_f.config();
      cfg.skip_clean = no_clean;
      if (od_q.given()) cfg.query = od_q.query();
      cfg.ports_path = od_ports;
      for (const auto& [k, v] : port_cols) {
        if (k == "id") cfg.port_columns.id = {v};
        else if (k == "name") cfg.port_columns.name = {v};
        else if (k == "country") cfg.port_columns.country = {v};
        else if (k == "lat") cfg.port_columns.latitude = {v};
        else if (k == "lon") cfg.port_columns.longitude = {v};
      }
      cfg.snap_max_km = snap_km;
      if (dwell_gap_hours) cfg.max_dwell_gap_s = static_cast<std::int64_t>(*dwell_gap_hours * 3600.0);
      cfg.threads = g.threads;
      if (!cfg.query) log("no fence given: using every cleaned ship without selection\n");
      auto res = aisod::run_pipeline(cfg);
      Output out(od_out);
      if (od_format == "grid") {
        aisod::write_od_grid(out.stream(), res.matrix,
                             od_grid_value == "ships" ? aisod::GridValue::Ships : aisod::GridValue::Trips);
      } else {
        aisod::write_od_csv(out.stream(), res.matrix);
      }
      out.close();
      std::string kv = render([&](std::ostream& os) { aisod::write_report_kv(os, res.filter); });
      write_file(od_report, kv);
      write_file(od_report_csv, render([&](std::ostream& os) { aisod::write_report_csv(os, res.filter); }));
      std::string summary = render([&](std::ostream& os) { aisod::write_summary(os, res.summary); });
      write_file(od_stats, summary);
      log(render([&](std::ostream& os) { aisod::write_ingest_stats(os, res.ingest); }) + kv +
          "selected_ships=" + std::to_string(res.selected.size()) + "\n" + summary);
      return res.matrix.empty() ? kEmptyResult : kOk;
    }

    if (*tracks) {
      tr_in.require();
      auto mmsis = parse_mmsi_list(tr_mmsi);
      if (mmsis.empty()) throw aisod::ConfigError("--mmsi needs at least one id");
      auto ts = aisod::load_inputs(tr_in.inputs, tr_in.mapping(), tr_in.vessels, g.threads);
      Output out(tr_out);
      if (tr_format == "csv") {
        aisod::export_tracks_csv(out.stream(), ts, mmsis, gap_hours);
      } else {
        out.stream() << aisod::export_geojson(ts, mmsis, gap_hours).dump() << '\n';
      }
      out.close();
      return kOk;
    }

    if (*gen) {
      auto ports = aisod::load_ports(gen_ports);
      if (!gen_routes.empty()) {
        std::ifstream in(gen_routes);
        if (!in) throw aisod::IoError("cannot open " + gen_routes);
        fo.scripted = aisod::read_routes_csv(in);
      }
      if (!gen_start.empty()) {
        auto t = aisod::parse_timestamp(gen_start);
        if (!t) throw aisod::ConfigError("cannot parse --start");
        fo.start = *t;
      }
      if (gen_days) fo.duration_s = static_cast<std::int64_t>(*gen_days * 86400.0);
      auto fleet = aisod::generate_fleet(ports, fo);
      Output out(gen_out);
      aisod::write_fleet_nmea(out.stream(), fleet);
      out.close();
      write_file(gen_truth, render([&](std::ostream& os) { aisod::write_truth_csv(os, fleet); }));
      write_file(gen_manifest, render([&](std::ostream& os) { aisod::write_manifest_csv(os, fleet); }));
      log("position_reports=" + std::to_string(fleet.position_reports) + "\ntransitions=" +
          std::to_string(fleet.truth.size()) + "\n");
      return kOk;
    }

    if (*stats) {
      std::ifstream in(st_in);
      if (!in) throw aisod::IoError("cannot open " + st_in);
      auto rows = aisod::read_od_csv(in);
      std::set<std::string> ports;
      std::size_t trips = 0, max_edge_ships = 0;
      std::vector<aisod::EdgeSummary> edges;
      for (const auto& r : rows) {
        ports.insert(r.edge.origin);
        ports.insert(r.edge.destination);
        trips += r.edge.trip_count;
        max_edge_ships = std::max(max_edge_ships, r.edge.unique_ships);
        edges.push_back(r.edge);
      }
      std::stable_sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) { return a.trip_count > b.trip_count; });
      std::cout << "ports=" << ports.size() << "\nedges=" << rows.size() << "\ntrips=" << trips
                << "\nmax_edge_ships=" << max_edge_ships << '\n';
      for (std::size_t i = 0; i < std::min(top_k, edges.size()); ++i) {
        std::cout << "top." << i + 1 << '=' << edges[i].origin << "->" << edges[i].destination
                  << " trips=" << edges[i].trip_count << " ships=" << edges[i].unique_ships << '\n';
      }
      return rows.empty() ? kEmptyResult : kOk;
    }
  } catch (const aisod::StageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == aisod::StageError::Kind::Io ? kIoError : kConfigError;
  } catch (const aisod::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const aisod::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const aisod::ContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return kOk;
}
