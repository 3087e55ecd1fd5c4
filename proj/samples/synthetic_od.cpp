// End to end in memory: generate a small fleet over the fixture ports,
// decode it, clean it and print the origin-destination matrix.

#include <iostream>
#include <sstream>

#include "aisod.hpp"

int main(int argc, char** argv) {
  const std::string ports_path = argc > 1 ? argv[1] : "data/ports_fixture.csv";
  aisod::PortIndex ports;
  try {
    ports = aisod::load_ports(ports_path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }

  aisod::FleetOptions opt;
  opt.seed = 42;
  opt.ships = 12;
  auto fleet = aisod::generate_fleet(ports, opt);

  std::stringstream nmea;
  aisod::write_fleet_nmea(nmea, fleet);
  auto batch = aisod::decode_stream(nmea);

  auto ts = aisod::build_trackset(std::move(batch.readings), "synthetic");
  aisod::attach_vessels(ts, batch.vessels);
  auto [cleaned, report] = aisod::clean(ts, aisod::FilterConfig{});

  auto matrix = aisod::build_od(cleaned, ports, 50.0);
  aisod::write_od_csv(std::cout, matrix);
  std::cerr << "truth transitions: " << fleet.truth.size() << ", ships kept: " << cleaned.tracks.size() << '\n';
  return 0;
}
