// Decodes AIVDM sentences given on the command line (or a built-in example)
// and prints the resulting position readings.

#include <iomanip>
#include <iostream>

#include "aisod.hpp"

int main(int argc, char** argv) {
  aisod::StreamDecoder decoder;
  std::vector<std::string> lines;
  for (int i = 1; i < argc; ++i) lines.emplace_back(argv[i]);
  if (lines.empty()) lines.emplace_back("1578441600\t!AIVDM,1,1,,A,15RTgt0PAso;90TKcjM8h6g208CQ,0*4A");

  aisod::DecodedBatch batch;
  for (const auto& line : lines) decoder.feed_line(line, batch);
  decoder.finish();

  std::cout << std::fixed << std::setprecision(6);
  for (const auto& r : batch.readings) {
    std::cout << "mmsi=" << r.mmsi << " type=" << r.message_type << " lat=" << r.latitude << " lon=" << r.longitude
              << std::setprecision(1) << " sog=" << r.sog_knots << " cog=" << r.cog_deg << std::setprecision(6)
              << '\n';
  }
  for (const auto& v : batch.vessels) {
    std::cout << "mmsi=" << v.mmsi << " name=\"" << v.name << "\" type=" << v.vessel_type_code << " flag=" << v.flag
              << '\n';
  }
  aisod::write_stats(std::cerr, decoder.stats());
  return 0;
}
