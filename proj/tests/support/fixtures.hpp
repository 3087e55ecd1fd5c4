// Decoder fixtures with field values frozen from tests/oracle/aivdm_oracle.py,
// an independent bit-string extractor run before the C++ decoder existed.

#ifndef AISOD_TESTS_FIXTURES_HPP
#define AISOD_TESTS_FIXTURES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

struct DecoderFixture {
  std::vector<std::string> sentences;
  int type;
  std::uint32_t mmsi;
  std::size_t bits;
  std::optional<double> lat, lon, sog, cog;
  std::string name;
  int ship_type = 0;
};

inline const std::vector<DecoderFixture>& decoder_fixtures() {
  static const std::vector<DecoderFixture> f = {
      {{"!AIVDM,1,1,,A,15RTgt0PAso;90TKcjM8h6g208CQ,0*4A"},
       1, 371798000, 168, 48.38163333333333, -123.39538333333333, 12.3, 224.0, "", 0},
      {{"!AIVDM,1,1,,B,177KQJ5000G?tO`K>RA1wUbN0TKH,0*5C"},
       1, 477553000, 168, 47.58283333333333, -122.34583333333333, 0.0, 51.0, "", 0},
      {{"!AIVDM,1,1,,A,13u?etPv2;0n:dDPwUM1U1Cb069D,0*24"},
       1, 265547250, 168, 57.66035333333333, 11.832976666666667, 13.9, 40.4, "", 0},
      {{"!AIVDM,1,1,,A,B52K>;h00Fc>jpUlNV@ikwpUoP06,0*4C"},
       18, 338087471, 168, 40.68454, -74.07213166666666, 0.1, 79.6, "", 0},
      {{"!AIVDM,1,1,,B,C5N3SRgPEnJGEBT>NhWAwwo862PaLELTBJ:V00000000S0D:R220,0*0B"},
       19, 367059850, 312, 29.543695, -88.81039166666666, 8.7, 335.9, "CAPT.J.RIMES", 70},
      {{"!AIVDM,2,1,1,A,55?MbV02;H;s<HtKR20EHE:0@T4@Dn2222222216L961O5Gf0NSQEp6ClRp8,0*1C",
        "!AIVDM,2,2,1,A,88888888880,2*25"},
       5, 351759000, 424, std::nullopt, std::nullopt, std::nullopt, std::nullopt, "EVER DIADEM", 70},
  };
  return f;
}

}  // namespace oracle

#endif  // AISOD_TESTS_FIXTURES_HPP
