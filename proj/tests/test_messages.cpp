#include <cmath>
#include <random>
#include <variant>

#include <gtest/gtest.h>

#include "aisod/decoder.hpp"
#include "aisod/messages.hpp"
#include "aisod/mid.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace aisod;

namespace {

BitBuffer bits_of(const std::vector<std::string>& sentences) {
  std::vector<RawSentence> raw;
  for (const auto& s : sentences) raw.push_back(parse_sentence(s));
  return assemble_multipart(std::move(raw));
}

}  // namespace

TEST(Fixtures, DecodeToOracleValues) {
  for (const auto& f : oracle::decoder_fixtures()) {
    SCOPED_TRACE(f.sentences.front());
    BitBuffer b = bits_of(f.sentences);
    EXPECT_EQ(b.size(), f.bits);
    EXPECT_EQ(message_type(b), static_cast<unsigned>(f.type));
    if (f.type == 5) {
      auto v = decode_static_report(b, 100);
      EXPECT_EQ(v.mmsi, f.mmsi);
      EXPECT_EQ(v.name, f.name);
      EXPECT_EQ(v.vessel_type_code, f.ship_type);
      EXPECT_EQ(v.callsign, "3FOF8");
      EXPECT_EQ(v.imo, 9134270u);
      EXPECT_EQ(v.destination, "NEW YORK");
      ASSERT_TRUE(v.dimensions.has_value());
      EXPECT_EQ(v.dimensions->length_m(), 295u);
      EXPECT_EQ(v.dimensions->beam_m(), 32u);
      EXPECT_EQ(v.flag, "PA");
      EXPECT_FALSE(v.partial);
      continue;
    }
    auto r = decode_position_report(b, 100);
    EXPECT_EQ(r.mmsi, f.mmsi);
    EXPECT_EQ(r.timestamp, 100);
    EXPECT_EQ(r.message_type, f.type);
    EXPECT_NEAR(r.latitude, *f.lat, 1e-9);
    EXPECT_NEAR(r.longitude, *f.lon, 1e-9);
    EXPECT_NEAR(r.sog_knots, *f.sog, 1e-9);
    EXPECT_NEAR(r.cog_deg, *f.cog, 1e-9);
    if (f.type == 19) {
      auto v = to_vessel_record(ClassBExtended::decode(b));
      EXPECT_EQ(v.name, f.name);
      EXPECT_EQ(v.vessel_type_code, f.ship_type);
      EXPECT_EQ(v.flag, "US");
    }
  }
}

TEST(Fixtures, ClassAFieldsBeyondKinematics) {
  auto m = ClassAPosition::decode(bits_of({"!AIVDM,1,1,,A,15RTgt0PAso;90TKcjM8h6g208CQ,0*4A"}));
  EXPECT_EQ(m.heading, 215u);
  EXPECT_EQ(m.second, 33u);
}

TEST(Fixtures, UnsupportedTypeIsTyped) {
  BitBuffer b = bits_of({"!AIVDM,1,1,,A,400TcdiuiT7VDR>3nIfr6>i00000,0*78"});
  EXPECT_EQ(message_type(b), 4u);
  try {
    decode_message(b);
    FAIL();
  } catch (const UnsupportedTypeError& e) {
    EXPECT_EQ(e.type(), 4);
  }
  EXPECT_THROW(decode_position_report(b), UnsupportedTypeError);
}

TEST(Sentinels, LongitudeNotAvailable) {
  ClassAPosition m;
  m.mmsi = 412000001;
  m.lat = 30 * 600000;
  m.lon = kLonNotAvailable;
  m.sog = 0;
  m.cog = 0;
  auto r = decode_position_report(m.encode());
  EXPECT_FALSE(r.position_available());
  EXPECT_TRUE(std::isnan(r.latitude));
  EXPECT_TRUE(std::isnan(r.longitude));
  EXPECT_EQ(r.sog_knots, 0.0);
}

TEST(Sentinels, LatitudeNotAvailable) {
  ClassAPosition m;
  m.lat = 0x3412140;
  m.lon = 0;
  auto r = decode_position_report(m.encode());
  EXPECT_FALSE(r.position_available());
  EXPECT_TRUE(std::isnan(r.latitude) && std::isnan(r.longitude));
}

TEST(Sentinels, SpeedAndCourse) {
  ClassBPosition m;
  m.lat = 0;
  m.lon = 0;
  m.sog = kSogNotAvailable;
  m.cog = kCogNotAvailable;
  auto r = decode_position_report(m.encode());
  EXPECT_TRUE(r.position_available());
  EXPECT_FALSE(r.speed_available());
  EXPECT_TRUE(std::isnan(r.cog_deg));
}

TEST(Sentinels, OutOfRangeRawCoordinatesAreUnavailable) {
  ClassAPosition m;
  m.lat = 95 * 600000;
  m.lon = 10 * 600000;
  EXPECT_FALSE(decode_position_report(m.encode()).position_available());
}

TEST(Sentinels, HygieneOverRandomReports) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 3000; ++i) {
    auto msg = oracle::random_message(rng);
    if (std::holds_alternative<StaticVoyageData>(msg)) continue;
    auto r = decode_position_report(encode_message(msg));
    if (!r.position_available()) {
      EXPECT_TRUE(std::isnan(r.latitude) && std::isnan(r.longitude));
    } else {
      EXPECT_LE(std::abs(r.latitude), 90.0);
      EXPECT_LE(std::abs(r.longitude), 180.0);
    }
    if (r.speed_available()) {
      EXPECT_GE(r.sog_knots, 0.0);
      EXPECT_LE(r.sog_knots, 102.2);
    }
  }
}

TEST(Layout, Lengths) {
  EXPECT_EQ(ClassAPosition{}.encode().size(), 168u);
  EXPECT_EQ(ClassBPosition{}.encode().size(), 168u);
  EXPECT_EQ(ClassBExtended{}.encode().size(), 312u);
  EXPECT_EQ(StaticVoyageData{}.encode().size(), 424u);
}

TEST(Layout, MmsiBits8To37) {
  ClassAPosition m;
  m.mmsi = 0x2AAAAAAA;
  BitBuffer b = m.encode();
  EXPECT_EQ(b.get_uint(8, 30), 0x2AAAAAAAu);
}

TEST(Layout, TruncatedPositionThrows) {
  BitBuffer b = ClassAPosition{}.encode();
  b.truncate(ClassAPosition::kRequiredBits - 1);
  EXPECT_THROW(decode_position_report(b), TruncationError);
  BitBuffer ok = ClassAPosition{}.encode();
  ok.truncate(ClassAPosition::kRequiredBits);
  EXPECT_TRUE(ClassAPosition::decode(ok).partial);
}

TEST(Layout, PartialStaticReport) {
  VesselRecord v;
  v.mmsi = 412000001;
  v.vessel_type_code = 70;
  v.name = "ALPHA";
  v.destination = "SHANGHAI";
  BitBuffer b = make_static_report(v).encode();
  b.truncate(300);
  auto r = decode_static_report(b);
  EXPECT_TRUE(r.partial);
  EXPECT_EQ(r.name, "ALPHA");
  EXPECT_EQ(r.vessel_type_code, 70);
  EXPECT_EQ(r.destination, "");
  b.truncate(StaticVoyageData::kRequiredBits - 1);
  EXPECT_THROW(decode_static_report(b), TruncationError);
}

TEST(Layout, ShortTextBeforeTypeField) {
  BitBuffer b = StaticVoyageData{}.encode();
  b.truncate(200);
  EXPECT_THROW(decode_static_report(b), TruncationError);
}

TEST(RoundTrip, RandomMessagesBitExact) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 2000; ++i) {
    auto msg = oracle::random_message(rng);
    BitBuffer bits = encode_message(msg);
    auto [payload, fill] = encode_sixbit(bits);
    BitBuffer back = decode_sixbit(payload, fill);
    ASSERT_EQ(back, bits);
    ASSERT_EQ(encode_message(decode_message(back)), bits);
  }
}

TEST(RoundTrip, RandomPayloadBits) {
  std::mt19937_64 rng(100);
  const std::pair<unsigned, std::size_t> layouts[] = {{1, 168}, {2, 168}, {3, 168}, {18, 168}, {19, 312}, {5, 424}};
  for (int i = 0; i < 2000; ++i) {
    auto [type, len] = layouts[rng() % 6];
    BitBuffer b;
    b.push_uint(type, 6);
    while (b.size() < len) b.push_bit(rng() & 1);
    ASSERT_EQ(encode_message(decode_message(b)), b);
  }
}

TEST(RoundTrip, VesselRecordThroughTypeFive) {
  VesselRecord v;
  v.mmsi = 412000001;
  v.vessel_type_code = 61;
  v.name = "ALPHA STAR";
  v.callsign = "BX12";
  v.imo = 9000001;
  v.destination = "SYN04";
  v.dimensions = ShipDimensions{100, 20, 10, 10};
  auto back = to_vessel_record(StaticVoyageData::decode(make_static_report(v).encode()));
  EXPECT_EQ(back.mmsi, v.mmsi);
  EXPECT_EQ(back.vessel_type_code, v.vessel_type_code);
  EXPECT_EQ(back.name, v.name);
  EXPECT_EQ(back.callsign, v.callsign);
  EXPECT_EQ(back.imo, v.imo);
  EXPECT_EQ(back.destination, v.destination);
  EXPECT_EQ(back.dimensions, v.dimensions);
  EXPECT_EQ(back.flag, "CN");
}

TEST(RoundTrip, ReadingThroughClassA) {
  auto r = oracle::reading(413000003, 1578441633, 31.2345678, -120.9876543, 12.3, 359.96);
  auto back = decode_position_report(make_class_a_report(r).encode(), r.timestamp);
  EXPECT_NEAR(back.latitude, r.latitude, 1.0 / 600000.0);
  EXPECT_NEAR(back.longitude, r.longitude, 1.0 / 600000.0);
  EXPECT_DOUBLE_EQ(back.sog_knots, 12.3);
  EXPECT_DOUBLE_EQ(back.cog_deg, 0.0);
  EXPECT_EQ(ClassAPosition::decode(make_class_a_report(r).encode()).second, 33u);
}

TEST(Category, PassengerRange) {
  for (int c = 60; c <= 69; ++c) EXPECT_EQ(ship_category(c), ShipCategory::Passenger) << c;
  EXPECT_STREQ(to_string(ship_category(65)), "passenger");
}

TEST(Category, TableSpotChecks) {
  EXPECT_EQ(ship_category(0), ShipCategory::NotAvailable);
  EXPECT_EQ(ship_category(100), ShipCategory::NotAvailable);
  EXPECT_EQ(ship_category(30), ShipCategory::Fishing);
  EXPECT_EQ(ship_category(52), ShipCategory::Tug);
  EXPECT_EQ(ship_category(45), ShipCategory::HighSpeedCraft);
  EXPECT_EQ(ship_category(70), ShipCategory::Cargo);
  EXPECT_EQ(ship_category(79), ShipCategory::Cargo);
  EXPECT_EQ(ship_category(80), ShipCategory::Tanker);
  EXPECT_EQ(ship_category(90), ShipCategory::Other);
  EXPECT_EQ(ship_category(25), ShipCategory::WingInGround);
  EXPECT_EQ(ship_category(5), ShipCategory::Reserved);
}

TEST(Flag, FromMidPrefix) {
  EXPECT_EQ(flag_for_mmsi(412000001), "CN");
  EXPECT_EQ(flag_for_mmsi(265547250), "SE");
  EXPECT_EQ(flag_for_mmsi(338087471), "US");
  EXPECT_EQ(flag_for_mmsi(477553000), "HK");
  EXPECT_EQ(flag_for_mmsi(12345678), "");
  EXPECT_EQ(flag_for_mmsi(970000001), "");
}

TEST(Flag, TableSortedAndUnique) {
  for (std::size_t i = 1; i < kMidTable.size(); ++i) EXPECT_LT(kMidTable[i - 1].mid, kMidTable[i].mid);
}
