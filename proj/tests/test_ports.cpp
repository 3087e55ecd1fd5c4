#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "aisod/ports.hpp"
#include "support/oracles.hpp"

using namespace aisod;

namespace {

const char* kFivePorts =
    "port_id,name,country,latitude,longitude\n"
    "P1,Alpha,AA,10.0,10.0\n"
    "P2,Bravo,BB,10.5,10.0\n"
    "P3,Charlie,CC,-33.9,18.4\n"
    "P4,Delta,DD,0.0,179.9\n"
    "P5,Echo,EE,60.0,-150.0\n";

PortIndex five_ports() {
  std::istringstream in(kFivePorts);
  return load_wpi(in);
}

}  // namespace

TEST(LoadPorts, FivePortFixture) {
  std::istringstream in(kFivePorts);
  PortLoadStats st;
  auto idx = load_wpi(in, {}, &st);
  EXPECT_EQ(idx.size(), 5u);
  EXPECT_EQ(st.rows, 5u);
  EXPECT_EQ(st.loaded, 5u);
  const PortRecord* p3 = idx.find("P3");
  ASSERT_NE(p3, nullptr);
  EXPECT_EQ(p3->name, "Charlie");
  EXPECT_EQ(p3->country, "CC");
  EXPECT_DOUBLE_EQ(p3->location.latitude, -33.9);
  EXPECT_EQ(idx.find("P9"), nullptr);
}

TEST(LoadPorts, InvalidRowsSkipped) {
  std::istringstream in(
      "port_id,name,country,latitude,longitude\n"
      "A,ok,X,10,10\n"
      "B,polar,X,95,10\n"
      "C,east,X,10,190\n"
      "D,blank,X,,10\n"
      ",noid,X,1,1\n"
      "A,again,X,20,20\n"
      "E,ok,X,-90,-180\n");
  PortLoadStats st;
  auto idx = load_wpi(in, {}, &st);
  EXPECT_EQ(idx.size(), 2u);
  EXPECT_EQ(st.rows, 7u);
  EXPECT_EQ(st.invalid, 4u);
  EXPECT_EQ(st.duplicate_ids, 1u);
  EXPECT_EQ(idx.find("A")->name, "ok");
  EXPECT_EQ(idx.find("B"), nullptr);
}

TEST(LoadPorts, WorldPortIndexHeaders) {
  std::istringstream in(
      "World Port Index Number,Region Name,Main Port Name,Country Code,Latitude,Longitude\n"
      "61150,\"China, East\",Shanghai,CN,31.233333,121.5\n");
  auto idx = load_wpi(in);
  ASSERT_EQ(idx.size(), 1u);
  EXPECT_EQ(idx.ports()[0].port_id, "61150");
  EXPECT_EQ(idx.ports()[0].name, "Shanghai");
  EXPECT_EQ(idx.ports()[0].country, "CN");
}

TEST(LoadPorts, CustomColumnsAndMissing) {
  std::istringstream in("code,y,x\nQ,1,2\n");
  PortColumns cols;
  cols.id = {"code"};
  cols.latitude = {"y"};
  cols.longitude = {"x"};
  auto idx = load_wpi(in, cols);
  ASSERT_EQ(idx.size(), 1u);
  EXPECT_DOUBLE_EQ(idx.find("Q")->location.longitude, 2.0);
  EXPECT_EQ(idx.find("Q")->name, "");
  std::istringstream bad("code,y,x\nQ,1,2\n");
  EXPECT_THROW(load_wpi(bad), ConfigError);
}

TEST(LoadPorts, EmptyInput) {
  std::istringstream in("");
  EXPECT_TRUE(load_wpi(in).empty());
}

TEST(PortIndex, RejectsDuplicatesAndInvalid) {
  EXPECT_THROW(PortIndex({{"A", "", "", {0, 0}}, {"A", "", "", {1, 1}}}), ContractError);
  EXPECT_THROW(PortIndex({{"A", "", "", {91, 0}}}), ContractError);
}

TEST(Nearest, FivePortQueries) {
  auto idx = five_ports();
  auto hit = idx.nearest({10.1, 10.0});
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->port->port_id, "P1");
  EXPECT_NEAR(hit->distance_km, 11.1195, 1e-3);
  EXPECT_EQ(idx.nearest({10.4, 10.0})->port->port_id, "P2");
  EXPECT_EQ(idx.nearest({0.0, -179.9})->port->port_id, "P4");
  EXPECT_FALSE(idx.nearest({45.0, 45.0}));
  EXPECT_EQ(idx.nearest({59.9, -150.0}, 50.0)->port->port_id, "P5");
}

TEST(Nearest, BeyondCapIsNone) {
  PortIndex idx({{"ONLY", "", "", {0, 0}}});
  GeoPoint p{rad_to_deg(60.0 / kEarthRadiusKm), 0};
  EXPECT_FALSE(idx.nearest(p, 50.0));
  ASSERT_TRUE(idx.nearest(p, 60.001));
  EXPECT_NEAR(idx.nearest(p, 61)->distance_km, 60.0, 1e-9);
}

TEST(Nearest, CapIsInclusive) {
  PortIndex idx({{"ONLY", "", "", {0, 0}}});
  GeoPoint p{0.3, 0.4};
  double d = haversine_km(p, {0, 0});
  EXPECT_TRUE(idx.nearest(p, d));
}

TEST(Nearest, TieGoesToSmallestId) {
  PortIndex idx({{"B2", "", "", {0, 1}}, {"A1", "", "", {0, -1}}, {"C3", "", "", {1, 0}}});
  auto hit = idx.nearest({0, 0}, 500);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->port->port_id, "A1");
  PortIndex swapped({{"A1", "", "", {0, 1}}, {"B2", "", "", {0, -1}}});
  EXPECT_EQ(swapped.nearest({0, 0}, 500)->port->port_id, "A1");
}

TEST(Nearest, EmptyIndex) { EXPECT_FALSE(PortIndex{}.nearest({0, 0}, 1e6)); }

TEST(Nearest, MatchesLinearScanOnFixture) {
  auto idx = load_ports(std::string(AISOD_SOURCE_DIR) + "/data/ports_fixture.csv");
  ASSERT_EQ(idx.size(), 20u);
  std::mt19937_64 rng(11);
  const auto& ports = idx.ports();
  std::uniform_int_distribution<std::size_t> pick(0, ports.size() - 1);
  std::uniform_real_distribution<double> jitter(-1.5, 1.5), cap(1, 400);
  for (int i = 0; i < 2000; ++i) {
    const auto& base = ports[pick(rng)].location;
    GeoPoint p{std::clamp(base.latitude + jitter(rng), -90.0, 90.0), base.longitude + jitter(rng)};
    if (p.longitude > 180) p.longitude -= 360;
    if (p.longitude < -180) p.longitude += 360;
    double max_km = cap(rng);
    auto got = idx.nearest(p, max_km);
    auto want = oracle::linear_nearest(ports, p, max_km);
    ASSERT_EQ(got.has_value(), want.has_value()) << i;
    if (got) {
      EXPECT_EQ(got->port->port_id, want->first);
      EXPECT_DOUBLE_EQ(got->distance_km, want->second);
    }
  }
}

TEST(Nearest, MatchesLinearScanRandomPorts) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> la(-89, 89), lo(-180, 180), cap(1, 3000);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<PortRecord> ports;
    for (int i = 0; i < 200; ++i) ports.push_back({"R" + std::to_string(1000 + i), "", "", {la(rng), lo(rng)}});
    // Mirrored pairs produce exact ties around the equator and prime meridian.
    ports.push_back({"T9", "", "", {0, 2}});
    ports.push_back({"T1", "", "", {0, -2}});
    PortIndex idx(ports);
    for (int q = 0; q < 200; ++q) {
      GeoPoint p = q % 10 == 0 ? GeoPoint{0, 0} : GeoPoint{la(rng), lo(rng)};
      double max_km = cap(rng);
      auto got = idx.nearest(p, max_km);
      auto want = oracle::linear_nearest(ports, p, max_km);
      ASSERT_EQ(got.has_value(), want.has_value());
      if (got) {
        EXPECT_EQ(got->port->port_id, want->first);
      }
    }
  }
}
