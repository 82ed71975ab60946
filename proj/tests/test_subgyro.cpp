#include <catch_amalgamated.hpp>

#include "gyro/gyro.hpp"
#include "oracles.hpp"

using namespace gyro;

static const std::string kData = GYRO_DATA_DIR;

namespace {

// Subsets containing 0 closed under the operation and the inverse, by a plain
// bit loop over the raw table.
std::size_t brute_subgyrogroup_count(const oracle::Cells& c, std::uint32_t n) {
  std::size_t count = 0;
  for (std::uint64_t bits = 1; bits < (1ULL << n); bits += 2) {
    bool closed = true;
    for (std::uint32_t x = 0; x < n && closed; ++x) {
      if (!((bits >> x) & 1)) continue;
      for (std::uint32_t y = 0; y < n && closed; ++y) {
        if (((bits >> y) & 1) && !((bits >> c[x * n + y]) & 1)) closed = false;
        if (c[y * n + x] == 0 && !((bits >> y) & 1)) closed = false;
      }
    }
    count += closed;
  }
  return count;
}

}  // namespace

TEST_CASE("subgyrogroup recognition in Z4") {
  const GyroTable z4(4, oracle::cyclic(4));
  CHECK(is_subgyrogroup(z4, SubsetMask(4, {0, 2})));
  const auto w = subgyrogroup_failure(z4, SubsetMask(4, {0, 1}));
  REQUIRE(w);
  CHECK(w->reason == "sum");
  CHECK(w->tuple == std::vector<Element>{1, 1, 2});
  CHECK(subgyrogroup_failure(z4, SubsetMask(4, {2}))->reason == "identity");
  CHECK_THROWS_AS(is_subgyrogroup(z4, SubsetMask(4)), EmptySubsetError);
  CHECK(generate_closure(z4, SubsetMask(4, {1})) == SubsetMask::full(4));
  CHECK(generate_closure(z4, SubsetMask(4, {2})) == SubsetMask(4, {0, 2}));
}

TEST_CASE("classification of Z4 {0,2}") {
  const GyroTable z4(4, oracle::cyclic(4));
  const auto c = classify_subset(z4, SubsetMask(4, {0, 2}));
  CHECK(c.is_sub);
  CHECK(c.is_L);
  CHECK(c.is_strongly_L);
  CHECK(c.is_normal_sufficient);
  CHECK(c.witnesses.empty());
  try {
    classify_subset(z4, SubsetMask(4, {0, 1}));
    FAIL("expected NotSubgyrogroupError");
  } catch (const NotSubgyrogroupError& e) {
    CHECK(e.witness().reason == "sum");
  }
}

TEST_CASE("S3 subgroups and normality") {
  const GyroTable s3(6, oracle::symmetric3());
  const auto subs = enumerate_subgyrogroups(s3);
  CHECK(subs.size() == 6);
  std::size_t normal = 0;
  for (const auto& h : subs) {
    const auto c = classify_subset(s3, h);
    CHECK(c.is_strongly_L);
    normal += c.is_normal_sufficient;
  }
  CHECK(normal == 3);
}

TEST_CASE("enumeration matches a brute-force closure scan") {
  for (const auto& name : {"g8_0", "g8_1", "g8_2", "g8_3", "g8_4", "g8_5"}) {
    const auto g = load_table_file(kData + "/catalog/" + name + ".json");
    const oracle::Cells cells(g.cells().begin(), g.cells().end());
    const auto subs = enumerate_subgyrogroups(g);
    CHECK(subs.size() == brute_subgyrogroup_count(cells, 8));
    for (const auto& h : subs) {
      const auto c = classify_subset(g, h);
      CHECK(c.hierarchy_holds());
      CHECK(c.strongly_L_equality_agrees);
    }
  }
}

TEST_CASE("order 8 has subgyrogroups that are not L") {
  const auto g = load_table_file(kData + "/tables/g8.json");
  std::size_t non_l = 0;
  for (const auto& h : enumerate_subgyrogroups(g)) {
    const auto c = classify_subset(g, h);
    if (c.is_L) continue;
    ++non_l;
    const auto& w = c.witnesses.at("L").tuple;
    CHECK(h.contains(w[1]));
    CHECK(h.contains(w[2]));
    CHECK_FALSE(h.contains(g.gyr(w[0], w[1], w[2])));
  }
  CHECK(non_l > 0);
}

TEST_CASE("closure-lattice enumeration above the scan limit") {
  CHECK(enumerate_subgyrogroups(GyroTable(24, oracle::cyclic(24))).size() == 8);
  oracle::Cells xor32(32 * 32);
  for (std::uint32_t a = 0; a < 32; ++a)
    for (std::uint32_t b = 0; b < 32; ++b) xor32[a * 32 + b] = a ^ b;
  // subspaces of F_2^5
  CHECK(enumerate_subgyrogroups(GyroTable(32, xor32)).size() == 374);
}
