#include <catch_amalgamated.hpp>

#include <sstream>

#include "gyro/gyro.hpp"
#include "oracles.hpp"

using namespace gyro;

static const std::string kData = GYRO_DATA_DIR;

TEST_CASE("cyclic table operations") {
  const GyroTable z4(4, oracle::cyclic(4));
  CHECK(z4.op(1, 3) == 0);
  CHECK(z4.inv(1) == 3);
  CHECK(z4.left_div(1, 0) == 3);
  CHECK(z4.has_two_sided_inverses());
  CHECK(z4.gyr_map(1, 2).is_identity());
  CHECK(z4.coop(1, 2) == 3);
  CHECK(z4.codiff(3, 1) == 2);
  CHECK_THROWS_AS(z4.op(4, 0), std::out_of_range);
  const auto shifted = z4.translate_set(1, SubsetMask(4, {0, 2}), Side::left);
  CHECK(shifted == SubsetMask(4, {1, 3}));
}

TEST_CASE("construction rejects malformed shells") {
  CHECK_THROWS_AS(GyroTable(2, {0, 1, 1, 1}), StructureError);
  CHECK_THROWS_AS(GyroTable(2, {0, 1, 1}), StructureError);
  CHECK_THROWS_AS(GyroTable(2, {0, 1, 1, 2}), StructureError);
  CHECK_THROWS_AS(GyroTable(2, {1, 0, 0, 1}), StructureError);
  CHECK_THROWS_AS(GyroTable(0, {}), StructureError);
  try {
    GyroTable::from_rows({{0, 1, 2, 3}, {1, 1, 2, 3}, {2, 3, 0, 1}, {3, 2, 1, 0}});
    FAIL("expected a structure error");
  } catch (const StructureError& e) {
    CHECK(e.row() == 1);
  }
}

TEST_CASE("loading fixtures") {
  const auto z4 = load_table_file(kData + "/tables/z4.json");
  CHECK(z4 == GyroTable(4, oracle::cyclic(4)));
  const auto k4 = load_table_file(kData + "/tables/k4.txt");
  CHECK(k4 == GyroTable(4, oracle::klein()));
  const auto s3 = load_table_file(kData + "/tables/s3.json");
  CHECK(s3.order() == 6);
  CHECK(s3.symbols().at(0) == "e");
  CHECK(oracle::associative({s3.cells().begin(), s3.cells().end()}, 6));
  CHECK_THROWS_AS(load_table_file(kData + "/tables/broken_row.json"), StructureError);
  CHECK_THROWS(load_table_file(kData + "/tables/missing.json"));
}

TEST_CASE("identity relabeling and round trips") {
  // identity is element 2 in the file
  const auto g = load_table("3\n1 2 0\n2 0 1\n0 1 2\n", TableFormat::text);
  CHECK(g.op(0, 1) == 1);
  CHECK(g.symbols().size() == 3);
  const GyroTable k4(4, oracle::klein());
  CHECK(load_table(to_json_text(k4), TableFormat::json) == k4);
  CHECK(load_table(to_plain_text(k4), TableFormat::text) == k4);
  CHECK_THROWS_AS(load_table("{\"order\": 2, \"table\": [[0, 1]]}", TableFormat::json), StructureError);
  CHECK_THROWS_AS(load_table("{not json", TableFormat::json), ParseError);
}

TEST_CASE("large tables use lazy gyration maps") {
  const GyroTable z80(80, oracle::cyclic(80));
  CHECK(z80.gyr_map(17, 45).is_identity());
  CHECK(z80.gyr(3, 4, 5) == 5);
}
