#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "gyro/gyro.hpp"
#include "gyro/report_json.hpp"
#include "oracles.hpp"

using namespace gyro;

static const std::string kData = GYRO_DATA_DIR;

namespace {

std::set<oracle::Cells> cell_set(const std::vector<GyroTable>& tables) {
  std::set<oracle::Cells> out;
  for (const auto& t : tables) out.insert({t.cells().begin(), t.cells().end()});
  return out;
}

GyroTable relabeled(const GyroTable& g, const std::vector<Element>& sigma) {
  const std::size_t n = g.order();
  std::vector<Element> cells(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) cells[sigma[a] * n + sigma[b]] = sigma[g.sum(a, b)];
  return GyroTable(n, cells);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("normalized loop counts") {
  const std::vector<std::size_t> expected{1, 1, 1, 4, 56, 9408};
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(enumerate_loops(n, [](const GyroTable&) {}) == expected[n - 1]);
  }
  std::vector<GyroTable> five;
  enumerate_loops(5, [&](const GyroTable& t) { five.push_back(t); });
  const auto ref = oracle::normalized_loops(5);
  CHECK(cell_set(five) == std::set<oracle::Cells>(ref.begin(), ref.end()));
}

TEST_CASE("pruned generator equals generate-then-filter") {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    const auto pruned = generate_gyrogroups(n);
    const auto naive = naive_gyrogroups(n);
    std::set<oracle::Cells> ref;
    for (const auto& c : oracle::normalized_loops(n)) {
      if (oracle::is_gyrogroup(c, n)) ref.insert(c);
    }
    INFO("order " << n);
    CHECK(pruned.size() == cell_set(pruned).size());
    CHECK(cell_set(pruned) == cell_set(naive));
    CHECK(cell_set(pruned) == ref);
    for (const auto& t : pruned) CHECK(oracle::associative({t.cells().begin(), t.cells().end()}, n));
  }
  // labeled groups of order 6: 60 cyclic + 20 symmetric
  CHECK(generate_gyrogroups(6).size() == 80);
}

TEST_CASE("order bounds") {
  CHECK_THROWS_AS(generate_gyrogroups(7), ResourceLimitError);
  CHECK_THROWS_AS(enumerate_loops(7, [](const GyroTable&) {}), ResourceLimitError);
  GeneratorOptions big;
  big.allow_large = true;
  CHECK_THROWS_AS(generate_gyrogroups(9, big), ResourceLimitError);
  CHECK(generate_gyrogroups(7, big).size() == 120);
}

TEST_CASE("order 8: five groups and six proper gyrogroups") {
  GeneratorOptions opt;
  opt.allow_large = true;
  const auto all = generate_gyrogroups(8, opt);
  std::size_t labeled_groups = 0;
  std::set<GyroTable> classes;
  for (const auto& t : all) {
    labeled_groups += oracle::associative({t.cells().begin(), t.cells().end()}, 8);
    classes.insert(canonicalize(t));
  }
  // 1260 + 630 + 30 + 630 + 210 labeled tables for Z8, Z4xZ2, Z2^3, D4, Q8
  CHECK(labeled_groups == 2760);
  CHECK(classes.size() == 11);
  std::size_t proper = 0;
  for (const auto& c : classes) proper += !is_group(c);
  CHECK(proper == 6);

  // every left Bol loop of order 8 reached by the propagation is a gyrogroup,
  // and there are 6 non-associative Bol loops of that order
  opt.filter = LeafFilter::left_bol;
  std::set<GyroTable> bol;
  for (const auto& t : generate_gyrogroups(8, opt)) bol.insert(canonicalize(t));
  CHECK(bol == classes);

  std::set<GyroTable> catalog;
  for (int k = 0; k < 6; ++k) catalog.insert(canonicalize(load_table_file(kData + "/catalog/g8_" + std::to_string(k) + ".json")));
  std::set<GyroTable> non_groups;
  for (const auto& c : classes) {
    if (!is_group(c)) non_groups.insert(c);
  }
  CHECK(catalog == non_groups);
}

TEST_CASE("generator output does not depend on worker count") {
  GeneratorOptions one, four;
  one.allow_large = four.allow_large = true;
  four.workers = 4;
  CHECK(generate_gyrogroups(6, one) == generate_gyrogroups(6, four));
  CHECK(generate_gyrogroups(8, one) == generate_gyrogroups(8, four));
}

TEST_CASE("canonical forms") {
  const auto g = load_table_file(kData + "/tables/g8.json");
  const auto cf = canonical_form(g);
  CHECK(relabeled(g, cf.relabel) == cf.table);
  Rng rng(12);
  std::vector<Element> sigma{0, 1, 2, 3, 4, 5, 6, 7};
  for (int i = 0; i < 20; ++i) {
    std::shuffle(sigma.begin() + 1, sigma.end(), rng);
    CHECK(canonicalize(relabeled(g, sigma)) == cf.table);
  }
  CHECK(cell_set({canonicalize(GyroTable(4, oracle::cyclic(4))), canonicalize(GyroTable(4, oracle::klein()))}).size() == 2);
  CHECK_THROWS_AS(canonicalize(GyroTable(11, oracle::cyclic(11))), ResourceLimitError);
}

TEST_CASE("classification is invariant under canonical relabeling") {
  for (int k = 0; k < 6; ++k) {
    const auto g = load_table_file(kData + "/catalog/g8_" + std::to_string(k) + ".json");
    const auto cf = canonical_form(g);
    for (const auto& h : enumerate_subgyrogroups(g)) {
      SubsetMask image(8);
      h.for_each([&](Element x) { image.insert(cf.relabel[x]); });
      const auto x = classify_subset(g, h);
      const auto y = classify_subset(cf.table, image);
      CHECK(x.is_L == y.is_L);
      CHECK(x.is_strongly_L == y.is_strongly_L);
      CHECK(x.is_normal_sufficient == y.is_normal_sufficient);
    }
  }
}

TEST_CASE("search up to order 2") {
  SearchConfig cfg;
  cfg.max_order = 2;
  const auto r = search_L_not_SL(cfg);
  CHECK(r.gyrogroups == 1);
  CHECK(r.subgyrogroups == 2);
  CHECK_FALSE(r.witness);
}

TEST_CASE("search summaries match the recorded fixtures") {
  for (int n : {2, 4, 6}) {
    SearchConfig cfg;
    cfg.max_order = n;
    const auto text = to_json(search_L_not_SL(cfg)).dump(2) + "\n";
    INFO("max order " << n);
    CHECK(text == read_file(kData + "/search/max_order_" + std::to_string(n) + ".json"));
    cfg.worker_count = 3;
    CHECK(to_json(search_L_not_SL(cfg)).dump(2) + "\n" == text);
  }
}

TEST_CASE("order 8 search with the large-order override") {
  SearchConfig cfg;
  cfg.max_order = 8;
  CHECK_THROWS_AS(search_L_not_SL(cfg), ResourceLimitError);
  cfg.allow_large = true;
  CHECK(to_json(search_L_not_SL(cfg)).dump(2) + "\n" == read_file(kData + "/search/max_order_8.json"));
}

TEST_CASE("search with a catalog and table output") {
  SearchConfig cfg;
  cfg.max_order = 3;
  cfg.catalog_dir = kData + "/catalog";
  const auto out = std::filesystem::temp_directory_path() / "gyro_search_output";
  std::filesystem::remove_all(out);
  cfg.output_path = out.string();
  const auto r = search_L_not_SL(cfg);
  CHECK(r.catalog_rejected.empty());
  REQUIRE(r.per_order.back().order == 8);
  CHECK(r.per_order.back().from_catalog == 6);
  CHECK(r.per_order.back().gyrogroups == 6);
  CHECK(r.per_order.back().hierarchy_violations == 0);
  CHECK(std::filesystem::exists(out / "g8_005.json"));
  CHECK(load_table_file((out / "g2_000.json").string()).order() == 2);
  CHECK_FALSE(r.witness);

  cfg.catalog_dir = kData + "/tables";
  cfg.output_path.clear();
  const auto mixed = search_L_not_SL(cfg);
  CHECK(mixed.catalog_rejected == std::vector<std::string>{"broken_row.json", "loop5_g3_fail.json"});
  cfg.catalog_dir = kData + "/no_such_dir";
  CHECK_THROWS_AS(search_L_not_SL(cfg), ParseError);
}
