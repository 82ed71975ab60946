#pragma once

#include <algorithm>
#include <cstdio>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gyro/axioms.hpp"
#include "gyro/errors.hpp"
#include "gyro/gyro_table.hpp"
#include "gyro/parallel.hpp"
#include "gyro/subgyro.hpp"
#include "gyro/table_io.hpp"

namespace gyro {

// Orders up to this bound are enumerated without an explicit override.
inline constexpr std::size_t kExhaustiveOrderBound = 6;
// Hard ceiling even with the override.
inline constexpr std::size_t kOverrideOrderBound = 8;
inline constexpr std::size_t kCanonicalOrderLimit = 10;

inline void require_order_bound(std::size_t order, bool allow_large) {
  if (order == 0) throw PreconditionError("order must be positive");
  if (order > kOverrideOrderBound) {
    throw ResourceLimitError("order " + std::to_string(order) + " exceeds the hard bound " +
                             std::to_string(kOverrideOrderBound));
  }
  if (order > kExhaustiveOrderBound && !allow_large) {
    throw ResourceLimitError("order " + std::to_string(order) + " exceeds the exhaustive bound " +
                             std::to_string(kExhaustiveOrderBound) + "; pass the large-order override");
  }
}

// Every normalized loop table (row and column 0 fixed to the identity) of the
// given order, exactly once, in lexicographic row-major order. Returns the count.
template <typename Visitor>
std::size_t enumerate_loops(std::size_t order, Visitor&& visit, bool allow_large = false) {
  require_order_bound(order, allow_large);
  const std::size_t n = order;
  std::vector<Element> cells(n * n, 0);
  std::vector<std::uint64_t> row_used(n, 0), col_used(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    cells[i] = cells[i * n] = static_cast<Element>(i);
    row_used[i] |= 1ULL << i;
    col_used[i] |= 1ULL << i;
  }
  std::size_t count = 0;
  // Free cells are (r, c) with r, c >= 1, visited row-major.
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == (n - 1) * (n - 1)) {
      ++count;
      visit(GyroTable(n, cells));
      return;
    }
    const std::size_t r = 1 + k / (n - 1);
    const std::size_t c = 1 + k % (n - 1);
    const std::uint64_t blocked = row_used[r] | col_used[c];
    for (Element v = 0; v < n; ++v) {
      if ((blocked >> v) & 1ULL) continue;
      cells[r * n + c] = v;
      row_used[r] |= 1ULL << v;
      col_used[c] |= 1ULL << v;
      self(self, k + 1);
      row_used[r] &= ~(1ULL << v);
      col_used[c] &= ~(1ULL << v);
    }
  };
  if (n == 1) {
    ++count;
    visit(GyroTable(1, {0}));
  } else {
    recurse(recurse, 0);
  }
  return count;
}

// The tables of `tables` that satisfy G1..G4.
template <typename Range>
std::vector<GyroTable> filter_gyrogroups(const Range& tables) {
  std::vector<GyroTable> out;
  for (const auto& t : tables) {
    if (verify_axioms(t).ok()) out.push_back(t);
  }
  return out;
}

namespace detail {

// A partially filled normalized loop table with undo trail. Cells hold -1
// until assigned.
class PartialLoop {
 public:
  explicit PartialLoop(std::size_t n) : n_(static_cast<int>(n)), cell_(n * n, -1), row_used_(n, 0), col_used_(n, 0) {
    for (int i = 0; i < n_; ++i) {
      assign(0, i, i);
      if (i) assign(i, 0, i);
    }
  }

  int order() const noexcept { return n_; }
  int get(int r, int c) const noexcept { return cell_[r * n_ + c]; }
  bool complete() const noexcept { return trail_.size() == cell_.size(); }
  std::size_t mark() const noexcept { return trail_.size(); }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const int idx = trail_.back();
      trail_.pop_back();
      const int v = cell_[idx];
      row_used_[idx / n_] &= ~(1ULL << v);
      col_used_[idx % n_] &= ~(1ULL << v);
      cell_[idx] = -1;
    }
  }

  bool assign(int r, int c, int v) {
    const int idx = r * n_ + c;
    if (cell_[idx] >= 0) return cell_[idx] == v;
    if (((row_used_[r] | col_used_[c]) >> v) & 1ULL) return false;
    cell_[idx] = v;
    row_used_[r] |= 1ULL << v;
    col_used_[c] |= 1ULL << v;
    trail_.push_back(idx);
    return true;
  }

  // Fixed-point propagation of rules every gyrogroup satisfies:
  //   two-sided inverses        x + r = 0  =>  r + x = 0
  //   left cancellation         r = -x:  r + (x + y) = y
  //   left Bol identity         x + (y + (x + z)) = (x + (y + x)) + z
  // Forced cells are assigned; a contradiction returns false.
  bool propagate() {
    const int n = n_;
    for (;;) {
      const std::size_t before = trail_.size();
      for (int x = 0; x < n; ++x) {
        const int r = right_inverse(x);
        if (r < 0) continue;
        if (!assign(r, x, 0)) return false;
        for (int y = 0; y < n; ++y) {
          const int v = get(x, y);
          if (v >= 0 && !assign(r, v, y)) return false;
        }
      }
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          const int yx = get(y, x);
          const int t = yx >= 0 ? get(x, yx) : -1;
          for (int z = 0; z < n; ++z) {
            const int xz = get(x, z);
            const int q = xz >= 0 ? get(y, xz) : -1;
            const int lhs = q >= 0 ? get(x, q) : -1;
            const int rhs = t >= 0 ? get(t, z) : -1;
            if (lhs >= 0 && rhs >= 0) {
              if (lhs != rhs) return false;
            } else if (lhs >= 0 && t >= 0) {
              if (!assign(t, z, lhs)) return false;
            } else if (rhs >= 0 && q >= 0) {
              if (!assign(x, q, rhs)) return false;
            }
          }
        }
      }
      if (trail_.size() == before) return true;
    }
  }

  // G3 automorphism and G4 instances whose every lookup is already known.
  bool partial_axiom_conflict() const {
    const int n = n_;
    std::vector<int> left_inv(n, -1);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        if (get(r, c) == 0) left_inv[c] = r;
      }
    }
    std::vector<int> gyr(static_cast<std::size_t>(n) * n * n, -1);
    auto at = [n](int a, int b, int z) { return (a * n + b) * n + z; };
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const int ab = get(a, b);
        const int inv = ab >= 0 ? left_inv[ab] : -1;
        if (inv < 0) continue;
        for (int z = 0; z < n; ++z) {
          const int bz = get(b, z);
          const int abz = bz >= 0 ? get(a, bz) : -1;
          if (abz >= 0) gyr[at(a, b, z)] = get(inv, abz);
        }
      }
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const int ab = get(a, b);
        for (int z = 0; ab >= 0 && z < n; ++z) {
          const int lhs = gyr[at(ab, b, z)];
          const int rhs = gyr[at(a, b, z)];
          if (lhs >= 0 && rhs >= 0 && lhs != rhs) return true;
        }
        for (int x = 0; x < n; ++x) {
          const int gx = gyr[at(a, b, x)];
          if (gx < 0) continue;
          for (int y = 0; y < n; ++y) {
            const int xy = get(x, y);
            const int gy = gyr[at(a, b, y)];
            if (xy < 0 || gy < 0) continue;
            const int gxy = gyr[at(a, b, xy)];
            const int sum = get(gx, gy);
            if (gxy >= 0 && sum >= 0 && gxy != sum) return true;
          }
        }
      }
    }
    return false;
  }

  // Unfilled cell with the fewest candidates (first in row-major order on
  // ties); -1 when the table is complete.
  int choose(std::uint64_t& candidates) const {
    int best = -1;
    int best_count = n_ + 1;
    const std::uint64_t all = n_ == 64 ? ~0ULL : (1ULL << n_) - 1;
    for (int idx = 0; idx < n_ * n_; ++idx) {
      if (cell_[idx] >= 0) continue;
      const std::uint64_t cand = all & ~(row_used_[idx / n_] | col_used_[idx % n_]);
      const int count = __builtin_popcountll(cand);
      if (count < best_count) {
        best = idx;
        best_count = count;
        candidates = cand;
        if (count <= 1) break;
      }
    }
    return best;
  }

  int complete_rows() const {
    int rows = 0;
    for (int r = 0; r < n_; ++r) {
      rows += __builtin_popcountll(row_used_[r]) == n_;
    }
    return rows;
  }

  std::vector<Element> cells() const {
    std::vector<Element> out(cell_.size());
    for (std::size_t i = 0; i < cell_.size(); ++i) out[i] = static_cast<Element>(cell_[i]);
    return out;
  }

 private:
  int right_inverse(int x) const {
    for (int c = 0; c < n_; ++c) {
      if (get(x, c) == 0) return c;
    }
    return -1;
  }

  int n_;
  std::vector<int> cell_;
  std::vector<std::uint64_t> row_used_;
  std::vector<std::uint64_t> col_used_;
  std::vector<int> trail_;
};

}  // namespace detail

enum class LeafFilter {
  gyrogroup,  // emit tables passing verify_axioms
  left_bol,   // emit every completed table (left Bol loops with two-sided inverses)
};

struct GeneratorOptions {
  bool allow_large = false;
  unsigned workers = 1;
  LeafFilter filter = LeafFilter::gyrogroup;
};

struct GeneratorStats {
  std::size_t nodes = 0;
  std::size_t leaves = 0;
  std::size_t emitted = 0;
};

// Pruned generator: backtracking over normalized loop tables with
// gyrogroup-sound propagation (see PartialLoop::propagate) and, whenever a row
// completes, the decidable G3/G4 instances of the partial table. Completed
// tables are certified with verify_axioms. Every labeled gyrogroup of the
// order is emitted exactly once, in an order independent of `workers`: the
// first branching cell's candidates define the work items.
template <typename Visitor>
GeneratorStats enumerate_gyrogroups(std::size_t order, Visitor&& visit, const GeneratorOptions& opt = {}) {
  require_order_bound(order, opt.allow_large);
  GeneratorStats stats;
  detail::PartialLoop root(order);
  if (!root.propagate()) return stats;

  auto accept = [&](const detail::PartialLoop& s, std::vector<GyroTable>& out, GeneratorStats& st) {
    ++st.leaves;
    GyroTable t(order, s.cells());
    if (opt.filter == LeafFilter::gyrogroup && !verify_axioms(t).ok()) return;
    ++st.emitted;
    out.push_back(std::move(t));
  };

  auto dfs = [&](auto&& self, detail::PartialLoop& s, int rows_done, std::vector<GyroTable>& out,
                 GeneratorStats& st) -> void {
    ++st.nodes;
    std::uint64_t cands = 0;
    const int idx = s.choose(cands);
    if (idx < 0) {
      accept(s, out, st);
      return;
    }
    const int n = s.order();
    for (int v = 0; v < n; ++v) {
      if (!((cands >> v) & 1ULL)) continue;
      const std::size_t mark = s.mark();
      if (s.assign(idx / n, idx % n, v) && s.propagate()) {
        const int rows = s.complete_rows();
        if (rows == rows_done || !s.partial_axiom_conflict()) self(self, s, rows, out, st);
      }
      s.undo(mark);
    }
  };

  std::uint64_t cands = 0;
  const int idx = root.choose(cands);
  if (idx < 0) {
    std::vector<GyroTable> out;
    accept(root, out, stats);
    for (auto& t : out) visit(t);
    return stats;
  }
  std::vector<int> branches;
  for (int v = 0; v < static_cast<int>(order); ++v) {
    if ((cands >> v) & 1ULL) branches.push_back(v);
  }
  std::vector<std::vector<GyroTable>> results(branches.size());
  std::vector<GeneratorStats> branch_stats(branches.size());
  const int n = static_cast<int>(order);
  parallel_for(branches.size(), opt.workers, [&](std::size_t i) {
    detail::PartialLoop s = root;
    if (s.assign(idx / n, idx % n, branches[i]) && s.propagate()) {
      if (!s.partial_axiom_conflict()) dfs(dfs, s, s.complete_rows(), results[i], branch_stats[i]);
    }
  });
  ++stats.nodes;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    stats.nodes += branch_stats[i].nodes;
    stats.leaves += branch_stats[i].leaves;
    stats.emitted += branch_stats[i].emitted;
    for (auto& t : results[i]) visit(t);
  }
  return stats;
}

inline std::vector<GyroTable> generate_gyrogroups(std::size_t order, const GeneratorOptions& opt = {}) {
  std::vector<GyroTable> out;
  enumerate_gyrogroups(order, [&](const GyroTable& t) { out.push_back(t); }, opt);
  return out;
}

struct CanonicalForm {
  GyroTable table;
  // relabel[x] is the canonical label of original element x; it is an
  // isomorphism onto `table`.
  std::vector<Element> relabel;
};

// Lexicographically least row-major table over all relabelings fixing 0.
inline CanonicalForm canonical_form(const GyroTable& g) {
  const std::size_t n = g.order();
  if (n > kCanonicalOrderLimit) {
    throw ResourceLimitError("canonical form needs (n-1)! relabelings; order " + std::to_string(n) +
                             " exceeds " + std::to_string(kCanonicalOrderLimit));
  }
  // perm[i] is the original element that receives canonical label i.
  std::vector<Element> perm(n), inv(n), best_perm;
  std::iota(perm.begin(), perm.end(), Element{0});
  std::vector<Element> cand(n * n), best;
  for (std::size_t i = 0; i < n; ++i) cand[i] = cand[i * n] = static_cast<Element>(i);
  do {
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = static_cast<Element>(i);
    bool smaller = best.empty();
    bool larger = false;
    for (std::size_t i = 1; i < n && !larger; ++i) {
      for (std::size_t j = 1; j < n; ++j) {
        const Element v = inv[g.sum(perm[i], perm[j])];
        if (!smaller) {
          const Element b = best[i * n + j];
          if (v > b) {
            larger = true;
            break;
          }
          if (v < b) smaller = true;
        }
        cand[i * n + j] = v;
      }
    }
    if (smaller && !larger) {
      best = cand;
      best_perm = perm;
    }
  } while (n > 1 && std::next_permutation(perm.begin() + 1, perm.end()));

  std::vector<Element> relabel(n);
  for (std::size_t i = 0; i < n; ++i) relabel[best_perm[i]] = static_cast<Element>(i);
  return {GyroTable(n, std::move(best)), std::move(relabel)};
}

inline GyroTable canonicalize(const GyroTable& g) { return canonical_form(g).table; }

// Naive counterpart of the pruned generator: all normalized loops, then the
// axiom filter.
inline std::vector<GyroTable> naive_gyrogroups(std::size_t order) {
  std::vector<GyroTable> out;
  enumerate_loops(order, [&](const GyroTable& t) {
    if (verify_axioms(t).ok()) out.push_back(t);
  });
  return out;
}

struct SearchConfig {
  std::size_t max_order = kExhaustiveOrderBound;
  bool isomorph_reject = true;
  unsigned worker_count = 1;
  std::string output_path;  // directory receiving every scanned gyrogroup; empty = none
  std::string catalog_dir;  // extra tables scanned alongside generated ones; empty = none
  bool allow_large = false;
};

// An L-subgyrogroup that is not strongly L.
struct Witness {
  GyroTable table;
  std::string source;
  SubsetMask subset;
  Element a = 0, b = 0;        // gyr[a,b](H) is not contained in H ...
  Element escaping = 0;        // ... because gyr[a,b](escaping) is outside H
  std::size_t l_pairs_checked = 0;  // every (a, h) in G x H passed the L condition
};

struct OrderCounts {
  std::size_t order = 0;
  std::size_t generated = 0;
  std::size_t from_catalog = 0;
  std::size_t gyrogroups = 0;
  std::size_t non_group = 0;
  std::size_t subgyrogroups = 0;
  std::size_t l_subgyrogroups = 0;
  std::size_t strongly_l = 0;
  std::size_t normal_sufficient = 0;
  std::size_t l_not_strongly_l = 0;
  std::size_t hierarchy_violations = 0;
};

struct ScannedTable {
  GyroTable table;
  std::string source;  // "generated" or the catalog file name
};

struct SearchResult {
  SearchConfig config;
  std::vector<OrderCounts> per_order;
  std::size_t gyrogroups = 0;
  std::size_t subgyrogroups = 0;
  std::optional<Witness> witness;
  std::vector<std::string> catalog_rejected;
  std::vector<ScannedTable> scanned;
};

namespace detail {

struct TableScan {
  OrderCounts counts;
  std::optional<Witness> witness;
};

inline TableScan scan_table(const ScannedTable& entry) {
  const auto& g = entry.table;
  TableScan out;
  out.counts.non_group = is_group(g) ? 0 : 1;
  for (const auto& h : enumerate_subgyrogroups(g)) {
    const auto c = classify_subset(g, h);
    ++out.counts.subgyrogroups;
    out.counts.l_subgyrogroups += c.is_L;
    out.counts.strongly_l += c.is_strongly_L;
    out.counts.normal_sufficient += c.is_normal_sufficient;
    out.counts.hierarchy_violations += !c.hierarchy_holds();
    if (c.is_L && !c.is_strongly_L) {
      ++out.counts.l_not_strongly_l;
      if (!out.witness || h < out.witness->subset) {
        const auto& w = c.witnesses.at("strongly_L").tuple;
        out.witness = Witness{g, entry.source, h, w[0], w[1], w[2], g.order() * h.size()};
      }
    }
  }
  return out;
}

inline std::vector<std::filesystem::path> catalog_files(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  if (dir.empty()) return files;
  if (!std::filesystem::is_directory(dir)) throw ParseError("catalog directory not found: " + dir);
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    const auto ext = e.path().extension().string();
    if (e.is_regular_file() && (ext == ".json" || ext == ".txt")) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace detail

// Scans every gyrogroup of order 2..max_order (plus the catalog) for an
// L-subgyrogroup that is not strongly L. The witness is the first in
// (order, table, subset mask) order, where tables are canonical forms when
// isomorph rejection is on. Order 1 is skipped: its only subset is itself.
inline SearchResult search_L_not_SL(const SearchConfig& config) {
  if (config.max_order < 1) throw PreconditionError("max_order must be at least 1");
  SearchResult result;
  result.config = config;

  std::map<std::size_t, std::vector<ScannedTable>> by_order;
  std::map<std::size_t, OrderCounts> counts;
  const bool canon = config.isomorph_reject;

  for (std::size_t order = 2; order <= config.max_order; ++order) {
    require_order_bound(order, config.allow_large);
    GeneratorOptions opt;
    opt.allow_large = config.allow_large;
    opt.workers = config.worker_count;
    auto tables = generate_gyrogroups(order, opt);
    counts[order].order = order;
    counts[order].generated = tables.size();
    std::set<GyroTable> unique;
    for (auto& t : tables) unique.insert(canon ? canonicalize(t) : t);
    for (const auto& t : unique) by_order[order].push_back({t, "generated"});
  }

  for (const auto& path : detail::catalog_files(config.catalog_dir)) {
    const std::string name = path.filename().string();
    std::optional<GyroTable> loaded;
    try {
      loaded = load_table_file(path.string());
    } catch (const std::exception&) {
      result.catalog_rejected.push_back(name);
      continue;
    }
    if (!verify_axioms(*loaded).ok()) {
      result.catalog_rejected.push_back(name);
      continue;
    }
    GyroTable t = canon && loaded->order() <= kCanonicalOrderLimit ? canonicalize(*loaded) : *loaded;
    const std::size_t order = t.order();
    counts[order].order = order;
    ++counts[order].from_catalog;
    auto& bucket = by_order[order];
    const bool duplicate = canon && std::any_of(bucket.begin(), bucket.end(), [&](const ScannedTable& s) { return s.table == t; });
    if (!duplicate) bucket.push_back({std::move(t), name});
  }

  for (auto& [order, bucket] : by_order) {
    std::stable_sort(bucket.begin(), bucket.end(), [](const ScannedTable& x, const ScannedTable& y) { return x.table < y.table; });
    std::vector<detail::TableScan> scans(bucket.size());
    parallel_for(bucket.size(), config.worker_count, [&](std::size_t i) { scans[i] = detail::scan_table(bucket[i]); });

    auto& c = counts[order];
    c.gyrogroups = bucket.size();
    for (std::size_t i = 0; i < scans.size(); ++i) {
      const auto& s = scans[i].counts;
      c.non_group += s.non_group;
      c.subgyrogroups += s.subgyrogroups;
      c.l_subgyrogroups += s.l_subgyrogroups;
      c.strongly_l += s.strongly_l;
      c.normal_sufficient += s.normal_sufficient;
      c.l_not_strongly_l += s.l_not_strongly_l;
      c.hierarchy_violations += s.hierarchy_violations;
      if (!result.witness && scans[i].witness) result.witness = scans[i].witness;
    }
    result.gyrogroups += c.gyrogroups;
    result.subgyrogroups += c.subgyrogroups;
    for (auto& s : bucket) result.scanned.push_back(std::move(s));
  }
  for (auto& [order, c] : counts) result.per_order.push_back(c);

  if (!config.output_path.empty()) {
    std::filesystem::create_directories(config.output_path);
    std::map<std::size_t, std::size_t> index;
    for (const auto& s : result.scanned) {
      const std::size_t k = index[s.table.order()]++;
      char name[64];
      std::snprintf(name, sizeof name, "g%zu_%03zu.json", s.table.order(), k);
      std::ofstream out(std::filesystem::path(config.output_path) / name, std::ios::binary);
      out << to_json_text(s.table);
    }
  }
  return result;
}

}  // namespace gyro
