#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gyro/errors.hpp"
#include "gyro/permutation.hpp"
#include "gyro/subset_mask.hpp"

namespace gyro {

// Gyration maps are cached eagerly up to this order and lazily above it.
inline constexpr std::size_t kEagerGyrationLimit = 64;

enum class Side { left, right };

namespace detail {

// Order bounds, cell range, and the Latin property (rows first, then columns).
inline void validate_latin(std::size_t n, const std::vector<Element>& cells) {
  if (n == 0) throw StructureError("order must be positive");
  if (n > kMaxOrder) throw StructureError("order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  if (cells.size() != n * n) {
    throw StructureError("table has " + std::to_string(cells.size()) + " cells, expected " + std::to_string(n * n));
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (cells[i] >= n) {
      throw StructureError("cell (" + std::to_string(i / n) + "," + std::to_string(i % n) + ") = " +
                               std::to_string(cells[i]) + " out of range",
                           i / n, i % n);
    }
  }
  std::vector<std::size_t> seen(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Element v = cells[r * n + c];
      if (seen[v] == r + 1) throw StructureError("row " + std::to_string(r) + " not a permutation", r, c);
      seen[v] = r + 1;
    }
  }
  std::fill(seen.begin(), seen.end(), 0);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      Element v = cells[r * n + c];
      if (seen[v] == c + 1) throw StructureError("column " + std::to_string(c) + " not a permutation", r, c);
      seen[v] = c + 1;
    }
  }
}

}  // namespace detail

// A finite loop with identity 0, stored as its Cayley table.
//
// Construction validates the loop shell (cells in range, every row and
// column a permutation, 0 a two-sided identity). Whether the table is a
// gyrogroup is a separate question answered by verify_axioms().
//
// gyr[a,b] is always the gyrator expression
//   gyr[a,b](z) = inv(a+b) + (a + (b + z))
// with inv the left inverse (x + a = 0). Instances are immutable; copies share
// the gyration cache, which is safe for concurrent readers.
class GyroTable {
 public:
  GyroTable() = default;

  GyroTable(std::size_t order, std::vector<Element> cells,
            std::vector<std::string> symbols = {})
      : order_(order), cells_(std::move(cells)), symbols_(std::move(symbols)) {
    validate_shell();
    build_derived();
  }

  static GyroTable from_rows(const std::vector<std::vector<Element>>& rows,
                             std::vector<std::string> symbols = {}) {
    const std::size_t n = rows.size();
    std::vector<Element> cells;
    cells.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      if (rows[r].size() != n) {
        throw StructureError("row " + std::to_string(r) + " has length " +
                                 std::to_string(rows[r].size()) + ", expected " +
                                 std::to_string(n),
                             r);
      }
      cells.insert(cells.end(), rows[r].begin(), rows[r].end());
    }
    return GyroTable(n, std::move(cells), std::move(symbols));
  }

  std::size_t order() const noexcept { return order_; }
  std::span<const Element> cells() const noexcept { return cells_; }
  std::span<const Element> row(Element a) const { return {cells_.data() + check(a) * order_, order_}; }

  // Original element names when the table was loaded through a symbol table or
  // relabeled; empty when internal indices are the file's own labels.
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }

  Element op(Element a, Element b) const { return sum(check(a), check(b)); }

  // Unchecked a + b.
  Element sum(Element a, Element b) const noexcept { return cells_[a * order_ + b]; }

  Element inv(Element a) const { return inverses_[check(a)]; }

  // The unique x with a + x = b.
  Element left_div(Element a, Element b) const noexcept { return left_div_[a * order_ + b]; }

  bool has_two_sided_inverses() const noexcept {
    for (std::size_t a = 0; a < order_; ++a) {
      if (sum(static_cast<Element>(a), inverses_[a]) != 0) return false;
    }
    return true;
  }

  Element gyr(Element a, Element b, Element z) const {
    check(a), check(b), check(z);
    return gyr_unchecked(a, b, z);
  }

  Element gyr_unchecked(Element a, Element b, Element z) const noexcept {
    return sum(inverses_[sum(a, b)], sum(a, sum(b, z)));
  }

  // gyr[a,b] as a full map on the carrier. The gyrator expression is a
  // bijection whenever the loop's left inverse undoes left translation; when
  // it is not, the returned map is still the pointwise gyrator values.
  const Permutation& gyr_map(Element a, Element b) const {
    check(a), check(b);
    auto& cache = *cache_;
    const std::size_t idx = a * order_ + b;
    if (!cache.eager) {
      std::call_once(cache.flags[idx], [&] { cache.maps[idx] = compute_gyr_map(a, b); });
    }
    return cache.maps[idx];
  }

  // a [+] b = a + gyr[a, -b](b)
  Element coop(Element a, Element b) const {
    return sum(check(a), gyr_unchecked(a, inverses_[check(b)], b));
  }

  // a [-] b = a [+] (-b)
  Element codiff(Element a, Element b) const { return coop(a, inv(b)); }

  SubsetMask translate_set(Element a, const SubsetMask& s, Side side) const {
    check(a);
    if (s.parent_order() != order_) throw std::invalid_argument("subset belongs to a different carrier");
    SubsetMask out(order_);
    s.for_each([&](Element x) { out.insert(side == Side::left ? sum(a, x) : sum(x, a)); });
    return out;
  }

  friend bool operator==(const GyroTable& x, const GyroTable& y) {
    return x.order_ == y.order_ && x.cells_ == y.cells_;
  }

  friend bool operator<(const GyroTable& x, const GyroTable& y) {
    if (x.order_ != y.order_) return x.order_ < y.order_;
    return x.cells_ < y.cells_;
  }

 private:
  struct GyrCache {
    bool eager = false;
    std::vector<Permutation> maps;
    std::unique_ptr<std::once_flag[]> flags;
  };

  Element check(Element a) const {
    if (a >= order_) {
      throw std::out_of_range("element " + std::to_string(a) + " out of range for order " +
                              std::to_string(order_));
    }
    return a;
  }

  void validate_shell() const {
    detail::validate_latin(order_, cells_);
    const std::size_t n = order_;
    for (std::size_t a = 0; a < n; ++a) {
      if (cells_[a] != a) throw StructureError("0 is not a left identity", 0, a);
      if (cells_[a * n] != a) throw StructureError("0 is not a right identity", a, 0);
    }
    if (!symbols_.empty() && symbols_.size() != n) {
      throw StructureError("symbol table has " + std::to_string(symbols_.size()) + " names for order " +
                           std::to_string(n));
    }
  }

  void build_derived() {
    const std::size_t n = order_;
    inverses_.assign(n, 0);
    left_div_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t x = 0; x < n; ++x) {
        Element v = cells_[a * n + x];
        left_div_[a * n + v] = static_cast<Element>(x);
        if (v == 0) inverses_[x] = static_cast<Element>(a);
      }
    }
    auto cache = std::make_shared<GyrCache>();
    cache->maps.resize(n * n);
    if (n <= kEagerGyrationLimit) {
      cache->eager = true;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          cache->maps[a * n + b] = compute_gyr_map(static_cast<Element>(a), static_cast<Element>(b));
        }
      }
    } else {
      cache->flags = std::make_unique<std::once_flag[]>(n * n);
    }
    cache_ = std::move(cache);
  }

  Permutation compute_gyr_map(Element a, Element b) const {
    std::vector<Element> images(order_);
    for (std::size_t z = 0; z < order_; ++z) images[z] = gyr_unchecked(a, b, static_cast<Element>(z));
    // Not a bijection only for loops without left cancellation; keep raw images.
    return Permutation::from_trusted(std::move(images));
  }

  std::size_t order_ = 0;
  std::vector<Element> cells_;
  std::vector<std::string> symbols_;
  std::vector<Element> inverses_;
  std::vector<Element> left_div_;
  std::shared_ptr<GyrCache> cache_;
};

}  // namespace gyro
