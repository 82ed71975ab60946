#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "gyro/gyro_table.hpp"

namespace gyro {

// Full subset scan is used up to this order; larger tables enumerate the
// closure lattice instead.
inline constexpr std::size_t kExhaustiveSubsetScanLimit = 20;

struct SubsetWitness {
  std::string reason;
  std::vector<Element> tuple;

  friend bool operator==(const SubsetWitness&, const SubsetWitness&) = default;
};

class EmptySubsetError : public PreconditionError {
 public:
  EmptySubsetError() : PreconditionError("subset is empty") {}
};

class NotSubgyrogroupError : public PreconditionError {
 public:
  explicit NotSubgyrogroupError(SubsetWitness w)
      : PreconditionError("not a subgyrogroup: " + w.reason), witness_(std::move(w)) {}
  const SubsetWitness& witness() const noexcept { return witness_; }

 private:
  SubsetWitness witness_;
};

// nullopt when H contains 0 and is closed under + and inverse; otherwise the
// first failure: "identity" {}, "sum" {x, y, x+y}, or "inverse" {x, -x}.
inline std::optional<SubsetWitness> subgyrogroup_failure(const GyroTable& g, const SubsetMask& h) {
  if (h.parent_order() != g.order()) throw std::invalid_argument("subset belongs to a different carrier");
  if (h.empty()) throw EmptySubsetError();
  if (!h.contains(0)) return SubsetWitness{"identity", {}};
  const auto elems = h.elements();
  for (Element x : elems) {
    for (Element y : elems) {
      const Element s = g.sum(x, y);
      if (!h.contains(s)) return SubsetWitness{"sum", {x, y, s}};
    }
  }
  for (Element x : elems) {
    if (!h.contains(g.inv(x))) return SubsetWitness{"inverse", {x, g.inv(x)}};
  }
  return std::nullopt;
}

inline bool is_subgyrogroup(const GyroTable& g, const SubsetMask& h) { return !subgyrogroup_failure(g, h); }

// Least superset of seeds + {0} closed under + and inverse.
inline SubsetMask generate_closure(const GyroTable& g, const SubsetMask& seeds) {
  if (seeds.parent_order() != g.order()) throw std::invalid_argument("subset belongs to a different carrier");
  if (seeds.empty()) throw EmptySubsetError();
  SubsetMask h = seeds;
  h.insert(0);
  std::vector<Element> members = h.elements();
  // Worklist: each new element is combined with every member on both sides.
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Element x = members[i];
    auto add = [&](Element v) {
      if (!h.contains(v)) {
        h.insert(v);
        members.push_back(v);
      }
    };
    add(g.inv(x));
    for (std::size_t j = 0; j <= i; ++j) {
      add(g.sum(x, members[j]));
      add(g.sum(members[j], x));
    }
  }
  return h;
}

struct SubClassification {
  SubsetMask subset;
  bool is_sub = false;
  bool is_L = false;
  bool is_strongly_L = false;
  bool is_normal_sufficient = false;
  // Keys: "L", "strongly_L", "normal_sufficient".
  std::map<std::string, SubsetWitness> witnesses;
  // gyr[a,b](H) = H for all a, b agrees with the strongly-L (subset) scan.
  bool strongly_L_equality_agrees = true;

  bool hierarchy_holds() const noexcept {
    return (!is_normal_sufficient || is_strongly_L) && (!is_strongly_L || is_L) && (!is_L || is_sub);
  }
};

namespace detail {

inline SubsetMask image_of(const GyroTable& g, const Permutation& p, const SubsetMask& h) {
  SubsetMask out(g.order());
  h.for_each([&](Element x) { out.insert(p.images()[x]); });
  return out;
}

}  // namespace detail

// Exhaustive quantifier scans for the L, strongly-L and normal-sufficient
// conditions on a subgyrogroup H.
//   L:                 gyr[a,h](H) = H       for all a in G, h in H
//   strongly L:        gyr[a,b](H) is in H   for all a, b in G
//   normal-sufficient: gyr[h,a] = id for all h in H, a in G; strongly L;
//                      and a + H = H + a for all a.
// Witness tuples are (a, h, x) / (a, b, x) with x in H mapped outside H,
// (h, a, z) with gyr[h,a](z) != z, and (a) for a + H != H + a.
inline SubClassification classify_subset(const GyroTable& g, const SubsetMask& h) {
  if (auto failure = subgyrogroup_failure(g, h)) throw NotSubgyrogroupError(*failure);

  SubClassification out;
  out.subset = h;
  out.is_sub = true;
  const auto n = static_cast<Element>(g.order());
  const auto members = h.elements();

  auto escaping_point = [&](Element a, Element b) -> std::optional<Element> {
    const auto& images = g.gyr_map(a, b).images();
    for (Element x : members) {
      if (!h.contains(images[x])) return x;
    }
    return std::nullopt;
  };

  out.is_L = true;
  for (Element a = 0; a < n && out.is_L; ++a) {
    for (Element k : members) {
      if (auto x = escaping_point(a, k)) {
        out.is_L = false;
        out.witnesses["L"] = {"gyr[a,h](x) not in H", {a, k, *x}};
        break;
      }
    }
  }

  out.is_strongly_L = true;
  for (Element a = 0; a < n && out.is_strongly_L; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (auto x = escaping_point(a, b)) {
        out.is_strongly_L = false;
        out.witnesses["strongly_L"] = {"gyr[a,b](x) not in H", {a, b, *x}};
        break;
      }
    }
  }

  bool equality_scan = true;
  for (Element a = 0; a < n && equality_scan; ++a) {
    for (Element b = 0; b < n && equality_scan; ++b) {
      equality_scan = detail::image_of(g, g.gyr_map(a, b), h) == h;
    }
  }
  out.strongly_L_equality_agrees = equality_scan == out.is_strongly_L;

  std::optional<SubsetWitness> normal_failure;
  for (Element k : members) {
    for (Element a = 0; a < n && !normal_failure; ++a) {
      const auto& images = g.gyr_map(k, a).images();
      for (Element z = 0; z < n; ++z) {
        if (images[z] != z) {
          normal_failure = SubsetWitness{"gyr[h,a] is not the identity", {k, a, z}};
          break;
        }
      }
    }
    if (normal_failure) break;
  }
  if (!normal_failure && !out.is_strongly_L) normal_failure = out.witnesses["strongly_L"];
  for (Element a = 0; a < n && !normal_failure; ++a) {
    if (g.translate_set(a, h, Side::left) != g.translate_set(a, h, Side::right)) {
      normal_failure = SubsetWitness{"a+H differs from H+a", {a}};
    }
  }
  out.is_normal_sufficient = !normal_failure;
  if (normal_failure) out.witnesses["normal_sufficient"] = *normal_failure;

  if (!out.hierarchy_holds()) throw std::logic_error("subgyrogroup hierarchy violated");
  return out;
}

// All subgyrogroups, sorted by (size, mask). Up to kExhaustiveSubsetScanLimit
// every subset containing 0 is tested; above it the closure lattice is walked
// from {0} by adjoining one element at a time, which reaches every
// subgyrogroup K since each intermediate closure stays inside K.
inline std::vector<SubsetMask> enumerate_subgyrogroups(const GyroTable& g) {
  const std::size_t n = g.order();
  std::vector<SubsetMask> found;
  if (n <= kExhaustiveSubsetScanLimit) {
    const unsigned long long count = 1ULL << (n - 1);
    for (unsigned long long bits = 0; bits < count; ++bits) {
      auto h = SubsetMask::from_word(n, (bits << 1) | 1ULL);
      if (is_subgyrogroup(g, h)) found.push_back(h);
    }
  } else {
    std::unordered_set<SubsetMask, SubsetMask::Hash> seen;
    std::vector<SubsetMask> frontier{SubsetMask(n, {0})};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
      std::vector<SubsetMask> next;
      for (const auto& h : frontier) {
        for (Element x = 0; x < n; ++x) {
          if (h.contains(x)) continue;
          SubsetMask seeds = h;
          seeds.insert(x);
          auto k = generate_closure(g, seeds);
          if (seen.insert(k).second) next.push_back(k);
        }
      }
      frontier = std::move(next);
    }
    found.assign(seen.begin(), seen.end());
  }
  std::sort(found.begin(), found.end(), [](const SubsetMask& x, const SubsetMask& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return found;
}

}  // namespace gyro
