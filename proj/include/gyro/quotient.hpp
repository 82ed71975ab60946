#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gyro/gyro_table.hpp"
#include "gyro/random.hpp"
#include "gyro/subgyro.hpp"

namespace gyro {

// The left-coset space G/H with its projection.
struct CosetPartition {
  SubsetMask subgroup;
  std::vector<SubsetMask> cosets;        // ordered by least element; cosets[0] == H
  std::vector<std::size_t> projection;   // projection[a] = index of a + H

  std::size_t size() const noexcept { return cosets.size(); }
};

// Two left cosets that overlap without being equal.
class PartitionError : public std::runtime_error {
 public:
  PartitionError(Element a, Element b, SubsetMask first, SubsetMask second)
      : std::runtime_error("cosets " + std::to_string(a) + "+H and " + std::to_string(b) +
                           "+H overlap but differ"),
        a_(a), b_(b), first_(std::move(first)), second_(std::move(second)) {}

  Element a() const noexcept { return a_; }
  Element b() const noexcept { return b_; }
  const SubsetMask& first() const noexcept { return first_; }
  const SubsetMask& second() const noexcept { return second_; }

 private:
  Element a_, b_;
  SubsetMask first_, second_;
};

// x and y lie in one coset but a + x and a + y do not.
class IllDefinedError : public std::runtime_error {
 public:
  IllDefinedError(Element a, Element x, Element y)
      : std::runtime_error("translation by " + std::to_string(a) + " is not well defined on cosets (" +
                           std::to_string(x) + ", " + std::to_string(y) + ")"),
        a_(a), x_(x), y_(y) {}

  Element a() const noexcept { return a_; }
  Element x() const noexcept { return x_; }
  Element y() const noexcept { return y_; }

 private:
  Element a_, x_, y_;
};

struct CheckResult {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<std::vector<Element>> witness;
  std::string note;

  void record(bool holds, std::vector<Element> tuple) {
    ++checked;
    if (!holds && ok) {
      ok = false;
      witness = std::move(tuple);
    }
  }
};

inline SubsetMask coset(const GyroTable& g, const SubsetMask& h, Element a) {
  return g.translate_set(a, h, Side::left);
}

inline CosetPartition build_quotient(const GyroTable& g, const SubsetMask& h) {
  if (h.parent_order() != g.order()) throw std::invalid_argument("subset belongs to a different carrier");
  if (h.empty()) throw EmptySubsetError();
  if (!h.contains(0)) throw PreconditionError("H does not contain 0");
  const auto n = static_cast<Element>(g.order());
  CosetPartition p;
  p.subgroup = h;
  p.projection.assign(n, 0);
  std::vector<Element> representative;
  std::vector<bool> assigned(n, false);
  for (Element a = 0; a < n; ++a) {
    auto c = coset(g, h, a);
    bool matched = false;
    for (std::size_t i = 0; i < p.cosets.size(); ++i) {
      if (p.cosets[i] == c) {
        matched = true;
        break;
      }
      if (!(p.cosets[i] & c).empty()) throw PartitionError(representative[i], a, p.cosets[i], c);
    }
    if (!matched) {
      p.cosets.push_back(c);
      representative.push_back(a);
    }
  }

  // Order by least element so H (which contains 0) comes first.
  std::vector<std::size_t> order(p.cosets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return p.cosets[x].first() < p.cosets[y].first(); });
  std::vector<SubsetMask> sorted;
  for (std::size_t i : order) sorted.push_back(p.cosets[i]);
  p.cosets = std::move(sorted);

  for (std::size_t i = 0; i < p.cosets.size(); ++i) {
    p.cosets[i].for_each([&](Element x) {
      p.projection[x] = i;
      assigned[x] = true;
    });
  }
  for (Element x = 0; x < n; ++x) {
    if (!assigned[x]) throw std::logic_error("cosets do not cover element " + std::to_string(x));
  }
  if (p.cosets.front() != h) throw std::logic_error("coset of 0 differs from H");
  for (const auto& c : p.cosets) {
    if (c.size() != h.size()) throw std::logic_error("coset size differs from |H|");
  }
  return p;
}

inline std::size_t project(const CosetPartition& p, Element a) { return p.projection.at(a); }

// a + (b + H) = (a + b) + H for all a, b; witness (a, b).
inline CheckResult coset_assoc_check(const GyroTable& g, const SubsetMask& h) {
  CheckResult r;
  const auto n = static_cast<Element>(g.order());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const auto lhs = g.translate_set(a, coset(g, h, b), Side::left);
      r.record(lhs == coset(g, h, g.sum(a, b)), {a, b});
    }
  }
  return r;
}

// The map x + H -> (a + x) + H, checked for independence of the representative
// and for bijectivity. Throws IllDefinedError otherwise.
inline Permutation coset_translation(const CosetPartition& p, const GyroTable& g, Element a) {
  if (a >= g.order()) throw std::out_of_range("element out of range");
  std::vector<Element> images(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Element rep = p.cosets[i].first();
    const std::size_t target = p.projection[g.sum(a, rep)];
    p.cosets[i].for_each([&](Element x) {
      if (p.projection[g.sum(a, x)] != target) throw IllDefinedError(a, rep, x);
    });
    images[i] = static_cast<Element>(target);
  }
  if (!Permutation::is_bijection(images)) {
    throw std::logic_error("coset translation by " + std::to_string(a) + " is not bijective");
  }
  return Permutation(std::move(images));
}

// For every ordered pair of cosets with least representatives x, y, the
// translation by y [-] x carries x + H to y + H. Witness (x, y, a).
inline CheckResult homogeneity_check(const CosetPartition& p, const GyroTable& g) {
  CheckResult r;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      const Element x = p.cosets[i].first();
      const Element y = p.cosets[j].first();
      const Element a = g.codiff(y, x);
      bool holds = false;
      try {
        holds = coset_translation(p, g, a)(static_cast<Element>(i)) == j;
      } catch (const IllDefinedError&) {
        holds = false;
      }
      r.record(holds, {x, y, a});
    }
  }
  return r;
}

// project(a + x) = h_a(project(x)) for all a, x. Witness (a, x).
inline CheckResult translation_commute_check(const CosetPartition& p, const GyroTable& g) {
  CheckResult r;
  const auto n = static_cast<Element>(g.order());
  for (Element a = 0; a < n; ++a) {
    std::optional<Permutation> h_a;
    try {
      h_a = coset_translation(p, g, a);
    } catch (const IllDefinedError&) {
    }
    for (Element x = 0; x < n; ++x) {
      r.record(h_a && project(p, g.sum(a, x)) == (*h_a)(static_cast<Element>(project(p, x))), {a, x});
    }
  }
  return r;
}

// V + H as the union of the cosets v + H.
inline SubsetMask saturate(const GyroTable& g, const SubsetMask& h, const SubsetMask& v) {
  SubsetMask out(g.order());
  v.for_each([&](Element x) { out |= coset(g, h, x); });
  return out;
}

inline SubsetMask preimage_of_image(const CosetPartition& p, const SubsetMask& v) {
  std::vector<bool> hit(p.size(), false);
  v.for_each([&](Element x) { hit[p.projection[x]] = true; });
  SubsetMask out(v.parent_order());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (hit[i]) out |= p.cosets[i];
  }
  return out;
}

inline bool is_symmetric_with_identity(const GyroTable& g, const SubsetMask& s) {
  if (!s.contains(0)) return false;
  bool sym = true;
  s.for_each([&](Element x) { sym = sym && s.contains(g.inv(x)); });
  return sym;
}

// -a + ((a + H) & P) = H & ((-a) + P), with left translation by -a a bijection
// between (a + H) & P and the right-hand side. P must be symmetric and hold 0.
inline CheckResult intersection_identity_check(const GyroTable& g, const SubsetMask& h, const SubsetMask& p,
                                               Element a) {
  if (p.parent_order() != g.order()) throw std::invalid_argument("subset belongs to a different carrier");
  if (!p.contains(0)) throw PreconditionError("P does not contain 0");
  if (!is_symmetric_with_identity(g, p)) throw PreconditionError("P is not symmetric");
  CheckResult r;
  const Element na = g.inv(a);
  const auto slice = coset(g, h, a) & p;
  const auto lhs = g.translate_set(na, slice, Side::left);
  const auto rhs = h & g.translate_set(na, p, Side::left);
  r.record(lhs == rhs && lhs.size() == slice.size(), {a});
  return r;
}

inline SubsetMask random_symmetric_subset(const GyroTable& g, Rng& rng) {
  SubsetMask s(g.order(), {0});
  for (Element x = 1; x < g.order(); ++x) {
    if (rng() & 1ULL) {
      s.insert(x);
      s.insert(g.inv(x));
    }
  }
  return s;
}

struct QuotientCheckOptions {
  std::size_t p_samples = 50;
  std::size_t v_samples = 100;
  std::uint64_t seed = 1;
};

struct QuotientReport {
  SubsetMask subgroup;
  std::optional<CosetPartition> partition;
  std::vector<std::pair<std::string, CheckResult>> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second.ok; });
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& [k, v] : checks) {
      if (k == name) return &v;
    }
    return nullptr;
  }
};

// Builds G/H and runs every quotient check. A failed partition is reported as
// a finding and the checks that need the partition are marked skipped.
inline QuotientReport run_quotient_checks(const GyroTable& g, const SubsetMask& h,
                                          const QuotientCheckOptions& opt = {}) {
  QuotientReport report;
  report.subgroup = h;
  const auto n = static_cast<Element>(g.order());

  CheckResult partition;
  try {
    report.partition = build_quotient(g, h);
    partition.checked = 1;
  } catch (const PartitionError& e) {
    partition.record(false, {e.a(), e.b()});
    partition.note = e.what();
  }
  report.checks.emplace_back("partition", partition);
  report.checks.emplace_back("coset_associativity", coset_assoc_check(g, h));

  CheckResult left_cancel;
  for (Element a = 0; a < n; ++a) {
    left_cancel.record(g.translate_set(g.inv(a), coset(g, h, a), Side::left) == h, {a});
  }
  report.checks.emplace_back("left_cancellation", left_cancel);

  if (!report.partition) {
    for (const char* name : {"translation", "homogeneity", "commutation", "t1", "saturation", "intersection_identity"}) {
      CheckResult skipped;
      skipped.ok = false;
      skipped.note = "skipped: cosets do not partition G";
      report.checks.emplace_back(name, skipped);
    }
    return report;
  }
  const auto& p = *report.partition;

  CheckResult translation;
  for (Element a = 0; a < n; ++a) {
    try {
      coset_translation(p, g, a);
      translation.record(true, {a});
    } catch (const IllDefinedError& e) {
      translation.record(false, {e.a(), e.x(), e.y()});
    }
  }
  report.checks.emplace_back("translation", translation);
  report.checks.emplace_back("homogeneity", homogeneity_check(p, g));
  report.checks.emplace_back("commutation", translation_commute_check(p, g));

  CheckResult t1;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const bool separated = coset(g, h, y).contains(x) || project(p, x) != project(p, y);
      t1.record(separated, {x, y});
    }
  }
  report.checks.emplace_back("t1", t1);

  Rng rng = substream(opt.seed, 0);
  CheckResult saturation;
  for (std::size_t s = 0; s < opt.v_samples; ++s) {
    SubsetMask v(n);
    for (Element x = 0; x < n; ++x) {
      if (rng() & 1ULL) v.insert(x);
    }
    saturation.record(saturate(g, h, v) == preimage_of_image(p, v), v.elements());
  }
  report.checks.emplace_back("saturation", saturation);

  CheckResult intersection;
  Rng prng = substream(opt.seed, 1);
  for (std::size_t s = 0; s < opt.p_samples; ++s) {
    const auto sym = random_symmetric_subset(g, prng);
    for (Element a = 0; a < n; ++a) {
      const auto one = intersection_identity_check(g, h, sym, a);
      std::vector<Element> tuple{a};
      const auto elems = sym.elements();
      tuple.insert(tuple.end(), elems.begin(), elems.end());
      intersection.record(one.ok, std::move(tuple));
    }
  }
  report.checks.emplace_back("intersection_identity", intersection);
  return report;
}

}  // namespace gyro
