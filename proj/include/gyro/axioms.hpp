#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gyro/gyro_table.hpp"

namespace gyro {

struct AxiomViolation {
  std::string axiom;   // "G1".."G4"
  std::string clause;  // which part of the axiom failed
  std::vector<Element> witness;

  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

struct AxiomReport {
  bool g1_ok = true;
  bool g2_ok = true;
  bool g3_ok = true;
  bool g4_ok = true;
  bool is_group = true;
  std::vector<AxiomViolation> violations;

  bool ok() const noexcept { return g1_ok && g2_ok && g3_ok && g4_ok; }
  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

inline bool is_group(const GyroTable& g) {
  const auto n = static_cast<Element>(g.order());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!g.gyr_map(a, b).is_identity()) return false;
    }
  }
  return true;
}

// Certifies G1..G4 by exhaustive scans. Each failing axiom contributes its
// lexicographically first witness.
//
// G3 is checked in three clauses, each meaningful on a bare loop:
//   "gyrator":      a + (b + z) = (a + b) + gyr[a,b](z)
//   "bijective":    gyr[a,b] permutes the carrier            (witness a, b)
//   "automorphism": gyr[a,b](x + y) = gyr[a,b](x) + gyr[a,b](y)
inline AxiomReport verify_axioms(const GyroTable& g) {
  AxiomReport report;
  const auto n = static_cast<Element>(g.order());
  auto fail = [&](bool& flag, std::string axiom, std::string clause, std::vector<Element> witness) {
    if (!flag) return;
    flag = false;
    report.violations.push_back({std::move(axiom), std::move(clause), std::move(witness)});
  };

  for (Element x = 0; x < n && report.g1_ok; ++x) {
    if (g.sum(0, x) != x || g.sum(x, 0) != x) fail(report.g1_ok, "G1", "identity", {x});
  }
  for (Element x = 0; x < n && report.g2_ok; ++x) {
    const Element y = g.inv(x);
    if (g.sum(y, x) != 0 || g.sum(x, y) != 0) fail(report.g2_ok, "G2", "two-sided inverse", {x});
  }

  for (Element a = 0; a < n && report.g3_ok; ++a) {
    for (Element b = 0; b < n && report.g3_ok; ++b) {
      for (Element z = 0; z < n; ++z) {
        if (g.sum(a, g.sum(b, z)) != g.sum(g.sum(a, b), g.gyr_unchecked(a, b, z))) {
          fail(report.g3_ok, "G3", "gyrator", {a, b, z});
          break;
        }
      }
    }
  }
  for (Element a = 0; a < n && report.g3_ok; ++a) {
    for (Element b = 0; b < n && report.g3_ok; ++b) {
      if (!Permutation::is_bijection(g.gyr_map(a, b).images())) fail(report.g3_ok, "G3", "bijective", {a, b});
    }
  }
  for (Element a = 0; a < n && report.g3_ok; ++a) {
    for (Element b = 0; b < n && report.g3_ok; ++b) {
      const auto& gyr = g.gyr_map(a, b).images();
      for (Element x = 0; x < n && report.g3_ok; ++x) {
        for (Element y = 0; y < n; ++y) {
          if (gyr[g.sum(x, y)] != g.sum(gyr[x], gyr[y])) {
            fail(report.g3_ok, "G3", "automorphism", {a, b, x, y});
            break;
          }
        }
      }
    }
  }

  for (Element a = 0; a < n && report.g4_ok; ++a) {
    for (Element b = 0; b < n && report.g4_ok; ++b) {
      const auto& lhs = g.gyr_map(g.sum(a, b), b).images();
      const auto& rhs = g.gyr_map(a, b).images();
      for (Element z = 0; z < n; ++z) {
        if (lhs[z] != rhs[z]) {
          fail(report.g4_ok, "G4", "left loop", {a, b, z});
          break;
        }
      }
    }
  }

  report.is_group = is_group(g);
  return report;
}

struct IdentityResult {
  int id = 0;
  std::string_view name;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::optional<std::vector<Element>> witness;

  bool ok() const noexcept { return !witness.has_value(); }
};

struct IdentityReport {
  std::array<IdentityResult, 7> items;
  // gyr[a,b] = gyr[-b,-a] (the even property with the arguments transposed).
  // Equivalent to gyr[a,b] being an involution; reported, never gated.
  IdentityResult literal_even_form;

  bool ok() const noexcept {
    for (const auto& it : items) {
      if (!it.ok()) return false;
    }
    return true;
  }
};

inline constexpr std::array<std::string_view, 7> kIdentityNames = {
    "involution of inversion", "left cancellation", "gyrator identity", "inverse of a sum",
    "left quotient", "even property", "inversive symmetry",
};

// Exhaustive scan of the seven standard gyrogroup identities. Arity of the scan
// follows the free variables: (1) singles, (2)(4)(6)(7) pairs, (3)(5) triples.
// Map equalities (6) and (7) compare whole permutations per pair, and the
// witness is extended by the first disagreeing point. (6) is the even
// property gyr[-a,-b] = gyr[a,b].
//
// (3) compares the gyrator expression with the G3 gyration obtained by left
// division, (a+b) \ (a + (b + c)), so it is not a tautology on the cache.
inline IdentityReport check_identity_suite(const GyroTable& g) {
  IdentityReport report;
  const auto n = static_cast<Element>(g.order());
  for (int k = 0; k < 7; ++k) {
    report.items[k].id = k + 1;
    report.items[k].name = kIdentityNames[k];
  }
  report.literal_even_form.id = 6;
  report.literal_even_form.name = "even property, transposed";
  auto record = [&](int id, bool holds, std::vector<Element> tuple) {
    auto& it = id == 0 ? report.literal_even_form : report.items[id - 1];
    ++it.checked;
    if (holds) {
      ++it.passed;
    } else if (!it.witness) {
      it.witness = std::move(tuple);
    }
  };
  auto first_difference = [n](const std::vector<Element>& p, const std::vector<Element>& q) -> std::optional<Element> {
    for (Element z = 0; z < n; ++z) {
      if (p[z] != q[z]) return z;
    }
    return std::nullopt;
  };

  for (Element a = 0; a < n; ++a) record(1, g.inv(g.inv(a)) == a, {a});

  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      record(2, g.sum(g.inv(a), g.sum(a, b)) == b, {a, b});
      record(4, g.inv(g.sum(a, b)) == g.gyr_unchecked(a, b, g.sum(g.inv(b), g.inv(a))), {a, b});

      const auto& ab = g.gyr_map(a, b).images();
      const auto even = first_difference(ab, g.gyr_map(g.inv(a), g.inv(b)).images());
      record(6, !even, even ? std::vector<Element>{a, b, *even} : std::vector<Element>{a, b});
      const auto transposed = first_difference(ab, g.gyr_map(g.inv(b), g.inv(a)).images());
      record(0, !transposed, transposed ? std::vector<Element>{a, b, *transposed} : std::vector<Element>{a, b});

      const auto& ba = g.gyr_map(b, a).images();
      std::optional<Element> inv_sym;
      for (Element z = 0; z < n && !inv_sym; ++z) {
        if (ab[ba[z]] != z) inv_sym = z;
      }
      record(7, !inv_sym, inv_sym ? std::vector<Element>{a, b, *inv_sym} : std::vector<Element>{a, b});

      for (Element c = 0; c < n; ++c) {
        const Element rhs = g.sum(a, g.sum(b, c));
        record(3, g.gyr_unchecked(a, b, c) == g.left_div(g.sum(a, b), rhs), {a, b, c});
        const Element na = g.inv(a);
        const Element lhs5 = g.sum(g.sum(na, b), g.gyr_unchecked(na, b, g.sum(g.inv(b), c)));
        record(5, lhs5 == g.sum(na, c), {a, b, c});
      }
    }
  }
  return report;
}

}  // namespace gyro
