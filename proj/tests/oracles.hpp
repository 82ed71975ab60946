#pragma once

// Reference implementations used to cross-check the library. They work on raw
// row-major cell vectors and share no code with include/gyro.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Cells = std::vector<std::uint32_t>;

inline Cells cyclic(std::uint32_t n) {
  Cells c(n * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) c[a * n + b] = (a + b) % n;
  }
  return c;
}

inline Cells klein() {
  Cells c(16);
  for (std::uint32_t a = 0; a < 4; ++a) {
    for (std::uint32_t b = 0; b < 4; ++b) c[a * 4 + b] = a ^ b;
  }
  return c;
}

// S3 as permutations of {0,1,2}, element k = k-th permutation in
// lexicographic order, product = composition (x after y).
inline Cells symmetric3() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  Cells c(36);
  for (std::uint32_t x = 0; x < 6; ++x) {
    for (std::uint32_t y = 0; y < 6; ++y) {
      std::vector<int> r(3);
      for (int i = 0; i < 3; ++i) r[i] = perms[x][perms[y][i]];
      c[x * 6 + y] = static_cast<std::uint32_t>(std::find(perms.begin(), perms.end(), r) - perms.begin());
    }
  }
  return c;
}

inline bool associative(const Cells& c, std::uint32_t n) {
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t d = 0; d < n; ++d)
        if (c[c[a * n + b] * n + d] != c[a * n + c[b * n + d]]) return false;
  return true;
}

// Normalized loops built row by row from whole permutations.
inline std::vector<Cells> normalized_loops(std::uint32_t n) {
  std::vector<Cells> out;
  Cells cells(n * n);
  for (std::uint32_t i = 0; i < n; ++i) cells[i] = i;
  std::vector<std::vector<std::uint32_t>> rows(n);
  for (std::uint32_t r = 1; r < n; ++r) {
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0u);
    do {
      if (p[0] == r) rows[r].insert(rows[r].end(), p.begin(), p.end());
    } while (std::next_permutation(p.begin(), p.end()));
  }
  auto rec = [&](auto&& self, std::uint32_t r) -> void {
    if (r == n) {
      out.push_back(cells);
      return;
    }
    for (std::size_t k = 0; k < rows[r].size(); k += n) {
      bool fits = true;
      for (std::uint32_t c = 0; c < n && fits; ++c) {
        for (std::uint32_t q = 0; q < r && fits; ++q) fits = cells[q * n + c] != rows[r][k + c];
      }
      if (!fits) continue;
      std::copy(rows[r].begin() + k, rows[r].begin() + k + n, cells.begin() + r * n);
      self(self, r + 1);
    }
  };
  if (n == 1) {
    out.push_back({0});
  } else {
    rec(rec, 1);
  }
  return out;
}

// Direct transcription of G1..G4 for a loop with identity 0.
inline bool is_gyrogroup(const Cells& c, std::uint32_t n) {
  auto op = [&](std::uint32_t a, std::uint32_t b) { return c[a * n + b]; };
  std::vector<std::uint32_t> inv(n, n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (op(b, a) == 0) inv[a] = b;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (op(0, a) != a || inv[a] == n) return false;
  }
  auto gyr = [&](std::uint32_t a, std::uint32_t b, std::uint32_t z) { return op(inv[op(a, b)], op(a, op(b, z))); };
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      std::set<std::uint32_t> image;
      for (std::uint32_t z = 0; z < n; ++z) {
        image.insert(gyr(a, b, z));
        if (op(a, op(b, z)) != op(op(a, b), gyr(a, b, z))) return false;
        if (gyr(op(a, b), b, z) != gyr(a, b, z)) return false;
        for (std::uint32_t w = 0; w < n; ++w) {
          if (gyr(a, b, op(z, w)) != op(gyr(a, b, z), gyr(a, b, w))) return false;
        }
      }
      if (image.size() != n) return false;
    }
  }
  return true;
}

inline std::string key(const Cells& c) { return std::string(c.begin(), c.end()); }

using C = std::complex<long double>;

inline C mobius_add(C a, C b) { return (a + b) / (1.0L + std::conj(a) * b); }

}  // namespace oracle
