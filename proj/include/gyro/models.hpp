#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "gyro/errors.hpp"
#include "gyro/random.hpp"

namespace gyro {

// Samples are drawn from the ball of this radius; denominators 1 +- <a,b>
// degrade near the unit sphere.
inline constexpr double kSampleRadius = 0.999;
inline constexpr double kDefaultModelTolerance = 1e-9;
inline constexpr double kDualPathTolerance = 1e-12;

// A point of the open complex unit disk.
template <typename T>
class BasicDiskPoint {
 public:
  BasicDiskPoint() = default;
  BasicDiskPoint(T re, T im) : z_(re, im) { validate(); }
  explicit BasicDiskPoint(std::complex<T> z) : z_(z) { validate(); }

  T re() const noexcept { return z_.real(); }
  T im() const noexcept { return z_.imag(); }
  std::complex<T> value() const noexcept { return z_; }
  T norm() const noexcept { return std::abs(z_); }

 private:
  void validate() const {
    if (!(std::norm(z_) < T(1))) throw DomainError("point outside the open unit disk");
  }
  std::complex<T> z_{T(0), T(0)};
};

// A velocity in the open unit ball (c = 1).
template <typename T>
class BasicBallPoint {
 public:
  BasicBallPoint() = default;
  BasicBallPoint(T x, T y, T z) : v_{x, y, z} { validate(); }
  explicit BasicBallPoint(std::array<T, 3> v) : v_(v) { validate(); }

  T x() const noexcept { return v_[0]; }
  T y() const noexcept { return v_[1]; }
  T z() const noexcept { return v_[2]; }
  const std::array<T, 3>& value() const noexcept { return v_; }
  T norm_squared() const noexcept { return v_[0] * v_[0] + v_[1] * v_[1] + v_[2] * v_[2]; }
  T norm() const noexcept { return std::sqrt(norm_squared()); }

 private:
  void validate() const {
    if (!(norm_squared() < T(1))) throw DomainError("point outside the open unit ball");
  }
  std::array<T, 3> v_{T(0), T(0), T(0)};
};

using DiskPoint = BasicDiskPoint<double>;
using BallPoint = BasicBallPoint<double>;

// a + b = (a + b) / (1 + conj(a) b)
template <typename T>
BasicDiskPoint<T> mobius_op(const BasicDiskPoint<T>& a, const BasicDiskPoint<T>& b) {
  const auto u = a.value();
  const auto v = b.value();
  return BasicDiskPoint<T>((u + v) / (T(1) + std::conj(u) * v));
}

template <typename T>
BasicDiskPoint<T> mobius_neg(const BasicDiskPoint<T>& a) {
  return BasicDiskPoint<T>(-a.value());
}

// Closed form: rotation by the unimodular factor (1 + a conj(b)) / (1 + conj(a) b).
template <typename T>
BasicDiskPoint<T> mobius_gyr_closed(const BasicDiskPoint<T>& a, const BasicDiskPoint<T>& b,
                                    const BasicDiskPoint<T>& z) {
  const auto u = a.value();
  const auto v = b.value();
  return BasicDiskPoint<T>((T(1) + u * std::conj(v)) / (T(1) + std::conj(u) * v) * z.value());
}

// Gyrator route: -(a + b) + (a + (b + z)).
template <typename T>
BasicDiskPoint<T> mobius_gyr(const BasicDiskPoint<T>& a, const BasicDiskPoint<T>& b, const BasicDiskPoint<T>& z) {
  return mobius_op(mobius_neg(mobius_op(a, b)), mobius_op(a, mobius_op(b, z)));
}

// Einstein velocity addition with c = 1:
//   u + v = (u + v / g_u + (g_u / (1 + g_u)) <u,v> u) / (1 + <u,v>),  g_u = 1 / sqrt(1 - |u|^2)
template <typename T>
BasicBallPoint<T> einstein_op(const BasicBallPoint<T>& u, const BasicBallPoint<T>& v) {
  const auto& p = u.value();
  const auto& q = v.value();
  const T dot = p[0] * q[0] + p[1] * q[1] + p[2] * q[2];
  const T inv_gamma = std::sqrt(T(1) - u.norm_squared());
  // g / (1 + g) = 1 / (1 + 1/g)
  const T k = dot / (T(1) + inv_gamma);
  const T denom = T(1) + dot;
  std::array<T, 3> out{};
  for (int i = 0; i < 3; ++i) out[i] = (p[i] + inv_gamma * q[i] + k * p[i]) / denom;
  return BasicBallPoint<T>(out);
}

template <typename T>
BasicBallPoint<T> einstein_neg(const BasicBallPoint<T>& u) {
  return BasicBallPoint<T>(-u.x(), -u.y(), -u.z());
}

template <typename T>
BasicBallPoint<T> einstein_gyr(const BasicBallPoint<T>& u, const BasicBallPoint<T>& v, const BasicBallPoint<T>& w) {
  return einstein_op(einstein_neg(einstein_op(u, v)), einstein_op(u, einstein_op(v, w)));
}

template <typename T>
struct BasicMobiusModel {
  using Scalar = T;
  using Point = BasicDiskPoint<T>;
  static constexpr const char* name = "mobius";

  static Point op(const Point& a, const Point& b) { return mobius_op(a, b); }
  static Point neg(const Point& a) { return mobius_neg(a); }
  static Point gyr(const Point& a, const Point& b, const Point& z) { return mobius_gyr(a, b, z); }
  static T distance(const Point& a, const Point& b) { return std::abs(a.value() - b.value()); }
  static T norm(const Point& a) { return a.norm(); }

  template <typename U>
  static Point convert(const BasicDiskPoint<U>& p) {
    return Point(static_cast<T>(p.re()), static_cast<T>(p.im()));
  }

  static DiskPoint sample(Rng& rng) {
    for (;;) {
      const double x = uniform(rng, -kSampleRadius, kSampleRadius);
      const double y = uniform(rng, -kSampleRadius, kSampleRadius);
      if (x * x + y * y < kSampleRadius * kSampleRadius) return DiskPoint(x, y);
    }
  }
};

template <typename T>
struct BasicEinsteinModel {
  using Scalar = T;
  using Point = BasicBallPoint<T>;
  static constexpr const char* name = "einstein";

  static Point op(const Point& a, const Point& b) { return einstein_op(a, b); }
  static Point neg(const Point& a) { return einstein_neg(a); }
  static Point gyr(const Point& a, const Point& b, const Point& z) { return einstein_gyr(a, b, z); }
  static T distance(const Point& a, const Point& b) {
    const T dx = a.x() - b.x(), dy = a.y() - b.y(), dz = a.z() - b.z();
    return std::sqrt(dx * dx + dy * dy + dz * dz);
  }
  static T norm(const Point& a) { return a.norm(); }

  template <typename U>
  static Point convert(const BasicBallPoint<U>& p) {
    return Point(static_cast<T>(p.x()), static_cast<T>(p.y()), static_cast<T>(p.z()));
  }

  static BallPoint sample(Rng& rng) {
    for (;;) {
      std::array<double, 3> v{};
      for (auto& c : v) c = uniform(rng, -kSampleRadius, kSampleRadius);
      if (v[0] * v[0] + v[1] * v[1] + v[2] * v[2] < kSampleRadius * kSampleRadius) return BallPoint(v);
    }
  }
};

using MobiusModel = BasicMobiusModel<double>;
using EinsteinModel = BasicEinsteinModel<double>;

// Scalar used by the sampler. Near the sampling cap the gyrator expression
// loses about log10(1 / (1 - |a + b|)) digits: in double, codiff(a,a) reaches
// 3e-7 at radius 0.999. Extended precision keeps every residual near 1e-10.
using ResidualScalar = long double;

// Residual slots reported by the sampler, in output order. Slot 6 is the
// even property gyr[-a,-b] = gyr[a,b]; "6_literal_even_form" records the
// transposed form gyr[a,b] = gyr[-b,-a], which equals gyr[b,a] = gyr[a,b]^-1
// and so holds only where gyrations are involutions. It is reported, not gated.
inline const std::vector<std::string>& model_check_names() {
  static const std::vector<std::string> names = {
      "1_involution_of_inversion", "2_left_cancellation", "3_gyrator_identity", "4_inverse_of_sum",
      "5_left_quotient",           "6_even_property",     "7_inversive_symmetry", "right_cancellation",
      "codiff_self",               "g4_left_loop",        "norm_preservation",    "dual_path",
      "6_literal_even_form",
  };
  return names;
}

inline constexpr std::size_t kModelChecks = 13;
inline constexpr std::size_t kDualPathSlot = 11;
inline constexpr std::size_t kLiteralEvenSlot = 12;

// Residuals of every identity at one sample (a, b, c). The dual-path slot is
// the closed-form vs gyrator gyration gap for the disk and 0 for the ball.
template <typename Model>
std::array<double, kModelChecks> identity_residuals(const typename Model::Point& a, const typename Model::Point& b,
                                                    const typename Model::Point& c) {
  using M = Model;
  const auto na = M::neg(a);
  const auto nb = M::neg(b);
  const auto ab = M::op(a, b);
  const auto gyr_ab_c = M::gyr(a, b, c);
  std::array<typename M::Scalar, kModelChecks> r{};

  r[0] = M::distance(M::neg(na), a);
  r[1] = M::distance(M::op(na, ab), b);
  r[2] = M::distance(M::op(a, M::op(b, c)), M::op(ab, gyr_ab_c));
  r[3] = M::distance(M::neg(ab), M::gyr(a, b, M::op(nb, na)));
  r[4] = M::distance(M::op(M::op(na, b), M::gyr(na, b, M::op(nb, c))), M::op(na, c));
  r[5] = M::distance(gyr_ab_c, M::gyr(na, nb, c));
  r[6] = M::distance(M::gyr(a, b, M::gyr(b, a, c)), c);

  // y [-] x = y - gyr[y,x](x); (y [-] x) + x = y with y = a, x = b.
  const auto codiff_ab = M::op(a, M::neg(M::gyr(a, b, b)));
  r[7] = M::distance(M::op(codiff_ab, b), a);
  r[8] = M::norm(M::op(a, M::neg(M::gyr(a, a, a))));

  r[9] = M::distance(M::gyr(ab, b, c), gyr_ab_c);
  r[10] = std::abs(M::norm(gyr_ab_c) - M::norm(c));
  if constexpr (std::is_same_v<typename M::Point, BasicDiskPoint<typename M::Scalar>>) {
    r[11] = M::distance(mobius_gyr_closed(a, b, c), gyr_ab_c);
  }
  r[12] = M::distance(gyr_ab_c, M::gyr(nb, na, c));

  std::array<double, kModelChecks> out{};
  for (std::size_t i = 0; i < kModelChecks; ++i) out[i] = static_cast<double>(r[i]);
  return out;
}

struct ModelReport {
  std::string model;
  std::size_t samples = 0;
  double tol = kDefaultModelTolerance;
  std::uint64_t seed = 0;
  std::array<double, kModelChecks> max_residual{};

  static bool gated(std::size_t slot) { return slot != kLiteralEvenSlot; }
  double threshold(std::size_t slot) const { return slot == kDualPathSlot ? std::min(tol, kDualPathTolerance) : tol; }
  bool passes(std::size_t slot) const { return max_residual[slot] < threshold(slot); }
  bool ok() const {
    for (std::size_t i = 0; i < kModelChecks; ++i) {
      if (gated(i) && !passes(i)) return false;
    }
    return true;
  }
};

inline constexpr std::size_t kSamplesPerChunk = 256;

// Draws `samples` triples uniformly from the ball of radius kSampleRadius and
// records the maximum residual per identity. Chunk k of kSamplesPerChunk
// samples uses substream k of `seed`, so the result does not depend on
// `workers`.
template <typename Model>
ModelReport sample_model(std::size_t samples, double tol, std::uint64_t seed, unsigned workers = 1) {
  if (samples == 0) throw PreconditionError("samples must be positive");
  if (!(tol > 0.0)) throw PreconditionError("tolerance must be positive");
  const std::size_t chunks = (samples + kSamplesPerChunk - 1) / kSamplesPerChunk;
  std::vector<std::array<double, kModelChecks>> partial(chunks);

  auto run_chunk = [&](std::size_t k) {
    Rng rng = substream(seed, k);
    std::array<double, kModelChecks> worst{};
    const std::size_t end = std::min(samples, (k + 1) * kSamplesPerChunk);
    for (std::size_t s = k * kSamplesPerChunk; s < end; ++s) {
      const auto a = Model::sample(rng);
      const auto b = Model::sample(rng);
      const auto c = Model::sample(rng);
      const auto r = identity_residuals<Model>(Model::convert(a), Model::convert(b), Model::convert(c));
      for (std::size_t i = 0; i < kModelChecks; ++i) worst[i] = std::max(worst[i], r[i]);
    }
    partial[k] = worst;
  };

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(chunks)));
  if (workers == 1) {
    for (std::size_t k = 0; k < chunks; ++k) run_chunk(k);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < chunks; k += workers) run_chunk(k);
      });
    }
    for (auto& t : pool) t.join();
  }

  ModelReport report;
  report.model = Model::name;
  report.samples = samples;
  report.tol = tol;
  report.seed = seed;
  for (const auto& worst : partial) {
    for (std::size_t i = 0; i < kModelChecks; ++i) report.max_residual[i] = std::max(report.max_residual[i], worst[i]);
  }
  return report;
}

enum class ModelKind { mobius, einstein };

inline ModelReport model_identity_sampler(ModelKind model, std::size_t samples, double tol, std::uint64_t seed,
                                          unsigned workers = 1) {
  return model == ModelKind::mobius
             ? sample_model<BasicMobiusModel<ResidualScalar>>(samples, tol, seed, workers)
             : sample_model<BasicEinsteinModel<ResidualScalar>>(samples, tol, seed, workers);
}

}  // namespace gyro
