#ifndef EMKNOT_CAVITY_HPP
#define EMKNOT_CAVITY_HPP

// Normal modes of the empty cubic cavity [0, pi]^3 in natural units.
//
// With (e1, e2, k/|k|) a right-handed orthonormal triad and omega = |k|,
//   A_i = A e1_i cos(wt) cos(k_i x_i) sin(k_j x_j) sin(k_k x_k)
//   E_i = w A e1_i sin(wt) cos(k_i x_i) sin(k_j x_j) sin(k_k x_k)
//   B_i = w A e2_i cos(wt) sin(k_i x_i) cos(k_j x_j) cos(k_k x_k)
// for (ijk) cyclic. The fields extend by these formulas to the 3-torus of
// period 2pi and are tau-periodic in time.

#include "emknot/core.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace emknot::cavity {

class ModeSpec {
 public:
  [[nodiscard]] const IVec3& k() const { return k_; }
  [[nodiscard]] double amplitude() const { return amplitude_; }
  [[nodiscard]] const Vec3& e1() const { return e1_; }
  [[nodiscard]] const Vec3& e2() const { return e2_; }
  [[nodiscard]] double omega() const { return omega_; }
  [[nodiscard]] double tau() const { return two_pi / omega_; }
  [[nodiscard]] Vec3 k_hat() const { return k_.cast<double>() / omega_; }

  /// Same mode and polarization with a different amplitude (A >= 0).
  [[nodiscard]] ModeSpec with_amplitude(double a) const {
    if (!(a >= 0.0)) {
      throw Error(ErrorCode::NonpositiveAmplitude, "amplitude must be >= 0");
    }
    ModeSpec m = *this;
    m.amplitude_ = a;
    return m;
  }

 private:
  friend ModeSpec make_mode(const IVec3&, double, std::optional<Vec3>);
  ModeSpec() = default;

  IVec3 k_ = IVec3::Ones();
  double amplitude_ = 1.0;
  Vec3 e1_ = Vec3::UnitX();
  Vec3 e2_ = Vec3::UnitY();
  double omega_ = 1.0;
};

/// Builds a mode. e1 is the component of pol_seed orthogonal to k
/// (default z, or x when k is parallel to z); e2 = k_hat x e1.
/// Amplitude 0 is accepted as the zero field; negative amplitudes are not.
inline ModeSpec make_mode(const IVec3& k, double amplitude,
                          std::optional<Vec3> pol_seed = std::nullopt) {
  for (int i = 0; i < 3; ++i) {
    if (k[i] == 0) {
      throw Error(ErrorCode::ZeroModeComponent,
                  "k = (" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," +
                      std::to_string(k[2]) + ") has a zero component");
    }
    if (k[i] < 0) {
      throw Error(ErrorCode::InvalidArgument, "wave-vector components must be >= 1");
    }
  }
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) {
    throw Error(ErrorCode::NonpositiveAmplitude, "amplitude must be finite and >= 0");
  }
  ModeSpec m;
  m.k_ = k;
  m.amplitude_ = amplitude;
  m.omega_ = std::sqrt(static_cast<double>(k.squaredNorm()));
  const Vec3 kh = k.cast<double>() / m.omega_;

  Vec3 seed;
  if (pol_seed) {
    seed = *pol_seed;
    if (!(seed.norm() > 0.0)) {
      throw Error(ErrorCode::DegeneratePolarization, "polarization seed is zero");
    }
    seed.normalize();
  } else {
    seed = Vec3::UnitZ();
    if (kh.cross(seed).norm() < 1e-12) seed = Vec3::UnitX();
  }
  Vec3 e1 = seed - kh.dot(seed) * kh;
  if (e1.norm() < 1e-12) {
    throw Error(ErrorCode::DegeneratePolarization, "polarization seed is parallel to k");
  }
  m.e1_ = e1.normalized();
  m.e2_ = kh.cross(m.e1_);
  return m;
}

namespace detail {

struct Trig {
  Vec3 s, c;
};

inline Trig spatial_trig(const IVec3& k, const Vec3& r) {
  Trig tr;
  for (int i = 0; i < 3; ++i) {
    const double arg = k[i] * r[i];
    tr.s[i] = std::sin(arg);
    tr.c[i] = std::cos(arg);
  }
  return tr;
}

// cos(k_i x_i) * prod_{j != i} sin(k_j x_j)
inline Vec3 electric_profile(const Trig& tr) {
  return {tr.c[0] * tr.s[1] * tr.s[2], tr.s[0] * tr.c[1] * tr.s[2],
          tr.s[0] * tr.s[1] * tr.c[2]};
}

// sin(k_i x_i) * prod_{j != i} cos(k_j x_j)
inline Vec3 magnetic_profile(const Trig& tr) {
  return {tr.s[0] * tr.c[1] * tr.c[2], tr.c[0] * tr.s[1] * tr.c[2],
          tr.c[0] * tr.c[1] * tr.s[2]};
}

}  // namespace detail

inline Vec3 eval_E(const ModeSpec& m, const SpaceTimePoint& p) {
  const auto tr = detail::spatial_trig(m.k(), p.r);
  const double f = m.omega() * m.amplitude() * std::sin(m.omega() * p.t);
  return f * m.e1().cwiseProduct(detail::electric_profile(tr));
}

inline Vec3 eval_B(const ModeSpec& m, const SpaceTimePoint& p) {
  const auto tr = detail::spatial_trig(m.k(), p.r);
  const double f = m.omega() * m.amplitude() * std::cos(m.omega() * p.t);
  return f * m.e2().cwiseProduct(detail::magnetic_profile(tr));
}

/// Vector potential in the gauge A^0 = 0.
inline Vec3 eval_A(const ModeSpec& m, const SpaceTimePoint& p) {
  const auto tr = detail::spatial_trig(m.k(), p.r);
  const double f = m.amplitude() * std::cos(m.omega() * p.t);
  return f * m.e1().cwiseProduct(detail::electric_profile(tr));
}

/// Electric potential with curl C = E: C = B(r, 0) sin(wt) / w.
inline Vec3 eval_C(const ModeSpec& m, const SpaceTimePoint& p) {
  const auto tr = detail::spatial_trig(m.k(), p.r);
  const double f = m.amplitude() * std::sin(m.omega() * p.t);
  return f * m.e2().cwiseProduct(detail::magnetic_profile(tr));
}

inline VectorFieldEvaluator field_E(const ModeSpec& m) {
  return [m](const SpaceTimePoint& p) { return eval_E(m, p); };
}
inline VectorFieldEvaluator field_B(const ModeSpec& m) {
  return [m](const SpaceTimePoint& p) { return eval_B(m, p); };
}
inline VectorFieldEvaluator field_A(const ModeSpec& m) {
  return [m](const SpaceTimePoint& p) { return eval_A(m, p); };
}
inline VectorFieldEvaluator field_C(const ModeSpec& m) {
  return [m](const SpaceTimePoint& p) { return eval_C(m, p); };
}

/// Max absolute violations of the reflection/periodicity relations.
struct SymmetryReport {
  double e_own_axis = 0.0;    // E_i(-x_i) = +E_i(x_i)
  double e_other_axis = 0.0;  // E_i(-x_j) = -E_i(x_j)
  double b_own_axis = 0.0;    // B_i(-x_i) = -B_i(x_i)
  double b_other_axis = 0.0;  // B_i(-x_j) = +B_i(x_j)
  double e_time = 0.0;        // E(-t) = -E(t)
  double b_time = 0.0;        // B(-t) = B(t)
  double space_period = 0.0;
  double time_period = 0.0;
  int samples = 0;

  [[nodiscard]] double max_violation() const {
    return std::max({e_own_axis, e_other_axis, b_own_axis, b_other_axis, e_time, b_time,
                     space_period, time_period});
  }
};

inline SymmetryReport check_symmetries(const VectorFieldEvaluator& E,
                                       const VectorFieldEvaluator& B, double tau,
                                       int n_samples, std::uint64_t seed = 0x5eed) {
  if (n_samples < 1) throw Error(ErrorCode::InvalidArgument, "n_samples must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> space(0.0, two_pi);
  std::uniform_real_distribution<double> time(0.0, tau);
  SymmetryReport rep;
  rep.samples = n_samples;
  auto upd = [](double& slot, double v) { slot = std::max(slot, std::abs(v)); };

  for (int n = 0; n < n_samples; ++n) {
    const SpaceTimePoint p(space(rng), space(rng), space(rng), time(rng));
    const Vec3 e = E(p);
    const Vec3 b = B(p);
    for (int axis = 0; axis < 3; ++axis) {
      SpaceTimePoint q = p;
      q.r[axis] = -q.r[axis];
      const Vec3 eq = E(q);
      const Vec3 bq = B(q);
      for (int i = 0; i < 3; ++i) {
        if (i == axis) {
          upd(rep.e_own_axis, eq[i] - e[i]);
          upd(rep.b_own_axis, bq[i] + b[i]);
        } else {
          upd(rep.e_other_axis, eq[i] + e[i]);
          upd(rep.b_other_axis, bq[i] - b[i]);
        }
      }
      SpaceTimePoint w = p;
      w.r[axis] += two_pi;
      upd(rep.space_period, (E(w) - e).cwiseAbs().maxCoeff());
      upd(rep.space_period, (B(w) - b).cwiseAbs().maxCoeff());
    }
    SpaceTimePoint rev = p;
    rev.t = -p.t;
    upd(rep.e_time, (E(rev) + e).cwiseAbs().maxCoeff());
    upd(rep.b_time, (B(rev) - b).cwiseAbs().maxCoeff());
    SpaceTimePoint later = p;
    later.t += tau;
    upd(rep.time_period, (E(later) - e).cwiseAbs().maxCoeff());
    upd(rep.time_period, (B(later) - b).cwiseAbs().maxCoeff());
  }
  return rep;
}

inline SymmetryReport check_symmetries(const ModeSpec& m, int n_samples,
                                       std::uint64_t seed = 0x5eed) {
  return check_symmetries(field_E(m), field_B(m), m.tau(), n_samples, seed);
}

/// Perfect-conductor wall conditions E x n = 0 and B . n = 0.
struct BoundaryReport {
  double max_tangential_E = 0.0;
  double max_normal_B = 0.0;
  int samples = 0;
};

inline BoundaryReport check_boundary(const VectorFieldEvaluator& E, const VectorFieldEvaluator& B,
                                     double tau, int n_samples, std::uint64_t seed = 0xb0d) {
  if (n_samples < 1) throw Error(ErrorCode::InvalidArgument, "n_samples must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> inside(0.0, pi);
  std::uniform_real_distribution<double> time(0.0, tau);
  BoundaryReport rep;
  rep.samples = n_samples;
  for (int n = 0; n < n_samples; ++n) {
    for (int wall = 0; wall < 6; ++wall) {
      const int axis = wall / 2;
      SpaceTimePoint p(inside(rng), inside(rng), inside(rng), time(rng));
      p.r[axis] = (wall % 2 == 0) ? 0.0 : pi;
      Vec3 nrm = Vec3::Zero();
      nrm[axis] = 1.0;
      rep.max_tangential_E = std::max(rep.max_tangential_E, E(p).cross(nrm).norm());
      rep.max_normal_B = std::max(rep.max_normal_B, std::abs(B(p).dot(nrm)));
    }
  }
  return rep;
}

inline BoundaryReport check_boundary(const ModeSpec& m, int n_samples,
                                     std::uint64_t seed = 0xb0d) {
  return check_boundary(field_E(m), field_B(m), m.tau(), n_samples, seed);
}

}  // namespace emknot::cavity

#endif  // EMKNOT_CAVITY_HPP
