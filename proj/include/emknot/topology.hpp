#ifndef EMKNOT_TOPOLOGY_HPP
#define EMKNOT_TOPOLOGY_HPP

#include "emknot/cavity.hpp"
#include "emknot/clebsch.hpp"
#include "emknot/core.hpp"
#include "emknot/curve.hpp"
#include "emknot/diff.hpp"
#include "emknot/quadrature.hpp"

#include <array>
#include <limits>
#include <optional>

namespace emknot::topology {

/// Integer-valued index computed by quadrature. `rounded` is only set when
/// raw lies within `threshold` of an integer; otherwise the value is
/// reported raw and flagged.
struct TopologicalIndex {
  double raw = 0.0;
  std::optional<long> rounded;
  static constexpr double threshold = 0.01;

  [[nodiscard]] bool non_integer() const { return !rounded.has_value(); }

  static TopologicalIndex from_raw(double raw) {
    TopologicalIndex idx;
    idx.raw = raw;
    const double near = std::round(raw);
    if (std::isfinite(raw) && std::abs(raw - near) <= threshold) {
      idx.rounded = static_cast<long>(near);
    }
    return idx;
  }
};

// ---------------------------------------------------------------------------
// Degree of a map from a parameterized closed surface to S^2.

/// m(a, b) is a unit vector; (a, b) range over the two axes of the grid.
using SphereMap = std::function<Vec3(double, double)>;

/// raw = (1/4pi) int m . (d_a m x d_b m) da db, derivatives by central
/// differences with step h.
inline TopologicalIndex surface_degree(const SphereMap& m, const quadrature::GridSpec& grid,
                                       double h = diff::default_step,
                                       quadrature::Exec exec = {}) {
  if (grid.dims() != 2) throw Error(ErrorCode::InvalidArgument, "surface grids have 2 axes");
  auto density = [&m, h](std::span<const double> ab) {
    const double a = ab[0];
    const double b = ab[1];
    const Vec3 v = m(a, b);
    if (std::abs(v.norm() - 1.0) > 1e-9) {
      throw Error(ErrorCode::DomainError, "sphere map output is not a unit vector");
    }
    const Vec3 da = (m(a + h, b) - m(a - h, b)) / (2.0 * h);
    const Vec3 db = (m(a, b + h) - m(a, b - h)) / (2.0 * h);
    return v.dot(da.cross(db));
  };
  const auto res = quadrature::integrate_params(density, grid, exec);
  return TopologicalIndex::from_raw(res.value / (4.0 * pi));
}

/// Polar-angle x azimuth grid of the unit sphere.
inline quadrature::GridSpec sphere_grid(int n_polar, int n_azimuth) {
  return {{quadrature::Axis::closed(0.0, pi, n_polar),
           quadrature::Axis::periodic_axis(0.0, two_pi, n_azimuth)}};
}

inline Vec3 sphere_point(double polar, double azimuth) {
  return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
          std::cos(polar)};
}

// ---------------------------------------------------------------------------
// Gauss linking number.

inline double min_distance(const Curve3& c1, const Curve3& c2) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& a : c1.vertices()) {
    for (const auto& b : c2.vertices()) best = std::min(best, (a - b).norm());
  }
  return best;
}

/// Midpoint double sum (1/4pi) sum sum (r1 - r2) . (dr1 x dr2) / |r1 - r2|^3.
inline TopologicalIndex gauss_linking(const Curve3& c1, const Curve3& c2,
                                      double min_separation = 1e-6) {
  if (!c1.closed() || !c2.closed()) {
    throw Error(ErrorCode::OpenCurve, "linking numbers are defined for closed curves");
  }
  const double sep = min_distance(c1, c2);
  if (sep <= min_separation) {
    throw Error(ErrorCode::CurvesIntersect,
                "curves come within " + std::to_string(sep) + " of each other");
  }
  std::vector<Vec3> mid2, d2;
  for (std::size_t j = 0; j < c2.segments(); ++j) {
    mid2.emplace_back(0.5 * (c2.segment_start(j) + c2.segment_end(j)));
    d2.emplace_back(c2.segment_end(j) - c2.segment_start(j));
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < c1.segments(); ++i) {
    const Vec3 r1 = 0.5 * (c1.segment_start(i) + c1.segment_end(i));
    const Vec3 d1 = c1.segment_end(i) - c1.segment_start(i);
    double row = 0.0;
    for (std::size_t j = 0; j < mid2.size(); ++j) {
      const Vec3 r = r1 - mid2[j];
      const double dist = r.norm();
      row += r.dot(d1.cross(d2[j])) / (dist * dist * dist);
    }
    acc += row;
  }
  return TopologicalIndex::from_raw(acc / (4.0 * pi));
}

// ---------------------------------------------------------------------------
// Level curves of complex scalars.

struct TraceOptions {
  double step = 1e-2;
  int max_steps = 20000;
  double seed_tolerance = 1e-6;
  double h = diff::default_step;
};

struct TraceResult {
  Curve3 curve;
  bool closed = false;
  int steps = 0;
};

/// Unit tangent of the level curve {phi = c} through x: the normalized
/// grad Re(phi - c) x grad Im(phi - c).
inline Vec3 level_direction(const clebsch::ComplexScalarField& phi, std::complex<double> c,
                            const Vec3& x, double h) {
  auto re = [&](const SpaceTimePoint& p) { return (phi(p).z - c).real(); };
  auto im = [&](const SpaceTimePoint& p) { return (phi(p).z - c).imag(); };
  const SpaceTimePoint p(x, 0.0);
  const Vec3 d = diff::gradient(re, p, h).cross(diff::gradient(im, p, h));
  const double n = d.norm();
  if (!(n > 1e-12)) {
    throw Error(ErrorCode::DegenerateDirection, "level-curve direction vanishes");
  }
  return d / n;
}

inline double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
  const Vec3 ab = b - a;
  const double len2 = ab.squaredNorm();
  const double s = len2 > 0.0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
  return (p - (a + s * ab)).norm();
}

/// Traces the level curve phi = c through `seed` at t = 0 with fixed-step
/// RK4. The trace closes once, after at least 8 steps and after leaving the
/// seed neighbourhood, a step passes within step/2 of the seed. If max_steps
/// is reached first, the open trajectory is returned with closed = false.
inline TraceResult trace_level_curve(const clebsch::ComplexScalarField& phi,
                                     std::complex<double> c, const Vec3& seed,
                                     const TraceOptions& opt = {}) {
  const auto at_seed = phi(SpaceTimePoint(seed, 0.0));
  if (at_seed.infinite || std::abs(at_seed.z - c) > opt.seed_tolerance) {
    throw Error(ErrorCode::NotOnFiber, "seed does not lie on the requested level curve");
  }
  auto f = [&](const Vec3& x) { return level_direction(phi, c, x, opt.h); };
  const double h = opt.step;
  std::vector<Vec3> pts{seed};
  bool left = false;
  for (int n = 1; n <= opt.max_steps; ++n) {
    const Vec3 x = pts.back();
    const Vec3 k1 = f(x);
    const Vec3 k2 = f(x + 0.5 * h * k1);
    const Vec3 k3 = f(x + 0.5 * h * k2);
    const Vec3 k4 = f(x + h * k3);
    const Vec3 next = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if ((next - seed).norm() > 4.0 * h) left = true;
    if (left && n >= static_cast<int>(Curve3::min_vertices)) {
      const double miss = point_segment_distance(seed, x, next);
      if (miss <= 0.5 * h) {
        TraceResult res{Curve3(std::move(pts), true, miss), true, n};
        return res;
      }
    }
    pts.push_back(next);
  }
  const double gap = (pts.back() - seed).norm();
  return {Curve3(std::move(pts), false, gap), false, opt.max_steps};
}

/// Hopf map R^3 -> S^2 (via inverse stereographic projection to S^3),
///   phi(r) = (2z + i(r^2 - 1)) / (2(x + iy)).
/// The level curve over 0 is the unit circle in the z = 0 plane; every pair
/// of distinct level curves links once.
inline clebsch::ComplexScalarField hopf_map() {
  return [](const SpaceTimePoint& p) -> ExtendedComplex {
    const Vec3& r = p.r;
    const std::complex<double> num(2.0 * r.z(), r.squaredNorm() - 1.0);
    const std::complex<double> den(2.0 * r.x(), 2.0 * r.y());
    if (den == std::complex<double>(0.0, 0.0)) return ExtendedComplex::infinity();
    return num / den;
  };
}

/// A point with y = 0, x > 0 on the Hopf fiber over c.
inline Vec3 hopf_fiber_seed(std::complex<double> c) {
  const double a = c.real();
  const double b = c.imag();
  const double x = (b + std::sqrt(b * b + 1.0 + a * a)) / (1.0 + a * a);
  return {x, 0.0, a * x};
}

// ---------------------------------------------------------------------------
// Spacetime integrals of mode fields.

/// int over T^4 of (E^2 - B^2)/2.
inline quadrature::QuadResult t4_degree(const VectorFieldEvaluator& E,
                                        const VectorFieldEvaluator& B, double tau, int n_space,
                                        int n_time, quadrature::Exec exec = {}) {
  return quadrature::integrate_box(
      [&](const SpaceTimePoint& x) { return 0.5 * (E(x).squaredNorm() - B(x).squaredNorm()); },
      quadrature::GridSpec::torus(n_space, n_time, tau), exec);
}

/// Pointwise [E(r,t).E(r,t+tau/4) - B(r,t).B(r,t+tau/4)] / 2 for a mode.
inline ScalarEvaluator degree_density(const cavity::ModeSpec& m) {
  return [m](const SpaceTimePoint& x) {
    const auto tr = cavity::detail::spatial_trig(m.k(), x.r);
    const Vec3 e = m.e1().cwiseProduct(cavity::detail::electric_profile(tr));
    const Vec3 b = m.e2().cwiseProduct(cavity::detail::magnetic_profile(tr));
    const double wa = m.omega() * m.amplitude();
    const double wt = m.omega() * x.t;
    // shifting t by tau/4 advances the phase by pi/2
    const double ee = std::sin(wt) * std::cos(wt);
    const double bb = -std::cos(wt) * std::sin(wt);
    return 0.5 * wa * wa * (ee * e.squaredNorm() - bb * b.squaredNorm());
  };
}

/// Cavity integral of the degree density at time t.
inline double degree_integrand(const cavity::ModeSpec& m, double t, int n_space = 48,
                               quadrature::Exec exec = {}) {
  const auto density = degree_density(m);
  auto at_t = [&density, t](const std::array<double, 4>& c) {
    return density(SpaceTimePoint(c[0], c[1], c[2], t));
  };
  return quadrature::detail::integrate_once(at_t, quadrature::GridSpec::cavity(n_space), exec);
}

struct DegreeResult {
  double d = 0.0;
  double photon_n = 0.0;
  quadrature::QuadResult quad;  // of the un-scaled cell integral
};

/// d = 4 int_0^{tau/4} int_C density; photon_n = d / 4.
inline DegreeResult degree_d(const cavity::ModeSpec& m, int n_space = 48, int n_time = 64,
                             quadrature::Exec exec = {}) {
  DegreeResult res;
  res.quad = quadrature::integrate_cell(degree_density(m), m.tau(), n_space, n_time, exec);
  res.d = 4.0 * res.quad.value;
  res.photon_n = res.d / 4.0;
  return res;
}

/// Full-period variants: the signed integral of degree_integrand over
/// [0, tau), or (absolute) the integral of its modulus. Each quarter period
/// gets its own Gauss-Legendre rule so the kinks of |.| sit on panel edges.
inline double degree_d_fullperiod(const cavity::ModeSpec& m, bool absolute, int n_space = 48,
                                  int n_time = 64, quadrature::Exec exec = {}) {
  const double quarter = m.tau() / 4.0;
  double total = 0.0;
  for (int q = 0; q < 4; ++q) {
    const auto [nodes, weights] =
        quadrature::axis_rule(quadrature::Axis::closed(q * quarter, (q + 1) * quarter, n_time));
    double part = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double v = degree_integrand(m, nodes[i], n_space, exec);
      part += weights[i] * (absolute ? std::abs(v) : v);
    }
    total += part;
  }
  return total;
}

/// Integral of degree_integrand over the q-th quarter period [q tau/4, (q+1) tau/4].
inline double quarter_integral(const cavity::ModeSpec& m, int q, int n_space = 48,
                               int n_time = 64, quadrature::Exec exec = {}) {
  const double quarter = m.tau() / 4.0;
  const auto [nodes, weights] =
      quadrature::axis_rule(quadrature::Axis::closed(q * quarter, (q + 1) * quarter, n_time));
  double part = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    part += weights[i] * degree_integrand(m, nodes[i], n_space, exec);
  }
  return part;
}

// ---------------------------------------------------------------------------
// Reflection group of the spacetime torus.
//
// G = G_s x G_t: G_s is generated by the reflections x_i -> 2pi - x_i in the
// walls x_i = pi (8 elements); G_t = {I, t -> tau/2 - t, t -> -t,
// t -> t + tau/2}. Its 32 images of the fundamental cell C x [0, tau/4]
// tile T^4.

enum class TimeOp { Identity, ReflectQuarter, Reverse, HalfShift };

struct GroupElement {
  std::array<bool, 3> reflect{false, false, false};
  TimeOp time = TimeOp::Identity;

  /// +1 if orientation preserving on T^4, -1 otherwise.
  [[nodiscard]] int orientation() const {
    int s = 1;
    for (bool r : reflect) {
      if (r) s = -s;
    }
    if (time == TimeOp::ReflectQuarter || time == TimeOp::Reverse) s = -s;
    return s;
  }

  [[nodiscard]] SpaceTimePoint apply(const SpaceTimePoint& p, double tau) const {
    SpaceTimePoint q = p;
    for (int i = 0; i < 3; ++i) {
      if (reflect[static_cast<std::size_t>(i)]) q.r[i] = two_pi - q.r[i];
    }
    switch (time) {
      case TimeOp::Identity: break;
      case TimeOp::ReflectQuarter: q.t = 0.5 * tau - p.t; break;
      case TimeOp::Reverse: q.t = tau - p.t; break;
      case TimeOp::HalfShift: q.t = p.t + 0.5 * tau; break;
    }
    return q;
  }

  /// Component signs s with E(g x) = s_E * E(x), B(g x) = s_B * B(x) for modes.
  [[nodiscard]] std::pair<Vec3, Vec3> mode_field_signs() const {
    Vec3 se = Vec3::Ones();
    Vec3 sb = Vec3::Ones();
    for (int j = 0; j < 3; ++j) {
      if (!reflect[static_cast<std::size_t>(j)]) continue;
      for (int i = 0; i < 3; ++i) {
        if (i == j) {
          sb[i] = -sb[i];
        } else {
          se[i] = -se[i];
        }
      }
    }
    double te = 1.0;
    double tb = 1.0;
    switch (time) {
      case TimeOp::Identity: break;
      case TimeOp::ReflectQuarter: tb = -1.0; break;
      case TimeOp::Reverse: te = -1.0; break;
      case TimeOp::HalfShift: te = -1.0; tb = -1.0; break;
    }
    return {te * se, tb * sb};
  }
};

inline std::vector<GroupElement> reflection_group() {
  std::vector<GroupElement> out;
  for (TimeOp op : {TimeOp::Identity, TimeOp::ReflectQuarter, TimeOp::Reverse,
                    TimeOp::HalfShift}) {
    for (int mask = 0; mask < 8; ++mask) {
      GroupElement g;
      for (int i = 0; i < 3; ++i) g.reflect[static_cast<std::size_t>(i)] = (mask >> i) & 1;
      g.time = op;
      out.push_back(g);
    }
  }
  return out;
}

/// Finds g and a point of the fundamental cell C x [0, tau/4] with
/// g(cell point) = p (modulo the torus periods).
inline std::pair<GroupElement, SpaceTimePoint> reduce_to_fundamental_cell(const SpaceTimePoint& p,
                                                                          double tau) {
  const SpaceTimePoint w = p.reduced(tau);
  GroupElement g;
  SpaceTimePoint cell = w;
  for (int i = 0; i < 3; ++i) {
    if (w.r[i] > pi) {
      g.reflect[static_cast<std::size_t>(i)] = true;
      cell.r[i] = two_pi - w.r[i];
    }
  }
  const double q = tau / 4.0;
  if (w.t <= q) {
    g.time = TimeOp::Identity;
  } else if (w.t <= 2.0 * q) {
    g.time = TimeOp::ReflectQuarter;
    cell.t = 0.5 * tau - w.t;
  } else if (w.t <= 3.0 * q) {
    g.time = TimeOp::HalfShift;
    cell.t = w.t - 0.5 * tau;
  } else {
    g.time = TimeOp::Reverse;
    cell.t = tau - w.t;
  }
  return {g, cell};
}

/// Max violation of E(g x) = s_E E(x), B(g x) = s_B B(x) over all 32
/// group elements and random points.
inline double check_orbifold_equivariance(const cavity::ModeSpec& m, int n_samples,
                                          std::uint64_t seed = 0x32) {
  const auto group = reflection_group();
  const auto pts = clebsch::random_samples(n_samples, two_pi, m.tau(), seed);
  double worst = 0.0;
  for (const auto& p : pts) {
    const Vec3 e = cavity::eval_E(m, p);
    const Vec3 b = cavity::eval_B(m, p);
    for (const auto& g : group) {
      const auto [se, sb] = g.mode_field_signs();
      const auto q = g.apply(p, m.tau());
      worst = std::max(worst, (cavity::eval_E(m, q) - se.cwiseProduct(e)).cwiseAbs().maxCoeff());
      worst = std::max(worst, (cavity::eval_B(m, q) - sb.cwiseProduct(b)).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

}  // namespace emknot::topology

#endif  // EMKNOT_TOPOLOGY_HPP
