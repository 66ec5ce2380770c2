#ifndef EMKNOT_CLEBSCH_HPP
#define EMKNOT_CLEBSCH_HPP

// Clebsch variables of radiation fields.
//
// A complex scalar phi corresponds to the pair
//   p = 1 / (1 + |phi|^2),   s = arg(phi) / 2pi  (mod 1),
// and generates B = grad p x grad s. The electric scalar theta gives (v, u)
// the same way and E = grad u x grad v. The two scalars are dual when
//   B = d0u grad v - d0v grad u,   E = d0s grad p - d0p grad s.

#include "emknot/cavity.hpp"
#include "emknot/core.hpp"
#include "emknot/diff.hpp"
#include "emknot/quadrature.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

namespace emknot::clebsch {

/// Scalar on spacetime with optional analytic derivatives. Missing
/// derivatives fall back to central differences with step h. Phase-like
/// scalars (modulo_one) are differenced modulo 1.
struct ScalarField {
  ScalarEvaluator value;
  GradientEvaluator grad;  // optional
  ScalarEvaluator dt;      // optional
  bool modulo_one = false;
  double h = diff::default_step;

  double operator()(const SpaceTimePoint& p) const { return value(p); }

  [[nodiscard]] Vec3 gradient(const SpaceTimePoint& p) const {
    if (grad) return grad(p);
    return modulo_one ? diff::gradient_mod1(value, p, h) : diff::gradient(value, p, h);
  }

  [[nodiscard]] double time_derivative(const SpaceTimePoint& p) const {
    if (dt) return dt(p);
    return modulo_one ? diff::partial_mod1(value, p, 3, h) : diff::partial(value, p, 3, h);
  }
};

/// (magnitude, phase) pair. `normalized` means the magnitude is meant to
/// stay in [0, 1] and the phase is an argument in units of 2pi; generalized
/// pairs (normalized = false) are accepted for field construction only.
struct ClebschPair {
  ScalarField magnitude;
  ScalarField phase;
  bool normalized = true;
};

using ComplexScalarField = std::function<ExtendedComplex(const SpaceTimePoint&)>;

inline double magnitude_of(const ExtendedComplex& w) {
  if (w.infinite) return 0.0;
  return 1.0 / (1.0 + std::norm(w.z));
}

inline double phase_of(const ExtendedComplex& w) {
  if (w.infinite || w.z == std::complex<double>(0.0, 0.0)) return 0.0;
  return std::arg(w.z) / two_pi;
}

/// p = 1/(1+|phi|^2), s = arg(phi)/2pi.
inline ClebschPair scalar_to_clebsch(ComplexScalarField phi) {
  ClebschPair pair;
  pair.magnitude.value = [phi](const SpaceTimePoint& x) { return magnitude_of(phi(x)); };
  pair.phase.value = [phi](const SpaceTimePoint& x) { return phase_of(phi(x)); };
  pair.phase.modulo_one = true;
  pair.normalized = true;
  return pair;
}

/// phi = sqrt((1-p)/p) exp(2 pi i s); p = 0 maps to the point at infinity.
inline ExtendedComplex complex_from(double p, double s) {
  if (p < 0.0 || p > 1.0 || !std::isfinite(p)) {
    throw Error(ErrorCode::DomainError,
                "magnitude variable " + std::to_string(p) + " is outside [0, 1]");
  }
  if (p == 0.0) return ExtendedComplex::infinity();
  return std::polar(std::sqrt((1.0 - p) / p), two_pi * s);
}

inline ComplexScalarField clebsch_to_scalar(const ClebschPair& pair) {
  return [pair](const SpaceTimePoint& x) {
    return complex_from(pair.magnitude(x), pair.phase(x));
  };
}

/// grad magnitude x grad phase.
inline Vec3 cross_field(const ClebschPair& pair, const SpaceTimePoint& x) {
  return pair.magnitude.gradient(x).cross(pair.phase.gradient(x));
}

struct FieldPair {
  VectorFieldEvaluator B;
  VectorFieldEvaluator E;
};

/// B = grad p x grad s from the magnetic pair (p, s); E = grad u x grad v
/// from the electric pair (v, u).
inline FieldPair fields_from_clebsch(const ClebschPair& mag, const ClebschPair& el) {
  return {[mag](const SpaceTimePoint& x) { return cross_field(mag, x); },
          [el](const SpaceTimePoint& x) { return Vec3(-cross_field(el, x)); }};
}

/// d0 phase grad magnitude - d0 magnitude grad phase.
inline Vec3 time_exchange_field(const ClebschPair& pair, const SpaceTimePoint& x) {
  return pair.phase.time_derivative(x) * pair.magnitude.gradient(x) -
         pair.magnitude.time_derivative(x) * pair.phase.gradient(x);
}

struct DualityReport {
  double b_violation = 0.0;  // max |grad p x grad s - (d0u grad v - d0v grad u)|
  double e_violation = 0.0;  // max |grad u x grad v - (d0s grad p - d0p grad s)|
  // Only filled when reference fields are supplied.
  std::optional<double> b_reconstruction;  // max |grad p x grad s - B_ref|
  std::optional<double> e_reconstruction;  // max |grad u x grad v - E_ref|
  int samples = 0;
};

inline DualityReport verify_duality(const ClebschPair& mag, const ClebschPair& el,
                                    const std::vector<SpaceTimePoint>& samples,
                                    const VectorFieldEvaluator& B_ref = {},
                                    const VectorFieldEvaluator& E_ref = {}) {
  DualityReport rep;
  rep.samples = static_cast<int>(samples.size());
  if (B_ref) rep.b_reconstruction = 0.0;
  if (E_ref) rep.e_reconstruction = 0.0;
  for (const auto& x : samples) {
    const Vec3 b = cross_field(mag, x);
    const Vec3 e = -cross_field(el, x);
    rep.b_violation = std::max(rep.b_violation, (b - time_exchange_field(el, x)).norm());
    rep.e_violation = std::max(rep.e_violation, (e - time_exchange_field(mag, x)).norm());
    if (B_ref) rep.b_reconstruction = std::max(*rep.b_reconstruction, (b - B_ref(x)).norm());
    if (E_ref) rep.e_reconstruction = std::max(*rep.e_reconstruction, (e - E_ref(x)).norm());
  }
  return rep;
}

/// Uniform random spacetime samples in box^3 x [0, t_max).
inline std::vector<SpaceTimePoint> random_samples(int n, double box, double t_max,
                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> space(0.0, box);
  std::uniform_real_distribution<double> time(0.0, t_max);
  std::vector<SpaceTimePoint> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.emplace_back(space(rng), space(rng), space(rng), time(rng));
  return out;
}

// ---------------------------------------------------------------------------
// Gauge transformation T1: s -> s + g(p).

/// Returns (p, s + g(p)). The generated magnetic field is unchanged since
/// grad g(p) is parallel to grad p. g_prime, when given, keeps gradients
/// analytic.
inline ClebschPair gauge_T1(const ClebschPair& pair, std::function<double(double)> g,
                            std::function<double(double)> g_prime = {}) {
  ClebschPair out = pair;
  const ScalarField mag = pair.magnitude;
  const ScalarField ph = pair.phase;
  out.phase.value = [mag, ph, g](const SpaceTimePoint& x) { return ph(x) + g(mag(x)); };
  if (g_prime && ph.grad && mag.grad) {
    out.phase.grad = [mag, ph, g_prime](const SpaceTimePoint& x) {
      return Vec3(ph.gradient(x) + g_prime(mag(x)) * mag.gradient(x));
    };
  } else {
    out.phase.grad = {};
  }
  if (g_prime && ph.dt && mag.dt) {
    out.phase.dt = [mag, ph, g_prime](const SpaceTimePoint& x) {
      return ph.time_derivative(x) + g_prime(mag(x)) * mag.time_derivative(x);
    };
  } else {
    out.phase.dt = {};
  }
  return out;
}

/// Piecewise-linear s = f(p), clamped outside the sampled range.
class WallFunction {
 public:
  WallFunction(std::vector<double> p, std::vector<double> s)
      : p_(std::move(p)), s_(std::move(s)) {}

  double operator()(double p) const {
    if (p_.empty()) return 0.0;
    if (p <= p_.front()) return s_.front();
    if (p >= p_.back()) return s_.back();
    const auto it = std::upper_bound(p_.begin(), p_.end(), p);
    const std::size_t j = static_cast<std::size_t>(it - p_.begin());
    const double w = (p - p_[j - 1]) / (p_[j] - p_[j - 1]);
    return s_[j - 1] + w * (s_[j] - s_[j - 1]);
  }

  [[nodiscard]] std::size_t knots() const { return p_.size(); }
  [[nodiscard]] const std::vector<double>& p_knots() const { return p_; }

 private:
  std::vector<double> p_;
  std::vector<double> s_;
};

struct WallSamplingOptions {
  int samples_per_wall = 400;
  double time = 0.0;
  // Samples closer than p_resolution in p whose s differ by more than
  // branch_tolerance are taken as evidence of several branches.
  double p_resolution = 1e-3;
  double branch_tolerance = 1e-2;
  std::uint64_t seed = 0x3a11;
};

/// Fits the single-branch wall relation s = f(p) from (p, s) samples taken
/// on the six walls of [0, pi]^3. Throws MultiBranchWallFunction when the
/// samples do not lie on one branch.
inline WallFunction fit_wall_function(const ClebschPair& pair, const WallSamplingOptions& opt = {}) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> inside(0.0, pi);
  std::vector<std::pair<double, double>> samples;
  for (int wall = 0; wall < 6; ++wall) {
    for (int n = 0; n < opt.samples_per_wall; ++n) {
      SpaceTimePoint x(inside(rng), inside(rng), inside(rng), opt.time);
      x.r[wall / 2] = (wall % 2 == 0) ? 0.0 : pi;
      samples.emplace_back(pair.magnitude(x), pair.phase(x));
    }
  }
  std::sort(samples.begin(), samples.end());
  std::vector<double> ps, ss;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto [p, s] = samples[i];
    if (!ps.empty()) {
      const double dp = p - ps.back();
      const double ds = std::abs(s - ss.back());
      if (dp <= opt.p_resolution && ds > opt.branch_tolerance) {
        throw Error(ErrorCode::MultiBranchWallFunction,
                    "wall samples at p = " + std::to_string(p) +
                        " take several phase values; only single-branch wall relations are "
                        "supported");
      }
      if (dp <= 0.0) continue;  // duplicate abscissa
    }
    ps.push_back(p);
    ss.push_back(s);
  }
  return {std::move(ps), std::move(ss)};
}

// ---------------------------------------------------------------------------
// Moebius transformation T2.

inline ExtendedComplex mobius(const ExtendedComplex& zeta) {
  if (zeta.infinite) return {1.0, 0.0};
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> den = zeta.z + i;
  if (den == std::complex<double>(0.0, 0.0)) return ExtendedComplex::infinity();
  return (zeta.z - i) / den;
}

/// phi_new = (zeta - i) / (zeta + i). Maps the real axis to the unit circle
/// and conjugate arguments to conjugate-inverse values.
inline ComplexScalarField mobius_T2(ComplexScalarField zeta) {
  return [zeta](const SpaceTimePoint& x) { return mobius(zeta(x)); };
}

// ---------------------------------------------------------------------------
// Primed Clebsch variables and starred fields.

struct PrimedPairs {
  ClebschPair PS;
  ClebschPair VU;
  double omega = 1.0;

  [[nodiscard]] double tau() const { return two_pi / omega; }
};

/// Builds
///   P = (1 + (p0 - 1/2) cos wt) / 2,   S = 2 s0,
///   V = (1 + vq sin wt) / 2,           U = 2 uq,
/// with p0, s0 read at t = 0 and vq, uq at t = pi / (2w). P and V throw
/// DomainError where they leave [0, 1].
inline PrimedPairs primed_clebsch(const ScalarField& p0, const ScalarField& s0,
                                  const ScalarField& vq, const ScalarField& uq, double omega) {
  if (!(omega > 0.0)) throw Error(ErrorCode::NonpositiveFrequency, "omega must be positive");
  const double tq = pi / (2.0 * omega);
  auto at = [](double t0, const SpaceTimePoint& x) { return SpaceTimePoint(x.r, t0); };
  auto check = [](double v, const char* what) {
    if (v < -1e-12 || v > 1.0 + 1e-12) {
      throw Error(ErrorCode::DomainError,
                  std::string(what) + " = " + std::to_string(v) + " is outside [0, 1]");
    }
    return v;
  };

  PrimedPairs out;
  out.omega = omega;

  auto& P = out.PS.magnitude;
  P.value = [=](const SpaceTimePoint& x) {
    return check(0.5 * (1.0 + (p0(at(0.0, x)) - 0.5) * std::cos(omega * x.t)), "P");
  };
  P.grad = [=](const SpaceTimePoint& x) {
    return Vec3(0.5 * std::cos(omega * x.t) * p0.gradient(at(0.0, x)));
  };
  P.dt = [=](const SpaceTimePoint& x) {
    return -0.5 * omega * (p0(at(0.0, x)) - 0.5) * std::sin(omega * x.t);
  };

  auto& S = out.PS.phase;
  S.value = [=](const SpaceTimePoint& x) { return 2.0 * s0(at(0.0, x)); };
  S.grad = [=](const SpaceTimePoint& x) { return Vec3(2.0 * s0.gradient(at(0.0, x))); };
  S.dt = [](const SpaceTimePoint&) { return 0.0; };
  S.modulo_one = s0.modulo_one;

  auto& V = out.VU.magnitude;
  V.value = [=](const SpaceTimePoint& x) {
    return check(0.5 * (1.0 + vq(at(tq, x)) * std::sin(omega * x.t)), "V");
  };
  V.grad = [=](const SpaceTimePoint& x) {
    return Vec3(0.5 * std::sin(omega * x.t) * vq.gradient(at(tq, x)));
  };
  V.dt = [=](const SpaceTimePoint& x) {
    return 0.5 * omega * vq(at(tq, x)) * std::cos(omega * x.t);
  };

  auto& U = out.VU.phase;
  U.value = [=](const SpaceTimePoint& x) { return 2.0 * uq(at(tq, x)); };
  U.grad = [=](const SpaceTimePoint& x) { return Vec3(2.0 * uq.gradient(at(tq, x))); };
  U.dt = [](const SpaceTimePoint&) { return 0.0; };
  U.modulo_one = uq.modulo_one;

  return out;
}

struct StarredFields {
  VectorFieldEvaluator Estar;
  VectorFieldEvaluator Bstar;
};

/// E* = d0S grad P - d0P grad S,  B* = d0U grad V - d0V grad U.
inline StarredFields starred_fields(const ClebschPair& PS, const ClebschPair& VU) {
  return {[PS](const SpaceTimePoint& x) { return time_exchange_field(PS, x); },
          [VU](const SpaceTimePoint& x) { return time_exchange_field(VU, x); }};
}

/// phi' and theta' from the primed pairs, and theta'_Ad(r, t) = theta'(r, t + tau/4).
struct PrimedScalars {
  ComplexScalarField phi;
  ComplexScalarField theta;
  ComplexScalarField theta_ad;
};

inline PrimedScalars primed_scalars(const PrimedPairs& pairs) {
  PrimedScalars out;
  out.phi = clebsch_to_scalar(pairs.PS);
  out.theta = clebsch_to_scalar(pairs.VU);
  const double quarter = pairs.tau() / 4.0;
  auto theta = out.theta;
  out.theta_ad = [theta, quarter](const SpaceTimePoint& x) {
    return theta(SpaceTimePoint(x.r, x.t + quarter));
  };
  return out;
}

/// Starred fields of a cavity mode built from gradient corrections,
///   E* = E + grad(alpha),  alpha = w A sin(wt) prod sin(k_i x_i),
///   B* = B + grad(beta),   beta  = w A cos(wt) prod cos(k_i x_i).
/// alpha vanishes on the walls and grad(beta) is tangent to them, which are
/// the properties the integral identities rely on. No closed-form Clebsch
/// pair is known for a general mode, so this is the form used for modes.
inline StarredFields mode_starred_fields(const cavity::ModeSpec& m) {
  const double scale = m.omega() * m.amplitude();
  const Vec3 kd = m.k().cast<double>();
  auto grad_alpha = [m, scale, kd](const SpaceTimePoint& x) {
    const auto tr = cavity::detail::spatial_trig(m.k(), x.r);
    return Vec3(scale * std::sin(m.omega() * x.t) *
                kd.cwiseProduct(cavity::detail::electric_profile(tr)));
  };
  auto grad_beta = [m, scale, kd](const SpaceTimePoint& x) {
    const auto tr = cavity::detail::spatial_trig(m.k(), x.r);
    return Vec3(-scale * std::cos(m.omega() * x.t) *
                kd.cwiseProduct(cavity::detail::magnetic_profile(tr)));
  };
  return {[m, grad_alpha](const SpaceTimePoint& x) {
            return Vec3(cavity::eval_E(m, x) + grad_alpha(x));
          },
          [m, grad_beta](const SpaceTimePoint& x) {
            return Vec3(cavity::eval_B(m, x) + grad_beta(x));
          }};
}

// ---------------------------------------------------------------------------
// Checks on starred fields.

struct GradientRelationReport {
  double curl_E_residual = 0.0;    // max |curl(E* - E)|
  double curl_B_residual = 0.0;    // max |curl(B* - B)|
  double wall_tangential_dE = 0.0; // max |(E* - E) x n| on the walls
  double wall_normal_dB = 0.0;     // max |(B* - B) . n| on the walls
  int samples = 0;

  [[nodiscard]] double max_curl() const { return std::max(curl_E_residual, curl_B_residual); }
  [[nodiscard]] double max_wall() const { return std::max(wall_tangential_dE, wall_normal_dB); }
};

/// E* - E and B* - B must be curl-free, with E* - E normal to the walls and
/// B* - B tangent to them.
inline GradientRelationReport check_gradient_relation(const VectorFieldEvaluator& E,
                                                      const VectorFieldEvaluator& Estar,
                                                      const VectorFieldEvaluator& B,
                                                      const VectorFieldEvaluator& Bstar,
                                                      double tau, int n_samples,
                                                      std::uint64_t seed = 0x9ad,
                                                      double h = diff::default_step) {
  GradientRelationReport rep;
  rep.samples = n_samples;
  auto dE = [&](const SpaceTimePoint& x) { return Vec3(Estar(x) - E(x)); };
  auto dB = [&](const SpaceTimePoint& x) { return Vec3(Bstar(x) - B(x)); };
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> inside(0.0, pi);
  std::uniform_real_distribution<double> time(0.0, tau);
  for (int n = 0; n < n_samples; ++n) {
    const SpaceTimePoint x(inside(rng), inside(rng), inside(rng), time(rng));
    rep.curl_E_residual = std::max(rep.curl_E_residual, diff::curl(dE, x, h).norm());
    rep.curl_B_residual = std::max(rep.curl_B_residual, diff::curl(dB, x, h).norm());
    for (int wall = 0; wall < 6; ++wall) {
      SpaceTimePoint w = x;
      const int axis = wall / 2;
      w.r[axis] = (wall % 2 == 0) ? 0.0 : pi;
      Vec3 nrm = Vec3::Zero();
      nrm[axis] = 1.0;
      rep.wall_tangential_dE = std::max(rep.wall_tangential_dE, dE(w).cross(nrm).norm());
      rep.wall_normal_dB = std::max(rep.wall_normal_dB, std::abs(dB(w).dot(nrm)));
    }
  }
  return rep;
}

struct LemmaIntegrals {
  double b_bstar = 0.0;  // integral of B . B*
  double b_sq = 0.0;     // integral of B^2
  double e_estar = 0.0;  // integral of E . E*
  double e_sq = 0.0;     // integral of E^2
};

/// Cavity integrals of B.B*, B^2, E.E*, E^2 at time t.
inline LemmaIntegrals lemma_integrals(const VectorFieldEvaluator& B,
                                      const VectorFieldEvaluator& Bstar,
                                      const VectorFieldEvaluator& E,
                                      const VectorFieldEvaluator& Estar, double t,
                                      int n_space = 48, quadrature::Exec exec = {}) {
  const auto grid = quadrature::GridSpec::cavity(n_space);
  auto at = [t](const SpaceTimePoint& x) { return SpaceTimePoint(x.r, t); };
  LemmaIntegrals out;
  out.b_bstar = quadrature::integrate_box(
                    [&](const SpaceTimePoint& x) { return B(at(x)).dot(Bstar(at(x))); }, grid, exec)
                    .value;
  out.b_sq = quadrature::integrate_box(
                 [&](const SpaceTimePoint& x) { return B(at(x)).squaredNorm(); }, grid, exec)
                 .value;
  out.e_estar = quadrature::integrate_box(
                    [&](const SpaceTimePoint& x) { return E(at(x)).dot(Estar(at(x))); }, grid, exec)
                    .value;
  out.e_sq = quadrature::integrate_box(
                 [&](const SpaceTimePoint& x) { return E(at(x)).squaredNorm(); }, grid, exec)
                 .value;
  return out;
}

// ---------------------------------------------------------------------------
// Exactly solvable configuration for the primed construction.

/// The (1,1,0) standing wave of the cavity (e1 = z, omega = sqrt 2),
///   E = w A sin(wt) (0, 0, sin x sin y),
///   B = A cos(wt) (sin x cos y, -cos x sin y, 0),
/// together with closed-form Clebsch inputs for the primed construction:
///   p0 = 1/2 + sin x sin y / 2,  s0 = 2 A z        (grad p0 x grad s0 = B(r, 0))
///   vq = (1 - cos y) / 2,        uq = -2 w A cos x (grad uq x grad vq = E(r, tau/4))
/// This mode has a vanishing wave component and so is not a ModeSpec.
struct PlanarModeClebsch {
  double amplitude = 1.0;
  double omega = std::sqrt(2.0);
  VectorFieldEvaluator E;
  VectorFieldEvaluator B;
  ScalarField p0, s0, vq, uq;

  [[nodiscard]] double tau() const { return two_pi / omega; }
};

inline PlanarModeClebsch planar_mode_clebsch(double amplitude) {
  PlanarModeClebsch c;
  c.amplitude = amplitude;
  const double w = c.omega;
  const double a = amplitude;
  c.E = [w, a](const SpaceTimePoint& x) {
    return Vec3(0.0, 0.0, w * a * std::sin(w * x.t) * std::sin(x.r.x()) * std::sin(x.r.y()));
  };
  c.B = [w, a](const SpaceTimePoint& x) {
    const double f = a * std::cos(w * x.t);
    return Vec3(f * std::sin(x.r.x()) * std::cos(x.r.y()),
                -f * std::cos(x.r.x()) * std::sin(x.r.y()), 0.0);
  };
  c.p0.value = [](const SpaceTimePoint& x) {
    return 0.5 + 0.5 * std::sin(x.r.x()) * std::sin(x.r.y());
  };
  c.p0.grad = [](const SpaceTimePoint& x) {
    return Vec3(0.5 * std::cos(x.r.x()) * std::sin(x.r.y()),
                0.5 * std::sin(x.r.x()) * std::cos(x.r.y()), 0.0);
  };
  c.s0.value = [a](const SpaceTimePoint& x) { return 2.0 * a * x.r.z(); };
  c.s0.grad = [a](const SpaceTimePoint&) { return Vec3(0.0, 0.0, 2.0 * a); };
  c.vq.value = [](const SpaceTimePoint& x) { return 0.5 * (1.0 - std::cos(x.r.y())); };
  c.vq.grad = [](const SpaceTimePoint& x) { return Vec3(0.0, 0.5 * std::sin(x.r.y()), 0.0); };
  c.uq.value = [w, a](const SpaceTimePoint& x) { return -2.0 * w * a * std::cos(x.r.x()); };
  c.uq.grad = [w, a](const SpaceTimePoint& x) {
    return Vec3(2.0 * w * a * std::sin(x.r.x()), 0.0, 0.0);
  };
  return c;
}

/// Phase-variable increment around a closed loop of spacetime points at
/// fixed time. Modulo-one phases accumulate wrapped steps.
inline double phase_increment(const ScalarField& phase, const std::vector<SpaceTimePoint>& loop) {
  double total = 0.0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    double d = phase(loop[(i + 1) % loop.size()]) - phase(loop[i]);
    if (phase.modulo_one) d -= std::round(d);
    total += d;
  }
  return total;
}

}  // namespace emknot::clebsch

#endif  // EMKNOT_CLEBSCH_HPP
