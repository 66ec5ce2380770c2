#ifndef EMKNOT_QUANTIZE_HPP
#define EMKNOT_QUANTIZE_HPP

// Energy, helicity and photon number of cavity modes, and the report that
// ties the orbifold degree d to the energy through E = (d/4) w.

#include "emknot/cavity.hpp"
#include "emknot/quadrature.hpp"
#include "emknot/topology.hpp"

namespace emknot::quantize {

/// E = w^2 A^2 pi^3 / 16.
inline double energy_analytic(const cavity::ModeSpec& m) {
  const double w = m.omega();
  const double a = m.amplitude();
  return w * w * a * a * pi * pi * pi / 16.0;
}

/// (1/2) int_C (E^2 + B^2) at time t.
inline quadrature::QuadResult energy_numeric(const cavity::ModeSpec& m, double t, int n_space = 48,
                                             quadrature::Exec exec = {}) {
  return quadrature::integrate_box(
      [&m, t](const SpaceTimePoint& x) {
        const SpaceTimePoint p(x.r, t);
        return 0.5 * (cavity::eval_E(m, p).squaredNorm() + cavity::eval_B(m, p).squaredNorm());
      },
      quadrature::GridSpec::cavity(n_space), exec);
}

/// H = (1/2) int_C (A.B + C.E) at time t.
inline quadrature::QuadResult helicity(const cavity::ModeSpec& m, double t, int n_space = 48,
                                       quadrature::Exec exec = {}) {
  return quadrature::integrate_box(
      [&m, t](const SpaceTimePoint& x) {
        const SpaceTimePoint p(x.r, t);
        return 0.5 * (cavity::eval_A(m, p).dot(cavity::eval_B(m, p)) +
                      cavity::eval_C(m, p).dot(cavity::eval_E(m, p)));
      },
      quadrature::GridSpec::cavity(n_space), exec);
}

/// n = E / w (hbar = 1).
inline double photon_number(double energy, double omega) {
  if (!(omega > 0.0)) throw Error(ErrorCode::NonpositiveFrequency, "omega must be positive");
  return energy / omega;
}

/// Amplitude at which mode k carries exactly n photons: A = 4 sqrt(n / (w pi^3)).
inline double amplitude_for_photons(double n, const IVec3& k) {
  if (!(n >= 0.0)) throw Error(ErrorCode::InvalidArgument, "photon number must be >= 0");
  const double w = cavity::make_mode(k, 1.0).omega();
  return 4.0 * std::sqrt(n / (w * pi * pi * pi));
}

/// hbar * w in joules for a cavity of side `side_m` metres, where w is the
/// natural-unit frequency of a cavity of side pi. Reporting helper only.
inline double photon_energy_joules(double omega, double side_m) {
  constexpr double hbar = 1.054571817e-34;  // J s
  constexpr double c = 299792458.0;         // m / s
  return hbar * omega * c * pi / side_m;
}

struct Tolerances {
  double residual = 1e-6;     // |d - 4E/w|
  double energy_rel = 1e-9;   // |E_numeric - E_analytic| / E_analytic
  double helicity_abs = 1e-10;
};

struct Resolution {
  int space = 48;
  int time = 64;
};

struct QuantizationReport {
  IVec3 k = IVec3::Ones();
  double omega = 0.0;
  double amplitude = 0.0;
  double energy_analytic = 0.0;
  double energy_numeric = 0.0;
  double helicity = 0.0;
  topology::TopologicalIndex d;
  std::optional<long> d_mod4;
  double photon_n = 0.0;
  double residual = 0.0;
  Tolerances tolerances;
  bool energy_ok = false;
  bool helicity_ok = false;
  bool residual_ok = false;

  [[nodiscard]] bool pass() const { return energy_ok && helicity_ok && residual_ok; }
};

/// Assembles the energy/degree comparison. Passing means d = 4E/w, the
/// numeric energy matches the closed form, and the standing-mode helicity
/// vanishes; integrality of d is reported, not required.
inline QuantizationReport quantization_report(const cavity::ModeSpec& m, Resolution res = {},
                                              Tolerances tol = {}, quadrature::Exec exec = {}) {
  QuantizationReport r;
  r.k = m.k();
  r.omega = m.omega();
  r.amplitude = m.amplitude();
  r.tolerances = tol;
  r.energy_analytic = energy_analytic(m);
  r.energy_numeric = energy_numeric(m, m.tau() / 8.0, res.space, exec).value;
  r.helicity = helicity(m, m.tau() / 8.0, res.space, exec).value;
  const auto deg = topology::degree_d(m, res.space, res.time, exec);
  r.d = topology::TopologicalIndex::from_raw(deg.d);
  if (r.d.rounded) r.d_mod4 = ((*r.d.rounded % 4) + 4) % 4;
  r.photon_n = deg.photon_n;
  r.residual = std::abs(deg.d - 4.0 * r.energy_analytic / r.omega);

  const double scale = std::max(r.energy_analytic, std::numeric_limits<double>::min());
  r.energy_ok = std::abs(r.energy_numeric - r.energy_analytic) <= tol.energy_rel * scale ||
                (r.energy_analytic == 0.0 && r.energy_numeric == 0.0);
  r.helicity_ok = std::abs(r.helicity) <= tol.helicity_abs;
  r.residual_ok = r.residual <= tol.residual;
  return r;
}

}  // namespace emknot::quantize

#endif  // EMKNOT_QUANTIZE_HPP
