#include "emknot/clebsch.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace emknot;
using namespace emknot::clebsch;

namespace {

ComplexScalarField constant(ExtendedComplex w) {
  return [w](const SpaceTimePoint&) { return w; };
}

ScalarField field(ScalarEvaluator f, GradientEvaluator g = {}) {
  ScalarField s;
  s.value = std::move(f);
  s.grad = std::move(g);
  return s;
}

std::vector<SpaceTimePoint> interior(int n, double tau, std::uint64_t seed) {
  return random_samples(n, pi, tau, seed);
}

// A smooth complex scalar without zeros or poles near the sample region.
ExtendedComplex test_scalar(const SpaceTimePoint& p) {
  const Vec3& r = p.r;
  return std::complex<double>(1.5 + std::sin(r.x()) * std::cos(r.z() + p.t),
                              0.7 * std::cos(r.y()) + 0.4 * std::sin(r.x() + r.z()));
}

}  // namespace

TEST(ScalarToClebsch, SpecialValues) {
  const SpaceTimePoint p(0.3, 0.2, 0.1, 0.0);
  auto zero = scalar_to_clebsch(constant({0.0, 0.0}));
  EXPECT_EQ(zero.magnitude(p), 1.0);
  EXPECT_EQ(zero.phase(p), 0.0);
  auto one = scalar_to_clebsch(constant({1.0, 0.0}));
  EXPECT_EQ(one.magnitude(p), 0.5);
  EXPECT_EQ(one.phase(p), 0.0);
  auto inf = scalar_to_clebsch(constant(ExtendedComplex::infinity()));
  EXPECT_EQ(inf.magnitude(p), 0.0);
  EXPECT_TRUE(one.normalized);
}

TEST(ClebschToScalar, SpecialValues) {
  const SpaceTimePoint p;
  EXPECT_NEAR(std::abs(complex_from(0.5, 0.0).z - 1.0), 0.0, 1e-15);
  const auto two_i = complex_from(0.2, 0.25);
  EXPECT_NEAR(two_i.z.real(), 0.0, 1e-15);
  EXPECT_NEAR(two_i.z.imag(), 2.0, 1e-15);
  EXPECT_EQ(std::abs(complex_from(1.0, 0.3).z), 0.0);
  EXPECT_TRUE(complex_from(0.0, 0.1).infinite);
  try {
    complex_from(1.2, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainError);
  }
  ClebschPair bad;
  bad.magnitude = field([](const SpaceTimePoint&) { return -0.1; });
  bad.phase = field([](const SpaceTimePoint&) { return 0.0; });
  EXPECT_THROW(clebsch_to_scalar(bad)(p), Error);
}

TEST(ClebschRoundTrip, IdentityOnMagnitudeAndPhaseModOne) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> pd(1e-6, 1.0), sd(-3.0, 3.0);
  for (int i = 0; i < 500; ++i) {
    const double p = pd(rng);
    const double s = sd(rng);
    ClebschPair pair;
    pair.magnitude = field([p](const SpaceTimePoint&) { return p; });
    pair.phase = field([s](const SpaceTimePoint&) { return s; });
    const auto back = scalar_to_clebsch(clebsch_to_scalar(pair));
    const SpaceTimePoint x;
    EXPECT_NEAR(back.magnitude(x), p, 1e-12 * std::max(1.0, 1.0 / p) * p + 1e-15);
    double ds = back.phase(x) - s;
    ds -= std::round(ds);
    EXPECT_NEAR(ds, 0.0, 1e-12);
  }
}

TEST(FieldsFromClebsch, GeneralizedPairGivesPlanarProfile) {
  ClebschPair mag;
  mag.normalized = false;
  mag.magnitude = field([](const SpaceTimePoint& x) { return std::sin(x.r.x()) * std::sin(x.r.y()); });
  mag.phase = field([](const SpaceTimePoint& x) { return x.r.z() / two_pi; });
  const auto B = fields_from_clebsch(mag, mag).B;
  for (const auto& x : interior(30, 1.0, 1)) {
    const Vec3 expect = Vec3(std::sin(x.r.x()) * std::cos(x.r.y()),
                             -std::cos(x.r.x()) * std::sin(x.r.y()), 0.0) /
                        two_pi;
    EXPECT_LT((B(x) - expect).norm(), 1e-9);
  }
}

TEST(FieldsFromClebsch, ParallelGradientsGiveZero) {
  ClebschPair flat;
  flat.magnitude = field([](const SpaceTimePoint&) { return 0.4; });
  flat.phase = field([](const SpaceTimePoint& x) { return std::sin(x.r.x() * x.r.y()); });
  ClebschPair tied;
  auto p = [](const SpaceTimePoint& x) { return 0.5 + 0.3 * std::sin(x.r.x() + 2 * x.r.z()); };
  tied.magnitude = field(p);
  tied.phase = field([p](const SpaceTimePoint& x) { return std::exp(p(x)) - p(x) * p(x); });
  for (const auto& x : interior(20, 1.0, 2)) {
    EXPECT_EQ(fields_from_clebsch(flat, flat).B(x).norm(), 0.0);
    EXPECT_LT(fields_from_clebsch(tied, tied).B(x).norm(), 1e-9);
  }
}

namespace {

// Plane wave E = x cos(z - t), B = y cos(z - t) from
// p = -sin(z - t), s = -x, v = sin(z - t), u = y.
std::pair<ClebschPair, ClebschPair> plane_wave_pairs() {
  ClebschPair mag, el;
  mag.normalized = el.normalized = false;
  mag.magnitude = field([](const SpaceTimePoint& x) { return -std::sin(x.r.z() - x.t); });
  mag.phase = field([](const SpaceTimePoint& x) { return -x.r.x(); });
  el.magnitude = field([](const SpaceTimePoint& x) { return std::sin(x.r.z() - x.t); });
  el.phase = field([](const SpaceTimePoint& x) { return x.r.y(); });
  return {mag, el};
}

}  // namespace

TEST(Duality, PlaneWavePairIsDual) {
  const auto [mag, el] = plane_wave_pairs();
  auto Bref = [](const SpaceTimePoint& x) { return Vec3(0, std::cos(x.r.z() - x.t), 0); };
  auto Eref = [](const SpaceTimePoint& x) { return Vec3(std::cos(x.r.z() - x.t), 0, 0); };
  const auto rep = verify_duality(mag, el, random_samples(50, two_pi, two_pi, 3), Bref, Eref);
  EXPECT_LT(rep.b_violation, 1e-6);
  EXPECT_LT(rep.e_violation, 1e-6);
  EXPECT_LT(*rep.b_reconstruction, 1e-6);
  EXPECT_LT(*rep.e_reconstruction, 1e-6);
}

TEST(Duality, StaticSelfPairReportsElectricMagnitude) {
  ClebschPair st;
  st.normalized = false;
  st.magnitude = field([](const SpaceTimePoint& x) { return std::sin(x.r.x()) * std::cos(x.r.y()); });
  st.phase = field([](const SpaceTimePoint& x) { return x.r.z() + 0.2 * x.r.x(); });
  const auto pts = interior(1, 1.0, 4);
  const auto rep = verify_duality(st, st, pts);
  const Vec3 e = fields_from_clebsch(st, st).E(pts[0]);
  EXPECT_NEAR(rep.e_violation, e.norm(), 1e-12);
  EXPECT_GT(rep.e_violation, 0.0);
}

TEST(GaugeT1, IdentityForZeroFunction) {
  ClebschPair pair = scalar_to_clebsch(test_scalar);
  const auto same = gauge_T1(pair, [](double) { return 0.0; });
  for (const auto& x : interior(10, 1.0, 5)) {
    EXPECT_EQ(same.phase(x), pair.phase(x));
    EXPECT_EQ(same.magnitude(x), pair.magnitude(x));
  }
}

TEST(GaugeT1, MagneticFieldUnchanged) {
  const ClebschPair pair = scalar_to_clebsch(test_scalar);
  const auto g = gauge_T1(pair, [](double p) { return p * p; });
  const auto before = fields_from_clebsch(pair, pair).B;
  const auto after = fields_from_clebsch(g, g).B;
  double worst = 0.0;
  for (const auto& x : interior(50, 1.0, 6)) worst = std::max(worst, (before(x) - after(x)).norm());
  EXPECT_LT(worst, 1e-8);
}

TEST(GaugeT1, RandomPolynomialsLeaveFieldInvariant) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  const ClebschPair pair = scalar_to_clebsch(test_scalar);
  const auto before = fields_from_clebsch(pair, pair).B;
  for (int trial = 0; trial < 10; ++trial) {
    const std::array<double, 4> c{coef(rng), coef(rng), coef(rng), coef(rng)};
    auto g = [c](double p) { return c[0] + p * (c[1] + p * (c[2] + p * c[3])); };
    const auto moved = gauge_T1(pair, g);
    const auto after = fields_from_clebsch(moved, moved).B;
    for (const auto& x : interior(20, 1.0, 100 + trial)) {
      EXPECT_LT((before(x) - after(x)).norm(), 1e-7);
    }
  }
}

TEST(GaugeT1, WallFunctionMakesPhaseVanishOnWalls) {
  // On the walls s = p^2; inside, s carries an extra term that vanishes there.
  ClebschPair pair;
  auto p = [](const SpaceTimePoint& x) {
    return 0.5 + 0.3 * std::cos(x.r.x()) * std::cos(0.5 * x.r.y()) + 0.1 * std::cos(x.r.z());
  };
  pair.magnitude = field(p);
  pair.phase = field([p](const SpaceTimePoint& x) {
    const Vec3 s = x.r.array().sin();
    return p(x) * p(x) + 0.2 * s.x() * s.y() * s.z();
  });
  const auto f = fit_wall_function(pair, {.samples_per_wall = 2000});
  EXPECT_GT(f.knots(), 1000u);
  const auto moved = gauge_T1(pair, [f](double v) { return -f(v); });
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, pi);
  double worst = 0.0;
  for (int n = 0; n < 200; ++n) {
    SpaceTimePoint x(u(rng), u(rng), u(rng), 0.0);
    x.r[n % 3] = (n % 2 == 0) ? 0.0 : pi;
    worst = std::max(worst, std::abs(moved.phase(x)));
  }
  EXPECT_LT(worst, 1e-6);
  // interior values keep the extra term
  EXPECT_GT(std::abs(moved.phase({pi / 2, pi / 2, pi / 2, 0.0})), 0.1);
}

TEST(GaugeT1, MultiBranchWallRelationRejected) {
  ClebschPair pair;
  pair.magnitude = field([](const SpaceTimePoint& x) { return 0.5 + 0.4 * std::cos(2 * x.r.x()); });
  pair.phase = field([](const SpaceTimePoint& x) { return std::sin(x.r.x()) + std::cos(x.r.y()); });
  try {
    fit_wall_function(pair);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MultiBranchWallFunction);
  }
}

TEST(MobiusT2, SpecialValues) {
  const std::complex<double> i(0.0, 1.0);
  EXPECT_EQ(std::abs(mobius(ExtendedComplex(i)).z), 0.0);
  EXPECT_TRUE(mobius(ExtendedComplex(-i)).infinite);
  EXPECT_EQ(mobius(ExtendedComplex::infinity()).z, std::complex<double>(1.0, 0.0));
  for (double x : {-5.0, -0.3, 0.0, 1.0, 17.0}) {
    EXPECT_NEAR(std::abs(mobius(ExtendedComplex(x, 0.0)).z), 1.0, 1e-15);
  }
  const auto f = mobius_T2(constant(ExtendedComplex(i)));
  EXPECT_EQ(std::abs(f(SpaceTimePoint()).z), 0.0);
}

TEST(MobiusT2, ConjugateArgumentsGiveConjugateInverses) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g(0.0, 2.0);
  for (int n = 0; n < 100; ++n) {
    const std::complex<double> z2(g(rng), g(rng));
    const auto phi1 = mobius(ExtendedComplex(std::conj(z2))).z;
    const auto phi2 = mobius(ExtendedComplex(z2)).z;
    EXPECT_LT(std::abs(phi1 - 1.0 / std::conj(phi2)), 1e-12 * std::max(1.0, std::abs(phi1)));
  }
}

TEST(MobiusT2, PreservesGeneratedField) {
  const auto zeta = scalar_to_clebsch(test_scalar);
  const auto moved = scalar_to_clebsch(mobius_T2(test_scalar));
  const auto B0 = fields_from_clebsch(zeta, zeta).B;
  const auto B1 = fields_from_clebsch(moved, moved).B;
  for (const auto& x : interior(50, 1.0, 12)) {
    EXPECT_LT((B0(x) - B1(x)).norm(), 1e-6);
  }
}

TEST(PrimedClebsch, TimeDependenceOfMagnitude) {
  const double w = 1.3;
  const auto half = field([](const SpaceTimePoint&) { return 0.5; });
  const auto p0 = field([](const SpaceTimePoint& x) { return 0.5 + 0.4 * std::sin(x.r.x()); });
  const auto zero = field([](const SpaceTimePoint&) { return 0.0; });
  const auto flat = primed_clebsch(half, zero, half, zero, w);
  const auto pr = primed_clebsch(p0, zero, half, zero, w);
  const double tau = two_pi / w;
  for (const auto& x : interior(10, tau, 13)) {
    EXPECT_DOUBLE_EQ(flat.PS.magnitude(x), 0.5);
    const double p = p0({x.r, 0.0});
    EXPECT_NEAR(pr.PS.magnitude({x.r, 0.0}), 0.25 + 0.5 * p, 1e-15);
    EXPECT_NEAR(pr.PS.magnitude({x.r, tau / 4}), 0.5, 1e-15);
  }
}

TEST(PrimedClebsch, OutOfRangeMagnitudeRaisesDomainError) {
  const auto big = field([](const SpaceTimePoint&) { return 3.0; });
  const auto zero = field([](const SpaceTimePoint&) { return 0.0; });
  const auto pr = primed_clebsch(big, zero, big, zero, 1.0);
  EXPECT_THROW(pr.PS.magnitude(SpaceTimePoint(0, 0, 0, 0)), Error);
  EXPECT_THROW(pr.VU.magnitude(SpaceTimePoint(0, 0, 0, pi / 2)), Error);
}

TEST(PrimedClebsch, ReconstructsPlanarModeFields) {
  const auto pm = planar_mode_clebsch(1.0);
  const auto pr = primed_clebsch(pm.p0, pm.s0, pm.vq, pm.uq, pm.omega);
  const auto f = fields_from_clebsch(pr.PS, pr.VU);
  for (const auto& x : interior(40, pm.tau(), 14)) {
    EXPECT_LT((f.B(x) - pm.B(x)).norm(), 1e-6);
    EXPECT_LT((f.E(x) - pm.E(x)).norm(), 1e-6);
  }
  const auto rep = verify_duality(pr.PS, pr.VU, interior(40, pm.tau(), 15), pm.B, pm.E);
  EXPECT_LT(*rep.b_reconstruction, 1e-6);
  EXPECT_LT(*rep.e_reconstruction, 1e-6);
}

TEST(PrimedClebsch, PlanarModeFieldsSolveMaxwell) {
  const auto pm = planar_mode_clebsch(0.6);
  for (const auto& x : interior(20, pm.tau(), 16)) {
    EXPECT_LT((diff::curl(pm.E, x) + diff::time_derivative(pm.B, x)).norm(), 1e-6);
    EXPECT_LT((diff::curl(pm.B, x) - diff::time_derivative(pm.E, x)).norm(), 1e-6);
  }
}

TEST(StarredFields, VanishAtQuarterPhases) {
  const auto pm = planar_mode_clebsch(1.0);
  const auto pr = primed_clebsch(pm.p0, pm.s0, pm.vq, pm.uq, pm.omega);
  const auto st = starred_fields(pr.PS, pr.VU);
  for (const auto& x : interior(10, 1.0, 17)) {
    EXPECT_LT(st.Estar({x.r, 0.0}).norm(), 1e-15);
    EXPECT_LT(st.Bstar({x.r, pm.tau() / 4}).norm(), 1e-14);
  }
}

TEST(StarredFields, CurlsMatchFieldTimeDerivatives) {
  const auto pm = planar_mode_clebsch(1.0);
  const auto pr = primed_clebsch(pm.p0, pm.s0, pm.vq, pm.uq, pm.omega);
  const auto st = starred_fields(pr.PS, pr.VU);
  for (const auto& x : interior(20, pm.tau(), 18)) {
    EXPECT_LT((diff::curl(st.Estar, x) + diff::time_derivative(pm.B, x)).norm(), 1e-5);
    EXPECT_LT((diff::curl(st.Bstar, x) - diff::time_derivative(pm.E, x)).norm(), 1e-5);
  }
  const auto gr = check_gradient_relation(pm.E, st.Estar, pm.B, st.Bstar, pm.tau(), 20);
  EXPECT_LT(gr.max_curl(), 1e-5);
  EXPECT_LT(gr.max_wall(), 1e-12);
}

TEST(GradientRelation, ModeStarredFields) {
  const auto m = cavity::make_mode({1, 1, 1}, 1.0);
  const auto st = mode_starred_fields(m);
  const auto gr = check_gradient_relation(cavity::field_E(m), st.Estar, cavity::field_B(m),
                                          st.Bstar, m.tau(), 20);
  EXPECT_LT(gr.max_curl(), 1e-5);
  EXPECT_LT(gr.max_wall(), 1e-13);
  const auto E = cavity::field_E(m);
  const auto same = check_gradient_relation(E, E, E, E, m.tau(), 5);
  EXPECT_EQ(same.max_curl(), 0.0);
  EXPECT_EQ(same.max_wall(), 0.0);
}

TEST(GradientRelation, PerturbedStarredFieldDetected) {
  const auto m = cavity::make_mode({1, 1, 1}, 1.0);
  const auto st = mode_starred_fields(m);
  auto bad = [st](const SpaceTimePoint& x) {
    return Vec3(st.Estar(x) + Vec3(0.0, 0.0, 0.5 * std::sin(x.r.x())));
  };
  const auto gr = check_gradient_relation(cavity::field_E(m), bad, cavity::field_B(m), st.Bstar,
                                          m.tau(), 20);
  EXPECT_GT(gr.curl_E_residual, 1e-2);
}

TEST(Lemma, ModeIntegralIdentities) {
  const auto m = cavity::make_mode({1, 1, 1}, 1.0);
  const auto st = mode_starred_fields(m);
  const auto L = lemma_integrals(cavity::field_B(m), st.Bstar, cavity::field_E(m), st.Estar,
                                 m.tau() / 8, 48);
  EXPECT_NEAR(L.b_bstar, L.b_sq, 1e-8 * L.b_sq);
  EXPECT_NEAR(L.e_estar, L.e_sq, 1e-8 * L.e_sq);
  EXPECT_GT(L.e_sq, 1.0);

  const auto L0 = lemma_integrals(cavity::field_B(m), st.Bstar, cavity::field_E(m), st.Estar, 0.0);
  EXPECT_EQ(L0.e_estar, 0.0);
  EXPECT_EQ(L0.e_sq, 0.0);
}

TEST(Lemma, FailsWhenPotentialIsNotConstantOnWalls) {
  // E + grad(A sin(wt) x^2): the correction has a non-zero wall flux.
  const auto m = cavity::make_mode({1, 1, 1}, 1.0);
  auto bad = [m](const SpaceTimePoint& x) {
    return Vec3(cavity::eval_E(m, x) + Vec3(2.0 * x.r.x() * std::sin(m.omega() * x.t), 0, 0));
  };
  const auto L = lemma_integrals(cavity::field_B(m), cavity::field_B(m), cavity::field_E(m), bad,
                                 m.tau() / 8);
  EXPECT_GT(std::abs(L.e_estar - L.e_sq), 1e-2 * L.e_sq);
}

TEST(Lemma, PlanarClebschConstruction) {
  const auto pm = planar_mode_clebsch(1.0);
  const auto pr = primed_clebsch(pm.p0, pm.s0, pm.vq, pm.uq, pm.omega);
  const auto st = starred_fields(pr.PS, pr.VU);
  for (double t : {pm.tau() / 8, pm.tau() / 3}) {
    const auto L = lemma_integrals(pm.B, st.Bstar, pm.E, st.Estar, t);
    EXPECT_NEAR(L.b_bstar, L.b_sq, 1e-8 * L.b_sq);
    EXPECT_NEAR(L.e_estar, L.e_sq, 1e-8 * L.e_sq);
  }
}

namespace {

// Symmetric inputs: p0 - 1/2 odd under every wall reflection, the others even.
PrimedPairs symmetric_primed(double w) {
  ScalarField p0, s0, vq, uq;
  p0.value = [](const SpaceTimePoint& x) {
    const Vec3 s = x.r.array().sin();
    return 0.5 + 0.4 * s.x() * s.y() * s.z();
  };
  s0.value = [](const SpaceTimePoint& x) {
    const Vec3 c = x.r.array().cos();
    return 0.3 * c.x() * c.y() * c.z();
  };
  vq.value = [](const SpaceTimePoint& x) {
    const Vec3 c = x.r.array().cos();
    return 0.5 + 0.3 * c.x() * c.y() * c.z();
  };
  uq.value = [](const SpaceTimePoint& x) {
    const Vec3 c = x.r.array().cos();
    return 0.25 * (c.x() + c.y() * c.z());
  };
  return primed_clebsch(p0, s0, vq, uq, w);
}

double inverse_conj_gap(ExtendedComplex a, ExtendedComplex b) {
  // |a - 1/conj(b)| in a scale-free form
  return std::abs(a.z * std::conj(b.z) - 1.0);
}

}  // namespace

TEST(PrimedScalars, ReflectionAndTimeRelations) {
  const double w = std::sqrt(3.0);
  const auto pairs = symmetric_primed(w);
  const auto sc = primed_scalars(pairs);
  const double tau = pairs.tau();
  double worst = 0.0;
  for (const auto& x : random_samples(100, two_pi, tau, 19)) {
    const auto phi = sc.phi(x);
    const auto theta = sc.theta(x);
    for (int i = 0; i < 3; ++i) {
      SpaceTimePoint m = x;
      m.r[i] = -m.r[i];
      worst = std::max(worst, inverse_conj_gap(sc.phi(m), phi));
      worst = std::max(worst, std::abs(sc.theta(m).z - theta.z));
      SpaceTimePoint per = x;
      per.r[i] += two_pi;
      worst = std::max(worst, std::abs(sc.phi(per).z - phi.z));
    }
    const SpaceTimePoint refl(x.r, tau / 2 - x.t), half(x.r, x.t + tau / 2), rev(x.r, -x.t),
        full(x.r, x.t + tau);
    worst = std::max(worst, inverse_conj_gap(sc.phi(refl), phi));
    worst = std::max(worst, std::abs(sc.theta(refl).z - theta.z));
    worst = std::max(worst, inverse_conj_gap(sc.phi(half), phi));
    worst = std::max(worst, inverse_conj_gap(sc.theta(half), theta));
    worst = std::max(worst, std::abs(sc.phi(rev).z - phi.z));
    worst = std::max(worst, inverse_conj_gap(sc.theta(rev), theta));
    worst = std::max(worst, std::abs(sc.phi(full).z - phi.z));
    worst = std::max(worst, std::abs(sc.theta(full).z - theta.z));
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(PrimedScalars, TwoTimeRelationsImplyTheThird) {
  // t -> tau/2 - t composed with t -> -t is t -> t + tau/2 (mod tau); the
  // conjugate-inverse actions compose the same way.
  const double tau = 2.0;
  for (double t : {0.1, 0.7, 1.3}) {
    const double via = tau / 2 - (-t);
    EXPECT_NEAR(std::fmod(via, tau), std::fmod(t + tau / 2, tau), 1e-15);
  }
  const auto sc = primed_scalars(symmetric_primed(1.0));
  const double T = two_pi;
  for (const auto& x : random_samples(20, two_pi, T, 20)) {
    // theta: invariant under T1, inverted under T2, so inverted under the half shift
    const auto composed = sc.theta(SpaceTimePoint(x.r, T / 2 - (-x.t)));
    EXPECT_LT(inverse_conj_gap(composed, sc.theta(x)), 1e-9);
  }
}

TEST(PrimedScalars, AdvancedThetaHasPhiTimeBehaviour) {
  const auto pairs = symmetric_primed(1.0);
  const auto sc = primed_scalars(pairs);
  const double tau = pairs.tau();
  for (const auto& x : random_samples(30, two_pi, tau, 21)) {
    const auto th = sc.theta_ad(x);
    EXPECT_LT(inverse_conj_gap(sc.theta_ad({x.r, x.t + tau / 2}), th), 1e-9);
    EXPECT_LT(std::abs(sc.theta_ad({x.r, -x.t}).z - th.z), 1e-9);
    EXPECT_LT(inverse_conj_gap(sc.theta_ad({x.r, tau / 2 - x.t}), th), 1e-9);
  }
}

TEST(PhaseIncrement, LoopIncrementsAreIntegers) {
  // arg(x + i y) / 2pi around a loop encircling the z-axis
  ClebschPair pair = scalar_to_clebsch([](const SpaceTimePoint& p) {
    return ExtendedComplex(p.r.x(), p.r.y());
  });
  std::vector<SpaceTimePoint> loop;
  for (int i = 0; i < 64; ++i) {
    const double a = two_pi * i / 64;
    loop.emplace_back(std::cos(a), std::sin(a), 0.0, 0.0);
  }
  EXPECT_NEAR(phase_increment(pair.phase, loop), 1.0, 1e-12);
  for (auto& p : loop) p.r.x() += 3.0;
  EXPECT_NEAR(phase_increment(pair.phase, loop), 0.0, 1e-12);
}
