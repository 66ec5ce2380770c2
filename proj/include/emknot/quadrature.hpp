#ifndef EMKNOT_QUADRATURE_HPP
#define EMKNOT_QUADRATURE_HPP

// Tensor-product quadrature over boxes of up to four axes.
//
// Periodic axes use the trapezoidal rule on an open-ended uniform grid,
// which is exact for trigonometric polynomials below the Nyquist degree.
// Closed axes use composite Gauss-Legendre panels of (at most) four points.
//
// The outermost axis may be split across worker threads. Every outer slice
// is reduced in a fixed inner order and the slices are summed sequentially,
// so results are bit-identical for any worker count.

#include "emknot/core.hpp"
#include "emknot/curve.hpp"

#include <algorithm>
#include <array>
#include <span>
#include <thread>
#include <vector>

namespace emknot::quadrature {

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  int points = 2;
  bool periodic = false;

  static Axis closed(double lo, double hi, int n) { return {lo, hi, n, false}; }
  static Axis periodic_axis(double lo, double hi, int n) { return {lo, hi, n, true}; }
};

/// Axis a of the grid maps to coordinate a of (x, y, z, t).
struct GridSpec {
  std::vector<Axis> axes;

  [[nodiscard]] std::size_t dims() const { return axes.size(); }
  [[nodiscard]] std::size_t total_points() const {
    std::size_t n = 1;
    for (const auto& a : axes) n *= static_cast<std::size_t>(a.points);
    return n;
  }
  /// Every axis at (at least 2) half its resolution.
  [[nodiscard]] GridSpec halved() const {
    GridSpec g = *this;
    for (auto& a : g.axes) a.points = std::max(2, a.points / 2);
    return g;
  }

  /// Closed cube [0, pi]^3.
  static GridSpec cavity(int n) {
    return {{Axis::closed(0, pi, n), Axis::closed(0, pi, n), Axis::closed(0, pi, n)}};
  }
  /// Fundamental spacetime cell [0, pi]^3 x [0, tau/4].
  static GridSpec cell(int n_space, int n_time, double tau) {
    auto g = cavity(n_space);
    g.axes.push_back(Axis::closed(0.0, tau / 4.0, n_time));
    return g;
  }
  /// Full torus [0, 2pi)^3 x [0, tau).
  static GridSpec torus(int n_space, int n_time, double tau) {
    return {{Axis::periodic_axis(0, two_pi, n_space), Axis::periodic_axis(0, two_pi, n_space),
             Axis::periodic_axis(0, two_pi, n_space), Axis::periodic_axis(0.0, tau, n_time)}};
  }
};

struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;
  GridSpec grid;
  std::vector<std::pair<int, double>> history;  // (points on first axis, value)
};

struct Exec {
  unsigned threads = 0;  // 0: all hardware threads

  [[nodiscard]] unsigned resolved() const {
    if (threads > 0) return threads;
    return std::max(1u, std::thread::hardware_concurrency());
  }
};

namespace detail {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre nodes/weights on [-1, 1], orders 1..4.
inline void gauss_legendre(int order, std::vector<double>& x, std::vector<double>& w) {
  switch (order) {
    case 1:
      x = {0.0};
      w = {2.0};
      break;
    case 2: {
      const double a = 1.0 / std::sqrt(3.0);
      x = {-a, a};
      w = {1.0, 1.0};
      break;
    }
    case 3: {
      const double a = std::sqrt(3.0 / 5.0);
      x = {-a, 0.0, a};
      w = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
      break;
    }
    default: {
      const double r = 2.0 * std::sqrt(6.0 / 5.0);
      const double inner = std::sqrt((3.0 - r) / 7.0);
      const double outer = std::sqrt((3.0 + r) / 7.0);
      const double wi = (18.0 + std::sqrt(30.0)) / 36.0;
      const double wo = (18.0 - std::sqrt(30.0)) / 36.0;
      x = {-outer, -inner, inner, outer};
      w = {wo, wi, wi, wo};
      break;
    }
  }
}

inline Rule make_rule(const Axis& a) {
  if (a.points < 2) {
    throw Error(ErrorCode::ResolutionTooLow,
                "axis needs at least 2 points, got " + std::to_string(a.points));
  }
  if (!(a.hi > a.lo)) throw Error(ErrorCode::InvalidArgument, "axis interval is empty");
  Rule rule;
  const double len = a.hi - a.lo;
  if (a.periodic) {
    const double h = len / a.points;
    for (int i = 0; i < a.points; ++i) {
      rule.nodes.push_back(a.lo + h * i);
      rule.weights.push_back(h);
    }
    return rule;
  }
  // Split the points into equal-width panels of 4 (the last few panels get
  // 3 when points is not a multiple of 4; a single panel when points < 4).
  const int panels = (a.points + 3) / 4;
  const int base = a.points / panels;
  const int extra = a.points % panels;
  const double width = len / panels;
  std::vector<double> x, w;
  for (int p = 0; p < panels; ++p) {
    const int order = base + (p < extra ? 1 : 0);
    gauss_legendre(order, x, w);
    const double mid = a.lo + width * (p + 0.5);
    for (std::size_t i = 0; i < x.size(); ++i) {
      rule.nodes.push_back(mid + 0.5 * width * x[i]);
      rule.weights.push_back(0.5 * width * w[i]);
    }
  }
  return rule;
}

template <typename F>
double inner_sum(const F& f, const std::vector<Rule>& rules, std::size_t axis,
                 std::array<double, 4>& coords) {
  const Rule& rule = rules[axis];
  double acc = 0.0;
  if (axis + 1 == rules.size()) {
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      coords[axis] = rule.nodes[i];
      acc += rule.weights[i] * f(coords);
    }
    return acc;
  }
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    coords[axis] = rule.nodes[i];
    acc += rule.weights[i] * inner_sum(f, rules, axis + 1, coords);
  }
  return acc;
}

// f takes a std::array<double, 4> of coordinates (unused trailing entries 0).
template <typename F>
double integrate_once(const F& f, const GridSpec& grid, Exec exec) {
  if (grid.dims() < 1 || grid.dims() > 4) {
    throw Error(ErrorCode::InvalidArgument, "grids must have 1 to 4 axes");
  }
  std::vector<Rule> rules;
  for (const auto& a : grid.axes) rules.push_back(make_rule(a));

  const Rule& outer = rules[0];
  const std::size_t n_outer = outer.nodes.size();
  std::vector<double> slices(n_outer, 0.0);

  auto work = [&](std::size_t begin, std::size_t end) {
    std::array<double, 4> coords{0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = begin; i < end; ++i) {
      coords[0] = outer.nodes[i];
      slices[i] = rules.size() == 1 ? f(coords) : inner_sum(f, rules, 1, coords);
    }
  };

  const std::size_t workers = std::min<std::size_t>(exec.resolved(), n_outer);
  if (workers <= 1) {
    work(0, n_outer);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (n_outer + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t b = w * chunk;
      const std::size_t e = std::min(n_outer, b + chunk);
      if (b >= e) break;
      pool.emplace_back(work, b, e);
    }
    for (auto& t : pool) t.join();
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n_outer; ++i) total += outer.weights[i] * slices[i];
  return total;
}

template <typename F>
QuadResult integrate_with_estimate(const F& f, const GridSpec& grid, Exec exec) {
  QuadResult res;
  res.grid = grid;
  const GridSpec coarse = grid.halved();
  const double coarse_value = integrate_once(f, coarse, exec);
  res.value = integrate_once(f, grid, exec);
  res.history = {{coarse.axes[0].points, coarse_value}, {grid.axes[0].points, res.value}};
  res.err_estimate = std::abs(res.value - coarse_value);
  return res;
}

}  // namespace detail

/// Nodes and weights of one axis, as used by the tensor rule.
inline std::pair<std::vector<double>, std::vector<double>> axis_rule(const Axis& a) {
  auto r = detail::make_rule(a);
  return {std::move(r.nodes), std::move(r.weights)};
}

/// Integrates f over an arbitrary parameter box; f receives the coordinates
/// as a span of length grid.dims().
inline QuadResult integrate_params(const std::function<double(std::span<const double>)>& f,
                                   const GridSpec& grid, Exec exec = {}) {
  const std::size_t d = grid.dims();
  auto g = [&f, d](const std::array<double, 4>& c) {
    return f(std::span<const double>(c.data(), d));
  };
  return detail::integrate_with_estimate(g, grid, exec);
}

/// Integrates a spacetime scalar over the box; axes map to x, y, z, t.
inline QuadResult integrate_box(const ScalarEvaluator& f, const GridSpec& grid, Exec exec = {}) {
  auto g = [&f](const std::array<double, 4>& c) {
    return f(SpaceTimePoint(c[0], c[1], c[2], c[3]));
  };
  return detail::integrate_with_estimate(g, grid, exec);
}

/// Integrates over the fundamental cell [0, pi]^3 x [0, tau/4].
inline QuadResult integrate_cell(const ScalarEvaluator& f, double mode_tau, int n_space,
                                 int n_time, Exec exec = {}) {
  if (!(mode_tau > 0.0)) throw Error(ErrorCode::InvalidArgument, "tau must be positive");
  return integrate_box(f, GridSpec::cell(n_space, n_time, mode_tau), exec);
}

/// Midpoint-rule circulation sum f(midpoint) . dr around a closed curve.
inline double line_integral(const Curve3& curve, const std::function<Vec3(const Vec3&)>& f) {
  if (!curve.closed()) {
    throw Error(ErrorCode::OpenCurve, "line integrals are taken around closed curves");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < curve.segments(); ++i) {
    const Vec3 a = curve.segment_start(i);
    const Vec3 b = curve.segment_end(i);
    acc += f(0.5 * (a + b)).dot(b - a);
  }
  return acc;
}

}  // namespace emknot::quadrature

#endif  // EMKNOT_QUADRATURE_HPP
