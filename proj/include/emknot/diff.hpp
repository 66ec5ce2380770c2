#ifndef EMKNOT_DIFF_HPP
#define EMKNOT_DIFF_HPP

// Central finite differences on spacetime evaluators.

#include "emknot/core.hpp"

namespace emknot::diff {

inline constexpr double default_step = 1e-5;

inline SpaceTimePoint shifted(const SpaceTimePoint& p, int axis, double d) {
  SpaceTimePoint q = p;
  if (axis == 3) {
    q.t += d;
  } else {
    q.r[axis] += d;
  }
  return q;
}

/// Derivative of a scalar along axis 0..2 (space) or 3 (time).
template <typename F>
double partial(const F& f, const SpaceTimePoint& p, int axis, double h = default_step) {
  return (f(shifted(p, axis, h)) - f(shifted(p, axis, -h))) / (2.0 * h);
}

/// Same as partial(), but the scalar is only defined modulo 1.
template <typename F>
double partial_mod1(const F& f, const SpaceTimePoint& p, int axis, double h = default_step) {
  double d = f(shifted(p, axis, h)) - f(shifted(p, axis, -h));
  d -= std::round(d);
  return d / (2.0 * h);
}

template <typename F>
Vec3 gradient(const F& f, const SpaceTimePoint& p, double h = default_step) {
  return {partial(f, p, 0, h), partial(f, p, 1, h), partial(f, p, 2, h)};
}

template <typename F>
Vec3 gradient_mod1(const F& f, const SpaceTimePoint& p, double h = default_step) {
  return {partial_mod1(f, p, 0, h), partial_mod1(f, p, 1, h), partial_mod1(f, p, 2, h)};
}

/// Jacobian column d field / d axis.
template <typename F>
Vec3 partial_vec(const F& f, const SpaceTimePoint& p, int axis, double h = default_step) {
  return (f(shifted(p, axis, h)) - f(shifted(p, axis, -h))) / (2.0 * h);
}

template <typename F>
Vec3 curl(const F& f, const SpaceTimePoint& p, double h = default_step) {
  const Vec3 dx = partial_vec(f, p, 0, h);
  const Vec3 dy = partial_vec(f, p, 1, h);
  const Vec3 dz = partial_vec(f, p, 2, h);
  return {dy.z() - dz.y(), dz.x() - dx.z(), dx.y() - dy.x()};
}

template <typename F>
double divergence(const F& f, const SpaceTimePoint& p, double h = default_step) {
  return partial_vec(f, p, 0, h).x() + partial_vec(f, p, 1, h).y() +
         partial_vec(f, p, 2, h).z();
}

template <typename F>
Vec3 time_derivative(const F& f, const SpaceTimePoint& p, double h = default_step) {
  return partial_vec(f, p, 3, h);
}

}  // namespace emknot::diff

#endif  // EMKNOT_DIFF_HPP
