#ifndef EMKNOT_CORE_HPP
#define EMKNOT_CORE_HPP

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

namespace emknot {

using Vec3 = Eigen::Vector3d;
using IVec3 = Eigen::Vector3i;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// A point of the spacetime torus. Coordinates are not reduced on
/// construction; every field in this library is periodic, so evaluators
/// accept any real input. Use reduced() when canonical coordinates matter.
struct SpaceTimePoint {
  Vec3 r = Vec3::Zero();
  double t = 0.0;

  SpaceTimePoint() = default;
  SpaceTimePoint(const Vec3& r_, double t_) : r(r_), t(t_) {}
  SpaceTimePoint(double x, double y, double z, double t_) : r(x, y, z), t(t_) {}

  /// Coordinates reduced into [0, 2pi)^3 x [0, tau).
  [[nodiscard]] SpaceTimePoint reduced(double tau) const {
    auto wrap = [](double v, double period) {
      double w = std::fmod(v, period);
      return w < 0.0 ? w + period : w;
    };
    return {Vec3(wrap(r.x(), two_pi), wrap(r.y(), two_pi), wrap(r.z(), two_pi)),
            wrap(t, tau)};
  }
};

using ScalarEvaluator = std::function<double(const SpaceTimePoint&)>;
using VectorFieldEvaluator = std::function<Vec3(const SpaceTimePoint&)>;
using GradientEvaluator = std::function<Vec3(const SpaceTimePoint&)>;

/// Error categories. The name() string is stable and appears in CLI
/// diagnostics.
enum class ErrorCode {
  ZeroModeComponent,
  NonpositiveAmplitude,
  DegeneratePolarization,
  DomainError,
  ResolutionTooLow,
  OpenCurve,
  CurvesIntersect,
  DegenerateDirection,
  NotOnFiber,
  NonpositiveFrequency,
  MultiBranchWallFunction,
  InvalidArgument,
  IoError,
};

constexpr const char* name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ZeroModeComponent: return "ZeroModeComponent";
    case ErrorCode::NonpositiveAmplitude: return "NonpositiveAmplitude";
    case ErrorCode::DegeneratePolarization: return "DegeneratePolarization";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ResolutionTooLow: return "ResolutionTooLow";
    case ErrorCode::OpenCurve: return "OpenCurve";
    case ErrorCode::CurvesIntersect: return "CurvesIntersect";
    case ErrorCode::DegenerateDirection: return "DegenerateDirection";
    case ErrorCode::NotOnFiber: return "NotOnFiber";
    case ErrorCode::NonpositiveFrequency: return "NonpositiveFrequency";
    case ErrorCode::MultiBranchWallFunction: return "MultiBranchWallFunction";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(name(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Complex number on the Riemann sphere. The point at infinity is tagged
/// rather than encoded as inf/nan.
struct ExtendedComplex {
  std::complex<double> z{0.0, 0.0};
  bool infinite = false;

  ExtendedComplex() = default;
  ExtendedComplex(std::complex<double> v) : z(v) {}  // NOLINT(implicit)
  ExtendedComplex(double re, double im) : z(re, im) {}

  static ExtendedComplex infinity() {
    ExtendedComplex w;
    w.infinite = true;
    return w;
  }
};

}  // namespace emknot

#endif  // EMKNOT_CORE_HPP
