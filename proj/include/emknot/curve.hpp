#ifndef EMKNOT_CURVE_HPP
#define EMKNOT_CURVE_HPP

#include "emknot/core.hpp"

#include <vector>

namespace emknot {

/// Oriented polyline. A closed curve lists each vertex once; the closing
/// segment from the last vertex back to the first is implied.
/// closure_gap records how far the producer missed the start point (zero
/// for parametric loops, the final tracer miss for traced field lines).
class Curve3 {
 public:
  static constexpr std::size_t min_vertices = 8;

  Curve3() = default;

  Curve3(std::vector<Vec3> vertices, bool closed, double closure_gap = 0.0)
      : vertices_(std::move(vertices)), closed_(closed), closure_gap_(closure_gap) {
    if (vertices_.size() < min_vertices) {
      throw Error(ErrorCode::InvalidArgument, "a curve needs at least 8 vertices, got " +
                                                  std::to_string(vertices_.size()));
    }
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
      if (vertices_[i] == vertices_[i - 1]) {
        throw Error(ErrorCode::InvalidArgument,
                    "consecutive duplicate vertex at index " + std::to_string(i));
      }
    }
    if (!(closure_gap_ >= 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "closure gap must be >= 0");
    }
  }

  [[nodiscard]] const std::vector<Vec3>& vertices() const { return vertices_; }
  [[nodiscard]] bool closed() const { return closed_; }
  [[nodiscard]] double closure_gap() const { return closure_gap_; }
  [[nodiscard]] std::size_t size() const { return vertices_.size(); }

  /// Number of segments: n for closed curves, n - 1 for open ones.
  [[nodiscard]] std::size_t segments() const {
    return closed_ ? vertices_.size() : vertices_.size() - 1;
  }
  [[nodiscard]] Vec3 segment_start(std::size_t i) const { return vertices_[i]; }
  [[nodiscard]] Vec3 segment_end(std::size_t i) const {
    return vertices_[(i + 1) % vertices_.size()];
  }

  [[nodiscard]] double length() const {
    double len = 0.0;
    for (std::size_t i = 0; i < segments(); ++i) len += (segment_end(i) - segment_start(i)).norm();
    return len;
  }

  [[nodiscard]] Curve3 reversed() const {
    std::vector<Vec3> v(vertices_.rbegin(), vertices_.rend());
    return {std::move(v), closed_, closure_gap_};
  }

  /// Applies x -> R x + shift to every vertex.
  [[nodiscard]] Curve3 transformed(const Eigen::Matrix3d& rotation, const Vec3& shift) const {
    std::vector<Vec3> v;
    v.reserve(vertices_.size());
    for (const auto& x : vertices_) v.emplace_back(rotation * x + shift);
    return {std::move(v), closed_, closure_gap_};
  }

 private:
  std::vector<Vec3> vertices_;
  bool closed_ = false;
  double closure_gap_ = 0.0;
};

/// Closed loop sampled from a parametric curve on [0, 2pi).
template <typename F>
Curve3 sample_loop(const F& param, std::size_t n) {
  std::vector<Vec3> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    v.emplace_back(param(two_pi * static_cast<double>(i) / static_cast<double>(n)));
  }
  return {std::move(v), true, 0.0};
}

}  // namespace emknot

#endif  // EMKNOT_CURVE_HPP
