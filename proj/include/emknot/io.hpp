#ifndef EMKNOT_IO_HPP
#define EMKNOT_IO_HPP

// CSV formats.
//
// Curves:  "# closed=true|false" comment line, "x,y,z" header, one vertex
//          per row.
// Grids:   "x,y,z,t,value" header, one sample per row, x slowest and z
//          fastest.
// Reals are written in shortest round-trip decimal form.

#include "emknot/core.hpp"
#include "emknot/curve.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace emknot::io {

inline std::string format_double(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return {buf, res.ptr};
}

inline void write_curve_csv(std::ostream& os, const Curve3& c) {
  os << "# closed=" << (c.closed() ? "true" : "false") << '\n';
  os << "x,y,z\n";
  for (const auto& v : c.vertices()) {
    os << format_double(v.x()) << ',' << format_double(v.y()) << ',' << format_double(v.z())
       << '\n';
  }
}

inline std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& text) {
  const std::string s = trim(text);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw Error(ErrorCode::IoError, "not a number: '" + s + "'");
  }
  return v;
}

/// Reads a curve. Without a "# closed=true" line the curve is open, unless
/// its last vertex repeats the first within closure_tol, in which case the
/// repeat is dropped and the curve is closed.
inline Curve3 read_curve_csv(std::istream& is, double closure_tol = 1e-9) {
  std::vector<Vec3> pts;
  bool closed = false;
  std::string line;
  while (std::getline(is, line)) {
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const auto pos = t.find("closed=");
      if (pos != std::string::npos) closed = trim(t.substr(pos + 7)) == "true";
      continue;
    }
    if (t == "x,y,z") continue;
    const auto cols = split(t, ',');
    if (cols.size() != 3) throw Error(ErrorCode::IoError, "expected 3 columns: '" + t + "'");
    pts.emplace_back(parse_double(cols[0]), parse_double(cols[1]), parse_double(cols[2]));
  }
  if (pts.size() > 1 && (pts.back() - pts.front()).norm() <= closure_tol) {
    pts.pop_back();
    closed = true;
  }
  return {std::move(pts), closed, 0.0};
}

inline Curve3 read_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  return read_curve_csv(in);
}

inline void write_curve_file(const std::string& path, const Curve3& c) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  write_curve_csv(out, c);
}

/// Uniform n^3 lattice of [0, pi]^3 including the walls, at fixed t.
inline std::vector<SpaceTimePoint> cavity_lattice(int n, double t) {
  if (n < 2) throw Error(ErrorCode::ResolutionTooLow, "dump grids need at least 2 points");
  std::vector<SpaceTimePoint> out;
  out.reserve(static_cast<std::size_t>(n) * n * n);
  const double h = pi / (n - 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) out.emplace_back(i * h, j * h, k * h, t);
    }
  }
  return out;
}

inline void write_grid_csv(std::ostream& os, const std::vector<SpaceTimePoint>& pts,
                           const ScalarEvaluator& f) {
  os << "x,y,z,t,value\n";
  for (const auto& p : pts) {
    os << format_double(p.r.x()) << ',' << format_double(p.r.y()) << ','
       << format_double(p.r.z()) << ',' << format_double(p.t) << ',' << format_double(f(p))
       << '\n';
  }
}

}  // namespace emknot::io

#endif  // EMKNOT_IO_HPP
