// emknot: command-line front end.
//
// Every subcommand prints one JSON document on stdout; diagnostics go to
// stderr. Exit codes: 0 pass, 1 verification or numeric failure, 2 usage.

#include "emknot/emknot.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

namespace {

using json = nlohmann::json;
using namespace emknot;

constexpr int kSchemaVersion = 1;
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string k = "1,1,1";
  std::optional<double> amplitude;
  std::optional<double> photons;
  std::string pol;
  int grid = 48;
  int time_grid = 64;
  double tol_rel = 1e-9;
  unsigned threads = 0;
  std::optional<double> t;
  std::string out;
  std::string field = "E";
  std::string curve1, curve2, demo;
};

json vec_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }
json ivec_json(const IVec3& v) { return json::array({v.x(), v.y(), v.z()}); }

json base(const std::string& command) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

IVec3 parse_k(const std::string& text) {
  const auto parts = io::split(text, ',');
  if (parts.size() != 3) throw UsageError("--k expects three comma-separated integers");
  IVec3 k;
  for (int i = 0; i < 3; ++i) {
    try {
      std::size_t used = 0;
      const std::string s = io::trim(parts[static_cast<std::size_t>(i)]);
      k[i] = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw UsageError("--k component '" + parts[static_cast<std::size_t>(i)] +
                       "' is not an integer");
    }
  }
  return k;
}

std::optional<Vec3> parse_pol(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "x") return Vec3::UnitX();
  if (text == "y") return Vec3::UnitY();
  if (text == "z") return Vec3::UnitZ();
  const auto parts = io::split(text, ',');
  if (parts.size() != 3) throw UsageError("--pol expects x, y, z or three comma-separated reals");
  try {
    return Vec3(io::parse_double(parts[0]), io::parse_double(parts[1]),
                io::parse_double(parts[2]));
  } catch (const Error&) {
    throw UsageError("--pol components must be reals");
  }
}

cavity::ModeSpec mode_from(const Options& o, double default_amplitude = 1.0) {
  const double a = o.amplitude.value_or(default_amplitude);
  if (!(a >= 0.0)) throw Error(ErrorCode::NonpositiveAmplitude, "--amplitude must be >= 0");
  return cavity::make_mode(parse_k(o.k), a, parse_pol(o.pol));
}

quadrature::Exec exec_from(const Options& o) { return {o.threads}; }

json quad_json(const quadrature::QuadResult& r) {
  json hist = json::array();
  for (const auto& [n, v] : r.history) hist.push_back({{"points", n}, {"value", v}});
  return {{"value", r.value}, {"err_estimate", r.err_estimate}, {"history", hist}};
}

json index_json(const topology::TopologicalIndex& idx) {
  json j;
  j["raw"] = idx.raw;
  j["rounded"] = idx.rounded ? json(*idx.rounded) : json(nullptr);
  j["non_integer"] = idx.non_integer();
  return j;
}

json mode_json(const cavity::ModeSpec& m) {
  return {{"k", ivec_json(m.k())},
          {"amplitude", m.amplitude()},
          {"omega", m.omega()},
          {"tau", m.tau()},
          {"e1", vec_json(m.e1())},
          {"e2", vec_json(m.e2())}};
}

// ---------------------------------------------------------------------------

int cmd_mode(const Options& o) {
  const auto m = mode_from(o);
  json j = base("mode");
  j.update(mode_json(m));
  std::cout << j.dump(2) << '\n';
  return kExitPass;
}

int cmd_energy(const Options& o) {
  const auto m = mode_from(o);
  const double t = o.t.value_or(0.0);
  const auto res = quantize::energy_numeric(m, t, o.grid, exec_from(o));
  const double exact = quantize::energy_analytic(m);
  const bool ok = std::abs(res.value - exact) <= o.tol_rel * std::max(exact, 1e-300) ||
                  (exact == 0.0 && res.value == 0.0);
  json j = base("energy");
  j["mode"] = mode_json(m);
  j["t"] = t;
  j["energy_analytic"] = exact;
  j["energy_numeric"] = quad_json(res);
  j["photon_n"] = quantize::photon_number(exact, m.omega());
  j["pass"] = ok;
  std::cout << j.dump(2) << '\n';
  return ok ? kExitPass : kExitFail;
}

int cmd_helicity(const Options& o) {
  const auto m = mode_from(o);
  const double t = o.t.value_or(0.0);
  const auto res = quantize::helicity(m, t, o.grid, exec_from(o));
  const bool ok = std::abs(res.value) <= 1e-10;
  json j = base("helicity");
  j["mode"] = mode_json(m);
  j["t"] = t;
  j["helicity"] = quad_json(res);
  j["pass"] = ok;
  std::cout << j.dump(2) << '\n';
  return ok ? kExitPass : kExitFail;
}

int cmd_degree(const Options& o) {
  const auto m = mode_from(o);
  const auto ex = exec_from(o);
  const auto deg = topology::degree_d(m, o.grid, o.time_grid, ex);
  const auto idx = topology::TopologicalIndex::from_raw(deg.d);
  const double energy = quantize::energy_analytic(m);
  const double signed_full = topology::degree_d_fullperiod(m, false, o.grid, o.time_grid, ex);
  const double abs_full = topology::degree_d_fullperiod(m, true, o.grid, o.time_grid, ex);
  const auto t4 = topology::t4_degree(cavity::field_E(m), cavity::field_B(m), m.tau(), o.grid,
                                      o.time_grid, ex);
  const double residual = std::abs(deg.d - 4.0 * energy / m.omega());
  const double scale = std::max(1.0, 4.0 * energy / m.omega());
  const bool ok = residual <= 1e-6 * scale && std::abs(signed_full) <= 1e-9 * scale &&
                  std::abs(t4.value) <= 1e-9 * scale &&
                  std::abs(abs_full - deg.d) <= 1e-6 * scale;
  json j = base("degree");
  j["mode"] = mode_json(m);
  j["d"] = index_json(idx);
  j["d_mod4"] = idx.rounded ? json(((*idx.rounded % 4) + 4) % 4) : json(nullptr);
  j["photon_n"] = deg.photon_n;
  j["cell_integral"] = quad_json(deg.quad);
  j["full_period_signed"] = signed_full;
  j["full_period_absolute"] = abs_full;
  j["t4_degree"] = quad_json(t4);
  j["residual"] = residual;
  j["pass"] = ok;
  std::cout << j.dump(2) << '\n';
  return ok ? kExitPass : kExitFail;
}

int cmd_quantize(const Options& o) {
  if (o.amplitude.has_value() == o.photons.has_value()) {
    throw UsageError("quantize needs exactly one of --amplitude and --photons");
  }
  const IVec3 k = parse_k(o.k);
  double a = 0.0;
  if (o.photons) {
    if (!(*o.photons >= 0.0)) throw UsageError("--photons must be >= 0");
    a = quantize::amplitude_for_photons(*o.photons, k);
  } else {
    a = *o.amplitude;
    if (!(a >= 0.0)) throw Error(ErrorCode::NonpositiveAmplitude, "--amplitude must be >= 0");
  }
  const auto m = cavity::make_mode(k, a, parse_pol(o.pol));
  const auto r = quantize::quantization_report(m, {o.grid, o.time_grid}, {}, exec_from(o));
  json j = base("quantize");
  j["mode"] = ivec_json(r.k);
  j["omega"] = r.omega;
  j["amplitude"] = r.amplitude;
  j["energy_analytic"] = r.energy_analytic;
  j["energy_numeric"] = r.energy_numeric;
  j["helicity"] = r.helicity;
  j["d_raw"] = r.d.raw;
  j["d_rounded"] = r.d.rounded ? json(*r.d.rounded) : json(nullptr);
  j["d_mod4"] = r.d_mod4 ? json(*r.d_mod4) : json(nullptr);
  j["photon_n"] = r.photon_n;
  j["residual"] = r.residual;
  j["tolerances"] = {{"residual", r.tolerances.residual},
                     {"energy_rel", r.tolerances.energy_rel},
                     {"helicity_abs", r.tolerances.helicity_abs},
                     {"integer_rounding", topology::TopologicalIndex::threshold}};
  j["pass"] = r.pass();
  std::cout << j.dump(2) << '\n';
  return r.pass() ? kExitPass : kExitFail;
}

int cmd_linking(const Options& o) {
  Curve3 c1, c2;
  if (!o.demo.empty()) {
    if (!o.curve1.empty() || !o.curve2.empty()) {
      throw UsageError("--demo cannot be combined with --curve1/--curve2");
    }
    auto circle = [](const Vec3& centre, int plane) {
      return sample_loop(
          [centre, plane](double a) {
            Vec3 v = plane == 0 ? Vec3(std::cos(a), std::sin(a), 0.0)
                                : Vec3(std::cos(a), 0.0, std::sin(a));
            return Vec3(centre + v);
          },
          256);
    };
    if (o.demo == "hopf-link") {
      c1 = circle(Vec3::Zero(), 0);
      c2 = circle(Vec3(1.0, 0.0, 0.0), 1);
    } else if (o.demo == "unlinked") {
      c1 = circle(Vec3::Zero(), 0);
      c2 = circle(Vec3(3.0, 0.0, 0.0), 0);
    } else if (o.demo == "hopf-fibers") {
      const auto phi = topology::hopf_map();
      for (auto [c, dst] : {std::pair{std::complex<double>(0.0, 0.0), &c1},
                            std::pair{std::complex<double>(1.0, 0.5), &c2}}) {
        auto tr = topology::trace_level_curve(phi, c, topology::hopf_fiber_seed(c));
        if (!tr.closed) throw Error(ErrorCode::OpenCurve, "Hopf fiber trace did not close");
        *dst = std::move(tr.curve);
      }
    } else {
      throw UsageError("unknown --demo '" + o.demo + "' (hopf-link, unlinked, hopf-fibers)");
    }
  } else {
    if (o.curve1.empty() || o.curve2.empty()) {
      throw UsageError("linking needs --curve1 and --curve2, or --demo");
    }
    try {
      c1 = io::read_curve_file(o.curve1);
      c2 = io::read_curve_file(o.curve2);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (!c1.closed() || !c2.closed()) throw UsageError("OpenCurve: input curves must be closed");
  }
  json j = base("linking");
  j["vertices"] = {c1.size(), c2.size()};
  try {
    const auto idx = topology::gauss_linking(c1, c2);
    j.update(index_json(idx));
    j["pass"] = !idx.non_integer();
    std::cout << j.dump(2) << '\n';
    return idx.non_integer() ? kExitFail : kExitPass;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CurvesIntersect) throw;
    j["error"] = e.what();
    j["pass"] = false;
    std::cout << j.dump(2) << '\n';
    std::cerr << e.what() << '\n';
    return kExitFail;
  }
}

int cmd_dump(const Options& o) {
  const auto m = mode_from(o);
  if (o.out.empty()) throw UsageError("dump needs --out DIR");
  const double t = o.t.value_or(0.0);
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(o.out, ec);
  if (ec || !fs::is_directory(o.out)) throw UsageError("cannot create output directory " + o.out);

  VectorFieldEvaluator field;
  if (o.field == "E") {
    field = cavity::field_E(m);
  } else if (o.field == "B") {
    field = cavity::field_B(m);
  } else if (o.field == "Estar") {
    field = clebsch::mode_starred_fields(m).Estar;
  } else if (o.field == "Bstar") {
    field = clebsch::mode_starred_fields(m).Bstar;
  } else if (o.field != "energy-density") {
    throw UsageError("unknown --field '" + o.field + "'");
  }

  const auto pts = io::cavity_lattice(o.grid, t);
  std::vector<std::pair<std::string, ScalarEvaluator>> outputs;
  if (field) {
    const char* comp[] = {"x", "y", "z"};
    for (int i = 0; i < 3; ++i) {
      outputs.emplace_back(o.field + "_" + comp[i] + ".csv",
                           [field, i](const SpaceTimePoint& p) { return field(p)[i]; });
    }
  } else {
    outputs.emplace_back("energy-density.csv", [m](const SpaceTimePoint& p) {
      return 0.5 * (cavity::eval_E(m, p).squaredNorm() + cavity::eval_B(m, p).squaredNorm());
    });
  }

  json files = json::array();
  for (const auto& [name, f] : outputs) {
    const fs::path path = fs::path(o.out) / name;
    std::ofstream os(path, std::ios::binary);
    if (!os) throw UsageError("cannot write " + path.string());
    io::write_grid_csv(os, pts, f);
    os.close();
    if (!os) throw UsageError("failed writing " + path.string());
    files.push_back({{"path", path.string()}, {"rows", pts.size()}});
  }
  json j = base("dump");
  j["mode"] = mode_json(m);
  j["field"] = o.field;
  j["t"] = t;
  j["grid"] = o.grid;
  j["files"] = files;
  std::cout << j.dump(2) << '\n';
  return kExitPass;
}

// ---------------------------------------------------------------------------
// verify

struct Check {
  std::string name;
  double value;
  double tolerance;
  [[nodiscard]] bool pass() const { return std::isfinite(value) && value <= tolerance; }
};

int cmd_verify(const Options& o) {
  const auto m = mode_from(o);
  const auto ex = exec_from(o);
  const double wa = std::max(1.0, m.omega() * m.amplitude());
  const double tau = m.tau();
  std::vector<Check> checks;

  // symmetry and walls
  checks.push_back({"symmetry.max_violation", cavity::check_symmetries(m, 1000).max_violation(),
                    1e-12 * wa});
  const auto bnd = cavity::check_boundary(m, 1000);
  checks.push_back({"boundary.tangential_E", bnd.max_tangential_E, 1e-13 * wa});
  checks.push_back({"boundary.normal_B", bnd.max_normal_B, 1e-13 * wa});
  checks.push_back({"orbifold.equivariance", topology::check_orbifold_equivariance(m, 50),
                    1e-12 * wa});

  // Maxwell equations by central differences
  {
    const auto E = cavity::field_E(m);
    const auto B = cavity::field_B(m);
    double div = 0.0, faraday = 0.0, ampere = 0.0, radiation = 0.0;
    for (const auto& p : clebsch::random_samples(20, pi, tau, 0x3a3)) {
      div = std::max({div, std::abs(diff::divergence(E, p)), std::abs(diff::divergence(B, p))});
      faraday = std::max(faraday, (diff::curl(E, p) + diff::time_derivative(B, p)).norm());
      ampere = std::max(ampere, (diff::curl(B, p) - diff::time_derivative(E, p)).norm());
      radiation = std::max(radiation, std::abs(E(p).dot(B(p))));
    }
    const double fd_tol = 1e-6 * wa * std::max(1.0, m.omega() * m.omega());
    checks.push_back({"maxwell.divergence", div, fd_tol});
    checks.push_back({"maxwell.faraday", faraday, fd_tol});
    checks.push_back({"maxwell.ampere", ampere, fd_tol});
    checks.push_back({"maxwell.radiation_E_dot_B", radiation, 1e-13 * wa * wa});
  }

  // energy
  const double energy = quantize::energy_analytic(m);
  const double escale = std::max(energy, 1e-300);
  double energy_spread = 0.0;
  for (int j = 0; j < 4; ++j) {
    const double e = quantize::energy_numeric(m, tau * j / 7.0, o.grid, ex).value;
    energy_spread = std::max(energy_spread, std::abs(e - energy) / escale);
  }
  checks.push_back({"energy.relative_error", energy_spread, o.tol_rel});
  checks.push_back({"helicity.abs", std::abs(quantize::helicity(m, tau / 8.0, o.grid, ex).value),
                    1e-10 * wa * wa});

  // lemma and gradient relation with the gradient-corrected starred fields
  {
    const auto star = clebsch::mode_starred_fields(m);
    const auto L = clebsch::lemma_integrals(cavity::field_B(m), star.Bstar, cavity::field_E(m),
                                            star.Estar, tau / 8.0, o.grid, ex);
    const double bs = std::max(L.b_sq, 1e-300);
    const double es = std::max(L.e_sq, 1e-300);
    checks.push_back({"lemma.B", std::abs(L.b_bstar - L.b_sq) / bs, std::max(1e-8, o.tol_rel)});
    checks.push_back({"lemma.E", std::abs(L.e_estar - L.e_sq) / es, std::max(1e-8, o.tol_rel)});
    const auto gr = clebsch::check_gradient_relation(cavity::field_E(m), star.Estar,
                                                     cavity::field_B(m), star.Bstar, tau, 20);
    checks.push_back({"gradient_relation.curl", gr.max_curl(),
                      1e-5 * wa * std::max(1.0, m.k().cast<double>().squaredNorm())});
    checks.push_back({"gradient_relation.walls", gr.max_wall(), 1e-12 * wa});
  }

  // duality and primed construction on closed-form pairs
  {
    clebsch::ClebschPair mag, el;
    mag.normalized = el.normalized = false;
    mag.magnitude.value = [](const SpaceTimePoint& x) { return -std::sin(x.r.z() - x.t); };
    mag.phase.value = [](const SpaceTimePoint& x) { return -x.r.x(); };
    el.magnitude.value = [](const SpaceTimePoint& x) { return std::sin(x.r.z() - x.t); };
    el.phase.value = [](const SpaceTimePoint& x) { return x.r.y(); };
    const auto rep = clebsch::verify_duality(mag, el, clebsch::random_samples(50, two_pi, two_pi, 7));
    checks.push_back({"duality.plane_wave", std::max(rep.b_violation, rep.e_violation), 1e-6});

    const auto planar = clebsch::planar_mode_clebsch(1.0);
    const auto primed =
        clebsch::primed_clebsch(planar.p0, planar.s0, planar.vq, planar.uq, planar.omega);
    const auto recon = clebsch::verify_duality(
        primed.PS, primed.VU, clebsch::random_samples(50, pi, planar.tau(), 11), planar.B,
        planar.E);
    checks.push_back({"primed.reconstruction",
                      std::max(*recon.b_reconstruction, *recon.e_reconstruction), 1e-6});
  }

  // degree
  const auto deg = topology::degree_d(m, o.grid, o.time_grid, ex);
  const double d_expected = 4.0 * energy / m.omega();
  const double dscale = std::max(1.0, d_expected);
  checks.push_back({"degree.residual", std::abs(deg.d - d_expected), 1e-6 * dscale});
  const auto t4 = topology::t4_degree(cavity::field_E(m), cavity::field_B(m), tau, o.grid,
                                      o.time_grid, ex);
  checks.push_back({"degree.t4_vanishes", std::abs(t4.value), 1e-9 * dscale});

  const auto idx = topology::TopologicalIndex::from_raw(deg.d);
  bool all = true;
  json arr = json::array();
  for (const auto& c : checks) {
    all = all && c.pass();
    arr.push_back({{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance},
                   {"pass", c.pass()}});
    if (!c.pass()) std::cerr << "FAIL " << c.name << ": " << c.value << " > " << c.tolerance << '\n';
  }
  json j = base("verify");
  j["mode"] = mode_json(m);
  j["grid"] = o.grid;
  j["time_grid"] = o.time_grid;
  j["checks"] = arr;
  j["d"] = index_json(idx);
  j["diagnostics"] = json::array();
  if (idx.non_integer()) j["diagnostics"].push_back("NonIntegerDegree");
  for (const auto& c : checks) {
    if (!c.pass()) j["diagnostics"].push_back("Failed:" + c.name);
  }
  j["pass"] = all;
  std::cout << j.dump(2) << '\n';
  return all ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// --config PATH: key=value lines, applied only for flags absent from argv.

std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::string path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  auto present = [&args](const std::string& flag) {
    for (const auto& a : args) {
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    }
    return false;
  };
  std::string line;
  std::vector<std::string> extra;
  while (std::getline(in, line)) {
    const std::string t = io::trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw UsageError("config line without '=': " + t);
    const std::string key = io::trim(t.substr(0, eq));
    const std::string value = io::trim(t.substr(eq + 1));
    if (key == "config") continue;
    if (!present("--" + key)) {
      extra.push_back("--" + key);
      extra.push_back(value);
    }
  }
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

void add_mode_flags(CLI::App* sub, Options& o) {
  sub->add_option("--k", o.k, "wave triple, e.g. 1,1,1");
  sub->add_option("--amplitude", o.amplitude, "mode amplitude A");
  sub->add_option("--pol", o.pol, "polarization seed: x, y, z or a,b,c");
}

void add_grid_flags(CLI::App* sub, Options& o) {
  sub->add_option("--grid", o.grid, "spatial points per axis")->check(CLI::PositiveNumber);
  sub->add_option("--time-grid", o.time_grid, "time points")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Cavity modes, Clebsch variables and topological indices"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value defaults file");
  app.add_option("--threads", o.threads, "worker threads (0 = all cores)");

  auto* mode = app.add_subcommand("mode", "mode metadata");
  add_mode_flags(mode, o);

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  add_mode_flags(verify, o);
  add_grid_flags(verify, o);
  verify->add_option("--tol-rel", o.tol_rel, "relative tolerance for energy and lemma checks");

  auto* quant = app.add_subcommand("quantize", "energy quantization report");
  add_mode_flags(quant, o);
  add_grid_flags(quant, o);
  quant->add_option("--photons", o.photons, "photon number; sets the amplitude");

  auto* link = app.add_subcommand("linking", "Gauss linking number of two curves");
  link->add_option("--curve1", o.curve1, "curve CSV");
  link->add_option("--curve2", o.curve2, "curve CSV");
  link->add_option("--demo", o.demo, "hopf-link, unlinked or hopf-fibers");

  auto* dump = app.add_subcommand("dump", "sample a field on a lattice");
  add_mode_flags(dump, o);
  dump->add_option("--grid", o.grid, "points per axis")->check(CLI::PositiveNumber);
  dump->add_option("--t", o.t, "time");
  dump->add_option("--out", o.out, "output directory");
  dump->add_option("--field", o.field, "E, B, Estar, Bstar or energy-density");

  auto* energy = app.add_subcommand("energy", "cavity energy");
  add_mode_flags(energy, o);
  add_grid_flags(energy, o);
  energy->add_option("--t", o.t, "time");
  energy->add_option("--tol-rel", o.tol_rel, "relative tolerance");

  auto* hel = app.add_subcommand("helicity", "electromagnetic helicity");
  add_mode_flags(hel, o);
  add_grid_flags(hel, o);
  hel->add_option("--t", o.t, "time");

  auto* degree = app.add_subcommand("degree", "orbifold degree d");
  add_mode_flags(degree, o);
  add_grid_flags(degree, o);

  // thread and config flags may follow the subcommand too
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }

  try {
    const auto args = expand_config(argc, argv);
    std::vector<const char*> cargs;
    for (const auto& a : args) cargs.push_back(a.c_str());
    bool dump_default_grid = true;
    for (const auto& a : args) {
      if (a == "--grid" || a.rfind("--grid=", 0) == 0) dump_default_grid = false;
    }
    app.parse(static_cast<int>(cargs.size()), cargs.data());

    if (dump->parsed() && dump_default_grid) o.grid = 16;
    if (mode->parsed()) return cmd_mode(o);
    if (verify->parsed()) return cmd_verify(o);
    if (quant->parsed()) return cmd_quantize(o);
    if (link->parsed()) return cmd_linking(o);
    if (dump->parsed()) return cmd_dump(o);
    if (energy->parsed()) return cmd_energy(o);
    if (hel->parsed()) return cmd_helicity(o);
    if (degree->parsed()) return cmd_degree(o);
  } catch (const CLI::CallForHelp& e) {
    std::cerr << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const emknot::Error& e) {
    std::cerr << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::ZeroModeComponent:
      case ErrorCode::NonpositiveAmplitude:
      case ErrorCode::DegeneratePolarization:
      case ErrorCode::InvalidArgument:
      case ErrorCode::ResolutionTooLow:
      case ErrorCode::IoError:
        return kExitUsage;
      default: {
        json j = base("error");
        j["error"] = e.what();
        j["pass"] = false;
        std::cout << j.dump(2) << '\n';
        return kExitFail;
      }
    }
  }
  return kExitUsage;
}
