// photonwf: command-line driver for the photon-wave-function toolkit.
//
//   photonwf identities   [--seed N] [--tol name=value ...]
//   photonwf polarization --k x,y,z
//   photonwf synth        --config FILE [--t T] --out FILE [--format csv|raw]
//   photonwf evolve       --config FILE [--method spectral|curl] --out FILE
//   photonwf symmetry     --config FILE --transform NAME [options]
//   photonwf zb           --config FILE [--formalism dual|traditional]
//                         [--breakdown] --out FILE
//   photonwf ladder       [--derive momentum|closure] [--n i,j,k] [--lambda L]
//
// Config files use the structured text format documented in the README.

#include <CLI11.hpp>

#include <photonwf/diagnostics.hpp>
#include <photonwf/ladder.hpp>
#include <photonwf/symmetry.hpp>
#include <photonwf/textdoc.hpp>
#include <photonwf/zb.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

using namespace photonwf;

namespace {

struct RunConfig {
  AmplitudeSet amps;
  std::optional<GridSpec> grid;
  double t0 = 0.0;
  double t1 = 1.0;
  int samples = 2;
  bool has_time = false;
  std::uint64_t seed = 20240811;
};

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();

  RunConfig cfg;
  {
    std::istringstream amp_in(buffer.str());
    cfg.amps = read_amplitude_document(amp_in);
  }
  const textdoc::Document doc = textdoc::parse_string(buffer.str());
  if (doc.has("grid")) {
    const auto dims = doc.at("grid").at("dims").integers();
    if (dims.size() != 3) throw std::runtime_error("grid.dims must have 3 entries");
    GridSpec g;
    g.dims = {int(dims[0]), int(dims[1]), int(dims[2])};
    g.box = cfg.amps.box();
    g.validate();
    cfg.grid = g;
  }
  if (doc.has("time")) {
    const auto& t = doc.at("time");
    cfg.t0 = t.at("t0").number();
    cfg.t1 = t.at("t1").number();
    cfg.samples = int(t.at("samples").integer());
    if (cfg.samples < 2) throw std::runtime_error("time.samples must be >= 2");
    if (!(cfg.t1 > cfg.t0)) throw std::runtime_error("time.t1 must exceed time.t0");
    cfg.has_time = true;
  }
  if (doc.has("seed")) cfg.seed = std::uint64_t(doc.at("seed").integer());
  return cfg;
}

GridSpec require_grid(const RunConfig& cfg) {
  if (!cfg.grid) throw std::runtime_error("config is missing the grid section");
  return *cfg.grid;
}

// samples over [t0, t1), uniform; the half-open window keeps DFT-based
// oscillation extraction leakage-free when t1 - t0 spans whole periods
std::vector<double> config_times(const RunConfig& cfg) {
  if (!cfg.has_time) throw std::runtime_error("config is missing the time section");
  std::vector<double> t(std::size_t(cfg.samples));
  for (int i = 0; i < cfg.samples; ++i)
    t[std::size_t(i)] = cfg.t0 + (cfg.t1 - cfg.t0) * i / cfg.samples;
  return t;
}

Vec3 parse_vec3(const std::string& s) {
  Vec3 v{};
  char extra;
  if (std::sscanf(s.c_str(), "%lf,%lf,%lf%c", &v[0], &v[1], &v[2], &extra) != 3)
    throw std::runtime_error("expected three comma-separated numbers, got '" + s + "'");
  return v;
}

std::array<int, 3> parse_int3(const std::string& s) {
  std::array<int, 3> v{};
  char extra;
  if (std::sscanf(s.c_str(), "%d,%d,%d%c", &v[0], &v[1], &v[2], &extra) != 3)
    throw std::runtime_error("expected three comma-separated integers, got '" + s + "'");
  return v;
}

std::map<std::string, double> parse_tols(const std::vector<std::string>& kvs) {
  std::map<std::string, double> out;
  for (const auto& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("--tol expects name=value, got '" + kv + "'");
    out[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
  }
  return out;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ------------------------------------------------------------------ commands

int cmd_identities(std::uint64_t seed, const std::map<std::string, double>& tols) {
  diag::SuiteOptions opt;
  opt.seed = seed;
  opt.tol_overrides = tols;
  bool all = true;
  for (const auto& r : diag::run_identity_suite(opt)) {
    std::printf("%s %-36s %.3e (tol %.1e)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.value,
                r.tol);
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

int cmd_polarization(const Vec3& k) {
  const PolarizationTriad t = polarization_triad(WaveVector::of(k));
  const char* names[3] = {"eps(k,+1)", "eps(k,-1)", "eps(k, 0)"};
  const Vec3c* vecs[3] = {&t.eps_plus, &t.eps_minus, &t.eps_zero};
  std::printf("k = (%s, %s, %s), |k| = %s\n", fmt(k[0]).c_str(), fmt(k[1]).c_str(),
              fmt(k[2]).c_str(), fmt(t.k.omega).c_str());
  for (int a = 0; a < 3; ++a) {
    std::printf("%s =", names[a]);
    for (int i = 0; i < 3; ++i) {
      const cplx v = (*vecs[a])[i];
      std::printf(" (%s %c %si)", fmt(v.real()).c_str(), v.imag() < 0 ? '-' : '+',
                  fmt(std::abs(v.imag())).c_str());
    }
    std::printf("\n");
  }
  double orth = 0.0;
  const int lambdas[3] = {1, -1, 0};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      orth = std::max(orth,
                      std::abs(dot(t.eps(lambdas[a]), t.eps(lambdas[b])) - (a == b ? 1. : 0.)));
  std::printf("orthonormality residual = %.3e\n", orth);
  return 0;
}

int cmd_synth(const RunConfig& cfg, double t, const std::string& out_path,
              const std::string& format) {
  const GridSpec grid = require_grid(cfg);
  const FieldGrid f = synthesize_field(cfg.amps, grid, t);
  if (format == "raw") {
    write_raw(f, out_path);
  } else {
    auto out = open_out(out_path);
    write_csv(f, out);
  }
  std::printf("wrote %s snapshot at t = %s to %s\n", format.c_str(), fmt(t).c_str(),
              out_path.c_str());
  return 0;
}

int cmd_evolve(const RunConfig& cfg, const std::string& method, const std::string& out_path) {
  const GridSpec grid = require_grid(cfg);
  const std::vector<double> times = config_times(cfg);
  FieldGrid f = synthesize_field(cfg.amps, grid, times.front());
  auto out = open_out(out_path);
  out << "t,J0,Jx,Jy,Jz,scalar\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (i > 0) {
      const double dt = times[i] - times[i - 1];
      f = method == "curl" ? evolve_curl_reference(f, dt, 1) : evolve_spectral(f, dt, 1);
    }
    const Observables o = observables(f);
    out << fmt(times[i]) << ',' << fmt(o.j0) << ',' << fmt(o.j[0]) << ',' << fmt(o.j[1]) << ','
        << fmt(o.j[2]) << ',' << fmt(o.scalar_integral) << "\n";
    if (o.j_im_max > 1e-10 * std::max(std::abs(o.j0), 1.0))
      std::fprintf(stderr, "warning: imaginary momentum residue %.3e at t = %s\n", o.j_im_max,
                   fmt(times[i]).c_str());
  }
  std::printf("wrote observable series (%zu samples, method %s) to %s\n", times.size(),
              method.c_str(), out_path.c_str());
  return 0;
}

int cmd_symmetry(const RunConfig& cfg, const std::string& transform, double t, double theta,
                 double rapidity, const Vec3& axis, double epsilon,
                 const std::map<std::string, double>& tols) {
  const auto tol_of = [&](const char* name, double fallback) {
    auto it = tols.find(name);
    return it == tols.end() ? fallback : it->second;
  };

  if (transform == "boost") {
    const BoostParams p = make_boost(rapidity, axis);
    const BoostedModes bm = boost(cfg.amps, p);
    double symbol = 0.0;
    for (const auto& m : bm.modes) symbol = std::max(symbol, symbol_residual(m));
    std::printf("boost rapidity = %s axis = (%s, %s, %s)\n", fmt(rapidity).c_str(),
                fmt(p.axis[0]).c_str(), fmt(p.axis[1]).c_str(), fmt(p.axis[2]).c_str());
    std::printf("modes = %zu, max symbol residual = %.3e\n", bm.modes.size(), symbol);
    if (cfg.grid) {
      const double before = lorentz_scalar_integral(cfg.amps, *cfg.grid, t);
      const double after = lorentz_scalar_integral(bm, *cfg.grid, t);
      std::printf("scalar integral before = %s after = %s |diff| = %.3e\n", fmt(before).c_str(),
                  fmt(after).c_str(), std::abs(after - before));
    }
    const double tol = tol_of("symbol", 1e-10);
    if (symbol > tol) {
      std::fprintf(stderr, "error: kind=tolerance msg=\"symbol residual %.3e > %.1e\"\n", symbol,
                   tol);
      return 1;
    }
    return 0;
  }

  if (transform == "pseudo-lagrangian" || transform == "pseudo-lagrangian-boost" ||
      transform == "pseudo-lagrangian-rotation") {
    const GridSpec grid = require_grid(cfg);
    const GeneratorSpec::Kind kind = transform == "pseudo-lagrangian-boost"
                                         ? GeneratorSpec::Kind::boost
                                         : GeneratorSpec::Kind::rotation;
    const auto rep = pseudo_lagrangian_check(cfg.amps, {kind, axis}, epsilon, grid, t);
    std::printf("pseudo-Lagrangian: max |L| = %.3e, max |deltaL| = %.3e\n", rep.lagrangian_max,
                rep.delta_max);
    std::printf("boost-sector identity residuals = (%.3e, %.3e, %.3e)\n", rep.a6_max[0],
                rep.a6_max[1], rep.a6_max[2]);
    return 0;
  }

  const GridSpec grid = require_grid(cfg);
  const FieldGrid f = synthesize_field(cfg.amps, grid, t);
  FieldGrid via_field = f;
  AmplitudeSet mapped(cfg.amps.box());
  if (transform == "parity") {
    mapped = parity(cfg.amps);
    via_field = parity(f);
  } else if (transform == "time-reversal") {
    mapped = time_reversal(cfg.amps);
    via_field = time_reversal_field(cfg.amps, grid, t);
  } else if (transform == "dual") {
    mapped = dual(cfg.amps);
    via_field = dual(f);
  } else if (transform == "gauge") {
    mapped = gauge_phase(cfg.amps, theta);
    via_field = gauge_phase(f, theta);
  } else {
    throw std::runtime_error("unknown transform '" + transform + "'");
  }
  const FieldGrid via_amps = synthesize_field(mapped, grid, t);
  double residual = 0.0;
  for (std::size_t i = 0; i < f.data.size(); ++i)
    residual = std::max(residual, std::abs(via_amps.data[i] - via_field.data[i]));
  std::printf("%s commuting-diagram residual at t = %s: %.6e\n", transform.c_str(),
              fmt(t).c_str(), residual);
  const double tol = tol_of("diagram", 0.0);
  if (tol > 0.0 && residual > tol) {
    std::fprintf(stderr, "error: kind=tolerance msg=\"diagram residual %.3e > %.1e\"\n", residual,
                 tol);
    return 1;
  }
  return 0;
}

int cmd_zb(const RunConfig& cfg, const std::string& formalism, bool breakdown,
           const std::string& out_path) {
  const std::vector<double> times = config_times(cfg);
  const Formalism f = formalism == "traditional" ? Formalism::traditional : Formalism::dual;
  const MomentumSeries s = momentum_series(cfg.amps, times, f);
  auto out = open_out(out_path);
  write_csv(s, out, breakdown);

  const auto flagged = cfg.amps.unflagged_virtual_content();
  for (const auto& key : flagged)
    std::fprintf(stderr,
                 "warning: lambda=0 mode [%d,%d,%d] has nonzero amplitude but no virtual flag\n",
                 key.n[0], key.n[1], key.n[2]);

  const ZbSummary sum = zb_extract(s);
  std::printf("constant     = (%s, %s, %s)\n", fmt(sum.constant[0]).c_str(),
              fmt(sum.constant[1]).c_str(), fmt(sum.constant[2]).c_str());
  const double scale = std::max(1.0, norm(sum.constant));
  if (norm(sum.zb_amplitude) <= 1e-10 * scale) {
    std::printf("zb_amplitude ≈ 0\n");
  } else {
    std::printf("zb_amplitude = (%s, %s, %s)\n", fmt(sum.zb_amplitude[0]).c_str(),
                fmt(sum.zb_amplitude[1]).c_str(), fmt(sum.zb_amplitude[2]).c_str());
    std::printf("frequency    = %s (bin %d)\n", fmt(sum.frequency).c_str(), sum.peak_bin);
  }
  std::printf("wrote momentum series (%zu samples, %s formalism) to %s\n", times.size(),
              formalism.c_str(), out_path.c_str());
  return 0;
}

int cmd_ladder(const std::string& derive, const std::array<int, 3>& n, int lambda, double t) {
  using namespace photonwf::ladder;
  const Vec3 box{2.0 * std::numbers::pi, 2.0 * std::numbers::pi, 2.0 * std::numbers::pi};

  if (derive == "momentum") {
    const ModeKey key{n, lambda};
    const WaveVector kv = WaveVector::of(Vec3{double(n[0]), double(n[1]), double(n[2])});
    // print J0 in units of w: with box 2 pi the numeric coefficients equal
    // multiples of w for a unit harmonic; factor the common w out
    Poly j0 = normal_order(momentum_bilinear({key}, 0, t, box));
    j0 *= cplx(1.0 / kv.omega);
    std::printf("J0 = ω·(%s)\n", to_string(j0).c_str());
    for (int comp = 1; comp <= 3; ++comp) {
      const Poly j = normal_order(momentum_bilinear({key}, comp, t, box));
      std::printf("J%d = %s\n", comp, to_string(j).c_str());
    }
    return 0;
  }

  if (derive == "closure") {
    const int lambdas[3] = {1, -1, 0};
    bool all = true;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const Poly direct = commutator(Poly(make_a(n, lambdas[a])), Poly(make_ad(n, lambdas[b])));
        const Poly derived = commutator(substitute_potential_ops(Poly(make_a(n, lambdas[a]))),
                                        substitute_potential_ops(Poly(make_ad(n, lambdas[b]))));
        const bool match = direct == derived;
        all = all && match;
        std::printf("[a(k,%+d), ad(k,%+d)]  postulated: %-4s derived: %-4s %s\n", lambdas[a],
                    lambdas[b], to_string(direct).c_str(), to_string(derived).c_str(),
                    match ? "MATCH" : "MISMATCH");
      }
    for (int s = 0; s < 4; ++s) {
      const Poly c = commutator(Poly(make_c(n, s)), Poly(make_cd(n, s)));
      std::printf("[c(k,s%d), cd(k,s%d)] = %s\n", s, s, to_string(c).c_str());
    }
    return all ? 0 : 1;
  }

  throw std::runtime_error("unknown derivation '" + derive + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"photon wave function toolkit"};
  app.require_subcommand(1);

  // identities
  auto* identities = app.add_subcommand("identities", "run the identity suites");
  std::uint64_t seed = 20240811;
  std::vector<std::string> tol_kvs;
  identities->add_option("--seed", seed, "random seed for the property sweeps");
  identities->add_option("--tol", tol_kvs, "tolerance override name=value");

  // polarization
  auto* polarization = app.add_subcommand("polarization", "print a helicity triad");
  std::string k_str = "0,0,1";
  polarization->add_option("--k", k_str, "wavevector x,y,z");

  // synth
  auto* synth = app.add_subcommand("synth", "write a field snapshot");
  std::string config_path, out_path, format = "csv";
  double t_arg = 0.0;
  synth->add_option("--config", config_path, "run configuration")->required();
  synth->add_option("--out", out_path, "output file")->required();
  synth->add_option("--t", t_arg, "snapshot time");
  synth->add_option("--format", format, "csv or raw")
      ->check(CLI::IsMember({"csv", "raw"}));

  // evolve
  auto* evolve = app.add_subcommand("evolve", "write an observable time series");
  std::string evolve_config, evolve_out, method = "spectral";
  evolve->add_option("--config", evolve_config, "run configuration")->required();
  evolve->add_option("--out", evolve_out, "output CSV")->required();
  evolve->add_option("--method", method, "spectral or curl")
      ->check(CLI::IsMember({"spectral", "curl"}));

  // symmetry
  auto* symmetry = app.add_subcommand("symmetry", "apply a transform and report residuals");
  std::string sym_config, transform;
  double theta = 0.7, rapidity = 0.5, epsilon = 1e-4, sym_t = 0.0;
  std::string axis_str = "0,0,1";
  std::vector<std::string> sym_tols;
  symmetry->add_option("--config", sym_config, "run configuration")->required();
  symmetry->add_option("--transform", transform, "parity|time-reversal|dual|gauge|boost|"
                                               "pseudo-lagrangian-rotation|pseudo-lagrangian-boost")
      ->required();
  symmetry->add_option("--t", sym_t, "evaluation time");
  symmetry->add_option("--theta", theta, "gauge angle");
  symmetry->add_option("--rapidity", rapidity, "boost rapidity");
  symmetry->add_option("--axis", axis_str, "axis x,y,z");
  symmetry->add_option("--epsilon", epsilon, "infinitesimal parameter");
  symmetry->add_option("--tol", sym_tols, "tolerance override name=value");

  // zb
  auto* zb = app.add_subcommand("zb", "momentum time series and oscillation summary");
  std::string zb_config, zb_out, formalism = "dual";
  bool breakdown = false;
  zb->add_option("--config", zb_config, "run configuration")->required();
  zb->add_option("--out", zb_out, "output CSV")->required();
  zb->add_option("--formalism", formalism, "dual or traditional")
      ->check(CLI::IsMember({"dual", "traditional"}));
  zb->add_flag("--breakdown", breakdown, "emit constant/oscillatory columns");

  // ladder
  auto* ladder_cmd = app.add_subcommand("ladder", "symbolic derivations");
  std::string derive = "momentum", n_str = "0,0,1";
  int lambda = 1;
  double ladder_t = 0.0;
  ladder_cmd->add_option("--derive", derive, "momentum or closure")
      ->check(CLI::IsMember({"momentum", "closure"}));
  ladder_cmd->add_option("--n", n_str, "mode harmonic i,j,k");
  ladder_cmd->add_option("--lambda", lambda, "helicity +1, -1 or 0");
  ladder_cmd->add_option("--t", ladder_t, "time for the oscillatory coefficients");

  CLI11_PARSE(app, argc, argv);

  try {
    if (identities->parsed()) return cmd_identities(seed, parse_tols(tol_kvs));
    if (polarization->parsed()) return cmd_polarization(parse_vec3(k_str));
    if (synth->parsed()) return cmd_synth(load_config(config_path), t_arg, out_path, format);
    if (evolve->parsed()) return cmd_evolve(load_config(evolve_config), method, evolve_out);
    if (symmetry->parsed())
      return cmd_symmetry(load_config(sym_config), transform, sym_t, theta, rapidity,
                          parse_vec3(axis_str), epsilon, parse_tols(sym_tols));
    if (zb->parsed()) return cmd_zb(load_config(zb_config), formalism, breakdown, zb_out);
    if (ladder_cmd->parsed()) return cmd_ladder(derive, parse_int3(n_str), lambda, ladder_t);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: kind=runtime msg=\"%s\"\n", e.what());
    return 2;
  }
  return 0;
}
