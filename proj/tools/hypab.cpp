// hypab: command-line front end emitting CSV/JSON tables for spectra,
// kernels, interference sweeps, flat-limit checks, and the validation
// suites. Output is deterministic: identical flags give identical bytes.
//
// Exit codes: 0 success, 2 usage error, 3 numerical non-convergence,
// 4 validation failure.

#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "hypab/ab_kernel.hpp"
#include "hypab/core.hpp"
#include "hypab/flat_limit.hpp"
#include "hypab/landau.hpp"
#include "hypab/output.hpp"
#include "hypab/potentials.hpp"
#include "hypab/validate.hpp"

using namespace hypab;

namespace {

struct GlobalOpts {
  std::string format = "csv";
  std::string out;
  double hbar = 1.0;
  double mass = 1.0;
  double R = 1.0;
  bool seedless = false;

  PhysicalParams params() const {
    PhysicalParams p;
    p.hbar = hbar;
    p.mass = mass;
    p.curvature_radius = R;
    return p;
  }
  OutputFormat fmt() const {
    return format == "json" ? OutputFormat::json : OutputFormat::csv;
  }
};

void echo_units(OutputRecord& rec, const GlobalOpts& g) {
  rec.parameters.emplace_back("hbar", format_double(g.hbar));
  rec.parameters.emplace_back("mass", format_double(g.mass));
  rec.parameters.emplace_back("R", format_double(g.R));
}

int emit(const GlobalOpts& g, const OutputRecord& rec) {
  if (g.out.empty()) {
    write_record(std::cout, rec, g.fmt());
    return 0;
  }
  std::ofstream os(g.out);
  if (!os) {
    std::cerr << "hypab: cannot open --out file '" << g.out << "'\n";
    return 2;
  }
  write_record(os, rec, g.fmt());
  return 0;
}

// "n:l" -> pair; returns false on malformed input
bool parse_pair(const std::string& s, std::pair<int, int>& out) {
  auto colon = s.find(':');
  if (colon == std::string::npos) return false;
  try {
    std::size_t used = 0;
    int n = std::stoi(s.substr(0, colon), &used);
    if (used != colon) return false;
    std::string rest = s.substr(colon + 1);
    int l = std::stoi(rest, &used);
    if (used != rest.size()) return false;
    out = {n, l};
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "charged particle on the pseudosphere with an Aharonov-Bohm flux "
      "line: spectra, propagator kernels, interference patterns"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "write to file instead of stdout");
  app.add_option("--hbar", g.hbar, "Planck constant")->capture_default_str();
  app.add_option("--mass", g.mass, "particle mass")->capture_default_str();
  app.add_option("--R", g.R, "curvature radius")->capture_default_str();
  app.add_flag("--seedless", g.seedless,
               "reserved: every code path is deterministic already, so "
               "setting this is rejected");

  // ---- spectrum ----
  auto* spectrum =
      app.add_subcommand("spectrum", "discrete energy levels per channel");
  spectrum->require_subcommand(1);
  spectrum->fallthrough();

  double sp_b = 3.0, sp_omega = 1.0, sp_alpha = 1.0, sp_xi = 0.0;
  std::int64_t sp_lmax = 0;
  auto* sp_landau = spectrum->add_subcommand(
      "landau", "homogeneous magnetic field (l-independent ladder)");
  sp_landau->fallthrough();
  sp_landau->add_option("--b", sp_b, "field strength e B R^2 / 2 hbar c")
      ->required()
      ->check(CLI::NonNegativeNumber);
  sp_landau->add_option("--lmax", sp_lmax, "emit channels |l| <= lmax")
      ->capture_default_str();

  auto* sp_higgs = spectrum->add_subcommand("higgs", "Higgs oscillator");
  sp_higgs->fallthrough();
  sp_higgs->add_option("--omega", sp_omega, "oscillator frequency")
      ->required()
      ->check(CLI::PositiveNumber);
  sp_higgs->add_option("--xi", sp_xi, "flux parameter");
  sp_higgs->add_option("--lmax", sp_lmax, "emit channels |l| <= lmax")
      ->capture_default_str();

  auto* sp_coulomb =
      spectrum->add_subcommand("coulomb", "Kepler-Coulomb potential");
  sp_coulomb->fallthrough();
  sp_coulomb->add_option("--alpha", sp_alpha, "Coulomb coupling")
      ->required()
      ->check(CLI::PositiveNumber);
  sp_coulomb->add_option("--xi", sp_xi, "flux parameter");
  sp_coulomb->add_option("--lmax", sp_lmax, "emit channels |l| <= lmax")
      ->capture_default_str();

  // ---- kernel ----
  auto* kernel = app.add_subcommand(
      "kernel", "Euclidean AB kernel: partial-wave and winding sums");
  kernel->fallthrough();
  double kn_beta = 0.5, kn_tau1 = 1.0, kn_tau2 = 1.0, kn_dphi = 0.0,
         kn_xi = 0.0, kn_kmax = 0.0;
  std::int64_t kn_lmax = 40, kn_nmax = 5;
  std::string kn_mode = "partial-wave";
  kernel->add_option("--beta", kn_beta, "Euclidean time")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  kernel->add_option("--tau1", kn_tau1, "first radial coordinate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  kernel->add_option("--tau2", kn_tau2, "second radial coordinate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  kernel->add_option("--dphi", kn_dphi, "relative azimuth")
      ->capture_default_str();
  kernel->add_option("--xi", kn_xi, "flux parameter")->capture_default_str();
  kernel->add_option("--mode", kn_mode, "which representation(s)")
      ->check(CLI::IsMember({"partial-wave", "winding", "both"}))
      ->capture_default_str();
  kernel->add_option("--lmax", kn_lmax, "partial-wave truncation")
      ->capture_default_str();
  kernel->add_option("--nmax", kn_nmax, "winding truncation")
      ->capture_default_str();
  kernel->add_option("--kmax", kn_kmax, "spectral cutoff (0 = automatic)")
      ->capture_default_str();

  // ---- interference ----
  auto* interference = app.add_subcommand(
      "interference", "flat-limit two-path interference terms vs flux");
  interference->fallthrough();
  double in_start = 0.0, in_end = 1.0, in_tau1 = 0.02, in_tau2 = 0.02,
         in_dphi = pi, in_T = 1.0;
  std::int64_t in_steps = 5;
  std::vector<std::string> in_pairs{"0:-1"};
  bool in_verbatim = false;
  interference->add_option("--xi-start", in_start, "first flux value")
      ->capture_default_str();
  interference->add_option("--xi-end", in_end, "last flux value")
      ->capture_default_str();
  interference->add_option("--xi-steps", in_steps, "number of samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  interference
      ->add_option("--pairs", in_pairs,
                   "winding pairs n:l (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  interference->add_option("--tau1", in_tau1, "first path coordinate")
      ->capture_default_str();
  interference->add_option("--tau2", in_tau2, "second path coordinate")
      ->capture_default_str();
  interference->add_option("--dphi", in_dphi, "detector azimuth")
      ->capture_default_str();
  interference->add_option("--T", in_T, "real propagation time")
      ->capture_default_str();
  interference->add_flag(
      "--verbatim-sign", in_verbatim,
      "report the signed term with its (negative real) squared prefactor "
      "instead of the bare contrast");

  // ---- flatlimit ----
  auto* flatlimit = app.add_subcommand(
      "flatlimit", "Legendre -> Bessel degeneration at large degree");
  flatlimit->fallthrough();
  double fl_nu = 1000.0;
  std::vector<double> fl_mu{0.0, 0.3, 0.5, 1.0};
  std::vector<double> fl_z{0.5, 2.0};
  flatlimit->add_option("--nu", fl_nu, "degree parameter (>= 10)")
      ->capture_default_str();
  flatlimit->add_option("--mu", fl_mu, "orders to check")->delimiter(',');
  flatlimit->add_option("--z", fl_z, "arguments to check")->delimiter(',');

  // ---- validate ----
  auto* validate =
      app.add_subcommand("validate", "run the self-check suites");
  validate->fallthrough();
  std::string va_suite = "all";
  validate->add_option("--suite", va_suite, "which suite")
      ->check(CLI::IsMember({"all", "specfun", "kernel", "limits", "spectra"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (g.seedless) {
    std::cerr << "hypab: --seedless is reserved; there is no RNG anywhere "
                 "and output is already deterministic\n";
    return 2;
  }

  try {
    OutputRecord rec;

    if (sp_landau->parsed() || sp_higgs->parsed() || sp_coulomb->parsed()) {
      PhysicalParams params = g.params();
      rec.command = "spectrum";
      rec.columns = {"N", "l", "E"};
      auto push_channel = [&](std::int64_t l, const std::vector<double>& e) {
        for (std::size_t n = 0; n < e.size(); ++n) {
          rec.rows.push_back(
              {static_cast<double>(n), static_cast<double>(l), e[n]});
        }
      };
      if (sp_landau->parsed()) {
        rec.parameters.emplace_back("potential", "landau");
        rec.parameters.emplace_back("b", format_double(sp_b));
        std::vector<double> e = landau_levels(sp_b, params);
        for (std::int64_t l = -sp_lmax; l <= sp_lmax; ++l) push_channel(l, e);
      } else if (sp_higgs->parsed()) {
        rec.parameters.emplace_back("potential", "higgs");
        rec.parameters.emplace_back("omega", format_double(sp_omega));
        rec.parameters.emplace_back("xi", format_double(sp_xi));
        HiggsParams h = HiggsParams::from_omega(sp_omega, params);
        for (std::int64_t l = -sp_lmax; l <= sp_lmax; ++l) {
          push_channel(l, higgs_bound_spectrum(h, l, sp_xi, params));
        }
      } else {
        rec.parameters.emplace_back("potential", "coulomb");
        rec.parameters.emplace_back("alpha", format_double(sp_alpha));
        rec.parameters.emplace_back("xi", format_double(sp_xi));
        CoulombParams c = CoulombParams::from_alpha(sp_alpha, params);
        for (std::int64_t l = -sp_lmax; l <= sp_lmax; ++l) {
          push_channel(l, coulomb_bound_spectrum(c, l, sp_xi, params));
        }
      }
      rec.parameters.emplace_back("lmax", std::to_string(sp_lmax));
      echo_units(rec, g);
      return emit(g, rec);
    }

    if (kernel->parsed()) {
      rec.command = "kernel";
      rec.parameters = {{"mode", kn_mode},
                        {"beta", format_double(kn_beta)},
                        {"tau1", format_double(kn_tau1)},
                        {"tau2", format_double(kn_tau2)},
                        {"dphi", format_double(kn_dphi)},
                        {"xi", format_double(kn_xi)},
                        {"lmax", std::to_string(kn_lmax)},
                        {"nmax", std::to_string(kn_nmax)}};
      echo_units(rec, g);
      KernelRequest req;
      req.p1 = PseudospherePoint::make(kn_tau1, 0.0);
      req.p2 = PseudospherePoint::make(kn_tau2, kn_dphi);
      req.beta = kn_beta;
      req.xi = kn_xi;
      req.l_max = kn_lmax;
      req.n_max = kn_nmax;
      req.k_max = kn_kmax;
      req.params = g.params();
      try {
        if (kn_mode == "partial-wave") {
          rec.columns = {"re", "im", "abs"};
          Complex k = partial_wave_kernel(req);
          rec.rows.push_back({k.real(), k.imag(), std::abs(k)});
        } else if (kn_mode == "winding") {
          rec.columns = {"n", "re", "im", "abs"};
          WindingEvaluator ev(req);
          for (std::int64_t n = -kn_nmax; n <= kn_nmax; ++n) {
            Complex k = ev.evaluate(n);
            rec.rows.push_back(
                {static_cast<double>(n), k.real(), k.imag(), std::abs(k)});
          }
        } else {
          rec.columns = {"pw_re", "pw_im", "wind_re", "wind_im", "residual"};
          Complex pw = partial_wave_kernel(req);
          Complex wd = winding_kernel_sum(req);
          double residual =
              std::abs(wd - pw) / std::max(std::abs(pw), 1e-300);
          rec.rows.push_back(
              {pw.real(), pw.imag(), wd.real(), wd.imag(), residual});
        }
      } catch (const ConvergenceError& e) {
        // surface the failure in the record itself, then signal exit 3
        rec.parameters.emplace_back("error", e.what());
        rec.rows.clear();
        emit(g, rec);
        std::cerr << "hypab: " << e.what() << "\n";
        return 3;
      }
      return emit(g, rec);
    }

    if (interference->parsed()) {
      rec.command = "interference";
      InterferenceGeometry geom;
      geom.tau1 = in_tau1;
      geom.tau2 = in_tau2;
      geom.phi1 = 0.0;
      geom.phi2 = in_dphi;
      geom.R = g.R;
      geom.T = in_T;
      geom.params = g.params();
      geom.check();
      std::vector<std::pair<int, int>> pairs;
      rec.columns = {"xi"};
      for (const std::string& s : in_pairs) {
        std::pair<int, int> p;
        if (!parse_pair(s, p)) {
          std::cerr << "hypab: bad --pairs entry '" << s
                    << "' (want n:l)\n";
          return 2;
        }
        pairs.push_back(p);
        rec.columns.push_back("I[" + s + "]");
      }
      rec.parameters = {{"xi_start", format_double(in_start)},
                        {"xi_end", format_double(in_end)},
                        {"xi_steps", std::to_string(in_steps)},
                        {"tau1", format_double(in_tau1)},
                        {"tau2", format_double(in_tau2)},
                        {"dphi", format_double(in_dphi)},
                        {"T", format_double(in_T)},
                        {"signed", in_verbatim ? "1" : "0"}};
      echo_units(rec, g);
      for (std::int64_t i = 0; i < in_steps; ++i) {
        double xi =
            in_steps == 1
                ? in_start
                : in_start + (in_end - in_start) * static_cast<double>(i) /
                                 static_cast<double>(in_steps - 1);
        std::vector<double> row{xi};
        for (auto [n, l] : pairs) {
          row.push_back(in_verbatim ? interference_term(n, l, geom, xi)
                                    : interference_contrast(n, l, geom, xi));
        }
        rec.rows.push_back(std::move(row));
      }
      return emit(g, rec);
    }

    if (flatlimit->parsed()) {
      rec.command = "flatlimit";
      rec.parameters = {{"nu", format_double(fl_nu)}};
      echo_units(rec, g);
      rec.columns = {"mu", "z", "lhs", "rhs", "rel_dev"};
      for (double mu : fl_mu) {
        for (double z : fl_z) {
          LimitCheckResult r = legendre_bessel_limit_check(mu, z, fl_nu);
          rec.rows.push_back({mu, z, r.lhs, r.rhs, r.rel_dev});
        }
      }
      return emit(g, rec);
    }

    if (validate->parsed()) {
      rec.command = "validate";
      rec.parameters = {{"suite", va_suite}};
      rec.columns = {"check", "residual", "tolerance", "pass"};
      std::vector<CheckResult> results = run_validation_suite(va_suite);
      std::size_t failed = 0;
      for (std::size_t i = 0; i < results.size(); ++i) {
        const CheckResult& c = results[i];
        rec.parameters.emplace_back("check_" + std::to_string(i), c.name);
        rec.rows.push_back({static_cast<double>(i), c.residual, c.tolerance,
                            c.pass ? 1.0 : 0.0});
        if (!c.pass) ++failed;
      }
      echo_units(rec, g);
      int rc = emit(g, rec);
      if (rc != 0) return rc;
      if (failed > 0) {
        std::cerr << "hypab: " << failed << " of " << results.size()
                  << " checks failed\n";
        return 4;
      }
      std::cerr << "hypab: " << results.size() << " checks passed\n";
      return 0;
    }
  } catch (const ConvergenceError& e) {
    std::cerr << "hypab: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hypab: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hypab: internal error: " << e.what() << "\n";
    return 3;
  }

  std::cerr << "hypab: no subcommand handled\n";
  return 2;
}
