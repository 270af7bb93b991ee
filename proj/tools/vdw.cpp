// Command-line front end: coeffs | simulate | exact | shock | sweep | verify.
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "vdw/csv.hpp"
#include "vdw/evolution.hpp"
#include "vdw/exact_solutions.hpp"
#include "vdw/gas_model.hpp"
#include "vdw/shock.hpp"
#include "vdw/verify.hpp"

namespace fs = std::filesystem;
using namespace vdw;

namespace {

// Flat key=value configuration with section prefixes (gas.gamma=1.4).
struct Config {
  std::map<std::string, std::string> kv;

  bool has(const std::string& k) const { return kv.count(k) > 0; }
  std::string str(const std::string& k, const std::string& dflt) const {
    auto it = kv.find(k);
    return it == kv.end() ? dflt : it->second;
  }
  double num(const std::string& k, double dflt) const {
    auto it = kv.find(k);
    if (it == kv.end()) return dflt;
    try {
      size_t pos = 0;
      const double v = std::stod(it->second, &pos);
      if (pos != it->second.size()) throw std::invalid_argument(k);
      return v;
    } catch (const std::exception&) {
      throw Error("config key " + k + " is not a number: " + it->second);
    }
  }
  int integer(const std::string& k, int dflt) const {
    return static_cast<int>(num(k, dflt));
  }
};

void load_config_file(Config& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      std::ostringstream os;
      os << path << ":" << lineno << ": expected key=value";
      throw Error(os.str());
    }
    cfg.kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
}

void apply_set(Config& cfg, const std::vector<std::string>& sets) {
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw Error("--set expects key=value, got: " + s);
    cfg.kv[s.substr(0, eq)] = s.substr(eq + 1);
  }
}

GasParameters gas_from(const Config& cfg) {
  GasParameters p;
  p.gamma = cfg.num("gas.gamma", p.gamma);
  p.a_tilde = cfg.num("gas.a_tilde", p.a_tilde);
  p.b_tilde = cfg.num("gas.b_tilde", p.b_tilde);
  p.rho0 = cfg.num("gas.rho0", p.rho0);
  p.p0 = cfg.num("gas.p0", p.p0);
  p.cv = cfg.num("gas.cv", p.cv);
  p.epsilon = cfg.num("gas.epsilon", p.epsilon);
  p.mu_hat = cfg.num("gas.mu_hat", p.mu_hat);
  p.kappa_hat = cfg.num("gas.kappa_hat", p.kappa_hat);
  return p;
}

Grid2D grid_from(const Config& cfg) {
  Grid2D g;
  g.theta_min = cfg.num("grid.theta_min", 0.0);
  g.theta_max = cfg.num("grid.theta_max", 1.0);
  g.n_theta = cfg.integer("grid.n_theta", 64);
  g.eta_min = cfg.num("grid.eta_min", 3.0);
  g.eta_max = cfg.num("grid.eta_max", 11.0);
  g.n_eta = cfg.integer("grid.n_eta", 16);
  const std::string bc = cfg.str("grid.bc", "periodic");
  if (bc == "periodic") {
    g.bc = BoundaryKind::Periodic;
  } else if (bc == "dirichlet-from-exact") {
    g.bc = BoundaryKind::DirichletFromExact;
  } else {
    throw Error("grid.bc must be periodic or dirichlet-from-exact");
  }
  g.check();
  return g;
}

std::string out_dir(const Config& cfg) {
  std::string d = cfg.str("output_dir", "");
  if (d.empty()) {
    const char* env = std::getenv("VDW_OUT");
    d = env != nullptr ? env : "out";
  }
  fs::create_directories(d);
  return d;
}

void write_manifest(const std::string& dir, const Config& cfg,
                    const std::vector<std::pair<std::string, std::string>>&
                        extra) {
  std::ofstream m(dir + "/manifest.txt");
  for (const auto& [k, v] : cfg.kv) m << k << "=" << v << "\n";
  for (const auto& [k, v] : extra) m << k << "=" << v << "\n";
}

int cmd_coeffs(const Config& cfg) {
  const GasParameters p = gas_from(cfg);
  const auto c = coefficients(validate(p));
  const std::string dir = out_dir(cfg);
  CsvWriter csv(dir + "/coeffs.csv",
                {"gamma", "a_tilde", "b_tilde", "c0", "gamma_hat0", "lambda0",
                 "beta_hat", "q"});
  csv.row({p.gamma, p.a_tilde, p.b_tilde, c.c0, c.gamma_hat0, c.lambda0,
           c.beta_hat, c.q});
  std::cout << "c0=" << format_double(c.c0)
            << " gamma_hat0=" << format_double(c.gamma_hat0)
            << " lambda0=" << format_double(c.lambda0)
            << " beta_hat=" << format_double(c.beta_hat)
            << " q=" << format_double(c.q) << "\n";
  return 0;
}

int cmd_simulate(const Config& cfg) {
  const GasParameters p = gas_from(cfg);
  const auto c = coefficients(validate(p));
  Grid2D gr = grid_from(cfg);
  const std::string ic_name = cfg.str("sim.ic", "sine");
  const double tau_end = cfg.num("sim.tau_end", 0.1);
  const double every = cfg.num("sim.snapshot_every", 0.0);
  const double cfl = cfg.num("sim.cfl", 0.4);
  const std::string dir = out_dir(cfg);

  std::function<double(double, double)> ic;
  BoundaryData bd;
  const BoundaryData* bdp = nullptr;
  ExactSolutionSpec spec;
  bool have_oracle = false;
  if (ic_name == "zero") {
    ic = [](double, double) { return 0.0; };
  } else if (ic_name == "sine") {
    const double L = gr.theta_max - gr.theta_min;
    ic = [L, &gr](double th, double) {
      return std::sin(2.0 * M_PI * (th - gr.theta_min) / L);
    };
  } else if (ic_name == "gaussian-pulse") {
    const double mid = 0.5 * (gr.theta_min + gr.theta_max);
    const double w = 0.1 * (gr.theta_max - gr.theta_min);
    ic = [mid, w](double th, double) {
      return std::exp(-(th - mid) * (th - mid) / (2 * w * w));
    };
  } else if (ic_name.rfind("exact:", 0) == 0) {
    spec = make_spec(variant_from_name(ic_name.substr(6)), c,
                     cfg.num("exact.k1", 0.0), cfg.num("exact.k2", 0.0),
                     cfg.num("exact.kbar1", 0.0), cfg.num("exact.kbar2", 0.0));
    ic = [&](double th, double et) { return eval(spec, c, 0.0, th, et); };
    bd.h = [&](double tau, double th, double et) {
      return eval(spec, c, tau, th, et);
    };
    bd.g = [&](double tau, double th, double et) {
      return eval_g(spec, c, tau, th, et);
    };
    if (gr.bc == BoundaryKind::DirichletFromExact) bdp = &bd;
    have_oracle = true;
  } else {
    throw Error("unknown sim.ic preset: " + ic_name);
  }

  auto f0 = init_field(gr, ic);
  const double m0 = mass(f0);
  auto snaps = integrate(f0, c, tau_end, every, bdp, cfl);

  CsvWriter cons(dir + "/conservation.csv", {"tau", "mass", "drift"});
  for (size_t k = 0; k < snaps.size(); ++k) {
    const double m = mass(snaps[k]);
    cons.row({snaps[k].tau, m,
              std::abs(m - m0) / std::max(1.0, std::abs(m0))});
    std::ostringstream name;
    name << dir << "/snapshot_" << k << ".csv";
    CsvWriter s(name.str(), {"tau", "theta", "eta", "h", "g"});
    const auto& f = snaps[k];
    for (int j = 0; j < gr.n_eta; ++j)
      for (int i = 0; i < gr.n_theta; ++i)
        s.row({f.tau, gr.theta(i), gr.eta(j), f.h[f.idx(i, j)],
               f.g[f.idx(i, j)]});
  }

  std::vector<std::pair<std::string, std::string>> extra = {
      {"scheme.time", "classical RK4"},
      {"scheme.theta_stencil", "2nd-order central flux form"},
      {"scheme.eta_stencil", "4th-order second difference"},
      {"scheme.cfl", format_double(cfl)},
      {"snapshots", std::to_string(snaps.size())}};
  if (have_oracle) {
    double err = 0.0;
    const auto& f = snaps.back();
    for (int j = 0; j < gr.n_eta; ++j)
      for (int i = 0; i < gr.n_theta; ++i)
        err = std::max(err, std::abs(f.h[f.idx(i, j)] -
                                     eval(spec, c, f.tau, gr.theta(i),
                                          gr.eta(j))));
    extra.push_back({"final_max_error_vs_oracle", format_double(err)});
    std::cout << "final max error vs oracle: " << format_double(err) << "\n";
  }
  write_manifest(dir, cfg, extra);
  std::cout << "wrote " << snaps.size() << " snapshots to " << dir << "\n";
  return 0;
}

int cmd_exact(const Config& cfg) {
  const GasParameters p = gas_from(cfg);
  const auto c = coefficients(validate(p));
  const auto spec = make_spec(
      variant_from_name(cfg.str("exact.variant", "wavefan_plus")), c,
      cfg.num("exact.k1", 0.0), cfg.num("exact.k2", 0.0),
      cfg.num("exact.kbar1", 0.0), cfg.num("exact.kbar2", 0.0));
  const auto rep = admissibility(spec, c);
  std::cout << variant_name(spec.variant)
            << (rep.admissible ? " admissible: " : " NOT admissible: ")
            << rep.detail << "\n";
  Grid2D gr = grid_from(cfg);
  const double tau = cfg.num("exact.tau", 0.0);
  const std::string dir = out_dir(cfg);
  CsvWriter csv(dir + "/exact.csv", {"tau", "theta", "eta", "h", "variant"});
  for (int j = 0; j < gr.n_eta; ++j)
    for (int i = 0; i < gr.n_theta; ++i)
      csv.raw_row({format_double(tau), format_double(gr.theta(i)),
                   format_double(gr.eta(j)),
                   format_double(eval(spec, c, tau, gr.theta(i), gr.eta(j))),
                   variant_name(spec.variant)});
  return 0;
}

WaveCoefficients build_coeffs(double a, double b, double g) {
  GasParameters p;
  p.gamma = g;
  p.a_tilde = a;
  p.b_tilde = b;
  return coefficients(validate(p));
}

int cmd_shock(const Config& cfg) {
  const GasParameters p = gas_from(cfg);
  const auto c = coefficients(validate(p));
  const std::string dir = out_dir(cfg);
  const double C1 = cfg.num("shock.c1", 1.0);
  const double T0 = cfg.num("shock.t0", 1.0);
  const double T_end = cfg.num("shock.t_end", 100.0);
  const int n = cfg.integer("shock.n", 200);
  const double A = c.plateau();
  const double s = c.fan_slope();
  const double q = c.default_q();

  const auto closed = trajectory_closed_form(ShockSign::Forward, C1, T0,
                                             T_end, n);
  {
    CsvWriter csv(dir + "/trajectory_closed_form.csv", {"eta", "theta"});
    for (const auto& pt : lab_frame_trajectory(closed, c, 0.0))
      csv.row({pt.eta, pt.theta});
  }
  auto behind = [&](double X, double T) { return A + s * X / T; };
  const auto curve =
      integrate_trajectory(behind, A, c, q, T0, C1 * std::pow(T0, 1 / std::sqrt(3.0)),
                           T_end);
  {
    CsvWriter csv(dir + "/trajectory_integrated.csv", {"eta", "theta"});
    for (const auto& pt : curve.samples) csv.row({pt.T, pt.X});
  }
  {
    CsvWriter csv(dir + "/decay.csv", {"eta", "strength"});
    for (const auto& pt : closed.samples)
      csv.row({pt.T, strength_decay(pt.T, c, C1)});
  }
  const JumpState j{behind(curve.samples.back().X, curve.samples.back().T), A,
                    0.0};
  std::cout << "shock with wavefan_plus behind-state is "
            << (classify(j) == ShockType::Compressive ? "compressive"
                                                      : "expansive")
            << "\n";

  // Figure-level trend tables when sweep ranges are present.
  if (cfg.has("sweep.b_values")) {
    CsvWriter csv(dir + "/trend_strength_vs_b.csv",
                  {"b_tilde", "strength_prefactor"});
    std::istringstream bs(cfg.str("sweep.b_values", ""));
    std::string tok;
    while (std::getline(bs, tok, ':'))
      csv.row({std::stod(tok),
               build_coeffs(p.a_tilde, std::stod(tok), p.gamma).fan_slope()});
  }
  if (cfg.has("sweep.a_values")) {
    CsvWriter csv(dir + "/trend_strength_vs_a.csv",
                  {"a_tilde", "strength_prefactor"});
    std::istringstream as(cfg.str("sweep.a_values", ""));
    std::string tok;
    while (std::getline(as, tok, ':'))
      csv.row({std::stod(tok),
               build_coeffs(std::stod(tok), p.b_tilde, p.gamma).fan_slope()});
  }
  std::cout << "wrote shock trajectories and decay samples to " << dir << "\n";
  return 0;
}

int cmd_sweep(const Config& cfg, int jobs) {
  const std::string dir = out_dir(cfg);
  const GasParameters base = gas_from(cfg);
  auto axis = [&](const std::string& key, double dflt_min, double dflt_max,
                  int dflt_n) {
    std::vector<double> v;
    const double lo = cfg.num(key + ".min", dflt_min);
    const double hi = cfg.num(key + ".max", dflt_max);
    const int n = cfg.integer(key + ".steps", dflt_n);
    for (int i = 0; i < n; ++i)
      v.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    return v;
  };
  const auto as = cfg.has("sweep.a_tilde.steps")
                      ? axis("sweep.a_tilde", 0.0, 0.8, 5)
                      : std::vector<double>{base.a_tilde};
  const auto bs = cfg.has("sweep.b_tilde.steps")
                      ? axis("sweep.b_tilde", 0.0, 0.3, 7)
                      : std::vector<double>{base.b_tilde};
  const auto gs = cfg.has("sweep.gamma.steps")
                      ? axis("sweep.gamma", 1.1, 5.0 / 3.0, 3)
                      : std::vector<double>{base.gamma};

  struct Tuple {
    double a, b, g;
  };
  std::vector<Tuple> tuples;
  for (double a : as)
    for (double b : bs)
      for (double g : gs) tuples.push_back({a, b, g});

  std::atomic<size_t> next{0};
  std::atomic<int> failures{0};
  auto worker = [&] {
    for (;;) {
      const size_t k = next.fetch_add(1);
      if (k >= tuples.size()) return;
      const Tuple t = tuples[k];
      std::ostringstream name;
      name << dir << "/sweep_"
           << std::hash<std::string>{}(format_double(t.a) + "," +
                                       format_double(t.b) + "," +
                                       format_double(t.g))
           << ".csv";
      try {
        GasParameters p = base;
        p.a_tilde = t.a;
        p.b_tilde = t.b;
        p.gamma = t.g;
        const auto c = coefficients(validate(p));
        CsvWriter csv(name.str(),
                      {"gamma", "a_tilde", "b_tilde", "c0", "gamma_hat0",
                       "lambda0", "beta_hat", "q", "strength_prefactor"});
        csv.row({t.g, t.a, t.b, c.c0, c.gamma_hat0, c.lambda0, c.beta_hat,
                 c.q, c.fan_slope()});
      } catch (const Error&) {
        ++failures;  // outside the validated domain; skip the tuple
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < std::max(1, jobs); ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  std::cout << "swept " << tuples.size() << " tuples ("
            << failures.load() << " outside the validated domain) into "
            << dir << "\n";
  return 0;
}

int cmd_verify(const Config& cfg) {
  const unsigned seed =
      static_cast<unsigned>(cfg.num("verify.seed", 12345.0));
  const auto results = run_verification(seed);
  const std::string dir = out_dir(cfg);
  CsvWriter csv(dir + "/verify_report.csv",
                {"name", "criterion", "tolerance", "observed", "pass"});
  bool all = true;
  for (const auto& r : results) {
    csv.raw_row({r.name, std::to_string(r.criterion),
                 format_double(r.tolerance), format_double(r.observed),
                 r.pass ? "1" : "0"});
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name
              << " (tolerance " << format_double(r.tolerance) << ", observed "
              << format_double(r.observed) << ")";
    if (!r.detail.empty()) std::cout << " -- " << r.detail;
    std::cout << "\n";
    all = all && r.pass;
  }
  std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dissipative-wave toolkit for van der Waals gases"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string config_path;
  std::string out;
  std::vector<std::string> sets;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  app.add_option("--config", config_path, "flat key=value config file");
  app.add_option("--out", out, "output directory (overrides VDW_OUT)");
  app.add_option("--set", sets, "override a config key (key=value)");
  app.add_option("--jobs", jobs, "worker count for sweeps");

  auto* c_coeffs = app.add_subcommand("coeffs", "emit model coefficients");
  auto* c_sim = app.add_subcommand("simulate", "integrate the evolution equation");
  auto* c_exact = app.add_subcommand("exact", "sample a closed-form solution");
  auto* c_shock = app.add_subcommand("shock", "shock trajectories and decay");
  auto* c_sweep = app.add_subcommand("sweep", "parameter sweep");
  auto* c_verify = app.add_subcommand("verify", "run the verification suite");

  CLI11_PARSE(app, argc, argv);

  try {
    Config cfg;
    if (!config_path.empty()) load_config_file(cfg, config_path);
    apply_set(cfg, sets);
    if (!out.empty()) cfg.kv["output_dir"] = out;

    if (c_coeffs->parsed()) return cmd_coeffs(cfg);
    if (c_sim->parsed()) return cmd_simulate(cfg);
    if (c_exact->parsed()) return cmd_exact(cfg);
    if (c_shock->parsed()) return cmd_shock(cfg);
    if (c_sweep->parsed()) return cmd_sweep(cfg, jobs);
    if (c_verify->parsed()) return cmd_verify(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
