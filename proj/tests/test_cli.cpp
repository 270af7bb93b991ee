#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

std::string bin() {
  const char* b = std::getenv("VDW_BIN");
  REQUIRE_MESSAGE(b != nullptr, "VDW_BIN must point at the cli binary");
  return b;
}

int run(const std::string& args, const std::string& log) {
  const std::string cmd =
      "\"" + bin() + "\" " + args + " >" + log + " 2>&1";
  const int st = std::system(cmd.c_str());
  REQUIRE(st != -1);
  return WIFEXITED(st) ? WEXITSTATUS(st) : -2;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string l;
  while (std::getline(is, l)) out.push_back(l);
  return out;
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("vdw_cli_" + tag);
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string sub(const std::string& s) const { return (path / s).string(); }
};

}  // namespace

TEST_CASE("coeffs output is deterministic and byte-identical") {
  TempDir td("coeffs");
  const std::string common =
      "coeffs --set gas.a_tilde=0.4 --set gas.b_tilde=0.1";
  CHECK(run(common + " --out " + td.sub("r1"), td.sub("log1")) == 0);
  CHECK(run(common + " --out " + td.sub("r2"), td.sub("log2")) == 0);
  const std::string c1 = slurp(td.sub("r1") + "/coeffs.csv");
  const std::string c2 = slurp(td.sub("r2") + "/coeffs.csv");
  CHECK_FALSE(c1.empty());
  CHECK(c1 == c2);
  const auto ls = lines(c1);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == "gamma,a_tilde,b_tilde,c0,gamma_hat0,lambda0,beta_hat,q");
  // 17-significant-digit sound speed for this parameter point.
  CHECK(ls[1].find("1.173787790777267") != std::string::npos);
}

TEST_CASE("invalid parameters exit nonzero and name the violated bound") {
  TempDir td("domain");
  const int rc = run("coeffs --set gas.b_tilde=0.35 --out " + td.sub("r"),
                     td.sub("log"));
  CHECK(rc == 2);
  CHECK(slurp(td.sub("log")).find("b_tilde") != std::string::npos);

  CHECK(run("coeffs --set gas.b_tilde=oops --out " + td.sub("r2"),
            td.sub("log2")) == 2);
  CHECK(run("nosuchcommand", td.sub("log3")) != 0);
}

TEST_CASE("config file, --set precedence and VDW_OUT fallback") {
  TempDir td("config");
  {
    std::ofstream f(td.sub("run.cfg"));
    f << "# comment line\n";
    f << "gas.gamma=1.5\n";
    f << "gas.a_tilde=0.2\n";
  }
  CHECK(run("coeffs --config " + td.sub("run.cfg") +
                " --set gas.gamma=1.4 --out " + td.sub("r"),
            td.sub("log")) == 0);
  const auto ls = lines(slurp(td.sub("r") + "/coeffs.csv"));
  REQUIRE(ls.size() == 2);
  CHECK(ls[1].rfind("1.3999999999999999,0.2", 0) == 0);

  {
    std::ofstream f(td.sub("bad.cfg"));
    f << "gas.gamma 1.4\n";
  }
  CHECK(run("coeffs --config " + td.sub("bad.cfg"), td.sub("log2")) == 2);
  CHECK(slurp(td.sub("log2")).find(":1:") != std::string::npos);

  // Output directory from the environment when --out is absent.
  const std::string cmd = "VDW_OUT=" + td.sub("envout") + " \"" + bin() +
                          "\" coeffs >" + td.sub("log3") + " 2>&1";
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(fs::exists(td.sub("envout") + "/coeffs.csv"));
}

TEST_CASE("simulate: zero data stays zero and sine conserves mass") {
  TempDir td("sim");
  CHECK(run("simulate --set sim.ic=zero --set grid.n_theta=16 "
            "--set grid.n_eta=8 --set grid.theta_min=0 "
            "--set grid.theta_max=6.283185307179586 --set grid.eta_min=0 "
            "--set grid.eta_max=1 --set gas.mu_hat=0.45 "
            "--set sim.tau_end=0.05 --out " +
                td.sub("z"),
            td.sub("log")) == 0);
  for (const auto& snap : {"snapshot_0.csv", "snapshot_1.csv"}) {
    const auto ls = lines(slurp(td.sub("z") + "/" + snap));
    REQUIRE(ls.size() == 1 + 16 * 8);
    CHECK(ls[0] == "tau,theta,eta,h,g");
    for (size_t k = 1; k < ls.size(); ++k) {
      // h and g columns (4th and 5th) must be exactly zero.
      std::istringstream is(ls[k]);
      std::string cell;
      for (int c = 0; std::getline(is, cell, ','); ++c)
        if (c >= 3) CHECK(cell == "0");
    }
  }

  CHECK(run("simulate --set sim.ic=sine --set grid.n_theta=64 "
            "--set grid.n_eta=16 --set grid.theta_min=0 "
            "--set grid.theta_max=6.283185307179586 --set grid.eta_min=0 "
            "--set grid.eta_max=1 --set gas.mu_hat=0.45 "
            "--set sim.tau_end=0.02 --out " +
                td.sub("s"),
            td.sub("log2")) == 0);
  const auto cons = lines(slurp(td.sub("s") + "/conservation.csv"));
  REQUIRE(cons.size() >= 2);
  CHECK(cons[0] == "tau,mass,drift");
  const auto& last = cons.back();
  const auto p2 = last.rfind(',');
  CHECK(std::stod(last.substr(p2 + 1)) < 1e-10);
  CHECK(fs::exists(td.sub("s") + "/manifest.txt"));
  CHECK(slurp(td.sub("s") + "/manifest.txt").find("scheme.time=classical RK4") !=
        std::string::npos);
}

TEST_CASE("simulate against an exact oracle reports a small final error") {
  TempDir td("oracle");
  CHECK(run("simulate --set sim.ic=exact:wavefan_plus "
            "--set grid.bc=dirichlet-from-exact --set grid.n_theta=65 "
            "--set grid.n_eta=17 --set grid.theta_min=0 "
            "--set grid.theta_max=1 --set grid.eta_min=3 "
            "--set grid.eta_max=11 --set gas.mu_hat=0.45 "
            "--set sim.tau_end=0.1 --out " +
                td.sub("r"),
            td.sub("log")) == 0);
  const std::string man = slurp(td.sub("r") + "/manifest.txt");
  const auto pos = man.find("final_max_error_vs_oracle=");
  REQUIRE(pos != std::string::npos);
  const double err = std::stod(man.substr(pos + 26));
  CHECK(err < 1e-4);
}

TEST_CASE("exact and shock emit their tables") {
  TempDir td("tables");
  CHECK(run("exact --set exact.variant=wavefan_plus --set grid.n_theta=8 "
            "--set grid.n_eta=8 --set grid.eta_min=3 --set grid.eta_max=5 "
            "--out " +
                td.sub("e"),
            td.sub("log")) == 0);
  const auto el = lines(slurp(td.sub("e") + "/exact.csv"));
  REQUIRE(el.size() == 1 + 8 * 8);
  CHECK(el[0] == "tau,theta,eta,h,variant");
  CHECK(slurp(td.sub("log")).find("admissible") != std::string::npos);

  CHECK(run("shock --set shock.t_end=10 --set shock.n=20 "
            "--set sweep.b_values=0.05:0.1:0.2 --out " +
                td.sub("s"),
            td.sub("log2")) == 0);
  CHECK(fs::exists(td.sub("s") + "/trajectory_closed_form.csv"));
  CHECK(fs::exists(td.sub("s") + "/trajectory_integrated.csv"));
  CHECK(fs::exists(td.sub("s") + "/decay.csv"));
  CHECK(slurp(td.sub("log2")).find("compressive") != std::string::npos);
  const auto tr = lines(slurp(td.sub("s") + "/trend_strength_vs_b.csv"));
  REQUIRE(tr.size() == 4);
  // Strength prefactor grows with the covolume at fixed a_tilde = 0.
  CHECK(std::stod(tr[1].substr(tr[1].find(',') + 1)) <
        std::stod(tr[3].substr(tr[3].find(',') + 1)));
}

TEST_CASE("sweep covers the grid and skips out-of-domain tuples") {
  TempDir td("sweep");
  CHECK(run("sweep --jobs 2 --set sweep.a_tilde.min=0 "
            "--set sweep.a_tilde.max=0.9 --set sweep.a_tilde.steps=3 "
            "--set sweep.b_tilde.min=0 --set sweep.b_tilde.max=0.3 "
            "--set sweep.b_tilde.steps=3 --out " +
                td.sub("r"),
            td.sub("log")) == 0);
  int files = 0;
  for (const auto& e : fs::directory_iterator(td.sub("r")))
    if (e.path().filename().string().rfind("sweep_", 0) == 0) ++files;
  CHECK(files == 9);
  CHECK(slurp(td.sub("log")).find("swept 9 tuples") != std::string::npos);
}
