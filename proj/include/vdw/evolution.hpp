#ifndef VDW_EVOLUTION_HPP
#define VDW_EVOLUTION_HPP

#include <functional>
#include <vector>

#include "vdw/errors.hpp"
#include "vdw/gas_model.hpp"

namespace vdw {

enum class BoundaryKind { Periodic, DirichletFromExact };

// Uniform rectangular grid. Periodic grids exclude the right endpoints
// (spacing = extent / n); Dirichlet grids include them (extent / (n - 1)).
struct Grid2D {
  double theta_min = 0.0;
  double theta_max = 1.0;
  int n_theta = 8;
  double eta_min = 0.0;
  double eta_max = 1.0;
  int n_eta = 8;
  BoundaryKind bc = BoundaryKind::Periodic;

  double dtheta() const {
    const double L = theta_max - theta_min;
    return bc == BoundaryKind::Periodic ? L / n_theta : L / (n_theta - 1);
  }
  double deta() const {
    const double L = eta_max - eta_min;
    return bc == BoundaryKind::Periodic ? L / n_eta : L / (n_eta - 1);
  }
  double theta(int i) const { return theta_min + i * dtheta(); }
  double eta(int j) const { return eta_min + j * deta(); }
  void check() const;  // throws DomainError / ShapeError on bad invariants
};

// Discrete samples of the amplitude h and the auxiliary field g at time tau.
// Storage is row-per-eta: index(i, j) = j * n_theta + i.
struct WaveField {
  Grid2D grid;
  double tau = 0.0;
  std::vector<double> h;
  std::vector<double> g;

  int idx(int i, int j) const { return j * grid.n_theta + i; }
  double& at(std::vector<double>& v, int i, int j) const { return v[idx(i, j)]; }
};

// Analytic boundary/gauge data for dirichlet-from-exact runs.
struct BoundaryData {
  std::function<double(double tau, double theta, double eta)> h;
  std::function<double(double tau, double theta, double eta)> g;
};

// Samples ic on the grid; g is integrated from g_theta = h_eta along theta by
// the trapezoid rule with gauge g(theta_min, eta) = 0; tau = 0.
WaveField init_field(const Grid2D& grid,
                     const std::function<double(double, double)>& ic);

// h_tau = gamma_hat0 h h_theta + lambda0 h^2 h_theta + beta_hat h_thth
//         - (c0/2) g_eta, flux form in theta; g is slaved to h by
// theta-quadrature. For dirichlet-from-exact grids, bdata supplies the
// g(theta_min) gauge anchor and boundary rows carry zero tendency.
std::vector<double> rhs(const WaveField& field, const WaveCoefficients& coeffs,
                        const BoundaryData* bdata = nullptr);

// Largest stable time step: cfl * min(advective, diffusive, transverse).
double stable_dtau(const WaveField& field, const WaveCoefficients& coeffs,
                   double cfl = 0.4);

// One classical 4-stage Runge-Kutta step. Boundary values are re-imposed
// from bdata at each stage time on dirichlet-from-exact grids. Recomputes g
// and advances tau. Throws StabilityError if a sample goes non-finite.
WaveField step(const WaveField& field, const WaveCoefficients& coeffs,
               double dtau, const BoundaryData* bdata = nullptr);

// Repeated stable steps to tau_end with snapshots every snapshot_every time
// units (0 = only initial and final). The last step is shortened so the final
// snapshot lands exactly on tau_end.
std::vector<WaveField> integrate(const WaveField& field,
                                 const WaveCoefficients& coeffs,
                                 double tau_end, double snapshot_every = 0.0,
                                 const BoundaryData* bdata = nullptr,
                                 double cfl = 0.4);

// Central-difference residual of the combined (theta-differentiated)
// equation on interior points of a sequence of tau-levels (>= 3, uniformly
// spaced in tau). Returns one field per interior level.
std::vector<std::vector<double>> residual_zk(
    const std::vector<WaveField>& levels, const WaveCoefficients& coeffs);

// Trapezoid-rule integral of h over the grid.
double mass(const WaveField& field);

struct FramePoint {
  double X;
  double T;
};

// X = theta - q tau, T = eta.
FramePoint to_traveling_frame(double theta, double tau, double eta, double q);

}  // namespace vdw

#endif
