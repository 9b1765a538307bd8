#pragma once

#include <optional>
#include <string>
#include <vector>

#include "annulus/mat2.hpp"

namespace annulus {

struct AbreschParams {
  double c = 0;  // <= 0
  double d = 0;  // <= 0
};

enum class ProfileAxis { X, Y };

// One-variable quartic-oscillator profile:
//   -(f_x)^2 = f^4 + (1+c-d) f^2 + c,  -f_xx = 2 f^3 + (1+c-d) f
// integrated from the turning point f(0) = sqrt(delta1), f_x(0) = 0.
struct EllipticProfile {
  std::vector<double> f, fx;  // samples on [0, period)
  double period = 0;
  double delta1 = 0, delta2 = 0;  // quartic roots, delta2 <= 0 <= delta1
  bool degenerate = false;        // identically zero profile (c = 0)

  double energy_residual() const;
};

double profile_period_quadrature(double c, double d);  // independent oracle
EllipticProfile solve_profile(const AbreschParams& p, ProfileAxis axis, int n_samples);

// Real scalar grid on [0, tau) x [0, L]; periodic in x, optionally in y.
struct OmegaField {
  int nx = 0, ny = 0;
  double hx = 0, hy = 0;
  bool y_periodic = false;
  std::vector<double> v;  // v[ix + nx*iy]

  double& at(int ix, int iy) { return v[ix + (size_t)nx * iy]; }
  double at(int ix, int iy) const { return v[ix + (size_t)nx * iy]; }
  std::string dump_text() const;  // rows = y, columns = x
};

// Complex grid with the same geometry.
struct CGrid {
  int nx = 0, ny = 0;
  double hx = 0, hy = 0;
  bool y_periodic = false;
  std::vector<cplx> v;

  static CGrid like(const OmegaField& w) {
    return {w.nx, w.ny, w.hx, w.hy, w.y_periodic, std::vector<cplx>(w.v.size())};
  }
  cplx& at(int ix, int iy) { return v[ix + (size_t)nx * iy]; }
  cplx at(int ix, int iy) const { return v[ix + (size_t)nx * iy]; }
  double max_abs() const;
};

// second-order stencils; one-sided second order at a clamped y-boundary
CGrid grid_dx(const CGrid& u);
CGrid grid_dy(const CGrid& u);
CGrid grid_dz(const CGrid& u);   // (dx - i dy)/2
CGrid grid_dzb(const CGrid& u);  // (dx + i dy)/2
CGrid grid_laplacian(const CGrid& u);
CGrid to_cgrid(const OmegaField& w);

// omega(x,y) = asinh((f_x(x) + g_y(y)) / (1 + f(x)^2 + g(y)^2)) on the tensor grid
OmegaField omega_from_profiles(const EllipticProfile& f, const EllipticProfile& g,
                               int nx, int ny);
OmegaField abresch_omega(const AbreschParams& p, int nx, int ny);  // convenience

// max over interior points of |lap w + sinh w cosh w|
double sinh_gordon_residual(const OmegaField& w);
// max interior |lap u + cosh(2 w) u|
double lsg_residual(const CGrid& u, const OmegaField& w);

struct HierarchyState {
  std::vector<CGrid> u, tau, sigma;  // index n+1 holds flow n, n = -1..n_max
  cplx gamma{1.0};
  std::vector<double> closure_mismatch;  // per-n tau line-integration closure defect
  std::vector<cplx> mean_constants;      // c_n applied for n >= 2

  const CGrid& u_n(int n) const { return u[n + 1]; }
  const CGrid& tau_n(int n) const { return tau[n + 1]; }
  const CGrid& sigma_n(int n) const { return sigma[n + 1]; }
};

// Pinkall-Sterling hierarchy with canonical weight-homogeneous antiderivatives for
// tau_0, tau_1; later tau_n by line integration with zero-mean constants.
// Flow normalization: u_{n+1} = (i/2) tau_{n,z} + i omega_z tau_n.
HierarchyState pinkall_sterling(const OmegaField& w, cplx gamma, int n_max);

// (1/cosh^2 w)(lap u + u + (2 |grad w|^2 / cosh^2 w) u), Sym normalization 4|Q| = 1
std::vector<double> jacobi_apply(const std::vector<double>& u, const OmegaField& w);

// w_xy - tanh(w) w_x w_y
std::vector<double> shiffman_field(const OmegaField& w);

struct LameBasis {
  std::vector<std::vector<double>> e;  // e0, e1, e2 on one x-period
  double lambda0, lambda1, lambda2;
  double period;
};

// e0 = sqrt(f^2 - delta2), e1 = f, e2 = sqrt(delta1 - f^2) with
// d^2_x e + 2 f^2 e = -lambda e; rejects c = 0.
LameBasis lame_basis(const AbreschParams& p, int n_samples);

}  // namespace annulus
