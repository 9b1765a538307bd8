#pragma once

#include <vector>

#include "annulus/abresch.hpp"
#include "annulus/potential.hpp"

namespace annulus {

// Sample set in the spectral parameter: unit-circle points, lambda = 1, branch
// points of a, optional extras. Never contains 0; always contains 1.
struct LambdaGrid {
  std::vector<cplx> points;
  std::vector<bool> unit_mask;

  static LambdaGrid standard(const Poly& a, int n_circle = 64,
                             const std::vector<cplx>& extra = {});
  static LambdaGrid single(cplx lam);
  int index_of(cplx lam, double tol = 1e-12) const;  // -1 if absent
  size_t size() const { return points.size(); }
};

// alpha(zeta) = (a0, b_{-1}/lam; g0, -a0) dz - (conj a0, conj g0; conj(b_{-1}) lam, -conj a0) dzb
struct AlphaForm {
  Mat2 z_const, z_lm1;    // dz part: z_const + z_lm1 / lambda
  Mat2 zb_const, zb_lp1;  // dzb part: zb_const + zb_lp1 * lambda

  Mat2 eval(cplx lam, cplx dz) const {
    return (z_const + z_lm1 * (1.0 / lam)) * dz + (zb_const + zb_lp1 * lam) * std::conj(dz);
  }
};

// strict = reject beta_{-1} off the i R^+ ray (Sym-normalized potentials); the
// rotated frames of the Sym-point transformation need strict = false.
AlphaForm alpha_from_zeta(const MatrixLaurent& zeta_at_z, bool strict = true);

// d zeta = [zeta, alpha(zeta)] evaluated for a path step direction dz (dt = 1).
MatrixLaurent lax_rhs(const MatrixLaurent& zeta, cplx dz);

struct KillingField {
  std::vector<cplx> z;              // path points
  std::vector<MatrixLaurent> zeta;  // zeta at each path point
  Potential seed;
  double det_drift = 0;    // max |(-lam det zeta) - a| over path and lambda grid
  double shape_drift = 0;  // max deviation of the lambda^{-1} coefficient shape

  // omega(z) from 4 beta_{-1} = i e^omega
  std::vector<double> omega() const;
};

struct IntegratorOptions {
  double max_step = 0.01;
  int min_substeps = 1;
  bool strict_shape = true;
};

KillingField integrate_lax(const Potential& xi, const std::vector<cplx>& z_path,
                           const IntegratorOptions& opt = {});

struct FrameField {
  LambdaGrid grid;
  std::vector<cplx> z;       // path points
  std::vector<Mat2> F;       // F[iz * grid.size() + il]
  Potential seed;
  double unitary_drift = 0;  // on unit-circle points
  double det_drift = 0;
  int renormalizations = 0;  // sqrt-det renormalizations applied

  const Mat2& at(size_t iz, size_t il) const { return F[iz * grid.size() + il]; }
  Mat2& at(size_t iz, size_t il) { return F[iz * grid.size() + il]; }
};

// F solves F^{-1} dF = alpha(zeta(z)), F(0) = Id, coupled with the Lax flow.
FrameField integrate_frame(const Potential& xi, const LambdaGrid& grid,
                           const std::vector<cplx>& z_path, const IntegratorOptions& opt = {});

struct MonodromyData {
  LambdaGrid grid;
  std::vector<Mat2> M;
  cplx tau{0};
  double unitary_drift = 0;
  double commutator_residual = 0;  // max |[M, xi]| over grid
};

// M_lambda = F_lambda(0)^{-1} F_lambda(tau); path must end at tau.
MonodromyData monodromy(const FrameField& F, cplx tau);

// Straight path 0 -> z_end with n+1 points.
std::vector<cplx> straight_path(cplx z_end, int n);

// Killing-field omega on the grid spanned by directions (ex, i*ex):
// z(ix, iy) = ex*(ix*hx) + i*ex*(iy*hy). Integrates row 0 then columns.
OmegaField omega_from_potential(const Potential& xi, cplx ex, double Lx, double Ly, int nx,
                                int ny, bool y_periodic = false);

}  // namespace annulus
