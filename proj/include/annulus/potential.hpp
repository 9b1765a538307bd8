#pragma once

#include <string>
#include <vector>

#include "annulus/mat2.hpp"
#include "annulus/poly.hpp"

namespace annulus {

// Matrix Laurent polynomial with powers lambda^{-1} .. lambda^{g}.
// coeff(d) indexes by power d, d = -1..g.
struct MatrixLaurent {
  std::vector<Mat2> cs;  // cs[d+1] = coefficient of lambda^d
  int g = 0;

  MatrixLaurent() = default;
  explicit MatrixLaurent(int genus) : cs(genus + 2), g(genus) {}

  Mat2& coeff(int d) { return cs[d + 1]; }
  const Mat2& coeff(int d) const { return cs[d + 1]; }

  Mat2 operator()(cplx lam) const {
    Mat2 m = Mat2::zero();
    cplx p = 1.0 / lam;
    for (int d = -1; d <= g; ++d) {
      m += cs[d + 1] * p;
      p *= lam;
    }
    return m;
  }

  // -lambda * det(xi), a polynomial of degree <= 2g
  Poly neg_lambda_det() const;

  MatrixLaurent operator+(const MatrixLaurent& o) const;
  MatrixLaurent operator-(const MatrixLaurent& o) const;
  MatrixLaurent operator*(cplx s) const;
  double norm_max() const;
};

// Element of P_g: lambda^{-1} coefficient of shape (0, i r; 0, 0) with r > 0,
// trace(xi_{-1} xi_0) != 0, and xi_d = -conj(xi_{g-1-d})^T.
struct Potential {
  MatrixLaurent xi;
  int g = 0;

  cplx beta_m1() const { return xi.coeff(-1).b; }
  cplx gamma0() const { return xi.coeff(0).c; }
  cplx a0() const { return beta_m1() * gamma0(); }  // = a(0)
};

struct ValidationIssue {
  std::string what;
  double residual;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool valid() const { return issues.empty(); }
  std::string summary() const;
};

ValidationReport validate_potential(const Potential& xi, double tol = 1e-10);

// a(lambda) = -lambda det xi; rejects a(0) == 0.
Poly a_from_potential(const Potential& xi);

// Off-diagonal potential with prescribed in-disc roots alpha_1..alpha_g:
//   beta  = i/(4 lam sqrt(prod |a_d|)) prod(1 - conj(a_d) lam)
//   gamma = i/(4 sqrt(prod |a_d|)) prod(lam - a_d)
// Rejects roots on the unit circle or at 0.
Potential offdiagonal_potential(const std::vector<cplx>& in_disc_roots);

// sup over a 64-point unit-circle grid of the largest singular value
double pg_norm(const MatrixLaurent& xi);

// max_d |xi_d + conj(xi_{g-1-d})^T|
double conjugate_pairing_residual(const MatrixLaurent& xi);

}  // namespace annulus
