#include "annulus/potential.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace annulus {

Poly MatrixLaurent::neg_lambda_det() const {
  // det(xi) has powers -2..2g; entries: a,d have powers -1..g only via coeffs.
  // Build entry polynomials shifted by lambda^{+1}: A(l) = sum_d a_d l^{d+1}.
  int n = g + 2;
  std::vector<cplx> A(n), B(n), C(n), D(n);
  for (int k = 0; k < n; ++k) {
    A[k] = cs[k].a;
    B[k] = cs[k].b;
    C[k] = cs[k].c;
    D[k] = cs[k].d;
  }
  Poly pa{A}, pb{B}, pc{C}, pd{D};
  // lambda^2 det(xi) = pa*pd - pb*pc; so -lambda det(xi) = -(pa*pd - pb*pc) / lambda
  Poly num = pa * pd - pb * pc;
  // num has powers 0..2g+2 representing lambda^2 det; a(l) = -num / lambda:
  // coefficient of lambda^k in a is -num[k+1].
  std::vector<cplx> out(std::max(1, (int)num.coeffs.size() - 1));
  for (size_t k = 0; k + 1 < num.coeffs.size(); ++k) out[k] = -num.coeffs[k + 1];
  if (!num.coeffs.empty() && std::abs(num.coeffs[0]) > 1e-12 * num.max_coeff())
    throw std::runtime_error("neg_lambda_det: lambda^{-2} determinant term does not vanish");
  Poly a{out};
  a.trim(1e-14 * std::max(1.0, a.max_coeff()));
  return a;
}

MatrixLaurent MatrixLaurent::operator+(const MatrixLaurent& o) const {
  MatrixLaurent r(g);
  for (size_t k = 0; k < cs.size(); ++k) r.cs[k] = cs[k] + o.cs[k];
  return r;
}

MatrixLaurent MatrixLaurent::operator-(const MatrixLaurent& o) const {
  MatrixLaurent r(g);
  for (size_t k = 0; k < cs.size(); ++k) r.cs[k] = cs[k] - o.cs[k];
  return r;
}

MatrixLaurent MatrixLaurent::operator*(cplx s) const {
  MatrixLaurent r = *this;
  for (auto& m : r.cs) m *= s;
  return r;
}

double MatrixLaurent::norm_max() const {
  double m = 0;
  for (const auto& c : cs) m = std::max(m, c.norm_max());
  return m;
}

std::string ValidationReport::summary() const {
  if (issues.empty()) return "valid";
  std::ostringstream os;
  for (const auto& i : issues) os << i.what << " (residual " << i.residual << "); ";
  return os.str();
}

double conjugate_pairing_residual(const MatrixLaurent& xi) {
  double m = 0;
  for (int d = -1; d <= xi.g; ++d) {
    Mat2 lhs = xi.coeff(d);
    Mat2 rhs = xi.coeff(xi.g - 1 - d).adjointT() * cplx{-1.0};
    m = std::max(m, (lhs - rhs).norm_max());
  }
  return m;
}

ValidationReport validate_potential(const Potential& p, double tol) {
  ValidationReport rep;
  const MatrixLaurent& xi = p.xi;
  double scale = std::max(1.0, xi.norm_max());

  Mat2 m1 = xi.coeff(-1);
  double shape = std::max(std::max(std::abs(m1.a), std::abs(m1.c)), std::abs(m1.d));
  if (shape > tol * scale)
    rep.issues.push_back({"lambda^{-1} coefficient not strictly upper nilpotent", shape});
  double re_b = std::abs(m1.b.real());
  if (re_b > tol * scale)
    rep.issues.push_back({"lambda^{-1} entry not purely imaginary", re_b});
  if (m1.b.imag() <= 0)
    rep.issues.push_back({"lambda^{-1} entry requires positive imaginary part", -m1.b.imag()});

  double tr = std::abs((xi.coeff(-1) * xi.coeff(0)).trace());
  if (tr < tol * scale * scale)
    rep.issues.push_back({"trace(xi_{-1} xi_0) vanishes", tr});

  double pairing = conjugate_pairing_residual(xi);
  if (pairing > tol * scale)
    rep.issues.push_back({"conjugate-transpose pairing xi_d = -conj(xi_{g-1-d})^T broken", pairing});

  double tl = 0;
  for (const auto& c : xi.cs) tl = std::max(tl, std::abs(c.trace()));
  if (tl > tol * scale) rep.issues.push_back({"coefficient not traceless", tl});

  return rep;
}

Poly a_from_potential(const Potential& p) {
  Poly a = p.xi.neg_lambda_det();
  if (std::abs(a.at(0)) < 1e-12 * std::max(1.0, a.max_coeff()))
    throw std::runtime_error("a_from_potential: a(0) = 0, degenerate potential");
  return a;
}

Potential offdiagonal_potential(const std::vector<cplx>& rts) {
  for (cplx r : rts) {
    if (std::abs(std::abs(r) - 1.0) < 1e-12)
      throw std::runtime_error("offdiagonal_potential: root on the unit circle");
    if (std::abs(r) < 1e-12) throw std::runtime_error("offdiagonal_potential: root at 0");
  }
  int g = static_cast<int>(rts.size());
  double P = 1.0;
  for (cplx r : rts) P *= std::abs(r);
  cplx pref = I / (4.0 * std::sqrt(P));

  // beta poly (before lambda^{-1} shift): prod (1 - conj(a) lam), degree g
  std::vector<cplx> brts, grts;
  for (cplx r : rts) {
    brts.push_back(1.0 / std::conj(r));  // roots of (1 - conj(a) lam)
    grts.push_back(r);
  }
  Poly pb = Poly::constant(pref);
  for (cplx r : rts) pb = pb * Poly({cplx{1.0}, -std::conj(r)});
  Poly pg = Poly::constant(pref);
  for (cplx r : rts) pg = pg * Poly({-r, cplx{1.0}});

  Potential out;
  out.g = g;
  out.xi = MatrixLaurent(g);
  for (int d = -1; d <= g; ++d) {
    out.xi.coeff(d).b = pb.at(d + 1);  // beta has powers -1..g-1
    out.xi.coeff(d).c = pg.at(d);      // gamma has powers 0..g
  }
  return out;
}

double pg_norm(const MatrixLaurent& xi) {
  double m = 0;
  for (int j = 0; j < 64; ++j) {
    double th = 2.0 * std::numbers::pi * j / 64.0;
    Mat2 v = xi(std::polar(1.0, th));
    // largest singular value of 2x2: sqrt of largest eigenvalue of v^* v
    Mat2 h = v.adjointT() * v;
    double tr = h.trace().real();
    double dt = h.det().real();
    double disc = std::max(0.0, tr * tr / 4.0 - dt);
    m = std::max(m, std::sqrt(std::max(0.0, tr / 2.0 + std::sqrt(disc))));
  }
  return m;
}

}  // namespace annulus
