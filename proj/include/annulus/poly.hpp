#pragma once

#include <string>
#include <vector>

#include "annulus/mat2.hpp"

namespace annulus {

// Complex polynomial, coefficient of lambda^k at coeffs[k].
struct Poly {
  std::vector<cplx> coeffs;

  Poly() = default;
  explicit Poly(std::vector<cplx> c) : coeffs(std::move(c)) {}
  static Poly constant(cplx v) { return Poly({v}); }
  static Poly from_roots(const std::vector<cplx>& roots, cplx lead = 1.0);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const;
  cplx at(int k) const { return (k >= 0 && k < (int)coeffs.size()) ? coeffs[k] : cplx{0}; }

  cplx operator()(cplx lam) const;  // Horner
  Poly derivative() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(cplx s) const;
  Poly shifted(int k) const;  // multiply by lambda^k, k >= 0

  // divide by (monic-normalized) q, returns quotient; remainder max-norm in *rem
  Poly divide(const Poly& q, double* rem = nullptr) const;

  double max_coeff() const;
  void trim(double tol = 0.0);
};

// Roots via companion-matrix eigenvalues plus one Newton polish.
// On return each root r satisfies |p(r)| <= tol * max|coeff| or throws.
std::vector<cplx> roots(const Poly& p, double tol = 1e-9);

// Two roots collide when |r1 - r2| < collision_tol(r1).
inline double collision_tol(cplx r) { return 1e-7 * (1.0 + std::abs(r)); }

enum class Reality {
  KindA,  // lam^{2g} conj(p(1/conj(lam))) =  p(lam)
  KindB,  // lam^{g+1} conj(p(1/conj(lam))) = -p(lam)
  KindC,  // lam^{g+1} conj(p(1/conj(lam))) =  p(lam)
};

// Coefficient image of the symmetry (length matches the class's natural degree).
Poly reality_image(const Poly& p, Reality kind, int g);
// max |image_k - p_k|; zero iff the symmetry holds exactly. Throws on degree overflow.
double reality_residual(const Poly& p, Reality kind, int g);
// (p + image)/2: projects onto the symmetric class.
Poly symmetrize(const Poly& p, Reality kind, int g);

std::string to_string(const Poly& p);

}  // namespace annulus
