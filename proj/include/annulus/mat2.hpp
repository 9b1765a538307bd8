#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace annulus {

using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};

// Column-major 2x2 complex matrix, value semantics.
struct Mat2 {
  cplx a{0}, b{0}, c{0}, d{0};  // [[a, b], [c, d]]

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 zero() { return {}; }

  Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 operator*(cplx s) const { return {a * s, b * s, c * s, d * s}; }
  Mat2& operator+=(const Mat2& o) { a += o.a; b += o.b; c += o.c; d += o.d; return *this; }
  Mat2& operator-=(const Mat2& o) { a -= o.a; b -= o.b; c -= o.c; d -= o.d; return *this; }
  Mat2& operator*=(cplx s) { a *= s; b *= s; c *= s; d *= s; return *this; }

  cplx det() const { return a * d - b * c; }
  cplx trace() const { return a + d; }
  Mat2 inv() const {
    cplx dd = det();
    return {d / dd, -b / dd, -c / dd, a / dd};
  }
  Mat2 adjointT() const {  // conjugate transpose
    return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
  }
  Mat2 conjugate() const { return {std::conj(a), std::conj(b), std::conj(c), std::conj(d)}; }

  double norm_max() const {
    return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
  }
  double norm_fro() const {
    return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
  }
};

inline Mat2 operator*(cplx s, const Mat2& m) { return m * s; }

inline Mat2 commutator(const Mat2& x, const Mat2& y) { return x * y - y * x; }

// exp of a traceless 2x2 via X^2 = -det(X) * Id
inline Mat2 exp_traceless(const Mat2& x) {
  cplx s = std::sqrt(-x.det());
  if (std::abs(s) < 1e-150) return Mat2::identity() + x;
  cplx ch = std::cosh(s), sh = std::sinh(s) / s;
  Mat2 out = x * sh;
  out.a += ch;
  out.d += ch;
  return out;
}

inline double unitary_defect(const Mat2& m) {
  return (m.adjointT() * m - Mat2::identity()).norm_max();
}

// sigma_3 = diag(i, -i); the base point of the sphere chart.
inline Mat2 sigma3() { return {I, 0, 0, -I}; }

}  // namespace annulus
