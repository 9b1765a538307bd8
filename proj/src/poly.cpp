#include "annulus/poly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace annulus {

Poly Poly::from_roots(const std::vector<cplx>& rts, cplx lead) {
  Poly p({lead});
  for (cplx r : rts) {
    std::vector<cplx> q(p.coeffs.size() + 1, cplx{0});
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
      q[i] += p.coeffs[i] * (-r);
      q[i + 1] += p.coeffs[i];
    }
    p.coeffs = std::move(q);
  }
  return p;
}

bool Poly::is_zero() const {
  for (cplx c : coeffs)
    if (c != cplx{0}) return false;
  return true;
}

cplx Poly::operator()(cplx lam) const {
  cplx r{0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * lam + *it;
  return r;
}

Poly Poly::derivative() const {
  if (coeffs.size() <= 1) return Poly({cplx{0}});
  std::vector<cplx> d(coeffs.size() - 1);
  for (size_t k = 1; k < coeffs.size(); ++k) d[k - 1] = coeffs[k] * double(k);
  return Poly(std::move(d));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<cplx> r(std::max(coeffs.size(), o.coeffs.size()), cplx{0});
  for (size_t i = 0; i < coeffs.size(); ++i) r[i] += coeffs[i];
  for (size_t i = 0; i < o.coeffs.size(); ++i) r[i] += o.coeffs[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<cplx> r(std::max(coeffs.size(), o.coeffs.size()), cplx{0});
  for (size_t i = 0; i < coeffs.size(); ++i) r[i] += coeffs[i];
  for (size_t i = 0; i < o.coeffs.size(); ++i) r[i] -= o.coeffs[i];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (coeffs.empty() || o.coeffs.empty()) return Poly({cplx{0}});
  std::vector<cplx> r(coeffs.size() + o.coeffs.size() - 1, cplx{0});
  for (size_t i = 0; i < coeffs.size(); ++i)
    for (size_t j = 0; j < o.coeffs.size(); ++j) r[i + j] += coeffs[i] * o.coeffs[j];
  return Poly(std::move(r));
}

Poly Poly::operator*(cplx s) const {
  Poly r = *this;
  for (auto& c : r.coeffs) c *= s;
  return r;
}

Poly Poly::shifted(int k) const {
  std::vector<cplx> r(coeffs.size() + k, cplx{0});
  for (size_t i = 0; i < coeffs.size(); ++i) r[i + k] = coeffs[i];
  return Poly(std::move(r));
}

Poly Poly::divide(const Poly& q, double* rem) const {
  int dq = q.degree();
  while (dq > 0 && q.coeffs[dq] == cplx{0}) --dq;
  if (dq < 0 || q.coeffs[dq] == cplx{0}) throw std::runtime_error("poly divide: zero divisor");
  std::vector<cplx> r = coeffs;
  int dr = static_cast<int>(r.size()) - 1;
  std::vector<cplx> quot(std::max(0, dr - dq) + 1, cplx{0});
  for (int k = dr; k >= dq; --k) {
    cplx f = r[k] / q.coeffs[dq];
    quot[k - dq] = f;
    for (int j = 0; j <= dq; ++j) r[k - dq + j] -= f * q.coeffs[j];
  }
  if (rem) {
    double m = 0;
    for (int j = 0; j < dq && j < (int)r.size(); ++j) m = std::max(m, std::abs(r[j]));
    *rem = m;
  }
  return Poly(std::move(quot));
}

double Poly::max_coeff() const {
  double m = 0;
  for (cplx c : coeffs) m = std::max(m, std::abs(c));
  return m;
}

void Poly::trim(double tol) {
  while (coeffs.size() > 1 && std::abs(coeffs.back()) <= tol) coeffs.pop_back();
}

std::vector<cplx> roots(const Poly& p, double tol) {
  Poly q = p;
  q.trim(0.0);
  int n = q.degree();
  if (n < 1) throw std::runtime_error("roots: degree must be >= 1");
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -q.coeffs[i] / q.coeffs[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
  std::vector<cplx> out(n);
  Poly dq = q.derivative();
  double scale = q.max_coeff();
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    cplx r = es.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {  // Newton polish
      cplx d = dq(r);
      if (std::abs(d) < 1e-300) break;
      cplx step = q(r) / d;
      if (std::abs(step) > 1.0 + std::abs(r)) break;
      r -= step;
    }
    worst = std::max(worst, std::abs(q(r)));
    out[i] = r;
  }
  if (worst > tol * scale) {
    std::ostringstream os;
    os << "roots: did not converge, worst residual " << worst << " vs bound " << tol * scale;
    throw std::runtime_error(os.str());
  }
  std::sort(out.begin(), out.end(), [](cplx x, cplx y) {
    if (std::abs(x) != std::abs(y)) return std::abs(x) < std::abs(y);
    return std::arg(x) < std::arg(y);
  });
  return out;
}

namespace {
int natural_degree(Reality kind, int g) {
  return kind == Reality::KindA ? 2 * g : g + 1;
}
}  // namespace

Poly reality_image(const Poly& p, Reality kind, int g) {
  int n = natural_degree(kind, g);
  if (p.degree() > n) throw std::runtime_error("reality_image: degree exceeds class degree");
  std::vector<cplx> img(n + 1, cplx{0});
  // lam^n conj(p(1/conj(lam))) has coefficient conj(p_{n-k}) at lam^k
  for (int k = 0; k <= n; ++k) img[k] = std::conj(p.at(n - k));
  if (kind == Reality::KindB)
    for (auto& c : img) c = -c;
  return Poly(std::move(img));
}

double reality_residual(const Poly& p, Reality kind, int g) {
  Poly img = reality_image(p, kind, g);
  int n = natural_degree(kind, g);
  double m = 0;
  for (int k = 0; k <= n; ++k) m = std::max(m, std::abs(img.at(k) - p.at(k)));
  return m;
}

Poly symmetrize(const Poly& p, Reality kind, int g) {
  Poly img = reality_image(p, kind, g);
  int n = natural_degree(kind, g);
  std::vector<cplx> out(n + 1);
  for (int k = 0; k <= n; ++k) out[k] = 0.5 * (p.at(k) + img.at(k));
  return Poly(std::move(out));
}

std::string to_string(const Poly& p) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < p.coeffs.size(); ++i) {
    if (i) os << ", ";
    os << p.coeffs[i].real() << (p.coeffs[i].imag() < 0 ? "-" : "+")
       << std::abs(p.coeffs[i].imag()) << "i";
  }
  os << "]";
  return os.str();
}

}  // namespace annulus
