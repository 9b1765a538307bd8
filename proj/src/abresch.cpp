#include "annulus/abresch.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace annulus {

namespace {

constexpr double kPi = std::numbers::pi;

void quartic_roots(double c, double d, double* d1, double* d2) {
  double B = 1.0 + c - d;
  double disc = B * B - 4.0 * c;
  if (disc < 0) throw std::runtime_error("solve_profile: negative discriminant");
  *d1 = 0.5 * (-B + std::sqrt(disc));
  *d2 = 0.5 * (-B - std::sqrt(disc));
}

struct ProfileState {
  double f, p;
};

ProfileState rk4_step(ProfileState y, double h, double B) {
  auto rhs = [B](ProfileState s) {
    return ProfileState{s.p, -(2.0 * s.f * s.f * s.f + B * s.f)};
  };
  ProfileState k1 = rhs(y);
  ProfileState k2 = rhs({y.f + 0.5 * h * k1.f, y.p + 0.5 * h * k1.p});
  ProfileState k3 = rhs({y.f + 0.5 * h * k2.f, y.p + 0.5 * h * k2.p});
  ProfileState k4 = rhs({y.f + h * k3.f, y.p + h * k3.p});
  return {y.f + h / 6.0 * (k1.f + 2 * k2.f + 2 * k3.f + k4.f),
          y.p + h / 6.0 * (k1.p + 2 * k2.p + 2 * k3.p + k4.p)};
}

}  // namespace

double profile_period_quadrature(double c, double d) {
  double d1, d2;
  quartic_roots(c, d, &d1, &d2);
  if (d1 <= 0) return 2.0 * kPi / std::sqrt(1.0 + c - d);
  // T = 4 int_0^{pi/2} dth / sqrt(d1 sin^2 th - d2)  (f = sqrt(d1) sin th)
  const int n = 4000;
  double h = 0.5 * kPi / n;
  double s = 0;
  for (int i = 0; i <= n; ++i) {
    double th = i * h;
    double g = 1.0 / std::sqrt(d1 * std::sin(th) * std::sin(th) - d2);
    double w = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
    s += w * g;
  }
  return 4.0 * s * h / 3.0;
}

double EllipticProfile::energy_residual() const {
  double B = -(delta1 + delta2);
  double m = 0;
  for (size_t i = 0; i < f.size(); ++i) {
    double e = fx[i] * fx[i] + (f[i] * f[i] - delta1) * (f[i] * f[i] - delta2);
    m = std::max(m, std::abs(e));
  }
  (void)B;
  return m;
}

EllipticProfile solve_profile(const AbreschParams& p, ProfileAxis axis, int n_samples) {
  double c = p.c, d = p.d;
  if (axis == ProfileAxis::Y) std::swap(c, d);
  if (c > 0 || d > 0) throw std::runtime_error("solve_profile: requires c <= 0 and d <= 0");

  EllipticProfile out;
  quartic_roots(c, d, &out.delta1, &out.delta2);
  double B = 1.0 + c - d;

  if (out.delta1 <= 1e-14) {  // flat / degenerate limit
    out.degenerate = true;
    out.period = 2.0 * kPi;
    out.f.assign(n_samples, 0.0);
    out.fx.assign(n_samples, 0.0);
    return out;
  }

  double T_est = profile_period_quadrature(c, d);

  // Fixed-step RK4, substepped well below the sample spacing so the stored
  // samples can be differentiated repeatedly without integrator noise.
  int per_sample = std::max(4096 / std::max(1, n_samples), 32);
  double h = T_est / (double(n_samples) * per_sample);

  out.f.resize(n_samples);
  out.fx.resize(n_samples);
  ProfileState y{std::sqrt(out.delta1), 0.0};
  for (int i = 0; i < n_samples; ++i) {
    out.f[i] = y.f;
    out.fx[i] = y.p;
    for (int s = 0; s < per_sample; ++s) y = rk4_step(y, h, B);
  }

  // Event-refine the period: continue integrating until p crosses 0 downward
  // with f > 0, then Newton on the Hermite interpolant.
  double t = T_est;
  ProfileState prev = y;
  bool found = false;
  for (int k = 0; k < 2 * n_samples * per_sample && !found; ++k) {
    ProfileState next = rk4_step(prev, h, B);
    if (prev.p >= 0 && next.p < 0 && prev.f > 0) {
      double p0 = prev.p, p1 = next.p;
      double m0 = -(2 * prev.f * prev.f * prev.f + B * prev.f);
      double m1 = -(2 * next.f * next.f * next.f + B * next.f);
      double s = p0 / (p0 - p1);
      for (int it = 0; it < 40; ++it) {
        double h00 = 2 * s * s * s - 3 * s * s + 1, h10 = s * s * s - 2 * s * s + s;
        double h01 = -2 * s * s * s + 3 * s * s, h11 = s * s * s - s * s;
        double val = h00 * p0 + h10 * h * m0 + h01 * p1 + h11 * h * m1;
        double d00 = 6 * s * s - 6 * s, d10 = 3 * s * s - 4 * s + 1;
        double d01 = -6 * s * s + 6 * s, d11 = 3 * s * s - 2 * s;
        double dv = d00 * p0 + d10 * h * m0 + d01 * p1 + d11 * h * m1;
        if (std::abs(dv) < 1e-300) break;
        s -= val / dv;
      }
      out.period = t + s * h;
      found = true;
    }
    prev = next;
    t += h;
  }
  if (!found) {
    // the loop starts at T_est where p is about to cross; fall back
    out.period = T_est;
  }
  return out;
}

std::string OmegaField::dump_text() const {
  std::ostringstream os;
  os.precision(17);
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      if (ix) os << ' ';
      os << at(ix, iy);
    }
    os << '\n';
  }
  return os.str();
}

double CGrid::max_abs() const {
  double m = 0;
  for (cplx x : v) m = std::max(m, std::abs(x));
  return m;
}

CGrid to_cgrid(const OmegaField& w) {
  CGrid g = CGrid::like(w);
  for (size_t i = 0; i < w.v.size(); ++i) g.v[i] = w.v[i];
  return g;
}

namespace {
inline int wrap(int i, int n) { return (i % n + n) % n; }
}  // namespace

CGrid grid_dx(const CGrid& u) {
  CGrid r = u;
  for (int iy = 0; iy < u.ny; ++iy)
    for (int ix = 0; ix < u.nx; ++ix)
      r.at(ix, iy) =
          (u.at(wrap(ix + 1, u.nx), iy) - u.at(wrap(ix - 1, u.nx), iy)) / (2.0 * u.hx);
  return r;
}

CGrid grid_dy(const CGrid& u) {
  CGrid r = u;
  for (int iy = 0; iy < u.ny; ++iy) {
    for (int ix = 0; ix < u.nx; ++ix) {
      cplx val;
      if (u.y_periodic) {
        val = (u.at(ix, wrap(iy + 1, u.ny)) - u.at(ix, wrap(iy - 1, u.ny))) / (2.0 * u.hy);
      } else if (iy == 0) {
        val = (-3.0 * u.at(ix, 0) + 4.0 * u.at(ix, 1) - u.at(ix, 2)) / (2.0 * u.hy);
      } else if (iy == u.ny - 1) {
        val = (3.0 * u.at(ix, iy) - 4.0 * u.at(ix, iy - 1) + u.at(ix, iy - 2)) / (2.0 * u.hy);
      } else {
        val = (u.at(ix, iy + 1) - u.at(ix, iy - 1)) / (2.0 * u.hy);
      }
      r.at(ix, iy) = val;
    }
  }
  return r;
}

CGrid grid_dz(const CGrid& u) {
  CGrid gx = grid_dx(u), gy = grid_dy(u);
  CGrid r = u;
  for (size_t i = 0; i < u.v.size(); ++i) r.v[i] = 0.5 * (gx.v[i] - I * gy.v[i]);
  return r;
}

CGrid grid_dzb(const CGrid& u) {
  CGrid gx = grid_dx(u), gy = grid_dy(u);
  CGrid r = u;
  for (size_t i = 0; i < u.v.size(); ++i) r.v[i] = 0.5 * (gx.v[i] + I * gy.v[i]);
  return r;
}

CGrid grid_laplacian(const CGrid& u) {
  CGrid r = u;
  for (int iy = 0; iy < u.ny; ++iy) {
    for (int ix = 0; ix < u.nx; ++ix) {
      cplx lxx = (u.at(wrap(ix + 1, u.nx), iy) - 2.0 * u.at(ix, iy) +
                  u.at(wrap(ix - 1, u.nx), iy)) /
                 (u.hx * u.hx);
      cplx lyy;
      if (u.y_periodic) {
        lyy = (u.at(ix, wrap(iy + 1, u.ny)) - 2.0 * u.at(ix, iy) + u.at(ix, wrap(iy - 1, u.ny))) /
              (u.hy * u.hy);
      } else if (iy == 0 || iy == u.ny - 1) {
        lyy = 0;  // boundary rows are not interior; callers skip them
      } else {
        lyy = (u.at(ix, iy + 1) - 2.0 * u.at(ix, iy) + u.at(ix, iy - 1)) / (u.hy * u.hy);
      }
      r.at(ix, iy) = lxx + lyy;
    }
  }
  return r;
}

OmegaField omega_from_profiles(const EllipticProfile& f, const EllipticProfile& g,
                               int nx, int ny) {
  if ((int)f.f.size() != nx || (int)g.f.size() != ny)
    throw std::runtime_error("omega_from_profiles: profile sample counts must match grid");
  OmegaField w;
  w.nx = nx;
  w.ny = ny;
  w.hx = f.period / nx;
  w.hy = g.period / ny;
  w.y_periodic = true;
  w.v.resize((size_t)nx * ny);
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      double s = (f.fx[ix] + g.fx[iy]) / (1.0 + f.f[ix] * f.f[ix] + g.f[iy] * g.f[iy]);
      w.at(ix, iy) = std::asinh(s);
    }
  return w;
}

OmegaField abresch_omega(const AbreschParams& p, int nx, int ny) {
  EllipticProfile f = solve_profile(p, ProfileAxis::X, nx);
  EllipticProfile g = solve_profile(p, ProfileAxis::Y, ny);
  return omega_from_profiles(f, g, nx, ny);
}

double sinh_gordon_residual(const OmegaField& w) {
  if (w.nx < 5 || w.ny < 5) throw std::runtime_error("sinh_gordon_residual: grid too small");
  CGrid u = to_cgrid(w);
  CGrid lap = grid_laplacian(u);
  double m = 0;
  int y0 = w.y_periodic ? 0 : 1, y1 = w.y_periodic ? w.ny : w.ny - 1;
  for (int iy = y0; iy < y1; ++iy)
    for (int ix = 0; ix < w.nx; ++ix) {
      double ww = w.at(ix, iy);
      m = std::max(m, std::abs(lap.at(ix, iy) + std::sinh(ww) * std::cosh(ww)));
    }
  return m;
}

double lsg_residual(const CGrid& u, const OmegaField& w) {
  if (u.nx != w.nx || u.ny != w.ny) throw std::runtime_error("lsg_residual: shape mismatch");
  CGrid lap = grid_laplacian(u);
  double m = 0;
  int y0 = w.y_periodic ? 0 : 2, y1 = w.y_periodic ? w.ny : w.ny - 2;
  for (int iy = y0; iy < y1; ++iy)
    for (int ix = 0; ix < w.nx; ++ix)
      m = std::max(m, std::abs(lap.at(ix, iy) + std::cosh(2.0 * w.at(ix, iy)) * u.at(ix, iy)));
  return m;
}

namespace {

// Reconstruct tau from its two partial derivatives by line integration along x
// (trapezoid, per row) from a y-line integral at ix = 0; returns the closure
// mismatch of the x-period loop. Constant fixed by zero grid mean.
CGrid integrate_tau(const CGrid& tz, const CGrid& tzb, double* mismatch, cplx* constant) {
  CGrid tx = tz;  // d tau / dx = tz + tzb
  CGrid ty = tz;  // d tau / dy = i (tz - tzb)
  for (size_t i = 0; i < tz.v.size(); ++i) {
    tx.v[i] = tz.v[i] + tzb.v[i];
    ty.v[i] = I * (tz.v[i] - tzb.v[i]);
  }
  CGrid tau = tz;
  // y-line at ix = 0
  tau.at(0, 0) = 0;
  for (int iy = 1; iy < tz.ny; ++iy)
    tau.at(0, iy) = tau.at(0, iy - 1) + 0.5 * tz.hy * (ty.at(0, iy - 1) + ty.at(0, iy));
  for (int iy = 0; iy < tz.ny; ++iy)
    for (int ix = 1; ix < tz.nx; ++ix)
      tau.at(ix, iy) = tau.at(ix - 1, iy) + 0.5 * tz.hx * (tx.at(ix - 1, iy) + tx.at(ix, iy));
  // closure of the periodic x loop
  double mm = 0;
  for (int iy = 0; iy < tz.ny; ++iy) {
    cplx wrap = tau.at(tz.nx - 1, iy) + 0.5 * tz.hx * (tx.at(tz.nx - 1, iy) + tx.at(0, iy));
    mm = std::max(mm, std::abs(wrap - tau.at(0, iy)));
  }
  if (mismatch) *mismatch = mm;
  cplx mean = 0;
  for (cplx x : tau.v) mean += x;
  mean /= double(tau.v.size());
  for (cplx& x : tau.v) x -= mean;
  if (constant) *constant = -mean;
  return tau;
}

}  // namespace

HierarchyState pinkall_sterling(const OmegaField& w, cplx gamma, int n_max) {
  HierarchyState st;
  st.gamma = gamma;
  cplx gb = std::conj(gamma);

  CGrid om = to_cgrid(w);
  CGrid oz = grid_dz(om);
  CGrid ozz = grid_dz(oz);
  CGrid ozzz = grid_dz(ozz);

  auto zero = CGrid::like(w);
  // n = -1 seed: u = 0, sigma = 0, tau = 1/4
  st.u.push_back(zero);
  CGrid quarter = zero;
  for (auto& x : quarter.v) x = 0.25;
  st.tau.push_back(quarter);
  st.sigma.push_back(zero);
  st.closure_mismatch.push_back(0);
  st.mean_constants.push_back(0);

  // n = 0: u0 = omega_z
  st.u.push_back(oz);
  {
    CGrid s0 = zero;  // sigma_0 = gamma e^{2w} tau_{-1} + 4 i gamma u0_zb
    CGrid u0zb = grid_dzb(oz);
    for (int iy = 0; iy < w.ny; ++iy)
      for (int ix = 0; ix < w.nx; ++ix)
        s0.at(ix, iy) =
            gamma * std::exp(2.0 * w.at(ix, iy)) * 0.25 + 4.0 * I * gamma * u0zb.at(ix, iy);
    st.sigma.push_back(s0);
  }
  // canonical tau_0 = -2i gb (w_zz - w_z^2)
  CGrid tau0 = zero;
  for (size_t i = 0; i < tau0.v.size(); ++i)
    tau0.v[i] = -2.0 * I * gb * (ozz.v[i] - oz.v[i] * oz.v[i]);
  st.tau.push_back(tau0);
  st.closure_mismatch.push_back(0);
  st.mean_constants.push_back(0);

  for (int n = 0; n < n_max; ++n) {
    const CGrid& tn = st.tau_n(n);
    CGrid tnz = grid_dz(tn);
    // u_{n+1} = (i/2) tau_{n,z} + i w_z tau_n
    CGrid un1 = CGrid::like(w);
    for (size_t i = 0; i < un1.v.size(); ++i)
      un1.v[i] = 0.5 * I * tnz.v[i] + I * oz.v[i] * tn.v[i];
    st.u.push_back(un1);
    // sigma_{n+1} = gamma e^{2w} tau_n + 4 i gamma u_{n+1,zb}
    CGrid un1zb = grid_dzb(un1);
    CGrid sn1 = CGrid::like(w);
    for (int iy = 0; iy < w.ny; ++iy)
      for (int ix = 0; ix < w.nx; ++ix)
        sn1.at(ix, iy) = gamma * std::exp(2.0 * w.at(ix, iy)) * tn.at(ix, iy) +
                         4.0 * I * gamma * un1zb.at(ix, iy);
    st.sigma.push_back(sn1);

    if (n + 1 >= n_max) break;

    // tau_{n+1}: system tz = -2i gb (u_zz - 2 w_z u_z), tzb = (i/2) gb e^{-2w} u
    CGrid uz = grid_dz(un1);
    CGrid uzz = grid_dz(uz);
    CGrid tz = CGrid::like(w), tzb = CGrid::like(w);
    for (int iy = 0; iy < w.ny; ++iy)
      for (int ix = 0; ix < w.nx; ++ix) {
        tz.at(ix, iy) = -2.0 * I * gb * (uzz.at(ix, iy) - 2.0 * oz.at(ix, iy) * uz.at(ix, iy));
        tzb.at(ix, iy) = 0.5 * I * gb * std::exp(-2.0 * w.at(ix, iy)) * un1.at(ix, iy);
      }
    if (n == 0) {
      // canonical tau_1 = -2i gb^2 (w_zzzz - 2 w_z w_zzz + w_zz^2 - 6 w_z^2 w_zz + 3 w_z^4)
      CGrid ozzzz = grid_dz(ozzz);
      CGrid t1 = CGrid::like(w);
      for (size_t i = 0; i < t1.v.size(); ++i) {
        cplx z1 = oz.v[i], z2 = ozz.v[i], z3 = ozzz.v[i], z4 = ozzzz.v[i];
        t1.v[i] = -2.0 * I * gb * gb *
                  (z4 - 2.0 * z1 * z3 + z2 * z2 - 6.0 * z1 * z1 * z2 + 3.0 * z1 * z1 * z1 * z1);
      }
      st.tau.push_back(t1);
      // report the compatibility of the first-order system as the solution test
      CGrid probe = grid_dzb(t1);
      double mm = 0;
      int y0 = w.y_periodic ? 0 : 2, y1 = w.y_periodic ? w.ny : w.ny - 2;
      for (int iy = y0; iy < y1; ++iy)
        for (int ix = 0; ix < w.nx; ++ix)
          mm = std::max(mm, std::abs(probe.at(ix, iy) - tzb.at(ix, iy)));
      st.closure_mismatch.push_back(mm);
      st.mean_constants.push_back(0);
    } else {
      double mm = 0;
      cplx cn = 0;
      st.tau.push_back(integrate_tau(tz, tzb, &mm, &cn));
      st.closure_mismatch.push_back(mm);
      st.mean_constants.push_back(cn);
    }
  }
  return st;
}

std::vector<double> jacobi_apply(const std::vector<double>& u, const OmegaField& w) {
  if (u.size() != w.v.size()) throw std::runtime_error("jacobi_apply: shape mismatch");
  CGrid cu = CGrid::like(w);
  for (size_t i = 0; i < u.size(); ++i) cu.v[i] = u[i];
  CGrid lap = grid_laplacian(cu);
  CGrid wx = grid_dx(to_cgrid(w)), wy = grid_dy(to_cgrid(w));
  std::vector<double> out(u.size());
  for (int iy = 0; iy < w.ny; ++iy)
    for (int ix = 0; ix < w.nx; ++ix) {
      size_t i = ix + (size_t)w.nx * iy;
      double ch = std::cosh(w.v[i]);
      double grad2 = std::norm(wx.v[i]) + std::norm(wy.v[i]);
      out[i] = (lap.v[i].real() + u[i] + 2.0 * grad2 / (ch * ch) * u[i]) / (ch * ch);
    }
  return out;
}

std::vector<double> shiffman_field(const OmegaField& w) {
  CGrid cw = to_cgrid(w);
  CGrid wx = grid_dx(cw);
  CGrid wxy = grid_dy(wx);
  CGrid wy = grid_dy(cw);
  std::vector<double> out(w.v.size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = wxy.v[i].real() - std::tanh(w.v[i]) * wx.v[i].real() * wy.v[i].real();
  return out;
}

LameBasis lame_basis(const AbreschParams& p, int n_samples) {
  if (p.c >= 0) throw std::runtime_error("lame_basis: requires c < 0");
  EllipticProfile f = solve_profile(p, ProfileAxis::X, n_samples);
  LameBasis lb;
  lb.period = f.period;
  lb.lambda0 = -f.delta1;
  lb.lambda1 = 1.0 + p.c - p.d;
  lb.lambda2 = -f.delta2;
  lb.e.assign(3, std::vector<double>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    double ff = f.f[i];
    lb.e[0][i] = std::sqrt(std::max(0.0, ff * ff - f.delta2));
    lb.e[1][i] = ff;
    lb.e[2][i] = std::sqrt(std::max(0.0, f.delta1 - ff * ff));
  }
  // e2 = sqrt(delta1 - f^2) has a sign choice; make it smooth: flip sign on the
  // half-period where f_x > 0 so that e2 ~ -f_x / sqrt(delta1 - delta2)-aligned.
  for (int i = 0; i < n_samples; ++i)
    if (f.fx[i] > 0) lb.e[2][i] = -lb.e[2][i];
  return lb;
}

}  // namespace annulus
