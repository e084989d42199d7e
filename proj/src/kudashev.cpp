#include "linabel/kudashev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "linabel/dual.hpp"
#include "linabel/errors.hpp"

namespace linabel {
namespace {

const HgParams kKudashevTriple{5.0 / 12.0, -7.0 / 12.0, 0.5};
const HgParams kSecondTriple{11.0 / 12.0, -1.0 / 12.0, 1.5};

// Gamma-function coefficients of the Kummer forms, computed once.
struct KummerConsts {
  double kappa1;  // sqrt(pi) / (Gamma(11/12) Gamma(19/12))
  double kappa2;  // 2 sqrt(pi) / (Gamma(5/12) Gamma(13/12))
  static const KummerConsts& get() {
    static const KummerConsts c = [] {
      KummerConsts k;
      const double sqrt_pi = std::sqrt(M_PI);
      k.kappa1 = sqrt_pi / (gamma_fn(11.0 / 12.0) * gamma_fn(19.0 / 12.0));
      k.kappa2 = 2.0 * sqrt_pi / (gamma_fn(5.0 / 12.0) * gamma_fn(13.0 / 12.0));
      return k;
    }();
    return c;
  }
};

double pole_denominator(const PhasePointRZ& pt) {
  return 9.0 * (54.0 * pt.R * pt.R * pt.R - 9.0 * pt.R + pt.z) *
         (2.0 * pt.R + 3.0 * pt.z);
}

double pole_scale(const PhasePointRZ& pt) {
  const double r3 = std::abs(pt.R * pt.R * pt.R);
  return 1.0 + r3 + std::abs(pt.z);
}

// (w, w_s) of the selected branch at s; Kummer branches on s <= 0, generic
// mixes on either side of s = 0 with the real second Frobenius branch.
void branch_w(const Branch& br, double s, double* w, double* ws) {
  switch (br.kind) {
    case Branch::Kind::kummer_w1: {
      auto [v, d] = separatrix_w(KummerBranch::w1, s);
      *w = v;
      *ws = d;
      return;
    }
    case Branch::Kind::kummer_w2: {
      auto [v, d] = separatrix_w(KummerBranch::w2, s);
      *w = v;
      *ws = d;
      return;
    }
    case Branch::Kind::generic: {
      double wv = 0.0, wd = 0.0;
      if (br.a != 0.0) {
        wv += br.a * gauss_2f1(kKudashevTriple, s);
        wd += br.a * gauss_2f1_derivative(kKudashevTriple, s);
      }
      if (br.b != 0.0) {
        const double sig = std::abs(s);
        const double pref = std::sqrt(sig);
        const double dpref = (s < 0.0 ? -1.0 : 1.0) * 0.5 / pref;
        const double F2 = gauss_2f1(kSecondTriple, s);
        const double F2d = gauss_2f1_derivative(kSecondTriple, s);
        wv += br.b * pref * F2;
        wd += br.b * (dpref * F2 + pref * F2d);
      }
      *w = wv;
      *ws = wd;
      return;
    }
  }
  throw Error("branch_w: unreachable");
}

RzSample rz_from_w(int epsilon, double s, double w, double ws, double wss) {
  const Dual S{s, 1.0};
  const Dual W{w, ws};
  const Dual Ws{ws, wss};
  const Dual sigma = 144.0 * S * (S - 1.0) * Ws * Ws + 5.0 * W * W;
  if (sigma.v <= 0.0) {
    throw DomainError("general solution: radicand 144 s(s-1) w_s^2 + 5 w^2 <= 0");
  }
  const double sqrt15 = std::sqrt(15.0);
  const Dual root = sqrt(sigma);
  const Dual R = epsilon * sqrt15 * W / (3.0 * root);
  const Dual num = 144.0 * S * S * (S - 1.0) * Ws * Ws * Ws -
                   72.0 * S * (S - 1.0) * W * Ws * Ws + (5.0 / 12.0) * W * W * W;
  const Dual z = -8.0 * epsilon * sqrt15 * num / (3.0 * sigma * root);
  return {R.v, z.v, R.d, z.d};
}

}  // namespace

Branch Branch::kummer(KummerBranch which, int epsilon) {
  Branch b;
  b.kind = (which == KummerBranch::w1) ? Kind::kummer_w1 : Kind::kummer_w2;
  b.epsilon = epsilon;
  return b;
}

Branch Branch::generic(double a, double bb, int epsilon) {
  Branch b;
  b.kind = Kind::generic;
  b.a = a;
  b.b = bb;
  b.epsilon = epsilon;
  return b;
}

double kudashev_rhs(const PhasePointRZ& pt) {
  const double den = pole_denominator(pt);
  if (std::abs(den) < 1e-14 * pole_scale(pt)) {
    throw PoleError("kudashev_rhs: pole curve (54R^3 - 9R + z)(2R + 3z) = 0");
  }
  const double R2 = pt.R * pt.R;
  const double num = 486.0 * R2 * R2 - 171.0 * R2 + 9.0 * pt.z * pt.R + 5.0;
  return num / den;
}

RzSample general_solution_sample(const Branch& br, double s) {
  if ((br.kind == Branch::Kind::kummer_w1 ||
       br.kind == Branch::Kind::kummer_w2) &&
      s > 0.0) {
    throw DomainError("general_solution_sample: Kummer branches require s <= 0");
  }
  double w, ws;
  branch_w(br, s, &w, &ws);
  if (!std::isfinite(ws)) {
    throw DomainError("general_solution_sample: w_s diverges at s = 0");
  }
  const LinCoeffs lc = hypergeometric_lin_coeffs(kKudashevTriple, s);
  const double wss = -lc.p * ws - lc.q * w;
  return rz_from_w(br.epsilon, s, w, ws, wss);
}

PhasePointRZ general_solution_point(const Branch& br, double s) {
  const RzSample r = general_solution_sample(br, s);
  return {r.R, r.z};
}

PhasePointRZ from_omega_psi(const PhasePointOmegaPsi& pt, int epsilon) {
  const double om = pt.omega;
  if (std::abs(om - 1.0) < 1e-13) throw PoleError("from_omega_psi: omega = 1");
  if (std::abs(pt.psi) < 1e-300) throw PoleError("from_omega_psi: psi = 0");
  const double ratio = (1.0 - om) / (3.0 * (6.0 * om + 1.0));
  if (ratio < 0.0) {
    throw DomainError("from_omega_psi: (1 - omega)/(6 omega + 1) < 0");
  }
  const double root = std::sqrt(ratio);
  const double R = epsilon * root;
  const double z = -epsilon / 6.0 * root *
                   (2.0 * (1.0 - om) * (576.0 * om * om - 333.0 * om + 2.0) * pt.psi +
                    245.0) /
                   ((om - 1.0) * (om - 1.0) * (6.0 * om + 1.0) * pt.psi);
  return {R, z};
}

RzSample algebraic_solution_sample(int epsilon, double sigma) {
  const Dual sg{sigma, 1.0};
  const Dual quad = 9.0 * sg * sg - 10.0 * sg + 5.0;  // positive definite
  const Dual root = sqrt(quad);
  const double sqrt10 = std::sqrt(10.0);
  const Dual R = epsilon * sqrt10 * (sg + 1.0) / (6.0 * root);
  const Dual z =
      -epsilon * sqrt10 * (sg - 1.0) * (sg * sg - 10.0 * sg + 5.0) / (quad * root);
  return {R.v, z.v, R.d, z.d};
}

PhasePointRZ algebraic_solution_point(int epsilon, double sigma) {
  const RzSample r = algebraic_solution_sample(epsilon, sigma);
  return {r.R, r.z};
}

double implicit_residual(const PhasePointRZ& pt) {
  const double u = 1.0 - 3.0 * pt.R * pt.R;
  const double v = pt.z + 14.0 * pt.R * pt.R * pt.R - 4.0 * pt.R;
  return 20.0 * u * u * u - 27.0 * v * v;
}

std::array<PhasePointRZ, 6> equilibria() {
  const double s3 = std::sqrt(3.0);
  const double s2 = std::sqrt(2.0);
  const double s52 = std::sqrt(2.5);
  const PhasePointRZ P1{-s3 / 3.0, 2.0 * s3 / 9.0};
  const PhasePointRZ P2{-1.0 / (3.0 * s2), -s2};
  const PhasePointRZ P3{-s52 / 9.0, 2.0 * s52 / 27.0};
  return {P1, P2, P3, {-P3.R, -P3.z}, {-P2.R, -P2.z}, {-P1.R, -P1.z}};
}

std::pair<double, double> separatrix_w(KummerBranch branch, double s) {
  if (s > 0.0) throw DomainError("separatrix_w: requires s <= 0");
  const auto& kc = KummerConsts::get();
  const double sign = (branch == KummerBranch::w1) ? -1.0 : 1.0;
  const double F1 = gauss_2f1(kKudashevTriple, s);
  const double F1d = gauss_2f1_derivative(kKudashevTriple, s);
  if (s == 0.0) {
    const double w = kc.kappa1;  // second branch vanishes at s = 0
    const double ws = sign * std::numeric_limits<double>::infinity();
    return {w, ws};
  }
  const double rt = std::sqrt(-s);
  const double F2 = gauss_2f1(kSecondTriple, s);
  const double F2d = gauss_2f1_derivative(kSecondTriple, s);
  const double w = kc.kappa1 * F1 + sign * kc.kappa2 * rt * F2;
  const double ws =
      kc.kappa1 * F1d + sign * kc.kappa2 * (-0.5 / rt * F2 + rt * F2d);
  return {w, ws};
}

double explicit_separatrix_z(double R, int sign) {
  const double u = 1.0 - 3.0 * R * R;
  if (u < 0.0) throw DomainError("explicit_separatrix_z: 3R^2 > 1");
  return (2.0 / 9.0) * (3.0 * R * R - 1.0) * sign * std::sqrt(15.0 * u) -
         2.0 * R * (7.0 * R * R - 2.0);
}

// ---------------------------------------------------------------------------
// Adaptive trajectory integration (Dormand-Prince 5(4) in arclength form)
// ---------------------------------------------------------------------------

namespace {

struct Vec2 {
  double R, z;
};

// Unit-speed field along the flow: (dR, dz)/dtau = dir (f, 1)/sqrt(1+f^2).
// The arclength form keeps steps well-behaved through near-vertical flow.
Vec2 arclength_field(const PhasePointRZ& pt, int dir) {
  const double f = kudashev_rhs(pt);
  const double n = std::sqrt(1.0 + f * f);
  return {dir * f / n, dir * 1.0 / n};
}

bool inside(const PortraitWindow& w, const PhasePointRZ& p) {
  return p.R >= w.R_min && p.R <= w.R_max && p.z >= w.z_min && p.z <= w.z_max;
}

double event_tol(const PhasePointRZ& p) { return 1e-9 * pole_scale(p); }

// One Dormand-Prince step; returns the 5th-order solution and the embedded
// error estimate.
bool dopri_step(const PhasePointRZ& y, int dir, double h, PhasePointRZ* out,
                double* err) {
  static const double A[7][6] = {
      {},
      {1.0 / 5},
      {3.0 / 40, 9.0 / 40},
      {44.0 / 45, -56.0 / 15, 32.0 / 9},
      {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
      {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
      {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
  static const double B4[7] = {5179.0 / 57600, 0.0,          7571.0 / 16695,
                               393.0 / 640,    -92097.0 / 339200,
                               187.0 / 2100,   1.0 / 40};
  Vec2 k[7];
  try {
    k[0] = arclength_field(y, dir);
    for (int i = 1; i < 7; ++i) {
      PhasePointRZ yi = y;
      for (int j = 0; j < i; ++j) {
        yi.R += h * A[i][j] * k[j].R;
        yi.z += h * A[i][j] * k[j].z;
      }
      k[i] = arclength_field(yi, dir);
    }
  } catch (const PoleError&) {
    return false;  // stage landed on the pole curve; caller shrinks the step
  }
  // 5th-order solution is the A[6] row (FSAL structure not exploited).
  PhasePointRZ y5 = y;
  for (int j = 0; j < 6; ++j) {
    y5.R += h * A[6][j] * k[j].R;
    y5.z += h * A[6][j] * k[j].z;
  }
  PhasePointRZ y4 = y;
  for (int j = 0; j < 7; ++j) {
    y4.R += h * B4[j] * k[j].R;
    y4.z += h * B4[j] * k[j].z;
  }
  *out = y5;
  *err = std::hypot(y5.R - y4.R, y5.z - y4.z);
  return true;
}

Trajectory::End integrate_half(PhasePointRZ y, int dir,
                               const PortraitOptions& opt,
                               std::vector<PhasePointRZ>* out) {
  double h = 1e-3;
  double tau = 0.0;
  const double hmin = 1e-13;
  for (int step = 0; step < opt.max_steps; ++step) {
    if (tau >= opt.max_arclength) return Trajectory::End::length_limit;
    if (!inside(opt.window, y)) return Trajectory::End::window_exit;
    if (std::abs(pole_denominator(y)) < event_tol(y)) {
      return Trajectory::End::pole_event;
    }
    PhasePointRZ ynext;
    double err;
    if (!dopri_step(y, dir, h, &ynext, &err)) {
      h *= 0.25;
      if (h < hmin) return Trajectory::End::pole_event;
      continue;
    }
    const double tol = opt.rel_tol * (1.0 + std::hypot(y.R, y.z));
    if (err > tol) {
      h = std::max(0.2 * h, 0.9 * h * std::pow(tol / err, 0.2));
      if (h < hmin) throw IntegratorError("integrate_trajectory: step underflow");
      continue;
    }
    // pole-curve crossing check: bisect down onto the event surface
    const double d0 = pole_denominator(y);
    const double d1 = pole_denominator(ynext);
    if (d0 * d1 < 0.0 || std::abs(d1) < event_tol(ynext)) {
      PhasePointRZ lo = y;
      double hh = h;
      for (int it = 0; it < 200; ++it) {
        if (std::abs(pole_denominator(lo)) < event_tol(lo)) break;
        hh *= 0.5;
        if (hh < hmin) break;
        PhasePointRZ mid;
        double e2;
        if (!dopri_step(lo, dir, hh, &mid, &e2)) continue;
        if (pole_denominator(lo) * pole_denominator(mid) > 0.0) lo = mid;
      }
      out->push_back(lo);
      return Trajectory::End::pole_event;
    }
    y = ynext;
    tau += h;
    out->push_back(y);
    h = std::min(4.0 * h, 0.9 * h * std::pow(tol / std::max(err, 1e-300), 0.2));
    h = std::min(h, 0.05);
  }
  return Trajectory::End::length_limit;
}

}  // namespace

Trajectory integrate_trajectory(const PhasePointRZ& seed,
                                const PortraitOptions& opt) {
  std::vector<PhasePointRZ> back, fwd;
  const Trajectory::End eb = integrate_half(seed, -1, opt, &back);
  const Trajectory::End ef = integrate_half(seed, +1, opt, &fwd);
  Trajectory t;
  t.points.reserve(back.size() + fwd.size() + 1);
  for (auto it = back.rbegin(); it != back.rend(); ++it) t.points.push_back(*it);
  t.points.push_back(seed);
  for (const auto& p : fwd) t.points.push_back(p);
  t.end = (ef == Trajectory::End::pole_event || eb == Trajectory::End::pole_event)
              ? Trajectory::End::pole_event
              : ef;
  return t;
}

std::vector<Trajectory> phase_portrait(std::span<const PhasePointRZ> seeds,
                                       const PortraitOptions& opt) {
  std::vector<Trajectory> out;
  out.reserve(seeds.size());
  for (const auto& s : seeds) out.push_back(integrate_trajectory(s, opt));
  return out;
}

}  // namespace linabel
