#include "linabel/gp.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "linabel/errors.hpp"

namespace linabel {
namespace {

using cplx = std::complex<double>;

const HgParams kF1Triple{5.0 / 12.0, -7.0 / 12.0, 0.5};
const HgParams kF2Triple{11.0 / 12.0, -1.0 / 12.0, 1.5};
const HgParams kPerTriple{0.5, 0.5, 1.0};

constexpr double kSqrt15 = 3.8729833462074168851792653997824;

struct KummerConsts {
  double kappa1;
  double kappa2;
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

void require_r_open01(double r, const char* what) {
  if (!(r > 0.0 && r < 1.0)) {
    throw DomainError(std::string(what) + ": r must lie in (0, 1)");
  }
}

void require_branch_range(double r, GpBranch br, const char* what) {
  require_r_open01(r, what);
  if (br == GpBranch::w1 && r > 0.5) {
    throw DomainError(std::string(what) + ": branch w1 requires r in (0, 1/2]");
  }
  if (br == GpBranch::w2 && r < 0.5) {
    throw DomainError(std::string(what) + ": branch w2 requires r in [1/2, 1)");
  }
}

// sqrt(-s(r)) in its rational form, signed so that the single analytic
// continuation through r = 1/2 selects w1 below and w2 above:
// g(r) = (2-r)(1-2r)(1+r) / (3 sqrt(3) r (1-r)).
Dual signed_sqrt_neg_s(Dual r) {
  return (2.0 - r) * (1.0 - 2.0 * r) * (1.0 + r) /
         (3.0 * std::sqrt(3.0) * r * (1.0 - r));
}

}  // namespace

const GpConstants& GpConstants::get() {
  static const GpConstants g = [] {
    GpConstants c;
    c.mu = std::pow(2.0, -7.0 / 6.0) * std::pow(3.0, -9.0 / 4.0);
    c.c = -std::pow(2.0, 9.0) * std::pow(3.0, 11.0 / 4.0) * std::pow(5.0, 0.75) / 7.0;
    c.bq_soliton = -std::pow(2.0, 1.25) * std::pow(3.0, -1.5) * std::pow(5.0, 0.75) / 7.0;
    return c;
  }();
  return g;
}

double s_of_r(double r) {
  require_r_open01(r, "s_of_r");
  const double a = 2.0 - r;
  const double b = 1.0 - 2.0 * r;
  const double c = 1.0 + r;
  const double d = r * (1.0 - r);
  return -(a * a * b * b * c * c) / (27.0 * d * d);
}

Dual s_of_r(Dual r) {
  const Dual g = signed_sqrt_neg_s(r);
  return -(g * g);
}

Dual kummer_w_of_r(double r) {
  require_r_open01(r, "kummer_w_of_r");
  const auto& kc = KummerConsts::get();
  const Dual rd = Dual::variable(r);
  const Dual s = s_of_r(rd);
  const Dual g = signed_sqrt_neg_s(rd);
  // w = kappa1 F1(s) - kappa2 g F2(s); on (0,1/2] this is w1 of the
  // separatrix pair, on [1/2,1) it continues analytically into w2.
  return kc.kappa1 * gauss_2f1(kF1Triple, s) -
         kc.kappa2 * g * gauss_2f1(kF2Triple, s);
}

std::array<double, 3> cubic_roots_C(double s, double w, double w_s, int epsilon) {
  if (s > 0.0) throw DomainError("cubic_roots_C: requires s <= 0");
  const double sigma = 144.0 * s * (s - 1.0) * w_s * w_s + 5.0 * w * w;
  if (sigma <= 0.0) throw DomainError("cubic_roots_C: radicand <= 0");

  const cplx sq = std::sqrt(cplx(s, 0.0));
  const cplx zeta = std::pow(sq + 1.0, 1.0 / 3.0);
  const cplx theta = std::pow(sq - 1.0, 1.0 / 3.0);
  const cplx e13 = std::polar(1.0, M_PI / 3.0);
  const cplx e23 = std::polar(1.0, 2.0 * M_PI / 3.0);
  const cplx pref = 4.0 * static_cast<double>(epsilon) * kSqrt15 * w_s *
                    std::pow(cplx(s - 1.0, 0.0), 1.0 / 3.0) * sq /
                    std::sqrt(sigma);
  const cplx roots[3] = {pref * (e23 * zeta - e13 * theta),
                         pref * (zeta + theta),
                         pref * (e23 * theta - e13 * zeta)};
  std::array<double, 3> out;
  for (int i = 0; i < 3; ++i) {
    const double scale = 1.0 + std::abs(roots[i].real());
    if (std::abs(roots[i].imag()) > 1e-10 * scale) {
      throw ConvergenceError("cubic_roots_C: root has non-negligible imaginary part");
    }
    out[static_cast<size_t>(i)] = roots[i].real();
  }
  return out;
}

std::pair<double, double> modulus_candidates(double s) {
  if (s > 0.0) throw DomainError("modulus_candidates: requires s <= 0");
  if (s == 0.0) return {0.5, 0.5};
  const cplx sq = std::sqrt(cplx(s, 0.0));
  const cplx zeta = std::pow(sq + 1.0, 1.0 / 3.0);
  const cplx theta = std::pow(sq - 1.0, 1.0 / 3.0);
  const cplx e13 = std::polar(1.0, M_PI / 3.0);
  const cplx e23 = std::polar(1.0, 2.0 * M_PI / 3.0);
  const cplx k2 = e13 * (zeta - theta) / (zeta - e23 * theta);
  const cplx k3 = (zeta + e13 * theta) / (theta + e13 * zeta);
  for (const cplx& k : {k2, k3}) {
    if (std::abs(k.imag()) > 1e-10 * (1.0 + std::abs(k.real()))) {
      throw ConvergenceError("modulus_candidates: non-real modulus");
    }
  }
  return {k2.real(), k3.real()};
}

std::pair<double, double> summary_R_C(double r, GpBranch branch) {
  require_branch_range(r, branch, "summary_R_C");
  const Dual w = kummer_w_of_r(r);
  const double e = r * r - r + 1.0;
  const double den = std::sqrt(36.0 * r * r * (1.0 - r) * (1.0 - r) * w.d * w.d +
                               5.0 * e * w.v * w.v);
  const double C = 2.0 * kSqrt15 * r * (1.0 - r) * (2.0 - r) * w.d /
                   (den * std::sqrt(e));
  const double R = -kSqrt15 * std::sqrt(e) * w.v / (3.0 * den);
  return {R, C};
}

double C_of_r(double r, double R, double z) {
  require_r_open01(r, "C_of_r");
  const double e = r * r - r + 1.0;
  const double num = 14.0 * R * R * R - 4.0 * R + z;
  const double den13 = 1.0 - 3.0 * R * R;
  if (std::abs(1.0 - 2.0 * r) < 1e-9) {
    // Pole of the prefactor; on the solution curve the numerator factor
    // vanishes simultaneously and the limit is the summary value at r = 1/2.
    if (std::abs(num) > 1e-6 * (1.0 + std::abs(z) + std::abs(R))) {
      throw PoleError("C_of_r: r = 1/2 off the simultaneous zero");
    }
    const auto [Rs, Cs] = summary_R_C(0.5, GpBranch::w1);
    (void)Rs;
    return (R <= 0.0) ? Cs : -Cs;
  }
  return -3.0 * e / ((1.0 - 2.0 * r) * (1.0 + r)) * num / den13;
}

EllipticCoeffs elliptic_coeffs(double r, GpBranch branch) {
  const auto [R, C] = summary_R_C(r, branch);
  (void)R;
  EllipticCoeffs ec;
  ec.ksq = r;
  ec.C = C;
  ec.A = 3.0 * C / (2.0 - r);
  const double b2 = C / (4.0 * (2.0 - r));
  if (b2 < 0.0) throw DomainError("elliptic_coeffs: negative B^2");
  ec.B = std::sqrt(b2);
  return ec;
}

std::pair<double, double> leading_term_v_dphi(double r, double phi, GpBranch branch) {
  const auto [R, C] = summary_R_C(r, branch);
  const double K = complete_elliptic_K(std::sqrt(r));
  const double A = 3.0 * C / (2.0 - r);
  const double scale = K / M_PI;
  const JacobiSnCnDn j = jacobi_sn_cn_dn(scale * phi, std::sqrt(r));
  const double v = A * j.dn * j.dn - C - R;
  // d/dphi dn^2 = 2 dn dn' * K/pi, dn' = -k^2 sn cn
  const double vphi = A * 2.0 * j.dn * (-r * j.sn * j.cn) * scale;
  return {v, vphi};
}

double leading_term_v(double r, double phi, GpBranch branch) {
  return leading_term_v_dphi(r, phi, branch).first;
}

double periodicity_residual(double r) {
  if (!(r > 0.0 && r <= 0.5)) {
    throw DomainError("periodicity_residual: requires r in (0, 1/2]");
  }
  const Dual w = kummer_w_of_r(r);
  const double e = r * r - r + 1.0;
  const double lhs = GpConstants::get().mu *
                     (3.0 * r * (1.0 - r * r) * (2.0 - r) * (1.0 - 2.0 * r) * w.d +
                      7.0 * e * e * w.v) /
                     (std::pow(r * (1.0 - r), 5.0 / 6.0) * e);
  return std::abs(lhs - gauss_2f1(kPerTriple, r));
}

std::pair<Dual, Dual> f_and_z_of_r_dual(double r, GpBranch branch) {
  require_branch_range(r, branch, "f_and_z_of_r");
  // w(r) = kappa1 F1(s(r)) - kappa2 g(r) F2(s(r)) with g the signed rational
  // form of sqrt(-s); the composition is analytic across r = 1/2, so first
  // and second r-derivatives come out of the chain rule with direct basis
  // derivatives (no division by s_r, which vanishes at the junction).
  const auto& kc = KummerConsts::get();
  const Dual rd = Dual::variable(r);
  const Dual sD = s_of_r(rd);
  const Dual gD = signed_sqrt_neg_s(rd);
  const double s = sD.v;
  const double s_r = sD.d;
  // g is rational: second derivative via its logarithmic derivative.
  const double L = -1.0 / (2.0 - r) - 2.0 / (1.0 - 2.0 * r) + 1.0 / (1.0 + r) -
                   1.0 / r + 1.0 / (1.0 - r);
  const double Lp = -1.0 / ((2.0 - r) * (2.0 - r)) -
                    4.0 / ((1.0 - 2.0 * r) * (1.0 - 2.0 * r)) -
                    1.0 / ((1.0 + r) * (1.0 + r)) + 1.0 / (r * r) +
                    1.0 / ((1.0 - r) * (1.0 - r));
  const double g = gD.v;
  const double g_r = g * L;
  const double g_rr = g * (Lp + L * L);
  const double s_rr = -2.0 * (g_r * g_r + g * g_rr);  // s = -g^2

  const double F1 = gauss_2f1(kF1Triple, s);
  const double F1p = gauss_2f1_derivative(kF1Triple, s);
  const double F1pp = gauss_2f1_second_derivative(kF1Triple, s);
  const double F2 = gauss_2f1(kF2Triple, s);
  const double F2p = gauss_2f1_derivative(kF2Triple, s);
  const double F2pp = gauss_2f1_second_derivative(kF2Triple, s);

  const double w = kc.kappa1 * F1 - kc.kappa2 * g * F2;
  const double w_r = kc.kappa1 * F1p * s_r -
                     kc.kappa2 * (g_r * F2 + g * F2p * s_r);
  const double w_rr =
      kc.kappa1 * (F1pp * s_r * s_r + F1p * s_rr) -
      kc.kappa2 * (g_rr * F2 + 2.0 * g_r * F2p * s_r +
                   g * (F2pp * s_r * s_r + F2p * s_rr));

  const Dual wD{w, w_r};
  const Dual wrD{w_r, w_rr};
  const Dual e = rd * rd - rd + 1.0;
  const Dual q2 = 36.0 * rd * rd * (1.0 - rd) * (1.0 - rd) * wrD * wrD +
                  5.0 * e * wD * wD;
  const double cc = GpConstants::get().c;
  const Dual f = cc * std::pow(2.0, 2.0 / 3.0) * std::pow(3.0, 1.25) *
                 pow(rd * (1.0 - rd), 10.0 / 3.0) * pow(wrD, 2.5) /
                 (16.0 * pow(q2, 1.75) * pow(e, 0.75));
  const Dual rm1 = rd - 1.0;
  const Dual tri = 108.0 * rd * rd * rd * (2.0 - rd) * (1.0 - 2.0 * rd) *
                       (1.0 + rd) * rm1 * rm1 * rm1 * wrD * wrD * wrD -
                   216.0 * rd * rd * (1.0 - rd) * (1.0 - rd) * e * e * wD * wrD * wrD +
                   5.0 * e * e * e * wD * wD * wD;
  const Dual z = 2.0 * kSqrt15 * tri / (9.0 * pow(q2, 1.5) * pow(e, 1.5));
  return {f, z};
}

std::pair<double, double> f_and_z_of_r(double r, GpBranch branch) {
  const auto [f, z] = f_and_z_of_r_dual(r, branch);
  return {f.v, z.v};
}

// ---------------------------------------------------------------------------
// Bore sampling
// ---------------------------------------------------------------------------

namespace {

GpBranch branch_of_r(double r) { return r <= 0.5 ? GpBranch::w1 : GpBranch::w2; }

double z_at(double r) { return f_and_z_of_r(r, branch_of_r(r)).second; }

BoreRange compute_bore_range() {
  BoreRange br;
  br.r_min = 1e-4;
  br.r_max = 1.0 - 1e-4;
  // startup monotonicity scan
  const int n = 512;
  double prev = z_at(br.r_min);
  for (int i = 1; i <= n; ++i) {
    const double r = br.r_min + (br.r_max - br.r_min) * i / n;
    const double zi = z_at(r);
    if (zi <= prev) {
      throw ConvergenceError("bore_range: z(r) not strictly increasing");
    }
    prev = zi;
  }
  br.z_min = z_at(br.r_min);
  br.z_max = z_at(br.r_max);
  br.z_mid = z_at(0.5);
  return br;
}

}  // namespace

const BoreRange& bore_range() {
  static const BoreRange br = compute_bore_range();
  return br;
}

double r_of_z(double z) {
  const BoreRange& br = bore_range();
  if (z < br.z_min || z > br.z_max) {
    throw InversionError("r_of_z: z outside the attainable bore interval",
                         br.z_min, br.z_max);
  }
  double lo = br.r_min, hi = br.r_max;
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (z_at(mid) < z) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

BoreSample bore_sample(double t, double x) {
  if (!(t > 0.0)) throw DomainError("bore_sample: t must be positive");
  BoreSample s;
  s.t = t;
  s.x = x;
  s.z = x * std::pow(t, -1.5);
  s.r = r_of_z(s.z);
  s.branch = branch_of_r(s.r);
  const auto [f, z] = f_and_z_of_r(s.r, s.branch);
  (void)z;
  s.phi = std::pow(t, 1.75) * f + M_PI;  // phase shift S = pi
  s.v = leading_term_v(s.r, s.phi, s.branch);
  s.u = std::sqrt(t) * s.v;
  return s;
}

std::vector<BoreSample> bore_profile(double t, double x_min, double x_max, int n) {
  if (!(t > 0.0)) throw DomainError("bore_profile: t must be positive");
  std::vector<BoreSample> out;
  out.reserve(static_cast<size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) {
    const double x =
        (n == 1) ? x_min : x_min + (x_max - x_min) * i / (n - 1.0);
    try {
      out.push_back(bore_sample(t, x));
    } catch (const InversionError& e) {
      BoreSample s;
      s.t = t;
      s.x = x;
      s.z = x * std::pow(t, -1.5);
      s.ok = false;
      s.status = "out_of_range";
      out.push_back(s);
    }
  }
  return out;
}

double soliton_profile(double sigma, double phi, int epsilon) {
  const PhasePointRZ pt = algebraic_solution_point(epsilon, sigma);
  const double rad = 5.0 / 3.0 - 5.0 * pt.R * pt.R;
  if (rad < 0.0) throw DomainError("soliton_profile: 5/3 - 5R^2 < 0");
  const double C = -static_cast<double>(epsilon) * std::sqrt(rad);
  const double arg = GpConstants::get().bq_soliton * phi;
  const double sech = 1.0 / std::cosh(arg);
  return 3.0 * C * sech * sech - C - pt.R;
}

}  // namespace linabel
