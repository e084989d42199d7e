// Leading term of the large-time asymptotic expansion in the oscillatory
// zone: dn-ansatz coefficients, the r = k^2 parametrisation, the periodicity
// identity, bore-profile sampling and the soliton limit.
#ifndef LINABEL_GP_HPP
#define LINABEL_GP_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "linabel/kudashev.hpp"

namespace linabel {

// Fixed constants of the construction.
struct GpConstants {
  double mu;          // 2^{-7/6} 3^{-9/4}
  double c;           // -2^9 3^{11/4} 5^{3/4} / 7
  double bq_soliton;  // -2^{5/4} 3^{-3/2} 5^{3/4} / 7
  static const GpConstants& get();
};

// dn-ansatz coefficient set at fixed slow variable.
struct EllipticCoeffs {
  double A;
  double B;
  double C;
  double ksq;
};

enum class GpBranch { w1, w2 };

// One sample of the leading asymptotic term.
struct BoreSample {
  double t = 0.0;
  double x = 0.0;
  double z = 0.0;
  double r = 0.0;
  double phi = 0.0;
  double v = 0.0;
  double u = 0.0;  // sqrt(t) * v
  GpBranch branch = GpBranch::w1;
  bool ok = true;
  std::string status = "ok";
};

// s(r) = -(2-r)^2 (1-2r)^2 (1+r)^2 / (27 r^2 (1-r)^2), r in (0,1).
double s_of_r(double r);
Dual s_of_r(Dual r);

// The Kummer solution w(r) = (-s)^{-5/12} 2F1(5/12, 11/12; 2; 1/s) composed
// through s(r), together with dw/dr.  One analytic function of r covers both
// branches: it restricts to w1 on (0, 1/2] and to w2 on [1/2, 1).
Dual kummer_w_of_r(double r);

// The three roots C1, C2, C3 of C^3 + (15R^2-5) C + 70R^3 - 20R + 5z = 0 in
// the closed form built from the complex cube roots zeta = (sqrt(s)+1)^{1/3},
// theta = (sqrt(s)-1)^{1/3}; (R, z) are taken from the general solution with
// the supplied (w, w_s, epsilon).
std::array<double, 3> cubic_roots_C(double s, double w, double w_s, int epsilon);

// The two admissible moduli: k2^2 in (0, 1/2], k3^2 in [1/2, 1).
std::pair<double, double> modulus_candidates(double s);

// C = -3 (r^2-r+1)/((1-2r)(1+r)) * (14R^3-4R+z)/(1-3R^2); at r = 1/2 the
// simultaneous zero of the second factor is resolved by the summary formula.
double C_of_r(double r, double R, double z);

// Elliptic coefficients of the ansatz at r on a bore branch (epsilon = -1).
EllipticCoeffs elliptic_coeffs(double r, GpBranch branch);

// R(r) and C(r) from the summary formulas (epsilon = -1).
std::pair<double, double> summary_R_C(double r, GpBranch branch);

// v(r, phi) = 3C/(2-r) dn^2(K(sqrt r) phi / pi, sqrt r) - C - R; exactly
// 2 pi periodic in phi.
double leading_term_v(double r, double phi, GpBranch branch);

// v together with the analytic d v / d phi (through the dn derivative).
std::pair<double, double> leading_term_v_dphi(double r, double phi, GpBranch branch);

// |mu (3r(1-r^2)(2-r)(1-2r) w_r + 7 (r^2-r+1)^2 w) / ((r(1-r))^{5/6}
// (r^2-r+1)) - 2F1(1/2,1/2;1;r)| for r in (0, 1/2].
double periodicity_residual(double r);

// The parametric pair (f(r), z(r)) of the phase function and slow variable.
std::pair<double, double> f_and_z_of_r(double r, GpBranch branch);
// With analytic r-derivatives, for f_z cross-checks.
std::pair<Dual, Dual> f_and_z_of_r_dual(double r, GpBranch branch);

// Attainable z-interval of the bore parametrisation and the branch junction.
struct BoreRange {
  double z_min;
  double z_mid;  // z at r = 1/2 where the branches meet
  double z_max;
  double r_min;
  double r_max;
};
const BoreRange& bore_range();

// Invert z(r) on the branch containing z (strictly monotone; bisection).
double r_of_z(double z);

// One sample at (t, x); throws InversionError outside the attainable range.
BoreSample bore_sample(double t, double x);

// Profile over an x-range; out-of-range samples are returned with
// ok = false and a status message instead of throwing.
std::vector<BoreSample> bore_profile(double t, double x_min, double x_max, int n);

// Soliton limit: v = 3C sech^2((B/Q) phi) - C - R with constant B/Q and
// C = -epsilon sqrt(5/3 - 5R^2), R from the algebraic solution at sigma.
double soliton_profile(double sigma, double phi, int epsilon);

}  // namespace linabel

#endif  // LINABEL_GP_HPP
