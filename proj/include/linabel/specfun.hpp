// Real-valued special functions: Gauss hypergeometric 2F1 on the real line
// left of x = 1 (with argument transformations down to x -> -inf), the
// complete elliptic integral K, the Jacobi dn function and the Gamma
// function.  All kernels are pure and accumulate in extended precision.
#ifndef LINABEL_SPECFUN_HPP
#define LINABEL_SPECFUN_HPP

#include "linabel/dual.hpp"

namespace linabel {

// Hypergeometric parameter triple (alpha, beta; gamma).
struct HgParams {
  double alpha;
  double beta;
  double gamma;
};

// 2F1(alpha, beta; gamma; x) for real x < 1.
//
// Evaluation regions: power series for |x| <= 0.5 and x in (0.5, 1);
// Pfaff transformation x -> x/(x-1) for x in [-1, -0.5); the x -> 1/x
// connection formulas for x < -1, including the logarithmic limit form
// when alpha - beta is an integer.  Terminating series (alpha or beta a
// non-positive integer) are summed exactly and place no restriction on x.
//
// Throws ParameterError if gamma is a non-positive integer, DomainError
// if x >= 1 and the series does not terminate.
double gauss_2f1(const HgParams& p, double x);

// d/dx 2F1(alpha, beta; gamma; x) = (alpha beta / gamma) *
// 2F1(alpha+1, beta+1; gamma+1; x).
double gauss_2f1_derivative(const HgParams& p, double x);

// d^2/dx^2 2F1, via the twice-raised parameter triple.
double gauss_2f1_second_derivative(const HgParams& p, double x);

// Value and x-derivative in one call, for dual-number curve evaluation.
Dual gauss_2f1(const HgParams& p, Dual x);

// Complete elliptic integral of the first kind, modulus convention:
// K(k) = int_0^{pi/2} dt / sqrt(1 - k^2 sin^2 t), 0 <= k < 1.  AGM based.
double complete_elliptic_K(double k);

// Jacobi dn(u, k), modulus convention, 0 <= k <= 1.  Periodic with
// period 2K(k) in u; dn(u, 1) = sech(u).
double jacobi_dn(double u, double k);

// All three Jacobi functions at once (needed for the derivative of dn^2).
struct JacobiSnCnDn {
  double sn;
  double cn;
  double dn;
};
JacobiSnCnDn jacobi_sn_cn_dn(double u, double k);

// Gamma function on the real line; PoleError at non-positive integers.
double gamma_fn(double x);

// Digamma function psi(x) (used by the logarithmic connection formulas).
double digamma(double x);

}  // namespace linabel

#endif  // LINABEL_SPECFUN_HPP
