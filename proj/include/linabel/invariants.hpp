// SL(2,R) differential invariants of third-order ODEs, the (omega, psi)
// symmetry reduction, and the coefficient maps linking them to second-order
// linear equations w_ss + p w_s + q w = 0 (plus the gauged variant with an
// extra function r(s)).
#ifndef LINABEL_INVARIANTS_HPP
#define LINABEL_INVARIANTS_HPP

#include <utility>

#include "linabel/specfun.hpp"

namespace linabel {

// Third-order jet (g, g', g'', g''') at a point.
struct Jet3 {
  double g;
  double g1;
  double g2;
  double g3;
};

// Coefficients of w_ss + p w_s + q w = 0 and the derivative data needed to
// evaluate the invariants.  p_ss participates only in the gauged map.
struct LinCoeffs {
  double p = 0.0;
  double q = 0.0;
  double p_s = 0.0;
  double q_s = 0.0;
  double q_ss = 0.0;
  double p_ss = 0.0;
};

// Gauge function r(s) and derivatives.  r_ss and r_sss matter only when the
// gauged coefficients are fed back into the invariant formulas.
struct GaugeR {
  double r = 0.0;
  double r_s = 0.0;
  double r_ss = 0.0;
  double r_sss = 0.0;
};

// I2 = (g'' - 6 g g' + 4 g^3)^2 / (g' - g^2)^3.
double invariant_I2(const Jet3& j);

// I3 = (g''' - 12 g g'' - 6 g'^2 + 48 g^2 g' - 24 g^4) / (g' - g^2)^2.
double invariant_I3(const Jet3& j);

// Reduction to the first-order phase plane:
// omega = g^2/g', psi = g'^3 / (g^2 (2 g'^2 - g g'')).
std::pair<double, double> reduce_to_omega_psi(const Jet3& j);

// Invariants expressed through the linear-equation coefficients:
// I2 = -(q_s + 2 p q)^2 / q^3,
// I3 = -(q_ss + 2 p_s q + 5 q_s p + 6 p^2 q) / q^2.
std::pair<double, double> linearised_invariants(const LinCoeffs& c);

// Gauged coefficients p~ = p - 2r, q~ = q - p r + r^2 - r_s, with first and
// second derivatives propagated from the supplied data.
LinCoeffs tilde_coeffs(const LinCoeffs& c, const GaugeR& r);

// Coefficients (with derivatives) of the hypergeometric equation
// s(1-s) w_ss + (gamma - (1+alpha+beta) s) w_s - alpha beta w = 0
// brought to the monic form w_ss + p w_s + q w = 0.
LinCoeffs hypergeometric_lin_coeffs(const HgParams& hp, double s);

// Jet reconstructed from a solution sample (w, w_s) of the linear equation,
// using the closed-form expressions for the invariant numerators; the
// Wronskian scale W0 is free and defaults to 1.
Jet3 jet_from_linear(const LinCoeffs& c, double w, double w_s, double W0 = 1.0);

}  // namespace linabel

#endif  // LINABEL_INVARIANTS_HPP
