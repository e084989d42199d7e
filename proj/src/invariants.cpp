#include "linabel/invariants.hpp"

#include <cmath>

#include "linabel/errors.hpp"

namespace linabel {
namespace {

// |den| measured against the largest monomial that formed it.
void require_nonsingular(double den, double scale, const char* what) {
  if (std::abs(den) < 1e-14 * (scale + 1.0)) {
    throw SingularJetError(what);
  }
}

}  // namespace

double invariant_I2(const Jet3& j) {
  const double den = j.g1 - j.g * j.g;
  require_nonsingular(den, std::abs(j.g1) + j.g * j.g, "invariant_I2: g' = g^2");
  const double num = j.g2 - 6.0 * j.g * j.g1 + 4.0 * j.g * j.g * j.g;
  return num * num / (den * den * den);
}

double invariant_I3(const Jet3& j) {
  const double den = j.g1 - j.g * j.g;
  require_nonsingular(den, std::abs(j.g1) + j.g * j.g, "invariant_I3: g' = g^2");
  const double g2sq = j.g * j.g;
  const double num = j.g3 - 12.0 * j.g * j.g2 - 6.0 * j.g1 * j.g1 +
                     48.0 * g2sq * j.g1 - 24.0 * g2sq * g2sq;
  return num / (den * den);
}

std::pair<double, double> reduce_to_omega_psi(const Jet3& j) {
  require_nonsingular(j.g1, std::abs(j.g1), "reduce_to_omega_psi: g' = 0");
  require_nonsingular(j.g, std::abs(j.g), "reduce_to_omega_psi: g = 0");
  const double den = 2.0 * j.g1 * j.g1 - j.g * j.g2;
  require_nonsingular(den, 2.0 * j.g1 * j.g1 + std::abs(j.g * j.g2),
                      "reduce_to_omega_psi: 2 g'^2 = g g''");
  const double omega = j.g * j.g / j.g1;
  const double psi = j.g1 * j.g1 * j.g1 / (j.g * j.g * den);
  return {omega, psi};
}

std::pair<double, double> linearised_invariants(const LinCoeffs& c) {
  if (std::abs(c.q) < 1e-300) {
    throw SingularCoeffsError("linearised_invariants: q = 0");
  }
  const double u = c.q_s + 2.0 * c.p * c.q;
  const double I2 = -u * u / (c.q * c.q * c.q);
  const double I3 = -(c.q_ss + 2.0 * c.p_s * c.q + 5.0 * c.q_s * c.p +
                      6.0 * c.p * c.p * c.q) /
                    (c.q * c.q);
  return {I2, I3};
}

LinCoeffs tilde_coeffs(const LinCoeffs& c, const GaugeR& g) {
  LinCoeffs t;
  t.p = c.p - 2.0 * g.r;
  t.q = c.q - c.p * g.r + g.r * g.r - g.r_s;
  t.p_s = c.p_s - 2.0 * g.r_s;
  t.p_ss = c.p_ss - 2.0 * g.r_ss;
  t.q_s = c.q_s - c.p_s * g.r - c.p * g.r_s + 2.0 * g.r * g.r_s - g.r_ss;
  t.q_ss = c.q_ss - c.p_ss * g.r - 2.0 * c.p_s * g.r_s - c.p * g.r_ss +
           2.0 * g.r_s * g.r_s + 2.0 * g.r * g.r_ss - g.r_sss;
  return t;
}

LinCoeffs hypergeometric_lin_coeffs(const HgParams& hp, double s) {
  const double D = s * (1.0 - s);
  if (std::abs(D) < 1e-300) {
    throw PoleError("hypergeometric_lin_coeffs: s in {0, 1}");
  }
  const double Ds = 1.0 - 2.0 * s;
  const double Dss = -2.0;
  const double ab = hp.alpha * hp.beta;
  const double N = hp.gamma - (1.0 + hp.alpha + hp.beta) * s;
  const double Ns = -(1.0 + hp.alpha + hp.beta);

  LinCoeffs c;
  c.p = N / D;
  c.q = -ab / D;
  c.p_s = (Ns * D - N * Ds) / (D * D);
  c.p_ss = (-N * Dss * D - 2.0 * Ds * (Ns * D - N * Ds)) / (D * D * D);
  c.q_s = ab * Ds / (D * D);
  c.q_ss = ab * (Dss * D - 2.0 * Ds * Ds) / (D * D * D);
  return c;
}

Jet3 jet_from_linear(const LinCoeffs& c, double w, double w_s, double W0) {
  // Proof identities: g = w w_s / W, g' - g^2 = -q w^4/W^2,
  // g'' - 6 g g' + 4 g^3 = -(q_s + 2 p q) w^6/W^3,
  // g''' - 12 g g'' - 6 g'^2 + 48 g^2 g' - 24 g^4 = -(...) w^8/W^4.
  const double W = W0;
  const double g = w * w_s / W;
  const double w2 = w * w;
  const double ratio = w2 / W;
  const double g1 = g * g - c.q * ratio * ratio;
  const double g2 = 6.0 * g * g1 - 4.0 * g * g * g -
                    (c.q_s + 2.0 * c.p * c.q) * ratio * ratio * ratio;
  const double g3 = 12.0 * g * g2 + 6.0 * g1 * g1 - 48.0 * g * g * g1 +
                    24.0 * g * g * g * g -
                    (c.q_ss + 2.0 * c.p_s * c.q + 5.0 * c.q_s * c.p +
                     6.0 * c.p * c.p * c.q) *
                        ratio * ratio * ratio * ratio;
  return {g, g1, g2, g3};
}

}  // namespace linabel
