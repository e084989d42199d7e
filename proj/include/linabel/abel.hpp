// The two-parameter family A_{c1,c2} of first-kind Abel equations obtained by
// SL(2,R) symmetry reduction: right-hand side, hypergeometric linearisations,
// parametric general solutions, algebraic solutions, and the residual oracle
// used to verify that a parametric curve solves the equation.
#ifndef LINABEL_ABEL_HPP
#define LINABEL_ABEL_HPP

#include <boost/rational.hpp>
#include <functional>
#include <span>
#include <vector>

#include "linabel/invariants.hpp"
#include "linabel/specfun.hpp"

namespace linabel {

using Rational = boost::rational<long long>;

// Parameter pair selecting the equation A_{c1,c2}.
struct AbelParams {
  double c1;
  double c2;

  // Regular values: c1 != -3/2 and c2 != 0.
  bool regular() const;
};

// A point (omega, psi) of the reduced phase plane.
struct PhasePointOmegaPsi {
  double omega;
  double psi;
};

// Hypergeometric solution selector: w = a F(s) + b s^{1-gamma} F~(s) with the
// two Frobenius branches at s = 0.  For s < 0 the second branch is carried in
// its real form (-s)^{1-gamma} F~(s).
struct HgSolutionSpec {
  HgParams params;
  double a = 1.0;
  double b = 0.0;
};

// One sample of a parametric curve s -> (omega, psi).  When has_derivatives
// is set, omega_s and psi_s are analytic d/ds values.
struct CurveSample {
  double omega = 0.0;
  double psi = 0.0;
  double omega_s = 0.0;
  double psi_s = 0.0;
  bool has_derivatives = false;
};

using OmegaPsiCurve = std::function<CurveSample(double)>;

// psi_omega solved from the Abel equation A_{c1,c2}.
double abel_rhs(const AbelParams& ap, const PhasePointOmegaPsi& pt);

// Exact case data for one linearising hypergeometric family.
struct LinearisationCase {
  int case_index;            // 2, 3 or 4 in the four-case list
  Rational gamma;
  Rational alpha_plus_beta;
  Rational alpha_times_beta;
  bool roots_rational;       // (alpha, beta) split over the rationals
  Rational alpha;            // valid when roots_rational
  Rational beta;
};

// The three usable linearisation cases in exact rational arithmetic
// (case 1 is degenerate and omitted; cases 2 and 4 are s -> 1-s images of
// each other and both returned).
std::vector<LinearisationCase> hypergeometric_linearisations_exact(
    const Rational& c1, const Rational& c2);

// Double-precision triples, case index ascending, alpha >= beta within each.
std::vector<HgParams> hypergeometric_linearisations(const AbelParams& ap);

// Point of the parametric general solution at s (analytic derivatives
// included); formulas of the reduction map in terms of (w, w_s, p, q).
CurveSample parametric_sample(const HgSolutionSpec& spec, double s);
PhasePointOmegaPsi parametric_point(const HgSolutionSpec& spec, double s);

// Algebraic (constant-coefficient) solutions: w solves
// w_ss + w_s + (6+4c1)/c2 w = 0; mix (a, b) selects the branch combination.
struct AlgebraicMix {
  double a;
  double b;
};
AlgebraicMix default_algebraic_mix(const AbelParams& ap);
CurveSample algebraic_sample(const AbelParams& ap, double s, const AlgebraicMix& mix);
PhasePointOmegaPsi algebraic_point(const AbelParams& ap, double s, const AlgebraicMix& mix);

// Curve factories for residual verification.
OmegaPsiCurve hg_curve(const HgSolutionSpec& spec);
OmegaPsiCurve algebraic_curve(const AbelParams& ap, const AlgebraicMix& mix);

// max over the grid of |(dpsi/ds)/(domega/ds) - abel_rhs|; derivatives come
// from the curve when it supplies them, else from 5-point central
// differences at relative step 1e-6.
double residual_max(const AbelParams& ap, const OmegaPsiCurve& curve,
                    std::span<const double> s_grid);

}  // namespace linabel

#endif  // LINABEL_ABEL_HPP
