#include "linabel/abel.hpp"

#include <cmath>
#include <string>

#include "linabel/dual.hpp"
#include "linabel/errors.hpp"

namespace linabel {
namespace {

constexpr double kPoleTol = 1e-13;

// Quadratic X^2 - sum X + prod = 0 over the rationals; true when the
// discriminant is a perfect rational square.
bool rational_roots(const Rational& sum, const Rational& prod, Rational* hi,
                    Rational* lo) {
  const Rational disc = sum * sum - 4 * prod;
  if (disc < Rational(0)) return false;
  auto isqrt = [](long long v, long long* root) {
    if (v < 0) return false;
    const long long r = std::llround(std::sqrt(static_cast<double>(v)));
    for (long long c = std::max(0LL, r - 2); c <= r + 2; ++c) {
      if (c * c == v) {
        *root = c;
        return true;
      }
    }
    return false;
  };
  long long rn, rd;
  if (!isqrt(disc.numerator(), &rn) || !isqrt(disc.denominator(), &rd)) {
    return false;
  }
  const Rational root(rn, rd);
  *hi = (sum + root) / 2;
  *lo = (sum - root) / 2;
  return true;
}

// Shared dual pipeline: from (w, w_s) duals plus coefficient duals produce
// an (omega, psi) sample with analytic s-derivatives via Eq-(w)-style
// formulas omega = w_s^2/(w_s^2 - q w^2), psi = (w_s^2 - q w^2)^3 / (...).
CurveSample reduction_sample(Dual w, Dual ws, Dual p, Dual q, Dual qs) {
  const Dual w2 = w * w;
  const Dual ws2 = ws * ws;
  const Dual denom_omega = ws2 - q * w2;
  if (std::abs(denom_omega.v) <
      kPoleTol * (std::abs(ws2.v) + std::abs(q.v * w2.v) + 1.0)) {
    throw PoleError("parametric point: w_s^2 - q w^2 = 0");
  }
  if (std::abs(w.v) < kPoleTol || std::abs(ws.v) < kPoleTol) {
    throw PoleError("parametric point: w = 0 or w_s = 0");
  }
  const Dual cubic = 2.0 * q * ws2 + (qs + 2.0 * p * q) * w * ws + 2.0 * q * q * w2;
  if (std::abs(cubic.v) < kPoleTol * (std::abs(2.0 * q.v * ws2.v) +
                                      std::abs((qs.v + 2.0 * p.v * q.v) * w.v * ws.v) +
                                      std::abs(2.0 * q.v * q.v * w2.v) + 1.0)) {
    throw PoleError("parametric point: psi denominator vanishes");
  }
  const Dual omega = ws2 / denom_omega;
  const Dual psi = denom_omega * denom_omega * denom_omega / (w2 * ws2 * cubic);
  CurveSample out;
  out.omega = omega.v;
  out.psi = psi.v;
  out.omega_s = omega.d;
  out.psi_s = psi.d;
  out.has_derivatives = true;
  return out;
}

}  // namespace

bool AbelParams::regular() const {
  return std::abs(c1 + 1.5) > 1e-12 && std::abs(c2) > 1e-12;
}

double abel_rhs(const AbelParams& ap, const PhasePointOmegaPsi& pt) {
  const double w = pt.omega;
  if (std::abs(w) < kPoleTol || std::abs(w - 1.0) < kPoleTol) {
    throw PoleError("abel_rhs: omega in {0, 1}");
  }
  const double t = 2.0 * w - 1.0;
  const double f3 =
      w * (w - 1.0) * (4.0 * ap.c1 * t * t - ap.c2 * w * (w - 1.0) + 6.0 * t * t);
  const double f2 = -(4.0 * ap.c1 * t + 12.0 * w - 7.0);
  const double f1 = -(3.0 * w - ap.c1 - 3.0) / (w * (w - 1.0));
  return ((f3 * pt.psi + f2) * pt.psi + f1) * pt.psi;
}

std::vector<LinearisationCase> hypergeometric_linearisations_exact(
    const Rational& c1, const Rational& c2) {
  if (c1 == Rational(-3, 2) || c2 == Rational(0)) {
    throw SingularParamsError(
        "hypergeometric_linearisations: singular parameters c1 = -3/2 or c2 = 0");
  }
  const Rational four_c1_6 = 4 * c1 + 6;
  const Rational two_c1_3 = 2 * c1 + 3;
  std::vector<LinearisationCase> out;
  auto push = [&](int idx, Rational gamma, Rational sum, Rational prod) {
    LinearisationCase lc;
    lc.case_index = idx;
    lc.gamma = gamma;
    lc.alpha_plus_beta = sum;
    lc.alpha_times_beta = prod;
    lc.roots_rational = rational_roots(sum, prod, &lc.alpha, &lc.beta);
    out.push_back(lc);
  };
  push(2, Rational(1, 2), Rational(1) / four_c1_6, Rational(1) / (c2 * four_c1_6));
  push(3, (c1 + 2) / two_c1_3, Rational(1) / two_c1_3, Rational(2) / (c2 * two_c1_3));
  push(4, (c1 + 2) / two_c1_3, Rational(1) / four_c1_6, Rational(1) / (c2 * four_c1_6));
  return out;
}

std::vector<HgParams> hypergeometric_linearisations(const AbelParams& ap) {
  if (!ap.regular()) {
    throw SingularParamsError(
        "hypergeometric_linearisations: singular parameters c1 = -3/2 or c2 = 0");
  }
  const double cases[3][3] = {
      {0.5, 1.0 / (4.0 * ap.c1 + 6.0), 1.0 / (ap.c2 * (4.0 * ap.c1 + 6.0))},
      {(ap.c1 + 2.0) / (2.0 * ap.c1 + 3.0), 1.0 / (2.0 * ap.c1 + 3.0),
       2.0 / (ap.c2 * (2.0 * ap.c1 + 3.0))},
      {(ap.c1 + 2.0) / (2.0 * ap.c1 + 3.0), 1.0 / (4.0 * ap.c1 + 6.0),
       1.0 / (ap.c2 * (4.0 * ap.c1 + 6.0))},
  };
  std::vector<HgParams> out;
  for (const auto& c : cases) {
    const double sum = c[1];
    const double prod = c[2];
    const double disc = sum * sum - 4.0 * prod;
    if (disc < 0.0) {
      throw ComplexParamsError(
          "hypergeometric_linearisations: complex (alpha, beta)");
    }
    const double root = std::sqrt(disc);
    out.push_back({(sum + root) / 2.0, (sum - root) / 2.0, c[0]});
  }
  return out;
}

CurveSample parametric_sample(const HgSolutionSpec& spec, double s) {
  const HgParams& hp = spec.params;
  if (s >= 1.0) throw DomainError("parametric_sample: s >= 1");
  if (std::abs(s) < 1e-300) throw PoleError("parametric_sample: s = 0");
  if (spec.a == 0.0 && spec.b == 0.0) {
    throw ParameterError("parametric_sample: (a, b) = (0, 0)");
  }
  const LinCoeffs lc = hypergeometric_lin_coeffs(hp, s);

  double w = 0.0, ws = 0.0;
  if (spec.a != 0.0) {
    w += spec.a * gauss_2f1(hp, s);
    ws += spec.a * gauss_2f1_derivative(hp, s);
  }
  if (spec.b != 0.0) {
    // Second Frobenius branch sigma^{1-gamma} F~(s), sigma = |s|; a real
    // solution on either side of s = 0.  Degenerate for gamma = 1.
    if (std::abs(hp.gamma - 1.0) < 1e-9) {
      throw ParameterError(
          "parametric_sample: second Frobenius branch is logarithmic for gamma = 1");
    }
    const HgParams h2{hp.alpha - hp.gamma + 1.0, hp.beta - hp.gamma + 1.0,
                      2.0 - hp.gamma};
    const double sig = std::abs(s);
    const double pref = std::pow(sig, 1.0 - hp.gamma);
    const double dpref =
        (1.0 - hp.gamma) * std::pow(sig, -hp.gamma) * (s < 0.0 ? -1.0 : 1.0);
    const double F2 = gauss_2f1(h2, s);
    const double F2d = gauss_2f1_derivative(h2, s);
    w += spec.b * pref * F2;
    ws += spec.b * (dpref * F2 + pref * F2d);
  }

  const Dual wD{w, ws};
  const Dual wsD{ws, -lc.p * ws - lc.q * w};
  return reduction_sample(wD, wsD, {lc.p, lc.p_s}, {lc.q, lc.q_s},
                          {lc.q_s, lc.q_ss});
}

PhasePointOmegaPsi parametric_point(const HgSolutionSpec& spec, double s) {
  const CurveSample cs = parametric_sample(spec, s);
  return {cs.omega, cs.psi};
}

AlgebraicMix default_algebraic_mix(const AbelParams& ap) {
  // Per-example choices: a=0, b=1 for the double-root equation (Examples 1
  // and 3); a=1, b=1 for the split-root equations (Examples 2 and 4).
  const double q0 = (6.0 + 4.0 * ap.c1) / ap.c2;
  return (std::abs(1.0 - 4.0 * q0) < 1e-12) ? AlgebraicMix{0.0, 1.0}
                                            : AlgebraicMix{1.0, 1.0};
}

CurveSample algebraic_sample(const AbelParams& ap, double s,
                             const AlgebraicMix& mix) {
  if (!ap.regular()) {
    throw SingularParamsError("algebraic_sample: singular Abel parameters");
  }
  const double q0 = (6.0 + 4.0 * ap.c1) / ap.c2;
  const double disc = 1.0 - 4.0 * q0;
  double w, ws;
  if (std::abs(disc) < 1e-12) {
    // double root -1/2: w = (a + b s) e^{-s/2}
    const double e = std::exp(-0.5 * s);
    w = (mix.a + mix.b * s) * e;
    ws = (mix.b - 0.5 * (mix.a + mix.b * s)) * e;
  } else if (disc > 0.0) {
    const double root = std::sqrt(disc);
    const double l1 = 0.5 * (-1.0 + root);
    const double l2 = 0.5 * (-1.0 - root);
    const double e1 = std::exp(l1 * s);
    const double e2 = std::exp(l2 * s);
    w = mix.a * e1 + mix.b * e2;
    ws = mix.a * l1 * e1 + mix.b * l2 * e2;
  } else {
    throw ComplexParamsError("algebraic_sample: oscillatory linear equation");
  }
  const Dual wD{w, ws};
  const Dual wsD{ws, -ws - q0 * w};
  return reduction_sample(wD, wsD, {1.0, 0.0}, {q0, 0.0}, {0.0, 0.0});
}

PhasePointOmegaPsi algebraic_point(const AbelParams& ap, double s,
                                   const AlgebraicMix& mix) {
  const CurveSample cs = algebraic_sample(ap, s, mix);
  return {cs.omega, cs.psi};
}

OmegaPsiCurve hg_curve(const HgSolutionSpec& spec) {
  return [spec](double s) { return parametric_sample(spec, s); };
}

OmegaPsiCurve algebraic_curve(const AbelParams& ap, const AlgebraicMix& mix) {
  return [ap, mix](double s) { return algebraic_sample(ap, s, mix); };
}

double residual_max(const AbelParams& ap, const OmegaPsiCurve& curve,
                    std::span<const double> s_grid) {
  if (s_grid.size() < 3) {
    throw GridError("residual_max: need at least 3 grid points");
  }
  double worst = 0.0;
  for (const double s : s_grid) {
    const CurveSample c = curve(s);
    double domega, dpsi;
    if (c.has_derivatives) {
      domega = c.omega_s;
      dpsi = c.psi_s;
    } else {
      const double h = 1e-6 * std::max(std::abs(s), 1.0);
      auto omega_at = [&](double t) { return curve(t).omega; };
      auto psi_at = [&](double t) { return curve(t).psi; };
      auto d5 = [&](auto&& f) {
        return (-f(s + 2.0 * h) + 8.0 * f(s + h) - 8.0 * f(s - h) +
                f(s - 2.0 * h)) /
               (12.0 * h);
      };
      domega = d5(omega_at);
      dpsi = d5(psi_at);
    }
    if (domega == 0.0) {
      throw PoleError("residual_max: domega/ds = 0 at a grid point");
    }
    const double resid =
        std::abs(dpsi / domega - abel_rhs(ap, {c.omega, c.psi}));
    worst = std::max(worst, resid);
  }
  return worst;
}

}  // namespace linabel
