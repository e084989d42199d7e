#include "linabel/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "linabel/errors.hpp"

namespace linabel {
namespace {

using ld = long double;

constexpr ld kPi = 3.14159265358979323846264338327950288L;
constexpr double kIntTol = 1e-9;  // distance to the nearest integer
constexpr int kMaxSeriesTerms = 200000;

bool is_nonpositive_integer(double x, double* which = nullptr) {
  const double r = std::round(x);
  if (r <= 0.0 && std::abs(x - r) < kIntTol) {
    if (which) *which = r;
    return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Gamma, reciprocal Gamma, digamma (long double kernels)
// ---------------------------------------------------------------------------

// Spouge's approximation, a = 25: error bound ~1e-21, no tabulated magic
// constants.  Valid for x >= 0.5; reflection handles the rest.
ld gamma_positive_ld(ld x) {
  constexpr int kA = 25;
  static ld coeff[kA];
  static const bool init = [] {
    ld factorial = 1.0L;
    for (int k = 1; k < kA; ++k) {
      coeff[k] = ((k % 2 == 1) ? 1.0L : -1.0L) *
                 std::pow(static_cast<ld>(kA - k), k - 0.5L) *
                 std::exp(static_cast<ld>(kA - k)) / factorial;
      factorial *= k;
    }
    return true;
  }();
  (void)init;
  const ld z = x - 1.0L;
  ld acc = std::sqrt(2.0L * kPi);
  for (int k = 1; k < kA; ++k) acc += coeff[k] / (z + k);
  return acc * std::exp(-(z + kA)) * std::pow(z + kA, z + 0.5L);
}

ld gamma_ld(ld x) {
  if (x >= 0.5L) return gamma_positive_ld(x);
  const ld s = std::sin(kPi * x);  // Gamma(x)Gamma(1-x) = pi/sin(pi x)
  return kPi / (s * gamma_positive_ld(1.0L - x));
}

// 1/Gamma(x); exactly zero at the poles.
ld rgamma_ld(ld x) {
  if (x >= 0.5L) return 1.0L / gamma_positive_ld(x);
  return std::sin(kPi * x) * gamma_positive_ld(1.0L - x) / kPi;
}

// Recurrence up to x >= 12, Bernoulli tail; reflection below 1/2.
ld digamma_ld(ld x) {
  if (x < 0.5L) return digamma_ld(1.0L - x) - kPi / std::tan(kPi * x);
  ld acc = 0.0L;
  while (x < 12.0L) {
    acc -= 1.0L / x;
    x += 1.0L;
  }
  const ld inv = 1.0L / x;
  const ld inv2 = inv * inv;
  const ld tail = inv2 * (1.0L / 12.0L -
                  inv2 * (1.0L / 120.0L -
                  inv2 * (1.0L / 252.0L -
                  inv2 * (1.0L / 240.0L -
                  inv2 * (1.0L / 132.0L -
                  inv2 * (691.0L / 32760.0L -
                  inv2 * (1.0L / 12.0L)))))));
  return acc + std::log(x) - 0.5L * inv - tail;
}

// ---------------------------------------------------------------------------
// 2F1 kernels
// ---------------------------------------------------------------------------

// Power series; nmax >= 0 sums the terminating polynomial exactly.
ld series_2f1(ld a, ld b, ld c, ld x, int nmax = -1) {
  ld term = 1.0L;
  ld sum = 1.0L;
  const int limit = nmax >= 0 ? nmax : kMaxSeriesTerms;
  for (int n = 0; n < limit; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * x;
    sum += term;
    if (nmax < 0 &&
        std::abs(term) <= std::numeric_limits<ld>::epsilon() * std::abs(sum)) {
      return sum;
    }
  }
  if (nmax >= 0) return sum;
  throw ConvergenceError("2F1 series did not converge within the term budget");
}

// Smallest n >= 0 with (a)_{n+1} = 0 or (b)_{n+1} = 0, else -1.
int terminating_index(double a, double b) {
  double na, nb;
  const bool ta = is_nonpositive_integer(a, &na);
  const bool tb = is_nonpositive_integer(b, &nb);
  if (ta && tb) return static_cast<int>(-std::max(na, nb));
  if (ta) return static_cast<int>(-na);
  if (tb) return static_cast<int>(-nb);
  return -1;
}

// Pfaff: 2F1(a,b;c;x) = (1-x)^{-a} 2F1(a, c-b; c; x/(x-1)).
ld pfaff_2f1(ld a, ld b, ld c, ld x) {
  return std::pow(1.0L - x, -a) * series_2f1(a, c - b, c, x / (x - 1.0L));
}

// Generic x -> 1/x connection (a - b not an integer).
ld inf_connection_generic(ld a, ld b, ld c, ld x) {
  const ld ix = 1.0L / x;
  const ld t1 = gamma_ld(b - a) * rgamma_ld(b) * rgamma_ld(c - a) *
                std::pow(-x, -a) *
                series_2f1(a, a - c + 1.0L, a - b + 1.0L, ix);
  const ld t2 = gamma_ld(a - b) * rgamma_ld(a) * rgamma_ld(c - b) *
                std::pow(-x, -b) *
                series_2f1(b, b - c + 1.0L, b - a + 1.0L, ix);
  return gamma_ld(c) * (t1 + t2);
}

// Logarithmic x -> 1/x connection for b = a + m, integer m >= 0:
//
//   2F1(a,a+m;c;x) = Gamma(c) (-x)^{-a} *
//     [ 1/Gamma(a+m) sum_{k=0}^{m-1} (a)_k (m-k-1)!/(k! Gamma(c-a-k)) x^{-k}
//       + x^{-m}/Gamma(a) sum_{k>=0} (a+m)_k (-1)^k x^{-k} / (k!(k+m)!) *
//         ( [ln(-x) + psi(k+1) + psi(k+m+1) - psi(a+m+k)] / Gamma(c-a-m-k)
//           - psi(c-a-m-k)/Gamma(c-a-m-k) ) ]
//
// psi/Gamma at a pole -n has the finite limit (-1)^{n+1} n!.
ld inf_connection_integer(ld a, ld c, int m, ld x) {
  const ld ix = 1.0L / x;
  const ld lg = std::log(-x);

  ld fin = 0.0L;
  {
    ld poch = 1.0L;   // (a)_k
    ld kfact = 1.0L;  // k!
    ld xk = 1.0L;     // x^{-k}
    for (int k = 0; k < m; ++k) {
      ld f = 1.0L;  // (m-k-1)!
      for (int j = 2; j <= m - k - 1; ++j) f *= j;
      fin += poch * f / kfact * rgamma_ld(c - a - k) * xk;
      poch *= a + k;
      kfact *= k + 1;
      xk *= ix;
    }
    fin *= rgamma_ld(a + m);
  }

  ld logsum = 0.0L;
  {
    ld pochm = 1.0L;  // (a+m)_k
    ld kf = 1.0L;     // k!
    ld kmf = 1.0L;    // (k+m)!
    for (int j = 2; j <= m; ++j) kmf *= j;
    ld xs = 1.0L;     // (-1)^k x^{-k}
    for (int k = 0; k < kMaxSeriesTerms; ++k) {
      const ld carg = c - a - m - k;
      const ld rg = rgamma_ld(carg);
      ld bracket = rg * (lg + digamma_ld(k + 1.0L) + digamma_ld(k + m + 1.0L) -
                         digamma_ld(a + m + k));
      double pole;
      if (is_nonpositive_integer(static_cast<double>(carg), &pole)) {
        const int n = static_cast<int>(-pole);
        ld nf = 1.0L;
        for (int j = 2; j <= n; ++j) nf *= j;
        bracket -= ((n % 2 == 0) ? -nf : nf);  // -lim psi/Gamma = -(-1)^{n+1} n!
      } else {
        bracket -= rg * digamma_ld(carg);
      }
      const ld term = pochm / (kf * kmf) * xs * bracket;
      logsum += term;
      if (k > 2 &&
          std::abs(term) <= std::numeric_limits<ld>::epsilon() * std::abs(logsum)) {
        break;
      }
      pochm *= a + m + k;
      kf *= k + 1;
      kmf *= k + m + 1;
      xs *= -ix;
    }
    // signed x^{-m} = (-1)^m (-x)^{-m} for x < 0
    logsum *= rgamma_ld(a) * std::pow(-x, static_cast<ld>(-m)) *
              ((m % 2 == 1) ? -1.0L : 1.0L);
  }

  return gamma_ld(c) * std::pow(-x, -a) * (fin + logsum);
}

ld hyp2f1_ld(ld a, ld b, ld c, ld x) {
  if (x == 0.0L) return 1.0L;
  if (x >= -0.5L) return series_2f1(a, b, c, x);  // converges for x < 1
  if (x >= -1.0L) return pfaff_2f1(a, b, c, x);
  const double diff = static_cast<double>(a - b);
  const double rounded = std::round(diff);
  if (std::abs(diff - rounded) < kIntTol) {
    const int m = static_cast<int>(std::abs(rounded));
    const ld lo = (rounded >= 0.0) ? b : a;  // so that {lo, lo+m} = {a, b}
    return inf_connection_integer(lo, c, m, x);
  }
  return inf_connection_generic(a, b, c, x);
}

void validate_params(const HgParams& p) {
  if (is_nonpositive_integer(p.gamma)) {
    throw ParameterError("2F1: gamma is a non-positive integer");
  }
}

}  // namespace

double gauss_2f1(const HgParams& p, double x) {
  validate_params(p);
  const int n = terminating_index(p.alpha, p.beta);
  if (n >= 0) {
    return static_cast<double>(series_2f1(p.alpha, p.beta, p.gamma, x, n));
  }
  if (x >= 1.0) {
    throw DomainError("2F1: x >= 1 and the series does not terminate");
  }
  return static_cast<double>(hyp2f1_ld(p.alpha, p.beta, p.gamma, x));
}

double gauss_2f1_derivative(const HgParams& p, double x) {
  validate_params(p);
  if (p.alpha == 0.0 || p.beta == 0.0) return 0.0;
  const HgParams up{p.alpha + 1.0, p.beta + 1.0, p.gamma + 1.0};
  return p.alpha * p.beta / p.gamma * gauss_2f1(up, x);
}

double gauss_2f1_second_derivative(const HgParams& p, double x) {
  validate_params(p);
  if (p.alpha == 0.0 || p.beta == 0.0) return 0.0;
  const HgParams up{p.alpha + 2.0, p.beta + 2.0, p.gamma + 2.0};
  return p.alpha * p.beta / p.gamma * (p.alpha + 1.0) * (p.beta + 1.0) /
         (p.gamma + 1.0) * gauss_2f1(up, x);
}

Dual gauss_2f1(const HgParams& p, Dual x) {
  return {gauss_2f1(p, x.v), gauss_2f1_derivative(p, x.v) * x.d};
}

double complete_elliptic_K(double k) {
  if (k < 0.0 || k >= 1.0) {
    throw DomainError("complete_elliptic_K: modulus must satisfy 0 <= k < 1");
  }
  ld a = 1.0L;
  ld b = std::sqrt((1.0L - static_cast<ld>(k)) * (1.0L + static_cast<ld>(k)));
  while (std::abs(a - b) > 2.0L * std::numeric_limits<ld>::epsilon() * a) {
    const ld an = 0.5L * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return static_cast<double>(kPi / (a + b));
}

JacobiSnCnDn jacobi_sn_cn_dn(double u, double k) {
  if (k < 0.0 || k > 1.0) {
    throw DomainError("jacobi: modulus must satisfy 0 <= k <= 1");
  }
  if (k == 1.0) {
    const double c = 1.0 / std::cosh(u);
    return {std::tanh(u), c, c};
  }
  if (k == 0.0) return {std::sin(u), std::cos(u), 1.0};

  // Reduce u modulo the dn period 2K; sn and cn flip sign on odd shifts.
  ld x = u;
  ld sign = 1.0L;
  {
    const ld twoK = 2.0L * static_cast<ld>(complete_elliptic_K(k));
    const ld n = std::floor(x / twoK + 0.5L);
    x -= n * twoK;
    if (std::fabs(std::fmod(n, 2.0L)) == 1.0L) sign = -1.0L;
  }

  // Descending Landen / AGM scale (Abramowitz-Stegun 16.4).
  constexpr int kDepth = 24;
  ld am[kDepth], cm[kDepth];
  ld a = 1.0L;
  ld b = std::sqrt((1.0L - static_cast<ld>(k)) * (1.0L + static_cast<ld>(k)));
  ld cc = k;
  int n = 0;
  am[0] = a;
  cm[0] = cc;
  while (std::abs(cc) > std::numeric_limits<ld>::epsilon() * a && n + 1 < kDepth) {
    const ld an = 0.5L * (a + b);
    cc = 0.5L * (a - b);
    b = std::sqrt(a * b);
    a = an;
    ++n;
    am[n] = a;
    cm[n] = cc;
  }

  ld phi = std::ldexp(am[n] * x, n);
  ld phi_prev = phi;  // phi_1 by the end of the recurrence
  for (int i = n; i >= 1; --i) {
    ld arg = cm[i] / am[i] * std::sin(phi);
    if (arg > 1.0L) arg = 1.0L;
    if (arg < -1.0L) arg = -1.0L;
    phi_prev = phi;
    phi = 0.5L * (phi + std::asin(arg));
  }
  const ld sn = std::sin(phi);
  const ld cn = std::cos(phi);
  ld dn;
  if (n >= 1) {
    dn = cn / std::cos(phi_prev - phi);
  } else {
    dn = std::sqrt(1.0L - static_cast<ld>(k) * static_cast<ld>(k) * sn * sn);
  }
  return {static_cast<double>(sign * sn), static_cast<double>(sign * cn),
          static_cast<double>(dn)};
}

double jacobi_dn(double u, double k) { return jacobi_sn_cn_dn(u, k).dn; }

double gamma_fn(double x) {
  if (is_nonpositive_integer(x)) {
    throw PoleError("gamma_fn: pole at non-positive integer");
  }
  return static_cast<double>(gamma_ld(static_cast<ld>(x)));
}

double digamma(double x) {
  if (is_nonpositive_integer(x)) {
    throw PoleError("digamma: pole at non-positive integer");
  }
  return static_cast<double>(digamma_ld(static_cast<ld>(x)));
}

}  // namespace linabel
