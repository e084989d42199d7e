// First-order dual numbers: exact derivatives of composed closed-form
// expressions without symbolic differentiation or finite differences.
#ifndef LINABEL_DUAL_HPP
#define LINABEL_DUAL_HPP

#include <cmath>

namespace linabel {

struct Dual {
  double v = 0.0;  // value
  double d = 0.0;  // derivative w.r.t. the curve parameter

  Dual() = default;
  Dual(double value, double deriv = 0.0) : v(value), d(deriv) {}

  static Dual variable(double x) { return {x, 1.0}; }
};

inline Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
inline Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
inline Dual operator-(Dual a) { return {-a.v, -a.d}; }
inline Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
inline Dual operator/(Dual a, Dual b) {
  const double inv = 1.0 / b.v;
  const double q = a.v * inv;
  return {q, (a.d - q * b.d) * inv};
}

inline Dual operator+(Dual a, double c) { return {a.v + c, a.d}; }
inline Dual operator+(double c, Dual a) { return {a.v + c, a.d}; }
inline Dual operator-(Dual a, double c) { return {a.v - c, a.d}; }
inline Dual operator-(double c, Dual a) { return {c - a.v, -a.d}; }
inline Dual operator*(Dual a, double c) { return {a.v * c, a.d * c}; }
inline Dual operator*(double c, Dual a) { return {a.v * c, a.d * c}; }
inline Dual operator/(Dual a, double c) { return {a.v / c, a.d / c}; }
inline Dual operator/(double c, Dual a) {
  const double inv = 1.0 / a.v;
  return {c * inv, -c * a.d * inv * inv};
}

inline Dual sqrt(Dual a) {
  const double r = std::sqrt(a.v);
  return {r, a.d / (2.0 * r)};
}
inline Dual exp(Dual a) {
  const double e = std::exp(a.v);
  return {e, a.d * e};
}
inline Dual log(Dual a) { return {std::log(a.v), a.d / a.v}; }
inline Dual pow(Dual a, double p) {
  const double f = std::pow(a.v, p);
  return {f, p * std::pow(a.v, p - 1.0) * a.d};
}
inline Dual abs(Dual a) { return a.v < 0.0 ? -a : a; }

}  // namespace linabel

#endif  // LINABEL_DUAL_HPP
