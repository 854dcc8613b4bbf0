#pragma once

// Closed forms written straight from the algebra, kept apart from the
// library so the tests compare two derivations.

#include <algorithm>
#include <cmath>
#include <vector>

namespace oracle {

// k x y / (k x y + (1-x)(1-y)); k = 1 gives neutral 1/2, k = 3 neutral 1/4.
inline double rational_uninorm(double k, double x, double y) {
  if ((x == 0.0 && y == 1.0) || (x == 1.0 && y == 0.0)) return 1.0;
  return k * x * y / (k * x * y + (1.0 - x) * (1.0 - y));
}

// Example implication: (1-x)y / ((1-x)y + x(1-y)).
inline double rational_implication(double x, double y) {
  return (1.0 - x) * y / ((1.0 - x) * y + x * (1.0 - y));
}

inline double sugeno(double lambda, double x) {
  return (1.0 - x) / (1.0 + lambda * x);
}

// 2^(-2^(-log2(-log2 x))) evaluated literally.
inline double powerlog(double x) {
  if (x == 0.0) return 1.0;
  if (x == 1.0) return 0.0;
  return std::exp2(-std::exp2(-std::log2(-std::log2(x))));
}

// u(n) = 2^(-2^n).
inline double u(int n) { return std::exp2(-std::exp2(n)); }

// Power-band uninorm in exponent coordinates: x = 2^-t with t in
// [2^n, 2^(n+1)), s = t / 2^n in [1,2). min of the pulled-back values is the
// max of the exponents; pushing forward multiplies by 2^(n+m).
inline double power_band(double x, double y) {
  const double tx = -std::log2(x);
  const double ty = -std::log2(y);
  const int n = static_cast<int>(std::floor(std::log2(tx)));
  const int m = static_cast<int>(std::floor(std::log2(ty)));
  const double s = std::max(std::ldexp(tx, -n), std::ldexp(ty, -m));
  return std::exp2(-std::ldexp(s, n + m));
}

// Band formulas of the ordinal sums of the two rational uninorms on ]1/4,3/4[.
inline double u3(double x, double y) {
  if (x > 0.25 && x < 0.75 && y > 0.25 && y < 0.75) {
    const double p = (x - 0.25) * (y - 0.25);
    return 0.25 + 0.5 * p / (p + (0.75 - x) * (0.75 - y));
  }
  return std::max(x, y) >= 0.75 ? std::max(x, y) : std::min(x, y);
}

inline double u4(double x, double y) {
  if (x > 0.25 && x < 0.75 && y > 0.25 && y < 0.75) {
    const double p = (x - 0.25) * (y - 0.25);
    return 0.25 + 3.0 * p / (6.0 * p + 2.0 * (0.75 - x) * (0.75 - y));
  }
  return std::max(x, y) >= 0.75 ? std::max(x, y) : std::min(x, y);
}

// The cut at 3/8 of the implication U3(1-x, y).
inline double u3u4_n2(double x) {
  return (x > 0.25 && x < 0.75) ? 3.0 / (16.0 * x) : 1.0 - x;
}

inline double drastic_band(double e, double x, double y) {
  if (std::max(x, y) == 1.0) return 1.0;
  if (x < e && y < e) return 0.0;
  if (x == e) return y;
  if (y == e) return x;
  if (x > e && y > e) return std::max(x, y);
  return std::min(x, y);
}

// Piecewise quadratic f and its closed iterates, n of any sign.
inline double quadratic_iterate(int n, double s) {
  const double p = std::exp2(n);
  if (s <= 0.25) return 0.25 * std::pow(4.0 * s, p);
  if (s < 0.75) return 0.25 + 0.5 * std::pow(2.0 * (s - 0.25), p);
  return 0.75 + 0.25 * std::pow(4.0 * (s - 0.75), p);
}

inline std::vector<double> uniform(int n) {
  std::vector<double> v;
  for (int i = 0; i <= n; ++i) v.push_back(static_cast<double>(i) / n);
  return v;
}

inline std::vector<double> interior(int n) {
  std::vector<double> v;
  for (int i = 1; i < n; ++i) v.push_back(static_cast<double>(i) / n);
  return v;
}

}  // namespace oracle
