#pragma once

#include <cmath>
#include <vector>

#include "ckgeo/quadext.hpp"
#include "ckgeo/scalar.hpp"

namespace ck {

/// dense polynomial in one variable, ascending coefficients
template <class S>
struct Poly {
  std::vector<S> c;

  int deg() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
      if (!scal<S>::is_zero(c[i])) return i;
    return -1;
  }
  void trim() {
    while (!c.empty() && scal<S>::is_zero(c.back())) c.pop_back();
  }
  S eval(const S& x) const {
    S acc(0);
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) acc = acc * x + c[i];
    return acc;
  }
  bool is_zero() const { return deg() < 0; }
};

/// remainder of a by b over a field
template <class S>
Poly<S> poly_mod(Poly<S> a, const Poly<S>& b) {
  a.trim();
  int db = b.deg();
  while (a.deg() >= db && db >= 0) {
    int da = a.deg();
    S f = a.c[da] / b.c[db];
    for (int i = 0; i <= db; ++i) a.c[da - db + i] = a.c[da - db + i] - f * b.c[i];
    a.c[da] = S(0);
    a.trim();
  }
  return a;
}

template <class S>
Poly<S> poly_gcd(Poly<S> a, Poly<S> b) {
  a.trim();
  b.trim();
  while (!b.is_zero()) {
    Poly<S> r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.deg() >= 0) {
    S lead = a.c[a.deg()];
    for (auto& x : a.c) x = x / lead;
  }
  return a;
}

/// real roots of a cubic with double coefficients (ascending), deduplicated
/// by eps-clustering relative to the coefficient scale
std::vector<double> cubic_real_roots(double c0, double c1, double c2, double c3);

inline std::vector<double> cubic_real_roots(double c0, double c1, double c2, double c3) {
  std::vector<double> roots;
  auto scale = std::max({std::abs(c0), std::abs(c1), std::abs(c2), std::abs(c3)});
  if (scale == 0) return roots;
  if (std::abs(c3) <= 1e-14 * scale) {
    // quadratic (or lower)
    if (std::abs(c2) <= 1e-14 * scale) {
      if (std::abs(c1) > 1e-14 * scale) roots.push_back(-c0 / c1);
      return roots;
    }
    double disc = c1 * c1 - 4 * c2 * c0;
    if (disc < 0) return roots;
    double sq = std::sqrt(disc);
    roots.push_back((-c1 + sq) / (2 * c2));
    roots.push_back((-c1 - sq) / (2 * c2));
    return roots;
  }
  // depressed cubic t^3 + p t + q, x = t - c2/(3 c3)
  double a = c2 / c3, b = c1 / c3, c = c0 / c3;
  double p = b - a * a / 3.0;
  double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  double shift = -a / 3.0;
  double disc = -4.0 * p * p * p - 27.0 * q * q;
  if (disc >= 0) {
    // three real roots (trigonometric form)
    if (std::abs(p) < 1e-300) {
      roots.push_back(shift + std::cbrt(-q));
    } else {
      double m = 2.0 * std::sqrt(-p / 3.0);
      double arg = 3.0 * q / (p * m);
      arg = std::min(1.0, std::max(-1.0, arg));
      double th = std::acos(arg) / 3.0;
      for (int k = 0; k < 3; ++k)
        roots.push_back(shift + m * std::cos(th - 2.0 * M_PI * k / 3.0));
    }
  } else {
    double sq = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    double u = std::cbrt(-q / 2.0 + sq), v = std::cbrt(-q / 2.0 - sq);
    roots.push_back(shift + u + v);
  }
  // Newton polish
  for (auto& r : roots) {
    for (int it = 0; it < 3; ++it) {
      double f = ((c3 * r + c2) * r + c1) * r + c0;
      double df = (3 * c3 * r + 2 * c2) * r + c1;
      if (std::abs(df) > 1e-300) r -= f / df;
    }
  }
  return roots;
}

/// best-effort exact rational reconstruction of a numeric value, verified by
/// the caller; continued fraction with bounded denominator
inline std::optional<Rat> reconstruct_rational(double x, unsigned long max_den = 1ul << 40) {
  if (!std::isfinite(x)) return std::nullopt;
  double y = x;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(y);
    if (fl > 9e17 || fl < -9e17) return std::nullopt;
    long long a = static_cast<long long>(fl);
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 < 0 || static_cast<unsigned long>(q2) > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = y - fl;
    if (frac < 1e-15) break;
    y = 1.0 / frac;
  }
  if (q1 == 0) return std::nullopt;
  return Rat(mpq_class(mpz_class(static_cast<long>(p1)), mpz_class(static_cast<long>(q1))));
}

}  // namespace ck
