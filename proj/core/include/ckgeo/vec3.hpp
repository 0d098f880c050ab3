#pragma once

#include <array>
#include <string>

#include "ckgeo/errors.hpp"
#include "ckgeo/scalar.hpp"

namespace ck {

/// Homogeneous coordinate triple. Plain value type; zero vectors are legal
/// intermediates and rejected only at type boundaries that demand nonzero.
template <class S>
struct V3 {
  S x{}, y{}, z{};

  V3() = default;
  V3(S a, S b, S c) : x(std::move(a)), y(std::move(b)), z(std::move(c)) {}

  const S& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  S& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  bool is_zero() const {
    return scal<S>::is_zero(x) && scal<S>::is_zero(y) && scal<S>::is_zero(z);
  }

  friend V3 operator+(const V3& a, const V3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend V3 operator-(const V3& a, const V3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend V3 operator*(const S& s, const V3& v) { return {s * v.x, s * v.y, s * v.z}; }
  friend V3 operator*(const V3& v, const S& s) { return s * v; }
  V3 operator-() const { return {-x, -y, -z}; }

  friend bool operator==(const V3& a, const V3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }

  std::string str() const {
    return "(" + scal<S>::str(x) + ", " + scal<S>::str(y) + ", " + scal<S>::str(z) + ")";
  }
};

template <class S>
S dot(const V3<S>& a, const V3<S>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class S>
V3<S> cross(const V3<S>& a, const V3<S>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <class S>
S det3(const V3<S>& a, const V3<S>& b, const V3<S>& c) {
  return dot(a, cross(b, c));
}

/// sign of the highest-index nonzero coordinate (reverse lexicographic order
/// read from index 3 downward); 0 for the zero vector
template <class S>
int chi(const V3<S>& v) {
  if (int s = scal<S>::sign(v.z); s != 0) return s;
  if (int s = scal<S>::sign(v.y); s != 0) return s;
  return scal<S>::sign(v.x);
}

template <class S>
S sup_norm(const V3<S>& v) {
  S m = scal<S>::abs(v.x);
  if (scal<S>::abs(v.y) > m) m = scal<S>::abs(v.y);
  if (scal<S>::abs(v.z) > m) m = scal<S>::abs(v.z);
  return m;
}

/// scales to sup-norm 1 (float) or to coprime integer entries (rational),
/// with the chi-positive sign convention; canonical per projective class
inline V3<double> normalize_rep(const V3<double>& v) {
  double m = sup_norm(v);
  if (m == 0.0) return v;
  double s = (chi(v) < 0 ? -1.0 : 1.0) / m;
  return {v.x * s, v.y * s, v.z * s};
}

inline V3<Rat> normalize_rep(const V3<Rat>& v) {
  if (v.is_zero()) return v;
  mpz_class n = gcd(gcd(v.x.num(), v.y.num()), v.z.num());
  mpz_class d = lcm(lcm(v.x.den(), v.y.den()), v.z.den());
  if (n == 0) n = 1;
  Rat s{mpq_class(d, n)};
  if (chi(v) < 0) s = -s;
  return {v.x * s, v.y * s, v.z * s};
}

inline V3<QExt> normalize_rep(const V3<QExt>& v) {
  // field: scale by the first nonzero coordinate's inverse, chi-fixed
  for (int i = 0; i < 3; ++i) {
    if (!v[i].is_zero()) {
      QExt s = QExt(1) / v[i];
      if (chi(v) < 0) s = -s;
      return {v.x * s, v.y * s, v.z * s};
    }
  }
  return v;
}

template <class To, class From>
V3<To> vcast(const V3<From>& v) {
  return {To(v.x), To(v.y), To(v.z)};
}

inline V3<double> to_double(const V3<Rat>& v) {
  return {v.x.to_double(), v.y.to_double(), v.z.to_double()};
}
inline V3<double> to_double(const V3<QExt>& v) {
  return {v.x.to_double(), v.y.to_double(), v.z.to_double()};
}
inline const V3<double>& to_double(const V3<double>& v) { return v; }

/// exact on the rational backend; on the float backend both vectors are
/// scaled to sup-norm 1 first and the cross product is compared against eps
template <class S>
bool projectively_equal(const V3<S>& a, const V3<S>& b) {
  if (a.is_zero() || b.is_zero()) fail(errc::zero_vector, "projective equality of zero vector");
  if constexpr (scal<S>::exact) {
    return cross(a, b).is_zero();
  } else {
    V3<S> an = normalize_rep(a), bn = normalize_rep(b);
    return scal<S>::is_zero(sup_norm(cross(an, bn)));
  }
}

}  // namespace ck
