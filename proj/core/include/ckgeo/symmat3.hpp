#pragma once

#include "ckgeo/vec3.hpp"

namespace ck {

/// Symmetric 3x3 matrix: metric tensors and conic matrices.
template <class S>
struct Sym3 {
  S m11{}, m12{}, m13{}, m22{}, m23{}, m33{};

  Sym3() = default;
  Sym3(S a11, S a12, S a13, S a22, S a23, S a33)
      : m11(std::move(a11)), m12(std::move(a12)), m13(std::move(a13)),
        m22(std::move(a22)), m23(std::move(a23)), m33(std::move(a33)) {}

  static Sym3 identity() { return {S(1), S(0), S(0), S(1), S(0), S(1)}; }
  static Sym3 diag(S a, S b, S c) { return {std::move(a), S(0), S(0), std::move(b), S(0), std::move(c)}; }

  const S& at(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i == 0) return j == 0 ? m11 : (j == 1 ? m12 : m13);
    if (i == 1) return j == 1 ? m22 : m23;
    return m33;
  }

  V3<S> mv(const V3<S>& v) const {
    return {m11 * v.x + m12 * v.y + m13 * v.z,
            m12 * v.x + m22 * v.y + m23 * v.z,
            m13 * v.x + m23 * v.y + m33 * v.z};
  }

  /// bilinear form u [M] v
  S bil(const V3<S>& u, const V3<S>& v) const { return dot(u, mv(v)); }
  /// quadratic form v [M] v
  S q(const V3<S>& v) const { return bil(v, v); }

  S det() const {
    return m11 * (m22 * m33 - m23 * m23) - m12 * (m12 * m33 - m23 * m13) +
           m13 * (m12 * m23 - m22 * m13);
  }

  /// adjugate: inverse up to the factor det; symmetric again
  Sym3 adjugate() const {
    return {m22 * m33 - m23 * m23, m13 * m23 - m12 * m33, m12 * m23 - m13 * m22,
            m11 * m33 - m13 * m13, m12 * m13 - m11 * m23, m11 * m22 - m12 * m12};
  }

  bool is_zero() const {
    return scal<S>::is_zero(m11) && scal<S>::is_zero(m12) && scal<S>::is_zero(m13) &&
           scal<S>::is_zero(m22) && scal<S>::is_zero(m23) && scal<S>::is_zero(m33);
  }

  S sup_entry() const {
    S m = scal<S>::abs(m11);
    for (const S* e : {&m12, &m13, &m22, &m23, &m33})
      if (scal<S>::abs(*e) > m) m = scal<S>::abs(*e);
    return m;
  }

  friend Sym3 operator+(const Sym3& a, const Sym3& b) {
    return {a.m11 + b.m11, a.m12 + b.m12, a.m13 + b.m13, a.m22 + b.m22, a.m23 + b.m23, a.m33 + b.m33};
  }
  friend Sym3 operator-(const Sym3& a, const Sym3& b) {
    return {a.m11 - b.m11, a.m12 - b.m12, a.m13 - b.m13, a.m22 - b.m22, a.m23 - b.m23, a.m33 - b.m33};
  }
  friend Sym3 operator*(const S& s, const Sym3& m) {
    return {s * m.m11, s * m.m12, s * m.m13, s * m.m22, s * m.m23, s * m.m33};
  }
  Sym3 operator-() const { return {-m11, -m12, -m13, -m22, -m23, -m33}; }
};

/// symmetrized rank-<=2 form l*m^T + m*l^T (the conic that is the line pair l,m)
template <class S>
Sym3<S> line_pair(const V3<S>& l, const V3<S>& m) {
  return {S(2) * l.x * m.x, l.x * m.y + l.y * m.x, l.x * m.z + l.z * m.x,
          S(2) * l.y * m.y, l.y * m.z + l.z * m.y, S(2) * l.z * m.z};
}

/// congruence transform A^T M A where A has columns c0,c1,c2
template <class S>
Sym3<S> congruent(const Sym3<S>& m, const V3<S>& c0, const V3<S>& c1, const V3<S>& c2) {
  return {m.bil(c0, c0), m.bil(c0, c1), m.bil(c0, c2), m.bil(c1, c1), m.bil(c1, c2), m.bil(c2, c2)};
}

template <class S>
bool projectively_equal(const Sym3<S>& a, const Sym3<S>& b) {
  // cross-multiply all entry pairs
  const S* ae[6] = {&a.m11, &a.m12, &a.m13, &a.m22, &a.m23, &a.m33};
  const S* be[6] = {&b.m11, &b.m12, &b.m13, &b.m22, &b.m23, &b.m33};
  if constexpr (scal<S>::exact) {
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (!scal<S>::is_zero(*ae[i] * *be[j] - *ae[j] * *be[i])) return false;
    return true;
  } else {
    S sa = a.sup_entry(), sb = b.sup_entry();
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (!scal<S>::is_zero_at(*ae[i] * *be[j] - *ae[j] * *be[i], sa * sb)) return false;
    return true;
  }
}

template <class To, class From>
Sym3<To> mcast(const Sym3<From>& m) {
  return {To(m.m11), To(m.m12), To(m.m13), To(m.m22), To(m.m23), To(m.m33)};
}

inline Sym3<double> to_double(const Sym3<Rat>& m) {
  return {m.m11.to_double(), m.m12.to_double(), m.m13.to_double(),
          m.m22.to_double(), m.m23.to_double(), m.m33.to_double()};
}
inline const Sym3<double>& to_double(const Sym3<double>& m) { return m; }

inline Sym3<Rat> normalize_rep(const Sym3<Rat>& m) {
  if (m.is_zero()) return m;
  mpz_class n = m.m11.num();
  mpz_class d = m.m11.den();
  for (const Rat* e : {&m.m12, &m.m13, &m.m22, &m.m23, &m.m33}) {
    n = gcd(n, e->num());
    d = lcm(d, e->den());
  }
  if (n == 0) n = 1;
  Rat s{mpq_class(d, n)};
  // sign: first nonzero entry positive
  for (const Rat* e : {&m.m11, &m.m12, &m.m13, &m.m22, &m.m23, &m.m33}) {
    if (!e->is_zero()) {
      if ((*e * s).sign() < 0) s = -s;
      break;
    }
  }
  return s * m;
}

inline Sym3<double> normalize_rep(const Sym3<double>& m) {
  double s = m.sup_entry();
  if (s == 0.0) return m;
  double inv = 1.0 / s;
  for (const double* e : {&m.m11, &m.m12, &m.m13, &m.m22, &m.m23, &m.m33}) {
    if (std::abs(*e) > float_eps() * s) {
      if (*e < 0) inv = -inv;
      break;
    }
  }
  return inv * m;
}

}  // namespace ck
