#pragma once

#include <optional>

#include "ckgeo/conic.hpp"

namespace ck {

enum class signature { elliptic, hyperbolic };

/// Regular Cayley-Klein metric: invertible symmetric G plus its signature.
template <class S>
class Metric {
 public:
  explicit Metric(Sym3<S> g) : g_(std::move(g)) {
    S d = g_.det();
    bool singular;
    if constexpr (scal<S>::exact) {
      singular = scal<S>::is_zero(d);
    } else {
      S s = g_.sup_entry();
      singular = scal<S>::is_zero_at(d, s * s * s);
    }
    if (singular) fail(errc::degenerate_input, "metric matrix must be regular");
    // Sylvester: definite iff all leading principal minors share the sign of m11's chain
    S d1 = g_.m11;
    S d2 = g_.m11 * g_.m22 - g_.m12 * g_.m12;
    bool definite = scal<S>::sign(d1) != 0 && scal<S>::sign(d2) > 0 &&
                    scal<S>::sign(d) == scal<S>::sign(d1);
    sig_ = definite ? signature::elliptic : signature::hyperbolic;
  }

  static Metric elliptic() { return Metric(Sym3<S>::identity()); }
  static Metric hyperbolic() { return Metric(Sym3<S>::diag(S(1), S(1), S(-1))); }

  const Sym3<S>& g() const { return g_; }
  signature sig() const { return sig_; }

  S bilinear(const V3<S>& p, const V3<S>& q) const { return g_.bil(p, q); }
  S norm2(const V3<S>& p) const { return g_.q(p); }

  bool is_isotropic(const V3<S>& p) const {
    if constexpr (scal<S>::exact) {
      return scal<S>::is_zero(norm2(p));
    } else {
      S s = sup_norm(p);
      return scal<S>::is_zero_at(norm2(p), g_.sup_entry() * s * s);
    }
  }

  /// the absolute conic (hyperbolic: real zero set of G)
  Conic<S> absolute() const { return Conic<S>(g_); }

  V3<S> dual_line(const V3<S>& p) const { return normalize_rep(g_.mv(p)); }
  V3<S> dual_point(const V3<S>& l) const { return normalize_rep(g_.adjugate().mv(l)); }

 private:
  Sym3<S> g_;
  signature sig_;
};

/// in the hyperbolic plane, {P} ~= {Q} iff both isotropic or both inside or
/// both outside the absolute (inside <=> P[G]P < 0 in the canonical frame);
/// in the elliptic plane all singletons are congruent
template <class S>
bool congruent_points(const Metric<S>& m, const V3<S>& p, const V3<S>& q) {
  if (m.sig() == signature::elliptic) return true;
  auto side = [&](const V3<S>& v) { return m.is_isotropic(v) ? 0 : scal<S>::sign(m.norm2(v)); };
  return side(p) == side(q);
}

/// image of P under the reflection in anisotropic M (division-free form)
template <class S>
V3<S> reflect(const Metric<S>& m, const V3<S>& mirror, const V3<S>& p) {
  if (m.is_isotropic(mirror)) fail(errc::isotropic_mirror, "reflection in isotropic point");
  V3<S> q = (S(2) * m.bilinear(mirror, p)) * mirror - m.norm2(mirror) * p;
  if (q.is_zero()) fail(errc::zero_image, "reflection produced the zero vector");
  return normalize_rep(q);
}

/// complete isometry invariant of an anisotropic point pair:
/// c(P,Q) = (P[G]Q)^2 / ((P[G]P)(Q[G]Q)); scale-free in both representatives
template <class S>
S segment_congruence_invariant(const Metric<S>& m, const V3<S>& p, const V3<S>& q) {
  if (m.is_isotropic(p) || m.is_isotropic(q))
    fail(errc::isotropic_point, "congruence invariant of isotropic point");
  S b = m.bilinear(p, q);
  return (b * b) / (m.norm2(p) * m.norm2(q));
}

/// Canonical metric representative P-degree of an anisotropic point.
/// Float backend: vec satisfies |vec [G] vec| = 1. Rational backend: vec is
/// scaled exactly when |P[G]P| is a perfect square, otherwise kept chi-fixed
/// and unnormalized with its norm-square in q (P-degree = vec / sqrt|q|).
template <class S>
struct Normalized {
  V3<S> vec;
  S q;        // norm-square of the stored vec
  bool unit;  // |q| == 1
};

inline Normalized<double> normalize(const Metric<double>& m, const V3<double>& p) {
  if (m.is_isotropic(p)) fail(errc::isotropic_point, "normalizing an isotropic point");
  double q = m.norm2(p);
  double s = chi(p) / std::sqrt(std::abs(q));
  return {{p.x * s, p.y * s, p.z * s}, q > 0 ? 1.0 : -1.0, true};
}

inline Normalized<Rat> normalize(const Metric<Rat>& m, const V3<Rat>& p) {
  if (m.is_isotropic(p)) fail(errc::isotropic_point, "normalizing an isotropic point");
  Rat q = m.norm2(p);
  V3<Rat> v = chi(p) < 0 ? -p : p;
  if (auto r = q.abs().sqrt_exact()) {
    Rat inv = Rat(1) / *r;
    return {inv * v, Rat(q.sign()), true};
  }
  return {v, q, false};
}

/// semi-midpoint pair of anisotropic P,Q as coordinate vectors:
/// first = P-deg + Q-deg (inner point of [P,Q]+), second = P-deg - Q-deg.
/// Rational backend results live in Q(sqrt(|qP| |qQ|)).
inline std::pair<V3<double>, V3<double>> semi_mid_vectors(const Normalized<double>& p,
                                                          const Normalized<double>& q) {
  return {p.vec + q.vec, p.vec - q.vec};
}

inline std::pair<V3<QExt>, V3<QExt>> semi_mid_vectors(const Normalized<Rat>& p,
                                                      const Normalized<Rat>& q) {
  // sqrt|qQ|*P + sqrt|qP|*Q, scaled by sqrt|qQ|:  |qQ|*P + sqrt(|qP||qQ|)*Q
  Rat kp = p.q.abs(), kq = q.q.abs();
  QExt root = QExt::sqrt_of(kp * kq);
  V3<QExt> pv = vcast<QExt>(p.vec), qv = vcast<QExt>(q.vec);
  return {QExt(kq) * pv + root * qv, QExt(kq) * pv - root * qv};
}

/// backend scalar in which semi-midpoints (and other single-radical data) live
template <class S>
using ext_scalar_t = std::conditional_t<std::is_same_v<S, Rat>, QExt, double>;

}  // namespace ck
