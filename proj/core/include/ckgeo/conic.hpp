#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ckgeo/projective.hpp"
#include "ckgeo/quadext.hpp"

namespace ck {

/// Point conic as a symmetric matrix up to scale; P on K iff P [mat] P = 0.
template <class S>
class Conic {
 public:
  explicit Conic(Sym3<S> m) : m_(std::move(m)) {
    if (m_.is_zero()) fail(errc::zero_vector, "conic with zero matrix");
  }
  const Sym3<S>& mat() const { return m_; }

  bool singular() const {
    if constexpr (scal<S>::exact) {
      return scal<S>::is_zero(m_.det());
    } else {
      S s = m_.sup_entry();
      return scal<S>::is_zero_at(m_.det(), s * s * s);
    }
  }

  friend bool operator==(const Conic& a, const Conic& b) {
    return projectively_equal(a.m_, b.m_);
  }

 private:
  Sym3<S> m_;
};

template <class S>
S conic_eval(const Conic<S>& k, const V3<S>& p) {
  return k.mat().q(p);
}

template <class S, class T>
bool vanishes_on(const Conic<S>& k, const V3<T>& p) {
  if constexpr (std::is_same_v<S, Rat> && std::is_same_v<T, QExt>) {
    return mcast<QExt>(k.mat()).q(p).is_zero();
  } else {
    static_assert(std::is_same_v<S, T>);
    if constexpr (scal<S>::exact)
      return scal<S>::is_zero(k.mat().q(p));
    else {
      S s = sup_norm(p);
      return scal<S>::is_zero_at(k.mat().q(p), k.mat().sup_entry() * s * s);
    }
  }
}

template <class S>
bool on_conic(const Conic<S>& k, const HPoint<S>& p) {
  return vanishes_on(k, p.vec());
}

/// polar line of P; ZeroPolar when mat*P = 0 (P a singular-point of K)
template <class S>
HLine<S> polar(const HPoint<S>& p, const Conic<S>& k) {
  V3<S> l = k.mat().mv(p.vec());
  bool zero;
  if constexpr (scal<S>::exact)
    zero = l.is_zero();
  else
    zero = scal<S>::is_zero_at(sup_norm(l), k.mat().sup_entry() * sup_norm(p.vec()));
  if (zero) fail(errc::zero_polar, "polar of a singular point of the conic");
  return HLine<S>(normalize_rep(l));
}

/// pole of L with respect to a nonsingular conic
template <class S>
HPoint<S> pole(const HLine<S>& l, const Conic<S>& k) {
  if (k.singular()) fail(errc::singular_conic, "pole with respect to a singular conic");
  return HPoint<S>(normalize_rep(k.mat().adjugate().mv(l.vec())));
}

/// unique conic through five points (fit by kernel extraction).
/// UnderDetermined when the incidence system has kernel dimension >= 2;
/// DegenerateInput on repeated points.
template <class S>
Conic<S> conic_through_five(const std::array<HPoint<S>, 5>& pts) {
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (pts[i] == pts[j]) fail(errc::degenerate_input, "repeated point in conic fit");
  std::vector<std::vector<S>> rows;
  rows.reserve(5);
  for (const auto& p : pts) {
    const auto& v = p.vec();
    rows.push_back({v.x * v.x, S(2) * v.x * v.y, S(2) * v.x * v.z, v.y * v.y, S(2) * v.y * v.z,
                    v.z * v.z});
  }
  auto info = detail::rref(rows);
  if (info.rank < 5) fail(errc::under_determined, "conic fit kernel dimension >= 2");
  auto x = detail::kernel_vector(rows, info, 6);
  return Conic<S>(normalize_rep(Sym3<S>{x[0], x[1], x[2], x[3], x[4], x[5]}));
}

/// two independent points spanning the line, chosen deterministically
template <class S>
std::pair<V3<S>, V3<S>> span_of_line(const V3<S>& l) {
  int m = 0;
  if constexpr (scal<S>::exact) {
    while (m < 3 && scal<S>::is_zero(l[m])) ++m;
  } else {
    for (int i = 1; i < 3; ++i)
      if (scal<S>::abs(l[i]) > scal<S>::abs(l[m])) m = i;
  }
  int i = (m == 0) ? 1 : 0;
  int j = 3 - m - i;
  V3<S> p0{}, p1{};
  p0[i] = l[m];
  p0[m] = -l[i];
  p1[j] = l[m];
  p1[m] = -l[j];
  return {p0, p1};
}

/// restricted quadratic of K on the line spanned by (p0,p1):
/// q(t) = a t^2 + 2 b t + c with X(t) = t*p0 + p1 ... coefficients
/// a = p0 K p0, b = p0 K p1, c = p1 K p1
template <class S>
struct restricted_quadratic {
  S a, b, c;
  V3<S> p0, p1;
  S disc() const { return b * b - a * c; }
};

template <class S>
restricted_quadratic<S> restrict_to_line(const Conic<S>& k, const HLine<S>& l) {
  auto [p0, p1] = span_of_line(l.vec());
  return {k.mat().q(p0), k.mat().bil(p0, p1), k.mat().q(p1), p0, p1};
}

/// tangency per the paper's definition: line and conic share a single point
template <class S>
bool touches(const HLine<S>& l, const Conic<S>& k) {
  auto r = restrict_to_line(k, l);
  bool az, bz, cz;
  if constexpr (scal<S>::exact) {
    az = scal<S>::is_zero(r.a);
    bz = scal<S>::is_zero(r.b);
    cz = scal<S>::is_zero(r.c);
  } else {
    S s = sup_norm(l.vec());
    S scale = k.mat().sup_entry() * s * s;
    az = scal<S>::is_zero_at(r.a, scale);
    bz = scal<S>::is_zero_at(r.b, scale);
    cz = scal<S>::is_zero_at(r.c, scale);
  }
  if (az && bz && cz) fail(errc::line_in_conic, "line lies in the conic");
  if (az) return bz && !cz;  // single point at the p0-end
  if constexpr (scal<S>::exact)
    return scal<S>::is_zero(r.disc());
  else {
    S s = sup_norm(l.vec());
    S scale = k.mat().sup_entry() * s * s;
    return scal<S>::is_zero_at(r.disc(), scale * scale);
  }
}

/// real intersection points of a line and a conic (0, 1, or 2).
/// Rational backend: exact, points live in Q(sqrt(disc)).
inline std::vector<V3<QExt>> line_conic_intersect(const HLine<Rat>& l, const Conic<Rat>& k) {
  auto r = restrict_to_line(k, l);
  auto P0 = vcast<QExt>(r.p0), P1 = vcast<QExt>(r.p1);
  std::vector<V3<QExt>> out;
  if (r.a.is_zero() && r.b.is_zero() && r.c.is_zero())
    fail(errc::line_in_conic, "line lies in the conic");
  if (r.a.is_zero()) {
    out.push_back(vcast<QExt>(r.p0));  // root at t = infinity
    if (!r.b.is_zero()) {
      Rat t = -r.c / (Rat(2) * r.b);
      out.push_back(QExt(t) * P0 + P1);
    }
    return out;
  }
  Rat disc = r.disc();
  if (disc.sign() < 0) return out;
  if (disc.is_zero()) {
    Rat t = -r.b / r.a;
    out.push_back(QExt(t) * P0 + P1);
    return out;
  }
  QExt sq = QExt::sqrt_of(disc);
  QExt t1 = (QExt(-r.b) + sq) / QExt(r.a);
  QExt t2 = (QExt(-r.b) - sq) / QExt(r.a);
  out.push_back(t1 * P0 + P1);
  out.push_back(t2 * P0 + P1);
  return out;
}

inline std::vector<V3<double>> line_conic_intersect(const HLine<double>& l,
                                                    const Conic<double>& k) {
  auto r = restrict_to_line(k, l);
  double s = sup_norm(l.vec());
  double scale = k.mat().sup_entry() * s * s;
  auto zero = [&](double x) { return scal<double>::is_zero_at(x, scale); };
  std::vector<V3<double>> out;
  if (zero(r.a) && zero(r.b) && zero(r.c)) fail(errc::line_in_conic, "line lies in the conic");
  if (zero(r.a)) {
    out.push_back(r.p0);
    if (!zero(r.b)) out.push_back((-r.c / (2 * r.b)) * r.p0 + r.p1);
    return out;
  }
  double disc = r.disc();
  if (scal<double>::is_zero_at(disc, scale * scale)) {
    out.push_back((-r.b / r.a) * r.p0 + r.p1);
    return out;
  }
  if (disc < 0) return out;
  double sq = std::sqrt(disc);
  out.push_back(((-r.b + sq) / r.a) * r.p0 + r.p1);
  out.push_back(((-r.b - sq) / r.a) * r.p0 + r.p1);
  return out;
}

}  // namespace ck
