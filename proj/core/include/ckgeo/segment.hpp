#pragma once

#include "ckgeo/metric.hpp"

namespace ck {

enum class seg_sign : int { plus = +1, minus = -1 };

inline seg_sign flip(seg_sign s) { return s == seg_sign::plus ? seg_sign::minus : seg_sign::plus; }

/// One of the two closed arcs of P v Q between distinct endpoints.
template <class S>
struct Segment {
  HPoint<S> p, q;
  seg_sign sign;

  Segment(HPoint<S> a, HPoint<S> b, seg_sign s) : p(std::move(a)), q(std::move(b)), sign(s) {
    if (p == q) fail(errc::coincident_points, "segment endpoints coincide");
  }
};

/// Semi-midpoint pair of an anisotropic point pair. m is the inner
/// semi-midpoint of [P,Q]+ and n of [P,Q]-, by the segment characterization.
template <class S>
struct SemiMidpoints {
  using E = ext_scalar_t<S>;
  V3<E> m, n;
  bool m_proper = false, n_proper = false;
};

/// proper midpoint <=> the endpoints are congruent singletons and the
/// semi-midpoint is anisotropic (then reflecting P in it gives Q)
template <class S>
SemiMidpoints<S> semi_midpoints(const Metric<S>& g, const HPoint<S>& p, const HPoint<S>& q) {
  if (p == q) fail(errc::coincident_points, "semi-midpoints of equal points");
  if (g.is_isotropic(p.vec()) || g.is_isotropic(q.vec()))
    fail(errc::isotropic_endpoint, "semi-midpoints of isotropic endpoint");
  auto np = normalize(g, p.vec());
  auto nq = normalize(g, q.vec());
  auto [m, n] = semi_mid_vectors(np, nq);
  SemiMidpoints<S> out;
  out.m = m;
  out.n = n;
  bool cong = congruent_points(g, p.vec(), q.vec());
  using E = ext_scalar_t<S>;
  auto ge = mcast<E>(g.g());
  auto aniso = [&](const V3<E>& v) {
    if constexpr (scal<E>::exact) {
      return !scal<E>::is_zero(ge.q(v));
    } else {
      E s = sup_norm(v);
      return !scal<E>::is_zero_at(ge.q(v), ge.sup_entry() * s * s);
    }
  };
  out.m_proper = cong && aniso(out.m);
  out.n_proper = cong && aniso(out.n);
  return out;
}

/// inner semi-midpoint of the signed segment
template <class S>
V3<ext_scalar_t<S>> inner_semi_midpoint(const Metric<S>& g, const Segment<S>& s) {
  auto sm = semi_midpoints(g, s.p, s.q);
  return s.sign == seg_sign::plus ? sm.m : sm.n;
}

/// membership of X on line PvQ in the closed segment: writing
/// X ~ lam*P-deg + mu*Q-deg, contains iff lam*mu >= 0 (sign +) or <= 0 (sign -).
/// Works for X in the base or the extension scalar; division-free sign rule.
template <class S, class T>
bool segment_contains(const Metric<S>& g, const Segment<S>& s, const V3<T>& x) {
  V3<T> pv = vcast<T>(s.p.vec()), qv = vcast<T>(s.q.vec());
  if constexpr (scal<T>::exact) {
    if (!scal<T>::is_zero(det3(x, pv, qv))) fail(errc::not_on_line, "X not on the segment line");
  } else {
    if (!scal<T>::is_zero_at(det3(x, pv, qv), sup_norm(x) * sup_norm(pv) * sup_norm(qv)))
      fail(errc::not_on_line, "X not on the segment line");
  }
  auto [lp, mp] = decompose_in_span(x, pv, qv);
  // lam = lp * chi(P) * sqrt|qP|, mu = mp * chi(Q) * sqrt|qQ|
  int sl = scal<T>::sign(lp) * chi(s.p.vec());
  int sm = scal<T>::sign(mp) * chi(s.q.vec());
  int prod = sl * sm;
  return s.sign == seg_sign::plus ? prod >= 0 : prod <= 0;
}

/// dual of the opposite semi-midpoint; passes through the proper inner
/// midpoint and through the dual point of P v Q
template <class S>
V3<ext_scalar_t<S>> perpendicular_bisector(const Metric<S>& g, const Segment<S>& s) {
  auto sm = semi_midpoints(g, s.p, s.q);
  bool inner_proper = s.sign == seg_sign::plus ? sm.m_proper : sm.n_proper;
  if (!inner_proper) fail(errc::no_proper_midpoint, "segment has no proper inner midpoint");
  const auto& other = s.sign == seg_sign::plus ? sm.n : sm.m;
  using E = ext_scalar_t<S>;
  return mcast<E>(g.g()).mv(other);
}

}  // namespace ck
