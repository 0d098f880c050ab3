#pragma once

#include <utility>
#include <vector>

#include "ckgeo/linalg.hpp"
#include "ckgeo/symmat3.hpp"

namespace ck {

/// Point of P(R^3); coordinates nonzero, equality projective.
template <class S>
class HPoint {
 public:
  explicit HPoint(V3<S> v) : v_(std::move(v)) {
    if (v_.is_zero()) fail(errc::zero_vector, "point with zero coordinate vector");
  }
  HPoint(S x, S y, S z) : HPoint(V3<S>{std::move(x), std::move(y), std::move(z)}) {}
  const V3<S>& vec() const { return v_; }
  friend bool operator==(const HPoint& a, const HPoint& b) {
    return projectively_equal(a.v_, b.v_);
  }

 private:
  V3<S> v_;
};

/// Line of P(R^3): coefficients nonzero; P on L iff <coeffs, P> = 0.
template <class S>
class HLine {
 public:
  explicit HLine(V3<S> v) : v_(std::move(v)) {
    if (v_.is_zero()) fail(errc::zero_vector, "line with zero coefficient vector");
  }
  HLine(S x, S y, S z) : HLine(V3<S>{std::move(x), std::move(y), std::move(z)}) {}
  const V3<S>& vec() const { return v_; }
  friend bool operator==(const HLine& a, const HLine& b) {
    return projectively_equal(a.v_, b.v_);
  }

 private:
  V3<S> v_;
};

template <class S>
bool incident(const HLine<S>& l, const HPoint<S>& p) {
  if constexpr (scal<S>::exact)
    return scal<S>::is_zero(dot(l.vec(), p.vec()));
  else
    return scal<S>::is_zero_at(dot(l.vec(), p.vec()), sup_norm(l.vec()) * sup_norm(p.vec()));
}

template <class S>
HLine<S> join(const HPoint<S>& p, const HPoint<S>& q) {
  V3<S> c = cross(p.vec(), q.vec());
  if constexpr (scal<S>::exact) {
    if (c.is_zero()) fail(errc::coincident_arguments, "join of equal points");
  } else {
    if (scal<S>::is_zero_at(sup_norm(c), sup_norm(p.vec()) * sup_norm(q.vec())))
      fail(errc::coincident_arguments, "join of (nearly) equal points");
  }
  return HLine<S>(normalize_rep(c));
}

template <class S>
HPoint<S> meet(const HLine<S>& l, const HLine<S>& m) {
  V3<S> c = cross(l.vec(), m.vec());
  if constexpr (scal<S>::exact) {
    if (c.is_zero()) fail(errc::coincident_arguments, "meet of equal lines");
  } else {
    if (scal<S>::is_zero_at(sup_norm(c), sup_norm(l.vec()) * sup_norm(m.vec())))
      fail(errc::coincident_arguments, "meet of (nearly) equal lines");
  }
  return HPoint<S>(normalize_rep(c));
}

template <class S>
bool collinear(const HPoint<S>& a, const HPoint<S>& b, const HPoint<S>& c) {
  S d = det3(a.vec(), b.vec(), c.vec());
  if constexpr (scal<S>::exact)
    return scal<S>::is_zero(d);
  else
    return scal<S>::is_zero_at(d, sup_norm(a.vec()) * sup_norm(b.vec()) * sup_norm(c.vec()));
}

/// projective value as a homogeneous pair; den == 0 encodes infinity
template <class S>
struct ProjValue {
  S num{}, den{};
  bool is_infinite() const { return scal<S>::is_zero(den) && !scal<S>::is_zero(num); }
  bool equals(const S& v) const { return scal<S>::is_zero(num - v * den) && !scal<S>::is_zero(den); }
  double to_double() const { return scal<S>::to_double(num) / scal<S>::to_double(den); }
};

/// cross ratio (A,B;C,D) of four mutually distinct collinear points
template <class S>
ProjValue<S> cross_ratio(const HPoint<S>& a, const HPoint<S>& b, const HPoint<S>& c,
                         const HPoint<S>& d) {
  if (a == b || a == c || a == d || b == c || b == d || c == d)
    fail(errc::coincident_points, "cross ratio needs four distinct points");
  if (!collinear(a, b, c) || !collinear(a, b, d))
    fail(errc::not_collinear, "cross ratio of non-collinear points");
  auto [ac, bc] = decompose_in_span(c.vec(), a.vec(), b.vec());
  auto [ad, bd] = decompose_in_span(d.vec(), a.vec(), b.vec());
  // (A,B;C,D) = (bc/ac) / (bd/ad)
  return {bc * ad, ac * bd};
}

/// point P' with (A,B;P,P') = -1
template <class S>
HPoint<S> harmonic_conjugate(const HPoint<S>& p, const HPoint<S>& a, const HPoint<S>& b) {
  if (a == b) fail(errc::coincident_points, "harmonic conjugate with equal base points");
  if (!collinear(a, b, p)) fail(errc::not_collinear, "P not on the base line");
  auto [al, be] = decompose_in_span(p.vec(), a.vec(), b.vec());
  bool za, zb;
  if constexpr (scal<S>::exact) {
    za = scal<S>::is_zero(al);
    zb = scal<S>::is_zero(be);
  } else {
    S scale = scal<S>::abs(al) + scal<S>::abs(be);
    za = scal<S>::is_zero_at(al, scale);
    zb = scal<S>::is_zero_at(be, scale);
  }
  if (za || zb) fail(errc::p_coincides_with_endpoint, "P equals A or B");
  return HPoint<S>(normalize_rep(al * a.vec() - be * b.vec()));
}

/// true iff (A,B;M,N) = -1 for the collinear quadruple (A,M,B,N)
template <class S>
bool is_harmonic_range(const HPoint<S>& a, const HPoint<S>& m, const HPoint<S>& b,
                       const HPoint<S>& n) {
  if (!collinear(a, b, m) || !collinear(a, b, n))
    fail(errc::not_collinear, "harmonic range of non-collinear points");
  auto [am, bm] = decompose_in_span(m.vec(), a.vec(), b.vec());
  auto [an, bn] = decompose_in_span(n.vec(), a.vec(), b.vec());
  // (A,B;M,N) = -1  <=>  bm*an + am*bn = 0
  S lhs = bm * an + am * bn;
  if constexpr (scal<S>::exact)
    return scal<S>::is_zero(lhs);
  else
    return scal<S>::is_zero_at(lhs, scal<S>::abs(bm * an) + scal<S>::abs(am * bn) + S(1e-300));
}

}  // namespace ck
