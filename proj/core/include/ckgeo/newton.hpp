#pragma once

#include "ckgeo/quadri.hpp"

namespace ck {

namespace detail {

/// normalized vertex representatives; the exact backend requires unit norms
/// (the documented float fallback covers the rest)
template <class S>
std::array<V3<S>, 4> unit_vertices(const Metric<S>& g, const Quadrangle<S>& q) {
  std::array<V3<S>, 4> nv;
  for (int i = 0; i < 4; ++i) {
    auto n = normalize(g, q.vertex(i).vec());
    if constexpr (scal<S>::exact) {
      if (!n.unit) fail(errc::not_normalizable, "vertex norm is not a perfect square");
    }
    nv[i] = n.vec;
  }
  return nv;
}

}  // namespace detail

/// inner semi-midpoints of the four sides, in side order AB, BC, CD, DA
template <class S>
std::array<V3<S>, 4> side_midpoints(const Metric<S>& g, const Tetragon<S>& t) {
  auto nv = detail::unit_vertices(g, t.quad);
  std::array<V3<S>, 4> out;
  for (int k = 0; k < 4; ++k) {
    const V3<S>& x = nv[k];
    const V3<S>& y = nv[(k + 1) % 4];
    out[k] = t.signs[k] == seg_sign::plus ? x + y : x - y;
    if (out[k].is_zero()) fail(errc::coincident_midpoints, "degenerate side midpoint");
  }
  return out;
}

/// meet of the two lines connecting inner semi-midpoints of opposite sides
template <class S>
HPoint<S> semi_centroid(const Metric<S>& g, const Tetragon<S>& t) {
  auto m = side_midpoints(g, t);
  V3<S> l1 = cross(m[0], m[2]);
  V3<S> l2 = cross(m[1], m[3]);
  if (l1.is_zero() || l2.is_zero())
    fail(errc::coincident_midpoints, "opposite side midpoints coincide");
  V3<S> p = cross(l1, l2);
  if (p.is_zero()) fail(errc::undefined_centroid, "midpoint connectors coincide");
  if constexpr (!scal<S>::exact) {
    if (scal<S>::is_zero_at(sup_norm(p), sup_norm(l1) * sup_norm(l2)))
      fail(errc::undefined_centroid, "midpoint connectors nearly coincide");
  }
  return HPoint<S>(normalize_rep(p));
}

/// line through the semi-centroids of T and its complement
template <class S>
HLine<S> newton_line(const Metric<S>& g, const Tetragon<S>& t) {
  HPoint<S> sc = semi_centroid(g, t);
  HPoint<S> scc = semi_centroid(g, t.complementary());
  if (sc == scc) fail(errc::coincident_centroids, "semi-centroids coincide");
  return join(sc, scc);
}

/// dual of the semi-centroid of the complementary tetragon
template <class S>
HLine<S> shatunov_tokarev_line(const Metric<S>& g, const Tetragon<S>& t) {
  HPoint<S> scc = semi_centroid(g, t.complementary());
  if (g.is_isotropic(scc.vec()))
    fail(errc::isotropic_point, "complementary semi-centroid is isotropic");
  return HLine<S>(g.dual_line(scc.vec()));
}

/// which semi-midpoints of the diagonals [A,C]+ and [B,D]+ lie on the Newton
/// line; the even-plus-sign theorem expects exactly one per diagonal, odd
/// expects none
template <class S>
struct DiagonalIncidence {
  bool ac_inner = false, ac_outer = false;
  bool bd_inner = false, bd_outer = false;
  int plus_signs = 0;
  bool degenerate = false;  // high-symmetry input; counts reported, not asserted

  int ac_count() const { return int(ac_inner) + int(ac_outer); }
  int bd_count() const { return int(bd_inner) + int(bd_outer); }
};

template <class S>
DiagonalIncidence<S> theorem6b_check(const Metric<S>& g, const Tetragon<S>& t) {
  DiagonalIncidence<S> out;
  for (auto s : t.signs)
    if (s == seg_sign::plus) ++out.plus_signs;
  HLine<S> nl = [&] {
    try {
      return newton_line(g, t);
    } catch (const geom_error& e) {
      if (e.code() == errc::coincident_centroids || e.code() == errc::undefined_centroid ||
          e.code() == errc::coincident_midpoints)
        fail(errc::degenerate_symmetric_input, "Newton line undefined for symmetric input");
      throw;
    }
  }();
  auto nv = detail::unit_vertices(g, t.quad);
  auto on = [&](const V3<S>& p) {
    if constexpr (scal<S>::exact)
      return scal<S>::is_zero(dot(nl.vec(), p));
    else
      return scal<S>::is_zero_at(dot(nl.vec(), p), sup_norm(nl.vec()) * sup_norm(p));
  };
  out.ac_inner = on(nv[0] + nv[2]);
  out.ac_outer = on(nv[0] - nv[2]);
  out.bd_inner = on(nv[1] + nv[3]);
  out.bd_outer = on(nv[1] - nv[3]);
  if (out.ac_count() > 1 || out.bd_count() > 1) out.degenerate = true;
  return out;
}

}  // namespace ck
