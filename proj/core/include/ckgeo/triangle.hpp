#pragma once

#include <array>
#include <vector>

#include "ckgeo/segment.hpp"

namespace ck {

/// The four triangles over a non-collinear anisotropic vertex triple map to
/// sign flips of one normalized basis vector:
///   i=0: none, i=1: first vertex, i=2: second, i=3: third.
/// This matches the boundary table
///   bd D0 = [A,B]+ u [B,C]+ u [C,A]+     bd D1 = [A,B]- u [B,C]+ u [C,A]-
///   bd D2 = [A,B]- u [B,C]- u [C,A]+     bd D3 = [A,B]+ u [B,C]- u [C,A]-
/// (side X,Y carries sign flip(X)*flip(Y)).
inline std::array<int, 3> triangle_flips(int i) {
  switch (i) {
    case 0: return {+1, +1, +1};
    case 1: return {-1, +1, +1};
    case 2: return {+1, -1, +1};
    case 3: return {+1, +1, -1};
  }
  fail(errc::parameter_out_of_range, "triangle index not in 0..3");
}

inline seg_sign triangle_side_sign(int i, int va, int vb) {
  auto f = triangle_flips(i);
  return f[va] * f[vb] > 0 ? seg_sign::plus : seg_sign::minus;
}

/// sign-pattern membership in the closed triangle Delta_i(A,B,C)
template <class S>
bool triangle_contains(int i, const Metric<S>& g, const HPoint<S>& a, const HPoint<S>& b,
                       const HPoint<S>& c, const HPoint<S>& x) {
  if (g.is_isotropic(a.vec()) || g.is_isotropic(b.vec()) || g.is_isotropic(c.vec()))
    fail(errc::degenerate_basis, "isotropic triangle vertex");
  V3<S> co = coords_in_basis(x.vec(), a.vec(), b.vec(), c.vec());
  auto f = triangle_flips(i);
  int s[3];
  const V3<S>* vs[3] = {&a.vec(), &b.vec(), &c.vec()};
  for (int k = 0; k < 3; ++k) {
    int raw;
    if constexpr (scal<S>::exact)
      raw = scal<S>::sign(co[k]);
    else
      raw = scal<S>::is_zero_at(co[k], sup_norm(co)) ? 0 : scal<S>::sign(co[k]);
    s[k] = raw * chi(*vs[k]) * f[k];
  }
  bool nonneg = s[0] >= 0 && s[1] >= 0 && s[2] >= 0;
  bool nonpos = s[0] <= 0 && s[1] <= 0 && s[2] <= 0;
  return nonneg || nonpos;
}

/// Normalized frame over a vertex triple: basis (A-deg, B-deg, C-deg) with
/// unit-diagonal Gram (global sign flip applied when the triple lies inside
/// the absolute). Rational backend requires perfect-square norms.
template <class S>
struct TriFrame {
  V3<S> a, b, c;     // normalized representatives (basis columns)
  Sym3<S> gram;      // unit-diagonal Gram of (a, b, c)
  int sigma;         // +1 outside / elliptic, -1 inside (hyperbolic)
};

template <class S>
TriFrame<S> tri_frame(const Metric<S>& g, const HPoint<S>& a, const HPoint<S>& b,
                      const HPoint<S>& c) {
  if (collinear(a, b, c)) fail(errc::degenerate_triangle, "collinear vertices");
  auto na = normalize(g, a.vec()), nb = normalize(g, b.vec()), nc = normalize(g, c.vec());
  if constexpr (scal<S>::exact) {
    if (!na.unit || !nb.unit || !nc.unit)
      fail(errc::not_normalizable,
           "vertex norm-square is not a perfect square on the exact backend");
  }
  int sa = scal<S>::sign(na.q), sb = scal<S>::sign(nb.q), sc = scal<S>::sign(nc.q);
  if (sa != sb || sb != sc)
    fail(errc::no_circumcircle, "vertices are not pairwise congruent singletons");
  Sym3<S> gram = congruent(g.g(), na.vec, nb.vec, nc.vec);
  if (sa < 0) gram = -gram;
  return {na.vec, nb.vec, nc.vec, gram, sa};
}

/// frame circle matrix of Delta_i: zero diagonal, entries 1 - g~_xy with the
/// flip-adjusted Gram, conjugated back by the flip signs
template <class S>
Sym3<S> frame_circle_matrix(const Sym3<S>& gram, int i) {
  auto f = triangle_flips(i);
  S g12 = S(f[0] * f[1]) * gram.m12;
  S g13 = S(f[0] * f[2]) * gram.m13;
  S g23 = S(f[1] * f[2]) * gram.m23;
  Sym3<S> c{S(0), S(1) - g12, S(1) - g13, S(0), S(1) - g23, S(0)};
  // conjugate by diag(f): entry (i,j) *= f_i f_j
  c.m12 = S(f[0] * f[1]) * c.m12;
  c.m13 = S(f[0] * f[2]) * c.m13;
  c.m23 = S(f[1] * f[2]) * c.m23;
  return c;
}

template <class S>
V3<S> frame_circle_center(const Sym3<S>& gram, int i) {
  auto f = triangle_flips(i);
  S g12 = S(f[0] * f[1]) * gram.m12;
  S g13 = S(f[0] * f[2]) * gram.m13;
  S g23 = S(f[1] * f[2]) * gram.m23;
  V3<S> o{(S(1) - g23) * (S(1) + g23 - g13 - g12),
          (S(1) - g13) * (S(1) + g13 - g12 - g23),
          (S(1) - g12) * (S(1) + g12 - g23 - g13)};
  return {S(f[0]) * o.x, S(f[1]) * o.y, S(f[2]) * o.z};
}

/// quadratic form pulled back through the inverse frame map (rows = cofactor
/// cross products); projective scale det^2 dropped
template <class S>
Sym3<S> pullback_to_ambient(const Sym3<S>& frame_form, const V3<S>& a, const V3<S>& b,
                            const V3<S>& c) {
  V3<S> r1 = cross(b, c), r2 = cross(c, a), r3 = cross(a, b);
  V3<S> col0{r1.x, r2.x, r3.x}, col1{r1.y, r2.y, r3.y}, col2{r1.z, r2.z, r3.z};
  return congruent(frame_form, col0, col1, col2);
}

template <class S>
struct Circumcircle {
  Conic<S> conic;
  HPoint<S> center;
};

/// circumcircle of Delta_i(A,B,C) and its center, in ambient coordinates.
/// NoCircumcircle when a boundary segment lacks a proper midpoint.
template <class S>
Circumcircle<S> circumcircle(const Metric<S>& g, int i, const HPoint<S>& a, const HPoint<S>& b,
                             const HPoint<S>& c) {
  auto fr = tri_frame(g, a, b, c);
  auto f = triangle_flips(i);
  // inner midpoints of the boundary segments: f_x X-deg + f_y Y-deg
  const V3<S>* vs[3] = {&fr.a, &fr.b, &fr.c};
  constexpr std::pair<int, int> sides[3] = {{0, 1}, {1, 2}, {0, 2}};
  for (auto [x, y] : sides) {
    V3<S> mid = S(f[x]) * *vs[x] + S(f[y]) * *vs[y];
    if (g.is_isotropic(mid))
      fail(errc::no_circumcircle, "boundary segment has no proper midpoint");
  }
  Sym3<S> cm = frame_circle_matrix(fr.gram, i);
  V3<S> oc = frame_circle_center(fr.gram, i);
  V3<S> center = oc.x * fr.a + oc.y * fr.b + oc.z * fr.c;
  if (center.is_zero()) fail(errc::degenerate_triangle, "degenerate circumcenter");
  return {Conic<S>(normalize_rep(pullback_to_ambient(cm, fr.a, fr.b, fr.c))),
          HPoint<S>(normalize_rep(center))};
}

template <class S>
HPoint<S> circumcenter(const Metric<S>& g, int i, const HPoint<S>& a, const HPoint<S>& b,
                       const HPoint<S>& c) {
  return circumcircle(g, i, a, b, c).center;
}

/// every triangle index i with D on the circumcircle of Delta_i(A,B,C);
/// empty when the triple admits no circle or D misses all four
template <class S>
std::vector<int> concyclic(const Metric<S>& g, const HPoint<S>& a, const HPoint<S>& b,
                           const HPoint<S>& c, const HPoint<S>& d) {
  if (collinear(a, b, c) || collinear(a, b, d) || collinear(a, c, d) || collinear(b, c, d))
    fail(errc::degenerate_quadrangle, "three collinear vertices");
  std::vector<int> out;
  TriFrame<S> fr = [&] {
    try {
      return tri_frame(g, a, b, c);
    } catch (const geom_error& e) {
      if (e.code() == errc::no_circumcircle) return TriFrame<S>{{}, {}, {}, {}, 0};
      throw;
    }
  }();
  if (fr.sigma == 0) return out;  // not congruent: no circle exists
  V3<S> dd = coords_in_basis(d.vec(), fr.a, fr.b, fr.c);
  for (int i = 0; i < 4; ++i) {
    Sym3<S> cm = frame_circle_matrix(fr.gram, i);
    S v = cm.q(dd);
    bool zero;
    if constexpr (scal<S>::exact) {
      zero = scal<S>::is_zero(v);
    } else {
      S s = sup_norm(dd);
      zero = scal<S>::is_zero_at(v, cm.sup_entry() * s * s);
    }
    if (zero) out.push_back(i);
  }
  return out;
}

}  // namespace ck
