#pragma once

#include "ckgeo/newton.hpp"

namespace ck {

/// Tangential tetragon: sidelines touch an inscribed circle; the dual
/// vertices are the sideline poles under the metric duality.
template <class S>
struct TangentialData {
  Tetragon<S> tetragon;          // sides all of + type by construction
  Conic<S> incircle;
  std::array<HPoint<S>, 4> dual_vertices;  // (AvB)^G, (BvC)^G, (CvD)^G, (DvA)^G
  Conic<S> outer_circle;         // circle through the dual vertices
  HPoint<S> center;              // common center of incircle and outer circle
  int tri_index = 0;             // circumcircle branch carrying the dual vertices
};

/// Builds a tangential tetragon from a circle and four contact points on it.
/// Vertices are consecutive tangent meets; verifies that the dual vertices
/// are concyclic on a circle concentric with C.
template <class S>
TangentialData<S> tangential_tetragon_from_circle(const Metric<S>& g, const Conic<S>& circle,
                                                  const std::array<HPoint<S>, 4>& contacts) {
  if (!is_circle(g, circle)) fail(errc::k_is_circle, "the inscribed conic must be a circle");
  for (const auto& p : contacts)
    if (!on_conic(circle, p)) fail(errc::degenerate_input, "contact point not on the circle");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (contacts[i] == contacts[j]) fail(errc::parallel_tangents, "coincident tangents");
  std::array<std::optional<HLine<S>>, 4> tang;
  for (int i = 0; i < 4; ++i) tang[i] = polar(contacts[i], circle);
  std::array<std::optional<HPoint<S>>, 4> verts;
  for (int i = 0; i < 4; ++i) {
    try {
      verts[i] = meet(*tang[i], *tang[(i + 1) % 4]);
    } catch (const geom_error&) {
      fail(errc::parallel_tangents, "consecutive tangents do not meet properly");
    }
    if (g.is_isotropic(verts[i]->vec()))
      fail(errc::parallel_tangents, "consecutive tangents meet at an isotropic point");
  }
  // vertex A := t4^t1 so that side A v B = t1 has contact point 1, etc.
  Quadrangle<S> quad(*verts[3], *verts[0], *verts[1], *verts[2]);
  Tetragon<S> tet{quad, {seg_sign::plus, seg_sign::plus, seg_sign::plus, seg_sign::plus}};
  std::array<std::optional<HPoint<S>>, 4> duals;
  for (int i = 0; i < 4; ++i) {
    HLine<S> side = join(quad.vertex(i), quad.vertex((i + 1) % 4));
    duals[i] = HPoint<S>(g.dual_point(side.vec()));
  }
  // concyclicity of the dual vertices; keep the branch concentric with C
  auto branches = concyclic(g, *duals[0], *duals[1], *duals[2], *duals[3]);
  if (branches.empty()) fail(errc::degenerate_input, "dual vertices are not concyclic");
  auto csym = symmetry_set(g, circle);
  if (!csym.is_circle()) fail(errc::k_is_circle, "inscribed conic lost its circle structure");
  for (int i : branches) {
    auto cc = circumcircle(g, i, *duals[0], *duals[1], *duals[2]);
    using E = ext_scalar_t<S>;
    if (projectively_equal(vcast<E>(cc.center.vec()), *csym.center)) {
      return {tet,     circle, {*duals[0], *duals[1], *duals[2], *duals[3]},
              cc.conic, cc.center, i};
    }
  }
  fail(errc::degenerate_input, "no dual circle concentric with the inscribed circle");
}

template <class S>
struct MidpointConic {
  Conic<S> conic;                                   // the Theorem-6 conic
  std::array<V3<ext_scalar_t<S>>, 6> midpoints;     // inner+outer of [A,C]+,[B,D]+,[P1,P3]+
  NinePointData<S> nine_point;                      // of the dual-vertex quadrangle
};

/// The conic through the inscribed-circle center and the inner and outer
/// semi-midpoints of the diagonals [A,C]+, [B,D]+, [P1,P3]+: the nine-point
/// conic of the dual-vertex quadrangle. Requires congruent diagonal endpoint
/// pairs (the incidences fail otherwise, by design of the normalization).
template <class S>
MidpointConic<S> theorem6_midpoint_conic(const Metric<S>& g, const TangentialData<S>& td) {
  const Quadrangle<S>& q = td.tetragon.quad;
  for (const HPoint<S>* p : {&q.a, &q.b, &q.c, &q.d, &q.p1, &q.p3})
    if (g.is_isotropic(p->vec())) fail(errc::isotropic_element, "diagonal element is isotropic");
  if (!congruent_points(g, q.a.vec(), q.c.vec()) || !congruent_points(g, q.b.vec(), q.d.vec()) ||
      !congruent_points(g, q.p1.vec(), q.p3.vec()))
    fail(errc::side_condition_violated, "diagonal endpoint pairs must be congruent");
  Quadrangle<S> dq(td.dual_vertices[0], td.dual_vertices[1], td.dual_vertices[2],
                   td.dual_vertices[3]);
  auto npcs = nine_point_conic(g, dq);
  const NinePointData<S>* match = nullptr;
  for (const auto& n : npcs)
    if (n.tri_index == td.tri_index) match = &n;
  if (!match) fail(errc::degenerate_input, "no nine-point branch for the concentric circle");
  MidpointConic<S> out{match->conic, {}, *match};
  const std::array<std::pair<const HPoint<S>*, const HPoint<S>*>, 3> diags{
      {{&q.a, &q.c}, {&q.b, &q.d}, {&q.p1, &q.p3}}};
  int k = 0;
  for (auto [x, y] : diags) {
    auto sm = semi_midpoints(g, *x, *y);
    out.midpoints[k++] = sm.m;
    out.midpoints[k++] = sm.n;
  }
  return out;
}

/// Theorem 7 check: every symmetry point of a non-circle inconic lies on the
/// Theorem-6 conic. Returns false only on a genuine miss.
template <class S>
bool theorem7_inconic_check(const Metric<S>& g, const TangentialData<S>& td, const Conic<S>& k) {
  const Quadrangle<S>& q = td.tetragon.quad;
  for (int i = 0; i < 4; ++i) {
    HLine<S> side = join(q.vertex(i), q.vertex((i + 1) % 4));
    if (!touches(side, k)) fail(errc::k_not_through_vertices, "K must touch all four sidelines");
  }
  auto sym = symmetry_set(g, k);
  if (sym.is_circle()) fail(errc::k_is_circle, "use the Theorem 6 path for circles");
  auto mc = theorem6_midpoint_conic(g, td);
  for (const auto& p : sym.points)
    if (!vanishes_on(mc.conic, p)) return false;
  if (!sym.exact_complete) {
    // irreducible pencil cubic: check the remaining points on the float mirror
    Metric<double> gm{Sym3<double>(to_double(g.g()))};
    Conic<double> mcf{Sym3<double>(to_double(mc.conic.mat()))};
    auto symf = symmetry_set(gm, Conic<double>(Sym3<double>(to_double(k.mat()))));
    for (const auto& p : symf.points)
      if (!vanishes_on(mcf, p)) return false;
  }
  return true;
}

}  // namespace ck
