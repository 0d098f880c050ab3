#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ckgeo/conic_metric.hpp"
#include "ckgeo/segment.hpp"
#include "ckgeo/triangle.hpp"

namespace ck {

/// Four points, no three collinear, with their diagonal triangle
///   P1 = (AvD)^(BvC), P2 = (BvD)^(AvC), P3 = (CvD)^(AvB).
template <class S>
struct Quadrangle {
  HPoint<S> a, b, c, d;
  HPoint<S> p1, p2, p3;

  Quadrangle(HPoint<S> A, HPoint<S> B, HPoint<S> C, HPoint<S> D)
      : a(std::move(A)), b(std::move(B)), c(std::move(C)), d(std::move(D)),
        p1(diag1(a, b, c, d)), p2(diag2(a, b, c, d)), p3(diag3(a, b, c, d)) {
    if (collinear(a, b, c) || collinear(a, b, d) || collinear(a, c, d) || collinear(b, c, d))
      fail(errc::degenerate_quadrangle, "three vertices collinear");
  }

  const HPoint<S>& vertex(int i) const {
    switch (i) {
      case 0: return a;
      case 1: return b;
      case 2: return c;
      default: return d;
    }
  }

 private:
  static HPoint<S> diag1(const HPoint<S>& A, const HPoint<S>& B, const HPoint<S>& C,
                         const HPoint<S>& D) {
    return meet(join(A, D), join(B, C));
  }
  static HPoint<S> diag2(const HPoint<S>& A, const HPoint<S>& B, const HPoint<S>& C,
                         const HPoint<S>& D) {
    return meet(join(B, D), join(A, C));
  }
  static HPoint<S> diag3(const HPoint<S>& A, const HPoint<S>& B, const HPoint<S>& C,
                         const HPoint<S>& D) {
    return meet(join(C, D), join(A, B));
  }
};

template <class S>
std::array<HPoint<S>, 3> diagonal_points(const Quadrangle<S>& q) {
  return {q.p1, q.p2, q.p3};
}

/// Tetragon: quadrangle plus a sign per side [A,B], [B,C], [C,D], [D,A].
template <class S>
struct Tetragon {
  Quadrangle<S> quad;
  std::array<seg_sign, 4> signs;

  Tetragon complementary() const {
    return {quad, {flip(signs[0]), flip(signs[1]), flip(signs[2]), flip(signs[3])}};
  }
};

inline std::array<seg_sign, 4> parse_signs(const std::string& s) {
  if (s.size() != 4) fail(errc::invalid_scene, "tetragon sign vector must have 4 entries");
  std::array<seg_sign, 4> out{};
  for (int i = 0; i < 4; ++i) {
    if (s[i] == '+')
      out[i] = seg_sign::plus;
    else if (s[i] == '-')
      out[i] = seg_sign::minus;
    else
      fail(errc::invalid_scene, "tetragon signs must be '+' or '-'");
  }
  return out;
}

// ---------------------------------------------------------------------------
// canonical frame
// ---------------------------------------------------------------------------

/// Frame with basis (P1-deg, P3-deg, P2-deg) in which the normalized vertices
/// read A-deg = (-s,t,1)/a, B-deg = (-s,-t,1)/b, C-deg = (s,-t,1)/c,
/// D-deg = (s,t,1)/d. Normalizers carry signs; positive_frame marks the
/// configurations where all four can be made positive (the paper's setup).
template <class S>
struct CanonicalFrame {
  V3<S> u1, u2, u3;  // basis columns
  S s, t;
  S a, b, c, d;
  bool positive_frame;

  V3<S> to_ambient(const V3<S>& frame_coords) const {
    return frame_coords.x * u1 + frame_coords.y * u2 + frame_coords.z * u3;
  }
};

template <class S>
CanonicalFrame<S> canonical_frame(const Metric<S>& g, const Quadrangle<S>& q) {
  for (const HPoint<S>* p : {&q.a, &q.b, &q.c, &q.d, &q.p1, &q.p2, &q.p3})
    if (g.is_isotropic(p->vec()))
      fail(errc::isotropic_element, "vertex or diagonal point is isotropic");
  auto n1 = normalize(g, q.p1.vec());
  auto n3 = normalize(g, q.p3.vec());
  auto n2 = normalize(g, q.p2.vec());
  if constexpr (scal<S>::exact) {
    if (!n1.unit || !n2.unit || !n3.unit)
      fail(errc::not_normalizable, "diagonal-point norms are not perfect squares");
  }
  CanonicalFrame<S> fr;
  fr.u1 = n1.vec;
  fr.u2 = n3.vec;
  fr.u3 = n2.vec;
  std::array<V3<S>, 4> co;
  const HPoint<S>* vs[4] = {&q.a, &q.b, &q.c, &q.d};
  for (int i = 0; i < 4; ++i) {
    auto nv = normalize(g, vs[i]->vec());
    if constexpr (scal<S>::exact) {
      if (!nv.unit) fail(errc::not_normalizable, "vertex norm is not a perfect square");
    }
    co[i] = coords_in_basis(nv.vec, fr.u1, fr.u2, fr.u3);
  }
  auto near_zero = [&](const S& x, const V3<S>& whole) {
    if constexpr (scal<S>::exact)
      return scal<S>::is_zero(x);
    else
      return scal<S>::is_zero_at(x, sup_norm(whole));
  };
  for (int i = 0; i < 4; ++i)
    if (near_zero(co[i].z, co[i]))
      fail(errc::frame_not_realizable, "vertex lies on the line P1 v P3");
  // flip the third basis vector so the positive-frame case surfaces
  int neg = 0;
  for (int i = 0; i < 4; ++i)
    if (scal<S>::sign(co[i].z) < 0) ++neg;
  if (neg == 4) {
    fr.u3 = -fr.u3;
    for (auto& v : co) v.z = -v.z;
    neg = 0;
  }
  fr.positive_frame = (neg == 0);
  fr.a = S(1) / co[0].z;
  fr.b = S(1) / co[1].z;
  fr.c = S(1) / co[2].z;
  fr.d = S(1) / co[3].z;
  fr.s = -co[0].x * fr.a;
  fr.t = co[0].y * fr.a;
  // consistency of the vertex pattern
  auto match = [&](const S& lhs, const S& rhs) {
    if constexpr (scal<S>::exact)
      return scal<S>::is_zero(lhs - rhs);
    else
      return scal<S>::is_zero_at(lhs - rhs, scal<S>::abs(lhs) + scal<S>::abs(rhs) + 1.0);
  };
  if (!match(-co[1].x * fr.b, fr.s) || !match(-co[1].y * fr.b, fr.t) ||
      !match(co[2].x * fr.c, fr.s) || !match(-co[2].y * fr.c, fr.t) ||
      !match(co[3].x * fr.d, fr.s) || !match(co[3].y * fr.d, fr.t))
    fail(errc::frame_not_realizable, "vertex pattern inconsistent");
  return fr;
}

// ---------------------------------------------------------------------------
// Theorem 1 and Theorem 3
// ---------------------------------------------------------------------------

/// conic matrix of the harmonic six-point construction; only even powers of
/// u, v, w enter
template <class S>
Sym3<S> six_point_matrix(const S& s, const S& t, const S& u2, const S& v2, const S& w2) {
  S st = s * t;
  S s2u2_t2 = s * s * u2 - t * t;
  return Sym3<S>{st * u2 * (v2 - S(1)) * (S(1) - w2),
                 t * s2u2_t2 * (v2 * w2 - S(1)),
                 S(0),
                 st * (v2 - S(1)) * (S(1) - w2) * s2u2_t2,
                 s * (v2 - w2) * s2u2_t2,
                 st * (S(1) - v2) * (S(1) - w2)};
}

template <class S>
struct HarmonicSix {
  Conic<S> conic;
  std::array<V3<S>, 6> points;  // U+, U-, V+, V-, W+, W-
};

/// the six harmonic points U,V,W (+/-) in diagonal-frame coordinates and the
/// conic through them; requires s,t nonzero and 0 < u,v,w < 1
template <class S>
HarmonicSix<S> theorem1_conic(const S& s, const S& t, const S& u, const S& v, const S& w) {
  if (scal<S>::is_zero(s) || scal<S>::is_zero(t))
    fail(errc::parameter_out_of_range, "s and t must be nonzero");
  for (const S* x : {&u, &v, &w})
    if (scal<S>::sign(*x) <= 0 || scal<S>::sign(*x - S(1)) >= 0)
      fail(errc::parameter_out_of_range, "u, v, w must lie in (0,1)");
  HarmonicSix<S> out{Conic<S>(six_point_matrix(s, t, u * u, v * v, w * w)), {}};
  out.points[0] = {S(1), S(0), u};
  out.points[1] = {S(1), S(0), -u};
  out.points[2] = {(v - S(1)) * s, S(1) + v, (S(1) - v) * t};
  out.points[3] = {(S(-1) - v) * s, S(1) - v, (S(1) + v) * t};
  out.points[4] = {(w - S(1)) * s, S(1) + w, (w - S(1)) * t};
  out.points[5] = {(S(-1) - w) * s, S(1) - w, (S(-1) - w) * t};
  return out;
}

template <class S>
struct DiagonalMidpointConic {
  Conic<S> conic;  // ambient coordinates
  std::array<V3<ext_scalar_t<S>>, 6> points;  // semi-midpoints of (P1,P3),(A,C),(B,D)
};

/// conic through the semi-midpoints of the three diagonals (P1,P3), (A,C),
/// (B,D); exact over Q for any rational anisotropic input
template <class S>
DiagonalMidpointConic<S> theorem3_conic(const Metric<S>& g, const Quadrangle<S>& q) {
  for (const HPoint<S>* p : {&q.a, &q.b, &q.c, &q.d, &q.p1, &q.p2, &q.p3})
    if (g.is_isotropic(p->vec()))
      fail(errc::isotropic_element, "vertex or diagonal point is isotropic");
  // raw diagonal basis (P1, P2, P3), vertices scaled to 2nd coordinate 1
  const V3<S>&u1 = q.p1.vec(), &u2 = q.p2.vec(), &u3 = q.p3.vec();
  std::array<V3<S>, 4> co;
  const HPoint<S>* vs[4] = {&q.a, &q.b, &q.c, &q.d};
  for (int i = 0; i < 4; ++i) {
    V3<S> x = coords_in_basis(vs[i]->vec(), u1, u2, u3);
    bool zero2;
    if constexpr (scal<S>::exact)
      zero2 = scal<S>::is_zero(x.y);
    else
      zero2 = scal<S>::is_zero_at(x.y, sup_norm(x));
    if (zero2) fail(errc::degenerate_quadrangle, "vertex on the diagonal P1 v P3");
    S inv = S(1) / x.y;
    co[i] = {x.x * inv, S(1), x.z * inv};
  }
  S s = -co[0].x, t = co[0].z;
  Sym3<S> gf = congruent(g.g(), u1, u2, u3);
  S q11 = gf.m11, q33 = gf.m33;
  S qa = gf.q(co[0]), qb = gf.q(co[1]), qc = gf.q(co[2]), qd = gf.q(co[3]);
  S u2sq = scal<S>::abs(q11) / scal<S>::abs(q33);
  S v2sq = scal<S>::abs(qa) / scal<S>::abs(qc);
  S w2sq = scal<S>::abs(qb) / scal<S>::abs(qd);
  Sym3<S> mf = six_point_matrix(s, t, u2sq, v2sq, w2sq);
  DiagonalMidpointConic<S> out{Conic<S>(normalize_rep(pullback_to_ambient(mf, u1, u2, u3))), {}};
  // ambient representatives of the six semi-midpoints, one radical per pair
  using E = ext_scalar_t<S>;
  auto sqrt_e = [](const S& x) {
    if constexpr (scal<S>::exact)
      return QExt::sqrt_of(x);
    else
      return std::sqrt(x);
  };
  E uu = sqrt_e(u2sq), vv = sqrt_e(v2sq), ww = sqrt_e(w2sq);
  V3<E> U1 = vcast<E>(u1), U3 = vcast<E>(u3);
  out.points[0] = U1 + uu * U3;
  out.points[1] = U1 - uu * U3;
  auto amb = [&](const V3<S>& f) {
    return vcast<E>(V3<S>(f.x * u1 + f.y * u2 + f.z * u3));
  };
  out.points[2] = amb(co[0]) + vv * amb(co[2]);
  out.points[3] = amb(co[0]) - vv * amb(co[2]);
  out.points[4] = amb(co[1]) + ww * amb(co[3]);
  out.points[5] = amb(co[1]) - ww * amb(co[3]);
  return out;
}

// ---------------------------------------------------------------------------
// six-point and nine-point conics
// ---------------------------------------------------------------------------

inline constexpr std::array<std::pair<int, int>, 6> kVertexPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// inner semi-midpoints of the six tetragraph sides, in pair order
/// (A,B),(A,C),(A,D),(B,C),(B,D),(C,D)
template <class S>
std::array<V3<ext_scalar_t<S>>, 6> tetragraph_midpoints(const Metric<S>& g,
                                                        const Quadrangle<S>& q,
                                                        const std::array<seg_sign, 6>& signs) {
  std::array<V3<ext_scalar_t<S>>, 6> out;
  for (int k = 0; k < 6; ++k) {
    auto [i, j] = kVertexPairs[k];
    auto sm = semi_midpoints(g, q.vertex(i), q.vertex(j));
    out[k] = signs[k] == seg_sign::plus ? sm.m : sm.n;
  }
  return out;
}

/// fit through five inner semi-midpoints, verify the sixth; NoConic (nullopt)
/// when the sixth residual is nonzero. Exact backend needs unit vertices.
template <class S>
std::optional<Conic<S>> tetragraph_six_point_conic(const Metric<S>& g, const Quadrangle<S>& q,
                                                   const std::array<seg_sign, 6>& signs) {
  std::array<V3<S>, 4> nv;
  for (int i = 0; i < 4; ++i) {
    auto n = normalize(g, q.vertex(i).vec());
    if constexpr (scal<S>::exact) {
      if (!n.unit) fail(errc::not_normalizable, "vertex norm is not a perfect square");
    }
    nv[i] = n.vec;
  }
  HPoint<S> seed(V3<S>{S(1), S(0), S(0)});
  std::array<HPoint<S>, 5> five{seed, seed, seed, seed, seed};
  for (int k = 0; k < 5; ++k) {
    auto [i, j] = kVertexPairs[k];
    five[k] = HPoint<S>(signs[k] == seg_sign::plus ? nv[i] + nv[j] : nv[i] - nv[j]);
  }
  Conic<S> k = conic_through_five(five);
  auto sm = semi_midpoints(g, q.vertex(2), q.vertex(3));
  const auto& sixth = signs[5] == seg_sign::plus ? sm.m : sm.n;
  if (!vanishes_on(k, sixth)) return std::nullopt;
  return k;
}

/// Nine-point data of one circle branch through the vertices.
template <class S>
struct NinePointData {
  int tri_index = 0;                      // which circumcircle of (A,B,C)
  std::array<int, 4> vertex_flips{};      // eps_A..eps_C, sigma_D; side sign = product
  Conic<S> conic;                         // the nine-point conic
  HPoint<S> center;                       // circle center O_i (tenth point)
  Conic<S> circle;                        // the circumscribing circle
  HLine<S> outer_line;                    // L = dual of O_i (carries all outer midpoints)
  std::vector<V3<ext_scalar_t<S>>> q_points;  // conic cap L (Q1, Q2) when computable
  bool singular = false;
};

/// nine-point conics of a concyclic quadrangle, one per circle through the
/// vertices (empty when not concyclic). Exact backend needs unit vertices
/// for A, B, C (D may be any rational point).
template <class S>
std::vector<NinePointData<S>> nine_point_conic(const Metric<S>& g, const Quadrangle<S>& q) {
  using E = ext_scalar_t<S>;
  std::vector<NinePointData<S>> out;
  std::vector<int> branch = concyclic(g, q.a, q.b, q.c, q.d);
  if (branch.empty()) return out;
  auto na = normalize(g, q.a.vec()), nb = normalize(g, q.b.vec()), nc = normalize(g, q.c.vec());
  auto nd = normalize(g, q.d.vec());
  for (int i : branch) {
    auto cc = circumcircle(g, i, q.a, q.b, q.c);
    auto f = triangle_flips(i);
    // five rational incident points: diagonal triangle + center + one midpoint
    V3<S> mab = S(f[0]) * na.vec + S(f[1]) * nb.vec;
    std::array<HPoint<S>, 5> five{q.p1, q.p2, q.p3, cc.center, HPoint<S>(mab)};
    Conic<S> npc = conic_through_five(five);
    // remaining within-ABC midpoints must land on it
    V3<S> mbc = S(f[1]) * nb.vec + S(f[2]) * nc.vec;
    V3<S> mac = S(f[0]) * na.vec + S(f[2]) * nc.vec;
    if (!vanishes_on(npc, mbc) || !vanishes_on(npc, mac))
      fail(errc::degenerate_input, "nine-point fit failed its own incidences");
    // sigma branch for D: all three D-side midpoints on the conic
    auto d_mid = [&](int x, int sigma) -> V3<E> {
      const V3<S>* vx = x == 0 ? &na.vec : (x == 1 ? &nb.vec : &nc.vec);
      if constexpr (scal<S>::exact) {
        QExt root = QExt::sqrt_of(nd.q.abs());
        return root * vcast<E>(S(f[x]) * *vx) + QExt(Rat(sigma)) * vcast<E>(nd.vec);
      } else {
        return S(f[x]) * *vx + S(sigma) * nd.vec;
      }
    };
    int sigma_d = 0;
    for (int sg : {+1, -1}) {
      bool all = true;
      for (int x = 0; x < 3; ++x)
        if (!vanishes_on(npc, d_mid(x, sg))) all = false;
      if (all) {
        sigma_d = sg;
        break;
      }
    }
    if (sigma_d == 0) fail(errc::degenerate_input, "no D-branch fits the nine-point conic");
    NinePointData<S> data{i,
                          {f[0], f[1], f[2], sigma_d},
                          npc,
                          cc.center,
                          cc.conic,
                          HLine<S>(g.dual_line(cc.center.vec())),
                          {},
                          npc.singular()};
    if (!data.singular) {
      try {
        auto pts = line_conic_intersect(data.outer_line, npc);
        for (auto& p : pts) data.q_points.push_back(p);
      } catch (const geom_error&) {
        data.q_points.clear();
      }
    }
    out.push_back(std::move(data));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bocher and Odehnal (projective nine-point constructions)
// ---------------------------------------------------------------------------

template <class S>
struct BocherData {
  Conic<S> conic;
  std::array<HPoint<S>, 6> conjugates;  // P'_xy in pair order
};

/// conic through the six harmonic conjugates of L's trace on the sidelines
/// and the three diagonal points
template <class S>
BocherData<S> bocher_nine_point(const Quadrangle<S>& q, const HLine<S>& l) {
  for (int i = 0; i < 4; ++i)
    if (incident(l, q.vertex(i))) fail(errc::line_through_vertex, "L passes through a vertex");
  std::array<std::optional<HPoint<S>>, 6> conj;
  for (int k = 0; k < 6; ++k) {
    auto [i, j] = kVertexPairs[k];
    HLine<S> side = join(q.vertex(i), q.vertex(j));
    HPoint<S> pxy = meet(side, l);
    conj[k] = harmonic_conjugate(pxy, q.vertex(i), q.vertex(j));
  }
  std::array<HPoint<S>, 5> five{*conj[0], *conj[1], *conj[2], *conj[3], q.p1};
  Conic<S> k = conic_through_five(five);
  for (int m = 4; m < 6; ++m)
    if (!on_conic(k, *conj[m])) fail(errc::degenerate_input, "Bocher incidence failed");
  if (!on_conic(k, q.p2) || !on_conic(k, q.p3))
    fail(errc::degenerate_input, "Bocher diagonal-point incidence failed");
  return {k, {*conj[0], *conj[1], *conj[2], *conj[3], *conj[4], *conj[5]}};
}

/// Odehnal's seven points: P = pole(L,K) and, per vertex pair, the meet of
/// P v pole(pair line) with the pair line
template <class S>
std::array<HPoint<S>, 7> odehnal_points(const Quadrangle<S>& q, const Conic<S>& k,
                                        const HLine<S>& l) {
  if (k.singular()) fail(errc::singular_conic, "Odehnal needs a nonsingular conic");
  for (int i = 0; i < 4; ++i)
    if (!on_conic(k, q.vertex(i)))
      fail(errc::k_not_through_vertices, "K must pass through all four vertices");
  for (int i = 0; i < 4; ++i)
    if (incident(l, q.vertex(i))) fail(errc::line_through_vertex, "L passes through a vertex");
  HPoint<S> p = pole(l, k);
  std::array<std::optional<HPoint<S>>, 7> pts;
  for (int m = 0; m < 6; ++m) {
    auto [i, j] = kVertexPairs[m];
    HLine<S> side = join(q.vertex(i), q.vertex(j));
    HPoint<S> sp = pole(side, k);
    pts[m] = meet(join(p, sp), side);
  }
  pts[6] = p;
  return {*pts[0], *pts[1], *pts[2], *pts[3], *pts[4], *pts[5], *pts[6]};
}

/// the three singular conics of the pencil through the vertices
template <class S>
std::array<Conic<S>, 3> vertex_pencil_degenerates(const Quadrangle<S>& q) {
  auto lp = [&](const HPoint<S>& w, const HPoint<S>& x, const HPoint<S>& y, const HPoint<S>& z) {
    return Conic<S>(line_pair(join(w, x).vec(), join(y, z).vec()));
  };
  return {lp(q.a, q.b, q.c, q.d), lp(q.a, q.c, q.b, q.d), lp(q.a, q.d, q.b, q.c)};
}

/// member of the pencil through the vertices with parameter mu:
/// K1 + mu*K2 over the (AB|CD), (AC|BD) degenerate pair
template <class S>
Conic<S> vertex_pencil_member(const Quadrangle<S>& q, const S& mu) {
  auto degs = vertex_pencil_degenerates(q);
  Sym3<S> m = degs[0].mat() + mu * degs[1].mat();
  if (m.is_zero()) fail(errc::degenerate_input, "zero pencil member");
  return Conic<S>(m);
}

/// Theorem 5: for a concyclic quadrangle, every conic of the vertex pencil is
/// either the circle itself or has all of its centers on the nine-point conic
template <class S>
bool theorem5_check(const Metric<S>& g, const NinePointData<S>& np, const Conic<S>& k) {
  if (k == np.circle) return true;
  if (k.singular()) {
    // singular members are side-line pairs; the pair vertex (a diagonal
    // point) is their only center
    const Sym3<S>& m = k.mat();
    V3<S> vertex = solve_linear_3<S>(
        {{m.m11, m.m12, m.m13}, {m.m12, m.m22, m.m23}, {m.m13, m.m23, m.m33}});
    return vanishes_on(np.conic, vertex);
  }
  auto sym = symmetry_set(g, k);
  if (sym.is_circle()) {
    return vanishes_on(np.conic, *sym.center);
  }
  for (const auto& p : sym.points)
    if (!vanishes_on(np.conic, p)) return false;
  if (!sym.exact_complete) {
    Metric<double> gm{Sym3<double>(to_double(g.g()))};
    Conic<double> kf{Sym3<double>(to_double(k.mat()))};
    Conic<double> npf{Sym3<double>(to_double(np.conic.mat()))};
    auto symf = symmetry_set(gm, kf);
    for (const auto& p : symf.points)
      if (!vanishes_on(npf, p)) return false;
  }
  return true;
}

}  // namespace ck
