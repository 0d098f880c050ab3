#pragma once

#include <optional>

#include "ckgeo/metric.hpp"
#include "ckgeo/poly.hpp"

namespace ck {

/// symmetric sandwich product A * M * A for symmetric A, M
template <class S>
Sym3<S> sandwich(const Sym3<S>& a, const Sym3<S>& m) {
  V3<S> c0{a.m11, a.m12, a.m13}, c1{a.m12, a.m22, a.m23}, c2{a.m13, a.m23, a.m33};
  return congruent(m, c0, c1, c2);
}

/// dual of a nonsingular point conic: G * adj(K) * G (a point conic again)
template <class S>
Conic<S> dual_conic(const Metric<S>& g, const Conic<S>& k) {
  if (k.singular()) fail(errc::singular_conic, "dual of a singular conic");
  return Conic<S>(normalize_rep(sandwich(g.g(), k.mat().adjugate())));
}

/// inside <=> the polar of P misses K (negative restricted discriminant)
template <class S>
bool point_inside_conic(const Conic<S>& k, const HPoint<S>& p) {
  if (k.singular()) fail(errc::singular_conic, "inside test for a singular conic");
  if (on_conic(k, p)) fail(errc::point_on_conic, "point lies on the conic");
  HLine<S> pol = polar(p, k);
  auto r = restrict_to_line(k, pol);
  return scal<S>::sign(r.disc()) < 0;
}

enum class circle_kind { proper_inside, proper_outside, hypercycle, horocycle, not_a_circle };

inline const char* circle_kind_name(circle_kind k) {
  switch (k) {
    case circle_kind::proper_inside: return "proper-inside";
    case circle_kind::proper_outside: return "proper-outside";
    case circle_kind::hypercycle: return "hypercycle";
    case circle_kind::horocycle: return "horocycle";
    case circle_kind::not_a_circle: return "not-a-circle";
  }
  return "?";
}

/// Symmetry structure of a nonsingular conic relative to the metric:
/// isolated symmetry points (<= 3) or, for circles, a full axis plus center.
/// On the rational backend values live in Q(sqrt(k)); when the pencil cubic
/// resists exact factoring, exact_complete is false and the float mirror is
/// the documented fallback.
template <class E>
struct SymmetrySet {
  std::vector<V3<E>> points;
  std::optional<V3<E>> axis;    // line coefficients
  std::optional<V3<E>> center;  // pole of the axis
  bool exact_complete = true;
  bool is_circle() const { return axis.has_value(); }
};

namespace detail {

/// adjugate entries of K - lambda*G as quadratics in lambda, via evaluation
/// at lambda = 0, +1, -1
template <class S>
std::array<Poly<S>, 6> pencil_adjugate_polys(const Sym3<S>& k, const Sym3<S>& g) {
  Sym3<S> a0 = k.adjugate();
  Sym3<S> ap = (k - g).adjugate();
  Sym3<S> am = (k + g).adjugate();
  auto entry = [](const Sym3<S>& m, int i) -> const S& {
    switch (i) {
      case 0: return m.m11;
      case 1: return m.m12;
      case 2: return m.m13;
      case 3: return m.m22;
      case 4: return m.m23;
      default: return m.m33;
    }
  };
  std::array<Poly<S>, 6> out;
  S half = S(1) / S(2);
  for (int i = 0; i < 6; ++i) {
    S c0 = entry(a0, i);
    S c1 = half * (entry(ap, i) - entry(am, i));
    S c2 = half * (entry(ap, i) + entry(am, i)) - c0;
    out[i].c = {c0, c1, c2};
  }
  return out;
}

/// characteristic cubic det(K - lambda*G), via evaluation at 0, +-1, 2
template <class S>
Poly<S> pencil_char_cubic(const Sym3<S>& k, const Sym3<S>& g) {
  S d0 = k.det();
  S dp = (k - g).det();
  S dm = (k + g).det();
  S d2 = (k - (S(2) * g)).det();
  // f(x) = c0 + c1 x + c2 x^2 + c3 x^3 at x = 0,1,-1,2
  S c0 = d0;
  S half = S(1) / S(2);
  S sixth = S(1) / S(6);
  S c2 = half * (dp + dm) - d0;
  // dp - dm = 2 c1 + 2 c3 ; d2 = c0 + 2 c1 + 4 c2 + 8 c3
  S c1_plus_c3 = half * (dp - dm);
  S c3 = sixth * (d2 - c0 - S(2) * c1_plus_c3 - S(4) * c2);
  S c1 = c1_plus_c3 - c3;
  Poly<S> p;
  p.c = {c0, c1, c2, c3};
  return p;
}

/// kernel vector of the pencil member K - lambda*G over the scalar of lambda
template <class E>
std::optional<V3<E>> pencil_kernel(const Sym3<E>& k, const Sym3<E>& g, const E& lam) {
  Sym3<E> m = k - lam * g;
  std::vector<V3<E>> rows = {{m.m11, m.m12, m.m13}, {m.m12, m.m22, m.m23}, {m.m13, m.m23, m.m33}};
  try {
    return solve_linear_3<E>(rows);
  } catch (const geom_error&) {
    return std::nullopt;  // rank != 2: circle member or full rank
  }
}

/// rank-1 member axis: any nonzero row of K - lambda*G
template <class E>
std::optional<V3<E>> rank1_axis(const Sym3<E>& k, const Sym3<E>& g, const E& lam) {
  Sym3<E> m = k - lam * g;
  std::array<V3<E>, 3> rows = {V3<E>{m.m11, m.m12, m.m13}, V3<E>{m.m12, m.m22, m.m23},
                               V3<E>{m.m13, m.m23, m.m33}};
  // verify rank <= 1: all cross products of row pairs vanish
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!cross(rows[i], rows[j]).is_zero()) return std::nullopt;
  for (auto& r : rows)
    if (!r.is_zero()) return r;
  return std::nullopt;  // rank 0: K proportional to G
}

}  // namespace detail

/// exact symmetry analysis on the rational backend
SymmetrySet<QExt> symmetry_set(const Metric<Rat>& g, const Conic<Rat>& k);
/// float-backend symmetry analysis (eps-clustered eigenvalues)
SymmetrySet<double> symmetry_set(const Metric<double>& g, const Conic<double>& k);

inline SymmetrySet<QExt> symmetry_set(const Metric<Rat>& g, const Conic<Rat>& k) {
  if (k.singular()) fail(errc::singular_conic, "symmetry points of a singular conic");
  if (projectively_equal(k.mat(), g.g())) fail(errc::k_is_absolute, "K is the absolute conic");
  SymmetrySet<QExt> out;

  // circle test: the pencil contains a rank-1 member iff the gcd of the
  // adjugate quadratics has a real root
  auto adjq = detail::pencil_adjugate_polys(k.mat(), g.g());
  Poly<Rat> gc;
  gc.c = {};
  for (auto& p : adjq) {
    p.trim();
    if (p.is_zero()) continue;
    gc = gc.is_zero() ? p : poly_gcd(gc, p);
  }
  auto kq = mcast<QExt>(k.mat());
  auto gq = mcast<QExt>(g.g());
  std::vector<QExt> circle_lams;
  if (!gc.is_zero() && gc.deg() >= 1) {
    if (gc.deg() == 1) {
      circle_lams.push_back(QExt(-gc.c[0] / gc.c[1]));
    } else if (gc.deg() == 2) {
      Rat disc = gc.c[1] * gc.c[1] - Rat(4) * gc.c[2] * gc.c[0];
      if (disc.sign() >= 0) {
        QExt sq = QExt::sqrt_of(disc);
        QExt den = QExt(Rat(2) * gc.c[2]);
        circle_lams.push_back((QExt(-gc.c[1]) + sq) / den);
        circle_lams.push_back((QExt(-gc.c[1]) - sq) / den);
      }
    }
  }
  for (const auto& lam : circle_lams) {
    if (auto axis = detail::rank1_axis(kq, gq, lam)) {
      out.axis = *axis;
      out.center = mcast<QExt>(g.g().adjugate()).mv(*axis);
      return out;
    }
  }

  // isolated symmetry points: real eigenvalues of the pencil cubic
  Poly<Rat> cubic = detail::pencil_char_cubic(k.mat(), g.g());
  cubic.trim();
  std::vector<Rat> rat_roots;
  Poly<Rat> rem = cubic;
  auto numeric = cubic_real_roots(cubic.c.size() > 0 ? cubic.c[0].to_double() : 0.0,
                                  cubic.c.size() > 1 ? cubic.c[1].to_double() : 0.0,
                                  cubic.c.size() > 2 ? cubic.c[2].to_double() : 0.0,
                                  cubic.c.size() > 3 ? cubic.c[3].to_double() : 0.0);
  for (double r : numeric) {
    if (auto cand = reconstruct_rational(r)) {
      if (rem.deg() >= 1 && scal<Rat>::is_zero(rem.eval(*cand))) {
        rat_roots.push_back(*cand);
        // synthetic division by (x - cand)
        Poly<Rat> quot;
        quot.c.assign(rem.deg(), Rat(0));
        Rat carry(0);
        for (int i = rem.deg(); i >= 1; --i) {
          carry = rem.c[i] + carry * *cand;
          quot.c[i - 1] = carry;
        }
        rem = quot;
      }
    }
  }
  std::vector<QExt> lams;
  for (const auto& r : rat_roots) lams.emplace_back(r);
  if (rem.deg() == 2) {
    Rat disc = rem.c[1] * rem.c[1] - Rat(4) * rem.c[2] * rem.c[0];
    if (disc.sign() >= 0) {
      QExt sq = QExt::sqrt_of(disc);
      QExt den = QExt(Rat(2) * rem.c[2]);
      lams.push_back((QExt(-rem.c[1]) + sq) / den);
      if (disc.sign() > 0) lams.push_back((QExt(-rem.c[1]) - sq) / den);
    }
  } else if (rem.deg() == 1) {
    lams.emplace_back(-rem.c[0] / rem.c[1]);
  } else if (rem.deg() == 3) {
    out.exact_complete = false;  // irreducible cubic: fall back to floats
  }
  for (const auto& lam : lams) {
    auto v = detail::pencil_kernel(kq, gq, lam);
    if (!v) continue;
    if (mcast<QExt>(g.g()).q(*v).is_zero()) continue;  // anisotropic only
    bool dup = false;
    for (const auto& w : out.points)
      if (cross(*v, w).is_zero()) dup = true;
    if (!dup) out.points.push_back(*v);
  }
  return out;
}

inline SymmetrySet<double> symmetry_set(const Metric<double>& g, const Conic<double>& k) {
  if (k.singular()) fail(errc::singular_conic, "symmetry points of a singular conic");
  if (projectively_equal(k.mat(), g.g())) fail(errc::k_is_absolute, "K is the absolute conic");
  SymmetrySet<double> out;
  Poly<double> cubic = detail::pencil_char_cubic(k.mat(), g.g());
  auto roots = cubic_real_roots(cubic.c[0], cubic.c[1], cubic.c[2], cubic.c[3]);
  double scale = 0;
  for (double r : roots) scale = std::max(scale, std::abs(r));
  // eps-cluster close eigenvalues: a double eigenvalue signals a circle
  std::sort(roots.begin(), roots.end());
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    if (std::abs(roots[i] - roots[i + 1]) <= 1e-7 * std::max(scale, 1.0)) {
      double lam = 0.5 * (roots[i] + roots[i + 1]);
      // axis: dominant row of K - lam G (rank ~1)
      Sym3<double> m = k.mat() - lam * g.g();
      std::array<V3<double>, 3> rows = {V3<double>{m.m11, m.m12, m.m13},
                                        V3<double>{m.m12, m.m22, m.m23},
                                        V3<double>{m.m13, m.m23, m.m33}};
      V3<double> best = rows[0];
      for (auto& r : rows)
        if (sup_norm(r) > sup_norm(best)) best = r;
      out.axis = normalize_rep(best);
      out.center = g.dual_point(*out.axis);
      return out;
    }
  }
  for (double lam : roots) {
    if (auto v = detail::pencil_kernel(k.mat(), g.g(), lam)) {
      if (g.is_isotropic(*v)) continue;
      bool dup = false;
      for (const auto& w : out.points)
        if (projectively_equal(*v, w)) dup = true;
      if (!dup) out.points.push_back(*v);
    }
  }
  return out;
}

template <class S>
bool is_circle(const Metric<S>& g, const Conic<S>& k) {
  return symmetry_set(g, k).is_circle();
}

template <class S>
struct CircleClass {
  circle_kind kind = circle_kind::not_a_circle;
  std::optional<V3<ext_scalar_t<S>>> center;
  // for hyperbolic cycles: whether sampled conic points lie inside the absolute
  std::optional<bool> points_inside_absolute;
};

/// classification by center position: inside the conic -> proper circle
/// (split by sampled conic points' side of the absolute), outside ->
/// hypercycle, isotropic center -> horocycle
template <class S>
CircleClass<S> classify_circle(const Metric<S>& g, const Conic<S>& k) {
  auto sym = symmetry_set(g, k);
  CircleClass<S> out;
  if (!sym.is_circle()) return out;
  out.center = *sym.center;
  using E = ext_scalar_t<S>;
  auto ge = mcast<E>(g.g());
  auto ke = mcast<E>(k.mat());
  const V3<E>& c = *sym.center;
  E qc = ge.q(c);
  bool center_isotropic;
  if constexpr (scal<E>::exact) {
    center_isotropic = qc.is_zero();
  } else {
    E s = sup_norm(c);
    center_isotropic = scal<E>::is_zero_at(qc, ge.sup_entry() * s * s);
  }
  // sample a conic point for the absolute-side sub-flag (hyperbolic only)
  auto sample_side = [&]() -> std::optional<bool> {
    if (g.sig() != signature::hyperbolic) return std::nullopt;
    Sym3<double> kd{scal<E>::to_double(ke.m11), scal<E>::to_double(ke.m12),
                    scal<E>::to_double(ke.m13), scal<E>::to_double(ke.m22),
                    scal<E>::to_double(ke.m23), scal<E>::to_double(ke.m33)};
    Sym3<double> gd{scal<S>::to_double(g.g().m11), scal<S>::to_double(g.g().m12),
                    scal<S>::to_double(g.g().m13), scal<S>::to_double(g.g().m22),
                    scal<S>::to_double(g.g().m23), scal<S>::to_double(g.g().m33)};
    Conic<double> kc(kd);
    for (int i = 0; i < 64; ++i) {
      V3<double> l{std::cos(0.37 * i), std::sin(0.37 * i), std::cos(1.13 * i + 0.5)};
      std::vector<V3<double>> pts;
      try {
        pts = line_conic_intersect(HLine<double>(l), kc);
      } catch (const geom_error&) {
        continue;
      }
      for (auto& p : pts) {
        double q = gd.q(p) / (gd.sup_entry() * sup_norm(p) * sup_norm(p));
        if (std::abs(q) > 1e-6) return q < 0;
      }
    }
    return std::nullopt;
  };
  if (center_isotropic) {
    out.kind = circle_kind::horocycle;
    out.points_inside_absolute = sample_side();
    return out;
  }
  // center on the conic would be isotropic for horocycles; otherwise test side
  E kv = ke.q(c);
  bool center_on;
  if constexpr (scal<E>::exact) {
    center_on = kv.is_zero();
  } else {
    E s = sup_norm(c);
    center_on = scal<E>::is_zero_at(kv, ke.sup_entry() * s * s);
  }
  bool inside;
  if (center_on) {
    inside = false;  // borderline; treated as not-inside
  } else {
    // inside test via restricted discriminant of the polar
    V3<E> pol = ke.mv(c);
    // restrict k to the polar line
    auto [p0, p1] = span_of_line(pol);
    E a = ke.q(p0), b = ke.bil(p0, p1), cc = ke.q(p1);
    inside = scal<E>::sign(b * b - a * cc) < 0;
  }
  if (inside) {
    auto side = sample_side();
    out.points_inside_absolute = side;
    out.kind = (side.has_value() && !*side) ? circle_kind::proper_outside
                                            : circle_kind::proper_inside;
  } else {
    out.kind = circle_kind::hypercycle;
    out.points_inside_absolute = sample_side();
  }
  return out;
}

/// circles: the single center; non-circles: the symmetry points
template <class S>
std::vector<V3<ext_scalar_t<S>>> centers(const Metric<S>& g, const Conic<S>& k) {
  auto sym = symmetry_set(g, k);
  if (sym.is_circle()) return {*sym.center};
  return sym.points;
}

}  // namespace ck
