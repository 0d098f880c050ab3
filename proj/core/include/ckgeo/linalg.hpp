#pragma once

#include <vector>

#include "ckgeo/vec3.hpp"

namespace ck {

namespace detail {

/// In-place reduced row echelon form over a field. Pivoting is deterministic:
/// exact scalars take the first nonzero candidate, floats the largest
/// magnitude (ties to the smallest row index). Entries below eps*scale count
/// as zero on the float backend.
template <class S>
struct rref_result {
  int rank = 0;
  std::vector<int> pivot_col;
};

template <class S>
rref_result<S> rref(std::vector<std::vector<S>>& m) {
  rref_result<S> res;
  if (m.empty()) return res;
  const int nr = static_cast<int>(m.size());
  const int nc = static_cast<int>(m[0].size());

  S scale{};
  if constexpr (!scal<S>::exact) {
    for (auto& row : m)
      for (auto& e : row)
        if (scal<S>::abs(e) > scale) scale = scal<S>::abs(e);
  }
  auto negligible = [&](const S& x) {
    if constexpr (scal<S>::exact)
      return scal<S>::is_zero(x);
    else
      return scal<S>::is_zero_at(x, scale);
  };

  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int piv = -1;
    if constexpr (scal<S>::exact) {
      for (int i = r; i < nr; ++i)
        if (!negligible(m[i][c])) { piv = i; break; }
    } else {
      S best{};
      for (int i = r; i < nr; ++i)
        if (!negligible(m[i][c]) && scal<S>::abs(m[i][c]) > best) {
          best = scal<S>::abs(m[i][c]);
          piv = i;
        }
    }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    S inv = S(1) / m[r][c];
    for (int j = c; j < nc; ++j) m[r][j] = m[r][j] * inv;
    m[r][c] = S(1);
    for (int i = 0; i < nr; ++i) {
      if (i == r || negligible(m[i][c])) continue;
      S f = m[i][c];
      for (int j = c; j < nc; ++j) m[i][j] = m[i][j] - f * m[r][j];
      m[i][c] = S(0);
    }
    res.pivot_col.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

/// one kernel vector, deterministic: smallest free column set to 1, all other
/// free columns 0; requires rank < ncols
template <class S>
std::vector<S> kernel_vector(const std::vector<std::vector<S>>& rref_m,
                             const rref_result<S>& info, int ncols) {
  std::vector<bool> is_pivot(ncols, false);
  for (int c : info.pivot_col) is_pivot[c] = true;
  int free_col = -1;
  for (int c = 0; c < ncols; ++c)
    if (!is_pivot[c]) { free_col = c; break; }
  std::vector<S> x(ncols, S(0));
  x[free_col] = S(1);
  for (int i = 0; i < info.rank; ++i) x[info.pivot_col[i]] = -rref_m[i][free_col];
  return x;
}

}  // namespace detail

/// Nonzero kernel vector of a homogeneous 3-column system.
/// FullRank if only the zero solution exists; RankDeficientAmbiguous when the
/// kernel has dimension >= 2 (the caller decides what to do).
template <class S>
V3<S> solve_linear_3(const std::vector<V3<S>>& rows) {
  std::vector<std::vector<S>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back({r.x, r.y, r.z});
  auto info = detail::rref(m);
  int kdim = 3 - info.rank;
  if (kdim == 0) fail(errc::full_rank, "homogeneous system has full rank");
  if (kdim >= 2) fail(errc::rank_deficient_ambiguous, "kernel dimension >= 2");
  auto x = detail::kernel_vector(m, info, 3);
  return normalize_rep(V3<S>{x[0], x[1], x[2]});
}

/// coordinates (a,b) with p = a*u + b*v, for p in the span of u,v
template <class S>
std::pair<S, S> decompose_in_span(const V3<S>& p, const V3<S>& u, const V3<S>& v) {
  // pick the 2x2 minor of (u,v) with the best pivot, deterministically
  int bi = -1, bj = -1;
  S best{};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      S d = u[i] * v[j] - u[j] * v[i];
      if constexpr (scal<S>::exact) {
        if (!scal<S>::is_zero(d)) { bi = i; bj = j; goto found; }
      } else {
        if (scal<S>::abs(d) > best) { best = scal<S>::abs(d); bi = i; bj = j; }
      }
    }
  }
found:
  if (bi < 0) fail(errc::degenerate_input, "span basis is degenerate");
  S d = u[bi] * v[bj] - u[bj] * v[bi];
  S a = (p[bi] * v[bj] - p[bj] * v[bi]) / d;
  S b = (u[bi] * p[bj] - u[bj] * p[bi]) / d;
  return {a, b};
}

/// coordinates of p in the basis (c0,c1,c2); DegenerateBasis if singular
template <class S>
V3<S> coords_in_basis(const V3<S>& p, const V3<S>& c0, const V3<S>& c1, const V3<S>& c2) {
  S d = det3(c0, c1, c2);
  bool degenerate;
  if constexpr (scal<S>::exact)
    degenerate = scal<S>::is_zero(d);
  else
    degenerate = scal<S>::is_zero_at(d, sup_norm(c0) * sup_norm(c1) * sup_norm(c2));
  if (degenerate) fail(errc::degenerate_basis, "basis vectors are coplanar");
  return {det3(p, c1, c2) / d, det3(c0, p, c2) / d, det3(c0, c1, p) / d};
}

}  // namespace ck
