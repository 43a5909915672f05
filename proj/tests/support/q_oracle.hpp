#pragma once

// Plain Gauss-Jordan over Q on nested vectors. Shares no code with the
// library; used to cross-check the division-ring routines at D = Q.

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Mat = std::vector<std::vector<mpq_class>>;  // row-major, rows x cols

inline Mat zeros(std::size_t r, std::size_t c) { return Mat(r, std::vector<mpq_class>(c)); }

inline std::size_t cols(const Mat& a) { return a.empty() ? 0 : a[0].size(); }

inline Mat transpose(const Mat& a, std::size_t ncols) {
  Mat t = zeros(ncols, a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < ncols; ++c) t[c][r] = a[r][c];
  return t;
}

/// RREF in place; returns pivot columns.
inline std::vector<std::size_t> rref(Mat& a) {
  std::vector<std::size_t> pivots;
  const std::size_t m = a.size(), n = cols(a);
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < m; ++c) {
    std::size_t p = row;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    const mpq_class lead = a[row][c];
    for (auto& x : a[row]) x /= lead;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || a[r][c] == 0) continue;
      const mpq_class f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(Mat a) { return rref(a).size(); }

/// Columns spanning {x : A x = 0}, as a list of vectors.
inline std::vector<std::vector<mpq_class>> kernel(Mat a, std::size_t ncols) {
  const auto piv = rref(a);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::vector<mpq_class>> out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> v(ncols);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

/// Columns given as a list of vectors of length n -> n x k matrix.
inline Mat from_columns(const std::vector<std::vector<mpq_class>>& vs, std::size_t n) {
  Mat m = zeros(n, vs.size());
  for (std::size_t c = 0; c < vs.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) m[r][c] = vs[c][r];
  return m;
}

inline std::vector<std::vector<mpq_class>> columns_of(const Mat& m, std::size_t ncols) {
  std::vector<std::vector<mpq_class>> out(ncols, std::vector<mpq_class>(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < ncols; ++c) out[c][r] = m[r][c];
  return out;
}

/// Reduced column echelon form = transpose of the RREF of the transpose,
/// zero columns dropped.
inline Mat column_echelon(const Mat& m, std::size_t ncols) {
  Mat t = transpose(m, ncols);
  const std::size_t r = rref(t).size();
  t.resize(r);
  return transpose(t, m.size());
}

/// Orthogonal complement of the column span of an n x k matrix.
inline std::vector<std::vector<mpq_class>> perp(const Mat& m, std::size_t ncols) {
  return kernel(transpose(m, ncols), m.size());
}

/// U + W, canonical.
inline Mat sum(const Mat& u, std::size_t ku, const Mat& w, std::size_t kw) {
  auto vs = columns_of(u, ku);
  auto ws = columns_of(w, kw);
  vs.insert(vs.end(), ws.begin(), ws.end());
  return column_echelon(from_columns(vs, u.size()), vs.size());
}

/// U ∩ W = (U^perp + W^perp)^perp, canonical.
inline Mat intersect(const Mat& u, std::size_t ku, const Mat& w, std::size_t kw) {
  const std::size_t n = u.size();
  auto ps = perp(u, ku);
  auto pw = perp(w, kw);
  ps.insert(ps.end(), pw.begin(), pw.end());
  auto back = ps.empty() ? std::vector<std::vector<mpq_class>>{} : perp(from_columns(ps, n), ps.size());
  if (ps.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<mpq_class> e(n);
      e[i] = 1;
      back.push_back(std::move(e));
    }
  }
  if (back.empty()) return zeros(n, 0);
  return column_echelon(from_columns(back, n), back.size());
}

/// Gauss-Jordan inverse on [A | I]; empty when singular.
inline Mat inverse(const Mat& a) {
  const std::size_t n = a.size();
  Mat aug = zeros(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = a[r][c];
    aug[r][n + r] = 1;
  }
  const auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return {};
  Mat inv = zeros(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv[r][c] = aug[r][n + c];
  return inv;
}

}  // namespace oracle
