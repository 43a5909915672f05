#include "fod/skew_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "fod/error.hpp"

namespace fod {

namespace {

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a.get() != b.get() && !a->same_presentation(*b)) throw ValidationError("algebra mismatch");
}

// Reduced row echelon form by left row operations; preserves the right
// kernel. Returns pivot columns.
std::vector<std::size_t> row_reduce(MatrixOverD& a) {
  const auto& alg = *a.algebra();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t p = lead;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != lead) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(lead, j));
    }
    const QVector inv = alg.inv(a(lead, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(lead, j) = alg.mul(inv, a(lead, j));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || is_zero(a(r, c))) continue;
      const QVector factor = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!is_zero(a(lead, j))) a(r, j) = alg.sub(a(r, j), alg.mul(factor, a(lead, j)));
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

}  // namespace

// ---------------------------------------------------------------------------
// MatrixOverD

MatrixOverD::MatrixOverD(AlgebraPtr algebra, std::size_t rows, std::size_t cols)
    : algebra_(std::move(algebra)), rows_(rows), cols_(cols), entries_(rows * cols, algebra_->zero()) {}

MatrixOverD MatrixOverD::identity(const AlgebraPtr& algebra, std::size_t n) {
  return scalar(algebra, n, algebra->unit());
}

MatrixOverD MatrixOverD::scalar(const AlgebraPtr& algebra, std::size_t n, const QVector& lambda) {
  MatrixOverD m(algebra, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = lambda;
  return m;
}

MatrixOverD MatrixOverD::from_columns(const AlgebraPtr& algebra, std::size_t rows,
                                      const std::vector<DVector>& columns) {
  MatrixOverD m(algebra, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw ValidationError("column has wrong length");
    for (std::size_t r = 0; r < rows; ++r) {
      if (columns[c][r].size() != algebra->dim()) throw ValidationError("entry has wrong coordinate count");
      m(r, c) = columns[c][r];
    }
  }
  return m;
}

MatrixOverD MatrixOverD::from_flat(const AlgebraPtr& algebra, std::size_t rows, std::size_t cols,
                                   const QVector& flat) {
  const std::size_t d = algebra->dim();
  if (flat.size() != rows * cols * d) throw ValidationError("flat coordinate vector has wrong length");
  MatrixOverD m(algebra, rows, cols);
  for (std::size_t e = 0; e < rows * cols; ++e) {
    m.entries_[e] = QVector(flat.begin() + static_cast<std::ptrdiff_t>(e * d),
                            flat.begin() + static_cast<std::ptrdiff_t>((e + 1) * d));
  }
  return m;
}

DVector MatrixOverD::column(std::size_t c) const {
  DVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool MatrixOverD::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const QVector& e) { return fod::is_zero(e); });
}

QVector MatrixOverD::flatten() const {
  QVector flat;
  flat.reserve(entries_.size() * algebra_->dim());
  for (const auto& e : entries_) flat.insert(flat.end(), e.begin(), e.end());
  return flat;
}

MatrixOverD MatrixOverD::operator*(const MatrixOverD& other) const {
  require_same_algebra(algebra_, other.algebra_);
  if (cols_ != other.rows_) throw ValidationError("matrix shape mismatch in product");
  const auto& alg = *algebra_;
  MatrixOverD out(algebra_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const QVector& a = (*this)(i, k);
      if (fod::is_zero(a)) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        if (!fod::is_zero(other(k, j))) out(i, j) = alg.add(out(i, j), alg.mul(a, other(k, j)));
      }
    }
  }
  return out;
}

MatrixOverD MatrixOverD::operator+(const MatrixOverD& other) const {
  require_same_algebra(algebra_, other.algebra_);
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ValidationError("matrix shape mismatch in sum");
  MatrixOverD out(*this);
  for (std::size_t e = 0; e < entries_.size(); ++e) out.entries_[e] = algebra_->add(entries_[e], other.entries_[e]);
  return out;
}

MatrixOverD MatrixOverD::operator-(const MatrixOverD& other) const {
  require_same_algebra(algebra_, other.algebra_);
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ValidationError("matrix shape mismatch in difference");
  MatrixOverD out(*this);
  for (std::size_t e = 0; e < entries_.size(); ++e) out.entries_[e] = algebra_->sub(entries_[e], other.entries_[e]);
  return out;
}

DVector MatrixOverD::operator*(const DVector& v) const {
  if (v.size() != cols_) throw ValidationError("vector length mismatch");
  DVector out(rows_, algebra_->zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (!fod::is_zero(v[k])) out[i] = algebra_->add(out[i], algebra_->mul((*this)(i, k), v[k]));
  return out;
}

bool MatrixOverD::operator==(const MatrixOverD& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_ &&
         (algebra_.get() == other.algebra_.get() || algebra_->same_presentation(*other.algebra_));
}

MatrixOverD MatrixOverD::right_scale(const QVector& lambda) const {
  MatrixOverD out(*this);
  for (auto& e : out.entries_) e = algebra_->mul(e, lambda);
  return out;
}

// ---------------------------------------------------------------------------
// RightSubspace

RightSubspace RightSubspace::zero(const AlgebraPtr& algebra, std::size_t n) {
  return column_echelon(MatrixOverD(algebra, n, 0));
}

RightSubspace RightSubspace::full(const AlgebraPtr& algebra, std::size_t n) {
  return column_echelon(MatrixOverD::identity(algebra, n));
}

bool RightSubspace::contains(const DVector& v) const {
  if (v.size() != ambient_dim()) throw ValidationError("vector length does not match ambient dimension");
  const auto& alg = *algebra();
  // In canonical form the coefficient of basis column l is v[pivot_l].
  DVector residual = v;
  for (std::size_t l = 0; l < pivots_.size(); ++l) {
    const QVector coeff = v[pivots_[l]];
    if (is_zero(coeff)) continue;
    for (std::size_t r = 0; r < residual.size(); ++r) {
      residual[r] = alg.sub(residual[r], alg.mul(basis_(r, l), coeff));
    }
  }
  return std::all_of(residual.begin(), residual.end(), [](const QVector& x) { return is_zero(x); });
}

bool RightSubspace::contains(const RightSubspace& other) const {
  for (std::size_t c = 0; c < other.dim(); ++c) {
    if (!contains(other.basis().column(c))) return false;
  }
  return true;
}

RightSubspace column_echelon(const MatrixOverD& input) {
  MatrixOverD m = input;
  const auto& alg = *m.algebra();
  const std::size_t n = m.rows();
  const std::size_t cols = m.cols();

  std::vector<bool> used(cols, false);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t p = 0;
    while (p < cols && (used[p] || is_zero(m(r, p)))) ++p;
    if (p == cols) continue;
    used[p] = true;
    pivots.emplace_back(r, p);

    // right-multiply column p by the pivot inverse
    const QVector inv = alg.inv(m(r, p));
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_zero(m(i, p))) m(i, p) = alg.mul(m(i, p), inv);
    }
    // col_c <- col_c - col_p * m(r, c), clearing row r everywhere else
    for (std::size_t c = 0; c < cols; ++c) {
      if (c == p || is_zero(m(r, c))) continue;
      const QVector factor = m(r, c);
      for (std::size_t i = 0; i < n; ++i) {
        if (!is_zero(m(i, p))) m(i, c) = alg.sub(m(i, c), alg.mul(m(i, p), factor));
      }
    }
  }

  MatrixOverD basis(m.algebra(), n, pivots.size());
  std::vector<std::size_t> pivot_rows;
  for (std::size_t l = 0; l < pivots.size(); ++l) {
    const auto [row, col] = pivots[l];
    for (std::size_t i = 0; i < n; ++i) basis(i, l) = m(i, col);
    pivot_rows.push_back(row);
  }
  return RightSubspace(std::move(basis), std::move(pivot_rows));
}

RightSubspace span_of(const AlgebraPtr& algebra, std::size_t n, const std::vector<DVector>& vectors) {
  return column_echelon(MatrixOverD::from_columns(algebra, n, vectors));
}

std::size_t rank(const MatrixOverD& m) { return column_echelon(m).dim(); }

std::vector<DVector> right_kernel(const MatrixOverD& m) {
  MatrixOverD reduced = m;
  const auto pivots = row_reduce(reduced);
  const auto& alg = *m.algebra();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<DVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    DVector v(m.cols(), alg.zero());
    v[f] = alg.unit();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = alg.neg(reduced(i, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

RightSubspace subspace_sum(const RightSubspace& u, const RightSubspace& w) {
  require_same_algebra(u.algebra(), w.algebra());
  if (u.ambient_dim() != w.ambient_dim()) throw ValidationError("ambient dimension mismatch");
  std::vector<DVector> cols;
  for (std::size_t c = 0; c < u.dim(); ++c) cols.push_back(u.basis().column(c));
  for (std::size_t c = 0; c < w.dim(); ++c) cols.push_back(w.basis().column(c));
  return span_of(u.algebra(), u.ambient_dim(), cols);
}

RightSubspace subspace_intersect(const RightSubspace& u, const RightSubspace& w) {
  require_same_algebra(u.algebra(), w.algebra());
  if (u.ambient_dim() != w.ambient_dim()) throw ValidationError("ambient dimension mismatch");
  const auto& alg = u.algebra();
  const std::size_t n = u.ambient_dim();
  const std::size_t k = u.dim();
  // U x = W y  <=>  [U | -W] (x; y) = 0
  MatrixOverD stacked(alg, n, k + w.dim());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) stacked(r, c) = u.basis()(r, c);
    for (std::size_t c = 0; c < w.dim(); ++c) stacked(r, k + c) = alg->neg(w.basis()(r, c));
  }
  std::vector<DVector> vectors;
  for (const auto& sol : right_kernel(stacked)) {
    DVector x(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(k));
    vectors.push_back(u.basis() * x);
  }
  return span_of(alg, n, vectors);
}

MatrixOverD matrix_inv(const MatrixOverD& p) {
  if (!p.square()) throw ValidationError("cannot invert a non-square matrix");
  const std::size_t n = p.rows();
  const auto& alg = p.algebra();
  MatrixOverD aug(alg, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = p(r, c);
    aug(r, n + r) = alg->unit();
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw ValidationError("matrix is singular");
  MatrixOverD inv(alg, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  const MatrixOverD id = MatrixOverD::identity(alg, n);
  if (!(p * inv == id) || !(inv * p == id)) throw ValidationError("matrix inverse failed verification");
  return inv;
}

bool is_invertible(const MatrixOverD& p) { return p.square() && rank(p) == p.rows(); }

RightSubspace apply_matrix(const MatrixOverD& p, const RightSubspace& v) {
  if (!p.square() || p.cols() != v.ambient_dim()) throw ValidationError("dimension mismatch in apply_matrix");
  return column_echelon(p * v.basis());
}

MatrixOverD apply_sigma(const AlgebraAutomorphism& sigma, const MatrixOverD& m) {
  require_same_algebra(sigma.algebra(), m.algebra());
  MatrixOverD out(m.algebra(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = sigma.apply(m(r, c));
  return out;
}

RightSubspace apply_sigma(const AlgebraAutomorphism& sigma, const RightSubspace& v) {
  return column_echelon(apply_sigma(sigma, v.basis()));
}

QVector random_element(const AlgebraPtr& algebra, Rng& rng, std::int64_t height) {
  QVector x(algebra->dim());
  for (auto& c : x) c = rng.rational(height);
  return x;
}

MatrixOverD random_matrix(const AlgebraPtr& algebra, std::size_t rows, std::size_t cols, Rng& rng,
                          std::int64_t height) {
  MatrixOverD m(algebra, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_element(algebra, rng, height);
  return m;
}

MatrixOverD random_invertible(const AlgebraPtr& algebra, std::size_t n, Rng& rng, std::int64_t height) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    MatrixOverD m = random_matrix(algebra, n, n, rng, height);
    if (is_invertible(m)) return m;
  }
  throw InconclusiveSearch("no invertible matrix drawn in 1000 attempts", 1000);
}

RightSubspace random_subspace(const AlgebraPtr& algebra, std::size_t n, std::size_t k, Seed seed,
                              std::int64_t height) {
  if (k > n) throw ValidationError("subspace dimension exceeds ambient dimension");
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    RightSubspace v = column_echelon(random_matrix(algebra, n, k, rng, height));
    if (v.dim() == k) return v;
  }
  throw InconclusiveSearch("no rank-" + std::to_string(k) + " draw in 1000 attempts", 1000);
}

}  // namespace fod
