#include "fod/qmatrix.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace fod {

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw std::invalid_argument("QMatrix: data size mismatch");
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(std::size_t rows, const std::vector<QVector>& columns) {
  QMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("QMatrix::from_columns: ragged input");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QVector QMatrix::row(std::size_t r) const {
  return QVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("QMatrix: shape mismatch in product");
  QMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        if (other(k, j) != 0) out(i, j) += a * other(k, j);
      }
    }
  }
  return out;
}

QVector QMatrix::operator*(const QVector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("QMatrix: shape mismatch in matrix-vector product");
  QVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (v[k] != 0 && (*this)(i, k) != 0) out[i] += (*this)(i, k) * v[k];
    }
  }
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool QMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

std::vector<std::size_t> QMatrix::rref_in_place() {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < cols_ && lead_row < rows_; ++c) {
    std::size_t p = lead_row;
    while (p < rows_ && (*this)(p, c) == 0) ++p;
    if (p == rows_) continue;
    if (p != lead_row) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(lead_row, j));
    }
    const Rational inv = 1 / (*this)(lead_row, c);
    for (std::size_t j = c; j < cols_; ++j) (*this)(lead_row, j) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead_row || (*this)(r, c) == 0) continue;
      const Rational factor = (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j) {
        if ((*this)(lead_row, j) != 0) (*this)(r, j) -= factor * (*this)(lead_row, j);
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

std::size_t QMatrix::rank() const {
  QMatrix copy = *this;
  return copy.rref_in_place().size();
}

std::vector<QVector> QMatrix::nullspace() const {
  QMatrix reduced = *this;
  const auto pivots = reduced.rref_in_place();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<QVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QMatrix> QMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  QMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = 1;
  }
  const auto pivots = aug.rref_in_place();
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::optional<QVector> QMatrix::solve(const QVector& b) const {
  if (b.size() != rows_) throw std::invalid_argument("QMatrix::solve: rhs size mismatch");
  QMatrix aug(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
    aug(r, cols_) = b[r];
  }
  const auto pivots = aug.rref_in_place();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  QVector x(cols_);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, cols_);
  return x;
}

}  // namespace fod
