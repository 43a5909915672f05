#pragma once

// Linear algebra over a division algebra D.
//
// Convention: D^n is a RIGHT vector space (scalars multiply vectors on the
// right) and matrices act on the left. Column operations are right
// multiplication by invertible matrices, so they preserve column spans as
// right subspaces; this is what makes the column echelon form canonical.

#include <cstddef>
#include <vector>

#include "fod/algebra.hpp"
#include "fod/random.hpp"

namespace fod {

/// A column vector in D^n: one coordinate vector per entry.
using DVector = std::vector<QVector>;

class MatrixOverD {
 public:
  MatrixOverD(AlgebraPtr algebra, std::size_t rows, std::size_t cols);

  static MatrixOverD identity(const AlgebraPtr& algebra, std::size_t n);
  /// lambda * identity
  static MatrixOverD scalar(const AlgebraPtr& algebra, std::size_t n, const QVector& lambda);
  static MatrixOverD from_columns(const AlgebraPtr& algebra, std::size_t rows, const std::vector<DVector>& columns);
  /// Inverse of flatten().
  static MatrixOverD from_flat(const AlgebraPtr& algebra, std::size_t rows, std::size_t cols, const QVector& flat);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  QVector& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const QVector& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Element element(std::size_t r, std::size_t c) const { return {algebra_, (*this)(r, c)}; }

  DVector column(std::size_t c) const;
  bool is_zero() const;

  /// Coordinates over Q, entry (r, c) coordinate u at index (r * cols + c) * d + u.
  QVector flatten() const;

  MatrixOverD operator*(const MatrixOverD& other) const;
  MatrixOverD operator+(const MatrixOverD& other) const;
  MatrixOverD operator-(const MatrixOverD& other) const;
  DVector operator*(const DVector& v) const;
  bool operator==(const MatrixOverD& other) const;

  /// Every entry multiplied on the right by lambda.
  MatrixOverD right_scale(const QVector& lambda) const;

 private:
  AlgebraPtr algebra_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<QVector> entries_;
};

/// A right D-subspace of D^n held in reduced column echelon form: pivot rows
/// strictly increase left to right, each pivot entry is 1, and every pivot
/// row is zero outside its pivot column. Equal subspaces have identical
/// basis matrices, so operator== is subspace equality.
class RightSubspace {
 public:
  static RightSubspace zero(const AlgebraPtr& algebra, std::size_t n);
  static RightSubspace full(const AlgebraPtr& algebra, std::size_t n);

  const AlgebraPtr& algebra() const noexcept { return basis_.algebra(); }
  std::size_t ambient_dim() const noexcept { return basis_.rows(); }
  std::size_t dim() const noexcept { return basis_.cols(); }
  const MatrixOverD& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivot_rows() const noexcept { return pivots_; }

  bool contains(const DVector& v) const;
  bool contains(const RightSubspace& other) const;

  bool operator==(const RightSubspace& other) const { return basis_ == other.basis_; }

 private:
  friend RightSubspace column_echelon(const MatrixOverD& m);
  RightSubspace(MatrixOverD basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  MatrixOverD basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical form of the right column span of m. Pivots are chosen scanning
/// rows top-down, taking the leftmost unused column with a nonzero entry.
RightSubspace column_echelon(const MatrixOverD& m);
RightSubspace span_of(const AlgebraPtr& algebra, std::size_t n, const std::vector<DVector>& vectors);

std::size_t rank(const MatrixOverD& m);

/// Basis of {v in D^m : M v = 0}, a right subspace of D^m.
std::vector<DVector> right_kernel(const MatrixOverD& m);

RightSubspace subspace_sum(const RightSubspace& u, const RightSubspace& w);
RightSubspace subspace_intersect(const RightSubspace& u, const RightSubspace& w);

/// Two-sided inverse; throws ValidationError when singular.
MatrixOverD matrix_inv(const MatrixOverD& p);
bool is_invertible(const MatrixOverD& p);

/// Canonical form of P * basis(V).
RightSubspace apply_matrix(const MatrixOverD& p, const RightSubspace& v);

MatrixOverD apply_sigma(const AlgebraAutomorphism& sigma, const MatrixOverD& m);
RightSubspace apply_sigma(const AlgebraAutomorphism& sigma, const RightSubspace& v);

constexpr std::int64_t kDefaultHeight = 10;

QVector random_element(const AlgebraPtr& algebra, Rng& rng, std::int64_t height);
MatrixOverD random_matrix(const AlgebraPtr& algebra, std::size_t rows, std::size_t cols, Rng& rng,
                          std::int64_t height = kDefaultHeight);
/// Random invertible n x n matrix (redraws until invertible).
MatrixOverD random_invertible(const AlgebraPtr& algebra, std::size_t n, Rng& rng,
                              std::int64_t height = kDefaultHeight);

/// Draws n x k matrices until one has rank k; deterministic per
/// (algebra, n, k, seed, height). Throws InconclusiveSearch after 1000 draws.
RightSubspace random_subspace(const AlgebraPtr& algebra, std::size_t n, std::size_t k, Seed seed,
                              std::int64_t height = kDefaultHeight);

}  // namespace fod
