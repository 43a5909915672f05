#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fod/rational.hpp"

namespace fod {

/// Dense row-major matrix over Q. Used for structure-constant systems,
/// coordinate maps and the Q-linear systems behind centers and conjugators.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);

  static QMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static QMatrix from_columns(std::size_t rows, const std::vector<QVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QVector column(std::size_t c) const;
  QVector row(std::size_t r) const;
  const std::vector<Rational>& data() const noexcept { return data_; }

  QMatrix operator*(const QMatrix& other) const;
  QVector operator*(const QVector& v) const;
  bool operator==(const QMatrix& other) const = default;

  QMatrix transpose() const;
  bool is_identity() const;

  /// Reduced row echelon form, in place. Returns pivot columns.
  std::vector<std::size_t> rref_in_place();
  std::size_t rank() const;

  /// Basis of {x : A x = 0}, one vector per free column, in RREF order.
  std::vector<QVector> nullspace() const;

  std::optional<QMatrix> inverse() const;

  /// Some x with A x = b, or nullopt when inconsistent.
  std::optional<QVector> solve(const QVector& b) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace fod
