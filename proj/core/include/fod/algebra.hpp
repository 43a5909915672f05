#pragma once

// Finite-dimensional associative algebras over Q given by structure
// constants, their elements, centers and automorphisms.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fod/qmatrix.hpp"
#include "fod/rational.hpp"

namespace fod {

class DivisionAlgebra;
using AlgebraPtr = std::shared_ptr<const DivisionAlgebra>;

/// An associative Q-algebra of dimension d, presented by b_i * b_j in the
/// basis (b_0, ..., b_{d-1}). The division property is assumed, not
/// certified: any failed inversion raises DataError naming the element.
class DivisionAlgebra {
 public:
  /// Validates associativity on all d^3 basis triples and that `unit` is a
  /// two-sided identity. `table[i][j]` holds the coordinates of b_i b_j.
  static AlgebraPtr from_table(std::vector<std::string> labels, std::vector<std::vector<QVector>> table,
                               QVector unit);

  /// Q[x]/(p) for a monic integer polynomial given by ascending coefficients
  /// (c_0, ..., c_{m-1}, 1). Basis 1, x, ..., x^{m-1}.
  ///
  /// Irreducibility is only checked partially: integer roots, then monic
  /// factors of degree 2 and 3 within the Mignotte coefficient bound (which
  /// is complete up to degree 7 when the search budget is not exceeded).
  static AlgebraPtr field(const std::vector<Integer>& coefficients, std::string variable = "x");

  /// The quaternion algebra (a, b): i^2 = a, j^2 = b, ij = k = -ji.
  static AlgebraPtr quaternion(const Rational& a, const Rational& b);

  /// Q itself, one basis element "1".
  static AlgebraPtr rationals();

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const QVector& unit() const noexcept { return unit_; }
  const QVector& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  QVector basis(std::size_t i) const { return unit_vector(dim_, i); }
  QVector zero() const { return zero_vector(dim_); }

  QVector mul(const QVector& a, const QVector& b) const;
  QVector add(const QVector& a, const QVector& b) const;
  QVector sub(const QVector& a, const QVector& b) const;
  QVector neg(const QVector& a) const;
  QVector scale(const QVector& a, const Rational& q) const;

  /// Matrix of x -> a x acting on coordinates.
  QMatrix left_regular(const QVector& a) const;

  /// Two-sided inverse. Throws DataError for zero or for a non-invertible
  /// witness (the algebra is then not a division algebra).
  QVector inv(const QVector& a) const;
  bool invertible(const QVector& a) const;

  /// Human-readable rendering, e.g. "1/2 + 3*i - k".
  std::string format(const QVector& a) const;

  /// Same dimension, labels, structure constants and unit.
  bool same_presentation(const DivisionAlgebra& other) const;

 private:
  struct Term {
    std::size_t i, j, k;
    Rational c;
  };

  DivisionAlgebra(std::vector<std::string> labels, std::vector<QVector> table, QVector unit);

  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<QVector> table_;  // d*d, row-major in (i, j)
  QVector unit_;
  std::vector<Term> terms_;  // nonzero structure constants
};

/// Value type pairing an algebra with coordinates.
class Element {
 public:
  Element(AlgebraPtr algebra, QVector coords);

  static Element unit(const AlgebraPtr& algebra) { return {algebra, algebra->unit()}; }
  static Element zero(const AlgebraPtr& algebra) { return {algebra, algebra->zero()}; }
  static Element basis(const AlgebraPtr& algebra, std::size_t i) { return {algebra, algebra->basis(i)}; }

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const QVector& coords() const noexcept { return coords_; }
  bool is_zero() const { return fod::is_zero(coords_); }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator-() const;
  bool operator==(const Element& o) const;

  std::string to_string() const { return algebra_->format(coords_); }

 private:
  AlgebraPtr algebra_;
  QVector coords_;
};

/// Throws ValidationError when the operands live in different algebras.
Element element_mul(const Element& a, const Element& b);
Element element_inv(const Element& a);

struct CenterDescription {
  AlgebraPtr algebra;
  /// Q-basis of the center, unit first.
  std::vector<Element> basis;

  std::size_t dim() const noexcept { return basis.size(); }
  /// d x c matrix with the basis coordinates as columns.
  QMatrix basis_matrix() const;
  /// Coordinates of x in the center basis, or nullopt when x is not central.
  std::optional<QVector> coordinates(const QVector& x) const;
  bool contains(const QVector& x) const { return coordinates(x).has_value(); }
};

CenterDescription center(const AlgebraPtr& algebra);

/// A Q-algebra automorphism of D acting on coordinates: theta(x) = M x.
class AlgebraAutomorphism {
 public:
  /// Accepts `matrix` iff it is unital, multiplicative on all basis pairs and
  /// invertible. Rejections name a witness.
  static AlgebraAutomorphism validate(AlgebraPtr algebra, QMatrix matrix);
  static AlgebraAutomorphism identity(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const QMatrix& matrix() const noexcept { return matrix_; }

  QVector apply(const QVector& x) const { return matrix_ * x; }
  bool is_identity() const { return matrix_.is_identity(); }

  AlgebraAutomorphism inverse() const;
  /// (*this) o other
  AlgebraAutomorphism compose(const AlgebraAutomorphism& other) const;

  bool operator==(const AlgebraAutomorphism& o) const { return matrix_ == o.matrix_; }

  /// Action on the center basis (c x c), verified to map the center into
  /// itself.
  QMatrix restrict_to_center(const CenterDescription& z) const;

 private:
  AlgebraAutomorphism(AlgebraPtr algebra, QMatrix matrix) : algebra_(std::move(algebra)), matrix_(std::move(matrix)) {}

  AlgebraPtr algebra_;
  QMatrix matrix_;
};

/// Chosen lifts to D of the automorphisms of the center. One entry per
/// center automorphism; the identity is always present under the name "id".
class LiftTable {
 public:
  struct Entry {
    std::string name;
    AlgebraAutomorphism sigma;
    QMatrix center_action;
  };

  /// Inserts the identity when absent and rejects entries with equal
  /// restrictions to the center.
  LiftTable(AlgebraPtr algebra, std::vector<std::pair<std::string, AlgebraAutomorphism>> lifts);
  explicit LiftTable(AlgebraPtr algebra) : LiftTable(std::move(algebra), {}) {}

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const CenterDescription& center() const noexcept { return center_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  const Entry* find_by_center_action(const QMatrix& center_action) const;
  const Entry* find_by_name(const std::string& name) const;
  const Entry* find(const AlgebraAutomorphism& sigma) const;

  bool same_as(const LiftTable& other) const;

 private:
  AlgebraPtr algebra_;
  CenterDescription center_;
  std::vector<Entry> entries_;
};

}  // namespace fod
