#pragma once

#include <string>
#include <vector>

#include "fod/algebra.hpp"
#include "fod/rational.hpp"
#include "fod/serialize.hpp"
#include "fod/datasets.hpp"
#include "fod/skew_linalg.hpp"

namespace fod::test {

inline AlgebraPtr gaussian() { return DivisionAlgebra::field({1, 0, 1}, "i"); }
inline AlgebraPtr hamilton() { return DivisionAlgebra::quaternion(-1, -1); }
inline AlgebraPtr rationals() { return DivisionAlgebra::rationals(); }

inline std::vector<AlgebraPtr> corpus() { return {rationals(), gaussian(), hamilton()}; }

inline QVector q(std::initializer_list<const char*> coords) {
  QVector v;
  for (const char* c : coords) v.push_back(parse_rational(c));
  return v;
}

inline AlgebraAutomorphism conjugation(const AlgebraPtr& qi) {
  QMatrix m(2, 2);
  m(0, 0) = 1;
  m(1, 1) = -1;
  return AlgebraAutomorphism::validate(qi, m);
}

inline LiftTable gaussian_lifts(const AlgebraPtr& qi) { return LiftTable(qi, {{"conj", conjugation(qi)}}); }

/// Column vector from per-entry coordinate lists.
inline DVector column(std::initializer_list<QVector> entries) { return DVector(entries); }

inline MatrixOverD diag(const AlgebraPtr& a, std::initializer_list<QVector> entries) {
  const std::size_t n = entries.size();
  MatrixOverD m(a, n, n);
  std::size_t i = 0;
  for (const auto& e : entries) {
    m(i, i) = e;
    ++i;
  }
  return m;
}

inline LoadedStructure dataset(const std::string& name) { return load_endo_structure(*bundled_dataset(name)); }

}  // namespace fod::test
