#include "fod/ideal.hpp"

#include "fod/error.hpp"

namespace fod {

ProductIdeal ProductIdeal::from_subspaces(std::vector<RightSubspace> subspaces) {
  ProductIdeal ideal;
  for (std::size_t i = 0; i < subspaces.size(); ++i) ideal.components.push_back({i, std::move(subspaces[i])});
  return ideal;
}

RightSubspace subspace_of_ideal(const std::vector<MatrixOverD>& generators) {
  if (generators.empty()) throw ValidationError("at least one generator is required");
  const auto& first = generators.front();
  if (!first.square()) throw ValidationError("ideal generators must be square");
  const std::size_t n = first.rows();
  std::vector<DVector> columns;
  for (const auto& g : generators) {
    if (!g.square() || g.rows() != n) throw ValidationError("ideal generators have mismatched sizes");
    if (g.algebra().get() != first.algebra().get() && !g.algebra()->same_presentation(*first.algebra())) {
      throw ValidationError("ideal generators live over different algebras");
    }
    for (std::size_t c = 0; c < n; ++c) columns.push_back(g.column(c));
  }
  return span_of(first.algebra(), n, columns);
}

MatrixOverD idempotent_generator(const RightSubspace& v) {
  const std::size_t n = v.ambient_dim();
  MatrixOverD phi(v.algebra(), n, n);
  // phi(x) = sum_l basis_l * x[pivot_l]; the residual x - phi(x) vanishes at
  // every pivot row, i.e. lies in the standard complement.
  const auto& pivots = v.pivot_rows();
  for (std::size_t l = 0; l < pivots.size(); ++l) {
    for (std::size_t r = 0; r < n; ++r) phi(r, pivots[l]) = v.basis()(r, l);
  }
  return phi;
}

bool ideal_contains(const RightSubspace& v, const MatrixOverD& m) {
  if (m.rows() != v.ambient_dim()) throw ValidationError("matrix size does not match subspace ambient dimension");
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!v.contains(m.column(c))) return false;
  }
  return true;
}

std::vector<std::size_t> ideal_type(const ProductIdeal& ideal) {
  std::vector<std::size_t> k;
  for (const auto& c : ideal.components) k.push_back(c.subspace.dim());
  return k;
}

}  // namespace fod
