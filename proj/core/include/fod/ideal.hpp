#pragma once

// Right ideals of M_n(D) are stored by the right subspace V of D^n they
// correspond to: the ideal I_V is the set of matrices whose columns lie in V.

#include <cstddef>
#include <vector>

#include "fod/skew_linalg.hpp"

namespace fod {

struct IdealDescriptor {
  std::size_t block_index = 0;
  RightSubspace subspace;

  bool operator==(const IdealDescriptor& o) const = default;
};

/// I_1 x ... x I_r inside a product of matrix algebras.
struct ProductIdeal {
  std::vector<IdealDescriptor> components;

  std::size_t size() const noexcept { return components.size(); }
  const RightSubspace& operator[](std::size_t i) const { return components[i].subspace; }
  bool operator==(const ProductIdeal& o) const = default;

  static ProductIdeal from_subspaces(std::vector<RightSubspace> subspaces);
};

/// V_I for the right ideal generated by `generators`: the span of all their
/// columns. Generators must be square, of one size, over one algebra.
RightSubspace subspace_of_ideal(const std::vector<MatrixOverD>& generators);

/// Idempotent phi with column span V and phi * M_n(D) = I_V: the projection
/// onto V along the span of the standard vectors at non-pivot rows.
MatrixOverD idempotent_generator(const RightSubspace& v);

/// Membership of M in I_V.
bool ideal_contains(const RightSubspace& v, const MatrixOverD& m);

/// (dim_D V_1, ..., dim_D V_r)
std::vector<std::size_t> ideal_type(const ProductIdeal& ideal);

}  // namespace fod
