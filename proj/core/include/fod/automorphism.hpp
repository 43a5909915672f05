#pragma once

// Automorphisms of M_n(D) as Q-algebras.
//
// Every such f factors as f(M) = P sigma(M) P^-1 with P in GL_n(D) and sigma
// drawn from a lift table, sigma being unique. Coordinates on M_n(D) use the
// Q-basis {E_st b_u} ordered by (s * n + t) * d + u, which is exactly
// MatrixOverD::flatten().

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fod/algebra.hpp"
#include "fod/random.hpp"
#include "fod/skew_linalg.hpp"

namespace fod {

/// The simple algebra M_n(D).
struct MatrixBlock {
  std::size_t n = 1;
  AlgebraPtr algebra;

  std::size_t dim() const noexcept { return algebra->dim() * n * n; }
  /// Q-basis element with index (s * n + t) * d + u, i.e. E_st b_u.
  MatrixOverD basis(std::size_t index) const;
};

/// An automorphism given as (P, sigma): M -> P sigma(M) P^-1.
struct Decomposition {
  MatrixOverD p;
  MatrixOverD p_inv;
  AlgebraAutomorphism sigma;
  std::string sigma_name;

  /// Computes P^-1; throws ValidationError if P is singular.
  static Decomposition make(MatrixOverD p, AlgebraAutomorphism sigma, std::string sigma_name = {});

  MatrixOverD apply(const MatrixOverD& m) const { return p * apply_sigma(sigma, m) * p_inv; }
  /// f(V) = P sigma(V)
  RightSubspace apply(const RightSubspace& v) const { return apply_matrix(p, apply_sigma(sigma, v)); }

  QMatrix linear_map() const;
};

/// Coordinate matrix of any Q-linear map of M_n(D).
QMatrix linear_map_of(const MatrixBlock& block, const std::function<MatrixOverD(const MatrixOverD&)>& map);

class MatrixAlgebraAutomorphism {
 public:
  /// Accepts iff multiplicative on all basis pairs, unital and invertible.
  /// Rejections name the first failing basis pair in index order.
  static MatrixAlgebraAutomorphism validate(MatrixBlock block, QMatrix linear_map);

  /// From a (P, sigma) pair; the linear map is rebuilt and validated.
  static MatrixAlgebraAutomorphism from_decomposition(MatrixBlock block, Decomposition d);

  const MatrixBlock& block() const noexcept { return block_; }
  const QMatrix& linear_map() const noexcept { return linear_map_; }
  const std::optional<Decomposition>& decomposition() const noexcept { return decomposition_; }

  MatrixOverD apply(const MatrixOverD& m) const;

  /// (*this) o other
  MatrixAlgebraAutomorphism compose(const MatrixAlgebraAutomorphism& other) const;
  MatrixAlgebraAutomorphism inverse() const;

  MatrixAlgebraAutomorphism with_decomposition(Decomposition d) const;

  bool same_action(const MatrixAlgebraAutomorphism& o) const { return linear_map_ == o.linear_map_; }

 private:
  MatrixAlgebraAutomorphism(MatrixBlock block, QMatrix linear_map)
      : block_(std::move(block)), linear_map_(std::move(linear_map)) {}

  MatrixBlock block_;
  QMatrix linear_map_;
  std::optional<Decomposition> decomposition_;
};

/// sigma acting entrywise; decomposition recorded as (I, sigma).
MatrixAlgebraAutomorphism extend_entrywise(const AlgebraAutomorphism& sigma, std::size_t n,
                                           std::string sigma_name = {});

/// Action of f on the center of M_n(D) (scalar matrices x I, x central in
/// D), in the center basis of D. Verified to be a field automorphism.
QMatrix restrict_to_center(const MatrixAlgebraAutomorphism& f, const CenterDescription& z);

/// For h trivial on the center: an invertible P with h(M) P = P M for all M.
/// Tries the solution-space basis first, then seeded random integer
/// combinations with coefficients in [-5, 5], at most 1000 of them.
MatrixOverD inner_conjugator(const MatrixAlgebraAutomorphism& h, Seed seed = 0);

/// (P, sigma) with sigma the unique lift-table entry matching f on the
/// center. The reconstruction is verified on every basis element.
Decomposition decompose(const MatrixAlgebraAutomorphism& f, const LiftTable& lifts, Seed seed = 0);

/// Decomposition of g1 o g2 with sigma re-normalized into the lift table.
Decomposition compose_autos(const Decomposition& g1, const Decomposition& g2, const LiftTable& lifts,
                            Seed seed = 0);

/// Some invertible u with rho(x) u = u sigma(x) for all x in D, i.e.
/// rho = (conjugation by u) o sigma. Nullopt when none is found.
std::optional<QVector> inner_difference(const AlgebraAutomorphism& rho, const AlgebraAutomorphism& sigma,
                                        Seed seed = 0);

/// Whether P is lambda * I with lambda central in D.
bool is_central_homothety(const MatrixOverD& p);

/// Whether V -> P sigma(V) fixes every k-dimensional right subspace of D^n.
/// For 0 < k < n this holds iff sigma = id and P is a central homothety.
bool is_trivial_on_grassmannian(const MatrixOverD& p, const AlgebraAutomorphism& sigma, std::size_t k);

/// k-subspaces built from standard vectors and lines (e_i + e_j x), x running
/// over the basis of D: the vectors that detect a nontrivial action.
std::vector<RightSubspace> probe_subspaces(const AlgebraPtr& algebra, std::size_t n, std::size_t k);

/// A k-subspace moved by g, searched in the probe set then in `samples`
/// seeded random subspaces.
std::optional<RightSubspace> find_moved_subspace(const Decomposition& g, std::size_t k, Seed seed,
                                                 std::size_t samples = 100);

}  // namespace fod
