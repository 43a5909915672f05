#pragma once

// Finite groups of automorphisms of a product  M_{n_1}(D_1) x ... x M_{n_r}(D_r)
// and their action on product right ideals.
//
// An element g permutes the blocks by tau and carries block tau^-1(i) to
// block i through a (P, sigma) pair, so that
//   (g I)_i = P_{g,i} sigma_{g,i}(I_{tau^-1(i)}).
// Blocks exchanged by some tau must be literally identical (same n, same
// structure constants, same lift table); block maps then share coordinates.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fod/automorphism.hpp"
#include "fod/ideal.hpp"

namespace fod {

struct AlgebraBlock {
  std::size_t n = 1;
  AlgebraPtr algebra;
  LiftTable lifts;

  MatrixBlock shape() const { return {n, algebra}; }
  bool identical_to(const AlgebraBlock& other) const;
};

struct ProductAlgebra {
  std::vector<AlgebraBlock> blocks;

  std::size_t size() const noexcept { return blocks.size(); }
  /// Single-point Grassmannian: k = 0 or k = n.
  bool grassmannian_is_point(std::size_t i, std::size_t k) const { return k == 0 || k >= blocks[i].n; }
};

struct GroupElement {
  std::string name;
  /// tau[i] = image of block i (0-based).
  std::vector<std::size_t> tau;
  /// maps[i] carries block tau^-1(i) to block i.
  std::vector<Decomposition> maps;
  /// Coordinate matrices of the block maps, used for equality.
  std::vector<QMatrix> linear_maps;

  /// Normalizes every block map against its lift table and caches its
  /// linear map. Throws ValidationError on shape or tau problems.
  static GroupElement make(std::string name, std::vector<std::size_t> tau, std::vector<Decomposition> maps,
                           const ProductAlgebra& algebra, Seed seed = 0);

  std::size_t preimage(std::size_t i) const;
  bool same_action(const GroupElement& other) const { return tau == other.tau && linear_maps == other.linear_maps; }
  bool is_identity() const;
};

/// g1 o g2, named "g1*g2".
GroupElement compose_elements(const GroupElement& g1, const GroupElement& g2, const ProductAlgebra& algebra,
                              Seed seed = 0);

class GaloisAction {
 public:
  const ProductAlgebra& algebra() const noexcept { return algebra_; }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t identity_index() const noexcept { return identity_; }

  /// Index of g_a o g_b.
  std::size_t compose(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverses_[a]; }
  std::optional<std::size_t> find(const std::string& name) const;
  const GroupElement& element(const std::string& name) const;

  /// Whether the named elements form a subgroup.
  bool is_subgroup(const std::vector<std::size_t>& indices) const;

 private:
  friend GaloisAction validate_group(ProductAlgebra algebra, std::vector<GroupElement> elements, Seed seed);

  ProductAlgebra algebra_;
  std::vector<GroupElement> elements_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverses_;
  std::size_t identity_ = 0;
};

/// Computes all pairwise composites and checks identity, closure and
/// inverses. Errors name the offending element or pair.
GaloisAction validate_group(ProductAlgebra algebra, std::vector<GroupElement> elements, Seed seed = 0);

ProductIdeal act_on_ideal(const GroupElement& g, const ProductIdeal& ideal);

/// Indices of the elements fixing `ideal`, in element order.
std::vector<std::size_t> stabilizer(const ProductIdeal& ideal, const GaloisAction& group);
std::vector<std::string> stabilizer_names(const ProductIdeal& ideal, const GaloisAction& group);

std::vector<ProductIdeal> orbit(const ProductIdeal& ideal, const GaloisAction& group);

/// Whether g fixes every product ideal of type kvec. Exact: a moved index
/// with a non-point Grassmannian or a type mismatch makes g nontrivial, a
/// fixed index defers to is_trivial_on_grassmannian.
bool acts_trivially_on_type(const GroupElement& g, const ProductAlgebra& algebra, const std::vector<std::size_t>& kvec);

/// Random product ideal of type kvec, component i seeded by mix_seed(seed, i).
ProductIdeal random_ideal(const ProductAlgebra& algebra, const std::vector<std::size_t>& kvec, Seed seed,
                          std::int64_t height = kDefaultHeight);

struct FreeSearchReport {
  std::vector<ProductIdeal> ideals;
  long long tries_used = 0;
  Seed seed = 0;
  /// Set for negative results: a nontrivial element fixing the whole type.
  std::optional<std::string> certificate;
};

struct FreeCertificate {
  enum class Kind { Negative, Positive };
  Kind kind;
  std::string witness_element;          // Negative
  std::optional<ProductIdeal> witness;  // Positive
  long long tries_used = 0;
};

constexpr long long kDefaultMaxTries = 1000;

/// Negative (with witness element) when some nontrivial g acts trivially on
/// the type, otherwise positive with one searched free ideal. Throws
/// InconclusiveSearch when the search runs out of budget.
FreeCertificate exists_free(const std::vector<std::size_t>& kvec, const GaloisAction& group, Seed seed,
                            long long max_tries = kDefaultMaxTries);

/// Builds `count` pairwise distinct ideals of type kvec with trivial
/// stabilizer, coordinate by coordinate: s_i must be moved by every
/// nontrivial block map fixing i, and must differ from lambda_{g,i}(s_j) for
/// earlier j = tau_g^-1(i) of equal dimension. `max_tries` bounds the draws
/// per coordinate; sampling height escalates 10, 100, 1000 across thirds.
FreeSearchReport search_free(const std::vector<std::size_t>& kvec, const GaloisAction& group, std::size_t count,
                             Seed seed, long long max_tries = kDefaultMaxTries);

void check_type(const ProductAlgebra& algebra, const std::vector<std::size_t>& kvec);

}  // namespace fod
