#pragma once

// Endomorphism-structure data of an abelian variety A over K and the
// dictionary from right ideals of End(A)⊗Q to abelian subvarieties.
//
// A block M_{n_i}(D_i) stands for an isotypic factor C_i^{n_i}; an ideal of
// type (k_1, ..., k_r) gives a subvariety isogenous to prod C_i^{k_i}, whose
// field of definition is the fixed field of the ideal's Galois stabilizer.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fod/group_action.hpp"

namespace fod {

struct SimpleFactor {
  std::string label;
  std::size_t dim = 1;  // dimension of C_i
};

struct EndoStructure {
  GaloisAction galois;
  std::vector<SimpleFactor> factors;  // one per block
  std::string base_field;             // K
  std::string full_field;             // K_A
  /// Subgroup (sorted element names) -> field label.
  std::map<std::vector<std::string>, std::string> subgroup_fields;

  const ProductAlgebra& algebra() const { return galois.algebra(); }
  /// g = sum n_i dim C_i
  std::size_t total_dimension() const;
};

/// Checks the factor count and the subgroup table: keys must be subgroups,
/// {id} must map to K_A and the whole group to K.
void validate_endo_structure(const EndoStructure& e);

struct SubvarietyReport {
  std::vector<std::size_t> type;
  std::string isogeny_class;  // e.g. "E^1 x C^1"
  std::size_t dim = 0;        // sum k_i dim C_i
  std::vector<std::string> stabilizer;
  std::optional<std::string> field;          // from the subgroup table
  std::vector<std::string> subgroup_generators;  // when no table entry
  std::size_t degree_over_base = 1;          // |G| / |stabilizer|
  ProductIdeal ideal;
};

SubvarietyReport field_of_definition(const ProductIdeal& ideal, const EndoStructure& e);

std::string isogeny_class(const EndoStructure& e, const std::vector<std::size_t>& kvec);

struct SurveyReport {
  enum class Outcome { Positive, Negative, Inconclusive };

  Outcome outcome = Outcome::Inconclusive;
  std::vector<std::size_t> type;
  Seed seed = 0;
  std::size_t requested = 0;
  long long tries_used = 0;
  std::vector<SubvarietyReport> witnesses;  // Positive
  std::optional<std::string> certificate;   // Negative: element fixing the whole type
  /// Negative: distinct stabilizers seen on a seeded sample of the type.
  std::vector<std::vector<std::string>> sampled_stabilizers;
  std::vector<std::string> sampled_fields;
  std::string message;
};

constexpr std::size_t kSurveySampleSize = 20;

SurveyReport subvariety_survey(const EndoStructure& e, const std::vector<std::size_t>& kvec, std::size_t count,
                               Seed seed, long long max_tries = kDefaultMaxTries);

/// f(g) = 2 alpha(g) 6^(g-1) g!, alpha(2) = 2, alpha(4) = 5, alpha(6) = 7/6,
/// alpha = 1 otherwise. Throws ValidationError for g < 2.
Rational degree_bound(unsigned g);

/// degree_over_base <= f(g)
bool check_bound(const SubvarietyReport& report, unsigned total_dim);

}  // namespace fod
