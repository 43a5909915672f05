#pragma once

// JSON wire format.
//
//   rational        "p/q" or "p" (integers are also accepted on input)
//   QMatrix         [[rational, ...], ...]            rows
//   MatrixOverD     [[[rational x d], ...], ...]      rows of coordinate vectors
//   RightSubspace   [[[rational x d] x n], ...]       canonical basis columns
//   ProductIdeal    [RightSubspace, ...]              one per block
//
// Endomorphism-structure documents:
//
//   {"blocks": [{"n": 2,
//                "algebra": {"kind": "field", "poly": [1, 0, 1]},
//                "factor": {"label": "E", "dim": 1},
//                "lifts": [{"name": "conj", "matrix": [["1","0"],["0","-1"]]}]}],
//    "group": {"elements": [{"name": "conj", "tau": [1],
//                            "maps": [{"P": ..., "sigma": "conj"}]}]},
//    "fields": {"base": "Q", "full": "Q(i)", "table": {"id": "Q(i)", "conj,id": "Q"}}}
//
// Algebra kinds: "rationals"; "field" with ascending monic integer "poly";
// "quaternion" with "a", "b"; "table" with "labels", "products" (d x d
// coordinate vectors) and "unit". "tau" is 1-based and defaults to the
// identity. A block map is either {"P", "sigma"} with sigma a lift name or
// a matrix, or {"linear_map": QMatrix} on the basis E_st b_u.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fod/endo.hpp"

namespace fod {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const QVector& v);
Json to_json(const QMatrix& m);
Json to_json(const MatrixOverD& m);
Json to_json(const RightSubspace& v);
Json to_json(const ProductIdeal& ideal);
Json to_json(const SubvarietyReport& report, unsigned total_dim);
Json to_json(const SurveyReport& report, const EndoStructure& e);
Json to_json(const FreeSearchReport& report);

Rational rational_from_json(const Json& j, const std::string& path = "$");
QMatrix qmatrix_from_json(const Json& j, const std::string& path = "$");
MatrixOverD matrix_from_json(const Json& j, const AlgebraPtr& algebra, const std::string& path = "$");
RightSubspace subspace_from_json(const Json& j, const AlgebraPtr& algebra, std::size_t n,
                                 const std::string& path = "$");
/// Accepts a bare ideal array or {"ideal": [...]}.
ProductIdeal ideal_from_json(const Json& j, const ProductAlgebra& algebra, const std::string& path = "$");

AlgebraPtr algebra_from_json(const Json& j, const std::string& path = "$");

/// A validated document together with how each element was supplied.
struct LoadedStructure {
  EndoStructure structure;
  /// Per element, per block: whether the map came in as a full linear map.
  std::vector<std::vector<bool>> from_linear_map;
};

/// Full ingestion with cascaded validation. Errors carry a JSON path.
LoadedStructure load_endo_structure(const Json& document);
LoadedStructure load_endo_structure_file(const std::string& path_or_dataset);

Json structure_summary(const EndoStructure& e);

}  // namespace fod
