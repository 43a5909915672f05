#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace fod {

/// Bundled endomorphism-structure documents:
///   remark-A      E x C^2 with End E = Z[i], End C = Z, over Q; K_A = Q(i)
///   remark-A2     E^2 x C^2, same curves
///   swap-2xM2Q    two identical M_2(Q) blocks exchanged by an involution
///   quat-inner    M_2 over the quaternions (-1,-1), Z/2 acting by an inner
///                 involution
std::optional<nlohmann::ordered_json> bundled_dataset(std::string_view name);
std::vector<std::string> bundled_dataset_names();

}  // namespace fod
