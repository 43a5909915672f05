#include "fod/group_action.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "fod/error.hpp"

namespace fod {

bool AlgebraBlock::identical_to(const AlgebraBlock& other) const {
  return n == other.n && algebra->same_presentation(*other.algebra) && lifts.same_as(other.lifts);
}

void check_type(const ProductAlgebra& algebra, const std::vector<std::size_t>& kvec) {
  if (kvec.size() != algebra.size()) {
    throw ValidationError("type vector has " + std::to_string(kvec.size()) + " entries, expected " +
                          std::to_string(algebra.size()));
  }
  for (std::size_t i = 0; i < kvec.size(); ++i) {
    if (kvec[i] > algebra.blocks[i].n) {
      throw ValidationError("type entry " + std::to_string(kvec[i]) + " exceeds n = " +
                            std::to_string(algebra.blocks[i].n) + " for block " + std::to_string(i + 1));
    }
  }
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement GroupElement::make(std::string name, std::vector<std::size_t> tau, std::vector<Decomposition> maps,
                                const ProductAlgebra& algebra, Seed seed) {
  const std::size_t r = algebra.size();
  const std::string where = "element \"" + name + "\": ";
  if (tau.size() != r) throw ValidationError(where + "tau must have one entry per block");
  std::vector<std::size_t> sorted = tau;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < r; ++i) {
    if (sorted[i] != i) throw ValidationError(where + "tau is not a permutation");
  }
  if (maps.size() != r) throw ValidationError(where + "needs one block map per block");

  GroupElement g{std::move(name), std::move(tau), {}, {}};
  for (std::size_t i = 0; i < r; ++i) {
    const AlgebraBlock& target = algebra.blocks[i];
    const AlgebraBlock& source = algebra.blocks[g.preimage(i)];
    if (!source.identical_to(target)) {
      throw ValidationError(where + "tau sends block " + std::to_string(g.preimage(i) + 1) + " to block " +
                            std::to_string(i + 1) + " but the blocks are not identical");
    }
    Decomposition& d = maps[i];
    if (d.p.rows() != target.n || !target.algebra->same_presentation(*d.p.algebra())) {
      throw ValidationError(where + "block map " + std::to_string(i + 1) + " has the wrong shape");
    }
    if (const auto* entry = target.lifts.find(d.sigma)) {
      d.sigma_name = entry->name;
    } else {
      // re-express with sigma taken from the lift table
      auto f = MatrixAlgebraAutomorphism::from_decomposition(target.shape(), d);
      d = decompose(f, target.lifts, seed);
    }
    g.linear_maps.push_back(d.linear_map());
    g.maps.push_back(std::move(d));
  }
  return g;
}

std::size_t GroupElement::preimage(std::size_t i) const {
  return static_cast<std::size_t>(std::find(tau.begin(), tau.end(), i) - tau.begin());
}

bool GroupElement::is_identity() const {
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (tau[i] != i || !linear_maps[i].is_identity()) return false;
  }
  return true;
}

GroupElement compose_elements(const GroupElement& g1, const GroupElement& g2, const ProductAlgebra& algebra,
                              Seed seed) {
  const std::size_t r = algebra.size();
  std::vector<std::size_t> tau(r);
  std::vector<Decomposition> maps;
  for (std::size_t i = 0; i < r; ++i) tau[i] = g1.tau[g2.tau[i]];
  for (std::size_t i = 0; i < r; ++i) {
    maps.push_back(compose_autos(g1.maps[i], g2.maps[g1.preimage(i)], algebra.blocks[i].lifts, seed));
  }
  return GroupElement::make(g1.name + "*" + g2.name, std::move(tau), std::move(maps), algebra, seed);
}

// ---------------------------------------------------------------------------
// GaloisAction

std::optional<std::size_t> GaloisAction::find(const std::string& name) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].name == name) return i;
  }
  return std::nullopt;
}

const GroupElement& GaloisAction::element(const std::string& name) const {
  auto idx = find(name);
  if (!idx) throw ValidationError("unknown group element \"" + name + "\"");
  return elements_[*idx];
}

bool GaloisAction::is_subgroup(const std::vector<std::size_t>& indices) const {
  const std::set<std::size_t> members(indices.begin(), indices.end());
  if (!members.count(identity_)) return false;
  for (auto a : members) {
    if (!members.count(inverses_[a])) return false;
    for (auto b : members) {
      if (!members.count(table_[a][b])) return false;
    }
  }
  return true;
}

GaloisAction validate_group(ProductAlgebra algebra, std::vector<GroupElement> elements, Seed seed) {
  if (elements.empty()) throw ValidationError("group has no elements");
  std::set<std::string> names;
  for (const auto& g : elements) {
    if (!names.insert(g.name).second) throw ValidationError("duplicate element name \"" + g.name + "\"");
    if (g.tau.size() != algebra.size()) throw ValidationError("element \"" + g.name + "\" has the wrong block count");
  }
  GaloisAction group;
  const std::size_t order = elements.size();
  auto identity = std::find_if(elements.begin(), elements.end(), [](const auto& g) { return g.is_identity(); });
  if (identity == elements.end()) throw ValidationError("group has no identity element");
  group.identity_ = static_cast<std::size_t>(identity - elements.begin());
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = a + 1; b < order; ++b) {
      if (elements[a].same_action(elements[b])) {
        throw ValidationError("elements \"" + elements[a].name + "\" and \"" + elements[b].name + "\" act identically");
      }
    }
  }

  group.table_.assign(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      const GroupElement c = compose_elements(elements[a], elements[b], algebra, seed);
      auto match = std::find_if(elements.begin(), elements.end(), [&](const auto& g) { return g.same_action(c); });
      if (match == elements.end()) {
        throw ValidationError("group is not closed: \"" + elements[a].name + "\" o \"" + elements[b].name +
                              "\" is not an element");
      }
      group.table_[a][b] = static_cast<std::size_t>(match - elements.begin());
    }
  }
  group.inverses_.resize(order);
  for (std::size_t a = 0; a < order; ++a) {
    auto& row = group.table_[a];
    auto inv = std::find(row.begin(), row.end(), group.identity_);
    if (inv == row.end()) throw ValidationError("element \"" + elements[a].name + "\" has no inverse");
    group.inverses_[a] = static_cast<std::size_t>(inv - row.begin());
  }
  group.algebra_ = std::move(algebra);
  group.elements_ = std::move(elements);
  return group;
}

// ---------------------------------------------------------------------------
// Action

ProductIdeal act_on_ideal(const GroupElement& g, const ProductIdeal& ideal) {
  if (ideal.size() != g.tau.size()) throw ValidationError("ideal has the wrong number of components");
  ProductIdeal out;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    const RightSubspace& source = ideal[g.preimage(i)];
    if (source.ambient_dim() != g.maps[i].p.rows()) throw ValidationError("ideal component has the wrong size");
    out.components.push_back({i, g.maps[i].apply(source)});
  }
  return out;
}

std::vector<std::size_t> stabilizer(const ProductIdeal& ideal, const GaloisAction& group) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < group.order(); ++a) {
    if (act_on_ideal(group.elements()[a], ideal) == ideal) out.push_back(a);
  }
  return out;
}

std::vector<std::string> stabilizer_names(const ProductIdeal& ideal, const GaloisAction& group) {
  std::vector<std::string> names;
  for (auto a : stabilizer(ideal, group)) names.push_back(group.elements()[a].name);
  return names;
}

std::vector<ProductIdeal> orbit(const ProductIdeal& ideal, const GaloisAction& group) {
  std::vector<ProductIdeal> out;
  for (const auto& g : group.elements()) {
    ProductIdeal image = act_on_ideal(g, ideal);
    if (std::find(out.begin(), out.end(), image) == out.end()) out.push_back(std::move(image));
  }
  return out;
}

bool acts_trivially_on_type(const GroupElement& g, const ProductAlgebra& algebra,
                            const std::vector<std::size_t>& kvec) {
  check_type(algebra, kvec);
  for (std::size_t i = 0; i < kvec.size(); ++i) {
    const std::size_t j = g.preimage(i);
    if (j != i) {
      // g carries type-k_j ideals of block j into block i
      if (kvec[j] != kvec[i] || !algebra.grassmannian_is_point(i, kvec[i])) return false;
    } else if (!is_trivial_on_grassmannian(g.maps[i].p, g.maps[i].sigma, kvec[i])) {
      return false;
    }
  }
  return true;
}

ProductIdeal random_ideal(const ProductAlgebra& algebra, const std::vector<std::size_t>& kvec, Seed seed,
                          std::int64_t height) {
  check_type(algebra, kvec);
  std::vector<RightSubspace> parts;
  for (std::size_t i = 0; i < kvec.size(); ++i) {
    const auto& b = algebra.blocks[i];
    parts.push_back(random_subspace(b.algebra, b.n, kvec[i], mix_seed(seed, i), height));
  }
  return ProductIdeal::from_subspaces(std::move(parts));
}

// ---------------------------------------------------------------------------
// Free-ideal search

namespace {

std::optional<std::string> trivial_witness(const std::vector<std::size_t>& kvec, const GaloisAction& group) {
  for (std::size_t a = 0; a < group.order(); ++a) {
    if (a == group.identity_index()) continue;
    const auto& g = group.elements()[a];
    if (acts_trivially_on_type(g, group.algebra(), kvec)) return g.name;
  }
  return std::nullopt;
}

std::int64_t escalated_height(long long attempt, long long max_tries) {
  if (3 * attempt < max_tries) return 10;
  if (3 * attempt < 2 * max_tries) return 100;
  return 1000;
}

}  // namespace

FreeSearchReport search_free(const std::vector<std::size_t>& kvec, const GaloisAction& group, std::size_t count,
                             Seed seed, long long max_tries) {
  const ProductAlgebra& algebra = group.algebra();
  check_type(algebra, kvec);
  FreeSearchReport report;
  report.seed = seed;
  if (auto witness = trivial_witness(kvec, group)) {
    report.certificate = *witness;
    return report;
  }
  const std::size_t r = algebra.size();
  const auto& elements = group.elements();

  // s_i must be moved by these: nontrivial block maps fixing block i
  std::vector<std::vector<const Decomposition*>> movers(r);
  // s_i must differ from map(s_j) for these (map, j), j = tau_g^-1(i) < i, k_j = k_i
  std::vector<std::vector<std::pair<const Decomposition*, std::size_t>>> collisions(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (algebra.grassmannian_is_point(i, kvec[i])) continue;
    for (std::size_t a = 0; a < elements.size(); ++a) {
      if (a == group.identity_index()) continue;
      const auto& g = elements[a];
      const std::size_t j = g.preimage(i);
      if (j == i) {
        if (!is_trivial_on_grassmannian(g.maps[i].p, g.maps[i].sigma, kvec[i])) movers[i].push_back(&g.maps[i]);
      } else if (j < i && kvec[j] == kvec[i]) {
        collisions[i].emplace_back(&g.maps[i], j);
      }
    }
  }

  long long consecutive_rejects = 0;
  for (std::uint64_t trial = 0; report.ideals.size() < count; ++trial) {
    const Seed trial_seed = mix_seed(seed, trial);
    std::vector<RightSubspace> chosen;
    for (std::size_t i = 0; i < r; ++i) {
      const auto& block = algebra.blocks[i];
      const Seed coord_seed = mix_seed(trial_seed, i);
      bool accepted = false;
      for (long long attempt = 0; attempt < max_tries && !accepted; ++attempt) {
        ++report.tries_used;
        RightSubspace s = random_subspace(block.algebra, block.n, kvec[i], mix_seed(coord_seed, attempt),
                                          escalated_height(attempt, max_tries));
        bool ok = std::all_of(movers[i].begin(), movers[i].end(),
                              [&](const Decomposition* m) { return !(m->apply(s) == s); });
        ok = ok && std::all_of(collisions[i].begin(), collisions[i].end(), [&](const auto& c) {
               return !(c.first->apply(chosen[c.second]) == s);
             });
        if (ok) {
          chosen.push_back(std::move(s));
          accepted = true;
        }
      }
      if (!accepted) {
        throw InconclusiveSearch("free-ideal search exhausted " + std::to_string(max_tries) +
                                     " tries on block " + std::to_string(i + 1) + " after finding " +
                                     std::to_string(report.ideals.size()) + " of " + std::to_string(count) +
                                     " ideals",
                                 report.tries_used);
      }
    }
    ProductIdeal candidate = ProductIdeal::from_subspaces(std::move(chosen));
    const bool distinct = std::find(report.ideals.begin(), report.ideals.end(), candidate) == report.ideals.end();
    const auto stab = stabilizer(candidate, group);
    if (distinct && stab.size() == 1) {
      report.ideals.push_back(std::move(candidate));
      consecutive_rejects = 0;
    } else if (++consecutive_rejects >= max_tries) {
      throw InconclusiveSearch("free-ideal search could not produce " + std::to_string(count) +
                                   " distinct free ideals (found " + std::to_string(report.ideals.size()) + ")",
                               report.tries_used);
    }
  }
  return report;
}

FreeCertificate exists_free(const std::vector<std::size_t>& kvec, const GaloisAction& group, Seed seed,
                            long long max_tries) {
  check_type(group.algebra(), kvec);
  if (auto witness = trivial_witness(kvec, group)) {
    return {FreeCertificate::Kind::Negative, *witness, std::nullopt, 0};
  }
  FreeSearchReport report = search_free(kvec, group, 1, seed, max_tries);
  return {FreeCertificate::Kind::Positive, {}, std::move(report.ideals.front()), report.tries_used};
}

}  // namespace fod
