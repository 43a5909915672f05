#include "fod/endo.hpp"

#include <algorithm>
#include <set>

#include "fod/error.hpp"

namespace fod {

namespace {

std::vector<std::string> sorted_names(const GaloisAction& g, const std::vector<std::size_t>& indices) {
  std::vector<std::string> names;
  for (auto i : indices) names.push_back(g.elements()[i].name);
  std::sort(names.begin(), names.end());
  return names;
}

std::vector<std::size_t> generated_subgroup(const GaloisAction& g, const std::vector<std::size_t>& gens) {
  std::set<std::size_t> members{g.identity_index()};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::size_t> current(members.begin(), members.end());
    for (auto a : current) {
      for (auto b : gens) grew |= members.insert(g.compose(a, b)).second;
    }
  }
  return {members.begin(), members.end()};
}

// Greedy generating set, in element order.
std::vector<std::string> generators_of(const GaloisAction& g, const std::vector<std::size_t>& subgroup) {
  std::vector<std::size_t> gens;
  std::vector<std::size_t> span = generated_subgroup(g, gens);
  for (auto a : subgroup) {
    if (std::find(span.begin(), span.end(), a) != span.end()) continue;
    gens.push_back(a);
    span = generated_subgroup(g, gens);
  }
  std::vector<std::string> names;
  for (auto a : gens) names.push_back(g.elements()[a].name);
  return names;
}

}  // namespace

std::size_t EndoStructure::total_dimension() const {
  std::size_t g = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) g += algebra().blocks[i].n * factors[i].dim;
  return g;
}

void validate_endo_structure(const EndoStructure& e) {
  if (e.factors.size() != e.algebra().size()) throw ValidationError("one simple factor is required per block");
  if (e.subgroup_fields.empty()) return;
  std::vector<std::size_t> all(e.galois.order());
  for (std::size_t a = 0; a < all.size(); ++a) all[a] = a;
  bool has_trivial = false, has_full = false;
  for (const auto& [names, label] : e.subgroup_fields) {
    std::vector<std::size_t> indices;
    for (const auto& n : names) {
      auto idx = e.galois.find(n);
      if (!idx) throw ValidationError("field table names unknown element \"" + n + "\"");
      indices.push_back(*idx);
    }
    if (!e.galois.is_subgroup(indices)) throw ValidationError("field table key for \"" + label + "\" is not a subgroup");
    if (indices.size() == 1) {
      has_trivial = true;
      if (label != e.full_field) throw ValidationError("trivial subgroup must map to the full field " + e.full_field);
    }
    if (indices.size() == e.galois.order()) {
      has_full = true;
      if (label != e.base_field) throw ValidationError("whole group must map to the base field " + e.base_field);
    }
  }
  if (!has_trivial || !has_full) {
    throw ValidationError("field table must contain the trivial subgroup and the whole group");
  }
}

std::string isogeny_class(const EndoStructure& e, const std::vector<std::size_t>& kvec) {
  std::string out;
  for (std::size_t i = 0; i < kvec.size(); ++i) {
    if (kvec[i] == 0) continue;
    if (!out.empty()) out += " x ";
    out += e.factors[i].label + "^" + std::to_string(kvec[i]);
  }
  return out.empty() ? "0" : out;
}

SubvarietyReport field_of_definition(const ProductIdeal& ideal, const EndoStructure& e) {
  SubvarietyReport report;
  report.type = ideal_type(ideal);
  check_type(e.algebra(), report.type);
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (ideal[i].ambient_dim() != e.algebra().blocks[i].n) {
      throw ValidationError("ideal component " + std::to_string(i + 1) + " has the wrong ambient dimension");
    }
  }
  const auto stab = stabilizer(ideal, e.galois);
  report.isogeny_class = isogeny_class(e, report.type);
  for (std::size_t i = 0; i < report.type.size(); ++i) report.dim += report.type[i] * e.factors[i].dim;
  for (auto a : stab) report.stabilizer.push_back(e.galois.elements()[a].name);
  auto it = e.subgroup_fields.find(sorted_names(e.galois, stab));
  if (it != e.subgroup_fields.end()) {
    report.field = it->second;
  } else {
    report.subgroup_generators = generators_of(e.galois, stab);
  }
  report.degree_over_base = e.galois.order() / stab.size();
  report.ideal = ideal;
  return report;
}

SurveyReport subvariety_survey(const EndoStructure& e, const std::vector<std::size_t>& kvec, std::size_t count,
                               Seed seed, long long max_tries) {
  check_type(e.algebra(), kvec);
  SurveyReport out;
  out.type = kvec;
  out.seed = seed;
  out.requested = count;

  FreeSearchReport search;
  try {
    search = search_free(kvec, e.galois, count, seed, max_tries);
  } catch (const InconclusiveSearch& ex) {
    out.outcome = SurveyReport::Outcome::Inconclusive;
    out.tries_used = ex.tries_used();
    out.message = ex.what();
    return out;
  }
  out.tries_used = search.tries_used;

  if (search.certificate) {
    out.outcome = SurveyReport::Outcome::Negative;
    out.certificate = search.certificate;
    out.message = "element " + *search.certificate + " fixes every subvariety of type " + isogeny_class(e, kvec) +
                  ": none has field of definition " + e.full_field;
    for (std::size_t s = 0; s < kSurveySampleSize; ++s) {
      const auto report = field_of_definition(random_ideal(e.algebra(), kvec, mix_seed(seed, s)), e);
      if (std::find(out.sampled_stabilizers.begin(), out.sampled_stabilizers.end(), report.stabilizer) ==
          out.sampled_stabilizers.end()) {
        out.sampled_stabilizers.push_back(report.stabilizer);
        out.sampled_fields.push_back(report.field.value_or(""));
      }
    }
    return out;
  }

  out.outcome = SurveyReport::Outcome::Positive;
  for (const auto& ideal : search.ideals) out.witnesses.push_back(field_of_definition(ideal, e));
  out.message = std::to_string(out.witnesses.size()) + " distinct subvarieties of type " + isogeny_class(e, kvec) +
                " with field of definition " + e.full_field;
  return out;
}

Rational degree_bound(unsigned g) {
  if (g < 2) throw ValidationError("the bound is defined for g >= 2");
  Rational alpha = 1;
  if (g == 2) alpha = 2;
  if (g == 4) alpha = 5;
  if (g == 6) alpha = Rational(7, 6);
  Integer six_pow;
  mpz_ui_pow_ui(six_pow.get_mpz_t(), 6, g - 1);
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), g);
  Rational f = 2 * alpha * Rational(six_pow) * Rational(fact);
  f.canonicalize();
  return f;
}

bool check_bound(const SubvarietyReport& report, unsigned total_dim) {
  return Rational(static_cast<unsigned long>(report.degree_over_base)) <= degree_bound(total_dim);
}

}  // namespace fod
