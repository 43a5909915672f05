// fod: fields of definition of abelian subvarieties from endomorphism data.
//
// Every command prints JSON on stdout (one line, or a table with --pretty).
// Exit codes: 0 success, 2 validation error, 3 inconclusive search.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fod/datasets.hpp"
#include "fod/error.hpp"
#include "fod/serialize.hpp"

namespace {

using fod::Json;

constexpr int kExitValidation = 2;
constexpr int kExitInconclusive = 3;

std::vector<std::size_t> parse_type(const std::string& text) {
  std::vector<std::size_t> k;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw fod::ValidationError("--type must be a comma-separated list of non-negative integers");
    }
    k.push_back(std::stoul(item));
  }
  return k;
}

std::string join(const std::vector<std::string>& items, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string ideal_text(const Json& ideal) {
  // compact one-line rendering of basis columns per block
  std::string out;
  for (std::size_t b = 0; b < ideal.size(); ++b) {
    if (b) out += " | ";
    out += ideal[b].dump();
  }
  return out;
}

void print_survey_table(const Json& s) {
  std::cout << "result:   " << s["result"].get<std::string>() << "\n";
  std::cout << "type:     " << s["isogeny_class"].get<std::string>() << "  (seed " << s["seed"] << ", tries "
            << s["tries_used"] << ")\n";
  std::cout << "fields:   K = " << s["base_field"].get<std::string>()
            << ", K_A = " << s["full_field"].get<std::string>() << "\n";
  std::cout << s["message"].get<std::string>() << "\n";
  if (s.contains("certificate")) {
    std::cout << "witness element: " << s["certificate"]["element"].get<std::string>() << "\n";
    std::cout << "\nsampled stabilizers:\n";
    for (const auto& st : s["sampled_stabilizers"]) {
      std::cout << "  {" << join(st["stabilizer"].get<std::vector<std::string>>()) << "}"
                << (st.contains("field") ? "  -> " + st["field"].get<std::string>() : "") << "\n";
    }
  }
  if (s.contains("witnesses")) {
    std::cout << "\n  #  stabilizer   field       degree  ideal\n";
    int i = 0;
    for (const auto& w : s["witnesses"]) {
      std::cout << std::setw(3) << ++i << "  " << std::left << std::setw(11)
                << ("{" + join(w["stabilizer"].get<std::vector<std::string>>()) + "}") << "  " << std::setw(10)
                << (w.contains("field") ? w["field"].get<std::string>() : "-") << "  " << std::setw(6)
                << w["degree_over_base"].get<std::size_t>() << std::right << "  " << ideal_text(w["ideal"]) << "\n";
    }
  }
}

void print_report_table(const Json& r) {
  std::cout << "isogeny class:  " << r["isogeny_class"].get<std::string>() << " (dim " << r["dim"] << ")\n";
  std::cout << "stabilizer:     {" << join(r["stabilizer"].get<std::vector<std::string>>()) << "}\n";
  if (r.contains("field")) {
    std::cout << "field:          " << r["field"].get<std::string>() << "\n";
  } else {
    std::cout << "subgroup gens:  {" << join(r["subgroup_generators"].get<std::vector<std::string>>()) << "}\n";
  }
  std::cout << "degree over K:  " << r["degree_over_base"] << " (bound " << r["bound"].get<std::string>() << ")\n";
}

void emit(const Json& j, bool pretty, void (*table)(const Json&) = nullptr) {
  if (!pretty) {
    std::cout << j.dump() << "\n";
  } else if (table) {
    table(j);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

int run_survey(const fod::LoadedStructure& loaded, const std::string& source, const std::string& type_text,
               std::size_t count, fod::Seed seed, long long max_tries, bool pretty) {
  const auto& e = loaded.structure;
  std::vector<std::size_t> kvec =
      type_text.empty() ? std::vector<std::size_t>(e.algebra().size(), 1) : parse_type(type_text);
  const auto report = fod::subvariety_survey(e, kvec, count, seed, max_tries);
  Json out;
  out["command"] = "survey";
  out["source"] = source;
  out.update(fod::to_json(report, e));
  emit(out, pretty, print_survey_table);
  return report.outcome == fod::SurveyReport::Outcome::Inconclusive ? kExitInconclusive : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fields of definition of abelian subvarieties from endomorphism-structure data"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable output")->trigger_on_parse();

  std::string file;
  std::string element;
  std::string ideal_file;
  std::string type_text;
  std::size_t count = 10;
  fod::Seed seed = 42;
  long long max_tries = fod::kDefaultMaxTries;
  unsigned dim = 0;

  auto* validate = app.add_subcommand("validate", "Validate an endomorphism-structure document");
  validate->add_option("file", file, "JSON file or bundled dataset name")->required();

  auto* decompose = app.add_subcommand("decompose", "Show the (P, sigma) decomposition of a group element");
  decompose->add_option("file", file)->required();
  decompose->add_option("--element", element, "Element name")->required();

  auto add_search_options = [&](CLI::App* cmd) {
    cmd->add_option("--type", type_text, "Type vector k1,k2,... (default all ones)");
    cmd->add_option("--count", count, "Number of witnesses")->capture_default_str();
    cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
    cmd->add_option("--max-tries", max_tries, "Draw budget per coordinate")->capture_default_str();
  };
  auto* survey = app.add_subcommand("survey", "Search subvarieties with field of definition K_A");
  survey->add_option("file", file, "JSON file or bundled dataset name")->required();
  add_search_options(survey);

  auto* fod_cmd = app.add_subcommand("field-of-def", "Field of definition of the subvariety of an ideal");
  fod_cmd->add_option("file", file)->required();
  fod_cmd->add_option("--ideal", ideal_file, "JSON ideal file")->required();

  auto* bound = app.add_subcommand("bound", "Evaluate the degree bound f(g)");
  bound->add_option("--dim", dim, "Dimension g >= 2")->required();

  auto* demo = app.add_subcommand("demo", "Survey a bundled dataset");
  demo->add_option("dataset", file, "remark-A | remark-A2 | swap-2xM2Q | quat-inner")
      ->required()
      ->check(CLI::IsMember(fod::bundled_dataset_names()));
  add_search_options(demo);

  for (auto* cmd : {validate, decompose, survey, fod_cmd, bound, demo}) {
    cmd->add_flag("--pretty", pretty, "Human-readable output");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      const auto loaded = fod::load_endo_structure_file(file);
      Json out;
      out["command"] = "validate";
      out["status"] = "ok";
      out.update(fod::structure_summary(loaded.structure));
      emit(out, pretty);
      return 0;
    }
    if (*decompose) {
      const auto loaded = fod::load_endo_structure_file(file);
      const auto& e = loaded.structure;
      const auto idx = e.galois.find(element);
      if (!idx) throw fod::ValidationError("unknown group element \"" + element + "\"");
      const auto& g = e.galois.elements()[*idx];
      Json out;
      out["command"] = "decompose";
      out["element"] = g.name;
      Json tau = Json::array();
      for (auto t : g.tau) tau.push_back(t + 1);
      out["tau"] = tau;
      Json blocks = Json::array();
      for (std::size_t i = 0; i < g.maps.size(); ++i) {
        const auto& d = g.maps[i];
        const auto& block = e.algebra().blocks[i];
        Json bj;
        bj["block"] = i + 1;
        bj["source_block"] = g.preimage(i) + 1;
        bj["input"] = loaded.from_linear_map[*idx][i] ? "linear_map" : "pair";
        bj["sigma"] = d.sigma_name;
        bj["sigma_matrix"] = fod::to_json(d.sigma.matrix());
        bj["P"] = fod::to_json(d.p);
        bj["center_action"] = fod::to_json(d.sigma.restrict_to_center(block.lifts.center()));
        bj["central_homothety"] = fod::is_central_homothety(d.p);
        bj["reconstruction_verified"] = d.linear_map() == g.linear_maps[i];
        blocks.push_back(std::move(bj));
      }
      out["blocks"] = std::move(blocks);
      emit(out, pretty);
      return 0;
    }
    if (*survey) {
      return run_survey(fod::load_endo_structure_file(file), file, type_text, count, seed, max_tries, pretty);
    }
    if (*demo) {
      return run_survey(fod::load_endo_structure(*fod::bundled_dataset(file)), file, type_text, count, seed,
                        max_tries, pretty);
    }
    if (*fod_cmd) {
      const auto loaded = fod::load_endo_structure_file(file);
      std::ifstream in(ideal_file);
      if (!in) throw fod::ValidationError("cannot open ideal file \"" + ideal_file + "\"");
      Json ideal_json;
      try {
        ideal_json = Json::parse(in);
      } catch (const Json::parse_error& ex) {
        throw fod::ValidationError(ideal_file + ": invalid JSON: " + ex.what());
      }
      const auto& e = loaded.structure;
      const auto ideal = fod::ideal_from_json(ideal_json, e.algebra());
      const auto report = fod::field_of_definition(ideal, e);
      Json out;
      out["command"] = "field-of-def";
      out.update(fod::to_json(report, static_cast<unsigned>(e.total_dimension())));
      emit(out, pretty, print_report_table);
      return 0;
    }
    if (*bound) {
      Json out;
      out["command"] = "bound";
      out["g"] = dim;
      out["bound"] = fod::format_rational(fod::degree_bound(dim));
      if (pretty) {
        std::cout << "f(" << dim << ") = " << out["bound"].get<std::string>() << "\n";
      } else {
        std::cout << out.dump() << "\n";
      }
      return 0;
    }
  } catch (const fod::InconclusiveSearch& ex) {
    std::cout << Json{{"error", ex.what()}, {"kind", "inconclusive"}, {"tries_used", ex.tries_used()}}.dump() << "\n";
    return kExitInconclusive;
  } catch (const fod::ValidationError& ex) {
    std::cout << Json{{"error", ex.what()}, {"kind", "validation"}}.dump() << "\n";
    std::cerr << "error: " << ex.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
