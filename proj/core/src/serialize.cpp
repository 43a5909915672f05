#include "fod/serialize.hpp"

#include <fstream>
#include <sstream>

#include "fod/datasets.hpp"
#include "fod/error.hpp"

namespace fod {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ValidationError(path + ": " + message);
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string at(const std::string& path, const std::string& key) { return path + "." + key; }

const Json& require(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing required key \"" + key + "\"");
  return *it;
}

const Json& require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string require_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::size_t require_count(const Json& j, const std::string& path, std::size_t min = 0) {
  if (!j.is_number_integer() || j.get<long long>() < static_cast<long long>(min)) {
    fail(path, "expected an integer >= " + std::to_string(min));
  }
  return j.get<std::size_t>();
}

QVector coords_from_json(const Json& j, std::size_t d, const std::string& path) {
  require_array(j, path);
  if (j.size() != d) fail(path, "expected " + std::to_string(d) + " coordinates, got " + std::to_string(j.size()));
  QVector v;
  for (std::size_t i = 0; i < d; ++i) v.push_back(rational_from_json(j[i], at(path, i)));
  return v;
}

template <typename F>
auto rethrow_with_path(const std::string& path, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    if (what.rfind("$", 0) == 0) throw;
    fail(path, what);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Output

Json to_json(const Rational& q) { return format_rational(q); }

Json to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const MatrixOverD& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const RightSubspace& v) {
  Json out = Json::array();
  for (std::size_t c = 0; c < v.dim(); ++c) {
    Json column = Json::array();
    for (std::size_t r = 0; r < v.ambient_dim(); ++r) column.push_back(to_json(v.basis()(r, c)));
    out.push_back(std::move(column));
  }
  return out;
}

Json to_json(const ProductIdeal& ideal) {
  Json out = Json::array();
  for (const auto& c : ideal.components) out.push_back(to_json(c.subspace));
  return out;
}

Json to_json(const SubvarietyReport& report, unsigned total_dim) {
  Json out;
  out["type"] = report.type;
  out["isogeny_class"] = report.isogeny_class;
  out["dim"] = report.dim;
  out["stabilizer"] = report.stabilizer;
  if (report.field) {
    out["field"] = *report.field;
  } else {
    out["subgroup_generators"] = report.subgroup_generators;
  }
  out["degree_over_base"] = report.degree_over_base;
  out["bound"] = format_rational(degree_bound(total_dim < 2 ? 2 : total_dim));
  out["within_bound"] = total_dim < 2 || check_bound(report, total_dim);
  out["ideal"] = to_json(report.ideal);
  return out;
}

Json to_json(const SurveyReport& report, const EndoStructure& e) {
  Json out;
  switch (report.outcome) {
    case SurveyReport::Outcome::Positive: out["result"] = "positive"; break;
    case SurveyReport::Outcome::Negative: out["result"] = "negative"; break;
    case SurveyReport::Outcome::Inconclusive: out["result"] = "inconclusive"; break;
  }
  out["type"] = report.type;
  out["isogeny_class"] = isogeny_class(e, report.type);
  out["seed"] = report.seed;
  out["count"] = report.requested;
  out["tries_used"] = report.tries_used;
  out["base_field"] = e.base_field;
  out["full_field"] = e.full_field;
  out["message"] = report.message;
  if (report.outcome == SurveyReport::Outcome::Negative) {
    out["certificate"] = {{"element", *report.certificate}, {"fixes_every_ideal_of_type", report.type}};
    Json sampled = Json::array();
    for (std::size_t i = 0; i < report.sampled_stabilizers.size(); ++i) {
      Json s;
      s["stabilizer"] = report.sampled_stabilizers[i];
      if (!report.sampled_fields[i].empty()) s["field"] = report.sampled_fields[i];
      sampled.push_back(std::move(s));
    }
    out["sampled_stabilizers"] = std::move(sampled);
  }
  if (report.outcome == SurveyReport::Outcome::Positive) {
    Json w = Json::array();
    const auto g = static_cast<unsigned>(e.total_dimension());
    for (const auto& r : report.witnesses) w.push_back(to_json(r, g));
    out["witnesses"] = std::move(w);
  }
  return out;
}

Json to_json(const FreeSearchReport& report) {
  Json out;
  out["seed"] = report.seed;
  out["tries_used"] = report.tries_used;
  if (report.certificate) out["certificate"] = *report.certificate;
  Json ideals = Json::array();
  for (const auto& i : report.ideals) ideals.push_back(to_json(i));
  out["ideals"] = std::move(ideals);
  return out;
}

// ---------------------------------------------------------------------------
// Input

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (!j.is_string()) fail(path, "expected a rational as \"p/q\" string or integer");
  return rethrow_with_path(path, [&] { return parse_rational(j.get<std::string>()); });
}

QMatrix qmatrix_from_json(const Json& j, const std::string& path) {
  require_array(j, path);
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? require_array(j[0], at(path, 0)).size() : 0;
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    require_array(j[r], at(path, r));
    if (j[r].size() != cols) fail(at(path, r), "ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c], at(at(path, r), c));
  }
  return m;
}

MatrixOverD matrix_from_json(const Json& j, const AlgebraPtr& algebra, const std::string& path) {
  require_array(j, path);
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? require_array(j[0], at(path, 0)).size() : 0;
  MatrixOverD m(algebra, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    require_array(j[r], at(path, r));
    if (j[r].size() != cols) fail(at(path, r), "ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = coords_from_json(j[r][c], algebra->dim(), at(at(path, r), c));
  }
  return m;
}

RightSubspace subspace_from_json(const Json& j, const AlgebraPtr& algebra, std::size_t n, const std::string& path) {
  require_array(j, path);
  std::vector<DVector> columns;
  for (std::size_t c = 0; c < j.size(); ++c) {
    const std::string cp = at(path, c);
    require_array(j[c], cp);
    if (j[c].size() != n) fail(cp, "basis vector must have " + std::to_string(n) + " entries");
    DVector v;
    for (std::size_t r = 0; r < n; ++r) v.push_back(coords_from_json(j[c][r], algebra->dim(), at(cp, r)));
    columns.push_back(std::move(v));
  }
  return span_of(algebra, n, columns);
}

ProductIdeal ideal_from_json(const Json& j, const ProductAlgebra& algebra, const std::string& path) {
  if (j.is_object()) return ideal_from_json(require(j, "ideal", path), algebra, at(path, "ideal"));
  require_array(j, path);
  if (j.size() != algebra.size()) {
    fail(path, "ideal must have " + std::to_string(algebra.size()) + " components");
  }
  std::vector<RightSubspace> parts;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& b = algebra.blocks[i];
    parts.push_back(subspace_from_json(j[i], b.algebra, b.n, at(path, i)));
  }
  return ProductIdeal::from_subspaces(std::move(parts));
}

AlgebraPtr algebra_from_json(const Json& j, const std::string& path) {
  const std::string kind = require_string(require(j, "kind", path), at(path, "kind"));
  return rethrow_with_path(path, [&]() -> AlgebraPtr {
    if (kind == "rationals") return DivisionAlgebra::rationals();
    if (kind == "field") {
      const Json& poly = require_array(require(j, "poly", path), at(path, "poly"));
      std::vector<Integer> coeffs;
      for (std::size_t i = 0; i < poly.size(); ++i) {
        const Rational c = rational_from_json(poly[i], at(at(path, "poly"), i));
        if (c.get_den() != 1) fail(at(at(path, "poly"), i), "polynomial coefficients must be integers");
        coeffs.push_back(c.get_num());
      }
      std::string var = "x";
      if (j.contains("var")) var = require_string(j["var"], at(path, "var"));
      return DivisionAlgebra::field(coeffs, var);
    }
    if (kind == "quaternion") {
      return DivisionAlgebra::quaternion(rational_from_json(require(j, "a", path), at(path, "a")),
                                         rational_from_json(require(j, "b", path), at(path, "b")));
    }
    if (kind == "table") {
      const Json& labels_json = require_array(require(j, "labels", path), at(path, "labels"));
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < labels_json.size(); ++i) {
        labels.push_back(require_string(labels_json[i], at(at(path, "labels"), i)));
      }
      const std::size_t d = labels.size();
      const std::string pp = at(path, "products");
      const Json& products = require_array(require(j, "products", path), pp);
      if (products.size() != d) fail(pp, "expected " + std::to_string(d) + " rows");
      std::vector<std::vector<QVector>> table(d);
      for (std::size_t r = 0; r < d; ++r) {
        require_array(products[r], at(pp, r));
        if (products[r].size() != d) fail(at(pp, r), "expected " + std::to_string(d) + " products");
        for (std::size_t c = 0; c < d; ++c) table[r].push_back(coords_from_json(products[r][c], d, at(at(pp, r), c)));
      }
      QVector unit = coords_from_json(require(j, "unit", path), d, at(path, "unit"));
      return DivisionAlgebra::from_table(std::move(labels), std::move(table), std::move(unit));
    }
    fail(at(path, "kind"), "unknown algebra kind \"" + kind + "\"");
  });
}

namespace {

AlgebraBlock block_from_json(const Json& j, const std::string& path, SimpleFactor& factor) {
  const std::size_t n = require_count(require(j, "n", path), at(path, "n"), 1);
  AlgebraPtr alg = algebra_from_json(require(j, "algebra", path), at(path, "algebra"));

  const std::string fp = at(path, "factor");
  const Json& f = require(j, "factor", path);
  factor.label = require_string(require(f, "label", fp), at(fp, "label"));
  factor.dim = require_count(require(f, "dim", fp), at(fp, "dim"), 1);
  if (f.contains("multiplicity") && require_count(f["multiplicity"], at(fp, "multiplicity")) != n) {
    fail(at(fp, "multiplicity"), "multiplicity does not match n = " + std::to_string(n));
  }

  std::vector<std::pair<std::string, AlgebraAutomorphism>> lifts;
  if (j.contains("lifts")) {
    const std::string lp = at(path, "lifts");
    const Json& arr = require_array(j["lifts"], lp);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string ep = at(lp, i);
      std::string name = "lift" + std::to_string(i + 1);
      const Json* matrix = &arr[i];
      if (arr[i].is_object()) {
        name = require_string(require(arr[i], "name", ep), at(ep, "name"));
        matrix = &require(arr[i], "matrix", ep);
      }
      QMatrix m = qmatrix_from_json(*matrix, ep);
      lifts.emplace_back(name, rethrow_with_path(ep, [&] { return AlgebraAutomorphism::validate(alg, m); }));
    }
  }
  LiftTable table = rethrow_with_path(at(path, "lifts"), [&] { return LiftTable(alg, std::move(lifts)); });
  return AlgebraBlock{n, alg, std::move(table)};
}

}  // namespace

LoadedStructure load_endo_structure(const Json& doc) {
  const std::string root = "$";
  LoadedStructure loaded;
  EndoStructure& e = loaded.structure;

  ProductAlgebra algebra;
  const Json& blocks = require_array(require(doc, "blocks", root), "$.blocks");
  if (blocks.empty()) fail("$.blocks", "at least one block is required");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    SimpleFactor factor;
    algebra.blocks.push_back(block_from_json(blocks[i], at("$.blocks", i), factor));
    e.factors.push_back(std::move(factor));
  }
  const std::size_t r = algebra.size();

  const std::string gp = "$.group";
  const std::string ep = at(gp, "elements");
  const Json& elems = require_array(require(require(doc, "group", root), "elements", gp), ep);
  std::vector<GroupElement> elements;
  for (std::size_t a = 0; a < elems.size(); ++a) {
    const std::string path = at(ep, a);
    const Json& ej = elems[a];
    const std::string name = require_string(require(ej, "name", path), at(path, "name"));
    std::vector<std::size_t> tau(r);
    if (ej.contains("tau")) {
      const Json& t = require_array(ej["tau"], at(path, "tau"));
      if (t.size() != r) fail(at(path, "tau"), "expected " + std::to_string(r) + " entries");
      for (std::size_t i = 0; i < r; ++i) {
        const std::size_t v = require_count(t[i], at(at(path, "tau"), i), 1);
        if (v > r) fail(at(at(path, "tau"), i), "block index out of range");
        tau[i] = v - 1;
      }
    } else {
      for (std::size_t i = 0; i < r; ++i) tau[i] = i;
    }
    const Json& maps = require_array(require(ej, "maps", path), at(path, "maps"));
    if (maps.size() != r) fail(at(path, "maps"), "expected one map per block");
    std::vector<Decomposition> decs;
    std::vector<bool> linear;
    for (std::size_t i = 0; i < r; ++i) {
      const std::string mp = at(at(path, "maps"), i);
      const AlgebraBlock& block = algebra.blocks[i];
      const Json& mj = maps[i];
      if (!mj.is_object()) fail(mp, "expected an object");
      if (mj.contains("linear_map")) {
        QMatrix lm = qmatrix_from_json(mj["linear_map"], at(mp, "linear_map"));
        decs.push_back(rethrow_with_path(mp, [&] {
          auto f = MatrixAlgebraAutomorphism::validate(block.shape(), lm);
          return decompose(f, block.lifts);
        }));
        linear.push_back(true);
        continue;
      }
      MatrixOverD p = MatrixOverD::identity(block.algebra, block.n);
      if (mj.contains("P")) {
        p = matrix_from_json(mj["P"], block.algebra, at(mp, "P"));
        if (p.rows() != block.n || p.cols() != block.n) {
          fail(at(mp, "P"), "expected a " + std::to_string(block.n) + "x" + std::to_string(block.n) + " matrix");
        }
      }
      AlgebraAutomorphism sigma = AlgebraAutomorphism::identity(block.algebra);
      std::string sigma_name = "id";
      if (mj.contains("sigma")) {
        const Json& s = mj["sigma"];
        if (s.is_string()) {
          sigma_name = s.get<std::string>();
          const auto* entry = block.lifts.find_by_name(sigma_name);
          if (!entry) fail(at(mp, "sigma"), "unknown lift \"" + sigma_name + "\"");
          sigma = entry->sigma;
        } else {
          QMatrix m = qmatrix_from_json(s, at(mp, "sigma"));
          sigma = rethrow_with_path(at(mp, "sigma"), [&] { return AlgebraAutomorphism::validate(block.algebra, m); });
          sigma_name.clear();
        }
      }
      decs.push_back(rethrow_with_path(mp, [&] { return Decomposition::make(p, sigma, sigma_name); }));
      linear.push_back(false);
    }
    elements.push_back(rethrow_with_path(path, [&] { return GroupElement::make(name, tau, std::move(decs), algebra); }));
    loaded.from_linear_map.push_back(std::move(linear));
  }
  e.galois = rethrow_with_path(gp, [&] { return validate_group(std::move(algebra), std::move(elements)); });

  const std::string fp = "$.fields";
  const Json& fields = require(doc, "fields", root);
  e.base_field = require_string(require(fields, "base", fp), at(fp, "base"));
  e.full_field = require_string(require(fields, "full", fp), at(fp, "full"));
  if (fields.contains("table")) {
    const Json& table = fields["table"];
    if (!table.is_object()) fail(at(fp, "table"), "expected an object");
    for (const auto& [key, value] : table.items()) {
      std::vector<std::string> names;
      std::stringstream ss(key);
      for (std::string item; std::getline(ss, item, ',');) {
        if (!item.empty()) names.push_back(item);
      }
      std::sort(names.begin(), names.end());
      e.subgroup_fields[names] = require_string(value, at(at(fp, "table"), key));
    }
  }
  rethrow_with_path(fp, [&] {
    validate_endo_structure(e);
    return 0;
  });
  return loaded;
}

LoadedStructure load_endo_structure_file(const std::string& path_or_dataset) {
  if (auto bundled = bundled_dataset(path_or_dataset)) return load_endo_structure(*bundled);
  std::ifstream in(path_or_dataset);
  if (!in) throw ValidationError("cannot open \"" + path_or_dataset + "\" (not a file or bundled dataset)");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& ex) {
    throw ValidationError(path_or_dataset + ": invalid JSON: " + ex.what());
  }
  return load_endo_structure(doc);
}

Json structure_summary(const EndoStructure& e) {
  Json out;
  Json blocks = Json::array();
  for (std::size_t i = 0; i < e.algebra().size(); ++i) {
    const auto& b = e.algebra().blocks[i];
    Json bj;
    bj["n"] = b.n;
    bj["algebra_dim"] = b.algebra->dim();
    bj["basis"] = b.algebra->labels();
    Json center = Json::array();
    for (const auto& c : b.lifts.center().basis) center.push_back(c.to_string());
    bj["center"] = std::move(center);
    Json lifts = Json::array();
    for (const auto& l : b.lifts.entries()) lifts.push_back(l.name);
    bj["lifts"] = std::move(lifts);
    bj["factor"] = {{"label", e.factors[i].label}, {"dim", e.factors[i].dim}};
    blocks.push_back(std::move(bj));
  }
  out["blocks"] = std::move(blocks);
  out["total_dim"] = e.total_dimension();
  out["group_order"] = e.galois.order();
  Json names = Json::array();
  for (const auto& g : e.galois.elements()) names.push_back(g.name);
  out["elements"] = names;
  Json table = Json::object();
  for (std::size_t a = 0; a < e.galois.order(); ++a) {
    Json row = Json::object();
    for (std::size_t b = 0; b < e.galois.order(); ++b) {
      row[e.galois.elements()[b].name] = e.galois.elements()[e.galois.compose(a, b)].name;
    }
    table[e.galois.elements()[a].name] = std::move(row);
  }
  out["composition_table"] = std::move(table);
  out["fields"] = {{"base", e.base_field}, {"full", e.full_field}};
  return out;
}

}  // namespace fod
