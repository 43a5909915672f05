#include "fod/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "fod/error.hpp"

namespace fod {

namespace {

// ---------------------------------------------------------------------------
// Partial irreducibility test for monic integer polynomials.

using IntPoly = std::vector<Integer>;  // ascending, monic

constexpr long kFactorSearchBudget = 2'000'000;

bool divides_monic(const IntPoly& f, const IntPoly& g) {
  IntPoly rem = f;
  const std::size_t m = f.size() - 1;
  const std::size_t k = g.size() - 1;
  for (std::size_t top = m; top >= k; --top) {
    const Integer lead = rem[top];
    if (lead != 0) {
      for (std::size_t j = 0; j <= k; ++j) rem[top - k + j] -= lead * g[j];
    }
    if (top == k) break;
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (rem[j] != 0) return false;
  }
  return true;
}

Integer eval(const IntPoly& f, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

// Divisors of |n| (n != 0) by trial division; nullopt when over budget.
std::optional<std::vector<Integer>> positive_divisors(const Integer& n, long& budget) {
  Integer a = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= a; ++d) {
    if (--budget < 0) return std::nullopt;
    if (a % d == 0) {
      small.push_back(d);
      if (d * d != a) large.push_back(a / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Returns a description of a detected factor, or nullopt.
std::optional<std::string> find_small_factor(const IntPoly& f) {
  const std::size_t m = f.size() - 1;
  if (m <= 1) return std::nullopt;
  if (f[0] == 0) return std::string("root 0");

  long budget = kFactorSearchBudget;
  auto divisors = positive_divisors(f[0], budget);
  if (!divisors) return std::nullopt;

  for (const auto& d : *divisors) {
    for (int sign : {1, -1}) {
      Integer r = d * sign;
      if (eval(f, r) == 0) return "root " + r.get_str();
    }
  }

  double norm2 = 0;
  for (const auto& c : f) norm2 += c.get_d() * c.get_d();
  const double fnorm = std::sqrt(norm2);

  // monic factors of degree k, 2 <= k <= m/2
  for (std::size_t k = 2; k <= 3 && 2 * k <= m; ++k) {
    std::vector<long long> bound(k);
    long long cases = 2 * static_cast<long long>(divisors->size());
    for (std::size_t j = 1; j < k; ++j) {
      const double binom = (k == 2) ? 2.0 : 3.0;  // C(k, j) for 0 < j < k
      const double b = std::floor(binom * fnorm);
      if (b > 1e6) return std::nullopt;
      bound[j] = static_cast<long long>(b);
      cases *= 2 * bound[j] + 1;
      if (cases > budget) return std::nullopt;
    }
    IntPoly g(k + 1);
    g[k] = 1;
    std::vector<long long> coef(k);
    for (const auto& d : *divisors) {
      for (int sign : {1, -1}) {
        g[0] = d * sign;
        // odometer over the middle coefficients
        for (std::size_t j = 1; j < k; ++j) coef[j] = -bound[j];
        while (true) {
          for (std::size_t j = 1; j < k; ++j) g[j] = static_cast<long>(coef[j]);
          if (divides_monic(f, g)) {
            std::ostringstream os;
            os << "factor of degree " << k;
            return os.str();
          }
          std::size_t j = 1;
          while (j < k && coef[j] == bound[j]) {
            coef[j] = -bound[j];
            ++j;
          }
          if (j == k) break;
          ++coef[j];
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// DivisionAlgebra

DivisionAlgebra::DivisionAlgebra(std::vector<std::string> labels, std::vector<QVector> table, QVector unit)
    : dim_(labels.size()), labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)) {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (table_[i * dim_ + j][k] != 0) terms_.push_back({i, j, k, table_[i * dim_ + j][k]});
}

AlgebraPtr DivisionAlgebra::from_table(std::vector<std::string> labels, std::vector<std::vector<QVector>> table,
                                       QVector unit) {
  const std::size_t d = labels.size();
  if (d == 0) throw ValidationError("algebra must have positive dimension");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != d) {
    throw ValidationError("basis labels must be distinct");
  }
  if (table.size() != d) throw ValidationError("structure table must have one row per basis element");
  std::vector<QVector> flat;
  flat.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    if (table[i].size() != d) throw ValidationError("structure table row " + labels[i] + " has wrong length");
    for (std::size_t j = 0; j < d; ++j) {
      if (table[i][j].size() != d) {
        throw ValidationError("product " + labels[i] + "*" + labels[j] + " has wrong coordinate count");
      }
      flat.push_back(std::move(table[i][j]));
    }
  }
  if (unit.size() != d) throw ValidationError("unit has wrong coordinate count");

  // private constructor, so no make_shared
  AlgebraPtr alg(new DivisionAlgebra(std::move(labels), std::move(flat), std::move(unit)));

  for (std::size_t i = 0; i < d; ++i) {
    const QVector bi = alg->basis(i);
    if (alg->mul(alg->unit_, bi) != bi || alg->mul(bi, alg->unit_) != bi) {
      throw ValidationError("unit " + alg->format(alg->unit_) + " is not a two-sided identity (fails on " +
                            alg->labels_[i] + ")");
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const QVector& ij = alg->product(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        const QVector lhs = alg->mul(ij, alg->basis(k));
        const QVector rhs = alg->mul(alg->basis(i), alg->product(j, k));
        if (lhs != rhs) {
          throw ValidationError("structure constants are not associative on (" + alg->labels_[i] + ", " +
                                alg->labels_[j] + ", " + alg->labels_[k] + ")");
        }
      }
    }
  }
  return alg;
}

AlgebraPtr DivisionAlgebra::field(const std::vector<Integer>& coefficients, std::string variable) {
  if (coefficients.size() < 2) throw ValidationError("field polynomial must have degree >= 1");
  if (coefficients.back() != 1) throw ValidationError("field polynomial must be monic");
  if (auto factor = find_small_factor(coefficients)) {
    throw ValidationError("field polynomial is reducible (" + *factor + ")");
  }
  const std::size_t m = coefficients.size() - 1;

  // powers[p] = coordinates of x^p, p < 2m - 1
  std::vector<QVector> powers;
  for (std::size_t p = 0; p < m; ++p) powers.push_back(unit_vector(m, p));
  for (std::size_t p = m; p + 1 < 2 * m; ++p) {
    const QVector& prev = powers.back();
    QVector next(m);
    for (std::size_t i = 0; i + 1 < m; ++i) next[i + 1] = prev[i];
    const Rational top = prev[m - 1];
    if (top != 0) {
      for (std::size_t i = 0; i < m; ++i) next[i] -= top * Rational(coefficients[i]);
    }
    powers.push_back(std::move(next));
  }

  std::vector<std::string> labels;
  for (std::size_t p = 0; p < m; ++p) {
    labels.push_back(p == 0 ? "1" : p == 1 ? variable : variable + "^" + std::to_string(p));
  }
  std::vector<std::vector<QVector>> table(m, std::vector<QVector>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i][j] = powers[i + j];
  return from_table(std::move(labels), std::move(table), unit_vector(m, 0));
}

AlgebraPtr DivisionAlgebra::quaternion(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw ValidationError("quaternion parameters must be nonzero");
  auto v = [](Rational c0, Rational c1, Rational c2, Rational c3) { return QVector{c0, c1, c2, c3}; };
  const Rational z = 0;
  // basis 1, i, j, k
  std::vector<std::vector<QVector>> t = {
      {v(1, z, z, z), v(z, 1, z, z), v(z, z, 1, z), v(z, z, z, 1)},
      {v(z, 1, z, z), v(a, z, z, z), v(z, z, z, 1), v(z, z, a, z)},
      {v(z, z, 1, z), v(z, z, z, -1), v(b, z, z, z), v(z, -b, z, z)},
      {v(z, z, z, 1), v(z, z, -a, z), v(z, b, z, z), v(-a * b, z, z, z)},
  };
  return from_table({"1", "i", "j", "k"}, std::move(t), v(1, z, z, z));
}

AlgebraPtr DivisionAlgebra::rationals() { return from_table({"1"}, {{QVector{1}}}, QVector{1}); }

QVector DivisionAlgebra::mul(const QVector& a, const QVector& b) const {
  QVector out(dim_);
  for (const auto& t : terms_) {
    if (a[t.i] == 0 || b[t.j] == 0) continue;
    out[t.k] += a[t.i] * b[t.j] * t.c;
  }
  return out;
}

QVector DivisionAlgebra::add(const QVector& a, const QVector& b) const {
  QVector out(a);
  for (std::size_t i = 0; i < dim_; ++i) out[i] += b[i];
  return out;
}

QVector DivisionAlgebra::sub(const QVector& a, const QVector& b) const {
  QVector out(a);
  for (std::size_t i = 0; i < dim_; ++i) out[i] -= b[i];
  return out;
}

QVector DivisionAlgebra::neg(const QVector& a) const {
  QVector out(a);
  for (auto& x : out) x = -x;
  return out;
}

QVector DivisionAlgebra::scale(const QVector& a, const Rational& q) const {
  QVector out(a);
  for (auto& x : out) x *= q;
  return out;
}

QMatrix DivisionAlgebra::left_regular(const QVector& a) const {
  QMatrix m(dim_, dim_);
  for (const auto& t : terms_) {
    if (a[t.i] != 0) m(t.k, t.j) += a[t.i] * t.c;
  }
  return m;
}

QVector DivisionAlgebra::inv(const QVector& a) const {
  if (fod::is_zero(a)) throw DataError("cannot invert zero");
  auto x = left_regular(a).solve(unit_);
  if (!x) {
    throw DataError("element " + format(a) + " is not invertible: the algebra is not a division algebra");
  }
  if (mul(*x, a) != unit_) {
    throw DataError("element " + format(a) + " has a right inverse that is not a left inverse");
  }
  return *x;
}

bool DivisionAlgebra::invertible(const QVector& a) const {
  return !fod::is_zero(a) && left_regular(a).rank() == dim_;
}

std::string DivisionAlgebra::format(const QVector& a) const {
  std::string out;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    Rational c = a[i];
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (labels_[i] == "1") {
      out += format_rational(c);
    } else if (c == 1) {
      out += labels_[i];
    } else {
      out += format_rational(c) + "*" + labels_[i];
    }
  }
  return out.empty() ? "0" : out;
}

bool DivisionAlgebra::same_presentation(const DivisionAlgebra& other) const {
  return dim_ == other.dim_ && labels_ == other.labels_ && table_ == other.table_ && unit_ == other.unit_;
}

// ---------------------------------------------------------------------------
// Element

namespace {

void require_same(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a.get() != b.get() && !a->same_presentation(*b)) throw ValidationError("algebra mismatch");
}

}  // namespace

Element::Element(AlgebraPtr algebra, QVector coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (coords_.size() != algebra_->dim()) throw ValidationError("element has wrong coordinate count");
}

Element Element::operator+(const Element& o) const {
  require_same(algebra_, o.algebra_);
  return {algebra_, algebra_->add(coords_, o.coords_)};
}

Element Element::operator-(const Element& o) const {
  require_same(algebra_, o.algebra_);
  return {algebra_, algebra_->sub(coords_, o.coords_)};
}

Element Element::operator*(const Element& o) const { return element_mul(*this, o); }

Element Element::operator-() const { return {algebra_, algebra_->neg(coords_)}; }

bool Element::operator==(const Element& o) const {
  return (algebra_.get() == o.algebra_.get() || algebra_->same_presentation(*o.algebra_)) && coords_ == o.coords_;
}

Element element_mul(const Element& a, const Element& b) {
  require_same(a.algebra(), b.algebra());
  return {a.algebra(), a.algebra()->mul(a.coords(), b.coords())};
}

Element element_inv(const Element& a) { return {a.algebra(), a.algebra()->inv(a.coords())}; }

// ---------------------------------------------------------------------------
// Center

QMatrix CenterDescription::basis_matrix() const {
  std::vector<QVector> cols;
  for (const auto& e : basis) cols.push_back(e.coords());
  return QMatrix::from_columns(algebra->dim(), cols);
}

std::optional<QVector> CenterDescription::coordinates(const QVector& x) const {
  return basis_matrix().solve(x);
}

CenterDescription center(const AlgebraPtr& algebra) {
  const std::size_t d = algebra->dim();
  // rows (i, k): coordinate k of x b_i - b_i x, linear in x
  QMatrix system(d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const QVector commutator = algebra->sub(algebra->product(j, i), algebra->product(i, j));
      for (std::size_t k = 0; k < d; ++k) system(i * d + k, j) = commutator[k];
    }
  }
  const auto kernel = system.nullspace();

  CenterDescription z{algebra, {Element::unit(algebra)}};
  std::vector<QVector> chosen{algebra->unit()};
  for (const auto& v : kernel) {
    auto candidate = chosen;
    candidate.push_back(v);
    if (QMatrix::from_columns(d, candidate).rank() == candidate.size()) {
      chosen = std::move(candidate);
      z.basis.emplace_back(algebra, v);
    }
  }
  return z;
}

// ---------------------------------------------------------------------------
// AlgebraAutomorphism

AlgebraAutomorphism AlgebraAutomorphism::validate(AlgebraPtr algebra, QMatrix matrix) {
  const std::size_t d = algebra->dim();
  if (matrix.rows() != d || matrix.cols() != d) {
    throw ValidationError("automorphism matrix must be " + std::to_string(d) + "x" + std::to_string(d));
  }
  const auto& labels = algebra->labels();
  if (matrix * algebra->unit() != algebra->unit()) {
    throw ValidationError("map is not unital: unit maps to " + algebra->format(matrix * algebra->unit()));
  }
  std::vector<QVector> images;
  for (std::size_t i = 0; i < d; ++i) images.push_back(matrix.column(i));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const QVector lhs = matrix * algebra->product(i, j);
      const QVector rhs = algebra->mul(images[i], images[j]);
      if (lhs != rhs) {
        throw ValidationError("map is not multiplicative on (" + labels[i] + ", " + labels[j] + "): image of " +
                              labels[i] + "*" + labels[j] + " is " + algebra->format(lhs) +
                              " but product of images is " + algebra->format(rhs));
      }
    }
  }
  if (matrix.rank() != d) throw ValidationError("map is not invertible");
  return AlgebraAutomorphism(std::move(algebra), std::move(matrix));
}

AlgebraAutomorphism AlgebraAutomorphism::identity(AlgebraPtr algebra) {
  const std::size_t d = algebra->dim();
  return AlgebraAutomorphism(std::move(algebra), QMatrix::identity(d));
}

AlgebraAutomorphism AlgebraAutomorphism::inverse() const {
  return AlgebraAutomorphism(algebra_, *matrix_.inverse());
}

AlgebraAutomorphism AlgebraAutomorphism::compose(const AlgebraAutomorphism& other) const {
  require_same(algebra_, other.algebra_);
  return AlgebraAutomorphism(algebra_, matrix_ * other.matrix_);
}

QMatrix AlgebraAutomorphism::restrict_to_center(const CenterDescription& z) const {
  QMatrix out(z.dim(), z.dim());
  for (std::size_t j = 0; j < z.dim(); ++j) {
    const QVector image = apply(z.basis[j].coords());
    auto coords = z.coordinates(image);
    if (!coords) {
      throw ValidationError("automorphism maps central element " + z.basis[j].to_string() + " outside the center");
    }
    for (std::size_t i = 0; i < z.dim(); ++i) out(i, j) = (*coords)[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// LiftTable

LiftTable::LiftTable(AlgebraPtr algebra, std::vector<std::pair<std::string, AlgebraAutomorphism>> lifts)
    : algebra_(std::move(algebra)), center_(fod::center(algebra_)) {
  const bool has_identity =
      std::any_of(lifts.begin(), lifts.end(), [](const auto& l) { return l.second.is_identity(); });
  if (!has_identity) lifts.insert(lifts.begin(), {"id", AlgebraAutomorphism::identity(algebra_)});

  for (auto& [name, sigma] : lifts) {
    require_same(algebra_, sigma.algebra());
    if (find_by_name(name)) throw ValidationError("duplicate lift name \"" + name + "\"");
    QMatrix action = sigma.restrict_to_center(center_);
    if (const Entry* clash = find_by_center_action(action)) {
      throw ValidationError("lifts \"" + clash->name + "\" and \"" + name + "\" restrict to the same automorphism of the center");
    }
    entries_.push_back({name, sigma, std::move(action)});
  }
}

const LiftTable::Entry* LiftTable::find_by_center_action(const QMatrix& center_action) const {
  for (const auto& e : entries_) {
    if (e.center_action == center_action) return &e;
  }
  return nullptr;
}

const LiftTable::Entry* LiftTable::find_by_name(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

const LiftTable::Entry* LiftTable::find(const AlgebraAutomorphism& sigma) const {
  for (const auto& e : entries_) {
    if (e.sigma == sigma) return &e;
  }
  return nullptr;
}

bool LiftTable::same_as(const LiftTable& other) const {
  if (!algebra_->same_presentation(*other.algebra_) || entries_.size() != other.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].name != other.entries_[i].name || !(entries_[i].sigma == other.entries_[i].sigma)) return false;
  }
  return true;
}

}  // namespace fod
