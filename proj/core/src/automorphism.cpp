#include "fod/automorphism.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "fod/error.hpp"

namespace fod {

namespace {

std::string basis_name(const MatrixBlock& block, std::size_t index) {
  const std::size_t d = block.algebra->dim();
  const std::size_t e = index / d;
  const std::size_t u = index % d;
  const std::string& label = block.algebra->labels()[u];
  std::string name = "E" + std::to_string(e / block.n + 1) + std::to_string(e % block.n + 1);
  if (d > 1 || label != "1") name += "*" + label;
  return name;
}

bool commutes_with_basis(const DivisionAlgebra& alg, const QVector& x) {
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const QVector b = alg.basis(i);
    if (alg.mul(x, b) != alg.mul(b, x)) return false;
  }
  return true;
}

// First element of `basis` (then seeded combinations) accepted by `ok`.
template <typename Accept>
std::optional<QVector> first_accepted(const std::vector<QVector>& basis, Seed seed, Accept ok) {
  for (const auto& v : basis) {
    if (ok(v)) return v;
  }
  if (basis.empty()) return std::nullopt;
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    QVector combo(basis.front().size());
    bool nonzero = false;
    for (const auto& v : basis) {
      const std::int64_t c = rng.uniform(-5, 5);
      if (c == 0) continue;
      nonzero = true;
      for (std::size_t i = 0; i < combo.size(); ++i) combo[i] += Rational(static_cast<long>(c)) * v[i];
    }
    if (nonzero && ok(combo)) return combo;
  }
  return std::nullopt;
}

}  // namespace

MatrixOverD MatrixBlock::basis(std::size_t index) const {
  const std::size_t d = algebra->dim();
  const std::size_t e = index / d;
  MatrixOverD m(algebra, n, n);
  m(e / n, e % n) = algebra->basis(index % d);
  return m;
}

// ---------------------------------------------------------------------------

Decomposition Decomposition::make(MatrixOverD p, AlgebraAutomorphism sigma, std::string sigma_name) {
  MatrixOverD inv = matrix_inv(p);
  return Decomposition{std::move(p), std::move(inv), std::move(sigma), std::move(sigma_name)};
}

QMatrix Decomposition::linear_map() const {
  return linear_map_of(MatrixBlock{p.rows(), p.algebra()}, [this](const MatrixOverD& m) { return apply(m); });
}

QMatrix linear_map_of(const MatrixBlock& block, const std::function<MatrixOverD(const MatrixOverD&)>& map) {
  const std::size_t dim = block.dim();
  std::vector<QVector> columns;
  columns.reserve(dim);
  for (std::size_t a = 0; a < dim; ++a) columns.push_back(map(block.basis(a)).flatten());
  return QMatrix::from_columns(dim, columns);
}

// ---------------------------------------------------------------------------

MatrixAlgebraAutomorphism MatrixAlgebraAutomorphism::validate(MatrixBlock block, QMatrix linear_map) {
  const std::size_t dim = block.dim();
  if (linear_map.rows() != dim || linear_map.cols() != dim) {
    throw ValidationError("linear map must be " + std::to_string(dim) + "x" + std::to_string(dim));
  }
  const auto& alg = block.algebra;
  const std::size_t n = block.n;
  const MatrixOverD id = MatrixOverD::identity(alg, n);
  if (linear_map * id.flatten() != id.flatten()) throw ValidationError("map is not unital");

  std::vector<MatrixOverD> images;
  images.reserve(dim);
  for (std::size_t a = 0; a < dim; ++a) images.push_back(MatrixOverD::from_flat(alg, n, n, linear_map.column(a)));

  for (std::size_t a = 0; a < dim; ++a) {
    const MatrixOverD ba = block.basis(a);
    for (std::size_t b = 0; b < dim; ++b) {
      const QVector lhs = linear_map * (ba * block.basis(b)).flatten();
      const QVector rhs = (images[a] * images[b]).flatten();
      if (lhs != rhs) {
        throw ValidationError("map is not multiplicative on (" + basis_name(block, a) + ", " + basis_name(block, b) +
                              ")");
      }
    }
  }
  if (linear_map.rank() != dim) throw ValidationError("map is not invertible");
  return MatrixAlgebraAutomorphism(std::move(block), std::move(linear_map));
}

MatrixAlgebraAutomorphism MatrixAlgebraAutomorphism::from_decomposition(MatrixBlock block, Decomposition d) {
  if (d.p.rows() != block.n || !d.p.square()) throw ValidationError("P has the wrong size for this block");
  auto f = validate(block, d.linear_map());
  f.decomposition_ = std::move(d);
  return f;
}

MatrixOverD MatrixAlgebraAutomorphism::apply(const MatrixOverD& m) const {
  return MatrixOverD::from_flat(block_.algebra, block_.n, block_.n, linear_map_ * m.flatten());
}

MatrixAlgebraAutomorphism MatrixAlgebraAutomorphism::compose(const MatrixAlgebraAutomorphism& other) const {
  return MatrixAlgebraAutomorphism(block_, linear_map_ * other.linear_map_);
}

MatrixAlgebraAutomorphism MatrixAlgebraAutomorphism::inverse() const {
  return MatrixAlgebraAutomorphism(block_, *linear_map_.inverse());
}

MatrixAlgebraAutomorphism MatrixAlgebraAutomorphism::with_decomposition(Decomposition d) const {
  MatrixAlgebraAutomorphism copy(*this);
  copy.decomposition_ = std::move(d);
  return copy;
}

MatrixAlgebraAutomorphism extend_entrywise(const AlgebraAutomorphism& sigma, std::size_t n, std::string sigma_name) {
  const auto& alg = sigma.algebra();
  const std::size_t d = alg->dim();
  MatrixBlock block{n, alg};
  QMatrix map(block.dim(), block.dim());
  for (std::size_t e = 0; e < n * n; ++e)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) map(e * d + i, e * d + j) = sigma.matrix()(i, j);
  auto f = MatrixAlgebraAutomorphism::validate(block, std::move(map));
  return f.with_decomposition(Decomposition::make(MatrixOverD::identity(alg, n), sigma, std::move(sigma_name)));
}

QMatrix restrict_to_center(const MatrixAlgebraAutomorphism& f, const CenterDescription& z) {
  const std::size_t n = f.block().n;
  const auto& alg = *f.block().algebra;
  QMatrix out(z.dim(), z.dim());
  for (std::size_t j = 0; j < z.dim(); ++j) {
    const MatrixOverD image = f.apply(MatrixOverD::scalar(f.block().algebra, n, z.basis[j].coords()));
    const QVector y = image(0, 0);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (image(r, c) != (r == c ? y : alg.zero())) {
          throw ValidationError("automorphism does not preserve the center: image of " + z.basis[j].to_string() +
                                " is not a scalar matrix");
        }
      }
    }
    auto coords = z.coordinates(y);
    if (!coords) {
      throw ValidationError("automorphism does not preserve the center: image of " + z.basis[j].to_string() +
                            " is not central");
    }
    for (std::size_t i = 0; i < z.dim(); ++i) out(i, j) = (*coords)[i];
  }
  if (out.rank() != z.dim()) throw ValidationError("restriction to the center is not invertible");
  return out;
}

MatrixOverD inner_conjugator(const MatrixAlgebraAutomorphism& h, Seed seed) {
  const auto& block = h.block();
  const auto& alg = block.algebra;
  if (!restrict_to_center(h, center(alg)).is_identity()) {
    throw ValidationError("inner_conjugator requires an automorphism trivial on the center");
  }
  const std::size_t dim = block.dim();
  std::vector<MatrixOverD> basis;
  std::vector<MatrixOverD> images;
  for (std::size_t a = 0; a < dim; ++a) {
    basis.push_back(block.basis(a));
    images.push_back(h.apply(basis.back()));
  }
  // unknown P = sum_a p_a B_a; equations h(B_b) P - P B_b = 0
  QMatrix system(dim * dim, dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      const QVector eq = (images[b] * basis[a] - basis[a] * basis[b]).flatten();
      for (std::size_t q = 0; q < dim; ++q) system(b * dim + q, a) = eq[q];
    }
  }
  const auto solution =
      first_accepted(system.nullspace(), seed, [&](const QVector& v) {
        return is_invertible(MatrixOverD::from_flat(alg, block.n, block.n, v));
      });
  if (!solution) throw ValidationError("no invertible conjugator found: input is not an automorphism");
  return MatrixOverD::from_flat(alg, block.n, block.n, *solution);
}

Decomposition decompose(const MatrixAlgebraAutomorphism& f, const LiftTable& lifts, Seed seed) {
  const auto& block = f.block();
  const QMatrix action = restrict_to_center(f, lifts.center());
  const LiftTable::Entry* entry = lifts.find_by_center_action(action);
  if (!entry) {
    std::string desc;
    for (std::size_t j = 0; j < action.cols(); ++j) {
      if (j) desc += ", ";
      desc += lifts.center().basis[j].to_string() + " -> " +
              block.algebra->format(lifts.center().basis_matrix() * action.column(j));
    }
    throw ValidationError("incomplete lift table: no lift restricts to the center automorphism {" + desc + "}");
  }
  const auto h = f.compose(extend_entrywise(entry->sigma.inverse(), block.n));
  auto result = Decomposition::make(inner_conjugator(h, seed), entry->sigma, entry->name);
  if (result.linear_map() != f.linear_map()) {
    throw std::logic_error("decomposition does not reconstruct the automorphism");
  }
  return result;
}

std::optional<QVector> inner_difference(const AlgebraAutomorphism& rho, const AlgebraAutomorphism& sigma, Seed seed) {
  const auto& alg = *rho.algebra();
  const std::size_t d = alg.dim();
  QMatrix system(d * d, d);
  for (std::size_t x = 0; x < d; ++x) {
    const QVector rx = rho.apply(alg.basis(x));
    const QVector sx = sigma.apply(alg.basis(x));
    for (std::size_t j = 0; j < d; ++j) {
      const QVector bj = alg.basis(j);
      const QVector eq = alg.sub(alg.mul(rx, bj), alg.mul(bj, sx));
      for (std::size_t k = 0; k < d; ++k) system(x * d + k, j) = eq[k];
    }
  }
  return first_accepted(system.nullspace(), seed, [&](const QVector& u) { return alg.invertible(u); });
}

Decomposition compose_autos(const Decomposition& g1, const Decomposition& g2, const LiftTable& lifts, Seed seed) {
  const auto& alg = g1.p.algebra();
  const std::size_t n = g1.p.rows();
  if (g2.p.rows() != n) throw ValidationError("cannot compose automorphisms of different blocks");
  const AlgebraAutomorphism rho = g1.sigma.compose(g2.sigma);
  const QMatrix action = rho.restrict_to_center(lifts.center());
  const LiftTable::Entry* entry = lifts.find_by_center_action(action);
  if (!entry) throw ValidationError("incomplete lift table: composite has no lift-table representative");
  auto u = inner_difference(rho, entry->sigma, seed);
  if (!u) throw ValidationError("no invertible element relates the composite to its lift-table representative");
  MatrixOverD p = g1.p * apply_sigma(g1.sigma, g2.p) * MatrixOverD::scalar(alg, n, *u);
  auto result = Decomposition::make(std::move(p), entry->sigma, entry->name);

  const MatrixBlock block{n, alg};
  for (std::size_t a = 0; a < block.dim(); ++a) {
    const MatrixOverD b = block.basis(a);
    if (!(result.apply(b) == g1.apply(g2.apply(b)))) {
      throw std::logic_error("composite decomposition does not reconstruct on " + basis_name(block, a));
    }
  }
  return result;
}

bool is_central_homothety(const MatrixOverD& p) {
  if (!p.square() || p.rows() == 0) return false;
  const auto& alg = *p.algebra();
  const QVector lambda = p(0, 0);
  if (is_zero(lambda)) return false;
  for (std::size_t r = 0; r < p.rows(); ++r)
    for (std::size_t c = 0; c < p.cols(); ++c)
      if (p(r, c) != (r == c ? lambda : alg.zero())) return false;
  return commutes_with_basis(alg, lambda);
}

bool is_trivial_on_grassmannian(const MatrixOverD& p, const AlgebraAutomorphism& sigma, std::size_t k) {
  const std::size_t n = p.rows();
  if (k == 0 || k >= n) return true;
  return sigma.is_identity() && is_central_homothety(p);
}

std::vector<RightSubspace> probe_subspaces(const AlgebraPtr& algebra, std::size_t n, std::size_t k) {
  if (k == 0) return {RightSubspace::zero(algebra, n)};
  if (k >= n) return {RightSubspace::full(algebra, n)};
  const auto& alg = *algebra;
  auto standard = [&](std::size_t i) {
    DVector e(n, alg.zero());
    e[i] = alg.unit();
    return e;
  };

  std::vector<RightSubspace> out;
  auto push = [&](const std::vector<DVector>& vectors) {
    RightSubspace v = span_of(algebra, n, vectors);
    if (v.dim() == k && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
  };

  // all coordinate subspaces
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<DVector> vs;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) vs.push_back(standard(i));
    push(vs);
  } while (std::prev_permutation(mask.begin(), mask.end()));

  std::vector<QVector> scalars{alg.unit()};
  for (std::size_t u = 0; u < alg.dim(); ++u) scalars.push_back(alg.basis(u));

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<std::size_t> others;
      for (std::size_t m = 0; m < n; ++m)
        if (m != i && m != j) others.push_back(m);
      for (const auto& x : scalars) {
        DVector line = standard(i);
        line[j] = x;
        // pad with the first, then the last, k - 1 remaining standard vectors
        for (bool from_front : {true, false}) {
          std::vector<DVector> vs{line};
          for (std::size_t t = 0; t + 1 < k; ++t) {
            vs.push_back(standard(from_front ? others[t] : others[others.size() - 1 - t]));
          }
          push(vs);
        }
      }
    }
  }
  return out;
}

std::optional<RightSubspace> find_moved_subspace(const Decomposition& g, std::size_t k, Seed seed,
                                                 std::size_t samples) {
  const auto& alg = g.p.algebra();
  const std::size_t n = g.p.rows();
  for (const auto& v : probe_subspaces(alg, n, k)) {
    if (!(g.apply(v) == v)) return v;
  }
  for (std::size_t s = 0; s < samples; ++s) {
    RightSubspace v = random_subspace(alg, n, k, mix_seed(seed, s));
    if (!(g.apply(v) == v)) return v;
  }
  return std::nullopt;
}

}  // namespace fod
