#include "leibniz/derivations.hpp"

#include <map>
#include <tuple>

#include "leibniz/cochain.hpp"

namespace leibniz {

namespace {

SparseRationalMatrix from_columns(std::size_t n, const std::vector<SparseVector>& columns) {
  std::vector<std::tuple<Index, Index, Rational>> t;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    for (const auto& [k, v] : columns[i]) t.emplace_back(k, static_cast<Index>(i), v);
  }
  return SparseRationalMatrix::from_triplets(n, columns.size(), t);
}

bool in_g(const Grading& g, Index i) { return g.degrees[i] == 0; }

}  // namespace

SparseVector operator_to_cochain(const SparseRationalMatrix& op) {
  if (op.rows() != op.cols()) throw std::invalid_argument("operator_to_cochain: operator must be square");
  const std::size_t n = op.rows();
  std::vector<std::pair<Index, Rational>> entries;
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& [i, v] : op.row(k)) entries.emplace_back(static_cast<Index>(i * n + k), v);
  }
  return canonicalize(std::move(entries));
}

SparseRationalMatrix cochain_to_operator(const SparseVector& v, std::size_t n) {
  std::vector<std::tuple<Index, Index, Rational>> t;
  for (const auto& [c, x] : v) {
    if (c >= n * n) throw std::out_of_range("cochain_to_operator: coordinate out of range");
    t.emplace_back(static_cast<Index>(c % n), static_cast<Index>(c / n), x);
  }
  return SparseRationalMatrix::from_triplets(n, n, t);
}

Subspace derivation_space(const AlgebraStructure& a) {
  const std::size_t n = a.dim();
  // Unknown u(i, r) = coefficient of b_r in d(b_i), at column i * n + r.
  // Row (i, j, r): sum_s c_ij^s u(s, r) - sum_k u(i, k) c_kj^r - sum_k u(j, k) c_ik^r.
  std::vector<std::tuple<Index, Index, Rational>> t;
  auto col = [n](std::size_t i, std::size_t r) { return static_cast<Index>(i * n + r); };
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const auto row0 = static_cast<Index>((i * n + j) * n);
      for (const auto& [s, c] : a.product(i, j)) {
        for (Index r = 0; r < n; ++r) t.emplace_back(row0 + r, col(s, r), c);
      }
      for (Index k = 0; k < n; ++k) {
        for (const auto& [r, c] : a.product(k, j)) t.emplace_back(row0 + r, col(i, k), -c);
        for (const auto& [r, c] : a.product(i, k)) t.emplace_back(row0 + r, col(j, k), -c);
      }
    }
  }
  return kernel_basis(SparseRationalMatrix::from_triplets(n * n * n, n * n, t));
}

SparseRationalMatrix right_mult_operator(const AlgebraStructure& a, const SparseVector& x) {
  const std::size_t n = a.dim();
  std::vector<SparseVector> columns(n);
  for (Index z = 0; z < n; ++z) columns[z] = a.multiply({{z, Rational(1)}}, x);
  return from_columns(n, columns);
}

SparseRationalMatrix projection_onto_i(const Grading& g) {
  const std::size_t n = g.degrees.size();
  std::vector<std::tuple<Index, Index, Rational>> t;
  for (Index i = 0; i < n; ++i) {
    if (g.degrees[i] == 1) t.emplace_back(i, i, Rational(1));
  }
  return SparseRationalMatrix::from_triplets(n, n, t);
}

DerivationDecomposition decompose_derivation(const AlgebraStructure& a, const Grading& g,
                                             const SparseRationalMatrix& d) {
  const std::size_t n = a.dim();
  if (g.degrees.size() != n) throw std::invalid_argument("decompose_derivation: grading size mismatch");
  for (int deg : g.degrees) {
    if (deg != 0 && deg != 1) throw std::invalid_argument("decompose_derivation: grading must take values 0 and 1");
  }
  if (d.rows() != n || d.cols() != n) throw std::invalid_argument("decompose_derivation: operator has the wrong shape");

  std::vector<Index> gens;
  for (Index i = 0; i < n; ++i) {
    if (in_g(g, i)) gens.push_back(i);
  }
  // Generator operators as cochains: R_g for g in G, then P_I.
  std::vector<SparseVector> generators;
  for (Index x : gens) generators.push_back(operator_to_cochain(right_mult_operator(a, {{x, Rational(1)}})));
  const bool has_i = gens.size() < n;
  if (has_i) generators.push_back(operator_to_cochain(projection_onto_i(g)));
  const std::size_t unknowns = generators.size();

  // Coordinates outside the G -> I block, where delta does not contribute.
  auto off_block = [&](Index c) { return !(in_g(g, static_cast<Index>(c / n)) && !in_g(g, static_cast<Index>(c % n))); };

  // Dense system over the off-block coordinates that some generator or d touches.
  const SparseVector target = operator_to_cochain(d);
  std::map<Index, std::vector<Rational>> rows;
  auto row_for = [&](Index c) -> std::vector<Rational>& {
    auto [it, inserted] = rows.try_emplace(c);
    if (inserted) it->second.assign(unknowns + 1, Rational());
    return it->second;
  };
  for (std::size_t u = 0; u < unknowns; ++u) {
    for (const auto& [c, v] : generators[u]) {
      if (off_block(c)) row_for(c)[u] = v;
    }
  }
  for (const auto& [c, v] : target) {
    if (off_block(c)) row_for(c)[unknowns] = v;
  }

  // Gauss-Jordan on the augmented matrix; the pivot rows form the square subsystem.
  std::vector<std::vector<Rational>> m;
  for (auto& [c, r] : rows) m.push_back(std::move(r));
  std::size_t pivot_row = 0;
  for (std::size_t u = 0; u < unknowns; ++u) {
    std::size_t p = pivot_row;
    while (p < m.size() && m[p][u].is_zero()) ++p;
    if (p == m.size()) {
      throw DecompositionDependency("decompose_derivation: right multiplications and P_I are linearly dependent");
    }
    std::swap(m[p], m[pivot_row]);
    const Rational inv = Rational(1) / m[pivot_row][u];
    for (auto& v : m[pivot_row]) v = v * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == pivot_row || m[r][u].is_zero()) continue;
      const Rational f = m[r][u];
      for (std::size_t k = u; k <= unknowns; ++k) m[r][k] = m[r][k] - f * m[pivot_row][k];
    }
    ++pivot_row;
  }

  DerivationDecomposition out;
  std::vector<Rational> coeffs(unknowns);
  for (std::size_t u = 0; u < unknowns; ++u) coeffs[u] = m[u][unknowns];
  out.a.assign(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(gens.size()));
  if (has_i) out.lambda = coeffs.back();

  SparseVector rest = target;
  for (std::size_t u = 0; u < unknowns; ++u) {
    if (!coeffs[u].is_zero()) rest = axpy(rest, -coeffs[u], generators[u]);
  }
  std::vector<std::pair<Index, Rational>> delta;
  std::vector<std::pair<Index, Rational>> residual;
  for (const auto& [c, v] : rest) (off_block(c) ? residual : delta).emplace_back(c, v);
  out.delta = cochain_to_operator(delta, n);
  out.residual = cochain_to_operator(residual, n);
  return out;
}

DerivationReport analyze_derivations(const AlgebraStructure& a, const Grading& g) {
  const std::size_t n = a.dim();
  DerivationReport r;
  r.space = derivation_space(a);
  r.equals_ker_d1 = subspace_equal(r.space, kernel_basis(coboundary_matrix(a, adjoint_bimodule(a), 1)));
  r.right_mults_are_derivations = true;
  for (Index x = 0; x < n; ++x) {
    if (!r.space.contains(operator_to_cochain(right_mult_operator(a, {{x, Rational(1)}})))) {
      r.right_mults_are_derivations = false;
    }
  }
  for (int deg : g.degrees) (deg == 0 ? r.g_dim : r.i_dim) += 1;

  std::vector<SparseVector> deltas;
  r.all_residuals_zero = true;
  for (const auto& v : r.space.basis()) {
    r.decompositions.push_back(decompose_derivation(a, g, cochain_to_operator(v, n)));
    r.all_residuals_zero = r.all_residuals_zero && r.decompositions.back().ok();
    deltas.push_back(operator_to_cochain(r.decompositions.back().delta));
  }
  // The canonical basis vector is scaled to leading coefficient 1 at its
  // lowest cochain coordinate, which is the first nonzero entry of delta(b_g)
  // for the first g it does not kill.
  Subspace delta_span = Subspace::span(n * n, deltas);
  r.delta_rank = delta_span.dim();
  if (r.delta_rank == 1) r.delta_generator = cochain_to_operator(delta_span.basis()[0], n);
  return r;
}

std::string describe_vector(const AlgebraStructure& a, const SparseVector& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : v) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (!mag.is_one()) out += mag.to_string() + " ";
    out += a.labels().at(k);
  }
  return out;
}

std::string describe_operator(const AlgebraStructure& a, const SparseRationalMatrix& op) {
  const SparseRationalMatrix t = op.transpose();
  std::string out;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (t.row(i).empty()) continue;
    if (!out.empty()) out += ", ";
    out += a.labels().at(i) + " -> " + describe_vector(a, t.row(i));
  }
  return out.empty() ? "0" : out;
}

}  // namespace leibniz
