#include "leibniz/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>
#include <tuple>

namespace leibniz {

namespace {

SparseVector unit(Index i) { return SparseVector{{i, Rational(1)}}; }

SparseVector add(const SparseVector& a, const SparseVector& b) { return axpy(a, Rational(1), b); }
SparseVector sub(const SparseVector& a, const SparseVector& b) { return axpy(a, Rational(-1), b); }

SparseRationalMatrix combination(const std::vector<SparseRationalMatrix>& ops, const SparseVector& coeffs,
                                 std::size_t size) {
  std::vector<std::tuple<Index, Index, Rational>> t;
  for (const auto& [s, c] : coeffs) {
    const auto& op = ops.at(s);
    for (std::size_t r = 0; r < op.rows(); ++r) {
      for (const auto& [k, v] : op.row(r)) t.emplace_back(static_cast<Index>(r), k, c * v);
    }
  }
  return SparseRationalMatrix::from_triplets(size, size, t);
}

SparseRationalMatrix difference(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  std::vector<SparseVector> rows(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) rows[r] = axpy(a.row(r), Rational(-1), b.row(r));
  return {a.rows(), a.cols(), std::move(rows)};
}

// Reports every column of `defect` with a nonzero entry.
void collect_columns(const SparseRationalMatrix& defect, int axiom, Index x, Index y,
                     std::vector<IdentityViolation>& out) {
  if (defect.is_zero()) return;
  SparseRationalMatrix t = defect.transpose();
  for (std::size_t k = 0; k < t.rows(); ++k) {
    if (!t.row(k).empty()) out.push_back({axiom, {x, y, static_cast<Index>(k)}, t.row(k)});
  }
}

std::vector<SparseVector> products_of(const AlgebraStructure& a, const std::vector<SparseVector>& lhs,
                                      const std::vector<SparseVector>& rhs) {
  std::vector<SparseVector> out;
  for (const auto& x : lhs) {
    for (const auto& y : rhs) {
      SparseVector p = a.multiply(x, y);
      if (!p.empty()) out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

AlgebraStructure::AlgebraStructure(std::vector<std::string> labels, const std::vector<Product>& products)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  std::vector<std::vector<std::pair<Index, Rational>>> buckets(n * n);
  std::set<std::tuple<Index, Index, Index>> seen;
  for (const auto& p : products) {
    if (p.left >= n || p.right >= n || p.result >= n) {
      throw std::invalid_argument("AlgebraStructure: product index out of range");
    }
    if (p.coeff.is_zero()) throw std::invalid_argument("AlgebraStructure: zero structure constant");
    if (!seen.emplace(p.left, p.right, p.result).second) {
      throw std::invalid_argument("AlgebraStructure: duplicate product record");
    }
    buckets[p.left * n + p.right].emplace_back(p.result, p.coeff);
  }
  table_.resize(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    table_[k] = canonicalize(std::move(buckets[k]));
    if (!table_[k].empty()) nonzero_pairs_.emplace_back(static_cast<Index>(k / n), static_cast<Index>(k % n));
  }
}

std::optional<Index> AlgebraStructure::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Index>(it - labels_.begin());
}

SparseVector AlgebraStructure::multiply(const SparseVector& x, const SparseVector& y) const {
  std::vector<std::pair<Index, Rational>> acc;
  for (const auto& [i, xi] : x) {
    for (const auto& [j, yj] : y) {
      for (const auto& [k, c] : product(i, j)) acc.emplace_back(k, xi * yj * c);
    }
  }
  return canonicalize(std::move(acc));
}

std::vector<AlgebraStructure::Product> AlgebraStructure::products() const {
  std::vector<Product> out;
  for (const auto& [i, j] : nonzero_pairs_) {
    for (const auto& [k, c] : product(i, j)) out.push_back({i, j, k, c});
  }
  return out;
}

Bimodule Bimodule::zero(std::size_t algebra_dim, std::size_t module_dim) {
  Bimodule m;
  m.algebra_dim = algebra_dim;
  m.module_dim = module_dim;
  m.left_action.assign(algebra_dim, SparseRationalMatrix(module_dim, module_dim));
  m.right_action.assign(algebra_dim, SparseRationalMatrix(module_dim, module_dim));
  return m;
}

void Bimodule::validate() const {
  if (left_action.size() != algebra_dim || right_action.size() != algebra_dim) {
    throw std::invalid_argument("Bimodule: one action matrix per algebra basis vector required");
  }
  for (const auto* side : {&left_action, &right_action}) {
    for (const auto& op : *side) {
      if (op.rows() != module_dim || op.cols() != module_dim) {
        throw std::invalid_argument("Bimodule: action matrix has wrong size");
      }
    }
  }
}

std::vector<IdentityViolation> leibniz_defects(const AlgebraStructure& a) {
  const auto n = static_cast<Index>(a.dim());
  std::vector<IdentityViolation> out;
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      const SparseVector& xy = a.product(x, y);
      for (Index z = 0; z < n; ++z) {
        // [x,[y,z]] - [[x,y],z] + [[x,z],y]
        SparseVector lhs = a.multiply(unit(x), a.product(y, z));
        SparseVector rhs = sub(a.multiply(xy, unit(z)), a.multiply(a.product(x, z), unit(y)));
        SparseVector defect = sub(lhs, rhs);
        if (!defect.empty()) out.push_back({0, {x, y, z}, std::move(defect)});
      }
    }
  }
  return out;
}

Subspace squares_ideal(const AlgebraStructure& a) {
  const auto n = static_cast<Index>(a.dim());
  std::vector<SparseVector> gens;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      SparseVector s = i == j ? a.product(i, i) : add(a.product(i, j), a.product(j, i));
      if (!s.empty()) gens.push_back(std::move(s));
    }
  }
  Subspace ideal = Subspace::span(a.dim(), gens);
  // For Leibniz input the span of squares is already an ideal.
  assert(!leibniz_defects(a).empty() || is_two_sided_ideal(a, ideal));
  return ideal;
}

bool is_two_sided_ideal(const AlgebraStructure& a, const Subspace& s) {
  const auto n = static_cast<Index>(a.dim());
  for (const auto& v : s.basis()) {
    for (Index i = 0; i < n; ++i) {
      if (!s.contains(a.multiply(v, unit(i))) || !s.contains(a.multiply(unit(i), v))) return false;
    }
  }
  return true;
}

std::vector<std::size_t> derived_series(const AlgebraStructure& a, const Subspace& s, std::size_t max_steps) {
  if (max_steps == 0) throw std::invalid_argument("derived_series: max_steps must be at least 1");
  std::vector<std::size_t> dims{s.dim()};
  Subspace current = s;
  while (dims.size() < max_steps && current.dim() > 0) {
    Subspace next = Subspace::span(a.dim(), products_of(a, current.basis(), current.basis()));
    bool stable = next.dim() == current.dim();
    dims.push_back(next.dim());
    current = std::move(next);
    if (stable) break;
  }
  return dims;
}

std::vector<std::size_t> derived_series(const AlgebraStructure& a, std::size_t max_steps) {
  return derived_series(a, Subspace::full(a.dim()), max_steps);
}

bool is_solvable(const AlgebraStructure& a, const Subspace& s) {
  // The series strictly decreases until it stabilizes, so dim + 2 terms suffice.
  auto dims = derived_series(a, s, s.dim() + 2);
  return dims.back() == 0;
}

bool is_solvable(const AlgebraStructure& a) { return is_solvable(a, Subspace::full(a.dim())); }

bool check_grading(const AlgebraStructure& a, const Grading& g) {
  if (g.degrees.size() != a.dim()) return false;
  for (const auto& [i, j] : a.nonzero_pairs()) {
    for (const auto& [k, c] : a.product(i, j)) {
      if (g.degrees[k] != g.degrees[i] + g.degrees[j]) return false;
    }
  }
  return true;
}

std::vector<IdentityViolation> check_bimodule_axioms(const AlgebraStructure& a, const Bimodule& m) {
  if (m.algebra_dim != a.dim()) {
    throw std::invalid_argument("check_bimodule_axioms: module is over an algebra of dimension " +
                                std::to_string(m.algebra_dim) + ", expected " + std::to_string(a.dim()));
  }
  m.validate();
  const auto n = static_cast<Index>(a.dim());
  const std::size_t md = m.module_dim;
  std::vector<IdentityViolation> out;
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      const SparseVector& xy = a.product(x, y);
      const auto& Lx = m.left_action[x];
      const auto& Ly = m.left_action[y];
      const auto& Rx = m.right_action[x];
      const auto& Ry = m.right_action[y];
      SparseRationalMatrix R_xy = combination(m.right_action, xy, md);
      SparseRationalMatrix L_xy = combination(m.left_action, xy, md);
      // [m,[x,y]] = [[m,x],y] - [[m,y],x]
      collect_columns(difference(R_xy, difference(Ry * Rx, Rx * Ry)), 1, x, y, out);
      // [x,[m,y]] = [[x,m],y] - [[x,y],m]
      collect_columns(difference(Lx * Ry, difference(Ry * Lx, L_xy)), 2, x, y, out);
      // [x,[y,m]] = [[x,y],m] - [[x,m],y]
      collect_columns(difference(Lx * Ly, difference(L_xy, Ry * Lx)), 3, x, y, out);
    }
  }
  return out;
}

Bimodule adjoint_bimodule(const AlgebraStructure& a) {
  const std::size_t n = a.dim();
  Bimodule m;
  m.algebra_dim = n;
  m.module_dim = n;
  for (Index x = 0; x < n; ++x) {
    std::vector<std::tuple<Index, Index, Rational>> left;
    std::vector<std::tuple<Index, Index, Rational>> right;
    for (Index k = 0; k < n; ++k) {
      for (const auto& [r, c] : a.product(x, k)) left.emplace_back(r, k, c);
      for (const auto& [r, c] : a.product(k, x)) right.emplace_back(r, k, c);
    }
    m.left_action.push_back(SparseRationalMatrix::from_triplets(n, n, left));
    m.right_action.push_back(SparseRationalMatrix::from_triplets(n, n, right));
  }
  return m;
}

Bimodule symmetric_bimodule(const Bimodule& m) {
  m.validate();
  Bimodule out = m;
  for (std::size_t x = 0; x < m.algebra_dim; ++x) {
    std::vector<SparseVector> rows;
    for (const auto& row : m.right_action[x].row_data()) {
      SparseVector neg = row;
      for (auto& [c, v] : neg) v = -v;
      rows.push_back(std::move(neg));
    }
    out.left_action[x] = SparseRationalMatrix(m.module_dim, m.module_dim, std::move(rows));
  }
  return out;
}

bool is_antisymmetric(const AlgebraStructure& a) {
  const auto n = static_cast<Index>(a.dim());
  for (Index i = 0; i < n; ++i) {
    if (!a.product(i, i).empty()) return false;
    for (Index j = i + 1; j < n; ++j) {
      if (!add(a.product(i, j), a.product(j, i)).empty()) return false;
    }
  }
  return true;
}

}  // namespace leibniz
