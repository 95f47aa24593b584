#include "leibniz/cochain.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace leibniz {

namespace {

std::size_t ipow(std::size_t base, unsigned exp) {
  std::size_t r = 1;
  for (unsigned k = 0; k < exp; ++k) r *= base;
  return r;
}

// Columns of each action matrix, so that [b_x, m_k] and [m_k, b_x] can be
// read off as sparse vectors over the module basis.
std::vector<std::vector<SparseVector>> action_columns(const std::vector<SparseRationalMatrix>& ops) {
  std::vector<std::vector<SparseVector>> out;
  out.reserve(ops.size());
  for (const auto& op : ops) {
    SparseRationalMatrix t = op.transpose();
    std::vector<SparseVector> cols(t.rows());
    for (std::size_t k = 0; k < t.rows(); ++k) cols[k] = t.row(k);
    out.push_back(std::move(cols));
  }
  return out;
}

}  // namespace

CochainIndex::CochainIndex(std::size_t algebra_dim, std::size_t module_dim, unsigned n)
    : algebra_dim_(algebra_dim), module_dim_(module_dim), n_(n), size_(ipow(algebra_dim, n) * module_dim) {}

std::size_t CochainIndex::flat(std::span<const Index> args, Index target) const {
  if (args.size() != n_) throw std::invalid_argument("CochainIndex::flat: wrong number of arguments");
  std::size_t idx = 0;
  for (Index a : args) {
    if (a >= algebra_dim_) throw std::out_of_range("CochainIndex::flat: argument index out of range");
    idx = idx * algebra_dim_ + a;
  }
  if (target >= module_dim_) throw std::out_of_range("CochainIndex::flat: target index out of range");
  return idx * module_dim_ + target;
}

Index CochainIndex::unflatten(std::size_t flat, std::span<Index> args) const {
  if (flat >= size_) throw std::out_of_range("CochainIndex::unflatten: index out of range");
  if (args.size() != n_) throw std::invalid_argument("CochainIndex::unflatten: wrong number of arguments");
  auto target = static_cast<Index>(flat % module_dim_);
  flat /= module_dim_;
  for (unsigned p = n_; p-- > 0;) {
    args[p] = static_cast<Index>(flat % algebra_dim_);
    flat /= algebra_dim_;
  }
  return target;
}

SparseRationalMatrix coboundary_matrix(const AlgebraStructure& a, const Bimodule& m, unsigned n) {
  if (n > kMaxCoboundaryDegree) {
    throw std::invalid_argument("coboundary_matrix: degree " + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxCoboundaryDegree));
  }
  if (m.algebra_dim != a.dim()) throw std::invalid_argument("coboundary_matrix: module over a different algebra");
  m.validate();

  const CochainIndex src(a.dim(), m.module_dim, n);
  const CochainIndex dst(a.dim(), m.module_dim, n + 1);
  const std::size_t md = m.module_dim;
  const auto left_cols = action_columns(m.left_action);
  const auto right_cols = action_columns(m.right_action);

  std::vector<SparseVector> rows(dst.size());
  const std::size_t tuples = ipow(a.dim(), n + 1);
  std::vector<Index> x(n + 1);
  std::vector<Index> reduced(n);
  // Per output coordinate r: (column, value) contributions.
  std::vector<std::vector<std::pair<Index, Rational>>> acc(md);

  for (std::size_t t = 0; t < tuples; ++t) {
    dst.unflatten(t * md, x);
    for (auto& v : acc) v.clear();

    // [x_1, f(x_2..x_{n+1})]
    {
      std::copy(x.begin() + 1, x.end(), reduced.begin());
      for (Index k = 0; k < md; ++k) {
        const SparseVector& col = left_cols[x[0]][k];
        if (col.empty()) continue;
        auto c = static_cast<Index>(src.flat(reduced, k));
        for (const auto& [r, v] : col) acc[r].emplace_back(c, v);
      }
    }
    // (-1)^i [f(x without x_i), x_i], positions i = 2..n+1 (1-based)
    for (unsigned i = 2; i <= n + 1; ++i) {
      const Index xi = x[i - 1];
      std::size_t w = 0;
      for (unsigned p = 0; p <= n; ++p) {
        if (p != i - 1) reduced[w++] = x[p];
      }
      const Rational sign(i % 2 == 0 ? 1 : -1);
      for (Index k = 0; k < md; ++k) {
        const SparseVector& col = right_cols[xi][k];
        if (col.empty()) continue;
        auto c = static_cast<Index>(src.flat(reduced, k));
        for (const auto& [r, v] : col) acc[r].emplace_back(c, sign * v);
      }
    }
    // (-1)^{j+1} f(.., [x_i, x_j] at position i, .., x_j removed, ..)
    for (unsigned i = 1; i <= n + 1; ++i) {
      for (unsigned j = i + 1; j <= n + 1; ++j) {
        const SparseVector& br = a.product(x[i - 1], x[j - 1]);
        if (br.empty()) continue;
        const Rational sign(j % 2 == 1 ? 1 : -1);
        for (const auto& [s, coeff] : br) {
          std::size_t w = 0;
          for (unsigned p = 0; p <= n; ++p) {
            if (p == j - 1) continue;
            reduced[w++] = (p == i - 1) ? s : x[p];
          }
          Rational v = sign * coeff;
          for (Index r = 0; r < md; ++r) acc[r].emplace_back(static_cast<Index>(src.flat(reduced, r)), v);
        }
      }
    }
    for (Index r = 0; r < md; ++r) {
      if (!acc[r].empty()) rows[t * md + r] = canonicalize(std::move(acc[r]));
    }
  }
  return {dst.size(), src.size(), std::move(rows)};
}

CochainGrading adjoint_grading(const Grading& g) { return {g.degrees, g.degrees}; }

int cochain_degree(const CochainGrading& cg, std::span<const Index> args, Index target) {
  int d = cg.module.at(target);
  for (Index a : args) d -= cg.algebra.at(a);
  return d;
}

std::vector<Index> graded_columns(const CochainGrading& cg, unsigned n, int degree) {
  const CochainIndex idx(cg.algebra.size(), cg.module.size(), n);
  std::vector<Index> out;
  std::vector<Index> args(n);
  for (std::size_t c = 0; c < idx.size(); ++c) {
    Index target = idx.unflatten(c, args);
    if (cochain_degree(cg, args, target) == degree) out.push_back(static_cast<Index>(c));
  }
  return out;
}

std::vector<int> achievable_degrees(const CochainGrading& cg, unsigned n) {
  const CochainIndex idx(cg.algebra.size(), cg.module.size(), n);
  std::set<int> degs;
  std::vector<Index> args(n);
  for (std::size_t c = 0; c < idx.size(); ++c) {
    Index target = idx.unflatten(c, args);
    degs.insert(cochain_degree(cg, args, target));
  }
  return {degs.begin(), degs.end()};
}

std::string component_tag(int degree) {
  if (degree == 0) return "G";
  if (degree == 1) return "I";
  return "L" + std::to_string(degree);
}

std::string GradedBlock::signature() const {
  std::string s;
  for (std::size_t k = 0; k < argument_degrees.size(); ++k) {
    if (k) s += "x";
    s += component_tag(argument_degrees[k]);
  }
  return s + "->" + component_tag(target_degree);
}

std::vector<GradedBlock> graded_blocks(const CochainGrading& cg, unsigned n, int degree) {
  const CochainIndex idx(cg.algebra.size(), cg.module.size(), n);
  std::map<std::pair<std::vector<int>, int>, GradedBlock> blocks;
  std::vector<Index> args(n);
  std::vector<int> arg_degrees(n);
  for (std::size_t c = 0; c < idx.size(); ++c) {
    Index target = idx.unflatten(c, args);
    if (cochain_degree(cg, args, target) != degree) continue;
    for (unsigned p = 0; p < n; ++p) arg_degrees[p] = cg.algebra[args[p]];
    auto key = std::make_pair(arg_degrees, cg.module[target]);
    auto [it, inserted] = blocks.try_emplace(key);
    if (inserted) {
      it->second.n = n;
      it->second.degree = degree;
      it->second.argument_degrees = arg_degrees;
      it->second.target_degree = cg.module[target];
    }
    it->second.coords.push_back(static_cast<Index>(c));
  }
  std::vector<GradedBlock> out;
  for (auto& [key, block] : blocks) out.push_back(std::move(block));
  return out;
}

SparseRationalMatrix graded_submatrix(const SparseRationalMatrix& d, const CochainGrading& cg, unsigned n,
                                      int degree) {
  const CochainIndex src(cg.algebra.size(), cg.module.size(), n);
  const CochainIndex dst(cg.algebra.size(), cg.module.size(), n + 1);
  if (d.cols() != src.size() || d.rows() != dst.size()) {
    throw std::invalid_argument("graded_submatrix: matrix shape does not match d^" + std::to_string(n));
  }
  std::vector<Index> cols = graded_columns(cg, n, degree);
  std::vector<Index> rows = graded_columns(cg, n + 1, degree);
  std::size_t stray = d.count_outside_rows(rows, cols);
  if (stray != 0) {
    throw GradingViolation("coboundary does not preserve the grading: " + std::to_string(stray) +
                           " entries leave degree " + std::to_string(degree));
  }
  return d.select(rows, cols);
}

}  // namespace leibniz
