#include "leibniz/cohomology.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace leibniz {

namespace {

void require_hl_degree(unsigned n, const char* who) {
  if (n > 2) throw std::invalid_argument(std::string(who) + ": degree " + std::to_string(n) + " not supported (n <= 2)");
}

void require_lie(const AlgebraStructure& lie, const char* who) {
  if (!is_antisymmetric(lie)) throw std::invalid_argument(std::string(who) + ": algebra is not antisymmetric");
  if (!leibniz_defects(lie).empty()) throw std::invalid_argument(std::string(who) + ": Jacobi identity fails");
}

std::vector<int> parse_block_tags(const std::string& text, std::optional<int>& target) {
  auto tag_degree = [&](const std::string& tag) -> int {
    if (tag == "G") return 0;
    if (tag == "I") return 1;
    if (tag.size() > 1 && tag[0] == 'L') {
      try {
        std::size_t used = 0;
        int d = std::stoi(tag.substr(1), &used);
        if (used == tag.size() - 1) return d;
      } catch (const std::exception&) {
      }
    }
    throw std::invalid_argument("unknown component tag '" + tag + "' in block '" + text + "'");
  };
  std::string args = text;
  target.reset();
  auto arrow = text.find("->");
  if (arrow != std::string::npos) {
    args = text.substr(0, arrow);
    target = tag_degree(text.substr(arrow + 2));
  }
  std::vector<int> degrees;
  std::size_t start = 0;
  while (true) {
    auto x = args.find('x', start);
    degrees.push_back(tag_degree(args.substr(start, x == std::string::npos ? std::string::npos : x - start)));
    if (x == std::string::npos) break;
    start = x + 1;
  }
  return degrees;
}

// Combinations of size n from {0..dim-1} in lexicographic order.
std::vector<std::vector<Index>> combinations(std::size_t dim, unsigned n) {
  std::vector<std::vector<Index>> out;
  if (n > dim) return out;
  std::vector<Index> c(n);
  for (unsigned k = 0; k < n; ++k) c[k] = k;
  while (true) {
    out.push_back(c);
    int k = static_cast<int>(n) - 1;
    while (k >= 0 && c[static_cast<std::size_t>(k)] == dim - n + static_cast<unsigned>(k)) --k;
    if (k < 0) break;
    ++c[static_cast<std::size_t>(k)];
    for (unsigned j = static_cast<unsigned>(k) + 1; j < n; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

// Sorts a tuple, returning the permutation sign, or 0 on a repeated entry.
int sort_with_sign(std::vector<Index>& t) {
  int sign = 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j + 1 < t.size() - i; ++j) {
      if (t[j] > t[j + 1]) {
        std::swap(t[j], t[j + 1]);
        sign = -sign;
      } else if (t[j] == t[j + 1]) {
        return 0;
      }
    }
  }
  for (std::size_t j = 0; j + 1 < t.size(); ++j) {
    if (t[j] == t[j + 1]) return 0;
  }
  return sign;
}

}  // namespace

std::size_t zl_dim(const AlgebraStructure& a, const Bimodule& m, unsigned n) {
  auto d = coboundary_matrix(a, m, n);
  return d.cols() - rank(d);
}

std::size_t bl_dim(const AlgebraStructure& a, const Bimodule& m, unsigned n) {
  require_hl_degree(n, "bl_dim");
  if (n == 0) return 0;
  return rank(coboundary_matrix(a, m, n - 1));
}

std::size_t hl_dim(const AlgebraStructure& a, const Bimodule& m, unsigned n) {
  require_hl_degree(n, "hl_dim");
  return zl_dim(a, m, n) - bl_dim(a, m, n);
}

CohomologyReport cohomology(const AlgebraStructure& a, const Bimodule& m, unsigned n) {
  require_hl_degree(n, "cohomology");
  CohomologyReport r;
  r.n = n;
  r.dim_z = zl_dim(a, m, n);
  r.dim_b = bl_dim(a, m, n);
  r.dim_h = r.dim_z - r.dim_b;
  return r;
}

CohomologyReport graded_cohomology(const AlgebraStructure& a, const Grading& g, unsigned n) {
  require_hl_degree(n, "graded_cohomology");
  if (!check_grading(a, g)) throw std::invalid_argument("graded_cohomology: not a grading of the algebra");
  const Bimodule adj = adjoint_bimodule(a);
  const CochainGrading cg = adjoint_grading(g);
  const auto dn = coboundary_matrix(a, adj, n);
  std::optional<SparseRationalMatrix> dprev;
  if (n > 0) dprev = coboundary_matrix(a, adj, n - 1);

  CohomologyReport r;
  r.n = n;
  r.dim_z = dn.cols() - rank(dn);
  r.dim_b = dprev ? rank(*dprev) : 0;
  r.dim_h = r.dim_z - r.dim_b;

  std::size_t sum_z = 0;
  std::size_t sum_b = 0;
  for (int i : achievable_degrees(cg, n)) {
    GradedDims gd;
    auto sub = graded_submatrix(dn, cg, n, i);
    gd.dim_z = sub.cols() - rank(sub);
    if (dprev) gd.dim_b = rank(graded_submatrix(*dprev, cg, n - 1, i));
    gd.dim_h = gd.dim_z - gd.dim_b;
    sum_z += gd.dim_z;
    sum_b += gd.dim_b;
    r.graded.emplace(i, gd);
  }
  if (sum_z != r.dim_z || sum_b != r.dim_b) {
    throw std::logic_error("graded_cohomology: graded dimensions do not sum to the totals");
  }
  return r;
}

GradedCocycles graded_cocycles(const AlgebraStructure& a, const Grading& g, unsigned n, int degree) {
  if (!check_grading(a, g)) throw std::invalid_argument("graded_cocycles: not a grading of the algebra");
  const CochainGrading cg = adjoint_grading(g);
  auto d = coboundary_matrix(a, adjoint_bimodule(a), n);
  GradedCocycles z;
  z.n = n;
  z.degree = degree;
  z.columns = graded_columns(cg, n, degree);
  z.cocycles = kernel_basis(graded_submatrix(d, cg, n, degree));
  return z;
}

std::vector<Index> block_positions(const GradedCocycles& z, const Grading& g, std::span<const std::string> blocks) {
  const CochainGrading cg = adjoint_grading(g);
  auto all = graded_blocks(cg, z.n, z.degree);
  std::set<Index> wanted;
  for (const auto& name : blocks) {
    std::optional<int> target;
    std::vector<int> args = parse_block_tags(name, target);
    if (args.size() != z.n) throw std::invalid_argument("block '" + name + "' has the wrong number of arguments");
    int implied = z.degree;
    for (int d : args) implied += d;
    if (target && *target != implied) {
      throw std::invalid_argument("block '" + name + "' does not occur in degree " + std::to_string(z.degree));
    }
    auto it = std::find_if(all.begin(), all.end(), [&](const GradedBlock& b) {
      return b.argument_degrees == args && b.target_degree == implied;
    });
    if (it == all.end()) {
      throw std::invalid_argument("block '" + name + "' has no coordinates in degree " + std::to_string(z.degree));
    }
    wanted.insert(it->coords.begin(), it->coords.end());
  }
  std::vector<Index> positions;
  for (std::size_t k = 0; k < z.columns.size(); ++k) {
    if (wanted.count(z.columns[k])) positions.push_back(static_cast<Index>(k));
  }
  return positions;
}

BlockAnalysis block_analysis(const GradedCocycles& z, const Grading& g, std::span<const std::string> blocks) {
  std::vector<Index> pos = block_positions(z, g, blocks);
  BlockAnalysis b;
  b.degree = z.degree;
  const CochainGrading cg = adjoint_grading(g);
  for (const auto& name : blocks) {
    std::optional<int> target;
    auto args = parse_block_tags(name, target);
    GradedBlock gb;
    gb.n = z.n;
    gb.argument_degrees = args;
    gb.target_degree = z.degree;
    for (int d : args) gb.target_degree += d;
    b.blocks.push_back(gb.signature());
  }
  b.cocycle_dim = z.cocycles.dim();
  b.projection_dim = project(z.cocycles, pos).dim();
  b.supported_dim = restrict_to_coords(z.cocycles, pos).dim();
  b.projection_injective = b.projection_dim == b.cocycle_dim;
  return b;
}

BlockAnalysis block_analysis(const AlgebraStructure& a, const Grading& g, int degree,
                             std::span<const std::string> blocks) {
  return block_analysis(graded_cocycles(a, g, 2, degree), g, blocks);
}

LieCoboundaryCheck gg_block_is_lie_coboundary(const AlgebraStructure& a, const Grading& g) {
  GradedCocycles z = graded_cocycles(a, g, 2, 0);
  const std::string gg = "GxG->G";
  std::vector<Index> pos = block_positions(z, g, std::span<const std::string>(&gg, 1));
  Subspace proj = project(z.cocycles, pos);

  const std::size_t n = a.dim();
  std::vector<Index> gens;
  for (Index i = 0; i < n; ++i) {
    if (g.degrees[i] == 0) gens.push_back(i);
  }
  // Block coordinate of (x, y; k), x, y, k in G.
  std::map<std::tuple<Index, Index, Index>, Index> coord;
  const CochainIndex idx(n, n, 2);
  std::vector<Index> args(2);
  for (std::size_t p = 0; p < pos.size(); ++p) {
    Index k = idx.unflatten(z.columns[pos[p]], args);
    coord[{args[0], args[1], k}] = static_cast<Index>(p);
  }

  LieCoboundaryCheck out;
  out.projection_dim = proj.dim();
  out.skew_symmetric = true;
  for (const auto& v : proj.basis()) {
    std::map<Index, Rational> dense(v.begin(), v.end());
    auto val = [&](Index x, Index y, Index k) {
      auto it = dense.find(coord.at({x, y, k}));
      return it == dense.end() ? Rational() : it->second;
    };
    for (Index x : gens) {
      for (Index y : gens) {
        for (Index k : gens) {
          if (val(x, y, k) != -val(y, x, k)) out.skew_symmetric = false;
        }
      }
    }
  }

  // (x, y) -> [t x, y] + [x, t y] - t[x, y] for t the elementary map p -> q.
  std::vector<SparseVector> cobounds;
  for (Index p : gens) {
    for (Index q : gens) {
      std::vector<std::pair<Index, Rational>> entries;
      for (Index x : gens) {
        for (Index y : gens) {
          if (x == p) {
            for (const auto& [k, c] : a.product(q, y)) entries.emplace_back(coord.at({x, y, k}), c);
          }
          if (y == p) {
            for (const auto& [k, c] : a.product(x, q)) entries.emplace_back(coord.at({x, y, k}), c);
          }
          Rational tp = value_at(a.product(x, y), p);
          if (!tp.is_zero()) entries.emplace_back(coord.at({x, y, q}), -tp);
        }
      }
      cobounds.push_back(canonicalize(std::move(entries)));
    }
  }
  Subspace lie_b2 = Subspace::span(pos.size(), cobounds);
  out.coboundary_dim = lie_b2.dim();
  out.equals_coboundaries = subspace_equal(proj, lie_b2);
  return out;
}

SparseRationalMatrix ce_coboundary_matrix(const AlgebraStructure& lie, const Bimodule& m, unsigned n) {
  if (m.algebra_dim != lie.dim()) throw std::invalid_argument("ce_coboundary_matrix: module over a different algebra");
  const std::size_t dim = lie.dim();
  const std::size_t md = m.module_dim;
  auto src_tuples = combinations(dim, n);
  auto dst_tuples = combinations(dim, n + 1);
  std::map<std::vector<Index>, std::size_t> src_pos;
  for (std::size_t k = 0; k < src_tuples.size(); ++k) src_pos[src_tuples[k]] = k;

  std::vector<std::vector<SparseVector>> right_cols(dim);
  for (Index x = 0; x < dim; ++x) {
    auto t = m.right_action[x].transpose();
    for (std::size_t k = 0; k < md; ++k) right_cols[x].push_back(t.row(k));
  }

  std::vector<std::tuple<Index, Index, Rational>> triplets;
  for (std::size_t row_t = 0; row_t < dst_tuples.size(); ++row_t) {
    const auto& y = dst_tuples[row_t];
    // sum_i (-1)^i y_i . w(.. ^y_i ..), with y_i . m = -[m, y_i]
    for (unsigned i = 0; i <= n; ++i) {
      std::vector<Index> rest;
      for (unsigned p = 0; p <= n; ++p) {
        if (p != i) rest.push_back(y[p]);
      }
      std::size_t c0 = src_pos.at(rest);
      const Rational sign(i % 2 == 0 ? -1 : 1);
      for (Index k = 0; k < md; ++k) {
        for (const auto& [r, v] : right_cols[y[i]][k]) {
          triplets.emplace_back(static_cast<Index>(row_t * md + r), static_cast<Index>(c0 * md + k), sign * v);
        }
      }
    }
    // sum_{i<j} (-1)^{i+j} w([y_i, y_j], .. ^y_i .. ^y_j ..)
    for (unsigned i = 0; i <= n; ++i) {
      for (unsigned j = i + 1; j <= n; ++j) {
        const Rational sign((i + j) % 2 == 0 ? 1 : -1);
        for (const auto& [s, c] : lie.product(y[i], y[j])) {
          std::vector<Index> t{s};
          for (unsigned p = 0; p <= n; ++p) {
            if (p != i && p != j) t.push_back(y[p]);
          }
          int perm = sort_with_sign(t);
          if (perm == 0) continue;
          std::size_t c0 = src_pos.at(t);
          for (Index r = 0; r < md; ++r) {
            triplets.emplace_back(static_cast<Index>(row_t * md + r), static_cast<Index>(c0 * md + r),
                                  sign * c * Rational(perm));
          }
        }
      }
    }
  }
  return SparseRationalMatrix::from_triplets(dst_tuples.size() * md, src_tuples.size() * md, triplets);
}

std::size_t lie_ce_h(const AlgebraStructure& lie, const Bimodule& m, unsigned n) {
  require_hl_degree(n, "lie_ce_h");
  require_lie(lie, "lie_ce_h");
  Bimodule right_only = m;
  right_only.left_action.assign(m.algebra_dim, SparseRationalMatrix(m.module_dim, m.module_dim));
  if (!check_bimodule_axioms(lie, right_only).empty()) {
    throw std::invalid_argument("lie_ce_h: coefficients are not a module over the Lie algebra");
  }
  auto dn = ce_coboundary_matrix(lie, m, n);
  std::size_t z = dn.cols() - rank(dn);
  std::size_t b = n == 0 ? 0 : rank(ce_coboundary_matrix(lie, m, n - 1));
  return z - b;
}

std::size_t leibniz_h_with_coefficients(const AlgebraStructure& lie, const Bimodule& m, unsigned n) {
  require_hl_degree(n, "leibniz_h_with_coefficients");
  require_lie(lie, "leibniz_h_with_coefficients");
  if (!check_bimodule_axioms(lie, m).empty()) {
    throw std::invalid_argument("leibniz_h_with_coefficients: bimodule axioms fail");
  }
  return hl_dim(lie, m, n);
}

}  // namespace leibniz
