#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/linalg.hpp"
#include "leibniz/sparse_matrix.hpp"

namespace leibniz {

/// Finite-dimensional algebra given by structure constants:
/// [b_i, b_j] = sum_k c_{ij}^k b_k.
class AlgebraStructure {
 public:
  struct Product {
    Index left;
    Index right;
    Index result;
    Rational coeff;
    friend bool operator==(const Product&, const Product&) = default;
  };

  AlgebraStructure() = default;
  /// Throws std::invalid_argument on out-of-range indices, zero coefficients
  /// or duplicate (left, right, result) records.
  AlgebraStructure(std::vector<std::string> labels, const std::vector<Product>& products);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Index> index_of(const std::string& label) const;

  /// Coefficients of [b_i, b_j].
  const SparseVector& product(Index i, Index j) const { return table_.at(i * dim() + j); }
  /// Bilinear extension to arbitrary vectors.
  SparseVector multiply(const SparseVector& x, const SparseVector& y) const;
  /// All nonzero structure constants, sorted by (left, right, result).
  std::vector<Product> products() const;
  /// Pairs (i, j) with [b_i, b_j] != 0, in lexicographic order.
  const std::vector<std::pair<Index, Index>>& nonzero_pairs() const { return nonzero_pairs_; }

  friend bool operator==(const AlgebraStructure& a, const AlgebraStructure& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<SparseVector> table_;
  std::vector<std::pair<Index, Index>> nonzero_pairs_;
};

/// Degree of each basis vector; the algebra is Z-graded when
/// [L_i, L_j] lies in L_{i+j}.
struct Grading {
  std::vector<int> degrees;
  friend bool operator==(const Grading&, const Grading&) = default;
};

/// Left and right actions of an algebra on a coefficient space. Column k of
/// left_action[x] holds the coordinates of [b_x, m_k]; column k of
/// right_action[x] those of [m_k, b_x].
struct Bimodule {
  std::size_t algebra_dim = 0;
  std::size_t module_dim = 0;
  std::vector<SparseRationalMatrix> left_action;
  std::vector<SparseRationalMatrix> right_action;

  /// Zero actions on a module of the given dimension.
  static Bimodule zero(std::size_t algebra_dim, std::size_t module_dim);
  /// Validates sizes; throws std::invalid_argument.
  void validate() const;
};

/// A basis triple where an identity fails. For module axioms `axiom` is 1..3
/// and the triple is (x, y, m); for the Leibniz identity `axiom` is 0.
struct IdentityViolation {
  int axiom = 0;
  std::array<Index, 3> triple{};
  SparseVector defect;
};

std::vector<IdentityViolation> leibniz_defects(const AlgebraStructure& a);

/// Span of the polarized squares [b_i,b_j] + [b_j,b_i].
Subspace squares_ideal(const AlgebraStructure& a);

/// True iff s is closed under left and right multiplication by a.
bool is_two_sided_ideal(const AlgebraStructure& a, const Subspace& s);

/// Dimensions of L^[1] = L, L^[k+1] = [L^[k], L^[k]], stopping after
/// max_steps terms or once the series stabilizes.
std::vector<std::size_t> derived_series(const AlgebraStructure& a, std::size_t max_steps);
/// Same, starting from the subalgebra s.
std::vector<std::size_t> derived_series(const AlgebraStructure& a, const Subspace& s, std::size_t max_steps);
bool is_solvable(const AlgebraStructure& a);
bool is_solvable(const AlgebraStructure& a, const Subspace& s);

bool check_grading(const AlgebraStructure& a, const Grading& g);

/// Checks the three bimodule axioms on all basis triples. Throws
/// std::invalid_argument on a dimension mismatch.
std::vector<IdentityViolation> check_bimodule_axioms(const AlgebraStructure& a, const Bimodule& m);

Bimodule adjoint_bimodule(const AlgebraStructure& a);

/// The bimodule with the same right action and left action [x, m] = -[m, x]:
/// how a module over a Lie algebra is usually regarded as a Leibniz
/// representation. The right action of `m` must already be a right module.
Bimodule symmetric_bimodule(const Bimodule& m);

/// True iff [b_i,b_i] = 0 and [b_i,b_j] = -[b_j,b_i] for all basis pairs.
bool is_antisymmetric(const AlgebraStructure& a);

}  // namespace leibniz
