#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/sparse_matrix.hpp"

namespace leibniz {

/// Enumerates the basis of CL^n(L, M) = Hom(L^{(x)n}, M): the cochain sending
/// (b_{i_1}, ..., b_{i_n}) to m_k and every other basis tuple to 0 sits at
/// flat index ((i_1 * N + i_2) * N + ... + i_n) * dim M + k, i.e. tuples are
/// ordered lexicographically in (i_1, ..., i_n, k).
class CochainIndex {
 public:
  CochainIndex(std::size_t algebra_dim, std::size_t module_dim, unsigned n);

  unsigned degree() const { return n_; }
  std::size_t algebra_dim() const { return algebra_dim_; }
  std::size_t module_dim() const { return module_dim_; }
  std::size_t size() const { return size_; }

  std::size_t flat(std::span<const Index> args, Index target) const;
  /// Writes the n arguments into args and returns the target index.
  Index unflatten(std::size_t flat, std::span<Index> args) const;

 private:
  std::size_t algebra_dim_;
  std::size_t module_dim_;
  unsigned n_;
  std::size_t size_;
};

/// Highest cochain degree for which coboundary matrices are assembled.
inline constexpr unsigned kMaxCoboundaryDegree = 3;

/// Matrix of d^n : CL^n(L,M) -> CL^{n+1}(L,M) in CochainIndex order,
///   (d^n f)(x_1..x_{n+1}) = [x_1, f(x_2..x_{n+1})]
///                         + sum_{i=2}^{n+1} (-1)^i [f(x_1..^x_i..x_{n+1}), x_i]
///                         + sum_{i<j} (-1)^{j+1} f(x_1..x_{i-1},[x_i,x_j],x_{i+1}..^x_j..x_{n+1}).
/// Throws std::invalid_argument for n > 3 or a module over another algebra.
SparseRationalMatrix coboundary_matrix(const AlgebraStructure& a, const Bimodule& m, unsigned n);

/// Degrees of the algebra basis and of the coefficient basis. A cochain
/// basis element (i_1..i_n; k) has degree deg(m_k) - sum deg(b_{i_j}).
struct CochainGrading {
  std::vector<int> algebra;
  std::vector<int> module;
};

/// Grading of CL^n(L, L) induced by a grading of L.
CochainGrading adjoint_grading(const Grading& g);

int cochain_degree(const CochainGrading& cg, std::span<const Index> args, Index target);

/// Column indices of CL^n_(i), in increasing order.
std::vector<Index> graded_columns(const CochainGrading& cg, unsigned n, int degree);

/// Degrees i with CL^n_(i) nonzero, increasing.
std::vector<int> achievable_degrees(const CochainGrading& cg, unsigned n);

/// The part of CL^n_(i) whose arguments and target lie in fixed homogeneous
/// components. Degree 0 components are tagged G, degree 1 components I.
struct GradedBlock {
  unsigned n = 0;
  int degree = 0;
  std::vector<int> argument_degrees;
  int target_degree = 0;
  std::vector<Index> coords;  // flat CochainIndex positions, increasing

  /// e.g. "GxI->I".
  std::string signature() const;
};

std::string component_tag(int degree);

/// Blocks of CL^n_(i), ordered by signature; together they partition
/// graded_columns(cg, n, i).
std::vector<GradedBlock> graded_blocks(const CochainGrading& cg, unsigned n, int degree);

/// Raised when a coboundary matrix does not preserve the declared grading.
class GradingViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Restriction of d = d^n to columns CL^n_(i) and rows CL^{n+1}_(i). Throws
/// GradingViolation if some column of degree i reaches a row of another degree.
SparseRationalMatrix graded_submatrix(const SparseRationalMatrix& d, const CochainGrading& cg, unsigned n,
                                      int degree);

}  // namespace leibniz
