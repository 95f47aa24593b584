#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/linalg.hpp"

namespace leibniz {

// Linear operators on L are n x n matrices whose column i holds the image of
// b_i. As a cochain in CL^1(L, L) the same operator sits at coordinates
// i * n + k (coefficient of b_k in d(b_i)).

SparseVector operator_to_cochain(const SparseRationalMatrix& op);
SparseRationalMatrix cochain_to_operator(const SparseVector& v, std::size_t n);

/// All d with d([x,y]) = [d(x), y] + [x, d(y)], as a subspace of the
/// n^2-dimensional cochain space.
Subspace derivation_space(const AlgebraStructure& a);

/// Matrix of z -> [z, x].
SparseRationalMatrix right_mult_operator(const AlgebraStructure& a, const SparseVector& x);

/// Identity on the degree-1 basis vectors, zero on the rest.
SparseRationalMatrix projection_onto_i(const Grading& g);

/// d = R_a + lambda * P_I + delta + residual, delta mapping G into I.
struct DerivationDecomposition {
  std::vector<Rational> a;  // coefficients over the degree-0 basis vectors, in index order
  Rational lambda;
  SparseRationalMatrix delta;
  SparseRationalMatrix residual;
  bool ok() const { return residual.is_zero(); }
};

/// Thrown when R_g (g in G) and P_I are linearly dependent off the G -> I
/// block, so that the decomposition would not be unique.
class DecompositionDependency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solves d = R_a + lambda P_I + delta jointly. The grading must take values
/// in {0, 1}; G is its degree-0 part and I its degree-1 part. With I = 0 the
/// P_I term is dropped and lambda stays 0. Throws
/// std::invalid_argument for a bad grading or operator shape.
DerivationDecomposition decompose_derivation(const AlgebraStructure& a, const Grading& g,
                                             const SparseRationalMatrix& d);

struct DerivationReport {
  Subspace space;
  std::vector<DerivationDecomposition> decompositions;  // one per canonical basis vector
  bool all_residuals_zero = false;
  bool equals_ker_d1 = false;
  bool right_mults_are_derivations = false;
  std::size_t g_dim = 0;
  std::size_t i_dim = 0;
  /// Dimension of the span of the delta parts.
  std::size_t delta_rank = 0;
  /// Spanning delta when delta_rank == 1, scaled so that the first nonzero
  /// coordinate of delta(b_g) is 1 for the first g in G it does not kill.
  std::optional<SparseRationalMatrix> delta_generator;
  /// delta vanishes whenever dim G != dim I.
  bool delta_consistent() const { return g_dim == i_dim || delta_rank == 0; }
};

DerivationReport analyze_derivations(const AlgebraStructure& a, const Grading& g);

/// Nonzero images in basis labels, e.g. "e -> x0, f -> 1/2 x2"; "0" for
/// the zero operator.
std::string describe_operator(const AlgebraStructure& a, const SparseRationalMatrix& op);

/// Linear combination in basis labels, e.g. "2 e - 1/2 x1"; "0" if empty.
std::string describe_vector(const AlgebraStructure& a, const SparseVector& v);

}  // namespace leibniz
