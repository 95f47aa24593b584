#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "leibniz/sparse_matrix.hpp"

namespace leibniz {

/// A linear subspace of Q^n held in reduced row echelon form: every basis
/// vector has leading coefficient 1, the leading indices are strictly
/// increasing, and every other basis vector vanishes at each leading index.
/// Two subspaces are equal iff their canonical bases are equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  /// Canonical span of arbitrary (possibly dependent) vectors.
  static Subspace span(std::size_t ambient_dim, std::span<const SparseVector> vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseVector>& basis() const { return basis_; }
  std::vector<Index> pivots() const;

  bool contains(const SparseVector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<SparseVector> basis_;

  friend Subspace kernel_basis(const SparseRationalMatrix& m);
};

/// Exact rank over Q (sparse fraction-free elimination).
std::size_t rank(const SparseRationalMatrix& m);

/// Null space {v : m v = 0} as a subspace of Q^cols.
Subspace kernel_basis(const SparseRationalMatrix& m);

/// Image of s under the coordinate projection onto `coords` (ambient |coords|,
/// coordinates renumbered in the order given).
Subspace project(const Subspace& s, std::span<const Index> coords);

/// Vectors of s vanishing outside `coords`, in the original ambient space.
Subspace restrict_to_coords(const Subspace& s, std::span<const Index> coords);

/// Embeds s into a larger space: coordinate k of s goes to positions[k].
Subspace embed(const Subspace& s, std::size_t ambient_dim, std::span<const Index> positions);

bool subspace_equal(const Subspace& a, const Subspace& b);
std::size_t subspace_sum_dim(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// Rank modulo each prime; the maximum is a lower bound for the rational
/// rank and equals it unless every prime divides some critical minor.
std::size_t modular_rank(const SparseRationalMatrix& m, std::span<const std::uint64_t> primes);
std::size_t modular_rank_single(const SparseRationalMatrix& m, std::uint64_t prime);

/// Word-size primes used by default for the modular fast path.
std::span<const std::uint64_t> default_primes();

}  // namespace leibniz
