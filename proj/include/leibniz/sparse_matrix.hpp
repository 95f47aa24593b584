#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

using Index = std::uint32_t;

/// Sparse vector: entries sorted by index, no stored zeros.
using SparseVector = std::vector<std::pair<Index, Rational>>;

/// Sorts by index, merges duplicate indices and drops zeros.
SparseVector canonicalize(std::vector<std::pair<Index, Rational>> entries);

/// a + factor * b
SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b);

Rational value_at(const SparseVector& v, Index index);

/// Row-compressed exact matrix. Immutable after construction.
class SparseRationalMatrix {
 public:
  SparseRationalMatrix() = default;
  SparseRationalMatrix(std::size_t rows, std::size_t cols);
  /// Rows must be canonical and every index < cols; throws otherwise.
  SparseRationalMatrix(std::size_t rows, std::size_t cols, std::vector<SparseVector> data);

  static SparseRationalMatrix identity(std::size_t n);
  /// Accepts (row, col, value) triplets; duplicates are summed.
  static SparseRationalMatrix from_triplets(std::size_t rows, std::size_t cols,
                                            const std::vector<std::tuple<Index, Index, Rational>>& triplets);
  static SparseRationalMatrix from_dense(const std::vector<std::vector<Rational>>& dense);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  const SparseVector& row(std::size_t r) const { return data_.at(r); }
  std::span<const SparseVector> row_data() const { return data_; }
  Rational at(std::size_t r, std::size_t c) const;

  SparseRationalMatrix transpose() const;
  /// Restricts to the given rows and columns, renumbered in the order given.
  SparseRationalMatrix select(std::span<const Index> row_set, std::span<const Index> col_set) const;
  /// Entries whose row lies outside row_set but whose column lies in col_set.
  std::size_t count_outside_rows(std::span<const Index> row_set, std::span<const Index> col_set) const;

  SparseVector apply(const SparseVector& x) const;

  friend SparseRationalMatrix operator*(const SparseRationalMatrix& a, const SparseRationalMatrix& b);
  friend bool operator==(const SparseRationalMatrix& a, const SparseRationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> data_;
};

}  // namespace leibniz
