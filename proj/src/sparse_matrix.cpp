#include "leibniz/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace leibniz {

SparseVector canonicalize(std::vector<std::pair<Index, Rational>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  out.reserve(entries.size());
  for (auto& [idx, val] : entries) {
    if (!out.empty() && out.back().first == idx) {
      out.back().second += val;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!val.is_zero()) {
      out.emplace_back(idx, std::move(val));
    }
  }
  return out;
}

SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, factor * ib->second);
      ++ib;
    } else {
      Rational v = ia->second + factor * ib->second;
      if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

Rational value_at(const SparseVector& v, Index index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const auto& e, Index i) { return e.first < i; });
  return (it != v.end() && it->first == index) ? it->second : Rational();
}

SparseRationalMatrix::SparseRationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

SparseRationalMatrix::SparseRationalMatrix(std::size_t rows, std::size_t cols,
                                           std::vector<SparseVector> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_) throw std::invalid_argument("SparseRationalMatrix: row count mismatch");
  for (const auto& r : data_) {
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k].first >= cols_) throw std::out_of_range("SparseRationalMatrix: column index out of range");
      if (r[k].second.is_zero()) throw std::invalid_argument("SparseRationalMatrix: stored zero");
      if (k > 0 && r[k - 1].first >= r[k].first) {
        throw std::invalid_argument("SparseRationalMatrix: row not sorted");
      }
    }
  }
}

SparseRationalMatrix SparseRationalMatrix::identity(std::size_t n) {
  std::vector<SparseVector> data(n);
  for (std::size_t i = 0; i < n; ++i) data[i].emplace_back(static_cast<Index>(i), Rational(1));
  return {n, n, std::move(data)};
}

SparseRationalMatrix SparseRationalMatrix::from_triplets(
    std::size_t rows, std::size_t cols, const std::vector<std::tuple<Index, Index, Rational>>& triplets) {
  std::vector<std::vector<std::pair<Index, Rational>>> buckets(rows);
  for (const auto& [r, c, v] : triplets) {
    if (r >= rows || c >= cols) throw std::out_of_range("from_triplets: index out of range");
    buckets[r].emplace_back(c, v);
  }
  std::vector<SparseVector> data(rows);
  for (std::size_t r = 0; r < rows; ++r) data[r] = canonicalize(std::move(buckets[r]));
  return {rows, cols, std::move(data)};
}

SparseRationalMatrix SparseRationalMatrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
  std::size_t cols = dense.empty() ? 0 : dense.front().size();
  std::vector<SparseVector> data(dense.size());
  for (std::size_t r = 0; r < dense.size(); ++r) {
    if (dense[r].size() != cols) throw std::invalid_argument("from_dense: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!dense[r][c].is_zero()) data[r].emplace_back(static_cast<Index>(c), dense[r][c]);
    }
  }
  return {dense.size(), cols, std::move(data)};
}

std::size_t SparseRationalMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Rational SparseRationalMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseRationalMatrix::at");
  return value_at(data_[r], static_cast<Index>(c));
}

SparseRationalMatrix SparseRationalMatrix::transpose() const {
  std::vector<SparseVector> data(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) data[c].emplace_back(static_cast<Index>(r), v);
  }
  return {cols_, rows_, std::move(data)};
}

SparseRationalMatrix SparseRationalMatrix::select(std::span<const Index> row_set,
                                                  std::span<const Index> col_set) const {
  std::vector<std::int64_t> col_pos(cols_, -1);
  for (std::size_t k = 0; k < col_set.size(); ++k) {
    if (col_set[k] >= cols_) throw std::out_of_range("select: column out of range");
    col_pos[col_set[k]] = static_cast<std::int64_t>(k);
  }
  std::vector<SparseVector> data(row_set.size());
  for (std::size_t k = 0; k < row_set.size(); ++k) {
    if (row_set[k] >= rows_) throw std::out_of_range("select: row out of range");
    std::vector<std::pair<Index, Rational>> entries;
    for (const auto& [c, v] : data_[row_set[k]]) {
      if (col_pos[c] >= 0) entries.emplace_back(static_cast<Index>(col_pos[c]), v);
    }
    data[k] = canonicalize(std::move(entries));
  }
  return {row_set.size(), col_set.size(), std::move(data)};
}

std::size_t SparseRationalMatrix::count_outside_rows(std::span<const Index> row_set,
                                                     std::span<const Index> col_set) const {
  std::vector<char> in_rows(rows_, 0);
  std::vector<char> in_cols(cols_, 0);
  for (Index r : row_set) in_rows.at(r) = 1;
  for (Index c : col_set) in_cols.at(c) = 1;
  std::size_t count = 0;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (in_rows[r]) continue;
    for (const auto& e : data_[r]) count += in_cols[e.first];
  }
  return count;
}

SparseVector SparseRationalMatrix::apply(const SparseVector& x) const {
  std::vector<Rational> dense(cols_);
  for (const auto& [i, v] : x) {
    if (i >= cols_) throw std::out_of_range("apply: index out of range");
    dense[i] = v;
  }
  SparseVector out;
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc;
    for (const auto& [c, v] : data_[r]) {
      if (!dense[c].is_zero()) acc += v * dense[c];
    }
    if (!acc.is_zero()) out.emplace_back(static_cast<Index>(r), std::move(acc));
  }
  return out;
}

SparseRationalMatrix operator*(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("matrix product: inner dimensions " + std::to_string(a.cols_) +
                                " and " + std::to_string(b.rows_) + " differ");
  }
  std::vector<SparseVector> data(a.rows_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::vector<std::pair<Index, Rational>> acc;
    for (const auto& [k, v] : a.data_[r]) {
      for (const auto& [c, w] : b.data_[k]) acc.emplace_back(c, v * w);
    }
    data[r] = canonicalize(std::move(acc));
  }
  return {a.rows_, b.cols_, std::move(data)};
}

}  // namespace leibniz
