#include "leibniz/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace leibniz {

namespace {

// Scales a rational row to a primitive integer row (content 1).
void make_primitive(SparseVector& row) {
  if (row.empty()) return;
  mpz_class lcm = 1;
  bool integral = true;
  for (const auto& e : row) {
    if (!e.second.is_integer()) {
      integral = false;
      mpz_class d = e.second.denominator();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
  }
  if (!integral) {
    Rational scale{mpq_class(lcm)};
    for (auto& e : row) e.second *= scale;
  }
  Rational content = row.front().second;
  for (std::size_t k = 1; k < row.size() && !content.is_one(); ++k) {
    content = gcd_integer(content, row[k].second);
  }
  if (content.sign() < 0) content = -content;
  if (!content.is_one()) {
    for (auto& e : row) e.second = div_exact_integer(e.second, content);
  }
}

// alpha * a + beta * b, merged.
SparseVector combine(const Rational& alpha, const SparseVector& a, const Rational& beta, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.emplace_back(ia->first, alpha * ia->second);
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, beta * ib->second);
      ++ib;
    } else {
      Rational v = alpha * ia->second + beta * ib->second;
      if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

// Fraction-free sparse row echelon form. The pivot of a row is its lowest
// index (Leading::front) or its highest index (Leading::back). Stored rows are
// primitive integer vectors with a positive pivot entry.
enum class Leading { front, back };

class Echelon {
 public:
  Echelon(std::size_t cols, Leading leading) : leading_(leading), pivot_row_(cols, -1) {}

  bool insert(SparseVector row) {
    make_primitive(row);
    while (!row.empty()) {
      const auto& lead = lead_of(row);
      std::int64_t p = pivot_row_[lead.first];
      if (p < 0) {
        if (lead.second.sign() < 0) {
          for (auto& e : row) e.second = -e.second;
        }
        pivot_row_[lead_of(row).first] = static_cast<std::int64_t>(rows_.size());
        rows_.push_back(std::move(row));
        return true;
      }
      const SparseVector& prow = rows_[static_cast<std::size_t>(p)];
      const Rational& a = lead_of(prow).second;
      const Rational& b = lead.second;
      Rational g = gcd_integer(a, b);
      Rational alpha = div_exact_integer(a, g);
      Rational beta = -div_exact_integer(b, g);
      row = combine(alpha, row, beta, prow);
      make_primitive(row);
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }

  // Back-substitution to reduced form; rows become rational with pivot 1.
  // Returns rows sorted by pivot index.
  std::vector<SparseVector> reduced_rows() {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return lead_of(rows_[x]).first < lead_of(rows_[y]).first;
    });
    // Rows whose non-pivot entries point away from the other pivots are
    // reduced first: highest pivot first for front-leading rows.
    if (leading_ == Leading::front) std::reverse(order.begin(), order.end());

    for (auto& r : rows_) {
      Rational inv = Rational(1) / lead_of(r).second;
      for (auto& e : r) e.second *= inv;
    }

    std::size_t cols = pivot_row_.size();
    std::vector<Rational> dense(cols);
    std::vector<char> touched(cols, 0);
    std::vector<Index> touched_list;
    for (std::size_t idx : order) {
      SparseVector& r = rows_[idx];
      Index own = lead_of(r).first;
      bool needs_work = false;
      for (const auto& e : r) {
        if (e.first != own && pivot_row_[e.first] >= 0) {
          needs_work = true;
          break;
        }
      }
      if (!needs_work) continue;
      touched_list.clear();
      auto touch = [&](Index i) {
        if (!touched[i]) {
          touched[i] = 1;
          touched_list.push_back(i);
        }
      };
      std::vector<Index> targets;
      for (const auto& [i, v] : r) {
        touch(i);
        dense[i] = v;
        if (i != own && pivot_row_[i] >= 0) targets.push_back(i);
      }
      for (Index c : targets) {
        Rational factor = dense[c];
        if (factor.is_zero()) continue;
        const SparseVector& prow = rows_[static_cast<std::size_t>(pivot_row_[c])];
        for (const auto& [i, v] : prow) {
          touch(i);
          dense[i] -= factor * v;
        }
      }
      std::sort(touched_list.begin(), touched_list.end());
      SparseVector out;
      for (Index i : touched_list) {
        if (!dense[i].is_zero()) out.emplace_back(i, std::move(dense[i]));
        dense[i] = Rational();
        touched[i] = 0;
      }
      r = std::move(out);
    }

    std::vector<SparseVector> result;
    result.reserve(rows_.size());
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return lead_of(rows_[x]).first < lead_of(rows_[y]).first;
    });
    for (std::size_t idx : order) result.push_back(std::move(rows_[idx]));
    rows_.clear();
    std::fill(pivot_row_.begin(), pivot_row_.end(), -1);
    return result;
  }

 private:
  const std::pair<Index, Rational>& lead_of(const SparseVector& r) const {
    return leading_ == Leading::front ? r.front() : r.back();
  }

  Leading leading_;
  std::vector<std::int64_t> pivot_row_;
  std::vector<SparseVector> rows_;
};

// Shorter rows first keeps fill-in low.
std::vector<std::size_t> row_order(std::span<const SparseVector> rows) {
  std::vector<std::size_t> order;
  order.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].empty()) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rows[a].size() < rows[b].size(); });
  return order;
}

void check_coords(std::span<const Index> coords, std::size_t ambient) {
  for (Index c : coords) {
    if (c >= ambient) {
      throw std::out_of_range("coordinate " + std::to_string(c) + " outside ambient dimension " +
                              std::to_string(ambient));
    }
  }
}

}  // namespace

Subspace Subspace::span(std::size_t ambient_dim, std::span<const SparseVector> vectors) {
  Echelon ech(ambient_dim, Leading::front);
  for (std::size_t idx : row_order(vectors)) {
    if (!vectors[idx].empty() && vectors[idx].back().first >= ambient_dim) {
      throw std::out_of_range("Subspace::span: vector index outside ambient dimension");
    }
    ech.insert(vectors[idx]);
  }
  Subspace s(ambient_dim);
  s.basis_ = ech.reduced_rows();
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<SparseVector> unit(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) unit[i].emplace_back(static_cast<Index>(i), Rational(1));
  return span(ambient_dim, unit);
}

std::vector<Index> Subspace::pivots() const {
  std::vector<Index> p;
  p.reserve(basis_.size());
  for (const auto& v : basis_) p.push_back(v.front().first);
  return p;
}

bool Subspace::contains(const SparseVector& v) const {
  if (!v.empty() && v.back().first >= ambient_dim_) return false;
  SparseVector r = v;
  // Basis is reduced with increasing pivots; eliminate in pivot order.
  for (const auto& b : basis_) {
    Rational c = value_at(r, b.front().first);
    if (!c.is_zero()) r = axpy(r, -c, b);
  }
  return r.empty();
}

std::size_t rank(const SparseRationalMatrix& m) {
  Echelon ech(m.cols(), Leading::front);
  auto rows = m.row_data();
  for (std::size_t idx : row_order(rows)) ech.insert(rows[idx]);
  return ech.rank();
}

Subspace kernel_basis(const SparseRationalMatrix& m) {
  // Pivots at the highest index leave every kernel vector with its lowest
  // nonzero at its own free column, so the kernel basis comes out reduced.
  Echelon ech(m.cols(), Leading::back);
  auto rows = m.row_data();
  for (std::size_t idx : row_order(rows)) ech.insert(rows[idx]);
  std::vector<SparseVector> reduced = ech.reduced_rows();

  std::vector<char> is_pivot(m.cols(), 0);
  for (const auto& r : reduced) is_pivot[r.back().first] = 1;
  std::vector<std::vector<std::pair<Index, Rational>>> vecs(m.cols());
  for (const auto& r : reduced) {
    Index pivot = r.back().first;
    for (const auto& [j, v] : r) {
      if (j != pivot) vecs[j].emplace_back(pivot, -v);
    }
  }
  Subspace k(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    vecs[j].emplace_back(static_cast<Index>(j), Rational(1));
    k.basis_.push_back(canonicalize(std::move(vecs[j])));
  }
  return k;
}

Subspace project(const Subspace& s, std::span<const Index> coords) {
  check_coords(coords, s.ambient_dim());
  std::vector<std::int64_t> pos(s.ambient_dim(), -1);
  for (std::size_t k = 0; k < coords.size(); ++k) pos[coords[k]] = static_cast<std::int64_t>(k);
  std::vector<SparseVector> images;
  images.reserve(s.dim());
  for (const auto& v : s.basis()) {
    std::vector<std::pair<Index, Rational>> e;
    for (const auto& [i, x] : v) {
      if (pos[i] >= 0) e.emplace_back(static_cast<Index>(pos[i]), x);
    }
    images.push_back(canonicalize(std::move(e)));
  }
  return Subspace::span(coords.size(), images);
}

Subspace restrict_to_coords(const Subspace& s, std::span<const Index> coords) {
  check_coords(coords, s.ambient_dim());
  std::vector<char> inside(s.ambient_dim(), 0);
  for (Index c : coords) inside[c] = 1;
  // Coefficient vectors c with sum_i c_i b_i vanishing outside coords.
  std::vector<std::tuple<Index, Index, Rational>> triplets;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (const auto& [k, x] : s.basis()[i]) {
      if (!inside[k]) triplets.emplace_back(k, static_cast<Index>(i), x);
    }
  }
  auto constraint = SparseRationalMatrix::from_triplets(s.ambient_dim(), s.dim(), triplets);
  Subspace coeffs = kernel_basis(constraint);
  std::vector<SparseVector> vectors;
  for (const auto& c : coeffs.basis()) {
    SparseVector v;
    for (const auto& [i, x] : c) v = axpy(v, x, s.basis()[i]);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(s.ambient_dim(), vectors);
}

Subspace embed(const Subspace& s, std::size_t ambient_dim, std::span<const Index> positions) {
  if (positions.size() != s.ambient_dim()) throw std::invalid_argument("embed: position count mismatch");
  check_coords(positions, ambient_dim);
  std::vector<SparseVector> vectors;
  for (const auto& v : s.basis()) {
    std::vector<std::pair<Index, Rational>> e;
    for (const auto& [i, x] : v) e.emplace_back(positions[i], x);
    vectors.push_back(canonicalize(std::move(e)));
  }
  return Subspace::span(ambient_dim, vectors);
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspace_equal: ambient mismatch");
  return a == b;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspace_sum: ambient mismatch");
  std::vector<SparseVector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

std::size_t subspace_sum_dim(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspace_sum_dim: ambient mismatch");
  std::vector<SparseVector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  std::vector<std::tuple<Index, Index, Rational>> t;
  for (std::size_t r = 0; r < all.size(); ++r) {
    for (const auto& [c, v] : all[r]) t.emplace_back(static_cast<Index>(r), c, v);
  }
  return rank(SparseRationalMatrix::from_triplets(all.size(), a.ambient_dim(), t));
}

}  // namespace leibniz
