#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "leibniz/linalg.hpp"
#include "oracle.hpp"

using namespace leibniz;

namespace {

SparseRationalMatrix dense(std::vector<std::vector<Rational>> rows) { return SparseRationalMatrix::from_dense(rows); }

SparseVector vec(std::initializer_list<std::int64_t> xs) {
  std::vector<std::pair<Index, Rational>> e;
  Index k = 0;
  for (auto x : xs) e.emplace_back(k++, Rational(x));
  return canonicalize(std::move(e));
}

// Random sparse matrix with small integer, fractional or (rarely) huge entries.
SparseRationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density) {
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<std::tuple<Index, Index, Rational>> t;
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      if (u(rng) > density) continue;
      auto num = static_cast<std::int64_t>(rng() % 9) - 4;
      auto den = static_cast<std::int64_t>(rng() % 3) + 1;
      Rational v(num, den);
      if (rng() % 17 == 0) v = v * Rational(static_cast<std::int64_t>(1) << 40) * Rational(static_cast<std::int64_t>(1) << 40);
      t.emplace_back(r, c, v);
    }
  }
  return SparseRationalMatrix::from_triplets(rows, cols, t);
}

// Low-rank product, so kernels are large and dependent rows are common.
SparseRationalMatrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t r) {
  return random_matrix(rng, rows, r, 0.7) * random_matrix(rng, r, cols, 0.7);
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(rank(SparseRationalMatrix(5, 5)) == 0);
  CHECK(rank(SparseRationalMatrix::identity(3)) == 3);
  CHECK(rank(dense({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(SparseRationalMatrix(0, 4)) == 0);
}

TEST_CASE("kernel of small matrices") {
  CHECK(kernel_basis(SparseRationalMatrix::identity(4)).dim() == 0);
  Subspace z = kernel_basis(SparseRationalMatrix(2, 7));
  CHECK(z.dim() == 7);
  CHECK(z == Subspace::full(7));
  auto row = dense({{1, 1, 0}});
  Subspace k = kernel_basis(row);
  REQUIRE(k.dim() == 2);
  CHECK(k.ambient_dim() == 3);
  for (const auto& v : k.basis()) CHECK(row.apply(v).empty());
  CHECK(k == Subspace::span(3, std::vector<SparseVector>{vec({1, -1, 0}), vec({0, 0, 1})}));
}

TEST_CASE("projection and restriction to coordinates") {
  Subspace plane = Subspace::span(2, std::vector<SparseVector>{vec({1, 0}), vec({0, 1})});
  const Index c0[] = {0};
  CHECK(project(plane, c0).dim() == 1);
  Subspace line = Subspace::span(3, std::vector<SparseVector>{vec({1, 1, 0})});
  const Index c2[] = {2};
  CHECK(project(line, c2).dim() == 0);

  Subspace diag = Subspace::span(2, std::vector<SparseVector>{vec({1, 1})});
  CHECK(restrict_to_coords(diag, c0).dim() == 0);
  const Index c02[] = {0, 2};
  Subspace r = restrict_to_coords(Subspace::full(3), c02);
  CHECK(r.dim() == 2);
  CHECK(r.ambient_dim() == 3);

  const Index bad[] = {3};
  CHECK_THROWS_AS(project(line, bad), std::out_of_range);
  CHECK_THROWS_AS(restrict_to_coords(line, bad), std::out_of_range);
}

TEST_CASE("subspace equality and sums") {
  Subspace x = Subspace::span(2, std::vector<SparseVector>{vec({1, 0})});
  Subspace y = Subspace::span(2, std::vector<SparseVector>{vec({0, 1})});
  CHECK(subspace_equal(x, x));
  CHECK(subspace_sum_dim(x, x) == 1);
  CHECK_FALSE(subspace_equal(x, y));
  CHECK(subspace_sum_dim(x, y) == 2);
  CHECK(subspace_sum(x, y) == Subspace::full(2));
  // Different spanning sets give the same canonical basis.
  Subspace a = Subspace::span(3, std::vector<SparseVector>{vec({1, 2, 3}), vec({2, 4, 7})});
  Subspace b = Subspace::span(3, std::vector<SparseVector>{vec({0, 0, 5}), vec({-3, -6, 0})});
  CHECK(subspace_equal(a, b));
  CHECK_THROWS_AS(subspace_equal(x, Subspace::full(3)), std::invalid_argument);
}

TEST_CASE("embedding places coordinates") {
  Subspace s = Subspace::span(2, std::vector<SparseVector>{vec({1, 2})});
  const Index pos[] = {3, 1};
  Subspace e = embed(s, 5, pos);
  REQUIRE(e.dim() == 1);
  CHECK(e.basis()[0] == canonicalize({{1, Rational(1)}, {3, Rational(1, 2)}}));
}

TEST_CASE("random matrices agree with the dense oracle") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t rows = 1 + rng() % 12;
    const std::size_t cols = 1 + rng() % 12;
    SparseRationalMatrix m = iter % 2 ? random_matrix(rng, rows, cols, 0.35)
                                      : random_low_rank(rng, rows, cols, 1 + rng() % 4);
    CAPTURE(iter);
    oracle::Dense d = oracle::to_dense(m);
    const std::size_t r = rank(m);
    CHECK(r == oracle::rank(d, cols));

    Subspace k = kernel_basis(m);
    CHECK(r + k.dim() == cols);
    for (const auto& v : k.basis()) CHECK(m.apply(v).empty());
    CHECK(oracle::basis_of(k) == oracle::kernel(d, cols));

    // The row space in canonical form is the oracle's RREF.
    std::vector<SparseVector> rowvecs(m.row_data().begin(), m.row_data().end());
    CHECK(oracle::basis_of(Subspace::span(cols, rowvecs)) == oracle::rref(d, cols));

    // Transposition preserves rank; the modular path is a lower bound that
    // matches here.
    CHECK(rank(m.transpose()) == r);
    CHECK(modular_rank(m, default_primes()) == r);

    std::vector<Index> coords;
    for (Index c = 0; c < cols; ++c) {
      if (rng() % 2) coords.push_back(c);
    }
    const std::size_t pd = project(k, coords).dim();
    const Subspace supported = restrict_to_coords(k, coords);
    CHECK(supported.dim() <= pd);
    CHECK(pd <= k.dim());
    for (const auto& v : supported.basis()) {
      for (const auto& [c, x] : v) CHECK(std::binary_search(coords.begin(), coords.end(), c));
      CHECK(k.contains(v));
    }
  }
}

TEST_CASE("subspace sum dimension matches the stacked oracle rank") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 2 + rng() % 9;
    Subspace a = kernel_basis(random_low_rank(rng, 1 + rng() % 6, n, 1 + rng() % 3));
    Subspace b = kernel_basis(random_low_rank(rng, 1 + rng() % 6, n, 1 + rng() % 3));
    oracle::Dense stacked = oracle::basis_of(a);
    for (auto& row : oracle::basis_of(b)) stacked.push_back(row);
    CHECK(subspace_sum_dim(a, b) == oracle::rank(stacked, n));
    CHECK(subspace_equal(subspace_sum(a, b), subspace_sum(b, a)));
  }
}

TEST_CASE("modular rank edge cases") {
  auto m = dense({{Rational(1, 3), 1}, {0, 1}});
  CHECK(modular_rank_single(m, 3) == 0);
  CHECK(modular_rank_single(m, 5) == 2);
  CHECK(modular_rank(m, default_primes()) == 2);
  // rank over F_2 is smaller than over Q
  auto two = dense({{2, 0}, {0, 1}});
  CHECK(modular_rank_single(two, 2) == 1);
  CHECK(rank(two) == 2);
}
