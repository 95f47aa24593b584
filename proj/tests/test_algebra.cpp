#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "leibniz/algebra.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/derivations.hpp"

using namespace leibniz;
using Product = AlgebraStructure::Product;

namespace {

constexpr Index E = 0, F = 1, H = 2;
constexpr Index x(Index k) { return 3 + k; }

AlgebraStructure abelian(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back("a" + std::to_string(k));
  return AlgebraStructure(labels, {});
}

// L_m with one structure constant replaced.
AlgebraStructure with_product(const AlgebraStructure& a, Index i, Index j, Index k, Rational c) {
  std::vector<Product> ps;
  for (const auto& p : a.products()) {
    if (p.left == i && p.right == j && p.result == k) continue;
    ps.push_back(p);
  }
  ps.push_back({i, j, k, c});
  return AlgebraStructure(a.labels(), ps);
}

// Same algebra with the basis reordered: new index perm[i] for old index i.
AlgebraStructure permuted(const AlgebraStructure& a, const std::vector<Index>& perm) {
  std::vector<std::string> labels(a.dim());
  for (Index i = 0; i < a.dim(); ++i) labels[perm[i]] = a.labels()[i];
  std::vector<Product> ps;
  for (const auto& p : a.products()) ps.push_back({perm[p.left], perm[p.right], perm[p.result], p.coeff});
  return AlgebraStructure(labels, ps);
}

}  // namespace

TEST_CASE("structure constants are validated") {
  CHECK_THROWS_AS(AlgebraStructure({"a"}, {{0, 1, 0, Rational(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraStructure({"a"}, {{0, 0, 0, Rational(0)}}), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraStructure({"a"}, {{0, 0, 0, Rational(1)}, {0, 0, 0, Rational(2)}}), std::invalid_argument);
  AlgebraStructure a({"a", "b"}, {{0, 1, 1, Rational(3)}});
  CHECK(a.product(0, 1) == SparseVector{{1, Rational(3)}});
  CHECK(a.product(1, 0).empty());
  CHECK(a.index_of("b") == Index{1});
  CHECK_FALSE(a.index_of("c").has_value());
}

TEST_CASE("Leibniz identity holds on L_2 and abelian algebras") {
  CHECK(leibniz_defects(simple_leibniz_sl2(2).first).empty());
  CHECK(leibniz_defects(abelian(4)).empty());
  CHECK(leibniz_defects(sl2()).empty());
}

TEST_CASE("perturbing [x_1, e] breaks the identity on (x_1, e, f)") {
  auto L = simple_leibniz_sl2(2).first;
  auto bad = with_product(L, x(1), E, x(0), Rational(-3));
  auto defects = leibniz_defects(bad);
  REQUIRE_FALSE(defects.empty());
  // Hand evaluation at m = 2: [x_1,[e,f]] = [x_1,h] = 0, while
  // [[x_1,e],f] - [[x_1,f],e] = -3 x_1 - (-2 x_1) = -x_1.
  auto it = std::find_if(defects.begin(), defects.end(), [](const IdentityViolation& v) {
    return v.triple == std::array<Index, 3>{x(1), E, F};
  });
  REQUIRE(it != defects.end());
  CHECK(it->defect == SparseVector{{x(1), Rational(1)}});
  // (x_1, e, h) is unaffected: both sides are multiples of [x_1, e] and agree.
  CHECK(std::none_of(defects.begin(), defects.end(), [](const IdentityViolation& v) {
    return v.triple == std::array<Index, 3>{x(1), E, H};
  }));
}

TEST_CASE("ideal of squares") {
  for (int m = 2; m <= 6; ++m) {
    auto L = simple_leibniz_sl2(m).first;
    Subspace I = squares_ideal(L);
    CHECK(I.dim() == static_cast<std::size_t>(m + 1));
    std::vector<Index> xs(static_cast<std::size_t>(m) + 1);
    std::iota(xs.begin(), xs.end(), Index{3});
    CHECK(I.pivots() == xs);
    CHECK(is_two_sided_ideal(L, I));
    CHECK(is_solvable(L, I));
  }
  CHECK(squares_ideal(sl2()).dim() == 0);
  CHECK(squares_ideal(AlgebraStructure({"b"}, {{0, 0, 0, Rational(1)}})).dim() == 1);
}

TEST_CASE("derived series") {
  auto ab = derived_series(abelian(3), 5);
  CHECK(ab == std::vector<std::size_t>{3, 0});
  CHECK(is_solvable(abelian(3)));
  auto s = derived_series(sl2(), 4);
  CHECK(s.front() == 3);
  CHECK(s.back() == 3);
  CHECK_FALSE(is_solvable(sl2()));
  CHECK_FALSE(is_solvable(simple_leibniz_sl2(3).first));
  CHECK_THROWS_AS(derived_series(sl2(), 0), std::invalid_argument);
}

TEST_CASE("gradings") {
  auto [L, g] = simple_leibniz_sl2(2);
  CHECK(check_grading(L, g));
  CHECK(check_grading(L, Grading{std::vector<int>(L.dim(), 0)}));
  Grading bad = g;
  bad.degrees[E] = 1;
  CHECK_FALSE(check_grading(L, bad));
  CHECK_FALSE(check_grading(L, Grading{{0, 0}}));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Index> perm(L.dim());
    std::iota(perm.begin(), perm.end(), Index{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    Grading pg;
    pg.degrees.resize(L.dim());
    Grading pbad = pg;
    for (Index i = 0; i < L.dim(); ++i) {
      pg.degrees[perm[i]] = g.degrees[i];
      pbad.degrees[perm[i]] = bad.degrees[i];
    }
    AlgebraStructure P = permuted(L, perm);
    CHECK(check_grading(P, pg));
    CHECK_FALSE(check_grading(P, pbad));
    CHECK(leibniz_defects(P).empty());
  }
}

TEST_CASE("bimodule axioms") {
  for (int m = 0; m <= 5; ++m) CHECK(check_bimodule_axioms(sl2(), irreducible_sl2_module(m)).empty());
  CHECK(check_bimodule_axioms(sl2(), Bimodule::zero(3, 4)).empty());
  CHECK_THROWS_AS(check_bimodule_axioms(sl2(), Bimodule::zero(2, 4)), std::invalid_argument);

  // [x_0, e] = x_0 added to V_2: axiom 1 fails on (e, f) acting on x_0.
  Bimodule v = irreducible_sl2_module(2);
  std::vector<std::tuple<Index, Index, Rational>> t{{0, 0, Rational(1)}, {0, 1, Rational(-2)}, {1, 2, Rational(-2)}};
  v.right_action[E] = SparseRationalMatrix::from_triplets(3, 3, t);
  auto bad = check_bimodule_axioms(sl2(), v);
  REQUIRE_FALSE(bad.empty());
  CHECK(std::any_of(bad.begin(), bad.end(), [](const IdentityViolation& w) {
    return w.axiom == 1 && w.triple[2] == 0 && ((w.triple[0] == E && w.triple[1] == F) || (w.triple[0] == F && w.triple[1] == E));
  }));

  // Adjoint bimodules of Leibniz algebras satisfy all three axioms.
  CHECK(check_bimodule_axioms(simple_leibniz_sl2(3).first, adjoint_bimodule(simple_leibniz_sl2(3).first)).empty());
  // A Lie module made symmetric is a bimodule too.
  CHECK(check_bimodule_axioms(sl2(), symmetric_bimodule(irreducible_sl2_module(3))).empty());
}

TEST_CASE("adjoint bimodule") {
  Bimodule ab = adjoint_bimodule(abelian(3));
  for (const auto& op : ab.left_action) CHECK(op.is_zero());
  for (const auto& op : ab.right_action) CHECK(op.is_zero());
  Bimodule s = adjoint_bimodule(sl2());
  CHECK(s.right_action[H].apply({{E, Rational(1)}}) == SparseVector{{E, Rational(2)}});
  Bimodule l = adjoint_bimodule(simple_leibniz_sl2(2).first);
  CHECK(l.right_action[E].apply({{x(1), Rational(1)}}) == SparseVector{{x(0), Rational(-2)}});
  CHECK(l.left_action[E].apply({{x(1), Rational(1)}}).empty());
}

TEST_CASE("antisymmetry") {
  CHECK(is_antisymmetric(sl2()));
  CHECK(is_antisymmetric(abelian(2)));
  CHECK_FALSE(is_antisymmetric(simple_leibniz_sl2(2).first));
}

TEST_CASE("right multiplications are derivations of Leibniz algebras") {
  for (const auto& a : {simple_leibniz_sl2(2).first, simple_leibniz_sl2(4).first, sl2(),
                        direct_sum(sl2(), simple_leibniz_sl2(2).first)}) {
    REQUIRE(leibniz_defects(a).empty());
    Subspace der = derivation_space(a);
    for (Index i = 0; i < a.dim(); ++i) {
      CHECK(der.contains(operator_to_cochain(right_mult_operator(a, {{i, Rational(1)}}))));
    }
    CHECK(is_two_sided_ideal(a, squares_ideal(a)));
  }
}
