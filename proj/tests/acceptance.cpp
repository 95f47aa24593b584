// One PASS/FAIL line per acceptance criterion. With a path to the leibniz
// executable as the first argument, criterion 10 runs the command line twice;
// otherwise it compares two in-process reports.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "leibniz/catalog.hpp"
#include "leibniz/cochain.hpp"
#include "leibniz/cohomology.hpp"
#include "leibniz/derivations.hpp"
#include "leibniz/verification.hpp"

using namespace leibniz;

namespace {

constexpr int kMaxM = 12;

std::size_t sz(int k) { return static_cast<std::size_t>(k); }

// Collects the first few mismatches of a criterion.
struct Failures {
  std::ostringstream out;
  int count = 0;
  void add(int m, const std::string& what) {
    if (count++ < 5) out << (count > 1 ? "; " : "") << "m=" << m << ": " << what;
  }
  template <class A, class B>
  void expect_eq(int m, const std::string& what, const A& got, const B& want) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << " = " << got << ", expected " << want;
      add(m, s.str());
    }
  }
  void expect(int m, const std::string& what, bool ok) {
    if (!ok) add(m, what);
  }
};

Subspace graded_kernel_sum(const AlgebraStructure& L, const Grading& g) {
  const std::size_t N = CochainIndex(L.dim(), L.dim(), 2).size();
  Subspace total = Subspace::span(N, std::vector<SparseVector>{});
  for (int deg : achievable_degrees(adjoint_grading(g), 2)) {
    GradedCocycles z = graded_cocycles(L, g, 2, deg);
    total = subspace_sum(total, embed(z.cocycles, N, z.columns));
  }
  return total;
}

void structural(Failures& f) {
  for (int m = 2; m <= kMaxM; ++m) {
    auto [L, g] = simple_leibniz_sl2(m);
    f.expect_eq(m, "Leibniz defects", leibniz_defects(L).size(), 0u);
    f.expect(m, "grading invalid", check_grading(L, g));
    Subspace I = squares_ideal(L);
    std::vector<SparseVector> xs;
    for (int k = 0; k <= m; ++k) xs.push_back({{static_cast<Index>(3 + k), Rational(1)}});
    f.expect_eq(m, "dim I", I.dim(), sz(m + 1));
    f.expect(m, "I != span{x_k}", I == Subspace::span(L.dim(), xs));
    f.expect_eq(m, "module axiom violations", check_bimodule_axioms(sl2(), irreducible_sl2_module(m)).size(), 0u);
  }
}

void complex_property(Failures& f) {
  for (int m = 2; m <= kMaxM; ++m) {
    auto L = simple_leibniz_sl2(m).first;
    Bimodule ad = adjoint_bimodule(L);
    auto d0 = coboundary_matrix(L, ad, 0);
    auto d1 = coboundary_matrix(L, ad, 1);
    auto d2 = coboundary_matrix(L, ad, 2);
    f.expect(m, "d1 d0 != 0", (d1 * d0).is_zero());
    f.expect(m, "d2 d1 != 0", (d2 * d1).is_zero());
    if (m <= 4) f.expect(m, "d3 d2 != 0", (coboundary_matrix(L, ad, 3) * d2).is_zero());
  }
}

void main_theorem(Failures& f) {
  for (int m = 2; m <= kMaxM; ++m) {
    auto L = simple_leibniz_sl2(m).first;
    f.expect_eq(m, "dim HL^2", hl_dim(L, adjoint_bimodule(L), 2), 0u);
  }
}

void totals(Failures& f) {
  for (int m = 2; m <= kMaxM; ++m) {
    auto L = simple_leibniz_sl2(m).first;
    CohomologyReport r = cohomology(L, adjoint_bimodule(L), 2);
    const std::size_t want = m == 2 ? 31 : sz((m + 4) * (m + 4) - 4);
    f.expect_eq(m, "dim ZL^2", r.dim_z, want);
    f.expect_eq(m, "dim BL^2", r.dim_b, want);
  }
}

void derivations(Failures& f) {
  for (int m = 2; m <= kMaxM; ++m) {
    auto [L, g] = simple_leibniz_sl2(m);
    DerivationReport r = analyze_derivations(L, g);
    f.expect_eq(m, "dim Der", r.space.dim(), m == 2 ? 5u : 4u);
    f.expect(m, "nonzero decomposition residual", r.all_residuals_zero);
    const std::size_t bl = bl_dim(L, adjoint_bimodule(L), 2);
    f.expect_eq(m, "dim BL^2 vs dim Der", bl, sz((m + 4) * (m + 4)) - r.space.dim());
    if (m != 2) f.expect_eq(m, "dim BL^2 vs (dim G + dim I)^2 - dim G - 1", bl, sz((3 + m + 1) * (3 + m + 1) - 3 - 1));
  }
}

void graded_ladder(Failures& f) {
  for (int m = 2; m <= kMaxM; ++m) {
    auto [L, g] = simple_leibniz_sl2(m);
    CohomologyReport r = graded_cohomology(L, g, 2);
    f.expect_eq(m, "dim ZL^2_(-2)", r.graded.at(-2).dim_z, 0u);
    f.expect_eq(m, "dim ZL^2_(-1)", r.graded.at(-1).dim_z, sz(3 * (m + 1)));
    f.expect_eq(m, "dim ZL^2_(0)", r.graded.at(0).dim_z, sz(m * m + 2 * m + 6));
    f.expect_eq(m, "dim ZL^2_(1)", r.graded.at(1).dim_z, m == 2 ? 8u : sz(3 * (m + 1)));
    for (const auto& [deg, d] : r.graded) {
      f.expect_eq(m, "graded dim BL^2 vs ZL^2 in degree " + std::to_string(deg), d.dim_b, d.dim_z);
    }
  }
}

void block_claims(Failures& f) {
  for (int m = 2; m <= kMaxM; ++m) {
    auto [L, g] = simple_leibniz_sl2(m);
    GradedCocycles z0 = graded_cocycles(L, g, 2, 0);
    GradedCocycles zm1 = graded_cocycles(L, g, 2, -1);
    const std::array<std::string, 1> gi{"GxI"}, ig{"IxG"};
    const std::array<std::string, 2> both{"GxI", "IxG"};
    f.expect_eq(m, "proj ZL^2_(0) onto GxI", block_analysis(z0, g, gi).projection_dim, 0u);
    LieCoboundaryCheck gg = gg_block_is_lie_coboundary(L, g);
    f.expect_eq(m, "proj ZL^2_(0) onto GxG", gg.projection_dim, 6u);
    f.expect(m, "GxG projection not skew", gg.skew_symmetric);
    f.expect(m, "GxG projection differs from Lie coboundaries", gg.equals_coboundaries);
    f.expect_eq(m, "supported IxG in degree 0", block_analysis(z0, g, ig).supported_dim, sz(m * m + 2 * m));
    f.expect(m, "proj ZL^2_(-1) onto GxI + IxG not injective", block_analysis(zm1, g, both).projection_injective);
    BlockAnalysis a = block_analysis(zm1, g, gi);
    f.expect(m, "proj ZL^2_(-1) onto GxI not injective", a.projection_injective);
    f.expect_eq(m, "proj ZL^2_(-1) onto GxI", a.projection_dim, sz(3 * (m + 1)));
  }
}

void desk_checks(Failures& f) {
  auto check = [&](int m, const std::string& name, const Bimodule& v, const Bimodule& bimodule) {
    for (unsigned n : {1u, 2u}) {
      f.expect_eq(m, "H^" + std::to_string(n) + "(sl2, " + name + ")", lie_ce_h(sl2(), v, n), 0u);
      f.expect_eq(m, "HL^" + std::to_string(n) + "(sl2, " + name + ")",
                  leibniz_h_with_coefficients(sl2(), bimodule, n), 0u);
    }
  };
  for (int m = 0; m <= kMaxM; ++m) {
    Bimodule v = irreducible_sl2_module(m);
    check(m, "V_m", v, symmetric_bimodule(v));
  }
  check(2, "adjoint", adjoint_bimodule(sl2()), adjoint_bimodule(sl2()));
}

void oracle_equivalence(Failures& f) {
  for (int m = 2; m <= 3; ++m) {
    auto [L, g] = simple_leibniz_sl2(m);
    Bimodule ad = adjoint_bimodule(L);
    Subspace full = kernel_basis(coboundary_matrix(L, ad, 2));
    f.expect(m, "ker d^2 differs from the graded sum", subspace_equal(full, graded_kernel_sum(L, g)));
    f.expect(m, "Der differs from ker d^1", subspace_equal(derivation_space(L), kernel_basis(coboundary_matrix(L, ad, 1))));
  }
}

std::string run_command(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t k;
  while ((k = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
  status = pclose(p);
  return out;
}

void determinism(Failures& f, const std::string& exe) {
  if (exe.empty()) {
    const std::string a = verification_json(verify_range(2, 8, {}, 1), false);
    const std::string b = verification_json(verify_range(2, 8, {}, 4), false);
    f.expect(0, "in-process reports differ", a == b);
    return;
  }
  const std::string cmd = "'" + exe + "' verify-paper --m-range 2..8 --format json";
  int s1 = 0, s2 = 0;
  const std::string a = run_command("LEIBNIZ_WORKERS=1 " + cmd, s1);
  const std::string b = run_command("LEIBNIZ_WORKERS=4 " + cmd, s2);
  f.expect_eq(0, "first run exit status", s1, 0);
  f.expect_eq(0, "second run exit status", s2, 0);
  f.expect(0, "empty output", !a.empty());
  f.expect(0, "outputs differ", a == b);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<void(Failures&)>>> criteria{
      {"structure of L_m, m = 2..12", structural},
      {"d d = 0 (d3 d2 for m <= 4)", complex_property},
      {"HL^2(L_m, L_m) = 0", main_theorem},
      {"dim ZL^2 = dim BL^2 totals", totals},
      {"derivations and their decomposition", derivations},
      {"graded ladder", graded_ladder},
      {"block claims", block_claims},
      {"Whitehead and Leibniz desk checks, V_0..V_12 and adjoint", desk_checks},
      {"ungraded kernel equals graded sum; Der = ker d^1", oracle_equivalence},
      {"verify-paper JSON is byte-identical across runs", [&](Failures& f) { determinism(f, exe); }},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Failures f;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(f);
    } catch (const std::exception& e) {
      f.add(-1, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = f.count == 0;
    failed += ok ? 0 : 1;
    std::printf("%s criterion %zu: %s (%.2fs)", ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), secs);
    if (!ok) std::printf(" -- %d failures: %s", f.count, f.out.str().c_str());
    std::printf("\n");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
