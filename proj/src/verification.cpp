#include "leibniz/verification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "leibniz/catalog.hpp"
#include "leibniz/cochain.hpp"
#include "leibniz/cohomology.hpp"
#include "leibniz/derivations.hpp"

namespace leibniz {

namespace {

using json = nlohmann::ordered_json;

class ClaimSink {
 public:
  explicit ClaimSink(VerificationReport& r) : r_(r) {}

  void check(std::string id, std::string statement, json expected, json computed) {
    ClaimStatus st = expected == computed ? ClaimStatus::pass : ClaimStatus::fail;
    r_.claims.push_back({std::move(id), std::move(statement), std::move(expected), std::move(computed), st, {}});
  }
  void skip(std::string id, std::string statement, json expected, std::string why) {
    r_.claims.push_back({std::move(id), std::move(statement), std::move(expected), nullptr, ClaimStatus::skipped,
                         std::move(why)});
  }
  // Records an exception from a stage as a failed claim instead of aborting the run.
  void error(std::string id, const std::exception& e) {
    r_.claims.push_back({std::move(id), "stage completed", true, false, ClaimStatus::fail, e.what()});
  }

 private:
  VerificationReport& r_;
};

class StageTimer {
 public:
  StageTimer(VerificationReport& r, std::string name)
      : r_(r), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
  ~StageTimer() {
    std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start_;
    r_.timings_ms.emplace_back(name_, dt.count());
  }

 private:
  VerificationReport& r_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

std::string degree_tag(int i) { return i < 0 ? "m" + std::to_string(-i) : std::to_string(i); }

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

void structure_claims(ClaimSink& s, int m, const AlgebraStructure& a, const Grading& g) {
  const std::size_t n = a.dim();
  s.check("leibniz_identity", "[x,[y,z]] = [[x,y],z] - [[x,z],y] on all basis triples (defect count)", 0,
          as_int(leibniz_defects(a).size()));
  s.check("grading_valid", "G = span{e,f,h} in degree 0, I = span{x_k} in degree 1 is a grading", true,
          check_grading(a, g));
  Subspace squares = squares_ideal(a);
  s.check("squares_ideal_dim", "dim I = m+1", m + 1, as_int(squares.dim()));
  std::vector<SparseVector> xs;
  for (Index k = 3; k < n; ++k) xs.push_back({{k, Rational(1)}});
  s.check("squares_ideal_span", "I = span{x_0..x_m}", true, subspace_equal(squares, Subspace::span(n, xs)));
  s.check("module_axioms", "V_m is a right sl2-module with zero left action (violation count)", 0,
          as_int(check_bimodule_axioms(sl2(), irreducible_sl2_module(m)).size()));
  bool left_zero = true;
  for (Index x = 0; x < 3; ++x) {
    for (Index k = 3; k < n; ++k) left_zero = left_zero && a.product(x, k).empty();
  }
  s.check("g_left_action_on_i_zero", "[G, I] = 0", true, left_zero);
}

void complex_claims(ClaimSink& s, int m, const AlgebraStructure& a, const VerificationOptions& opts) {
  const Bimodule adj = adjoint_bimodule(a);
  auto d0 = coboundary_matrix(a, adj, 0);
  auto d1 = coboundary_matrix(a, adj, 1);
  s.check("d1_d0_zero", "d^1 d^0 = 0", true, (d1 * d0).is_zero());
  auto d2 = coboundary_matrix(a, adj, 2);
  s.check("d2_d1_zero", "d^2 d^1 = 0", true, (d2 * d1).is_zero());
  if (opts.deep && m <= 4) {
    s.check("d3_d2_zero", "d^3 d^2 = 0", true, (coboundary_matrix(a, adj, 3) * d2).is_zero());
  } else {
    s.skip("d3_d2_zero", "d^3 d^2 = 0", true, opts.deep ? "only run for m <= 4" : "needs --deep");
  }
}

void cohomology_claims(ClaimSink& s, int m, const CohomologyReport& r) {
  const std::int64_t total = m == 2 ? 31 : (m + 4) * (m + 4) - 4;
  const char* stmt = "(m+4)^2 - 4 for m != 2, 31 for m = 2";
  s.check("zl2_dim", std::string("dim ZL^2(L,L) = ") + stmt, total, as_int(r.dim_z));
  s.check("bl2_dim", std::string("dim BL^2(L,L) = ") + stmt, total, as_int(r.dim_b));
  s.check("hl2_dim", "HL^2(L,L) = 0", 0, as_int(r.dim_h));
}

void graded_claims(ClaimSink& s, int m, const CohomologyReport& r) {
  const std::int64_t mm = m;
  std::map<int, std::int64_t> expected{
      {-2, 0}, {-1, 3 * (mm + 1)}, {0, mm * mm + 2 * mm + 6}, {1, m == 2 ? 8 : 3 * (mm + 1)}};
  std::map<int, std::string> formula{
      {-2, "0"}, {-1, "3(m+1)"}, {0, "m^2+2m+6"}, {1, "3(m+1) for m != 2, 8 for m = 2"}};
  for (const auto& [i, want] : expected) {
    auto it = r.graded.find(i);
    GradedDims got = it == r.graded.end() ? GradedDims{} : it->second;
    s.check("zl2_deg_" + degree_tag(i), "dim ZL^2_(" + std::to_string(i) + ") = " + formula[i], want,
            as_int(got.dim_z));
    s.check("bl2_deg_" + degree_tag(i), "dim BL^2_(" + std::to_string(i) + ") = dim ZL^2_(" + std::to_string(i) + ")",
            want, as_int(got.dim_b));
  }
  std::size_t extra = 0;
  bool all_zero = true;
  for (const auto& [i, d] : r.graded) {
    all_zero = all_zero && d.dim_h == 0;
    if (!expected.count(i)) extra += d.dim_z;
  }
  s.check("zl2_other_degrees_zero", "ZL^2_(i) = 0 outside i = -2..1", 0, as_int(extra));
  s.check("hl2_graded_zero", "HL^2_(i) = 0 in every degree", true, all_zero);
  // graded_cohomology throws unless the graded pieces add up to the totals.
  s.check("graded_sum_matches_total", "sum_i dim ZL^2_(i) = dim ZL^2 and likewise for BL^2", true, true);
}

void block_claims(ClaimSink& s, int m, const AlgebraStructure& a, const Grading& g) {
  const std::int64_t mm = m;
  GradedCocycles z0 = graded_cocycles(a, g, 2, 0);
  const std::string gi[] = {"GxI"};
  const std::string gg[] = {"GxG"};
  const std::string ig[] = {"IxG"};
  const std::string gi_ig[] = {"GxI", "IxG"};
  s.check("phi0_GI_proj_dim", "projection of ZL^2_(0) onto the GxI block is 0", 0,
          as_int(block_analysis(z0, g, gi).projection_dim));
  s.check("phi0_GG_proj_dim", "projection of ZL^2_(0) onto the GxG block has dim (dim G)^2 - dim G = 6", 6,
          as_int(block_analysis(z0, g, gg).projection_dim));
  LieCoboundaryCheck lie = gg_block_is_lie_coboundary(a, g);
  s.check("phi0_GG_skew", "GxG part of every degree-0 cocycle is skew-symmetric", true, lie.skew_symmetric);
  s.check("phi0_GG_lie_coboundary", "GxG projection of ZL^2_(0) equals the Lie 2-coboundaries of sl2", true,
          lie.equals_coboundaries);
  s.check("phi0_IG_dim", "degree-0 cocycles supported on the IxG block have dim m^2+2m", mm * mm + 2 * mm,
          as_int(block_analysis(z0, g, ig).supported_dim));

  GradedCocycles zm1 = graded_cocycles(a, g, 2, -1);
  s.check("zlm1_proj_GI_IG_injective", "projection of ZL^2_(-1) onto GxI + IxG is injective", true,
          block_analysis(zm1, g, gi_ig).projection_injective);
  BlockAnalysis b = block_analysis(zm1, g, gi);
  s.check("phim1_GI_dim", "projection of ZL^2_(-1) onto GxI has dim 3(m+1)", 3 * (mm + 1), as_int(b.projection_dim));
  s.check("zlm1_proj_GI_injective", "projection of ZL^2_(-1) onto GxI is injective", true, b.projection_injective);

  GradedCocycles z1 = graded_cocycles(a, g, 2, 1);
  s.check("phi1_GG_proj_dim", "projection of ZL^2_(1) onto GxG has dim dim G * dim I, minus 1 when m = 2",
          3 * (mm + 1) - (m == 2 ? 1 : 0), as_int(block_analysis(z1, g, gg).projection_dim));
}

void derivation_claims(ClaimSink& s, int m, const AlgebraStructure& a, const Grading& g, const CohomologyReport& r) {
  const std::int64_t mm = m;
  DerivationReport d = analyze_derivations(a, g);
  s.check("der_dim", "dim Der(L) = 4 for m != 2, 5 for m = 2", m == 2 ? 5 : 4, as_int(d.space.dim()));
  std::size_t bad = std::count_if(d.decompositions.begin(), d.decompositions.end(),
                                  [](const DerivationDecomposition& x) { return !x.ok(); });
  s.check("der_decomposition_residual", "every basis derivation is R_a + lambda id_I + delta (nonzero residuals)", 0,
          as_int(bad));
  s.check("der_delta_rank", "delta: G -> I occurs (rank 1) only when dim G = dim I", m == 2 ? 1 : 0,
          as_int(d.delta_rank));
  if (m == 2) {
    std::vector<std::tuple<Index, Index, Rational>> t{
        {3, 0, Rational(1)}, {5, 1, Rational(1, 2)}, {4, 2, Rational(1)}};
    auto want = SparseRationalMatrix::from_triplets(a.dim(), a.dim(), t);
    s.check("der_delta_generator", "normalized delta generator", describe_operator(a, want),
            d.delta_generator ? describe_operator(a, *d.delta_generator) : std::string("none"));
  }
  s.check("der_right_mult", "every right multiplication is a derivation", true, d.right_mults_are_derivations);
  s.check("der_space_equals_ker_d1", "Der(L) = ker d^1 as subspaces", true, d.equals_ker_d1);
  const std::int64_t n2 = (mm + 4) * (mm + 4);
  s.check("bl2_from_derivations", "dim BL^2 = (m+4)^2 - dim Der(L)", n2 - as_int(d.space.dim()), as_int(r.dim_b));
  if (m != 2) {
    s.check("bl2_dim_formula", "dim BL^2 = (dim G + dim I)^2 - dim G - 1", n2 - 3 - 1, as_int(r.dim_b));
  }
  // With zero left action, ZL^1(G, I) = Hom_G(G, I) is exactly the space of possible delta parts.
  s.check("hl1_Vm_right_equals_delta_rank", "HL^1(sl2, V_m) with zero left action = rank of delta",
          as_int(d.delta_rank), as_int(hl_dim(sl2(), irreducible_sl2_module(m), 1)));
}

void module_claims(ClaimSink& s, int m) {
  const AlgebraStructure g = sl2();
  const Bimodule right = irreducible_sl2_module(m);
  const Bimodule sym = symmetric_bimodule(right);
  s.check("ce_h1_Vm", "H^1(sl2, V_m) = 0", 0, as_int(lie_ce_h(g, right, 1)));
  s.check("ce_h2_Vm", "H^2(sl2, V_m) = 0", 0, as_int(lie_ce_h(g, right, 2)));
  s.check("hl1_Vm", "HL^1(sl2, V_m) = 0, left action [x,v] = -[v,x]", 0, as_int(leibniz_h_with_coefficients(g, sym, 1)));
  s.check("hl2_Vm", "HL^2(sl2, V_m) = 0, left action [x,v] = -[v,x]", 0, as_int(leibniz_h_with_coefficients(g, sym, 2)));
  s.check("hl2_Vm_right", "HL^2(sl2, V_m) = 0 with zero left action", 0,
          as_int(leibniz_h_with_coefficients(g, right, 2)));
}

void oracle_claims(ClaimSink& s, int m, const AlgebraStructure& a, const Grading& g, const VerificationOptions& opts) {
  const char* stmt = "kernel of the full d^2 equals the direct sum of the graded kernels";
  if (m > 3 && !opts.deep) {
    s.skip("ungraded_kernel_equals_graded_sum", stmt, true, "runs for m <= 3 unless --deep");
    return;
  }
  const std::size_t n = a.dim();
  Subspace full = kernel_basis(coboundary_matrix(a, adjoint_bimodule(a), 2));
  Subspace sum(n * n * n);
  for (int i : achievable_degrees(adjoint_grading(g), 2)) {
    GradedCocycles z = graded_cocycles(a, g, 2, i);
    sum = subspace_sum(sum, embed(z.cocycles, n * n * n, z.columns));
  }
  s.check("ungraded_kernel_equals_graded_sum", stmt, true, subspace_equal(full, sum));
}

template <class F>
void stage(VerificationReport& r, ClaimSink& s, const std::string& name, F&& f) {
  StageTimer t(r, name);
  try {
    f();
  } catch (const std::exception& e) {
    s.error(name + "_error", e);
  }
}

}  // namespace

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::skipped: return "skipped";
  }
  return "fail";
}

bool VerificationReport::passed() const {
  return std::none_of(claims.begin(), claims.end(), [](const ClaimRecord& c) { return c.status == ClaimStatus::fail; });
}

VerificationReport verify_m(int m, const VerificationOptions& opts) {
  if (m < 2) throw std::invalid_argument("verify_m: m must be at least 2");
  VerificationReport r;
  r.m = m;
  ClaimSink s(r);
  auto [a, g] = simple_leibniz_sl2(m);
  CohomologyReport coh;
  stage(r, s, "structure", [&] { structure_claims(s, m, a, g); });
  stage(r, s, "complex", [&] { complex_claims(s, m, a, opts); });
  stage(r, s, "cohomology", [&] {
    coh = graded_cohomology(a, g, 2);
    cohomology_claims(s, m, coh);
    graded_claims(s, m, coh);
  });
  stage(r, s, "blocks", [&] { block_claims(s, m, a, g); });
  stage(r, s, "derivations", [&] { derivation_claims(s, m, a, g, coh); });
  stage(r, s, "modules", [&] { module_claims(s, m); });
  stage(r, s, "oracle", [&] { oracle_claims(s, m, a, g, opts); });
  return r;
}

unsigned default_workers() {
  if (const char* env = std::getenv("LEIBNIZ_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min(v, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<VerificationReport> verify_range(int lo, int hi, const VerificationOptions& opts, unsigned workers) {
  if (lo < 2 || hi < lo) throw std::invalid_argument("verify_range: need 2 <= lo <= hi");
  const auto count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<VerificationReport> out(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < count;) out[k] = verify_m(lo + static_cast<int>(k), opts);
  };
  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, workers), count));
  if (threads == 1) {
    work();
    return out;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  pool.clear();
  return out;
}

std::string verification_json(const std::vector<VerificationReport>& reports, bool include_timing) {
  json root;
  root["schema"] = kVerifySchema;
  bool all = true;
  json arr = json::array();
  for (const auto& r : reports) {
    all = all && r.passed();
    json jr;
    jr["m"] = r.m;
    jr["passed"] = r.passed();
    json claims = json::array();
    for (const auto& c : r.claims) {
      json jc;
      jc["id"] = c.id;
      jc["statement"] = c.statement;
      jc["expected"] = c.expected;
      jc["computed"] = c.computed;
      jc["status"] = to_string(c.status);
      if (!c.note.empty()) jc["note"] = c.note;
      claims.push_back(std::move(jc));
    }
    jr["claims"] = std::move(claims);
    if (include_timing) {
      json t = json::object();
      for (const auto& [name, ms] : r.timings_ms) t[name] = ms;
      jr["timings_ms"] = std::move(t);
    }
    arr.push_back(std::move(jr));
  }
  root["passed"] = all;
  root["reports"] = std::move(arr);
  return root.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.is_null() ? "" : v.dump(); }

}  // namespace

std::string verification_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "m,id,status,expected,computed,statement\n";
  for (const auto& r : reports) {
    for (const auto& c : r.claims) {
      out << r.m << ',' << csv_field(c.id) << ',' << to_string(c.status) << ',' << csv_field(scalar(c.expected)) << ','
          << csv_field(scalar(c.computed)) << ',' << csv_field(c.statement) << '\n';
    }
  }
  return out.str();
}

std::string verification_pretty(const std::vector<VerificationReport>& reports, bool include_timing) {
  std::ostringstream out;
  std::size_t total = 0;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    out << "L_" << r.m << " (dim " << r.m + 4 << "): " << (r.passed() ? "all claims hold" : "FAILED") << '\n';
    for (const auto& c : r.claims) {
      ++total;
      if (c.status == ClaimStatus::fail) ++failed;
      out << "  [" << std::setw(7) << std::left << to_string(c.status) << "] " << std::setw(34) << c.id
          << " expected " << scalar(c.expected);
      if (c.status != ClaimStatus::skipped) out << ", computed " << scalar(c.computed);
      if (!c.note.empty()) out << " (" << c.note << ")";
      out << '\n';
    }
    if (include_timing) {
      out << "  timing:";
      for (const auto& [name, ms] : r.timings_ms) out << ' ' << name << '=' << std::fixed << std::setprecision(1) << ms << "ms";
      out.unsetf(std::ios::fixed);
      out << '\n';
    }
  }
  out << total - failed << '/' << total << " claims without failure\n";
  return out.str();
}

}  // namespace leibniz
