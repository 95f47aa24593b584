// Command-line front end for the leibniz library.
//
// Exit codes: 0 success, 1 a mathematical check failed, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "leibniz/catalog.hpp"
#include "leibniz/cochain.hpp"
#include "leibniz/cohomology.hpp"
#include "leibniz/derivations.hpp"
#include "leibniz/verification.hpp"

using namespace leibniz;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kClaimFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::optional<int> m;
  std::string path;
};

struct LoadedAlgebra {
  std::string source;
  AlgebraStructure algebra;
  std::optional<Grading> grading;
};

void add_input_options(CLI::App* cmd, Input& in) {
  auto* m = cmd->add_option("--m", in.m, "Use the built-in algebra L_m = sl2 + V_m (m >= 2)");
  auto* a = cmd->add_option("--algebra", in.path, "Read the algebra from a structure-constant file");
  m->excludes(a);
  a->excludes(m);
}

LoadedAlgebra load_input(const Input& in) {
  if (in.m) {
    if (*in.m < 2) throw UsageError("--m must be at least 2");
    auto [a, g] = simple_leibniz_sl2(*in.m);
    return {"L_" + std::to_string(*in.m), std::move(a), std::move(g)};
  }
  if (in.path.empty()) throw UsageError("one of --m or --algebra is required");
  AlgebraFile f = load(in.path);
  return {in.path, std::move(f.algebra), std::move(f.grading)};
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + out_path + "'");
  out << text;
}

std::string violation_text(const AlgebraStructure& a, const IdentityViolation& v) {
  const auto& l = a.labels();
  std::ostringstream s;
  s << "Leibniz identity fails on (" << l[v.triple[0]] << ", " << l[v.triple[1]] << ", " << l[v.triple[2]]
    << "): defect " << describe_vector(a, v.defect);
  return s.str();
}

// ---- build ----------------------------------------------------------------

int cmd_build(int m, const std::string& out) {
  if (m < 2) throw UsageError("--m must be at least 2");
  auto [a, g] = simple_leibniz_sl2(m);
  write_output(format_algebra(a, g), out);
  return kOk;
}

// ---- check ----------------------------------------------------------------

int cmd_check(const Input& in) {
  LoadedAlgebra L = load_input(in);
  auto defects = leibniz_defects(L.algebra);
  std::cout << L.source << ": dim " << L.algebra.dim() << "\n";
  for (const auto& v : defects) std::cout << "  " << violation_text(L.algebra, v) << "\n";
  std::cout << "Leibniz identity: " << (defects.empty() ? "holds" : std::to_string(defects.size()) + " violations")
            << "\n";
  bool grading_ok = true;
  if (L.grading) {
    grading_ok = check_grading(L.algebra, *L.grading);
    std::cout << "grading: " << (grading_ok ? "valid" : "INVALID") << "\n";
  } else {
    std::cout << "grading: none declared\n";
  }
  return defects.empty() && grading_ok ? kOk : kClaimFailure;
}

// ---- cohomology -------------------------------------------------------------

struct BlockRow {
  int degree;
  BlockAnalysis analysis;
};

int cmd_cohomology(const Input& in, unsigned n, bool graded, bool blocks, const std::string& format) {
  if (n > 2) throw UsageError("--n must be 0, 1 or 2");
  if (blocks && n == 0) throw UsageError("--blocks needs --n 1 or 2");
  LoadedAlgebra L = load_input(in);
  if ((graded || blocks) && !L.grading) throw UsageError("--graded and --blocks need a grading");
  if (L.grading && (graded || blocks) && !check_grading(L.algebra, *L.grading)) {
    std::cerr << "error: declared grading is not a grading of the algebra\n";
    return kClaimFailure;
  }

  CohomologyReport r = graded ? graded_cohomology(L.algebra, *L.grading, n)
                              : cohomology(L.algebra, adjoint_bimodule(L.algebra), n);
  std::vector<BlockRow> rows;
  if (blocks) {
    const CochainGrading cg = adjoint_grading(*L.grading);
    for (int i : achievable_degrees(cg, n)) {
      GradedCocycles z = graded_cocycles(L.algebra, *L.grading, n, i);
      for (const auto& b : graded_blocks(cg, n, i)) {
        const std::string name = b.signature();
        rows.push_back({i, block_analysis(z, *L.grading, std::span<const std::string>(&name, 1))});
      }
    }
  }

  if (format == "json") {
    json j;
    j["schema"] = "leibniz-cohomology/1";
    j["algebra"] = L.source;
    j["dim"] = L.algebra.dim();
    j["coefficients"] = "adjoint";
    j["n"] = n;
    j["dim_Z"] = r.dim_z;
    j["dim_B"] = r.dim_b;
    j["dim_H"] = r.dim_h;
    if (graded) {
      json g = json::array();
      for (const auto& [i, d] : r.graded) g.push_back({{"degree", i}, {"dim_Z", d.dim_z}, {"dim_B", d.dim_b}, {"dim_H", d.dim_h}});
      j["graded"] = std::move(g);
    }
    if (blocks) {
      json b = json::array();
      for (const auto& row : rows) {
        b.push_back({{"degree", row.degree},
                     {"block", row.analysis.blocks.front()},
                     {"cocycle_dim", row.analysis.cocycle_dim},
                     {"projection_dim", row.analysis.projection_dim},
                     {"supported_dim", row.analysis.supported_dim},
                     {"projection_injective", row.analysis.projection_injective}});
      }
      j["blocks"] = std::move(b);
    }
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "degree,dim_Z,dim_B,dim_H\n";
    for (const auto& [i, d] : r.graded) std::cout << i << ',' << d.dim_z << ',' << d.dim_b << ',' << d.dim_h << "\n";
    std::cout << "total," << r.dim_z << ',' << r.dim_b << ',' << r.dim_h << "\n";
    if (blocks) {
      std::cout << "\ndegree,block,cocycle_dim,projection_dim,supported_dim,projection_injective\n";
      for (const auto& row : rows) {
        const auto& b = row.analysis;
        std::cout << row.degree << ',' << b.blocks.front() << ',' << b.cocycle_dim << ',' << b.projection_dim << ','
                  << b.supported_dim << ',' << (b.projection_injective ? "true" : "false") << "\n";
      }
    }
  } else {
    std::cout << L.source << " (dim " << L.algebra.dim() << "), adjoint coefficients, n = " << n << "\n";
    std::cout << "  dim ZL = " << r.dim_z << ", dim BL = " << r.dim_b << ", dim HL = " << r.dim_h << "\n";
    for (const auto& [i, d] : r.graded) {
      std::cout << "  degree " << std::setw(3) << i << ": Z " << std::setw(5) << d.dim_z << "  B " << std::setw(5)
                << d.dim_b << "  H " << d.dim_h << "\n";
    }
    for (const auto& row : rows) {
      const auto& b = row.analysis;
      std::cout << "  degree " << std::setw(3) << row.degree << "  " << std::setw(10) << std::left << b.blocks.front()
                << std::right << " projection " << b.projection_dim << (b.projection_injective ? " (injective)" : "")
                << ", supported " << b.supported_dim << "\n";
    }
  }
  return kOk;
}

// ---- derivations ------------------------------------------------------------

int cmd_derivations(const Input& in, const std::string& format) {
  LoadedAlgebra L = load_input(in);
  const std::size_t n = L.algebra.dim();
  std::optional<Grading> g = L.grading;
  if (!g && squares_ideal(L.algebra).dim() == 0) g = Grading{std::vector<int>(n, 0)};
  bool decomposable = g && check_grading(L.algebra, *g) &&
                      std::all_of(g->degrees.begin(), g->degrees.end(), [](int d) { return d == 0 || d == 1; });

  std::optional<DerivationReport> rep;
  std::string note;
  Subspace space;
  if (decomposable) {
    try {
      rep = analyze_derivations(L.algebra, *g);
      space = rep->space;
    } catch (const DecompositionDependency& e) {
      note = e.what();
    }
  } else {
    note = "no grading in degrees 0 and 1, decomposition not attempted";
  }
  if (!rep) space = derivation_space(L.algebra);

  const bool ok = !rep || (rep->all_residuals_zero && rep->delta_consistent());
  const bool delta_present = rep && rep->delta_rank > 0;

  if (format == "json") {
    json j;
    j["schema"] = "leibniz-derivations/1";
    j["algebra"] = L.source;
    j["dim"] = n;
    j["dim_Der"] = space.dim();
    if (rep) {
      j["delta_present"] = delta_present;
      j["delta_rank"] = rep->delta_rank;
      j["all_residuals_zero"] = rep->all_residuals_zero;
      j["equals_ker_d1"] = rep->equals_ker_d1;
      json ds = json::array();
      for (std::size_t k = 0; k < rep->decompositions.size(); ++k) {
        const auto& d = rep->decompositions[k];
        json a = json::array();
        for (const auto& c : d.a) a.push_back(c.to_string());
        ds.push_back({{"derivation", describe_operator(L.algebra, cochain_to_operator(space.basis()[k], n))},
                      {"a", std::move(a)},
                      {"lambda", d.lambda.to_string()},
                      {"delta", describe_operator(L.algebra, d.delta)},
                      {"residual_zero", d.ok()}});
      }
      j["decompositions"] = std::move(ds);
      if (rep->delta_generator) j["delta_generator"] = describe_operator(L.algebra, *rep->delta_generator);
    }
    if (!note.empty()) j["note"] = note;
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "index,derivation,a,lambda,delta,residual_zero\n";
    for (std::size_t k = 0; k < space.dim(); ++k) {
      std::cout << k << ",\"" << describe_operator(L.algebra, cochain_to_operator(space.basis()[k], n)) << '"';
      if (rep) {
        const auto& d = rep->decompositions[k];
        std::string a;
        for (const auto& c : d.a) a += (a.empty() ? "" : " ") + c.to_string();
        std::cout << ",\"" << a << "\"," << d.lambda << ",\"" << describe_operator(L.algebra, d.delta) << "\","
                  << (d.ok() ? "true" : "false");
      } else {
        std::cout << ",,,,";
      }
      std::cout << "\n";
    }
  } else {
    std::cout << L.source << ": dim Der = " << space.dim() << "\n";
    if (rep) {
      std::cout << "  delta " << (delta_present ? "present" : "absent") << " (rank " << rep->delta_rank << ")\n";
      for (std::size_t k = 0; k < rep->decompositions.size(); ++k) {
        const auto& d = rep->decompositions[k];
        std::cout << "  d" << k << ": " << describe_operator(L.algebra, cochain_to_operator(space.basis()[k], n)) << "\n";
        std::cout << "      a = (";
        for (std::size_t i = 0; i < d.a.size(); ++i) std::cout << (i ? ", " : "") << d.a[i];
        std::cout << "), lambda = " << d.lambda << ", delta = " << describe_operator(L.algebra, d.delta)
                  << (d.ok() ? "" : ", NONZERO RESIDUAL") << "\n";
      }
      if (rep->delta_generator) std::cout << "  delta generator: " << describe_operator(L.algebra, *rep->delta_generator) << "\n";
    }
    if (!note.empty()) std::cout << "  note: " << note << "\n";
  }
  return ok ? kOk : kClaimFailure;
}

// ---- verify-paper -----------------------------------------------------------

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  auto parse = [&](const std::string& t) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (t.empty() || used != t.size()) throw UsageError("bad --m-range '" + s + "', expected a..b");
    return v;
  };
  if (dots == std::string::npos) {
    int v = parse(s);
    return {v, v};
  }
  return {parse(s.substr(0, dots)), parse(s.substr(dots + 2))};
}

int cmd_verify(const std::string& range, const std::string& format, const std::string& out, bool deep, bool timing) {
  auto [lo, hi] = parse_range(range);
  if (lo < 2 || hi < lo) throw UsageError("--m-range needs 2 <= a <= b");
  VerificationOptions opts;
  opts.deep = deep;
  auto reports = verify_range(lo, hi, opts, default_workers());
  std::string text = format == "json"  ? verification_json(reports, timing)
                     : format == "csv" ? verification_csv(reports)
                                       : verification_pretty(reports, true);
  write_output(text, out);
  bool ok = std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.passed(); });
  return ok ? kOk : kClaimFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cohomology and derivation computations for Leibniz algebras"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "csv", "pretty"};

  int build_m = 0;
  std::string build_out;
  auto* build = app.add_subcommand("build", "Write the structure constants of L_m");
  build->add_option("--m", build_m, "m >= 2")->required();
  build->add_option("--out", build_out, "Output file (default stdout)");

  Input check_in;
  auto* check = app.add_subcommand("check", "Check the Leibniz identity and the declared grading");
  add_input_options(check, check_in);

  Input coh_in;
  unsigned coh_n = 2;
  bool coh_graded = false;
  bool coh_blocks = false;
  std::string coh_format = "pretty";
  auto* coh = app.add_subcommand("cohomology", "ZL^n, BL^n, HL^n with adjoint coefficients");
  add_input_options(coh, coh_in);
  coh->add_option("--n", coh_n, "Cochain degree (0, 1 or 2)");
  coh->add_flag("--graded", coh_graded, "Split by the degree induced from the grading");
  coh->add_flag("--blocks", coh_blocks, "Projection and support dimensions for every graded block");
  coh->add_option("--format", coh_format)->check(CLI::IsMember(formats));

  Input der_in;
  std::string der_format = "pretty";
  auto* der = app.add_subcommand("derivations", "Derivation algebra and its decomposition");
  add_input_options(der, der_in);
  der->add_option("--format", der_format)->check(CLI::IsMember(formats));

  std::string range = "2..8";
  std::string ver_format = "pretty";
  std::string ver_out;
  bool deep = false;
  bool timing = false;
  auto* ver = app.add_subcommand("verify-paper", "Run every claim about L_m for a range of m");
  ver->add_option("--m-range", range, "a..b with 2 <= a <= b (default 2..8)");
  ver->add_option("--format", ver_format)->check(CLI::IsMember(formats));
  ver->add_option("--out", ver_out, "Output file (default stdout)");
  ver->add_flag("--deep", deep, "Also check d^3 d^2 = 0 (m <= 4) and the ungraded kernel for every m");
  ver->add_flag("--timing", timing, "Include stage timings in JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*build) return cmd_build(build_m, build_out);
    if (*check) return cmd_check(check_in);
    if (*coh) return cmd_cohomology(coh_in, coh_n, coh_graded, coh_blocks, coh_format);
    if (*der) return cmd_derivations(der_in, der_format);
    if (*ver) return cmd_verify(range, ver_format, ver_out, deep, timing);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const AlgebraFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kClaimFailure;
  }
  return kUsage;
}
