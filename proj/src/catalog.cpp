#include "leibniz/catalog.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

namespace leibniz {

namespace {

constexpr Index kE = 0;
constexpr Index kF = 1;
constexpr Index kH = 2;

using Product = AlgebraStructure::Product;

std::vector<Product> sl2_products() {
  return {
      {kE, kF, kH, Rational(1)},  {kF, kE, kH, Rational(-1)}, {kE, kH, kE, Rational(2)},
      {kH, kE, kE, Rational(-2)}, {kH, kF, kF, Rational(2)},  {kF, kH, kF, Rational(-2)},
  };
}

// Right action of sl2 on V_m as (k, generator, target, coefficient) records.
std::vector<std::tuple<Index, Index, Index, Rational>> module_records(int m) {
  std::vector<std::tuple<Index, Index, Index, Rational>> out;
  for (int k = 0; k <= m; ++k) {
    auto xk = static_cast<Index>(k);
    if (k >= 1) out.emplace_back(xk, kE, xk - 1, Rational(-static_cast<std::int64_t>(k) * (m + 1 - k)));
    if (k <= m - 1) out.emplace_back(xk, kF, xk + 1, Rational(1));
    if (m - 2 * k != 0) out.emplace_back(xk, kH, xk, Rational(m - 2 * k));
  }
  return out;
}

}  // namespace

AlgebraStructure sl2() { return AlgebraStructure({"e", "f", "h"}, sl2_products()); }

std::pair<AlgebraStructure, Grading> simple_leibniz_sl2(int m) {
  if (m < 2) throw std::invalid_argument("simple_leibniz_sl2: m must be at least 2, got " + std::to_string(m));
  std::vector<std::string> labels{"e", "f", "h"};
  for (int k = 0; k <= m; ++k) labels.push_back("x" + std::to_string(k));
  std::vector<Product> products = sl2_products();
  for (auto& [k, g, t, c] : module_records(m)) products.push_back({k + 3, g, t + 3, c});
  Grading grading;
  grading.degrees.assign(3, 0);
  grading.degrees.resize(static_cast<std::size_t>(m) + 4, 1);
  return {AlgebraStructure(std::move(labels), products), std::move(grading)};
}

Bimodule irreducible_sl2_module(int m) {
  if (m < 0) throw std::invalid_argument("irreducible_sl2_module: m must be non-negative");
  const auto md = static_cast<std::size_t>(m) + 1;
  Bimodule mod = Bimodule::zero(3, md);
  std::vector<std::vector<std::tuple<Index, Index, Rational>>> right(3);
  for (auto& [k, g, t, c] : module_records(m)) right[g].emplace_back(t, k, c);
  for (Index g = 0; g < 3; ++g) mod.right_action[g] = SparseRationalMatrix::from_triplets(md, md, right[g]);
  return mod;
}

AlgebraStructure lie_as_leibniz(const AlgebraStructure& lie) {
  if (!is_antisymmetric(lie)) throw std::invalid_argument("lie_as_leibniz: bracket is not antisymmetric");
  // With antisymmetry the Leibniz identity is the Jacobi identity.
  if (!leibniz_defects(lie).empty()) throw std::invalid_argument("lie_as_leibniz: Jacobi identity fails");
  return lie;
}

AlgebraStructure direct_sum(const AlgebraStructure& a, const AlgebraStructure& b) {
  std::vector<std::string> labels = a.labels();
  std::set<std::string> used(labels.begin(), labels.end());
  for (std::string l : b.labels()) {
    while (used.count(l)) l += "'";
    used.insert(l);
    labels.push_back(l);
  }
  std::vector<Product> products = a.products();
  const auto shift = static_cast<Index>(a.dim());
  for (const auto& p : b.products()) products.push_back({p.left + shift, p.right + shift, p.result + shift, p.coeff});
  return AlgebraStructure(std::move(labels), products);
}

Grading direct_sum(const Grading& a, const Grading& b) {
  Grading g = a;
  g.degrees.insert(g.degrees.end(), b.degrees.begin(), b.degrees.end());
  return g;
}

AlgebraFileError::AlgebraFileError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

// Format (version 1), one directive per line, '#' starts a comment:
//
//   leibniz-algebra 1
//   dim <n>
//   labels <label_0> ... <label_{n-1}>
//   grading <d_0> ... <d_{n-1}>          (optional)
//   products <count>
//   <left> <right> <result> <coeff>      (count records, coeff "p" or "p/q")
//   end
AlgebraFile parse_algebra(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;

  auto next_line = [&](std::vector<std::string>& tokens) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      tokens.clear();
      for (std::string t; ls >> t;) tokens.push_back(t);
      if (!tokens.empty()) return true;
    }
    return false;
  };
  auto expect = [&](std::vector<std::string>& tokens, const std::string& keyword) {
    if (!next_line(tokens)) throw AlgebraFileError(lineno, "unexpected end of file, expected '" + keyword + "'");
    if (tokens[0] != keyword) throw AlgebraFileError(lineno, "expected '" + keyword + "', found '" + tokens[0] + "'");
  };
  auto parse_count = [&](const std::string& s, const char* what) -> std::size_t {
    if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos) {
      throw AlgebraFileError(lineno, std::string("invalid ") + what + " '" + s + "'");
    }
    return std::stoul(s);
  };

  std::vector<std::string> tok;
  expect(tok, "leibniz-algebra");
  if (tok.size() != 2 || tok[1] != "1") throw AlgebraFileError(lineno, "unsupported format version");

  expect(tok, "dim");
  if (tok.size() != 2) throw AlgebraFileError(lineno, "dim takes one value");
  const std::size_t n = parse_count(tok[1], "dimension");
  if (n == 0 || n > kMaxAlgebraFileDim) {
    throw AlgebraFileError(lineno, "dimension " + tok[1] + " outside 1.." + std::to_string(kMaxAlgebraFileDim));
  }

  expect(tok, "labels");
  if (tok.size() != n + 1) throw AlgebraFileError(lineno, "expected " + std::to_string(n) + " labels");
  std::vector<std::string> labels(tok.begin() + 1, tok.end());
  if (std::set<std::string>(labels.begin(), labels.end()).size() != n) {
    throw AlgebraFileError(lineno, "duplicate basis label");
  }

  std::optional<Grading> grading;
  if (!next_line(tok)) throw AlgebraFileError(lineno, "unexpected end of file, expected 'products'");
  if (tok[0] == "grading") {
    if (tok.size() != n + 1) throw AlgebraFileError(lineno, "expected " + std::to_string(n) + " degrees");
    Grading g;
    for (std::size_t k = 1; k < tok.size(); ++k) {
      try {
        std::size_t used = 0;
        int d = std::stoi(tok[k], &used);
        if (used != tok[k].size()) throw std::invalid_argument(tok[k]);
        g.degrees.push_back(d);
      } catch (const std::exception&) {
        throw AlgebraFileError(lineno, "invalid degree '" + tok[k] + "'");
      }
    }
    grading = std::move(g);
    if (!next_line(tok)) throw AlgebraFileError(lineno, "unexpected end of file, expected 'products'");
  }
  if (tok[0] != "products" || tok.size() != 2) throw AlgebraFileError(lineno, "expected 'products <count>'");
  const std::size_t count = parse_count(tok[1], "record count");
  if (count > n * n * n) throw AlgebraFileError(lineno, "more product records than (i,j,k) triples");

  std::vector<AlgebraStructure::Product> products;
  std::set<std::tuple<Index, Index, Index>> seen;
  for (std::size_t r = 0; r < count; ++r) {
    if (!next_line(tok)) throw AlgebraFileError(lineno, "unexpected end of file in product record " + std::to_string(r + 1));
    if (tok.size() != 4) throw AlgebraFileError(lineno, "product record needs 4 fields");
    Index idx[3];
    for (int f = 0; f < 3; ++f) {
      std::size_t v = parse_count(tok[f], "basis index");
      if (v >= n) throw AlgebraFileError(lineno, "basis index " + tok[f] + " out of range");
      idx[f] = static_cast<Index>(v);
    }
    Rational c;
    try {
      c = Rational::parse(tok[3]);
    } catch (const std::exception& e) {
      throw AlgebraFileError(lineno, "bad coefficient: " + std::string(e.what()));
    }
    if (c.is_zero()) throw AlgebraFileError(lineno, "zero coefficient");
    if (!seen.emplace(idx[0], idx[1], idx[2]).second) {
      throw AlgebraFileError(lineno, "duplicate product record (" + tok[0] + ", " + tok[1] + ", " + tok[2] + ")");
    }
    products.push_back({idx[0], idx[1], idx[2], std::move(c)});
  }
  expect(tok, "end");
  if (tok.size() != 1) throw AlgebraFileError(lineno, "trailing tokens after 'end'");
  if (next_line(tok)) throw AlgebraFileError(lineno, "content after 'end'");

  return {AlgebraStructure(std::move(labels), products), std::move(grading)};
}

std::string format_algebra(const AlgebraStructure& a, const std::optional<Grading>& grading) {
  if (grading && grading->degrees.size() != a.dim()) throw std::invalid_argument("format_algebra: grading size mismatch");
  std::ostringstream out;
  out << "leibniz-algebra 1\n";
  out << "dim " << a.dim() << "\n";
  out << "labels";
  for (const auto& l : a.labels()) out << ' ' << l;
  out << "\n";
  if (grading) {
    out << "grading";
    for (int d : grading->degrees) out << ' ' << d;
    out << "\n";
  }
  auto products = a.products();
  out << "products " << products.size() << "\n";
  for (const auto& p : products) {
    out << p.left << ' ' << p.right << ' ' << p.result << ' ' << p.coeff.to_string() << "\n";
  }
  out << "end\n";
  return out.str();
}

AlgebraFile load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraFileError(0, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

void save(const AlgebraStructure& a, const std::optional<Grading>& grading, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << format_algebra(a, grading);
}

}  // namespace leibniz
