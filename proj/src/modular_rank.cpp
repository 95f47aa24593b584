#include <algorithm>
#include <array>
#include <optional>

#include "leibniz/linalg.hpp"

namespace leibniz {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

// Residue of a rational, or nullopt if p divides the denominator.
std::optional<u64> reduce(const Rational& q, u64 p) {
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class n = q.numerator();
  mpz_class d = q.denominator();
  mpz_class nr, dr;
  mpz_fdiv_r(nr.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
  mpz_fdiv_r(dr.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t());
  if (dr == 0) return std::nullopt;
  u64 nv = mpz_get_ui(nr.get_mpz_t());
  u64 dv = mpz_get_ui(dr.get_mpz_t());
  return mul_mod(nv, inv_mod(dv, p), p);
}

using ModRow = std::vector<std::pair<Index, u64>>;

}  // namespace

std::size_t modular_rank_single(const SparseRationalMatrix& m, u64 prime) {
  std::vector<ModRow> rows;
  rows.reserve(m.rows());
  for (const auto& r : m.row_data()) {
    ModRow mr;
    for (const auto& [c, v] : r) {
      auto x = reduce(v, prime);
      if (!x) return 0;  // unusable prime
      if (*x != 0) mr.emplace_back(c, *x);
    }
    if (!mr.empty()) rows.push_back(std::move(mr));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ModRow& a, const ModRow& b) { return a.size() < b.size(); });

  std::vector<std::int64_t> pivot_row(m.cols(), -1);
  std::vector<ModRow> echelon;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto [lead, val] = row.front();
      std::int64_t p = pivot_row[lead];
      if (p < 0) {
        u64 inv = inv_mod(val, prime);
        for (auto& e : row) e.second = mul_mod(e.second, inv, prime);
        pivot_row[lead] = static_cast<std::int64_t>(echelon.size());
        echelon.push_back(std::move(row));
        break;
      }
      const ModRow& pr = echelon[static_cast<std::size_t>(p)];
      u64 factor = val;  // pivot rows are monic
      ModRow out;
      out.reserve(row.size() + pr.size());
      auto ia = row.begin();
      auto ib = pr.begin();
      while (ia != row.end() || ib != pr.end()) {
        if (ib == pr.end() || (ia != row.end() && ia->first < ib->first)) {
          out.push_back(*ia++);
        } else {
          u64 sub = mul_mod(factor, ib->second, prime);
          if (ia == row.end() || ib->first < ia->first) {
            out.emplace_back(ib->first, (prime - sub) % prime);
            ++ib;
          } else {
            u64 v = (ia->second + prime - sub) % prime;
            if (v != 0) out.emplace_back(ia->first, v);
            ++ia;
            ++ib;
          }
        }
      }
      row = std::move(out);
    }
  }
  return echelon.size();
}

std::size_t modular_rank(const SparseRationalMatrix& m, std::span<const u64> primes) {
  std::size_t best = 0;
  for (u64 p : primes) best = std::max(best, modular_rank_single(m, p));
  return best;
}

std::span<const std::uint64_t> default_primes() {
  static constexpr std::array<std::uint64_t, 3> kPrimes = {2305843009213693951ULL, 4294967291ULL, 998244353ULL};
  return kPrimes;
}

}  // namespace leibniz
