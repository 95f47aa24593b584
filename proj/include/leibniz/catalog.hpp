#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// sl2 on the basis (e, f, h).
AlgebraStructure sl2();

/// The (m+4)-dimensional simple Leibniz algebra sl2 + V_m on the basis
/// (e, f, h, x_0, ..., x_m), graded by G = span{e,f,h} in degree 0 and
/// I = span{x_k} in degree 1. Requires m >= 2.
std::pair<AlgebraStructure, Grading> simple_leibniz_sl2(int m);

/// V_m as a bimodule over sl2(): right actions
///   [x_k, e] = -k(m+1-k) x_{k-1},  [x_k, f] = x_{k+1},  [x_k, h] = (m-2k) x_k
/// and zero left action. Requires m >= 0.
Bimodule irreducible_sl2_module(int m);

/// Returns the Lie algebra unchanged as a Leibniz algebra after checking
/// antisymmetry and the Jacobi identity; throws std::invalid_argument otherwise.
AlgebraStructure lie_as_leibniz(const AlgebraStructure& lie);

/// Block-diagonal direct sum; colliding labels of the second summand get a
/// trailing apostrophe.
AlgebraStructure direct_sum(const AlgebraStructure& a, const AlgebraStructure& b);
Grading direct_sum(const Grading& a, const Grading& b);

/// Failure to read an algebra file; line() is 1-based, 0 when not tied to a line.
class AlgebraFileError : public std::runtime_error {
 public:
  AlgebraFileError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct AlgebraFile {
  AlgebraStructure algebra;
  std::optional<Grading> grading;
};

/// Largest dimension accepted by the file reader.
inline constexpr std::size_t kMaxAlgebraFileDim = 4096;

AlgebraFile parse_algebra(const std::string& text);
std::string format_algebra(const AlgebraStructure& a, const std::optional<Grading>& grading);

AlgebraFile load(const std::filesystem::path& path);
void save(const AlgebraStructure& a, const std::optional<Grading>& grading, const std::filesystem::path& path);

}  // namespace leibniz
