#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/cochain.hpp"
#include "leibniz/linalg.hpp"

namespace leibniz {

struct GradedDims {
  std::size_t dim_z = 0;
  std::size_t dim_b = 0;
  std::size_t dim_h = 0;
  friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

struct CohomologyReport {
  unsigned n = 0;
  std::size_t dim_z = 0;
  std::size_t dim_b = 0;
  std::size_t dim_h = 0;
  std::map<int, GradedDims> graded;  // empty for ungraded reports
};

/// dim ker d^n (n <= 3).
std::size_t zl_dim(const AlgebraStructure& a, const Bimodule& m, unsigned n);
/// rank d^{n-1}, 0 for n = 0 (n <= 2).
std::size_t bl_dim(const AlgebraStructure& a, const Bimodule& m, unsigned n);
/// zl - bl (n <= 2).
std::size_t hl_dim(const AlgebraStructure& a, const Bimodule& m, unsigned n);

/// Ungraded ZL^n, BL^n, HL^n with coefficients in m (n <= 2).
CohomologyReport cohomology(const AlgebraStructure& a, const Bimodule& m, unsigned n);

/// ZL^n, BL^n, HL^n(L, L) split by the grading induced from g (n <= 2).
/// Also computes the ungraded totals and throws std::logic_error if the
/// graded pieces do not add up to them. Throws std::invalid_argument if g is
/// not a grading of a.
CohomologyReport graded_cohomology(const AlgebraStructure& a, const Grading& g, unsigned n);

/// Degree-i cocycles of CL^n(L, L): the kernel of the graded block of d^n,
/// expressed in the coordinates of `columns` (flat CL^n positions).
struct GradedCocycles {
  unsigned n = 2;
  int degree = 0;
  std::vector<Index> columns;
  Subspace cocycles;
};

GradedCocycles graded_cocycles(const AlgebraStructure& a, const Grading& g, unsigned n, int degree);

/// Dimensions of a degree-i cocycle space seen through a union of blocks:
/// projection_dim is the dimension of its image under the coordinate
/// projection onto the blocks, supported_dim that of the cocycles vanishing
/// outside them.
struct BlockAnalysis {
  int degree = 0;
  std::vector<std::string> blocks;  // signatures, e.g. "GxI->G"
  std::size_t cocycle_dim = 0;
  std::size_t projection_dim = 0;
  std::size_t supported_dim = 0;
  bool projection_injective = false;
};

/// Blocks may be named with or without the target ("GxI" or "GxI->G"); the
/// target is implied by the degree. Throws std::invalid_argument for a block
/// with no coordinates in that degree.
BlockAnalysis block_analysis(const GradedCocycles& z, const Grading& g, std::span<const std::string> blocks);
BlockAnalysis block_analysis(const AlgebraStructure& a, const Grading& g, int degree,
                             std::span<const std::string> blocks);

/// Coordinates (positions inside z.columns) of the named blocks.
std::vector<Index> block_positions(const GradedCocycles& z, const Grading& g, std::span<const std::string> blocks);

struct LieCoboundaryCheck {
  std::size_t projection_dim = 0;  // dim of ZL^2_(0) projected onto GxG->G
  std::size_t coboundary_dim = 0;  // dim of the Lie 2-coboundaries of G
  bool skew_symmetric = false;
  bool equals_coboundaries = false;
  bool holds() const { return skew_symmetric && equals_coboundaries; }
};

/// Compares the GxG->G part of degree-0 cocycles with the Lie 2-coboundaries
/// (x,y) -> [t x, y] + [x, t y] - t[x, y] of the degree-0 subalgebra G.
LieCoboundaryCheck gg_block_is_lie_coboundary(const AlgebraStructure& a, const Grading& g);

/// Chevalley-Eilenberg cohomology H^n(G, M) (n <= 2) of a Lie algebra with
/// the left action x.m = -[m, x] coming from the right action of m.
/// Throws std::invalid_argument if g is not Lie or m is not a right module.
std::size_t lie_ce_h(const AlgebraStructure& lie, const Bimodule& m, unsigned n);

/// Chevalley-Eilenberg coboundary C^n -> C^{n+1} on alternating cochains;
/// basis: increasing argument tuples, then module index, lexicographic.
SparseRationalMatrix ce_coboundary_matrix(const AlgebraStructure& lie, const Bimodule& m, unsigned n);

/// Leibniz cohomology HL^n(G, M) of a Lie algebra with coefficients in a
/// bimodule (n <= 2). Throws std::invalid_argument if an axiom fails.
std::size_t leibniz_h_with_coefficients(const AlgebraStructure& lie, const Bimodule& m, unsigned n);

}  // namespace leibniz
