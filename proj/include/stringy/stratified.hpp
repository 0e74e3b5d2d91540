#pragma once

// A compact 2n-dimensional space with one isolated singular point y, and
// the exact sequence
//
//   ... -> H^k_c(c°L) -a-> H^k_c(Y°) -b-> H^k(Y°) -c-> H^{k+1}_c(c°L) -> ...
//
// that every later computation reads from. L is the link of y and Y° = Y - y.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stringy/qlinalg.hpp"
#include "stringy/simplicial.hpp"

namespace stringy::stratified {

using qlinalg::Matrix;
using simplicial::ExactSequence;
using simplicial::GradedDims;
using simplicial::SimplicialComplex;

struct StratifiedSpace {
  SimplicialComplex complex;
  std::string singular_vertex;
  std::size_t half_dim = 0;
  SimplicialComplex link;
};

/// Validates the simple-stratified-space data: dim Y = 2n, the link of y is
/// a nonempty (2n-1)-pseudomanifold, the closed star of y is the cone on
/// that link, and no other vertex is singular (each other vertex link is a
/// (2n-1)-pseudomanifold with the rational cohomology of a sphere).
/// Throws InputError for an unknown vertex or n = 0, ValidationError for
/// the geometric checks.
StratifiedSpace build_stratified(const SimplicialComplex& k, const std::string& y, std::size_t n);

enum class Provenance { simplicial, rank_mode };

std::string to_string(Provenance p);

struct CohomologyPackage {
  std::size_t n = 0;
  GradedDims dims_Y;       // H^k(Y)
  GradedDims dims_Yo;      // H^k(Y°)
  GradedDims dims_Yo_c;    // H^k_c(Y°)
  GradedDims dims_cone_c;  // H^k_c(c°L), degrees 0..2n
  GradedDims dims_L;       // H^k(L), degrees 0..2n-1
  // Per degree k = 0..2n:
  //   a[k] : H^k_c(c°L) -> H^k_c(Y°)
  //   b[k] : H^k_c(Y°)  -> H^k(Y°)
  //   c[k] : H^k(Y°)    -> H^{k+1}_c(c°L)   (c[2n] has zero rows)
  std::vector<Matrix> a, b, c;
  Provenance provenance = Provenance::simplicial;
  std::vector<std::string> notes;

  std::size_t top_degree() const noexcept { return 2 * n; }
  /// The sequence as a flat list of 3(2n+1) labeled terms.
  ExactSequence sequence() const;
};

/// Shapes agree with the dims and the sequence is exact at every term.
/// Returns the labels of failing terms; empty means valid.
std::vector<std::string> package_problems(const CohomologyPackage& pkg);

/// Realizes the sequence from the triangulation as the long exact sequence
/// of the triple {y} ⊂ Y₁ ⊔ {y} ⊂ Y, where Y₁ is the full subcomplex off y:
///   H^k(Y, Y₁⊔y) ≅ H^k_c(c°L),  H^k(Y, y) ≅ H^k_c(Y°),  H^k(Y₁⊔y, y) ≅ H^k(Y°).
/// Throws InternalError if the result is not exact or an identification fails.
CohomologyPackage assemble_package_simplicial(const StratifiedSpace& s);

/// Rank-mode payload. Exactly one of `ranks` / `matrices` is set; each has
/// one entry per degree 0..2n holding the (a, b, c) maps of that degree.
struct RankInput {
  std::size_t n = 0;
  std::vector<std::size_t> dims_Y, dims_Yo, dims_Yo_c, dims_L;
  std::optional<std::vector<std::array<std::size_t, 3>>> ranks;
  std::optional<std::vector<std::array<Matrix, 3>>> matrices;
};

/// H^k_c(c°L) = H^{k-1}(L) for k >= 1 and 0 in degree 0.
GradedDims cone_dims_from_link(const std::vector<std::size_t>& dims_L, std::size_t n);

/// Builds a package from user-supplied dimensions. Ranks are expanded to
/// 0/1 matrices whose images chain so the sequence is exact exactly when
/// the ranks satisfy rank(in) + rank(out) = dim at every term. Throws
/// InputError for missing degrees, out-of-bounds ranks, wrong matrix
/// shapes, or data that violates exactness (naming the failing terms).
CohomologyPackage assemble_package_ranks(const RankInput& input);

/// Inverse of assemble_package_ranks for ranks: reads the map ranks back.
RankInput to_rank_input(const CohomologyPackage& pkg);

struct SupportCheckReport {
  std::vector<bool> support_ok;    // degrees 0..2n; condition applies for k > n
  std::vector<bool> cosupport_ok;  // degrees 0..2n; condition applies for k < n
  std::vector<std::string> notes;

  bool all_ok() const;
};

/// Checks the stringy table against the vanishing conditions' consequences:
/// H^i(S₀) = H^i(Y°) for i < n and H^i(S₀) = H^i_c(Y°) (≅ H^i(Y)) for i > n.
SupportCheckReport support_cosupport_check(const CohomologyPackage& pkg, const GradedDims& s0_table);

}  // namespace stringy::stratified
