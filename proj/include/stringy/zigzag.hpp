#pragma once

// Zig-zag objects: a four-term exact sequence
//
//     left --alpha--> K --beta--> C --gamma--> right
//
// with left = H^{n-1} and right = H^n of the link data, plus the duality
// that reverses the sequence and transposes every map.

#include <cstddef>
#include <optional>
#include <string>

#include "stringy/qlinalg.hpp"
#include "stringy/stratified.hpp"

namespace stringy::zigzag {

using qlinalg::Matrix;

struct ZigZagObject {
  std::size_t left_dim = 0;
  std::size_t K_dim = 0;
  std::size_t C_dim = 0;
  std::size_t right_dim = 0;
  Matrix alpha;  // K x left
  Matrix beta;   // C x K
  Matrix gamma;  // right x C
  /// Only the constant local system is supported; kept as a label.
  std::string local_system = "Q";

  friend bool operator==(const ZigZagObject&, const ZigZagObject&) = default;
};

bool shape_valid(const ZigZagObject& z);

/// Exact at K and at C. Throws InputError if shapes are inconsistent.
bool check_zigzag_exact(const ZigZagObject& z);

/// The object built from the middle-degree maps of a package:
///   K = im(a_n) ⊂ H^n_c(Y°),  C = im(c_n) ⊂ H^{n+1}_c(c°L),
/// alpha the corestriction of a_n, beta = 0, gamma the inclusion of C.
/// Throws InternalError if the result is not exact.
ZigZagObject make_theta0(const stratified::CohomologyPackage& pkg);

/// (right*, C*, K*, left*) with maps gamma^T, beta^T, alpha^T.
ZigZagObject dualize(const ZigZagObject& z);

struct ZigZagMorphism {
  Matrix map_left;
  Matrix map_K;
  Matrix map_C;
  Matrix map_right;

  friend bool operator==(const ZigZagMorphism&, const ZigZagMorphism&) = default;
};

/// All three squares commute: map_K·α = α'·map_left, map_C·β = β'·map_K,
/// map_right·γ = γ'·map_C. False on any shape mismatch.
bool commutes(const ZigZagObject& source, const ZigZagObject& target, const ZigZagMorphism& m);

ZigZagMorphism identity_morphism(const ZigZagObject& z);

/// g ∘ f. Throws InputError when the component shapes do not chain.
ZigZagMorphism compose(const ZigZagMorphism& g, const ZigZagMorphism& f);

/// Componentwise inverse, or nullopt when some component is singular.
std::optional<ZigZagMorphism> inverse(const ZigZagMorphism& m);

/// Vertical maps of an isomorphism z -> dualize(z).
struct DualityWitness {
  Matrix kappa;   // left  -> right*
  Matrix lambda;  // K     -> C*
  Matrix nu;      // C     -> K*
  Matrix xi;      // right -> left*

  ZigZagMorphism as_morphism() const { return {kappa, lambda, nu, xi}; }
};

enum class WitnessStatus {
  found,
  dims_mismatch,           // left != right or K != C
  no_invertible_solution,  // commuting maps exist but none is invertible
  undecided,               // block too large for the exact decision; probes failed
};

std::string to_string(WitnessStatus s);

struct WitnessResult {
  WitnessStatus status = WitnessStatus::undecided;
  std::optional<DualityWitness> witness;
  std::size_t solution_space_dim = 0;
  std::string detail;
};

/// Solves the commuting-square equations for (kappa, lambda, nu, xi) and
/// looks for an invertible point of the solution space: first its basis
/// vectors, then integer combinations with coefficients in -2..2
/// (0, 1, -1, 2, -2 per coordinate, lexicographically), then an exact
/// decision on the determinants of the four blocks as polynomials in the
/// solution-space coordinates. Every returned witness has passed
/// verify_witness. Throws InputError when z is not exact.
WitnessResult find_duality_witness(const ZigZagObject& z);

/// Re-checks invertibility of all four maps and commutativity of every square.
bool verify_witness(const ZigZagObject& z, const DualityWitness& w);

}  // namespace stringy::zigzag
