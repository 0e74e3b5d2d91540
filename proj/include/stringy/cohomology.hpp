#pragma once

// Degree tables for the stringy (S₀), intersection (IC) and ordinary (Q)
// theories, plus the checks tying them together.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "stringy/qlinalg.hpp"
#include "stringy/stratified.hpp"

namespace stringy::cohomology {

using qlinalg::Matrix;
using simplicial::GradedDims;
using stratified::CohomologyPackage;

/// H^i(Y°) below n, H^i_c(Y°) (≅ H^i(Y)) above n, and in the middle
///   dim K₀ + dim H^n(Y°),   K₀ = im(a_n).
/// Throws InternalError when the second description,
///   dim H^n_c(Y°) + dim C₀,  C₀ = im(c_n),
/// disagrees.
GradedDims compute_S0(const CohomologyPackage& pkg);

/// Agrees with compute_S0 off the middle; middle = rank(b_n).
GradedDims compute_IC(const CohomologyPackage& pkg);

/// The ordinary cohomology of Y as carried by the package.
GradedDims compute_Q(const CohomologyPackage& pkg);

/// Model of the middle stringy group as K₀ ⊕ H^n(Y°), with
///   c : H^n_c(Y°) -> model,  (projection onto K₀ along a complement, b_n)
///   d : model -> H^n(Y°),    projection,
/// so that d·c = b_n.
struct MiddleMaps {
  Matrix c;
  Matrix d;
  bool c_injective = false;
  bool d_surjective = false;
};

MiddleMaps middle_maps(const CohomologyPackage& pkg);
std::pair<bool, bool> middle_maps_check(const CohomologyPackage& pkg);

/// dims[i] == dims[2n - i] for every i; false when the length is not 2n+1.
bool check_poincare(const GradedDims& dims, std::size_t n);

struct CohomologyReport {
  std::size_t n = 0;
  std::string provenance;
  GradedDims table_S0, table_IC, table_Q, table_Yo, table_Yo_c;
  std::size_t K0_dim = 0;
  std::size_t C0_dim = 0;
  bool ses_a_ok = false;  // 0 -> K₀ -> H^n(S₀) -> H^n(Y°) -> 0
  bool ses_b_ok = false;  // 0 -> H^n_c(Y°) -> H^n(S₀) -> C₀ -> 0
  bool middle_injection_ok = false;
  bool middle_surjection_ok = false;
  bool poincare_ok_S0 = false;
  bool poincare_ok_IC = false;
  bool poincare_ok_Q = false;
  stratified::SupportCheckReport support_report;
  std::vector<std::string> notes;

  friend bool operator==(const CohomologyReport& a, const CohomologyReport& b);
};

CohomologyReport build_report(const CohomologyPackage& pkg);

/// Homological reading of the stringy table. Over Q the dims agree with
/// the cohomology table degree by degree; the middle entry records both
/// constituents it is built from.
struct StringyHomology {
  GradedDims dims;
  std::size_t middle_from_Y = 0;        // dim H_n(Y), the K₀ side
  std::size_t middle_from_Y_minus = 0;  // dim H_n(Y - y), the C₀ side
  std::size_t K0_dim = 0;
  std::size_t C0_dim = 0;
};

StringyHomology compute_SH(const CohomologyReport& report);

/// Several isolated singular points: per-node link cohomology and the two
/// middle-degree maps
///   alpha2 : ⊕ H^{n-1}(L_b) -> H^n_c(Y°)   (dims_Y[n] rows)
///   gamma1 : H^n(Y°) -> ⊕ H^n(L_b)         (dims_Yo[n] columns)
struct MultiNodeData {
  std::size_t n = 0;
  std::vector<GradedDims> node_link_dims;
  GradedDims link_dims_total;
  GradedDims dims_Y;
  GradedDims dims_Yo;
  Matrix alpha2;
  Matrix gamma1;
};

struct ObstructionReport {
  std::size_t nodes = 0;
  bool alpha2_is_zero = false;
  bool gamma1_is_zero = false;
  bool c_injective = false;   // c ↔ β₂, injective iff α₂ = 0
  bool d_surjective = false;  // d ↔ β₁, surjective iff γ₁ = 0

  friend bool operator==(const ObstructionReport&, const ObstructionReport&) = default;
};

/// Throws InputError when the per-node dims do not sum to the totals or
/// the maps have the wrong shape.
ObstructionReport multinode_obstruction(const MultiNodeData& data);

/// The single-node package as r = 1 multi-node data: alpha2 has image
/// ker(c) and gamma1 has kernel im(d), with c, d from middle_maps.
MultiNodeData embed_single_node(const CohomologyPackage& pkg);

}  // namespace stringy::cohomology
