#pragma once

// Random rank-mode inputs whose sequences are exact by construction.

#include <cstdint>

#include "stringy/stratified.hpp"

namespace stringy::generate {

struct Options {
  std::size_t n = 0;        // 0: pick 1..3 at random
  bool dual_link = true;    // dims_L[k] == dims_L[2n-1-k], mirrored map ranks
  std::size_t max_dim = 4;  // bound on each link Betti number and each b_k
};

/// Same seed and options always give the same input. With dual_link the
/// ranks are mirrored (c_{2n-k} = a_k, b_{2n-k} = b_k) so that the stringy
/// table is palindromic.
stratified::RankInput random_rank_input(std::uint64_t seed, const Options& opts = {});

}  // namespace stringy::generate
