#include "stringy/generate.hpp"

#include <random>

namespace stringy::generate {

stratified::RankInput random_rank_input(std::uint64_t seed, const Options& opts) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };

  const std::size_t n = opts.n == 0 ? pick(1, 3) : opts.n;
  const std::size_t top = 2 * n;
  std::vector<std::size_t> L(top);
  std::vector<std::size_t> a(top + 1, 0), b(top + 1, 0), c(top + 1, 0);

  // Exactness of  cone_c[k] -a-> Yo_c[k] -b-> Yo[k] -c-> cone_c[k+1]  with
  // cone_c[k] = L[k-1] amounts to c_{k-1} + a_k = L[k-1]; Yo_c and Yo are
  // then a_k + b_k and b_k + c_k.
  if (opts.dual_link) {
    for (std::size_t k = 1; k <= n; ++k) {
      L[k - 1] = pick(0, opts.max_dim);
      L[top - k] = L[k - 1];
      a[k] = pick(0, L[k - 1]);
      c[k - 1] = L[k - 1] - a[k];
    }
    for (std::size_t k = 0; k <= n; ++k) {
      b[k] = pick(0, opts.max_dim);
      b[top - k] = b[k];
    }
    for (std::size_t k = 1; k <= n; ++k) {
      c[top - k] = a[k];
      a[top - k + 1] = c[k - 1];
    }
  } else {
    for (std::size_t k = 1; k <= top; ++k) {
      L[k - 1] = pick(0, opts.max_dim);
      a[k] = pick(0, L[k - 1]);
      c[k - 1] = L[k - 1] - a[k];
    }
    for (std::size_t k = 0; k <= top; ++k) b[k] = pick(0, opts.max_dim);
  }

  stratified::RankInput in;
  in.n = n;
  in.dims_L = L;
  std::vector<std::array<std::size_t, 3>> ranks;
  for (std::size_t k = 0; k <= top; ++k) {
    in.dims_Yo_c.push_back(a[k] + b[k]);
    in.dims_Yo.push_back(b[k] + c[k]);
    ranks.push_back({a[k], b[k], c[k]});
  }
  in.dims_Y = in.dims_Yo_c;
  in.dims_Y[0] += 1;
  in.ranks = std::move(ranks);
  return in;
}

}  // namespace stringy::generate
