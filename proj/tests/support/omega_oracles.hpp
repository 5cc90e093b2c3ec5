#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "bvm/omega/upset.hpp"

namespace oracle {

// Raw, unnormalized data plus a pointwise membership test, kept apart from UPSet.
struct RawSet {
  std::uint64_t n = 0, p = 1;
  std::vector<bool> pat, pre;
  bool has(std::uint64_t k) const { return k < n ? pre[k] : pat[k % p]; }
  bvm::omega::UPSet build() const {
    std::vector<std::uint64_t> rs, ks;
    for (std::uint64_t r = 0; r < p; ++r)
      if (pat[r]) rs.push_back(r);
    for (std::uint64_t k = 0; k < n; ++k)
      if (pre[k]) ks.push_back(k);
    return bvm::omega::UPSet::make(n, p, rs, ks);
  }
};

inline RawSet random_raw(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> nd(0, 20), pd(1, 12), coin(0, 1);
  RawSet s;
  s.n = nd(rng);
  s.p = pd(rng);
  for (std::uint64_t r = 0; r < s.p; ++r) s.pat.push_back(coin(rng));
  for (std::uint64_t k = 0; k < s.n; ++k) s.pre.push_back(coin(rng));
  return s;
}

// Eventually contains every multiple of some m: tested on a window long
// enough to hold a full period of multiples of lcm(m, p) past the threshold.
inline bool multiples_oracle(const RawSet& s) {
  for (std::uint64_t m = 1; m <= s.p; ++m) {
    const std::uint64_t lo = s.n + 1, hi = lo + 2 * std::lcm(m, s.p) * m;
    bool all = true;
    for (std::uint64_t k = (lo + m - 1) / m * m; k <= hi && all; k += m) all = s.has(k);
    if (all) return true;
  }
  return false;
}

inline std::uint64_t window(const RawSet& a, const RawSet& b) {
  return 2 * std::lcm(a.p, b.p) + std::max(a.n, b.n) + 4;
}

}  // namespace oracle
