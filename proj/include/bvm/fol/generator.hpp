#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bvm/fol/formula.hpp"

namespace bvm::fol {

/// Small deterministic generator (splitmix64) so that samples are identical
/// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  std::uint64_t state_;
};

struct SampleOptions {
  unsigned max_depth = 3;
  /// Variables used for atoms and quantifiers.
  std::vector<std::string> variables{"x", "y", "z"};
  /// Upper bound on free variables of each sampled formula.
  unsigned max_free = 2;
};

/// `count` pairwise distinct formulas over the signature's relations and
/// equality (function atoms when the signature has functions), each of depth
/// at most max_depth. Throws SizeError when the grammar cannot supply `count`
/// distinct formulas.
std::vector<Formula> sample_formulas(const Signature& sig, std::size_t count, std::uint64_t seed,
                                     const SampleOptions& options = {});

}  // namespace bvm::fol
