#include "bvm/fol/generator.hpp"

#include <set>

namespace bvm::fol {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % bound;
}

namespace {

class Sampler {
 public:
  Sampler(const Signature& sig, Rng& rng, const SampleOptions& opt) : sig_(sig), rng_(rng), opt_(opt) {
    for (const auto& [sym, arity] : sig.relations()) relations_.emplace_back(sym, arity);
    for (const auto& [sym, arity] : sig.functions()) functions_.emplace_back(sym, arity);
  }

  Formula formula(unsigned budget) {
    if (budget == 0 || rng_.chance(25)) return atom();
    switch (rng_.below(3)) {
      case 0:
        return Formula::negation(formula(budget - 1));
      case 1:
        return Formula::conjunction(formula(budget - 1), formula(budget - 1));
      default:
        return Formula::exists(var(), formula(budget - 1));
    }
  }

 private:
  const std::string& var() { return opt_.variables[rng_.below(opt_.variables.size())]; }

  std::vector<std::string> vars(unsigned k) {
    std::vector<std::string> out;
    for (unsigned i = 0; i < k; ++i) out.push_back(var());
    return out;
  }

  Formula atom() {
    const std::size_t choices = relations_.size() + functions_.size() + 1;
    std::size_t pick = rng_.below(choices);
    if (pick < relations_.size()) return Formula::relation(relations_[pick].first, vars(relations_[pick].second));
    pick -= relations_.size();
    if (pick < functions_.size()) {
      auto args = vars(functions_[pick].second);
      return Formula::function_equal(var(), functions_[pick].first, args);
    }
    return Formula::equal(var(), var());
  }

  const Signature& sig_;
  Rng& rng_;
  const SampleOptions& opt_;
  std::vector<std::pair<std::string, unsigned>> relations_;
  std::vector<std::pair<std::string, unsigned>> functions_;
};

}  // namespace

std::vector<Formula> sample_formulas(const Signature& sig, std::size_t count, std::uint64_t seed, const SampleOptions& options) {
  if (options.variables.empty()) throw InputError("sample_formulas: no variables");
  Rng rng(seed);
  Sampler sampler(sig, rng, options);
  std::vector<Formula> out;
  std::set<std::string> seen;
  std::size_t attempts = 0;
  const std::size_t max_attempts = 200 * count + 1000;
  while (out.size() < count) {
    if (++attempts > max_attempts) throw SizeError("sample_formulas: grammar too small for the requested count");
    Formula f = sampler.formula(options.max_depth);
    if (f.free_variables().size() > options.max_free) continue;
    if (seen.insert(to_string(f)).second) out.push_back(f);
  }
  return out;
}

}  // namespace bvm::fol
