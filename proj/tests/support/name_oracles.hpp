#pragma once

// Test-only references for the name calculus: classical evaluation over HF
// sets, the textbook form of the atomic recursion, and a random name source.

#include <map>
#include <string>
#include <vector>

#include "bvm/fol/formula.hpp"
#include "bvm/fol/generator.hpp"
#include "bvm/names/hfset.hpp"
#include "bvm/names/name.hpp"

namespace oracle {

using bvm::names::HFSet;
using bvm::names::Name;

/// Tarskian truth in (universe, ∈); Vcheck holds of everything.
inline bool hf_holds(const bvm::fol::Formula& f, std::map<std::string, HFSet> env, const std::vector<HFSet>& universe) {
  using bvm::fol::Kind;
  switch (f.kind()) {
    case Kind::Relation:
      if (f.symbol() == bvm::fol::kGroundPredicate) return true;
      return env.at(f.args()[1]).contains(env.at(f.args()[0]));
    case Kind::Equal:
      return env.at(f.args()[0]) == env.at(f.args()[1]);
    case Kind::FunctionEqual:
      return false;
    case Kind::Not:
      return !hf_holds(f.child(0), env, universe);
    case Kind::And:
      return hf_holds(f.child(0), env, universe) && hf_holds(f.child(1), env, universe);
    case Kind::Exists:
      for (const auto& x : universe) {
        env[f.var()] = x;
        if (hf_holds(f.child(0), env, universe)) return true;
      }
      return false;
  }
  return false;
}

/// Atomic values with the pair-wise subset clause
///   ⟦τ⊆σ⟧ = ⋀_{⟨η,b⟩∈τ} (b → ⟦η∈σ⟧),
/// a different recursion that yields the same values.
enum class Rel { In, Eq, Sub };

inline bvm::ba::Bits textbook_atomic(const Name& t, const Name& s, Rel rel) {
  const bvm::ba::Bits full = bvm::ba::full_mask(t.atom_count());
  switch (rel) {
    case Rel::In: {
      bvm::ba::Bits v = 0;
      for (const auto& e : s.entries()) v |= textbook_atomic(t, e.name, Rel::Eq) & e.value.bits();
      return v;
    }
    case Rel::Eq:
      return textbook_atomic(t, s, Rel::Sub) & textbook_atomic(s, t, Rel::Sub);
    case Rel::Sub: {
      bvm::ba::Bits v = full;
      for (const auto& e : t.entries()) v &= (~e.value.bits() & full) | textbook_atomic(e.name, s, Rel::In);
      return v;
    }
  }
  return 0;
}

/// A random name of rank ≤ max_rank with at most `width` entries per level.
inline Name random_name(bvm::fol::Rng& rng, unsigned atoms, unsigned max_rank, unsigned width) {
  if (max_rank == 0 || rng.chance(15)) return Name(atoms);
  std::vector<bvm::names::NameEntry> entries;
  const unsigned k = static_cast<unsigned>(rng.below(width + 1));
  for (unsigned i = 0; i < k; ++i) {
    Name sub = random_name(rng, atoms, max_rank - 1, width);
    entries.push_back({sub, bvm::ba::Element(atoms, rng.below(bvm::ba::Bits{1} << atoms))});
  }
  return Name::make(atoms, std::move(entries));
}

}  // namespace oracle
