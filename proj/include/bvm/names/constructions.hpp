#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bvm/ba/algebra.hpp"
#include "bvm/fol/formula.hpp"
#include "bvm/names/filter.hpp"
#include "bvm/names/hfset.hpp"
#include "bvm/names/name.hpp"
#include "bvm/names/pool.hpp"

namespace bvm::names {

/// τ = {⟨σ, b∧a⟩ : ⟨σ,b⟩ ∈ τ_a, a ∈ A}. Then a ≤ ⟦τ=τ_a⟧ for each a; equality
/// holds when A is maximal and the τ_a are pairwise ⟦≠⟧ = 1.
/// Throws InputError unless `a` is an antichain with one name per member.
Name mix(std::span<const ba::Element> a, std::span<const Name> parts);

/// Ġ = {⟨b̌, b⟩ : b ∈ B}, where b̌ is the check name of encode_element(b).
Name generic_name(const ba::Algebra& b);

/// The check name b̌ used inside Ġ.
Name element_check(ba::Element e, const ba::Algebra& b);

/// val(τ,F) = {val(σ,F) : ⟨σ,b⟩ ∈ τ, b ∈ F}.
HFSet val(const Name& t, const Filter& f);

/// Kuratowski pair of names {{a},{a,b}} with all values 1.
Name pair_name(const Name& a, const Name& b);

struct RankReport {
  unsigned name_rank = 0;
  /// rank(val(τ, U)) for the principal ultrafilter at each atom.
  std::vector<unsigned> value_ranks;
  /// rank(val) ≤ rank(τ) everywhere.
  bool bounded = true;
  /// Some ultrafilter attains rank(τ); fails for padded names of small sets.
  bool attained = false;
  std::vector<unsigned> violating_atoms;
};

RankReport rank_check(const Name& t, const ba::Algebra& b);

/// Default cap on |dom τ| · |B| for powerset_name (2^cap candidate subnames).
inline constexpr std::size_t kPowersetExponentCap = 12;

/// σ = {⟨η, ⟦η⊆τ⟧⟩ : η ⊆ dom(τ) × B}. Throws SizeError past the cap.
Name powerset_name(const Name& t, const ba::Algebra& b, std::size_t exponent_cap = kPowersetExponentCap);

/// {⟨σ, ⟦σ∈τ ∧ φ(σ)⟧⟩ : σ ∈ dom τ}, with φ's quantifiers ranging over the pool
/// enlarged by τ, dom τ and the parameter names.
Name separation_name(const Name& t, const fol::Formula& phi, const std::string& var, const NamePool& pool,
                     const NameAssignment& params = {});

}  // namespace bvm::names
