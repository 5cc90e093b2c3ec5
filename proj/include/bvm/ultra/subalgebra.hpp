#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bvm/ba/constructions.hpp"
#include "bvm/fol/formula.hpp"
#include "bvm/names/name.hpp"
#include "bvm/names/pool.hpp"
#include "bvm/ultra/quotient_model.hpp"
#include "bvm/ultra/ultrafilter.hpp"

namespace bvm::ultra {

struct SubalgebraRestriction {
  /// U₀ = U ∩ B on the block algebra.
  Ultrafilter u0;
  /// The block holding U's atom; U₀ is principal there.
  std::size_t block = 0;
};

/// Computes U ∩ B by membership transfer and validates it as an ultrafilter.
SubalgebraRestriction restrict_to_subalgebra(const Ultrafilter& u, const ba::Partition& p);

/// A B-name read as a C-name: every value pushed through the embedding.
names::Name embed_name(const names::Name& t, const ba::Partition& p);

struct ValueAgreement {
  std::size_t formulas = 0;
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> examples;
  bool ok() const { return mismatches == 0; }
};

/// e(⟦φ(τ⃗)⟧_B) = ⟦φ(e τ⃗)⟧_C for every assignment of B-pool names, one Boolean
/// table per formula on the C side shared by all partitions. Each B pool must
/// embed into the C pool up to Boolean equality 1. With `relativize`, φ is replaced by φ^V̌.
ValueAgreement subalgebra_value_agreement(const names::PoolModel& c_pool, const std::vector<ba::Partition>& partitions,
                                          const std::vector<const names::PoolModel*>& b_pools,
                                          const std::vector<fol::Formula>& formulas, bool relativize = true);

struct FactorMapReport {
  /// k([τ]_{U₀}) = [e τ]_U, defined on every class of the B quotient.
  std::vector<std::size_t> map;
  bool defined = true;
  bool well_defined = true;
  bool injective = true;
  bool preserves_membership = true;
  bool preserves_ground = true;
  /// k∘j_{U₀} = j_U on the fragment.
  bool commutes_with_j = true;
  /// V̌_{U₀} ⊨ φ(x⃗) ⇔ V̌_U ⊨ φ(k x⃗) on the sampled formulas.
  bool elementary = true;
  /// k(G₀) = G ∩ j_U(B) at the name level: the C-name for G restricted to
  /// the codes of B's elements equals the separation of Ġ_C by those codes.
  bool generic_clause = true;
  std::size_t instances = 0;
  bool ok() const {
    return defined && well_defined && injective && preserves_membership && preserves_ground && commutes_with_j &&
           elementary && generic_clause;
  }
};

/// qb is a quotient over B = p.algebra(), qc over C = p.parent(), with qb's
/// ultrafilter the restriction of qc's.
FactorMapReport check_factor_map(const QuotientModel& qb, const QuotientModel& qc, const ba::Partition& p,
                                 const std::vector<fol::Formula>& formulas = {});

}  // namespace bvm::ultra
