#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bvm/fol/formula.hpp"
#include "bvm/fol/structure.hpp"
#include "bvm/names/pool.hpp"
#include "bvm/ultra/ultrafilter.hpp"

namespace bvm::ultra {

/// V^B/U restricted to a pool: classes of pool names under ⟦τ=σ⟧ ∈ U, with
/// ∈_U and V̌_U read off U-membership of the Boolean values. Each class is
/// keyed by its first member in pool order, which is a minimal-rank name with
/// the structural order as tie-break. Minimality is relative to the pool.
class QuotientModel {
 public:
  QuotientModel(std::shared_ptr<const names::PoolModel> pool, Ultrafilter u);

  const names::PoolModel& pool_model() const { return *pool_; }
  const names::NamePool& pool() const { return pool_->pool(); }
  const Ultrafilter& ultrafilter() const { return u_; }

  std::size_t class_count() const { return reps_.size(); }
  std::size_t class_of(std::size_t pool_index) const { return class_of_[pool_index]; }
  const std::vector<std::size_t>& class_map() const { return class_of_; }
  /// Pool index of the class representative.
  std::size_t representative(std::size_t cls) const { return reps_[cls]; }
  bool in(std::size_t c, std::size_t d) const;
  bool vcheck(std::size_t c) const;
  /// Classes inside V̌_U, ascending.
  const std::vector<std::size_t>& ground_classes() const { return ground_; }

  /// Class U-equal to an arbitrary name, if the pool has one.
  std::optional<std::size_t> class_of_name(const names::Name& t) const;
  /// j_U(x) = [x̌]_U, when x̌ is in the pool.
  std::optional<std::size_t> j(const names::HFSet& x) const;

  /// Classes with ∈ and Vcheck.
  const fol::ClassicalStructure& structure() const { return model_; }
  /// The submodel V̌_U on ground_classes() (element i is ground_classes()[i]).
  const fol::ClassicalStructure& ground_structure() const { return ground_model_; }

  /// Truth with variables bound to pool names.
  bool holds(const fol::Formula& f, const fol::Assignment& pool_indices) const;

  /// =_U is a congruence for ∈_U and V̌_U on the pool (checked at construction).
  bool congruent() const { return congruent_; }

 private:
  std::shared_ptr<const names::PoolModel> pool_;
  Ultrafilter u_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> reps_;
  std::vector<std::size_t> ground_;
  fol::ClassicalStructure model_;
  fol::ClassicalStructure ground_model_;
  bool congruent_ = true;
};

struct LosReport {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<std::string> examples;
  bool ok() const { return failures == 0; }
  void merge(const LosReport& o);
};

/// For every assignment of φ's free variables to pool names:
///   V^B/U ⊨ φ([τ⃗]) ⇔ ⟦φ(τ⃗)⟧ ∈ U.
LosReport los_check(const QuotientModel& m, const fol::Formula& f);

/// For every assignment whose classes lie in V̌_U:
///   V̌_U ⊨ φ([τ⃗]) ⇔ ⟦φ^V̌(τ⃗)⟧ ∈ U,
/// with the left side evaluated in the submodel itself.
LosReport los_check_ground(const QuotientModel& m, const fol::Formula& f);

/// Both checks for several quotients of one pool, sharing each Boolean value table.
struct LosSweep {
  LosReport plain;
  LosReport ground;
};
LosSweep los_sweep(const names::PoolModel& pool, const std::vector<const QuotientModel*>& models,
                   const std::vector<fol::Formula>& formulas);

/// (fragment, ∈) as a two-valued structure in the set-theory signature; Vcheck holds everywhere.
fol::ClassicalStructure hf_structure(const std::vector<names::HFSet>& fragment);

struct TrivialityReport {
  /// HF sets whose check names are in the pool.
  std::size_t fragment_size = 0;
  std::size_t ground_classes = 0;
  bool injective = true;
  bool preserves_membership = true;
  /// Every class of V̌_U is j_U of something.
  bool onto = true;
  /// τ ↦ val(τ,U) identifies the same classes and the same ∈ as the quotient.
  bool val_collapse_agrees = true;
  /// j_U preserves the sampled formulas: fragment ⊨ φ(x⃗) ⇔ V̌_U ⊨ φ(j x⃗).
  bool elementary = true;
  std::size_t elementarity_instances = 0;
  std::string verdict;
  bool ok() const { return injective && preserves_membership && onto && val_collapse_agrees && elementary; }
};

/// Finite ultrafilters are principal, hence generic, so j_U should be an
/// isomorphism of the pool's HF fragment with V̌_U.
TrivialityReport generic_triviality(const QuotientModel& m, const std::vector<fol::Formula>& formulas = {});

struct GroundReport {
  /// [τ] ∈ V̌_U iff [τ] = [σ] for some σ with ⟦σ∈V̌⟧ = 1.
  bool representation = true;
  /// [τ] ∈_U [σ] ∈ V̌_U implies [τ] ∈ V̌_U.
  bool transitive = true;
  std::size_t pairs_checked = 0;
  bool ok() const { return representation && transitive; }
};

GroundReport check_ground_lemmas(const QuotientModel& m);

}  // namespace bvm::ultra
