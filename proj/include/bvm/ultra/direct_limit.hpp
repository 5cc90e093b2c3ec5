#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bvm/ba/antichain.hpp"
#include "bvm/fol/formula.hpp"
#include "bvm/fol/structure.hpp"
#include "bvm/names/hfset.hpp"
#include "bvm/names/name.hpp"
#include "bvm/ultra/spanning.hpp"
#include "bvm/ultra/ultrafilter.hpp"

namespace bvm::ultra {

/// U_A = {X ⊆ A : ∨X ∈ U} on the power set algebra of A (atom i = member i).
Ultrafilter induced_ultrafilter(const Ultrafilter& u, const ba::Antichain& a);

/// The classical ultrapower of the fragment by U_A. Functions A → fragment are
/// numbered by their value indices, member 0 least significant.
struct FactorModel {
  ba::Antichain antichain;
  Ultrafilter induced = Ultrafilter::principal(ba::Algebra(1), 0);
  std::size_t function_count = 0;
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> reps;
  fol::ClassicalStructure structure{1, fol::Signature::set_theory()};

  std::size_t class_count() const { return reps.size(); }
};

struct DirectLimitReport {
  std::size_t factors = 0;
  std::size_t refinement_pairs = 0;
  std::size_t identities_checked = 0;
  /// π_{A,B} and π_{A,∞} respect the classes.
  bool well_defined = true;
  /// π_{A,B}∘j_{U_A} = j_{U_B} and π_{A,∞}∘j_{U_A} = j.
  bool embedding_triangles = true;
  /// π_{A,∞} = π_{B,∞}∘π_{A,B}.
  bool limit_triangles = true;
  /// π_{B,C}∘π_{A,B} = π_{A,C}.
  bool composition = true;
  /// π_{A,B} preserves the sampled formulas.
  bool elementary = true;
  /// Threads of the system biject with the functional ultrapower.
  bool limit_bijective = true;
  std::size_t threads = 0;
  bool ok() const {
    return well_defined && embedding_triangles && limit_triangles && composition && elementary && limit_bijective;
  }
};

/// The system ⟨V^A/U_A, π_{A,B}⟩ over a declared family of maximal antichains
/// closed under common refinement, with limit maps into the functional
/// presentation of the Boolean ultrapower over the same family.
class DirectLimitSystem {
 public:
  DirectLimitSystem(const ba::Algebra& b, Ultrafilter u, std::vector<names::HFSet> fragment,
                    std::vector<ba::Antichain> family);

  const ba::Algebra& algebra() const { return limit_.algebra(); }
  const Ultrafilter& ultrafilter() const { return limit_.ultrafilter(); }
  const std::vector<names::HFSet>& fragment() const { return limit_.fragment(); }
  const std::vector<FactorModel>& factors() const { return factors_; }
  std::optional<std::size_t> factor_index(const ba::Antichain& a) const;
  const FunctionalModel& limit() const { return limit_; }

  /// Function number → spanning function on factor A.
  SpanningFunction function(std::size_t factor, std::size_t number) const;
  /// j_{U_A}(x) as a class of factor A.
  std::size_t j_factor(std::size_t factor, const names::HFSet& x) const;
  /// π_{A,B}([f]) = [f↓B] when B refines A.
  std::optional<std::size_t> connect(std::size_t from, std::size_t to, std::size_t cls) const;
  /// π_{A,∞}([f]_{U_A}) = [f]_U.
  std::size_t to_limit(std::size_t factor, std::size_t cls) const;

  DirectLimitReport verify(const std::vector<fol::Formula>& formulas = {}) const;

 private:
  std::size_t number_of(const std::vector<std::size_t>& digits) const;
  std::vector<std::size_t> digits_of(std::size_t number, std::size_t length) const;

  std::vector<FactorModel> factors_;
  FunctionalModel limit_;
};

/// x = j(f)(b_A): the spanning function on a factor antichain representing a
/// limit element, and the selector b_A, the unique member of j(A) in [Ġ]_U.
struct ExtenderRep {
  std::size_t factor = 0;
  SpanningFunction function;
  std::size_t selector = 0;
  /// ⟦τ_A ∈ Ǎ⟧ = ⟦τ_A ∈ Ġ⟧ = 1 and a ≤ ⟦ǎ = τ_A⟧ whenever a ≤ ⟦ǎ ∈ Ġ⟧: τ_A names b_A.
  bool selector_named = true;
  /// [τ_A]_U = j_U(the member of A in U).
  bool selector_is_selected = true;
  /// ⟦⟨τ_A, τ_f⟩ ∈ f̌⟧ = 1 and [τ_f]_U is the limit element.
  bool round_trip = true;
  bool ok() const { return selector_named && selector_is_selected && round_trip; }
};

ExtenderRep extender_rep(const DirectLimitSystem& s, std::size_t limit_class);

}  // namespace bvm::ultra
