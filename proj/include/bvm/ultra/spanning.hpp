#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bvm/ba/antichain.hpp"
#include "bvm/fol/formula.hpp"
#include "bvm/fol/structure.hpp"
#include "bvm/names/hfset.hpp"
#include "bvm/names/name.hpp"
#include "bvm/ultra/quotient_model.hpp"
#include "bvm/ultra/ultrafilter.hpp"

namespace bvm::ultra {

/// f : A → HF on a maximal antichain A; values indexed like the antichain's members.
class SpanningFunction {
 public:
  SpanningFunction(ba::Antichain domain, std::vector<names::HFSet> values);
  /// c_x : {1} ↦ x.
  static SpanningFunction constant(const ba::Algebra& b, const names::HFSet& x);

  const ba::Antichain& domain() const { return domain_; }
  const std::vector<names::HFSet>& values() const { return values_; }
  const names::HFSet& at(std::size_t i) const { return values_[i]; }
  /// Value on the member containing the atom.
  const names::HFSet& at_atom(unsigned atom) const;

  friend bool operator==(const SpanningFunction&, const SpanningFunction&) = default;
  friend auto operator<=>(const SpanningFunction& a, const SpanningFunction& b) {
    if (auto c = a.domain_ <=> b.domain_; c != 0) return c;
    return a.values_ <=> b.values_;
  }

 private:
  ba::Antichain domain_;
  std::vector<names::HFSet> values_;
};

/// f↓B: copies values along the refinement. Throws InputError if B does not refine dom f.
SpanningFunction sf_reduce(const SpanningFunction& f, const ba::Antichain& finer);

/// ⋁{c ∈ C : f↓C(c) = g↓C(c)} over the common refinement C.
ba::Element sf_agreement(const SpanningFunction& f, const SpanningFunction& g);
/// ⋁{c ∈ C : f↓C(c) ∈ g↓C(c)}.
ba::Element sf_membership(const SpanningFunction& f, const SpanningFunction& g);
bool sf_equiv(const SpanningFunction& f, const SpanningFunction& g, const Ultrafilter& u);
bool sf_member(const SpanningFunction& f, const SpanningFunction& g, const Ultrafilter& u);

/// ⋁{c ∈ C : (fragment, ∈) ⊨ φ(f⃗↓C(c))}, C the common refinement of all domains.
/// Every value must lie in the fragment.
ba::Element sf_satisfaction(const fol::Formula& f, const std::map<std::string, SpanningFunction>& args,
                            const std::vector<names::HFSet>& fragment);

/// τ_f: the mix over dom f of the check names f(a)̌.
names::Name sf_name(const SpanningFunction& f, const ba::Algebra& b);

/// The functional presentation over a finite HF fragment: every spanning
/// function on a declared family of maximal antichains (default: all of them)
/// with values in the fragment, modulo ≡_U.
class FunctionalModel {
 public:
  FunctionalModel(const ba::Algebra& b, Ultrafilter u, std::vector<names::HFSet> fragment,
                  std::vector<ba::Antichain> family = {});

  const ba::Algebra& algebra() const { return algebra_; }
  const Ultrafilter& ultrafilter() const { return u_; }
  const std::vector<names::HFSet>& fragment() const { return fragment_; }
  const std::vector<ba::Antichain>& family() const { return family_; }
  const std::vector<SpanningFunction>& elements() const { return elements_; }
  std::optional<std::size_t> index_of(const SpanningFunction& f) const;

  std::size_t class_count() const { return reps_.size(); }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }
  std::size_t representative(std::size_t cls) const { return reps_[cls]; }
  bool in(std::size_t c, std::size_t d) const;
  /// j(x) = [c_x]_U.
  std::size_t j(const names::HFSet& x) const;

  /// Classes with ∈ (Vcheck holds everywhere).
  const fol::ClassicalStructure& structure() const { return model_; }
  bool holds(const fol::Formula& f, const fol::Assignment& elements) const;

 private:
  ba::Algebra algebra_;
  Ultrafilter u_;
  std::vector<names::HFSet> fragment_;
  std::vector<ba::Antichain> family_;
  std::vector<SpanningFunction> elements_;
  std::map<SpanningFunction, std::size_t> index_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> reps_;
  fol::ClassicalStructure model_;
};

/// Functional Łoś: for all assignments of φ's free variables to elements,
///   model ⊨ φ([f⃗]) ⇔ sf_satisfaction(φ, f⃗) ∈ U.
LosReport sf_los(const FunctionalModel& m, const fol::Formula& f);

/// f : D → HF on an open dense D ⊆ B⁺ with f(b) = f(c) whenever b ≤ c ∈ D.
class OpenDenseFunction {
 public:
  /// Validates openness, density and coherence.
  OpenDenseFunction(const ba::Algebra& b, std::map<ba::Bits, names::HFSet> values);
  /// f̃ : every b below a member a of dom f gets f(a).
  static OpenDenseFunction from_spanning(const ba::Algebra& b, const SpanningFunction& f);

  const std::map<ba::Bits, names::HFSet>& values() const { return values_; }

 private:
  unsigned n_;
  std::map<ba::Bits, names::HFSet> values_;
};

/// ⋁{b ∈ D ∩ D' : f(b) = g(b)}.
ba::Element od_agreement(const OpenDenseFunction& f, const OpenDenseFunction& g, const ba::Algebra& b);

struct IsoReport {
  /// Functional class → quotient class.
  std::vector<std::size_t> map;
  bool defined = true;
  bool well_defined = true;
  bool injective = true;
  /// Onto the ground classes V̌_U.
  bool onto = true;
  bool preserves_membership = true;
  /// π(j(x)) = j_U(x) on the fragment.
  bool commutes_with_j = true;
  bool ok() const { return defined && well_defined && injective && onto && preserves_membership && commutes_with_j; }
};

/// π : [f]_U ↦ [τ_f]_U from the functional to the name presentation.
IsoReport presentations_iso(const FunctionalModel& fm, const QuotientModel& qm);

}  // namespace bvm::ultra
