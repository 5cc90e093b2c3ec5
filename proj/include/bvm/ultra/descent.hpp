#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bvm/ba/algebra.hpp"
#include "bvm/ba/antichain.hpp"
#include "bvm/names/hfset.hpp"
#include "bvm/ultra/ultrafilter.hpp"

namespace bvm::ultra {

/// A finite sequence b_0 ≥ b_1 ≥ … checked against the descent clauses.
/// Continuity is vacuous at finite length, and the meet is the last term.
struct DescentCheck {
  bool starts_at_one = false;
  bool inside_u = false;
  bool descending = false;
  bool meet_zero = false;
  bool strict = false;
  /// d_α = b_α − b_{α+1}, with the meet standing in after the last term.
  std::vector<ba::Element> differences;
  /// The differences (zeros dropped) partition 1; equivalent to meet_zero.
  bool differences_maximal = false;
  bool is_descent() const { return starts_at_one && inside_u && descending && meet_zero; }
};

DescentCheck verify_descent(const Ultrafilter& u, const std::vector<ba::Element>& terms);

struct DescentSpectrum {
  /// Order types admitting a descent; always empty on a finite algebra.
  std::vector<std::size_t> order_types;
  /// ⋀U, the floor every term of a sequence through U stays above.
  ba::Element meet_of_u;
  std::string reason;
};

/// Every sequence through U stays above ⋀U, which is U's atom, so no
/// finite sequence reaches meet 0.
DescentSpectrum finite_descent_spectrum(const ba::Algebra& b, const Ultrafilter& u);

struct RelativeMeet {
  ba::Antichain c;
  bool met = false;
  /// For each member of A, the index in C of the chosen c_a ≤ a.
  std::vector<std::size_t> choice;
};

struct RelativeGenericityReport {
  std::vector<RelativeMeet> meets;
  bool generic_relative = true;
};

/// U meets C relative to A when some choice c_a ≤ a from C has ⋁c_a ∈ U.
/// Since U is an ultrafilter, the join lies in U iff one of the c_a does, so
/// the search tries the U-members first. Members of the family that do not
/// refine A are rejected.
RelativeGenericityReport relative_genericity(const Ultrafilter& u, const ba::Antichain& a,
                                             const std::vector<ba::Antichain>& family);

struct ClassicalReport {
  bool generic_relative = false;
  /// π_{A,C} is onto for every declared C refining A.
  bool connecting_maps_onto = false;
  /// π_{A,∞} is a bijection onto the limit, so j_U ≅ j_{U_A}.
  bool limit_is_factor = false;
  bool agrees() const { return generic_relative == connecting_maps_onto && connecting_maps_onto == limit_is_factor; }
};

/// The three conditions on the direct-limit system over A and the family.
ClassicalReport classical_iff_check(const ba::Algebra& b, const Ultrafilter& u, const ba::Antichain& a,
                                    const std::vector<ba::Antichain>& family,
                                    const std::vector<names::HFSet>& fragment);

}  // namespace bvm::ultra
