#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bvm/ba/algebra.hpp"
#include "bvm/ba/ideal.hpp"
#include "bvm/names/filter.hpp"

namespace bvm::ultra {

/// ∪F = {b ∈ B : [b]_I ∈ F} for a filter F on B/I.
names::Filter induced_filter(const ba::Algebra& b, const ba::Quotient& q, const names::Filter& f);

/// Checks that A is a maximal antichain modulo I: no member in I, pairwise
/// meets in I, and ¬∨A ∈ I.
bool is_maximal_antichain_mod(const ba::Ideal& i, const std::vector<ba::Element>& a);

/// Representatives b_a =_I a forming a maximal antichain of B, found by
/// backtracking over the candidates {b : b △ a ∈ I}. Empty when none exist.
/// Throws InputError unless A is a maximal antichain modulo I.
std::optional<std::vector<ba::Element>> disjointify(const ba::Algebra& b, const ba::Ideal& i,
                                                    const std::vector<ba::Element>& a);

/// Levels A_0, A_1, … of maximal antichains modulo I, each refining the last
/// modulo I. Throws InputError when the levels do not form such a tree.
using AntichainTree = std::vector<std::vector<ba::Element>>;
void validate_tree(const ba::Ideal& i, const AntichainTree& t);

/// Indices ⟨a_n⟩ starting at A_0[start] with a_{n+1} ≤_I a_n and ⋀ a_n ≠ 0, by
/// depth-first search with the running meet as pruning.
std::optional<std::vector<std::size_t>> tree_path(const ba::Algebra& b, const ba::Ideal& i, const AntichainTree& t,
                                                  std::size_t start);

struct IdealSuiteReport {
  std::size_t quotient_ultrafilters = 0;
  /// Every ultrafilter on B/I induces an ultrafilter on B.
  bool induced_ultra = true;
  /// Each induced filter avoids I.
  bool induced_avoids_ideal = true;
  bool ok() const { return induced_ultra && induced_avoids_ideal; }
};

/// Requires a proper join-closed ideal.
IdealSuiteReport ideal_suite(const ba::Algebra& b, const ba::Ideal& i);

}  // namespace bvm::ultra
