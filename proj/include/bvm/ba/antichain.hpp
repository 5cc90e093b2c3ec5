#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bvm/ba/algebra.hpp"

namespace bvm::ba {

/// Nonzero, pairwise disjoint.
bool is_antichain(std::span<const Element> xs);
/// Nonzero, pairwise disjoint, join = 1.
bool is_maximal_antichain(std::span<const Element> xs);

/// A validated antichain. Members are kept sorted by bit pattern so that
/// index-based data (spanning-function values, refinement maps) is canonical.
class Antichain {
 public:
  Antichain() = default;
  explicit Antichain(std::vector<Element> members);

  /// The partition of the atom set into singletons.
  static Antichain atoms(const Algebra& b);
  static Antichain trivial(const Algebra& b);

  std::size_t size() const { return members_.size(); }
  const Element& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Element>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  unsigned atom_count() const { return members_.empty() ? 0 : members_.front().atom_count(); }

  bool maximal() const { return maximal_; }
  Element join() const;
  std::optional<std::size_t> index_of(Element e) const;
  /// Index of the (unique, for nonzero e) member above e.
  std::optional<std::size_t> index_above(Element e) const;
  /// Index of the member containing the given atom.
  std::optional<std::size_t> index_of_atom(unsigned atom) const;
  /// Every member lies below some member of `coarser`.
  bool refines(const Antichain& coarser) const;
  /// Join of the members selected by a bitmask over indices.
  Element join_of(std::uint64_t index_mask) const;

  friend bool operator==(const Antichain&, const Antichain&) = default;
  friend auto operator<=>(const Antichain& a, const Antichain& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<Element> members_;
  bool maximal_ = false;
};

/// For each member of the refinement, the index of the member above it.
using RefinementMap = std::vector<std::size_t>;

struct CommonRefinement {
  Antichain common;
  RefinementMap to_first;
  RefinementMap to_second;
};

/// Nonzero pairwise meets of two maximal antichains.
CommonRefinement common_refinement(const Antichain& a, const Antichain& b);

/// Map from the members of `fine` to the members of `coarse`; throws if `fine` does not refine.
RefinementMap refinement_map(const Antichain& fine, const Antichain& coarse);

/// All maximal antichains, i.e. all partitions of the atom set. Refuses beyond 10 atoms.
std::vector<Antichain> all_maximal_antichains(const Algebra& b);

/// Smallest family containing the given maximal antichains and closed under common refinement.
std::vector<Antichain> refinement_closure(std::vector<Antichain> family);

}  // namespace bvm::ba
