#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bvm/ba/algebra.hpp"

namespace bvm::ba {

/// Finite partial order in the forcing convention: p ≤ q means p is the
/// stronger condition. Nodes are indexed 0..size-1; at most 64 nodes.
class Poset {
 public:
  /// Builds the reflexive-transitive closure of the given pairs (p, q) meaning
  /// p ≤ q, and rejects the result if it is not antisymmetric.
  Poset(std::vector<std::string> nodes, const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs);
  /// Takes the relation as given and validates all three partial-order laws.
  static Poset from_matrix(const std::vector<std::vector<bool>>& leq, std::vector<std::string> nodes = {});

  std::size_t size() const { return nodes_.size(); }
  const std::string& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<std::string>& nodes() const { return nodes_; }
  std::size_t index_of(const std::string& label) const;

  bool leq(std::size_t p, std::size_t q) const { return (below_[q] >> p) & 1U; }
  /// Bitmask of {q : q ≤ p}.
  std::uint64_t cone(std::size_t p) const { return below_[p]; }
  /// Bitmask of {q : p ≤ q}.
  std::uint64_t upper(std::size_t p) const;
  bool compatible(std::size_t p, std::size_t q) const { return (below_[p] & below_[q]) != 0; }
  std::uint64_t minimal_mask() const;
  std::vector<std::size_t> minimal_elements() const;
  /// p ≰ q implies some r ≤ p is incompatible with q.
  bool is_separative() const;

 private:
  Poset() = default;
  void validate_antisymmetric() const;

  std::vector<std::string> nodes_;
  std::vector<std::uint64_t> below_;
};

struct RoCompletion {
  Algebra algebra;
  /// e(p): the set of minimal elements below p, as an element of `algebra`.
  std::vector<Element> embed;
  /// Node index of each atom.
  std::vector<std::size_t> atom_nodes;
  bool separative = false;
};

/// Regular-open completion via the minimal-element characterization.
RoCompletion ro_completion(const Poset& p);

struct RoOracle {
  /// Every regular open set (down-closed U with U = int(cl(U))) as a node bitmask, sorted.
  std::vector<std::uint64_t> regular_open;
  /// The minimal nonempty regular open sets.
  std::vector<std::uint64_t> atoms;
  Algebra algebra;
};

/// Definitional fallback: enumerates all down-closed subsets and tests regularity.
/// Refuses posets with more than 20 nodes.
RoOracle ro_oracle(const Poset& p);

struct RoAgreement {
  bool same_size = false;
  bool bijective = false;
  bool order_preserving = false;
  bool embedding_matches = false;
  bool dense = false;
  bool ok() const { return same_size && bijective && order_preserving && embedding_matches && dense; }
};

/// Compares the two constructions: S ⊆ minimals ↦ {q : minimals below q ⊆ S}
/// must be an order isomorphism onto the regular open sets, e(p) must map to
/// int(cl(↓p)), and every atom must lie below some e(p).
RoAgreement compare_ro(const Poset& p, const RoCompletion& completion, const RoOracle& oracle);

/// All partial orders on n nodes whose order extends the index order
/// (every finite poset has such a labelling). Refuses n > 7.
std::vector<Poset> naturally_labelled_posets(std::size_t n);

}  // namespace bvm::ba
