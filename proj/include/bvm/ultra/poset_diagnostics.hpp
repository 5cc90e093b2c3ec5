#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bvm/ba/poset.hpp"

namespace bvm::ultra {

/// Node sets are bitmasks over the poset's indices.
using NodeSet = std::uint64_t;

/// A maximal antichain partitioned into labelled pieces. Two nonempty pieces
/// make a 2-split; the countable form lists only its nonempty pieces.
struct SplitAntichain {
  std::vector<NodeSet> pieces;
  NodeSet antichain() const;
};

/// Pairwise incompatible node sets that every node is compatible with. At most 20 nodes.
std::vector<NodeSet> maximal_antichains(const ba::Poset& p);
/// Every unordered split A = A₀ ⊔ A₁ into nonempty pieces.
std::vector<SplitAntichain> two_splits(const ba::Poset& p);

/// Nonempty, upward closed, and any two members have a common extension inside.
bool is_filter(const ba::Poset& p, NodeSet f);
/// All filters. At most 20 nodes.
std::vector<NodeSet> filters(const ba::Poset& p);
/// Filters not properly contained in another filter.
std::vector<NodeSet> maximal_filters(const ba::Poset& p);

/// p ⊥ q for every q in the node set.
bool incompatible_with_all(const ba::Poset& p, std::size_t node, NodeSet s);

/// Some p ∈ F and some piece n with p incompatible with every other piece.
/// For two pieces this is p ⊥ A₀ or p ⊥ A₁.
bool weakly_decides(const ba::Poset& p, NodeSet f, const SplitAntichain& split);

/// {b ∈ RO(P) : e(q) ≤ b for some q ∈ F} contains b or ¬b for every b,
/// checked element by element in the regular-open completion.
bool generates_ultrafilter(const ba::Poset& p, NodeSet f);

struct PosetDiagnostics {
  std::size_t two_splits = 0;
  std::size_t undecided = 0;
  /// First few splits F fails to decide.
  std::vector<SplitAntichain> undecided_examples;
  bool decides_all_two_splits = true;
  bool generates_ultra = false;
  /// Finite shadow of the countable variant: every partition of every maximal
  /// antichain into nonempty pieces. On a finite poset it adds nothing
  /// beyond the 2-split case.
  std::size_t partitions_checked = 0;
  bool decides_all_partitions = true;
  /// generates_ultra ⇔ decides_all_two_splits.
  bool agrees() const { return generates_ultra == decides_all_two_splits; }
};

/// Throws InputError when f is not a filter.
PosetDiagnostics poset_diagnostics(const ba::Poset& p, NodeSet f);

}  // namespace bvm::ultra
