#include "bvm/ultra/poset_diagnostics.hpp"

#include <bit>

#include "bvm/error.hpp"

namespace bvm::ultra {

namespace {

constexpr std::size_t kMaxNodes = 20;

NodeSet all_nodes(const ba::Poset& p) { return p.size() >= 64 ? ~NodeSet{0} : (NodeSet{1} << p.size()) - 1; }

void require_small(const ba::Poset& p) {
  if (p.size() > kMaxNodes) throw SizeError("poset diagnostics: too many nodes for exhaustive search");
}

bool is_antichain_mask(const ba::Poset& p, NodeSet a) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!((a >> i) & 1U)) continue;
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (((a >> j) & 1U) && p.compatible(i, j)) return false;
  }
  return true;
}

// Restricted-growth enumeration of the set partitions of the given nodes.
void partitions(const std::vector<std::size_t>& nodes, std::size_t k, std::vector<NodeSet>& blocks,
                std::vector<std::vector<NodeSet>>& out) {
  if (k == nodes.size()) {
    out.push_back(blocks);
    return;
  }
  const NodeSet bit = NodeSet{1} << nodes[k];
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b] |= bit;
    partitions(nodes, k + 1, blocks, out);
    blocks[b] &= ~bit;
  }
  blocks.push_back(bit);
  partitions(nodes, k + 1, blocks, out);
  blocks.pop_back();
}

}  // namespace

NodeSet SplitAntichain::antichain() const {
  NodeSet a = 0;
  for (NodeSet s : pieces) a |= s;
  return a;
}

std::vector<NodeSet> maximal_antichains(const ba::Poset& p) {
  require_small(p);
  std::vector<NodeSet> out;
  for (NodeSet a = 1; a <= all_nodes(p); ++a) {
    if (!is_antichain_mask(p, a)) continue;
    bool maximal = true;
    for (std::size_t q = 0; q < p.size() && maximal; ++q) {
      bool met = false;
      for (std::size_t i = 0; i < p.size() && !met; ++i)
        if (((a >> i) & 1U) && p.compatible(q, i)) met = true;
      maximal = met;
    }
    if (maximal) out.push_back(a);
  }
  return out;
}

std::vector<SplitAntichain> two_splits(const ba::Poset& p) {
  std::vector<SplitAntichain> out;
  for (NodeSet a : maximal_antichains(p)) {
    // Sub-masks containing the lowest node, so each unordered split appears once.
    const NodeSet low = a & (~a + 1);
    for (NodeSet s = (a - 1) & a; s != 0; s = (s - 1) & a)
      if ((s & low) != 0) out.push_back({{s, a & ~s}});
  }
  return out;
}

bool is_filter(const ba::Poset& p, NodeSet f) {
  if (f == 0) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!((f >> i) & 1U)) continue;
    if ((p.upper(i) & ~f) != 0) return false;
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (((f >> j) & 1U) && (p.cone(i) & p.cone(j) & f) == 0) return false;
  }
  return true;
}

std::vector<NodeSet> filters(const ba::Poset& p) {
  require_small(p);
  std::vector<NodeSet> out;
  for (NodeSet f = 1; f <= all_nodes(p); ++f)
    if (is_filter(p, f)) out.push_back(f);
  return out;
}

std::vector<NodeSet> maximal_filters(const ba::Poset& p) {
  const auto all = filters(p);
  std::vector<NodeSet> out;
  for (NodeSet f : all) {
    bool maximal = true;
    for (NodeSet g : all)
      if (g != f && (f & ~g) == 0) maximal = false;
    if (maximal) out.push_back(f);
  }
  return out;
}

bool incompatible_with_all(const ba::Poset& p, std::size_t node, NodeSet s) {
  for (std::size_t q = 0; q < p.size(); ++q)
    if (((s >> q) & 1U) && p.compatible(node, q)) return false;
  return true;
}

bool weakly_decides(const ba::Poset& p, NodeSet f, const SplitAntichain& split) {
  const NodeSet a = split.antichain();
  for (std::size_t q = 0; q < p.size(); ++q) {
    if (!((f >> q) & 1U)) continue;
    for (NodeSet piece : split.pieces)
      if (incompatible_with_all(p, q, a & ~piece)) return true;
  }
  return false;
}

bool generates_ultrafilter(const ba::Poset& p, NodeSet f) {
  const auto ro = ba::ro_completion(p);
  const unsigned n = ro.algebra.atom_count();
  if (n > kMaxNodes) throw SizeError("poset diagnostics: completion too large");
  auto member = [&](ba::Bits b) {
    for (std::size_t q = 0; q < p.size(); ++q)
      if (((f >> q) & 1U) && (ro.embed[q].bits() & ~b) == 0) return true;
    return false;
  };
  for (ba::Bits b = 0; b <= ba::full_mask(n); ++b)
    if (!member(b) && !member(~b & ba::full_mask(n))) return false;
  return true;
}

PosetDiagnostics poset_diagnostics(const ba::Poset& p, NodeSet f) {
  if (!is_filter(p, f)) throw InputError("poset diagnostics: not a filter");
  PosetDiagnostics r;
  for (const auto& s : two_splits(p)) {
    ++r.two_splits;
    if (!weakly_decides(p, f, s)) {
      ++r.undecided;
      r.decides_all_two_splits = false;
      if (r.undecided_examples.size() < 4) r.undecided_examples.push_back(s);
    }
  }
  for (NodeSet a : maximal_antichains(p)) {
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < p.size(); ++i)
      if ((a >> i) & 1U) nodes.push_back(i);
    std::vector<std::vector<NodeSet>> parts;
    std::vector<NodeSet> blocks;
    partitions(nodes, 0, blocks, parts);
    for (auto& pieces : parts) {
      ++r.partitions_checked;
      if (!weakly_decides(p, f, {std::move(pieces)})) r.decides_all_partitions = false;
    }
  }
  r.generates_ultra = generates_ultrafilter(p, f);
  return r;
}

}  // namespace bvm::ultra
