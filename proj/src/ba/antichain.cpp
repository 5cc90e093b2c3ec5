#include "bvm/ba/antichain.hpp"

#include <algorithm>
#include <set>

#include "bvm/error.hpp"

namespace bvm::ba {

bool is_antichain(std::span<const Element> xs) {
  Bits seen = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].atom_count() != xs[0].atom_count()) throw InputError("mixed-algebra operands");
    if (xs[i].is_zero() || (seen & xs[i].bits()) != 0) return false;
    seen |= xs[i].bits();
  }
  return true;
}

bool is_maximal_antichain(std::span<const Element> xs) {
  if (xs.empty() || !is_antichain(xs)) return false;
  Bits all = 0;
  for (Element x : xs) all |= x.bits();
  return all == full_mask(xs[0].atom_count());
}

Antichain::Antichain(std::vector<Element> members) : members_(std::move(members)) {
  if (members_.empty()) throw InputError("antichain: no members");
  if (!is_antichain(members_)) throw InputError("antichain: members must be nonzero and pairwise disjoint");
  std::sort(members_.begin(), members_.end());
  maximal_ = join().is_one();
}

Antichain Antichain::atoms(const Algebra& b) { return Antichain(b.atoms()); }

Antichain Antichain::trivial(const Algebra& b) { return Antichain({b.one()}); }

Element Antichain::join() const {
  Element acc(atom_count(), 0);
  for (Element m : members_) acc |= m;
  return acc;
}

std::optional<std::size_t> Antichain::index_of(Element e) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), e);
  if (it != members_.end() && *it == e) return static_cast<std::size_t>(it - members_.begin());
  return std::nullopt;
}

std::optional<std::size_t> Antichain::index_above(Element e) const {
  if (e.is_zero()) return std::nullopt;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (e.leq(members_[i])) return i;
  return std::nullopt;
}

std::optional<std::size_t> Antichain::index_of_atom(unsigned atom) const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i].has_atom(atom)) return i;
  return std::nullopt;
}

bool Antichain::refines(const Antichain& coarser) const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](Element m) { return coarser.index_above(m).has_value(); });
}

Element Antichain::join_of(std::uint64_t index_mask) const {
  Element acc(atom_count(), 0);
  for (std::size_t i = 0; i < members_.size(); ++i)
    if ((index_mask >> i) & 1U) acc |= members_[i];
  return acc;
}

CommonRefinement common_refinement(const Antichain& a, const Antichain& b) {
  if (!a.maximal() || !b.maximal()) throw InputError("common_refinement: antichains must be maximal");
  std::vector<Element> meets;
  for (Element x : a)
    for (Element y : b)
      if (Element m = x & y; !m.is_zero()) meets.push_back(m);
  CommonRefinement out{Antichain(std::move(meets)), {}, {}};
  out.to_first = refinement_map(out.common, a);
  out.to_second = refinement_map(out.common, b);
  return out;
}

RefinementMap refinement_map(const Antichain& fine, const Antichain& coarse) {
  RefinementMap map;
  map.reserve(fine.size());
  for (Element c : fine) {
    auto idx = coarse.index_above(c);
    if (!idx) throw InputError("refinement_map: antichain does not refine the target");
    map.push_back(*idx);
  }
  return map;
}

namespace {

void partitions_rec(unsigned n, unsigned next, std::vector<Bits>& blocks, std::vector<Antichain>& out) {
  if (next == n) {
    std::vector<Element> members;
    for (Bits b : blocks) members.emplace_back(n, b);
    out.emplace_back(std::move(members));
    return;
  }
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    blocks[k] |= Bits{1} << next;
    partitions_rec(n, next + 1, blocks, out);
    blocks[k] &= ~(Bits{1} << next);
  }
  blocks.push_back(Bits{1} << next);
  partitions_rec(n, next + 1, blocks, out);
  blocks.pop_back();
}

}  // namespace

std::vector<Antichain> all_maximal_antichains(const Algebra& b) {
  if (b.atom_count() > 10) throw SizeError("refusing to enumerate partitions of more than 10 atoms");
  std::vector<Antichain> out;
  std::vector<Bits> blocks;
  partitions_rec(b.atom_count(), 0, blocks, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Antichain> refinement_closure(std::vector<Antichain> family) {
  std::set<Antichain> seen(family.begin(), family.end());
  for (const auto& a : family)
    if (!a.maximal()) throw InputError("refinement_closure: antichains must be maximal");
  std::vector<Antichain> work(seen.begin(), seen.end());
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Antichain c = common_refinement(work[i], work[j]).common;
      if (seen.insert(c).second) work.push_back(c);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace bvm::ba
