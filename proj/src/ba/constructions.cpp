#include "bvm/ba/constructions.hpp"

#include <algorithm>
#include <set>

#include "bvm/error.hpp"

namespace bvm::ba {

namespace {

Algebra block_algebra(const Algebra& c, const std::vector<Element>& blocks) {
  std::vector<std::string> labels;
  for (Element b : blocks) labels.push_back(c.format(b));
  return Algebra(static_cast<unsigned>(blocks.size()), labels, Algebra::kHardMaxAtoms);
}

std::vector<Element> validated_blocks(const Algebra& c, std::vector<Element> blocks) {
  for (Element b : blocks)
    if (!c.owns(b)) throw InputError("partition: block belongs to another algebra");
  if (!is_maximal_antichain(blocks)) throw InputError("partition: blocks must be nonempty, disjoint and covering");
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace

Partition::Partition(const Algebra& c, std::vector<Element> blocks)
    : parent_(c), algebra_(block_algebra(c, validated_blocks(c, blocks))), blocks_(validated_blocks(c, std::move(blocks))) {
  block_of_atom_.assign(c.atom_count(), 0);
  for (std::size_t k = 0; k < blocks_.size(); ++k)
    for (unsigned a : blocks_[k].atoms()) block_of_atom_[a] = k;
}

Element Partition::embed(Element b) const {
  if (!algebra_.owns(b)) throw InputError("partition: element is not over the block algebra");
  Element out = parent_.zero();
  for (unsigned k : b.atoms()) out |= blocks_[k];
  return out;
}

std::optional<Element> Partition::restrict(Element c) const {
  if (!parent_.owns(c)) throw InputError("partition: element belongs to another algebra");
  Bits bits = 0;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    Element m = c & blocks_[k];
    if (m == blocks_[k]) {
      bits |= Bits{1} << k;
    } else if (!m.is_zero()) {
      return std::nullopt;
    }
  }
  return algebra_.from_bits(bits);
}

std::vector<Element> Partition::elements() const {
  std::vector<Element> out;
  for (Element b : algebra_.elements()) out.push_back(embed(b));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> subalgebra_elements(const Partition& p) { return p.elements(); }

bool is_complete_subalgebra(const Partition& p, const Algebra& c) {
  return p.parent() == c && is_complete_subalgebra(p.elements(), c);
}

bool is_complete_subalgebra(const std::vector<Element>& claimed, const Algebra& c) {
  std::set<Element> s;
  for (Element e : claimed) {
    if (!c.owns(e)) return false;
    s.insert(e);
  }
  if (!s.contains(c.zero()) || !s.contains(c.one())) return false;
  for (Element x : s) {
    if (!s.contains(~x)) return false;
    for (Element y : s)
      if (!s.contains(x | y) || !s.contains(x & y)) return false;
  }
  // Finite: closure under binary joins gives arbitrary joins.
  return true;
}

Element ProductAlgebra::rectangle(Element b, Element c) const {
  if (b.atom_count() != left_atoms || c.atom_count() != right_atoms) throw InputError("product: factor mismatch");
  Bits bits = 0;
  for (unsigned i : b.atoms())
    for (unsigned j : c.atoms()) bits |= Bits{1} << pair_atom(i, j);
  return algebra.from_bits(bits);
}

Element ProductAlgebra::embed_left(Element b) const {
  return rectangle(b, Element(right_atoms, full_mask(right_atoms)));
}

Element ProductAlgebra::embed_right(Element c) const {
  return rectangle(Element(left_atoms, full_mask(left_atoms)), c);
}

ProductAlgebra product_algebra(const Algebra& b0, const Algebra& b1, unsigned max_atoms) {
  const unsigned n = b0.atom_count() * b1.atom_count();
  if (n > max_atoms) throw SizeError("product algebra with " + std::to_string(n) + " atoms exceeds the cap of " + std::to_string(max_atoms));
  std::vector<std::string> labels;
  for (unsigned i = 0; i < b0.atom_count(); ++i)
    for (unsigned j = 0; j < b1.atom_count(); ++j) labels.push_back("(" + b0.labels()[i] + "," + b1.labels()[j] + ")");
  return ProductAlgebra{Algebra(n, labels, max_atoms), b0.atom_count(), b1.atom_count()};
}

unsigned IterationAlgebra::pair_atom(unsigned a, unsigned e) const {
  if (a >= fibers.size() || e >= fibers[a].atom_count()) throw InputError("iteration: pair out of range");
  return offset[a] + e;
}

std::pair<unsigned, unsigned> IterationAlgebra::split(unsigned atom) const {
  for (unsigned a = 0; a < fibers.size(); ++a)
    if (atom < offset[a] + fibers[a].atom_count()) return {a, atom - offset[a]};
  throw InputError("iteration: atom out of range");
}

Element IterationAlgebra::embed_base(Element b) const {
  if (!base.owns(b)) throw InputError("iteration: element not in the base algebra");
  Bits bits = 0;
  for (unsigned a : b.atoms()) bits |= full_mask(fibers[a].atom_count()) << offset[a];
  return algebra.from_bits(bits);
}

Element IterationAlgebra::embed_fiber(unsigned a, Element e) const {
  if (a >= fibers.size() || !fibers[a].owns(e)) throw InputError("iteration: element not in the fiber");
  return algebra.from_bits(e.bits() << offset[a]);
}

IterationAlgebra iteration_algebra(const Algebra& base, std::vector<Algebra> fibers, unsigned max_atoms) {
  if (fibers.size() != base.atom_count()) throw InputError("iteration: need one fiber per base atom");
  std::vector<unsigned> offset;
  std::vector<std::string> labels;
  unsigned n = 0;
  for (unsigned a = 0; a < fibers.size(); ++a) {
    offset.push_back(n);
    n += fibers[a].atom_count();
    for (const auto& l : fibers[a].labels()) labels.push_back("(" + base.labels()[a] + "," + l + ")");
  }
  if (n > max_atoms) throw SizeError("iteration algebra with " + std::to_string(n) + " atoms exceeds the cap of " + std::to_string(max_atoms));
  return IterationAlgebra{Algebra(n, labels, max_atoms), base, std::move(fibers), std::move(offset)};
}

}  // namespace bvm::ba
