#include "bvm/names/filter.hpp"

#include <algorithm>
#include <set>

#include "bvm/error.hpp"

namespace bvm::names {

Filter Filter::principal(const ba::Algebra& b, ba::Element generator) {
  if (!b.owns(generator)) throw InputError("filter: generator from a different algebra");
  if (generator.is_zero()) throw InputError("filter: generator is 0");
  return Filter(generator);
}

Filter Filter::at_atom(const ba::Algebra& b, unsigned atom) { return Filter(b.atom(atom)); }

Filter Filter::from_elements(const ba::Algebra& b, const std::vector<ba::Element>& members) {
  if (members.empty()) throw InputError("filter: empty member set");
  std::set<ba::Bits> set;
  for (auto e : members) {
    if (!b.owns(e)) throw InputError("filter: element from a different algebra");
    if (e.is_zero()) throw InputError("filter: contains 0");
    set.insert(e.bits());
  }
  for (ba::Bits x : set)
    for (ba::Bits y : set)
      if (!set.count(x & y)) throw InputError("filter: not closed under meets");
  ba::Bits g = b.one().bits();
  for (ba::Bits x : set) g &= x;
  for (auto e : b.elements())
    if (b.from_bits(g).leq(e) && !set.count(e.bits())) throw InputError("filter: not upward closed");
  return Filter(b.from_bits(g));
}

std::vector<ba::Element> Filter::members() const {
  std::vector<ba::Element> out;
  const unsigned n = atom_count();
  const ba::Bits rest = ~generator_.bits() & ba::full_mask(n);
  // Enumerate supersets of the generator as subsets of the complement.
  ba::Bits sub = 0;
  do {
    out.emplace_back(n, generator_.bits() | sub);
    sub = (sub - rest) & rest;
  } while (sub != 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bvm::names
