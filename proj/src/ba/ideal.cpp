#include "bvm/ba/ideal.hpp"

#include <algorithm>
#include <bit>

#include "bvm/error.hpp"

namespace bvm::ba {

Ideal Ideal::principal(const Algebra& b, Element generator) {
  if (!b.owns(generator)) throw InputError("ideal: generator belongs to another algebra");
  Ideal out;
  out.n_ = b.atom_count();
  out.generator_ = generator;
  return out;
}

Ideal Ideal::from_members(const Algebra& b, const std::vector<Element>& members) {
  if (b.atom_count() > 20) throw SizeError("ideal: explicit presentation limited to 20 atoms");
  Ideal out;
  out.n_ = b.atom_count();
  out.principal_ = false;
  out.member_.assign(std::size_t{1} << out.n_, false);
  for (Element e : members) {
    if (!b.owns(e)) throw InputError("ideal: member belongs to another algebra");
    out.member_[e.bits()] = true;
  }
  if (!out.member_[0]) throw InputError("ideal: 0 is not a member");
  const Bits full = full_mask(out.n_);
  for (Bits x = 0; x <= full; ++x) {
    if (!out.member_[x]) continue;
    for (Bits sub = x;; sub = (sub - 1) & x) {
      if (!out.member_[sub]) throw InputError("ideal: member set is not downward closed");
      if (sub == 0) break;
    }
  }
  Bits top = 0;
  for (Bits x = 0; x <= full; ++x)
    if (out.member_[x]) top |= x;
  out.join_closed_ = out.member_[top];
  out.generator_ = Element(out.n_, top);
  return out;
}

bool Ideal::contains(Element e) const {
  if (e.atom_count() != n_) throw InputError("mixed-algebra operands");
  if (principal_) return e.leq(generator_);
  return member_[e.bits()];
}

bool Ideal::is_proper() const { return !contains(Element(n_, full_mask(n_))); }

std::optional<Element> Ideal::generator() const {
  if (!join_closed_) return std::nullopt;
  return generator_;
}

std::vector<Element> Ideal::members() const {
  std::vector<Element> out;
  if (principal_) {
    const Bits g = generator_.bits();
    for (Bits sub = g;; sub = (sub - 1) & g) {
      out.emplace_back(n_, sub);
      if (sub == 0) break;
    }
  } else {
    for (Bits x = 0; x < member_.size(); ++x)
      if (member_[x]) out.emplace_back(n_, x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Element Quotient::project(Element a) const {
  if (a.atom_count() != generator.atom_count()) throw InputError("quotient: element from another algebra");
  Bits bits = 0;
  for (std::size_t i = 0; i < kept_atoms.size(); ++i)
    if (a.has_atom(kept_atoms[i])) bits |= Bits{1} << i;
  return algebra.from_bits(bits);
}

Element Quotient::lift(Element q) const {
  if (!algebra.owns(q)) throw InputError("quotient: element from another algebra");
  Bits bits = 0;
  for (unsigned i : q.atoms()) bits |= Bits{1} << kept_atoms[i];
  return Element(generator.atom_count(), bits);
}

Quotient quotient(const Algebra& b, const Ideal& i) {
  if (i.atom_count() != b.atom_count()) throw InputError("quotient: ideal belongs to another algebra");
  if (i.degenerate()) throw InputError("quotient: ideal is not closed under joins");
  if (!i.is_proper()) throw InputError("quotient: improper ideal");
  Element g = *i.generator();
  std::vector<unsigned> kept;
  std::vector<std::string> labels;
  for (unsigned a = 0; a < b.atom_count(); ++a) {
    if (!g.has_atom(a)) {
      kept.push_back(a);
      labels.push_back(b.labels()[a]);
    }
  }
  return Quotient{Algebra(static_cast<unsigned>(kept.size()), labels, Algebra::kHardMaxAtoms), g, kept};
}

Ideal small_ideal(const Algebra& b, const Antichain& a) {
  if (!a.maximal() || a.atom_count() != b.atom_count()) throw InputError("small_ideal: need a maximal antichain of the algebra");
  std::vector<std::uint64_t> proper_subsets;
  const std::uint64_t all = (std::uint64_t{1} << a.size()) - 1;
  for (std::uint64_t s = 0; s < all; ++s) proper_subsets.push_back(s);
  return local_ideal(b, a, proper_subsets);
}

Ideal local_ideal(const Algebra& b, const Antichain& a, const std::vector<std::uint64_t>& j) {
  if (a.atom_count() != b.atom_count()) throw InputError("local_ideal: antichain from another algebra");
  if (a.size() >= 64) throw SizeError("local_ideal: antichain too large");
  const std::uint64_t all = (std::uint64_t{1} << a.size()) - 1;
  std::vector<std::uint64_t> family(j.begin(), j.end());
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  if (!std::binary_search(family.begin(), family.end(), std::uint64_t{0})) throw InputError("local_ideal: J must contain the empty set");
  for (auto s : family) {
    if ((s & ~all) != 0) throw InputError("local_ideal: index out of range");
    if (s == all && a.size() > 0) throw InputError("local_ideal: J must be proper");
    for (std::uint64_t sub = s; sub != 0; sub = (sub - 1) & s)
      if (!std::binary_search(family.begin(), family.end(), sub)) throw InputError("local_ideal: J is not downward closed");
  }
  std::vector<Element> members;
  for (auto s : family) {
    const Bits top = a.join_of(s).bits();
    for (Bits sub = top;; sub = (sub - 1) & top) {
      members.emplace_back(b.atom_count(), sub);
      if (sub == 0) break;
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return Ideal::from_members(b, members);
}

}  // namespace bvm::ba
