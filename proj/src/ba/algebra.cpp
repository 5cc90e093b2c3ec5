#include "bvm/ba/algebra.hpp"

#include <bit>
#include <sstream>

#include "bvm/error.hpp"

namespace bvm::ba {

Element::Element(unsigned atom_count, Bits bits) : n_(atom_count), bits_(bits) {
  if (atom_count > Algebra::kHardMaxAtoms) throw SizeError("element: too many atoms");
  if ((bits & ~full_mask(atom_count)) != 0) throw InputError("element: atom index out of range");
}

unsigned Element::size() const { return static_cast<unsigned>(std::popcount(bits_)); }

std::vector<unsigned> Element::atoms() const {
  std::vector<unsigned> out;
  for (Bits b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<unsigned>(std::countr_zero(b)));
  return out;
}

void Element::require_same(Element o) const {
  if (o.n_ != n_) throw InputError("mixed-algebra operands");
}

Element Element::operator&(Element o) const {
  require_same(o);
  return Element(n_, bits_ & o.bits_, Unchecked{});
}

Element Element::operator|(Element o) const {
  require_same(o);
  return Element(n_, bits_ | o.bits_, Unchecked{});
}

Element Element::operator-(Element o) const {
  require_same(o);
  return Element(n_, bits_ & ~o.bits_, Unchecked{});
}

Element Element::operator^(Element o) const {
  require_same(o);
  return Element(n_, bits_ ^ o.bits_, Unchecked{});
}

bool Element::leq(Element o) const {
  require_same(o);
  return (bits_ & ~o.bits_) == 0;
}

Algebra::Algebra(unsigned atom_count, std::vector<std::string> labels, unsigned max_atoms)
    : n_(atom_count), labels_(std::move(labels)) {
  if (atom_count == 0) throw InputError("algebra needs at least one atom");
  if (atom_count > max_atoms || atom_count > kHardMaxAtoms) {
    throw SizeError("algebra with " + std::to_string(atom_count) + " atoms exceeds the cap of " +
                    std::to_string(std::min(max_atoms, kHardMaxAtoms)));
  }
  if (labels_.empty()) {
    for (unsigned i = 0; i < n_; ++i) labels_.push_back("a" + std::to_string(i));
  } else if (labels_.size() != n_) {
    throw InputError("algebra: label count does not match atom count");
  }
}

Element Algebra::atom(unsigned i) const {
  if (i >= n_) throw InputError("atom index " + std::to_string(i) + " out of range");
  return Element(n_, Bits{1} << i);
}

Element Algebra::element(std::initializer_list<unsigned> atoms) const {
  return element(std::vector<unsigned>(atoms));
}

Element Algebra::element(const std::vector<unsigned>& atoms) const {
  Bits bits = 0;
  for (unsigned i : atoms) bits |= atom(i).bits();
  return Element(n_, bits);
}

Element Algebra::from_bits(Bits bits) const { return Element(n_, bits); }

void Algebra::require_owned(Element e) const {
  if (!owns(e)) throw InputError("element does not belong to this algebra");
}

Element Algebra::meet(Element x, Element y) const {
  require_owned(x);
  return x & y;
}

Element Algebra::join(Element x, Element y) const {
  require_owned(x);
  return x | y;
}

Element Algebra::complement(Element x) const {
  require_owned(x);
  return ~x;
}

Element Algebra::big_join(std::span<const Element> xs) const {
  Element acc = zero();
  for (Element x : xs) acc = join(acc, x);
  return acc;
}

Element Algebra::big_meet(std::span<const Element> xs) const {
  Element acc = one();
  for (Element x : xs) acc = meet(acc, x);
  return acc;
}

std::vector<Element> Algebra::atoms() const {
  std::vector<Element> out;
  for (unsigned i = 0; i < n_; ++i) out.push_back(atom(i));
  return out;
}

std::vector<Element> Algebra::elements() const {
  if (n_ > 20) throw SizeError("refusing to enumerate more than 2^20 elements");
  std::vector<Element> out;
  out.reserve(std::size_t{1} << n_);
  for (Bits b = 0; b <= full_mask(n_); ++b) out.emplace_back(n_, b);
  return out;
}

std::string Algebra::format(Element e) const {
  require_owned(e);
  if (e.is_zero()) return "0";
  if (e.is_one()) return "1";
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (unsigned i : e.atoms()) {
    if (!first) os << ',';
    os << labels_[i];
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace bvm::ba
