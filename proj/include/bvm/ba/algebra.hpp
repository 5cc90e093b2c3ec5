#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bvm::ba {

using Bits = std::uint64_t;

inline constexpr Bits full_mask(unsigned n) {
  return n >= 64 ? ~Bits{0} : ((Bits{1} << n) - 1);
}

/// An element of the powerset algebra on atom_count atoms.
///
/// The atom count travels with the value so operands from algebras of
/// different sizes are caught at the operator.
class Element {
 public:
  Element() = default;
  Element(unsigned atom_count, Bits bits);

  unsigned atom_count() const { return n_; }
  Bits bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  bool is_one() const { return bits_ == full_mask(n_); }
  bool has_atom(unsigned i) const { return i < n_ && ((bits_ >> i) & 1U); }
  unsigned size() const;
  std::vector<unsigned> atoms() const;

  Element operator&(Element o) const;
  Element operator|(Element o) const;
  Element operator~() const { return Element(n_, ~bits_ & full_mask(n_), Unchecked{}); }
  /// Relative complement a − b = a ∧ ¬b.
  Element operator-(Element o) const;
  /// Symmetric difference.
  Element operator^(Element o) const;
  Element& operator&=(Element o) { return *this = *this & o; }
  Element& operator|=(Element o) { return *this = *this | o; }

  bool leq(Element o) const;
  bool disjoint(Element o) const { return (*this & o).is_zero(); }

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;

 private:
  struct Unchecked {};
  Element(unsigned n, Bits bits, Unchecked) : n_(n), bits_(bits) {}
  void require_same(Element o) const;

  unsigned n_ = 0;
  Bits bits_ = 0;
};

/// Finite complete Boolean algebra, canonically the powerset of its atoms.
class Algebra {
 public:
  static constexpr unsigned kDefaultMaxAtoms = 16;
  static constexpr unsigned kHardMaxAtoms = 63;

  explicit Algebra(unsigned atom_count, std::vector<std::string> labels = {},
                   unsigned max_atoms = kDefaultMaxAtoms);

  unsigned atom_count() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Element zero() const { return Element(n_, 0); }
  Element one() const { return Element(n_, full_mask(n_)); }
  Element atom(unsigned i) const;
  Element element(std::initializer_list<unsigned> atoms) const;
  Element element(const std::vector<unsigned>& atoms) const;
  Element from_bits(Bits bits) const;

  bool owns(Element e) const { return e.atom_count() == n_; }

  Element meet(Element x, Element y) const;
  Element join(Element x, Element y) const;
  Element complement(Element x) const;
  Element big_join(std::span<const Element> xs) const;
  Element big_meet(std::span<const Element> xs) const;

  std::vector<Element> atoms() const;
  /// All 2^n elements in increasing bit order. Refuses beyond 20 atoms.
  std::vector<Element> elements() const;

  /// "0", "1", or "{a0,a2}" using the atom labels.
  std::string format(Element e) const;

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.n_ == b.n_; }

 private:
  void require_owned(Element e) const;

  unsigned n_;
  std::vector<std::string> labels_;
};

}  // namespace bvm::ba
