#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bvm/ba/algebra.hpp"
#include "bvm/ba/antichain.hpp"

namespace bvm::ba {

/// Downward-closed set of elements containing 0. Two presentations:
/// principal ({b : b ≤ generator}) and an explicit member set. The explicit
/// form exists for the finite "small" and "local" families, which need not be
/// closed under joins; such ideals are flagged degenerate and refused by
/// operations that need a genuine ideal.
class Ideal {
 public:
  static Ideal principal(const Algebra& b, Element generator);
  /// Validates 0 ∈ I and downward closure; join closure is recorded, not required.
  /// Refuses algebras with more than 20 atoms.
  static Ideal from_members(const Algebra& b, const std::vector<Element>& members);

  unsigned atom_count() const { return n_; }
  bool contains(Element e) const;
  bool is_principal_presentation() const { return principal_; }
  bool is_proper() const;
  bool is_join_closed() const { return join_closed_; }
  /// Not join-closed, so not an ideal in the strict sense.
  bool degenerate() const { return !join_closed_; }
  /// Largest member when join-closed.
  std::optional<Element> generator() const;
  std::vector<Element> members() const;

  /// a =_I b iff a △ b ∈ I.
  bool equivalent(Element a, Element b) const { return contains(a ^ b); }
  /// a ≤_I b iff a − b ∈ I.
  bool leq_mod(Element a, Element b) const { return contains(a - b); }

 private:
  Ideal() = default;

  unsigned n_ = 0;
  bool principal_ = true;
  bool join_closed_ = true;
  Element generator_;
  std::vector<bool> member_;  // indexed by bits, explicit presentation only
};

/// B/I as the powerset of the atoms outside the generator.
struct Quotient {
  Algebra algebra;
  Element generator;
  /// Atom of the parent algebra behind each quotient atom.
  std::vector<unsigned> kept_atoms;

  /// π(a) = a − generator, re-indexed.
  Element project(Element a) const;
  /// The least preimage of a quotient element.
  Element lift(Element q) const;
};

/// Requires a proper, join-closed ideal.
Quotient quotient(const Algebra& b, const Ideal& i);

/// {b : b ≤ ∨A₀ for some A₀ ⊊ A}. Degenerate whenever |A| ≥ 3.
Ideal small_ideal(const Algebra& b, const Antichain& a);

/// {b : b ≤ ∨A₀ for some A₀ ∈ J}, with J a down-closed family of index
/// subsets of A (bitmasks) not containing all of A.
Ideal local_ideal(const Algebra& b, const Antichain& a, const std::vector<std::uint64_t>& j);

}  // namespace bvm::ba
