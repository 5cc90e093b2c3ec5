#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bvm/ba/algebra.hpp"
#include "bvm/ba/antichain.hpp"

namespace bvm::ba {

/// A complete subalgebra B ⊆ C presented by a partition of C's atoms. The
/// blocks are the atoms of B.
class Partition {
 public:
  Partition(const Algebra& c, std::vector<Element> blocks);

  const Algebra& parent() const { return parent_; }
  /// The subalgebra as an algebra in its own right (one atom per block).
  const Algebra& algebra() const { return algebra_; }
  const std::vector<Element>& blocks() const { return blocks_; }
  std::size_t block_of_atom(unsigned atom) const { return block_of_atom_[atom]; }

  /// B-element (over block atoms) to the C-element it denotes.
  Element embed(Element b) const;
  /// Inverse of embed on unions of blocks.
  std::optional<Element> restrict(Element c) const;
  std::vector<Element> elements() const;

 private:
  Algebra parent_;
  Algebra algebra_;
  std::vector<Element> blocks_;
  std::vector<std::size_t> block_of_atom_;
};

std::vector<Element> subalgebra_elements(const Partition& p);
/// Always true for a valid partition; provided for symmetry with the set form.
bool is_complete_subalgebra(const Partition& p, const Algebra& c);
/// Contains 0 and 1, closed under complement and joins (hence all meets).
bool is_complete_subalgebra(const std::vector<Element>& claimed, const Algebra& c);

struct ProductAlgebra {
  Algebra algebra;
  unsigned left_atoms;
  unsigned right_atoms;

  unsigned pair_atom(unsigned i, unsigned j) const { return i * right_atoms + j; }
  std::pair<unsigned, unsigned> split(unsigned atom) const { return {atom / right_atoms, atom % right_atoms}; }
  Element rectangle(Element b, Element c) const;
  Element embed_left(Element b) const;
  Element embed_right(Element c) const;
};

ProductAlgebra product_algebra(const Algebra& b0, const Algebra& b1, unsigned max_atoms = Algebra::kDefaultMaxAtoms);

struct IterationAlgebra {
  Algebra algebra;
  Algebra base;
  std::vector<Algebra> fibers;
  /// First pair-atom index for each base atom.
  std::vector<unsigned> offset;

  unsigned pair_atom(unsigned a, unsigned e) const;
  std::pair<unsigned, unsigned> split(unsigned atom) const;
  /// First-coordinate embedding b ↦ {(a, e) : a ∈ b}.
  Element embed_base(Element b) const;
  /// Elements of fiber(a) placed over base atom a.
  Element embed_fiber(unsigned a, Element e) const;
};

IterationAlgebra iteration_algebra(const Algebra& base, std::vector<Algebra> fibers,
                                   unsigned max_atoms = Algebra::kDefaultMaxAtoms);

}  // namespace bvm::ba
