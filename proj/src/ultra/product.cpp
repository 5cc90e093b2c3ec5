#include "bvm/ultra/product.hpp"

#include "bvm/error.hpp"

namespace bvm::ultra {

namespace {

ba::Element slice_over(const ba::IterationAlgebra& it, ba::Element x, unsigned a) {
  const auto& fiber = it.fibers[a];
  return fiber.from_bits((x.bits() >> it.offset[a]) & ba::full_mask(fiber.atom_count()));
}

// Atoms of B₁ in the vertical slice of x over atom i of B₀.
ba::Bits vertical(const ba::ProductAlgebra& p, ba::Element x, unsigned i) {
  ba::Bits s = 0;
  for (unsigned j = 0; j < p.right_atoms; ++j)
    if (x.has_atom(p.pair_atom(i, j))) s |= ba::Bits{1} << j;
  return s;
}

ba::Bits horizontal(const ba::ProductAlgebra& p, ba::Element x, unsigned j) {
  ba::Bits s = 0;
  for (unsigned i = 0; i < p.left_atoms; ++i)
    if (x.has_atom(p.pair_atom(i, j))) s |= ba::Bits{1} << i;
  return s;
}

void require_factors(const ba::ProductAlgebra& p, const Ultrafilter& u0, const Ultrafilter& u1) {
  if (u0.atom_count() != p.left_atoms || u1.atom_count() != p.right_atoms)
    throw InputError("product filter: factor ultrafilters do not match the product");
}

}  // namespace

Ultrafilter iteration_ultrafilter(const ba::IterationAlgebra& it, const Ultrafilter& u0, const Ultrafilter& u1) {
  if (u0.atom_count() != it.base.atom_count()) throw InputError("iteration ultrafilter: U0 is not on the base");
  const unsigned a = u0.atom();
  if (u1.atom_count() != it.fibers[a].atom_count())
    throw InputError("iteration ultrafilter: U1 is not on the selected fiber");
  std::vector<ba::Element> members;
  for (const auto& x : it.algebra.elements())
    if (u1.contains(slice_over(it, x, a))) members.push_back(x);
  return Ultrafilter::from_elements(it.algebra, members);
}

IterationFactors decompose(const ba::IterationAlgebra& it, const Ultrafilter& u) {
  if (u.atom_count() != it.algebra.atom_count()) throw InputError("decompose: ultrafilter is not on the iteration");
  std::vector<ba::Element> base_members;
  for (const auto& b : it.base.elements())
    if (u.contains(it.embed_base(b))) base_members.push_back(b);
  auto u0 = Ultrafilter::from_elements(it.base, base_members);
  const unsigned a = u0.atom();
  const auto rest = it.embed_base(~it.base.atom(a));
  std::vector<ba::Element> fiber_members;
  for (const auto& e : it.fibers[a].elements())
    if (u.contains(it.embed_fiber(a, e) | rest)) fiber_members.push_back(e);
  auto u1 = Ultrafilter::from_elements(it.fibers[a], fiber_members);
  return {u0, u1};
}

bool rectangle_filter_contains(const ba::ProductAlgebra& p, ba::Element x, const Ultrafilter& u0,
                               const Ultrafilter& u1) {
  require_factors(p, u0, u1);
  const ba::Algebra b0(p.left_atoms), b1(p.right_atoms);
  for (const auto& b : b0.elements()) {
    if (!u0.contains(b)) continue;
    for (const auto& c : b1.elements())
      if (u1.contains(c) && p.rectangle(b, c).leq(x)) return true;
  }
  return false;
}

std::vector<ba::Element> rectangle_filter(const ba::ProductAlgebra& p, const Ultrafilter& u0, const Ultrafilter& u1) {
  std::vector<ba::Element> out;
  for (const auto& x : p.algebra.elements())
    if (rectangle_filter_contains(p, x, u0, u1)) out.push_back(x);
  return out;
}

bool product_filter_contains(const ba::ProductAlgebra& p, ba::Element x, const Ultrafilter& u0,
                             const Ultrafilter& u1) {
  require_factors(p, u0, u1);
  ba::Bits wide = 0;
  for (unsigned i = 0; i < p.left_atoms; ++i)
    if (u1.contains(ba::Element(p.right_atoms, vertical(p, x, i)))) wide |= ba::Bits{1} << i;
  return u0.contains(ba::Element(p.left_atoms, wide));
}

bool dual_product_contains(const ba::ProductAlgebra& p, ba::Element x, const Ultrafilter& u0,
                           const Ultrafilter& u1) {
  require_factors(p, u0, u1);
  ba::Bits wide = 0;
  for (unsigned j = 0; j < p.right_atoms; ++j)
    if (u0.contains(ba::Element(p.left_atoms, horizontal(p, x, j)))) wide |= ba::Bits{1} << j;
  return u1.contains(ba::Element(p.right_atoms, wide));
}

ba::Element swap_coordinates(const ba::ProductAlgebra& from, const ba::ProductAlgebra& to, ba::Element x) {
  if (from.left_atoms != to.right_atoms || from.right_atoms != to.left_atoms)
    throw InputError("swap: products are not mirror images");
  ba::Bits bits = 0;
  for (unsigned a : x.atoms()) {
    auto [i, j] = from.split(a);
    bits |= ba::Bits{1} << to.pair_atom(j, i);
  }
  return to.algebra.from_bits(bits);
}

}  // namespace bvm::ultra
