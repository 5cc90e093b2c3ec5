#pragma once

#include <vector>

#include "bvm/ba/constructions.hpp"
#include "bvm/ultra/ultrafilter.hpp"

namespace bvm::ultra {

/// U₀*U₁ on a two-step iteration: X is a member iff its slice over U₀'s atom
/// lies in U₁. U₁ lives on the fiber selected by U₀.
Ultrafilter iteration_ultrafilter(const ba::IterationAlgebra& it, const Ultrafilter& u0, const Ultrafilter& u1);

struct IterationFactors {
  Ultrafilter u0;
  Ultrafilter u1;
};

/// Every ultrafilter on the iteration is U₀*U₁: U₀ = {b : b ∈ U via the base
/// embedding}, U₁ = {e : the fiber element e over U₀'s atom, joined with the
/// other fibers, lies in U}.
IterationFactors decompose(const ba::IterationAlgebra& it, const Ultrafilter& u);

/// Members of U₀⊠U₁: the upward closure of the rectangles b×c, b ∈ U₀, c ∈ U₁.
std::vector<ba::Element> rectangle_filter(const ba::ProductAlgebra& p, const Ultrafilter& u0, const Ultrafilter& u1);
bool rectangle_filter_contains(const ba::ProductAlgebra& p, ba::Element x, const Ultrafilter& u0,
                               const Ultrafilter& u1);

/// U₀×U₁: ∨{b ∈ B₀ : ∨X_b ∈ U₁} ∈ U₀, with X_b the vertical slice over b.
bool product_filter_contains(const ba::ProductAlgebra& p, ba::Element x, const Ultrafilter& u0,
                             const Ultrafilter& u1);
/// U₀⋊U₁: the horizontal criterion ∨{c ∈ B₁ : ∨X^c ∈ U₀} ∈ U₁.
bool dual_product_contains(const ba::ProductAlgebra& p, ba::Element x, const Ultrafilter& u0,
                           const Ultrafilter& u1);

/// X ⊆ B₀×B₁ read in B₁×B₀.
ba::Element swap_coordinates(const ba::ProductAlgebra& from, const ba::ProductAlgebra& to, ba::Element x);

}  // namespace bvm::ultra
