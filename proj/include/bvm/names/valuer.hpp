#pragma once

#include <cstddef>
#include <unordered_map>

#include "bvm/ba/algebra.hpp"
#include "bvm/names/name.hpp"

namespace bvm::names {

enum class Atomic { In, Eq, Subset };

/// One evaluation session for the atomic Boolean values:
///   ⟦τ∈σ⟧ = ⋁_{⟨η,b⟩∈σ} ⟦τ=η⟧ ∧ b
///   ⟦τ=σ⟧ = ⟦τ⊆σ⟧ ∧ ⟦σ⊆τ⟧
///   ⟦τ⊆σ⟧ = ⋀_{η∈dom τ} (⟦η∈τ⟧ → ⟦η∈σ⟧)
/// Results are memoized on structural pair keys for the lifetime of the session.
/// Sessions are not shared between threads.
class Valuer {
 public:
  explicit Valuer(unsigned atom_count);

  ba::Element in(const Name& t, const Name& s) { return ba::Element(n_, get(t, s, Atomic::In)); }
  ba::Element eq(const Name& t, const Name& s) { return ba::Element(n_, get(t, s, Atomic::Eq)); }
  ba::Element subset(const Name& t, const Name& s) { return ba::Element(n_, get(t, s, Atomic::Subset)); }
  ba::Element value(const Name& t, const Name& s, Atomic rel) { return ba::Element(n_, get(t, s, rel)); }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Key {
    Name a;
    Name b;
    Atomic rel;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return k.a.hash() * 31 + k.b.hash() * 7 + static_cast<std::size_t>(k.rel);
    }
  };

  ba::Bits get(const Name& t, const Name& s, Atomic rel);
  ba::Bits compute(const Name& t, const Name& s, Atomic rel);

  unsigned n_;
  ba::Bits full_;
  std::unordered_map<Key, ba::Bits, KeyHash> memo_;
};

/// Atomic value in a fresh session.
ba::Element bv_atomic(const Name& t, const Name& s, Atomic rel);

/// The same recursion without memoization. Exponential; for differential tests on small names.
ba::Element bv_atomic_reference(const Name& t, const Name& s, Atomic rel);

}  // namespace bvm::names
