#include "bvm/names/valuer.hpp"

#include "bvm/error.hpp"

namespace bvm::names {

Valuer::Valuer(unsigned atom_count) : n_(atom_count), full_(ba::full_mask(atom_count)) {}

ba::Bits Valuer::get(const Name& t, const Name& s, Atomic rel) {
  if (t.atom_count() != n_ || s.atom_count() != n_) throw InputError("bv_atomic: name from a different algebra");
  Key key{t, s, rel};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const ba::Bits v = compute(t, s, rel);
  memo_.emplace(std::move(key), v);
  return v;
}

ba::Bits Valuer::compute(const Name& t, const Name& s, Atomic rel) {
  switch (rel) {
    case Atomic::In: {
      ba::Bits v = 0;
      for (const auto& e : s.entries()) {
        if (e.value.is_zero() || (e.value.bits() & ~v) == 0) continue;
        v |= get(t, e.name, Atomic::Eq) & e.value.bits();
        if (v == full_) break;
      }
      return v;
    }
    case Atomic::Eq:
      if (t == s) return full_;
      {
        const ba::Bits left = get(t, s, Atomic::Subset);
        if (left == 0) return 0;
        return left & get(s, t, Atomic::Subset);
      }
    case Atomic::Subset: {
      ba::Bits v = full_;
      for (const auto& eta : t.domain()) {
        // (p → q) = ¬p ∨ q
        v &= (~get(eta, t, Atomic::In) & full_) | get(eta, s, Atomic::In);
        if (v == 0) break;
      }
      return v;
    }
  }
  return 0;
}

ba::Element bv_atomic(const Name& t, const Name& s, Atomic rel) {
  Valuer v(t.atom_count());
  return v.value(t, s, rel);
}

namespace {

ba::Bits reference(const Name& t, const Name& s, Atomic rel, ba::Bits full) {
  switch (rel) {
    case Atomic::In: {
      ba::Bits v = 0;
      for (const auto& e : s.entries()) v |= reference(t, e.name, Atomic::Eq, full) & e.value.bits();
      return v;
    }
    case Atomic::Eq:
      return reference(t, s, Atomic::Subset, full) & reference(s, t, Atomic::Subset, full);
    case Atomic::Subset: {
      ba::Bits v = full;
      for (const auto& eta : t.domain())
        v &= (~reference(eta, t, Atomic::In, full) & full) | reference(eta, s, Atomic::In, full);
      return v;
    }
  }
  return 0;
}

}  // namespace

ba::Element bv_atomic_reference(const Name& t, const Name& s, Atomic rel) {
  if (t.atom_count() != s.atom_count()) throw InputError("bv_atomic: name from a different algebra");
  const unsigned n = t.atom_count();
  return ba::Element(n, reference(t, s, rel, ba::full_mask(n)));
}

}  // namespace bvm::names
