#include "bvm/ultra/ultrafilter.hpp"

#include <algorithm>
#include <set>

#include "bvm/error.hpp"

namespace bvm::ultra {

Ultrafilter Ultrafilter::principal(const ba::Algebra& b, unsigned atom) {
  if (atom >= b.atom_count()) throw InputError("ultrafilter: atom " + std::to_string(atom) + " out of range");
  return Ultrafilter(b.atom_count(), atom, Kind::Principal);
}

Ultrafilter Ultrafilter::from_elements(const ba::Algebra& b, const std::vector<ba::Element>& members) {
  const auto f = names::Filter::from_elements(b, members);
  if (!f.is_ultra()) throw InputError("ultrafilter: member set is a filter but not maximal");
  return Ultrafilter(b.atom_count(), f.generator().atoms().front(), Kind::Explicit);
}

bool Ultrafilter::contains(ba::Element e) const {
  if (e.atom_count() != n_) throw InputError("ultrafilter: element from a different algebra");
  return e.has_atom(atom_);
}

std::optional<std::size_t> Ultrafilter::selected(const ba::Antichain& a) const {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (contains(a[i])) return i;
  return std::nullopt;
}

bool Ultrafilter::meets(const ba::Antichain& a) const { return selected(a).has_value(); }

std::string Ultrafilter::describe() const {
  return std::string(kind_ == Kind::Principal ? "principal" : "explicit") + " at atom " + std::to_string(atom_);
}

std::vector<Ultrafilter> enumerate_ultrafilters(const ba::Algebra& b) {
  std::vector<Ultrafilter> out;
  for (unsigned i = 0; i < b.atom_count(); ++i) out.push_back(Ultrafilter::principal(b, i));
  return out;
}

GenericityReport degree_of_genericity(const ba::Algebra& b, const Ultrafilter& u) {
  GenericityReport r;
  for (const auto& a : ba::all_maximal_antichains(b)) {
    ++r.antichains_checked;
    if (!u.meets(a)) {
      r.generic = false;
      if (!r.degree || a.size() < *r.degree) r.degree = a.size();
    }
  }
  r.verdict = r.degree ? std::to_string(*r.degree) : "none (trivial ultrapower)";
  return r;
}

}  // namespace bvm::ultra
