#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bvm/ba/algebra.hpp"
#include "bvm/ba/antichain.hpp"
#include "bvm/names/filter.hpp"

namespace bvm::ultra {

/// An ultrafilter on a finite algebra. Every one is principal; the kind records
/// how it was presented.
class Ultrafilter {
 public:
  enum class Kind { Principal, Explicit };

  static Ultrafilter principal(const ba::Algebra& b, unsigned atom);
  /// From a member list; throws InputError unless it is exactly an ultrafilter.
  static Ultrafilter from_elements(const ba::Algebra& b, const std::vector<ba::Element>& members);

  Kind kind() const { return kind_; }
  unsigned atom() const { return atom_; }
  unsigned atom_count() const { return n_; }
  bool contains(ba::Element e) const;
  /// Some member of the antichain lies in U.
  bool meets(const ba::Antichain& a) const;
  /// Index of the antichain member in U, if any.
  std::optional<std::size_t> selected(const ba::Antichain& a) const;
  names::Filter as_filter(const ba::Algebra& b) const { return names::Filter::at_atom(b, atom_); }
  std::string describe() const;

  friend bool operator==(const Ultrafilter& a, const Ultrafilter& b) { return a.n_ == b.n_ && a.atom_ == b.atom_; }

 private:
  Ultrafilter(unsigned n, unsigned atom, Kind kind) : n_(n), atom_(atom), kind_(kind) {}
  unsigned n_;
  unsigned atom_;
  Kind kind_;
};

/// One principal ultrafilter per atom, in atom order.
std::vector<Ultrafilter> enumerate_ultrafilters(const ba::Algebra& b);

struct GenericityReport {
  /// Every maximal antichain is met (V-genericity over the finite ground).
  bool generic = true;
  std::size_t antichains_checked = 0;
  /// Size of the smallest maximal antichain U misses; empty when there is none.
  std::optional<std::size_t> degree;
  /// "none (trivial ultrapower)" or the cardinal.
  std::string verdict;
};

/// Checks U against every maximal antichain (≤ 10 atoms).
GenericityReport degree_of_genericity(const ba::Algebra& b, const Ultrafilter& u);

}  // namespace bvm::ultra
