#pragma once

#include <vector>

#include "bvm/ba/algebra.hpp"

namespace bvm::names {

/// A filter on a finite algebra. Every such filter is principal, so it is
/// stored as its least element.
class Filter {
 public:
  /// ↑g for nonzero g.
  static Filter principal(const ba::Algebra& b, ba::Element generator);
  /// The principal ultrafilter at an atom.
  static Filter at_atom(const ba::Algebra& b, unsigned atom);
  /// Validates nonemptiness, 0 ∉ F, upward closure and meet closure.
  static Filter from_elements(const ba::Algebra& b, const std::vector<ba::Element>& members);

  unsigned atom_count() const { return generator_.atom_count(); }
  ba::Element generator() const { return generator_; }
  bool contains(ba::Element e) const { return generator_.leq(e); }
  bool is_ultra() const { return generator_.size() == 1; }
  std::vector<ba::Element> members() const;

  friend bool operator==(const Filter&, const Filter&) = default;

 private:
  explicit Filter(ba::Element g) : generator_(g) {}
  ba::Element generator_;
};

}  // namespace bvm::names
