#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "bvm/ba/algebra.hpp"

namespace bvm::names {

/// Canonical hereditarily finite set. Members are kept sorted and unique, so
/// equality is structural. Ordered by rank, then size, then members.
class HFSet {
 public:
  HFSet();
  static HFSet of(std::vector<HFSet> members);
  static HFSet singleton(const HFSet& x) { return of({x}); }
  /// Kuratowski pair {{a},{a,b}}.
  static HFSet pair(const HFSet& a, const HFSet& b);
  static HFSet von_neumann(unsigned n);

  const std::vector<HFSet>& members() const { return rep_->members; }
  std::size_t size() const { return rep_->members.size(); }
  bool empty() const { return rep_->members.empty(); }
  bool contains(const HFSet& x) const;
  bool subset_of(const HFSet& x) const;
  /// rank(x) = sup{rank(y)+1 : y ∈ x}.
  unsigned rank() const { return rep_->rank; }
  std::size_t hash() const { return rep_->hash; }

  /// "{}", "{{}}", "{{},{{}}}".
  std::string to_string() const;

  friend bool operator==(const HFSet& a, const HFSet& b);
  friend std::strong_ordering operator<=>(const HFSet& a, const HFSet& b);

 private:
  struct Rep {
    std::vector<HFSet> members;
    unsigned rank = 0;
    std::size_t hash = 0;
  };
  explicit HFSet(std::shared_ptr<const Rep> r) : rep_(std::move(r)) {}

  std::shared_ptr<const Rep> rep_;
};

struct HFSetHash {
  std::size_t operator()(const HFSet& x) const { return x.hash(); }
};

/// All HF sets of rank at most r, in canonical order (1, 2, 4, 16, 65536 sets).
/// Refuses r > 4.
std::vector<HFSet> hf_universe(unsigned max_rank);

/// Fixed coding of algebra elements as HF sets: {vN(i) : atom i ∈ e}, with
/// vN the von Neumann naturals.
HFSet encode_element(ba::Element e);

/// Power set of a finite HF set. Refuses more than 16 members.
HFSet power_set(const HFSet& x);

}  // namespace bvm::names
