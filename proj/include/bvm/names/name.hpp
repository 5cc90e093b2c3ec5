#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "bvm/ba/algebra.hpp"
#include "bvm/names/hfset.hpp"

namespace bvm::names {

struct NameEntry;

/// A B-name: a finite set of pairs ⟨σ, b⟩. Stored canonically (entries sorted,
/// duplicates merged), so equality is structural. Pairs with b = 0 are kept:
/// they change the rank but not any Boolean value.
class Name {
 public:
  /// The empty name over an algebra with the given atom count.
  explicit Name(unsigned atom_count = 1);
  /// Duplicate pairs ⟨σ,b⟩ are merged; distinct b for the same σ are kept apart.
  static Name make(unsigned atom_count, std::vector<NameEntry> entries);

  unsigned atom_count() const { return rep_->atom_count; }
  const std::vector<NameEntry>& entries() const { return rep_->entries; }
  std::size_t size() const;
  bool empty() const;
  /// sup{rank(σ)+1 : ⟨σ,b⟩ ∈ τ}.
  unsigned rank() const { return rep_->rank; }
  std::size_t hash() const { return rep_->hash; }
  /// Distinct σ appearing in entries, in canonical order.
  std::vector<Name> domain() const;

  /// "{}" or "{<σ,{0,2}>,…}" with atom indices.
  std::string to_string() const;

  friend bool operator==(const Name& a, const Name& b);
  friend std::strong_ordering operator<=>(const Name& a, const Name& b);

 private:
  struct Rep {
    unsigned atom_count = 1;
    std::vector<NameEntry> entries;
    unsigned rank = 0;
    std::size_t hash = 0;
  };
  explicit Name(std::shared_ptr<const Rep> r) : rep_(std::move(r)) {}

  std::shared_ptr<const Rep> rep_;
};

struct NameEntry {
  Name name;
  ba::Element value;

  friend bool operator==(const NameEntry&, const NameEntry&) = default;
  friend std::strong_ordering operator<=>(const NameEntry& a, const NameEntry& b) {
    if (auto c = a.name <=> b.name; c != 0) return c;
    return a.value.bits() <=> b.value.bits();
  }
};

inline std::size_t Name::size() const { return rep_->entries.size(); }
inline bool Name::empty() const { return rep_->entries.empty(); }

struct NameHash {
  std::size_t operator()(const Name& n) const { return n.hash(); }
};

/// x̌ = {⟨y̌, 1⟩ : y ∈ x}.
Name check_name(const HFSet& x, const ba::Algebra& b);

/// Every name reachable through entries (including τ itself), canonical order.
std::vector<Name> subnames(const Name& t);

}  // namespace bvm::names
