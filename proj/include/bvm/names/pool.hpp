#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bvm/ba/algebra.hpp"
#include "bvm/fol/formula.hpp"
#include "bvm/fol/structure.hpp"
#include "bvm/names/hfset.hpp"
#include "bvm/names/name.hpp"

namespace bvm::names {

/// If τ = x̌ structurally, returns x.
std::optional<HFSet> as_check(const Name& t);

/// A finite stand-in for the class of all names: the range of quantifiers
/// and the V̌-join. Closed under subnames; names kept in canonical order.
class NamePool {
 public:
  static constexpr std::size_t kDefaultMaxSize = 4096;

  /// Check names of `fragment`, the given extra names, and all their subnames.
  NamePool(const ba::Algebra& b, const std::vector<HFSet>& fragment, const std::vector<Name>& extra = {},
           std::size_t max_size = kDefaultMaxSize);

  /// Check names of every HF set of rank ≤ r.
  static NamePool checks(const ba::Algebra& b, unsigned hf_rank, std::size_t max_size = kDefaultMaxSize);
  /// Checks of HF rank ≤ r plus every atom-wise mix of them: one name per
  /// function from atoms to HF_{≤r}, so |HF_{≤r}|^atoms names.
  static NamePool standard(const ba::Algebra& b, unsigned hf_rank, std::size_t max_size = kDefaultMaxSize);
  /// Names standard() would produce, computed without building them.
  static double standard_size(unsigned atom_count, unsigned hf_rank);

  /// This pool enlarged by more names (and their subnames).
  NamePool with(const std::vector<Name>& more) const;

  const ba::Algebra& algebra() const { return algebra_; }
  std::size_t size() const { return names_.size(); }
  const Name& operator[](std::size_t i) const { return names_[i]; }
  const std::vector<Name>& names() const { return names_; }
  std::optional<std::size_t> index_of(const Name& t) const;
  bool contains(const Name& t) const { return index_of(t).has_value(); }
  /// Indices of the check names in the pool; the V̌-join ranges over these.
  const std::vector<std::size_t>& check_indices() const { return checks_; }
  /// Index of x̌, if present.
  std::optional<std::size_t> check_index(const HFSet& x) const;
  std::size_t max_size() const { return max_size_; }

 private:
  NamePool(const ba::Algebra& b, std::vector<Name> seed, std::size_t max_size);

  ba::Algebra algebra_;
  std::vector<Name> names_;
  std::vector<std::size_t> checks_;
  std::map<HFSet, std::size_t> check_of_;
  std::size_t max_size_;
};

/// Variable name to pool name.
using NameAssignment = std::map<std::string, Name>;

/// The B-valued structure of a pool in the signature {in/2, Vcheck/1}, with
///   Vcheck(τ) = ⋁ over check names x̌ in the pool of ⟦τ = x̌⟧.
/// Tables are computed once on construction.
class PoolModel {
 public:
  explicit PoolModel(NamePool pool);

  const NamePool& pool() const { return pool_; }
  const fol::BValuedStructure& structure() const { return structure_; }

  ba::Element in(std::size_t t, std::size_t s) const;
  ba::Element eq(std::size_t t, std::size_t s) const;
  ba::Element vcheck(std::size_t t) const;

  /// ⟦φ⟧ with free variables bound to pool names.
  /// Throws InputError for an unassigned variable or a name outside the pool.
  ba::Element value(const fol::Formula& f, const NameAssignment& a) const;
  ba::Element value(const fol::Formula& f, const fol::Assignment& a) const;
  fol::Assignment indices(const NameAssignment& a) const;

 private:
  NamePool pool_;
  fol::BValuedStructure structure_;
};

/// One-shot formula value; builds the pool tables.
ba::Element bv_formula(const fol::Formula& f, const NameAssignment& a, const NamePool& pool);

}  // namespace bvm::names
