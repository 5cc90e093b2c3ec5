#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bvm/ba/algebra.hpp"
#include "bvm/fol/formula.hpp"

namespace bvm::fol {

/// Variable name to index into a structure's name sequence.
using Assignment = std::map<std::string, std::size_t>;

/// A B-valued structure over a finite name sequence. Tables default to the
/// diagonal for equality and 0 elsewhere.
class BValuedStructure {
 public:
  BValuedStructure(ba::Algebra algebra, std::vector<std::string> names, Signature sig);

  const ba::Algebra& algebra() const { return algebra_; }
  const Signature& signature() const { return sig_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  std::size_t index_of(const std::string& name) const;

  ba::Element equality(std::size_t s, std::size_t t) const;
  void set_equality(std::size_t s, std::size_t t, ba::Element v);
  ba::Element relation(const std::string& sym, std::span<const std::size_t> args) const;
  void set_relation(const std::string& sym, std::span<const std::size_t> args, ba::Element v);
  /// ⟦y = f(args)⟧.
  ba::Element function(const std::string& sym, std::size_t y, std::span<const std::size_t> args) const;
  void set_function(const std::string& sym, std::size_t y, std::span<const std::size_t> args, ba::Element v);

  // Raw row-major tables (bit patterns), first argument most significant.
  const std::vector<ba::Bits>& equality_table() const { return equality_; }
  const std::vector<ba::Bits>& relation_table(const std::string& sym) const;
  /// Indexed by (y, args…).
  const std::vector<ba::Bits>& function_table(const std::string& sym) const;
  std::vector<ba::Bits>& mutable_relation_table(const std::string& sym);
  std::vector<ba::Bits>& mutable_equality_table() { return equality_; }

 private:
  std::size_t offset(std::span<const std::size_t> args) const;
  void check_value(ba::Element v) const;

  ba::Algebra algebra_;
  std::vector<std::string> names_;
  Signature sig_;
  std::vector<ba::Bits> equality_;
  std::map<std::string, std::vector<ba::Bits>> relations_;
  std::map<std::string, std::vector<ba::Bits>> functions_;
};

/// A two-valued structure; equality is identity.
class ClassicalStructure {
 public:
  ClassicalStructure(std::size_t size, Signature sig);

  std::size_t size() const { return size_; }
  const Signature& signature() const { return sig_; }
  bool relation(const std::string& sym, std::span<const std::size_t> args) const;
  void set_relation(const std::string& sym, std::span<const std::size_t> args, bool v);
  std::size_t function(const std::string& sym, std::span<const std::size_t> args) const;
  void set_function(const std::string& sym, std::span<const std::size_t> args, std::size_t value);

  const std::vector<char>& relation_table(const std::string& sym) const;
  const std::vector<std::size_t>& function_table(const std::string& sym) const;

 private:
  std::size_t offset(std::span<const std::size_t> args) const;

  std::size_t size_;
  Signature sig_;
  std::map<std::string, std::vector<char>> relations_;
  std::map<std::string, std::vector<std::size_t>> functions_;
};

struct LawViolation {
  std::string law;
  std::string symbol;
  std::vector<std::size_t> witness;
};

struct LawReport {
  std::vector<LawViolation> violations;
  std::size_t checks = 0;
  bool ok() const { return violations.empty(); }
  bool violates(const std::string& law) const;
};

/// Checks reflexivity, symmetry and transitivity of equality, congruence of
/// every relation, and for functions congruence, totality (⋁_t ⟦t=f(s⃗)⟧ = 1)
/// and functionality. Congruence is checked one argument position at a time,
/// which given reflexivity is equivalent to the simultaneous form.
LawReport check_laws(const BValuedStructure& s, std::size_t max_violations = 16);

/// ⟦φ⟧ under the assignment; ∃ joins over the structure's names.
ba::Element boolean_value(const BValuedStructure& s, const Formula& f, const Assignment& a);

/// Tarskian truth.
bool holds(const ClassicalStructure& s, const Formula& f, const Assignment& a);

/// ⟦φ⟧ for every assignment of `vars` (covering φ's free variables) into the
/// names, row-major with vars[0] most significant. One compilation serves all rows.
std::vector<ba::Bits> boolean_table(const BValuedStructure& s, const Formula& f, const std::vector<std::string>& vars);

/// Same table computed bottom-up over dense per-subformula tables. Much
/// faster under nested quantifiers; throws SizeError when a table would pass 2^26 cells.
std::vector<ba::Bits> boolean_table_bottom_up(const BValuedStructure& s, const Formula& f,
                                              const std::vector<std::string>& vars);

/// Tarskian truth for every assignment, laid out as boolean_table.
std::vector<char> holds_table(const ClassicalStructure& s, const Formula& f, const std::vector<std::string>& vars);

struct FullnessResult {
  ba::Element join;
  /// A name t with ⟦φ(t)⟧ = ⟦∃x φ⟧, if one exists.
  std::optional<std::size_t> witness;
};

FullnessResult fullness_witness(const BValuedStructure& s, const Formula& f, const std::string& var, const Assignment& a);

/// Product-style structure over factor structures M_i with algebra P(I):
/// ⟦R(f⃗)⟧ = {i : M_i ⊨ R(f⃗(i))} where names are all functions picking one
/// element per factor (index order: factor 0 most significant).
BValuedStructure product_structure(const std::vector<ClassicalStructure>& factors);

struct ClassicalQuotient {
  ClassicalStructure structure;
  /// Class index of each name.
  std::vector<std::size_t> class_of;
};

/// The 2-valued structure induced by a 1-atom structure: names identified
/// when ⟦s=t⟧ = 1, atomic truth read off class representatives.
ClassicalQuotient to_classical(const BValuedStructure& s);

}  // namespace bvm::fol
