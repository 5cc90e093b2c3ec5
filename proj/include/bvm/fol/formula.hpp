#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bvm/error.hpp"

namespace bvm::fol {

/// Relation and function symbols with arities. Names are unique across both kinds.
/// Equality is always present and is not listed.
class Signature {
 public:
  void add_relation(const std::string& name, unsigned arity);
  void add_function(const std::string& name, unsigned arity);
  bool has_relation(const std::string& name) const { return relations_.contains(name); }
  bool has_function(const std::string& name) const { return functions_.contains(name); }
  unsigned relation_arity(const std::string& name) const;
  unsigned function_arity(const std::string& name) const;
  const std::map<std::string, unsigned>& relations() const { return relations_; }
  const std::map<std::string, unsigned>& functions() const { return functions_; }

  /// Membership `in`/2 and the ground-model predicate `Vcheck`/1.
  static Signature set_theory();

 private:
  std::map<std::string, unsigned> relations_;
  std::map<std::string, unsigned> functions_;
};

inline constexpr const char* kMembership = "in";
inline constexpr const char* kGroundPredicate = "Vcheck";

enum class Kind { Relation, Equal, FunctionEqual, Not, And, Exists };

/// Immutable formula over the primitive basis {∧, ¬, ∃}. Terms are variables;
/// function symbols occur only in atoms of the form y = f(s₁,…,sₙ).
class Formula {
 public:
  static Formula relation(std::string symbol, std::vector<std::string> args);
  static Formula equal(std::string lhs, std::string rhs);
  static Formula function_equal(std::string value, std::string symbol, std::vector<std::string> args);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula exists(std::string var, Formula body);

  // Derived connectives, desugared on construction.
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula forall(std::string var, Formula body);

  Kind kind() const { return node_->kind; }
  /// Relation or function symbol of an atom.
  const std::string& symbol() const { return node_->symbol; }
  /// Atom arguments. For function atoms, args()[0] is the value variable.
  const std::vector<std::string>& args() const { return node_->args; }
  /// Bound variable of an ∃ node.
  const std::string& var() const { return node_->var; }
  std::size_t arity() const { return node_->children.size(); }
  const Formula& child(std::size_t i) const { return node_->children.at(i); }

  bool is_atomic() const { return kind() == Kind::Relation || kind() == Kind::Equal || kind() == Kind::FunctionEqual; }
  /// Nesting depth of ¬, ∧, ∃; atoms have depth 0.
  unsigned depth() const { return node_->depth; }
  /// Deepest nesting of ∃.
  unsigned quantifier_depth() const;
  std::set<std::string> free_variables() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string symbol;
    std::vector<std::string> args;
    std::string var;
    std::vector<Formula> children;
    unsigned depth = 0;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Node n);

  std::shared_ptr<const Node> node_;
};

/// φ^V̌: every quantifier ∃x ψ becomes ∃x (Vcheck(x) ∧ ψ^V̌).
Formula relativize(const Formula& f);

/// Renames every bound variable to a fresh name (`_b0`, `_b1`, …).
Formula alpha_rename(const Formula& f);

/// Prints in the input grammar; parse(to_string(f)) == f.
std::string to_string(const Formula& f);

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar:
///   formula    := implication [ "@Vcheck" ]
///   implication:= disjunction [ "->" implication ]
///   disjunction:= conjunction { "|" conjunction }
///   conjunction:= unary { "&" unary }
///   unary      := "!" unary | ("exists" | "forall") ident "." implication
///               | "(" formula ")" | atom
///   atom       := ident "in" ident | ident "=" ident
///               | ident "=" ident "(" args ")" | ident "(" args ")"
/// Throws ParseError on syntax errors, unknown symbols and arity mismatches.
Formula parse(std::string_view source, const Signature& sig);

}  // namespace bvm::fol
