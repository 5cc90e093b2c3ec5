#include "bvm/fol/formula.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace bvm::fol {

void Signature::add_relation(const std::string& name, unsigned arity) {
  if (relations_.contains(name) || functions_.contains(name)) throw InputError("duplicate symbol '" + name + "'");
  relations_[name] = arity;
}

void Signature::add_function(const std::string& name, unsigned arity) {
  if (relations_.contains(name) || functions_.contains(name)) throw InputError("duplicate symbol '" + name + "'");
  functions_[name] = arity;
}

unsigned Signature::relation_arity(const std::string& name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw InputError("unknown relation symbol '" + name + "'");
  return it->second;
}

unsigned Signature::function_arity(const std::string& name) const {
  auto it = functions_.find(name);
  if (it == functions_.end()) throw InputError("unknown function symbol '" + name + "'");
  return it->second;
}

Signature Signature::set_theory() {
  Signature s;
  s.add_relation(kMembership, 2);
  s.add_relation(kGroundPredicate, 1);
  return s;
}

Formula Formula::make(Node n) {
  unsigned d = 0;
  for (const auto& c : n.children) d = std::max(d, c.depth() + 1);
  n.depth = d;
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::relation(std::string symbol, std::vector<std::string> args) {
  return make(Node{Kind::Relation, std::move(symbol), std::move(args), {}, {}, 0});
}

Formula Formula::equal(std::string lhs, std::string rhs) {
  return make(Node{Kind::Equal, {}, {std::move(lhs), std::move(rhs)}, {}, {}, 0});
}

Formula Formula::function_equal(std::string value, std::string symbol, std::vector<std::string> args) {
  args.insert(args.begin(), std::move(value));
  return make(Node{Kind::FunctionEqual, std::move(symbol), std::move(args), {}, {}, 0});
}

Formula Formula::negation(Formula f) { return make(Node{Kind::Not, {}, {}, {}, {std::move(f)}, 0}); }

Formula Formula::conjunction(Formula a, Formula b) {
  return make(Node{Kind::And, {}, {}, {}, {std::move(a), std::move(b)}, 0});
}

Formula Formula::exists(std::string var, Formula body) {
  return make(Node{Kind::Exists, {}, {}, std::move(var), {std::move(body)}, 0});
}

Formula Formula::disjunction(Formula a, Formula b) {
  return negation(conjunction(negation(std::move(a)), negation(std::move(b))));
}

Formula Formula::implication(Formula a, Formula b) { return negation(conjunction(std::move(a), negation(std::move(b)))); }

Formula Formula::forall(std::string var, Formula body) { return negation(exists(std::move(var), negation(std::move(body)))); }

unsigned Formula::quantifier_depth() const {
  unsigned d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.quantifier_depth());
  return kind() == Kind::Exists ? d + 1 : d;
}

std::set<std::string> Formula::free_variables() const {
  if (is_atomic()) return {args().begin(), args().end()};
  std::set<std::string> out;
  for (const auto& c : node_->children) {
    auto sub = c.free_variables();
    out.insert(sub.begin(), sub.end());
  }
  if (kind() == Kind::Exists) out.erase(var());
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.symbol == y.symbol && x.args == y.args && x.var == y.var && x.children == y.children;
}

Formula relativize(const Formula& f) {
  switch (f.kind()) {
    case Kind::Relation:
    case Kind::Equal:
    case Kind::FunctionEqual:
      return f;
    case Kind::Not:
      return Formula::negation(relativize(f.child(0)));
    case Kind::And:
      return Formula::conjunction(relativize(f.child(0)), relativize(f.child(1)));
    case Kind::Exists:
      return Formula::exists(f.var(), Formula::conjunction(Formula::relation(kGroundPredicate, {f.var()}),
                                                           relativize(f.child(0))));
  }
  return f;
}

namespace {

Formula rename_rec(const Formula& f, std::map<std::string, std::string>& scope, unsigned& counter) {
  auto sub = [&](const std::string& v) {
    auto it = scope.find(v);
    return it == scope.end() ? v : it->second;
  };
  switch (f.kind()) {
    case Kind::Relation: {
      std::vector<std::string> args;
      for (const auto& a : f.args()) args.push_back(sub(a));
      return Formula::relation(f.symbol(), args);
    }
    case Kind::Equal:
      return Formula::equal(sub(f.args()[0]), sub(f.args()[1]));
    case Kind::FunctionEqual: {
      std::vector<std::string> args;
      for (std::size_t i = 1; i < f.args().size(); ++i) args.push_back(sub(f.args()[i]));
      return Formula::function_equal(sub(f.args()[0]), f.symbol(), args);
    }
    case Kind::Not:
      return Formula::negation(rename_rec(f.child(0), scope, counter));
    case Kind::And:
      return Formula::conjunction(rename_rec(f.child(0), scope, counter), rename_rec(f.child(1), scope, counter));
    case Kind::Exists: {
      std::string fresh = "_b" + std::to_string(counter++);
      auto saved = scope.find(f.var()) == scope.end() ? std::nullopt : std::optional<std::string>(scope[f.var()]);
      scope[f.var()] = fresh;
      Formula body = rename_rec(f.child(0), scope, counter);
      if (saved) {
        scope[f.var()] = *saved;
      } else {
        scope.erase(f.var());
      }
      return Formula::exists(fresh, body);
    }
  }
  return f;
}

void print(const Formula& f, bool tail, std::string& out) {
  auto join_args = [&](std::size_t from) {
    for (std::size_t i = from; i < f.args().size(); ++i) {
      if (i > from) out += ",";
      out += f.args()[i];
    }
  };
  switch (f.kind()) {
    case Kind::Relation:
      if (f.symbol() == kMembership && f.args().size() == 2) {
        out += f.args()[0] + " in " + f.args()[1];
      } else {
        out += f.symbol() + "(";
        join_args(0);
        out += ")";
      }
      return;
    case Kind::Equal:
      out += f.args()[0] + " = " + f.args()[1];
      return;
    case Kind::FunctionEqual:
      out += f.args()[0] + " = " + f.symbol() + "(";
      join_args(1);
      out += ")";
      return;
    case Kind::Not:
      out += "!";
      print(f.child(0), tail, out);
      return;
    case Kind::And:
      out += "(";
      print(f.child(0), false, out);
      out += " & ";
      print(f.child(1), true, out);
      out += ")";
      return;
    case Kind::Exists:
      if (!tail) out += "(";
      out += "exists " + f.var() + ". ";
      print(f.child(0), true, out);
      if (!tail) out += ")";
      return;
  }
}

}  // namespace

Formula alpha_rename(const Formula& f) {
  std::map<std::string, std::string> scope;
  unsigned counter = 0;
  return rename_rec(f, scope, counter);
}

std::string to_string(const Formula& f) {
  std::string out;
  print(f, true, out);
  return out;
}

}  // namespace bvm::fol
