#pragma once

// Test-only reference evaluators. They walk the AST directly with an explicit
// environment and share no code with the compiled evaluators in the library.

#include <map>
#include <string>
#include <vector>

#include "bvm/fol/formula.hpp"
#include "bvm/fol/structure.hpp"

namespace oracle {

using bvm::fol::Formula;
using bvm::fol::Kind;

inline bool naive_holds(const bvm::fol::ClassicalStructure& s, const Formula& f, std::map<std::string, std::size_t> env) {
  auto look = [&](const std::string& v) { return env.at(v); };
  switch (f.kind()) {
    case Kind::Relation: {
      std::vector<std::size_t> args;
      for (const auto& a : f.args()) args.push_back(look(a));
      return s.relation(f.symbol(), args);
    }
    case Kind::Equal:
      return look(f.args()[0]) == look(f.args()[1]);
    case Kind::FunctionEqual: {
      std::vector<std::size_t> args;
      for (std::size_t i = 1; i < f.args().size(); ++i) args.push_back(look(f.args()[i]));
      return s.function(f.symbol(), args) == look(f.args()[0]);
    }
    case Kind::Not:
      return !naive_holds(s, f.child(0), env);
    case Kind::And:
      return naive_holds(s, f.child(0), env) && naive_holds(s, f.child(1), env);
    case Kind::Exists:
      for (std::size_t v = 0; v < s.size(); ++v) {
        env[f.var()] = v;
        if (naive_holds(s, f.child(0), env)) return true;
      }
      return false;
  }
  return false;
}

inline bvm::ba::Element naive_value(const bvm::fol::BValuedStructure& s, const Formula& f, std::map<std::string, std::size_t> env) {
  auto look = [&](const std::string& v) { return env.at(v); };
  const auto& b = s.algebra();
  switch (f.kind()) {
    case Kind::Relation: {
      std::vector<std::size_t> args;
      for (const auto& a : f.args()) args.push_back(look(a));
      return s.relation(f.symbol(), args);
    }
    case Kind::Equal:
      return s.equality(look(f.args()[0]), look(f.args()[1]));
    case Kind::FunctionEqual: {
      std::vector<std::size_t> args;
      for (std::size_t i = 1; i < f.args().size(); ++i) args.push_back(look(f.args()[i]));
      return s.function(f.symbol(), look(f.args()[0]), args);
    }
    case Kind::Not:
      return b.complement(naive_value(s, f.child(0), env));
    case Kind::And:
      return b.meet(naive_value(s, f.child(0), env), naive_value(s, f.child(1), env));
    case Kind::Exists: {
      auto acc = b.zero();
      for (std::size_t v = 0; v < s.size(); ++v) {
        env[f.var()] = v;
        acc = b.join(acc, naive_value(s, f.child(0), env));
      }
      return acc;
    }
  }
  return b.zero();
}

/// Calls fn(assignment) for every assignment of `vars` into {0..n-1}.
template <class Fn>
void for_each_assignment(const std::vector<std::string>& vars, std::size_t n, Fn&& fn) {
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    std::map<std::string, std::size_t> a;
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = idx[i];
    fn(a);
    std::size_t pos = vars.size();
    while (pos > 0 && ++idx[pos - 1] == n) idx[--pos] = 0;
    if (pos == 0) break;
  }
}

}  // namespace oracle
