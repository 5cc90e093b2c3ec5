#include <algorithm>
#include <memory>

#include "bvm/error.hpp"
#include "bvm/fol/structure.hpp"

namespace bvm::fol {

using ba::Bits;

namespace {

// Formula flattened into an array with variables resolved to environment slots.
struct Node {
  Kind kind;
  std::string symbol;
  std::vector<std::size_t> slots;
  std::size_t bound = 0;
  // The bound variable does not occur in the body; one pass suffices on a nonempty universe.
  bool vacuous = false;
  int left = -1;
  int right = -1;
};

struct Program {
  std::vector<Node> nodes;
  std::vector<std::size_t> env;
  int root = -1;
};

class Compiler {
 public:
  Compiler(const Assignment& a, std::size_t universe) {
    for (const auto& [var, idx] : a) {
      if (idx >= universe) throw InputError("assignment of '" + var + "' is out of range");
      scope_[var].push_back(prog_.env.size());
      prog_.env.push_back(idx);
    }
  }

  std::size_t free_slot(const std::string& var) const { return scope_.at(var).front(); }

  Program compile(const Formula& f) {
    prog_.root = emit(f);
    return std::move(prog_);
  }

 private:
  std::size_t slot(const std::string& var) {
    auto it = scope_.find(var);
    if (it == scope_.end() || it->second.empty()) throw InputError("unassigned free variable '" + var + "'");
    ++uses_[it->second.back()];
    return it->second.back();
  }

  int emit(const Formula& f) {
    Node n{f.kind(), {}, {}, 0, false, -1, -1};
    switch (f.kind()) {
      case Kind::Relation:
      case Kind::Equal:
      case Kind::FunctionEqual:
        n.symbol = f.symbol();
        for (const auto& a : f.args()) n.slots.push_back(slot(a));
        break;
      case Kind::Not:
        n.left = emit(f.child(0));
        break;
      case Kind::And:
        n.left = emit(f.child(0));
        n.right = emit(f.child(1));
        break;
      case Kind::Exists: {
        n.bound = prog_.env.size();
        prog_.env.push_back(0);
        scope_[f.var()].push_back(n.bound);
        n.left = emit(f.child(0));
        n.vacuous = uses_[n.bound] == 0;
        scope_[f.var()].pop_back();
        break;
      }
    }
    prog_.nodes.push_back(std::move(n));
    return static_cast<int>(prog_.nodes.size() - 1);
  }

  Program prog_;
  std::map<std::string, std::vector<std::size_t>> scope_;
  std::map<std::size_t, std::size_t> uses_;
};

template <class Value, class Tables>
class Evaluator {
 public:
  Evaluator(Program p, const Tables& t, std::size_t universe) : p_(std::move(p)), t_(t), n_(universe) {
    tables_.resize(p_.nodes.size(), nullptr);
    for (std::size_t i = 0; i < p_.nodes.size(); ++i) {
      const Node& node = p_.nodes[i];
      if (node.kind == Kind::Relation) {
        check_arity(t_.sig().relation_arity(node.symbol), node.slots.size(), node.symbol);
        tables_[i] = t_.relation(node.symbol);
      } else if (node.kind == Kind::FunctionEqual) {
        check_arity(t_.sig().function_arity(node.symbol) + 1, node.slots.size(), node.symbol);
        tables_[i] = t_.function(node.symbol);
      }
    }
  }

  Value run() { return eval(p_.root); }
  std::vector<std::size_t>& env() { return p_.env; }

 private:
  static void check_arity(std::size_t want, std::size_t got, const std::string& sym) {
    if (want != got) throw InputError("arity mismatch for '" + sym + "'");
  }

  std::size_t offset(const Node& node) const {
    std::size_t off = 0;
    for (std::size_t s : node.slots) off = off * n_ + p_.env[s];
    return off;
  }

  Value eval(int id) {
    const Node& node = p_.nodes[static_cast<std::size_t>(id)];
    switch (node.kind) {
      case Kind::Relation:
        return t_.lift_relation((*tables_[static_cast<std::size_t>(id)])[offset(node)]);
      case Kind::FunctionEqual:
        return t_.function_value(*tables_[static_cast<std::size_t>(id)], node, p_.env, n_);
      case Kind::Equal:
        return t_.equal(p_.env[node.slots[0]], p_.env[node.slots[1]]);
      case Kind::Not:
        return t_.negate(eval(node.left));
      case Kind::And: {
        Value l = eval(node.left);
        if (t_.is_bottom(l)) return l;
        return t_.meet(l, eval(node.right));
      }
      case Kind::Exists: {
        if (node.vacuous) return eval(node.left);
        Value acc = t_.bottom();
        for (std::size_t v = 0; v < n_; ++v) {
          p_.env[node.bound] = v;
          acc = t_.join(acc, eval(node.left));
          if (t_.is_top(acc)) break;
        }
        return acc;
      }
    }
    return t_.bottom();
  }

  Program p_;
  const Tables& t_;
  std::size_t n_;
  std::vector<const typename Tables::Table*> tables_;
};

struct BooleanTables {
  using Table = std::vector<Bits>;
  const BValuedStructure& s;
  Bits full;

  const Signature& sig() const { return s.signature(); }
  const Table* relation(const std::string& sym) const { return &s.relation_table(sym); }
  const Table* function(const std::string& sym) const { return &s.function_table(sym); }
  Bits lift_relation(Bits v) const { return v; }
  Bits function_value(const Table& t, const Node& node, const std::vector<std::size_t>& env, std::size_t n) const {
    std::size_t off = 0;
    for (std::size_t slot : node.slots) off = off * n + env[slot];
    return t[off];
  }
  Bits equal(std::size_t a, std::size_t b) const { return s.equality_table()[a * s.size() + b]; }
  Bits negate(Bits v) const { return ~v & full; }
  Bits meet(Bits a, Bits b) const { return a & b; }
  Bits join(Bits a, Bits b) const { return a | b; }
  Bits bottom() const { return 0; }
  bool is_bottom(Bits v) const { return v == 0; }
  bool is_top(Bits v) const { return v == full; }
};

struct ClassicalTables {
  const ClassicalStructure& s;
  struct Table {
    const std::vector<char>* rel = nullptr;
    const std::vector<std::size_t>* fn = nullptr;
    char operator[](std::size_t i) const { return (*rel)[i]; }
  };
  mutable std::vector<std::unique_ptr<Table>> owned;

  const Signature& sig() const { return s.signature(); }
  const Table* relation(const std::string& sym) const {
    owned.push_back(std::make_unique<Table>(Table{&s.relation_table(sym), nullptr}));
    return owned.back().get();
  }
  const Table* function(const std::string& sym) const {
    owned.push_back(std::make_unique<Table>(Table{nullptr, &s.function_table(sym)}));
    return owned.back().get();
  }
  bool lift_relation(char v) const { return v != 0; }
  bool function_value(const Table& t, const Node& node, const std::vector<std::size_t>& env, std::size_t n) const {
    std::size_t off = 0;
    for (std::size_t i = 1; i < node.slots.size(); ++i) off = off * n + env[node.slots[i]];
    return (*t.fn)[off] == env[node.slots[0]];
  }
  bool equal(std::size_t a, std::size_t b) const { return a == b; }
  bool negate(bool v) const { return !v; }
  bool meet(bool a, bool b) const { return a && b; }
  bool join(bool a, bool b) const { return a || b; }
  bool bottom() const { return false; }
  bool is_bottom(bool v) const { return !v; }
  bool is_top(bool v) const { return v; }
};

}  // namespace

ba::Element boolean_value(const BValuedStructure& s, const Formula& f, const Assignment& a) {
  BooleanTables tables{s, s.algebra().one().bits()};
  Evaluator<Bits, BooleanTables> ev(Compiler(a, s.size()).compile(f), tables, s.size());
  return s.algebra().from_bits(ev.run());
}

bool holds(const ClassicalStructure& s, const Formula& f, const Assignment& a) {
  ClassicalTables tables{s, {}};
  Evaluator<bool, ClassicalTables> ev(Compiler(a, s.size()).compile(f), tables, s.size());
  return ev.run();
}

namespace {

template <class Value, class Tables, class Structure>
std::vector<Value> tabulate(const Structure& s, const Tables& tables, const Formula& f,
                            const std::vector<std::string>& vars) {
  Assignment a;
  for (const auto& v : vars) a[v] = 0;
  if (a.size() != vars.size()) throw InputError("table variables must be distinct");
  Compiler c(a, s.size());
  std::vector<std::size_t> slots;
  for (const auto& v : vars) slots.push_back(c.free_slot(v));
  Evaluator<Value, Tables> ev(c.compile(f), tables, s.size());
  std::size_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (total > (std::size_t{1} << 32) / s.size()) throw SizeError("assignment table too large");
    total *= s.size();
  }
  std::vector<Value> out(total);
  auto& env = ev.env();
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t r = k;
    for (std::size_t i = vars.size(); i-- > 0;) {
      env[slots[i]] = r % s.size();
      r /= s.size();
    }
    out[k] = ev.run();
  }
  return out;
}

}  // namespace

std::vector<ba::Bits> boolean_table(const BValuedStructure& s, const Formula& f, const std::vector<std::string>& vars) {
  BooleanTables tables{s, s.algebra().one().bits()};
  return tabulate<Bits>(s, tables, f, vars);
}

std::vector<char> holds_table(const ClassicalStructure& s, const Formula& f, const std::vector<std::string>& vars) {
  ClassicalTables tables{s, {}};
  const auto values = tabulate<bool>(s, tables, f, vars);
  return {values.begin(), values.end()};
}

FullnessResult fullness_witness(const BValuedStructure& s, const Formula& f, const std::string& var, const Assignment& a) {
  FullnessResult out{boolean_value(s, Formula::exists(var, f), a), std::nullopt};
  Assignment local = a;
  for (std::size_t t = 0; t < s.size(); ++t) {
    local[var] = t;
    if (boolean_value(s, f, local) == out.join) {
      out.witness = t;
      break;
    }
  }
  return out;
}

}  // namespace bvm::fol
