#include "bvm/fol/structure.hpp"

#include <algorithm>

namespace bvm::fol {

using ba::Bits;
using ba::Element;

namespace {

std::size_t power(std::size_t base, unsigned exp) {
  std::size_t out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && out > (std::size_t{1} << 40) / base) throw SizeError("structure table too large");
    out *= base;
  }
  return out;
}

}  // namespace

BValuedStructure::BValuedStructure(ba::Algebra algebra, std::vector<std::string> names, Signature sig)
    : algebra_(std::move(algebra)), names_(std::move(names)), sig_(std::move(sig)) {
  const std::size_t n = names_.size();
  if (n == 0) throw InputError("structure needs at least one name");
  equality_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) equality_[i * n + i] = algebra_.one().bits();
  for (const auto& [sym, arity] : sig_.relations()) relations_[sym].assign(power(n, arity), 0);
  for (const auto& [sym, arity] : sig_.functions()) functions_[sym].assign(power(n, arity + 1), 0);
}

std::size_t BValuedStructure::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InputError("unknown name '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t BValuedStructure::offset(std::span<const std::size_t> args) const {
  std::size_t off = 0;
  for (std::size_t a : args) {
    if (a >= names_.size()) throw InputError("name index out of range");
    off = off * names_.size() + a;
  }
  return off;
}

void BValuedStructure::check_value(Element v) const {
  if (!algebra_.owns(v)) throw InputError("structure: value belongs to another algebra");
}

Element BValuedStructure::equality(std::size_t s, std::size_t t) const {
  const std::size_t args[] = {s, t};
  return algebra_.from_bits(equality_[offset(args)]);
}

void BValuedStructure::set_equality(std::size_t s, std::size_t t, Element v) {
  check_value(v);
  const std::size_t args[] = {s, t};
  equality_[offset(args)] = v.bits();
}

const std::vector<Bits>& BValuedStructure::relation_table(const std::string& sym) const {
  auto it = relations_.find(sym);
  if (it == relations_.end()) throw InputError("unknown relation symbol '" + sym + "'");
  return it->second;
}

std::vector<Bits>& BValuedStructure::mutable_relation_table(const std::string& sym) {
  auto it = relations_.find(sym);
  if (it == relations_.end()) throw InputError("unknown relation symbol '" + sym + "'");
  return it->second;
}

const std::vector<Bits>& BValuedStructure::function_table(const std::string& sym) const {
  auto it = functions_.find(sym);
  if (it == functions_.end()) throw InputError("unknown function symbol '" + sym + "'");
  return it->second;
}

Element BValuedStructure::relation(const std::string& sym, std::span<const std::size_t> args) const {
  if (args.size() != sig_.relation_arity(sym)) throw InputError("arity mismatch for '" + sym + "'");
  return algebra_.from_bits(relation_table(sym)[offset(args)]);
}

void BValuedStructure::set_relation(const std::string& sym, std::span<const std::size_t> args, Element v) {
  check_value(v);
  if (args.size() != sig_.relation_arity(sym)) throw InputError("arity mismatch for '" + sym + "'");
  relations_.at(sym)[offset(args)] = v.bits();
}

Element BValuedStructure::function(const std::string& sym, std::size_t y, std::span<const std::size_t> args) const {
  if (args.size() != sig_.function_arity(sym)) throw InputError("arity mismatch for '" + sym + "'");
  std::vector<std::size_t> full{y};
  full.insert(full.end(), args.begin(), args.end());
  return algebra_.from_bits(function_table(sym)[offset(full)]);
}

void BValuedStructure::set_function(const std::string& sym, std::size_t y, std::span<const std::size_t> args, Element v) {
  check_value(v);
  if (args.size() != sig_.function_arity(sym)) throw InputError("arity mismatch for '" + sym + "'");
  std::vector<std::size_t> full{y};
  full.insert(full.end(), args.begin(), args.end());
  functions_.at(sym)[offset(full)] = v.bits();
}

ClassicalStructure::ClassicalStructure(std::size_t size, Signature sig) : size_(size), sig_(std::move(sig)) {
  if (size_ == 0) throw InputError("structure needs a nonempty universe");
  for (const auto& [sym, arity] : sig_.relations()) relations_[sym].assign(power(size_, arity), 0);
  for (const auto& [sym, arity] : sig_.functions()) functions_[sym].assign(power(size_, arity), 0);
}

std::size_t ClassicalStructure::offset(std::span<const std::size_t> args) const {
  std::size_t off = 0;
  for (std::size_t a : args) {
    if (a >= size_) throw InputError("element index out of range");
    off = off * size_ + a;
  }
  return off;
}

bool ClassicalStructure::relation(const std::string& sym, std::span<const std::size_t> args) const {
  if (args.size() != sig_.relation_arity(sym)) throw InputError("arity mismatch for '" + sym + "'");
  return relation_table(sym)[offset(args)] != 0;
}

void ClassicalStructure::set_relation(const std::string& sym, std::span<const std::size_t> args, bool v) {
  if (args.size() != sig_.relation_arity(sym)) throw InputError("arity mismatch for '" + sym + "'");
  relations_.at(sym)[offset(args)] = v ? 1 : 0;
}

std::size_t ClassicalStructure::function(const std::string& sym, std::span<const std::size_t> args) const {
  if (args.size() != sig_.function_arity(sym)) throw InputError("arity mismatch for '" + sym + "'");
  return function_table(sym)[offset(args)];
}

void ClassicalStructure::set_function(const std::string& sym, std::span<const std::size_t> args, std::size_t value) {
  if (args.size() != sig_.function_arity(sym)) throw InputError("arity mismatch for '" + sym + "'");
  if (value >= size_) throw InputError("function value out of range");
  functions_.at(sym)[offset(args)] = value;
}

const std::vector<char>& ClassicalStructure::relation_table(const std::string& sym) const {
  auto it = relations_.find(sym);
  if (it == relations_.end()) throw InputError("unknown relation symbol '" + sym + "'");
  return it->second;
}

const std::vector<std::size_t>& ClassicalStructure::function_table(const std::string& sym) const {
  auto it = functions_.find(sym);
  if (it == functions_.end()) throw InputError("unknown function symbol '" + sym + "'");
  return it->second;
}

bool LawReport::violates(const std::string& law) const {
  return std::any_of(violations.begin(), violations.end(), [&](const LawViolation& v) { return v.law == law; });
}

namespace {

class LawChecker {
 public:
  LawChecker(const BValuedStructure& s, std::size_t limit)
      : s_(s), n_(s.size()), full_(s.algebra().one().bits()), eq_(s.equality_table()), limit_(limit) {}

  LawReport run() {
    equality_laws();
    for (const auto& [sym, arity] : s_.signature().relations()) congruence("relation_congruence", sym, s_.relation_table(sym), arity);
    for (const auto& [sym, arity] : s_.signature().functions()) {
      const auto& table = s_.function_table(sym);
      congruence("function_congruence", sym, table, arity + 1);
      function_laws(sym, table, arity);
    }
    return std::move(report_);
  }

 private:
  void flag(const char* law, const std::string& sym, std::vector<std::size_t> witness) {
    if (report_.violations.size() < limit_) report_.violations.push_back({law, sym, std::move(witness)});
  }

  Bits eq(std::size_t a, std::size_t b) const { return eq_[a * n_ + b]; }

  void equality_laws() {
    for (std::size_t s = 0; s < n_; ++s) {
      ++report_.checks;
      if (eq(s, s) != full_) flag("eq_reflexive", "=", {s});
    }
    for (std::size_t s = 0; s < n_; ++s)
      for (std::size_t t = 0; t < n_; ++t) {
        ++report_.checks;
        if (eq(s, t) != eq(t, s)) flag("eq_symmetric", "=", {s, t});
      }
    for (std::size_t s = 0; s < n_; ++s)
      for (std::size_t t = 0; t < n_; ++t) {
        const Bits st = eq(s, t);
        if (st == 0) continue;
        for (std::size_t u = 0; u < n_; ++u) {
          ++report_.checks;
          if ((st & eq(t, u) & ~eq(s, u)) != 0) flag("eq_transitive", "=", {s, t, u});
        }
      }
  }

  // ⟦s=t⟧ ∧ R(…s…) ≤ R(…t…), one position at a time.
  void congruence(const char* law, const std::string& sym, const std::vector<Bits>& table, unsigned arity) {
    if (arity == 0) return;
    std::size_t stride = 1;
    for (unsigned pos = arity; pos-- > 0;) {
      for (std::size_t idx = 0; idx < table.size(); ++idx) {
        const Bits v = table[idx];
        if (v == 0) continue;
        const std::size_t s = (idx / stride) % n_;
        const std::size_t base = idx - s * stride;
        for (std::size_t t = 0; t < n_; ++t) {
          ++report_.checks;
          if ((eq(s, t) & v & ~table[base + t * stride]) != 0) {
            std::vector<std::size_t> w = decode(idx, arity);
            w.push_back(pos);
            w.push_back(t);
            flag(law, sym, w);
          }
        }
      }
      stride *= n_;
    }
  }

  void function_laws(const std::string& sym, const std::vector<Bits>& table, unsigned arity) {
    std::size_t tuples = 1;
    for (unsigned i = 0; i < arity; ++i) tuples *= n_;
    for (std::size_t args = 0; args < tuples; ++args) {
      Bits total = 0;
      for (std::size_t y = 0; y < n_; ++y) total |= table[y * tuples + args];
      ++report_.checks;
      if (total != full_) flag("function_total", sym, decode(args, arity));
      for (std::size_t y0 = 0; y0 < n_; ++y0)
        for (std::size_t y1 = 0; y1 < n_; ++y1) {
          ++report_.checks;
          if ((table[y0 * tuples + args] & table[y1 * tuples + args] & ~eq(y0, y1)) != 0) {
            auto w = decode(args, arity);
            w.insert(w.begin(), {y0, y1});
            flag("function_functional", sym, w);
          }
        }
    }
  }

  std::vector<std::size_t> decode(std::size_t idx, unsigned arity) const {
    std::vector<std::size_t> out(arity);
    for (unsigned i = arity; i-- > 0;) {
      out[i] = idx % n_;
      idx /= n_;
    }
    return out;
  }

  const BValuedStructure& s_;
  std::size_t n_;
  Bits full_;
  const std::vector<Bits>& eq_;
  std::size_t limit_;
  LawReport report_;
};

}  // namespace

LawReport check_laws(const BValuedStructure& s, std::size_t max_violations) {
  return LawChecker(s, max_violations).run();
}

BValuedStructure product_structure(const std::vector<ClassicalStructure>& factors) {
  if (factors.empty()) throw InputError("product_structure: no factors");
  const Signature& sig = factors.front().signature();
  const auto k = static_cast<unsigned>(factors.size());
  ba::Algebra algebra(k);
  std::size_t count = 1;
  for (const auto& f : factors) {
    if (f.signature().relations() != sig.relations() || f.signature().functions() != sig.functions())
      throw InputError("product_structure: factors must share a signature");
    count *= f.size();
    if (count > 4096) throw SizeError("product_structure: too many names");
  }
  // Name index ↔ coordinate tuple, factor 0 most significant.
  std::vector<std::vector<std::size_t>> coords(count, std::vector<std::size_t>(k));
  std::vector<std::string> names;
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rest = idx;
    for (unsigned i = k; i-- > 0;) {
      coords[idx][i] = rest % factors[i].size();
      rest /= factors[i].size();
    }
    std::string label = "f";
    for (auto c : coords[idx]) label += "_" + std::to_string(c);
    names.push_back(label);
  }
  BValuedStructure out(algebra, names, sig);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      Bits v = 0;
      for (unsigned i = 0; i < k; ++i)
        if (coords[a][i] == coords[b][i]) v |= Bits{1} << i;
      out.set_equality(a, b, algebra.from_bits(v));
    }
  auto fill = [&](const std::string& sym, unsigned arity, bool is_function) {
    const unsigned slots = is_function ? arity + 1 : arity;
    std::vector<std::size_t> tuple(slots, 0);
    std::vector<std::size_t> local(arity);
    while (true) {
      Bits v = 0;
      for (unsigned i = 0; i < k; ++i) {
        if (is_function) {
          for (unsigned j = 0; j < arity; ++j) local[j] = coords[tuple[j + 1]][i];
          if (factors[i].function(sym, local) == coords[tuple[0]][i]) v |= Bits{1} << i;
        } else {
          for (unsigned j = 0; j < arity; ++j) local[j] = coords[tuple[j]][i];
          if (factors[i].relation(sym, local)) v |= Bits{1} << i;
        }
      }
      if (is_function) {
        out.set_function(sym, tuple[0], std::span<const std::size_t>(tuple).subspan(1), algebra.from_bits(v));
      } else {
        out.set_relation(sym, tuple, algebra.from_bits(v));
      }
      std::size_t pos = slots;
      while (pos > 0 && ++tuple[pos - 1] == count) tuple[--pos] = 0;
      if (pos == 0) break;
    }
  };
  for (const auto& [sym, arity] : sig.relations()) fill(sym, arity, false);
  for (const auto& [sym, arity] : sig.functions()) fill(sym, arity, true);
  return out;
}

ClassicalQuotient to_classical(const BValuedStructure& s) {
  if (s.algebra().atom_count() != 1) throw InputError("to_classical: needs a 1-atom structure");
  const std::size_t n = s.size();
  std::vector<std::size_t> class_of(n);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::find_if(reps.begin(), reps.end(), [&](std::size_t r) { return s.equality(r, i).is_one(); });
    if (it == reps.end()) {
      class_of[i] = reps.size();
      reps.push_back(i);
    } else {
      class_of[i] = static_cast<std::size_t>(it - reps.begin());
    }
  }
  ClassicalStructure c(reps.size(), s.signature());
  for (const auto& [sym, arity] : s.signature().relations()) {
    std::vector<std::size_t> tuple(arity, 0), names(arity);
    while (true) {
      for (unsigned j = 0; j < arity; ++j) names[j] = reps[tuple[j]];
      c.set_relation(sym, tuple, s.relation(sym, names).is_one());
      std::size_t pos = arity;
      while (pos > 0 && ++tuple[pos - 1] == reps.size()) tuple[--pos] = 0;
      if (pos == 0) break;
    }
  }
  for (const auto& [sym, arity] : s.signature().functions()) {
    std::vector<std::size_t> tuple(arity, 0), names(arity);
    while (true) {
      for (unsigned j = 0; j < arity; ++j) names[j] = reps[tuple[j]];
      for (std::size_t y = 0; y < n; ++y)
        if (s.function(sym, y, names).is_one()) {
          c.set_function(sym, tuple, class_of[y]);
          break;
        }
      std::size_t pos = arity;
      while (pos > 0 && ++tuple[pos - 1] == reps.size()) tuple[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return {std::move(c), std::move(class_of)};
}

}  // namespace bvm::fol
