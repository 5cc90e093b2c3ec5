#include <set>

#include "bvm/fol/formula.hpp"
#include "bvm/fol/generator.hpp"
#include "bvm/fol/structure.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace bvm;
using namespace bvm::fol;
using ba::Algebra;
using ba::Element;

namespace {

Signature rel_sig() {
  Signature s;
  s.add_relation("R", 2);
  s.add_relation("P", 1);
  return s;
}

std::vector<std::string> free_list(const Formula& f) {
  auto fv = f.free_variables();
  return {fv.begin(), fv.end()};
}

}  // namespace

TEST_CASE("parse examples") {
  auto sig = rel_sig();
  sig.add_relation(kMembership, 2);
  auto f = parse("exists x. x = y", sig);
  CHECK(f == Formula::exists("x", Formula::equal("x", "y")));
  auto g = parse("!(R(a,b) & a = b)", sig);
  CHECK(g == Formula::negation(Formula::conjunction(Formula::relation("R", {"a", "b"}), Formula::equal("a", "b"))));
  auto h = parse("forall x. exists y. x in y", sig);
  auto expected = Formula::negation(Formula::exists(
      "x", Formula::negation(Formula::exists("y", Formula::relation(kMembership, {"x", "y"})))));
  CHECK(h == expected);
  CHECK(to_string(h) == "!exists x. !exists y. x in y");
}

TEST_CASE("derived connectives desugar to the primitive basis") {
  auto sig = rel_sig();
  CHECK(parse("P(x) | P(y)", sig) == Formula::disjunction(Formula::relation("P", {"x"}), Formula::relation("P", {"y"})));
  CHECK(parse("P(x) -> P(y)", sig) ==
        Formula::negation(Formula::conjunction(Formula::relation("P", {"x"}), Formula::negation(Formula::relation("P", {"y"})))));
  CHECK(parse("P(x) -> P(y) -> P(z)", sig) == parse("P(x) -> (P(y) -> P(z))", sig));
  CHECK(parse("P(x) & P(y) | P(z)", sig) == parse("(P(x) & P(y)) | P(z)", sig));
}

TEST_CASE("relativization suffix") {
  auto sig = Signature::set_theory();
  auto f = parse("exists x. x in y @Vcheck", sig);
  CHECK(f == Formula::exists("x", Formula::conjunction(Formula::relation(kGroundPredicate, {"x"}),
                                                       Formula::relation(kMembership, {"x", "y"}))));
  CHECK(parse("(exists x. x in y)@Vcheck", sig) == f);
  CHECK_THROWS_AS(parse("x in y @Foo", sig), ParseError);
  CHECK_THROWS_AS(parse("P(x) @Vcheck", rel_sig()), ParseError);
}

TEST_CASE("parse errors carry positions") {
  auto sig = rel_sig();
  try {
    parse("R(x,y) & ", sig);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 9);
  }
  try {
    parse("Q(x)", sig);
    FAIL("expected unknown symbol");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("unknown relation symbol 'Q'") != std::string::npos);
  }
  try {
    parse("R(x)", sig);
    FAIL("expected arity mismatch");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("arity mismatch") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("exists in. P(in)", sig), ParseError);
  CHECK_THROWS_AS(parse("P(x) $", sig), ParseError);
  CHECK_THROWS_AS(parse("(P(x)", sig), ParseError);
}

TEST_CASE("printer round-trips sampled formulas") {
  Signature sig = rel_sig();
  sig.add_function("f", 1);
  for (const auto& f : sample_formulas(sig, 400, 7, {4, {"x", "y", "z"}, 3})) {
    REQUIRE(parse(to_string(f), sig) == f);
    REQUIRE(f.depth() <= 4);
  }
  auto st = Signature::set_theory();
  for (const auto& f : sample_formulas(st, 200, 8)) {
    REQUIRE(parse(to_string(f), st) == f);
    auto r = relativize(f);
    REQUIRE(parse(to_string(r), st) == r);
  }
}

TEST_CASE("check_laws flags violations with witnesses") {
  Algebra b(2);
  BValuedStructure s(b, {"s", "t"}, rel_sig());
  CHECK(check_laws(s).ok());
  s.set_equality(0, 0, b.atom(0));
  auto r = check_laws(s);
  REQUIRE(r.violates("eq_reflexive"));
  CHECK(r.violations.front().witness == std::vector<std::size_t>{0});

  BValuedStructure asym(b, {"s", "t"}, rel_sig());
  asym.set_equality(0, 1, b.atom(0));
  CHECK(check_laws(asym).violates("eq_symmetric"));

  BValuedStructure trans(b, {"s", "t", "u"}, rel_sig());
  trans.set_equality(0, 1, b.one());
  trans.set_equality(1, 0, b.one());
  trans.set_equality(1, 2, b.one());
  trans.set_equality(2, 1, b.one());
  CHECK(check_laws(trans).violates("eq_transitive"));

  BValuedStructure cong(b, {"s", "t"}, rel_sig());
  cong.set_equality(0, 1, b.atom(1));
  cong.set_equality(1, 0, b.atom(1));
  const std::size_t s0[] = {0};
  cong.set_relation("P", s0, b.one());
  CHECK(check_laws(cong).violates("relation_congruence"));

  Signature fs;
  fs.add_function("f", 1);
  BValuedStructure fn(b, {"s", "t"}, fs);
  const std::size_t arg0[] = {0}, arg1[] = {1};
  fn.set_function("f", 0, arg0, b.atom(0));
  fn.set_function("f", 1, arg1, b.one());
  auto fr = check_laws(fn);
  CHECK(fr.violates("function_total"));
  fn.set_function("f", 1, arg0, b.one());
  CHECK(check_laws(fn).violates("function_functional"));

  BValuedStructure single(b, {"s"}, rel_sig());
  CHECK(check_laws(single).ok());
}

namespace {

std::vector<ClassicalStructure> small_factors() {
  Signature sig;
  sig.add_relation("R", 2);
  sig.add_function("f", 1);
  ClassicalStructure m0(2, sig), m1(3, sig);
  const std::size_t p01[] = {0, 1}, p11[] = {1, 1}, p20[] = {2, 0}, p12[] = {1, 2};
  m0.set_relation("R", p01, true);
  m0.set_relation("R", p11, true);
  m1.set_relation("R", p20, true);
  m1.set_relation("R", p12, true);
  for (std::size_t i = 0; i < 2; ++i) {
    const std::size_t a[] = {i};
    m0.set_function("f", a, 1 - i);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t a[] = {i};
    m1.set_function("f", a, (i + 1) % 3);
  }
  return {m0, m1};
}

}  // namespace

TEST_CASE("product-style structure satisfies the laws and evaluates fiberwise") {
  auto factors = small_factors();
  auto prod = product_structure(factors);
  CHECK(prod.size() == 6);
  CHECK(check_laws(prod).ok());
  const auto& sig = factors.front().signature();
  for (const auto& f : sample_formulas(sig, 300, 11)) {
    auto vars = free_list(f);
    oracle::for_each_assignment(vars, prod.size(), [&](const Assignment& a) {
      Element v = boolean_value(prod, f, a);
      ba::Bits expect = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        std::map<std::string, std::size_t> local;
        for (const auto& [var, name] : a) {
          // Name index to coordinate i (factor 0 most significant, factor 1 has 3 elements).
          local[var] = i == 0 ? name / 3 : name % 3;
        }
        if (oracle::naive_holds(factors[i], f, local)) expect |= ba::Bits{1} << i;
      }
      REQUIRE(v.bits() == expect);
    });
  }
}

TEST_CASE("boolean_value examples and the equality axiom") {
  auto factors = small_factors();
  auto prod = product_structure(factors);
  const auto& sig = prod.signature();
  Assignment a{{"s", 1}, {"t", 4}};
  CHECK(boolean_value(prod, parse("s = s", sig), a).is_one());
  CHECK(boolean_value(prod, parse("R(s,t) & !R(s,t)", sig), a).is_zero());
  auto axiom = parse("(s = t & R(s,s)) -> R(t,t)", sig);
  auto axiom_fn = parse("(s = t & u = f(s)) -> u = f(t)", sig);
  for (std::size_t s = 0; s < prod.size(); ++s)
    for (std::size_t t = 0; t < prod.size(); ++t) {
      CHECK(boolean_value(prod, axiom, {{"s", s}, {"t", t}}).is_one());
      for (std::size_t u = 0; u < prod.size(); ++u) CHECK(boolean_value(prod, axiom_fn, {{"s", s}, {"t", t}, {"u", u}}).is_one());
    }
  CHECK_THROWS_AS(boolean_value(prod, parse("R(s,q)", sig), a), InputError);
}

TEST_CASE("compiled evaluator agrees with the naive recursion, and with desugaring and renaming") {
  auto prod = product_structure(small_factors());
  const auto& sig = prod.signature();
  for (const auto& f : sample_formulas(sig, 200, 21)) {
    auto vars = free_list(f);
    auto renamed = alpha_rename(f);
    oracle::for_each_assignment(vars, prod.size(), [&](const Assignment& a) {
      Element v = boolean_value(prod, f, a);
      REQUIRE(v == oracle::naive_value(prod, f, a));
      REQUIRE(v == boolean_value(prod, renamed, a));
    });
  }
  // Derived connectives agree with their Boolean meaning.
  auto p = parse("R(x,y)", sig), q = parse("R(y,x)", sig);
  const auto& b = prod.algebra();
  for (std::size_t x = 0; x < prod.size(); ++x)
    for (std::size_t y = 0; y < prod.size(); ++y) {
      Assignment a{{"x", x}, {"y", y}};
      Element pv = boolean_value(prod, p, a), qv = boolean_value(prod, q, a);
      CHECK(boolean_value(prod, Formula::disjunction(p, q), a) == (pv | qv));
      CHECK(boolean_value(prod, Formula::implication(p, q), a) == (~pv | qv));
    }
  for (std::size_t y = 0; y < prod.size(); ++y) {
    Element meet = b.one();
    for (std::size_t x = 0; x < prod.size(); ++x) meet &= boolean_value(prod, p, {{"x", x}, {"y", y}});
    CHECK(boolean_value(prod, Formula::forall("x", p), {{"y", y}}) == meet);
  }
}

TEST_CASE("table evaluators agree with the naive recursion") {
  auto prod = product_structure(small_factors());
  const auto& sig = prod.signature();
  for (const auto& f : sample_formulas(sig, 200, 27)) {
    auto vars = free_list(f);
    // An extra unused variable checks the layout beyond the free variables.
    vars.push_back("w");
    const auto top = boolean_table(prod, f, vars);
    const auto bottom = boolean_table_bottom_up(prod, f, vars);
    REQUIRE(top == bottom);
    std::size_t row = 0;
    oracle::for_each_assignment(vars, prod.size(), [&](const Assignment& a) {
      REQUIRE(bottom[row++] == oracle::naive_value(prod, f, a).bits());
    });
    CHECK(row == bottom.size());
  }
  CHECK_THROWS_AS(boolean_table_bottom_up(prod, parse("R(x,y)", sig), {"x"}), InputError);
}

TEST_CASE("fullness witnesses") {
  Algebra b(2);
  Signature sig;
  sig.add_relation("P", 1);
  BValuedStructure s(b, {"s", "t"}, sig);
  const std::size_t s0[] = {0}, s1[] = {1};
  s.set_relation("P", s0, b.atom(0));
  s.set_relation("P", s1, b.atom(1));
  auto px = parse("P(x)", sig);
  auto none = fullness_witness(s, px, "x", {});
  CHECK(none.join.is_one());
  CHECK_FALSE(none.witness.has_value());
  s.set_relation("P", s1, b.one());
  auto some = fullness_witness(s, px, "x", {});
  REQUIRE(some.witness.has_value());
  CHECK(*some.witness == 1);
}

namespace {

// All law-abiding 1-atom structures with one binary relation on n names:
// an equivalence relation for equality and a relation respecting it.
std::vector<BValuedStructure> two_valued_structures(std::size_t n) {
  Signature sig;
  sig.add_relation("R", 2);
  Algebra b(1);
  std::vector<BValuedStructure> out;
  std::vector<std::vector<std::size_t>> partitions;
  // Restricted growth strings.
  std::vector<std::size_t> rgs(n, 0);
  while (true) {
    partitions.push_back(rgs);
    std::size_t pos = n;
    while (pos > 1) {
      std::size_t mx = 0;
      for (std::size_t i = 0; i < pos - 1; ++i) mx = std::max(mx, rgs[i]);
      if (rgs[pos - 1] <= mx) {
        ++rgs[pos - 1];
        for (std::size_t i = pos; i < n; ++i) rgs[i] = 0;
        break;
      }
      --pos;
    }
    if (pos <= 1) break;
  }
  for (const auto& cls : partitions) {
    std::size_t k = *std::max_element(cls.begin(), cls.end()) + 1;
    for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << (k * k)); ++rel) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) names.push_back("n" + std::to_string(i));
      BValuedStructure s(b, names, sig);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          s.set_equality(i, j, cls[i] == cls[j] ? b.one() : b.zero());
          const std::size_t args[] = {i, j};
          s.set_relation("R", args, ((rel >> (cls[i] * k + cls[j])) & 1U) ? b.one() : b.zero());
        }
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("on a 1-atom algebra boolean values are Tarskian truth (<= 3 names, depth <= 3)") {
  Signature sig;
  sig.add_relation("R", 2);
  auto formulas = sample_formulas(sig, 120, 5);
  std::size_t structures = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& s : two_valued_structures(n)) {
      REQUIRE(check_laws(s).ok());
      auto cq = to_classical(s);
      ++structures;
      for (const auto& f : formulas) {
        auto vars = free_list(f);
        oracle::for_each_assignment(vars, n, [&](const Assignment& a) {
          std::map<std::string, std::size_t> mapped;
          for (const auto& [v, i] : a) mapped[v] = cq.class_of[i];
          REQUIRE(boolean_value(s, f, a).is_one() == oracle::naive_holds(cq.structure, f, mapped));
          REQUIRE(holds(cq.structure, f, mapped) == oracle::naive_holds(cq.structure, f, mapped));
        });
      }
      // Two-valued structures are always full.
      for (const auto& f : formulas) {
        auto vars = free_list(f);
        if (vars.empty()) continue;
        std::string x = vars.front();
        std::vector<std::string> rest(vars.begin() + 1, vars.end());
        oracle::for_each_assignment(rest, n, [&](const Assignment& a) {
          REQUIRE(fullness_witness(s, f, x, a).witness.has_value());
        });
      }
    }
  }
  // Sum over set partitions of 2^(classes^2): n=1: 2, n=2: 2+16, n=3: 2+3*16+512.
  CHECK(structures == 582);
}

TEST_CASE("formula sampler is deterministic and respects its bounds") {
  auto st = Signature::set_theory();
  auto a = sample_formulas(st, 500, 42);
  auto b = sample_formulas(st, 500, 42);
  REQUIRE(a.size() == 500);
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i] == b[i]);
    REQUIRE(a[i].depth() <= 3);
    REQUIRE(a[i].free_variables().size() <= 2);
  }
  std::set<std::string> distinct;
  for (const auto& f : a) distinct.insert(to_string(f));
  CHECK(distinct.size() == 500);
}
