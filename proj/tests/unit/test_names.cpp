#include <set>

#include "bvm/ba/antichain.hpp"
#include "bvm/fol/generator.hpp"
#include "bvm/names/constructions.hpp"
#include "bvm/names/valuer.hpp"
#include "doctest.h"
#include "support/name_oracles.hpp"
#include "support/oracles.hpp"
#include "support/printers.hpp"

using namespace bvm;
using namespace bvm::names;
using ba::Algebra;
using ba::Element;

namespace {

fol::Signature membership_only() {
  fol::Signature s;
  s.add_relation(fol::kMembership, 2);
  return s;
}

std::vector<std::string> free_list(const fol::Formula& f) {
  auto fv = f.free_variables();
  return {fv.begin(), fv.end()};
}

HFSet hf(std::initializer_list<HFSet> xs) { return HFSet::of(std::vector<HFSet>(xs)); }

}  // namespace

TEST_CASE("hf sets") {
  const HFSet e;
  CHECK(e.rank() == 0);
  CHECK(hf({e}).rank() == 1);
  CHECK(HFSet::von_neumann(3) == hf({e, hf({e}), hf({e, hf({e})})}));
  CHECK(HFSet::von_neumann(5).rank() == 5);
  CHECK(hf({e, e}) == hf({e}));
  CHECK(hf_universe(0).size() == 1);
  CHECK(hf_universe(1).size() == 2);
  CHECK(hf_universe(2).size() == 4);
  CHECK(hf_universe(3).size() == 16);
  CHECK_THROWS_AS(hf_universe(5), SizeError);
  const auto u3 = hf_universe(3);
  for (std::size_t i = 1; i < u3.size(); ++i) CHECK(u3[i - 1] < u3[i]);
  for (const auto& x : u3) CHECK(x.rank() <= 3);
  CHECK(power_set(hf({e, hf({e})})).size() == 4);
  CHECK(HFSet::pair(e, e) == hf({hf({e})}));
  CHECK(encode_element(Element(3, 0b101)) == hf({HFSet::von_neumann(0), HFSet::von_neumann(2)}));
  CHECK(e.to_string() == "{}");
  CHECK(hf({e, hf({e})}).to_string() == "{{},{{}}}");
}

TEST_CASE("check names") {
  const Algebra b(2);
  const HFSet e;
  CHECK(check_name(e, b).empty());
  const Name one = check_name(hf({e}), b);
  REQUIRE(one.size() == 1);
  CHECK(one.entries()[0].name == Name(2));
  CHECK(one.entries()[0].value == b.one());
  for (const auto& x : hf_universe(3)) {
    CHECK(check_name(x, b).rank() == x.rank());
    CHECK(as_check(check_name(x, b)) == x);
  }
  const auto u = hf_universe(2);
  for (const auto& x : u)
    for (const auto& y : u) {
      const Name cx = check_name(x, b), cy = check_name(y, b);
      CHECK(bv_atomic(cx, cy, Atomic::Eq) == (x == y ? b.one() : b.zero()));
      CHECK(bv_atomic(cx, cy, Atomic::In) == (y.contains(x) ? b.one() : b.zero()));
      CHECK(bv_atomic(cx, cy, Atomic::Subset) == (x.subset_of(y) ? b.one() : b.zero()));
    }
  CHECK_FALSE(as_check(Name::make(2, {{Name(2), b.atom(0)}})).has_value());
}

TEST_CASE("atomic value examples") {
  const Algebra b(3);
  fol::Rng rng(11);
  const Name empty = check_name(HFSet(), b);
  for (auto v : b.elements()) {
    const Name s = Name::make(3, {{empty, v}});
    CHECK(bv_atomic(empty, s, Atomic::In) == v);
  }
  for (int i = 0; i < 50; ++i) {
    const Name t = oracle::random_name(rng, 3, 3, 3);
    CHECK(bv_atomic(t, t, Atomic::Eq) == b.one());
    CHECK(bv_atomic(empty, t, Atomic::Subset) == b.one());
  }
  CHECK_THROWS_AS(bv_atomic(Name(2), Name(3), Atomic::In), InputError);
}

TEST_CASE("memoized, reference and textbook recursions agree") {
  fol::Rng rng(2024);
  for (unsigned atoms = 1; atoms <= 3; ++atoms) {
    for (int i = 0; i < 150; ++i) {
      const Name t = oracle::random_name(rng, atoms, 3, 3);
      const Name s = oracle::random_name(rng, atoms, 3, 3);
      Valuer v(atoms);
      for (auto [rel, alt] : {std::pair{Atomic::In, oracle::Rel::In}, std::pair{Atomic::Eq, oracle::Rel::Eq},
                              std::pair{Atomic::Subset, oracle::Rel::Sub}}) {
        const Element memo = v.value(t, s, rel);
        CHECK(memo == bv_atomic_reference(t, s, rel));
        CHECK(memo.bits() == oracle::textbook_atomic(t, s, alt));
      }
    }
  }
}

TEST_CASE("pool structures satisfy the equality laws") {
  fol::Rng rng(5);
  for (unsigned atoms = 1; atoms <= 3; ++atoms) {
    const Algebra b(atoms);
    for (unsigned rank = 0; rank <= 2; ++rank) {
      PoolModel m(NamePool::standard(b, rank));
      CHECK(fol::check_laws(m.structure()).ok());
    }
    std::vector<Name> extra;
    for (int i = 0; i < 8; ++i) extra.push_back(oracle::random_name(rng, atoms, 3, 2));
    extra.push_back(generic_name(b));
    PoolModel m(NamePool::checks(b, 1).with(extra));
    const auto report = fol::check_laws(m.structure());
    CHECK(report.ok());
    CHECK(report.checks > 0);
  }
}

TEST_CASE("pool construction") {
  const Algebra b(2);
  const auto checks = NamePool::checks(b, 2);
  CHECK(checks.size() == 4);
  CHECK(checks.check_indices().size() == 4);
  const auto std2 = NamePool::standard(b, 2);
  CHECK(std2.size() == 16);
  CHECK(NamePool::standard_size(4, 2) == 256);
  CHECK(NamePool::standard(Algebra(4), 2).size() == 256);
  CHECK_THROWS_AS(NamePool::standard(Algebra(16), 2), SizeError);
  CHECK_THROWS_AS(NamePool::standard(b, 2, 10), SizeError);
  for (const auto& n : std2.names())
    for (const auto& e : n.entries()) CHECK(std2.contains(e.name));
  const auto bigger = std2.with({generic_name(b)});
  CHECK(bigger.contains(generic_name(b)));
  CHECK(bigger.check_index(encode_element(b.one())).has_value());
}

TEST_CASE("vcheck predicate") {
  const Algebra b(2);
  const auto parse = [](const char* s) { return fol::parse(s, fol::Signature::set_theory()); };
  const auto pool = NamePool::standard(b, 2);
  PoolModel m(pool);
  for (const auto& x : hf_universe(2)) CHECK(m.value(parse("Vcheck(x)"), {{"x", check_name(x, b)}}) == b.one());
  // Every standard-pool mix is locally a check name.
  for (std::size_t i = 0; i < pool.size(); ++i) CHECK(m.vcheck(i) == b.one());
  // A name that is 0-locally empty and otherwise {{∅}} is still in V̌, via mixing.
  const Name t = mix(ba::Antichain::atoms(b).members(),
                     std::vector<Name>{check_name(HFSet(), b), check_name(hf({hf({HFSet()})}), b)});
  CHECK(bv_formula(parse("Vcheck(x)"), {{"x", t}}, pool.with({t})) == b.one());
  // Ġ is not a ground-model set.
  const Name g = generic_name(b);
  CHECK(bv_formula(parse("Vcheck(x)"), {{"x", g}}, pool.with({g})) == b.zero());
  CHECK_THROWS_AS(m.value(parse("x in y"), {{"x", check_name(HFSet(), b)}}), InputError);
  CHECK_THROWS_AS(m.value(parse("Vcheck(x)"), {{"x", g}}), InputError);
}

TEST_CASE("relativized truth of check names matches HF truth") {
  const auto formulas = fol::sample_formulas(membership_only(), 300, 77);
  const auto universe = hf_universe(2);
  for (unsigned atoms = 1; atoms <= 2; ++atoms) {
    const Algebra b(atoms);
    PoolModel m(NamePool::standard(b, 2));
    for (const auto& f : formulas) {
      const auto rel = fol::relativize(f);
      const auto vars = free_list(f);
      oracle::for_each_assignment(vars, universe.size(), [&](const std::map<std::string, std::size_t>& idx) {
        NameAssignment a;
        std::map<std::string, HFSet> env;
        for (const auto& [v, i] : idx) {
          a[v] = check_name(universe[i], b);
          env[v] = universe[i];
        }
        const Element value = m.value(rel, a);
        CHECK((value.is_zero() || value.is_one()));
        CHECK(value.is_one() == oracle::hf_holds(f, env, universe));
      });
    }
  }
}

TEST_CASE("vcheck is transitive") {
  const auto parse = [](const char* s) { return fol::parse(s, fol::Signature::set_theory()); };
  const auto phi = parse("(x in y & Vcheck(y)) -> Vcheck(x)");
  fol::Rng rng(3);
  for (unsigned atoms = 1; atoms <= 3; ++atoms) {
    const Algebra b(atoms);
    std::vector<Name> extra{generic_name(b)};
    for (int i = 0; i < 6; ++i) extra.push_back(oracle::random_name(rng, atoms, 3, 2));
    PoolModel m(NamePool::standard(b, atoms == 3 ? 1 : 2).with(extra));
    const std::size_t n = m.pool().size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(m.value(phi, fol::Assignment{{"x", i}, {"y", j}}) == b.one());
  }
}

TEST_CASE("generic name") {
  for (unsigned atoms = 1; atoms <= 3; ++atoms) {
    const Algebra b(atoms);
    const Name g = generic_name(b);
    Valuer v(atoms);
    CHECK(v.in(element_check(b.one(), b), g) == b.one());
    CHECK(v.in(element_check(b.zero(), b), g) == b.zero());
    std::vector<Name> members;
    for (auto e : b.elements()) {
      CHECK(v.in(element_check(e, b), g) == e);
      members.push_back(element_check(e, b));
    }
    // B̌ as a name: the check name of the set of all codes.
    std::vector<HFSet> codes;
    for (auto e : b.elements()) codes.push_back(encode_element(e));
    const Name bcheck = check_name(HFSet::of(codes), b);
    CHECK(v.subset(g, bcheck) == b.one());
    const auto elems = b.elements();
    for (auto x : elems) {
      const Name cx = element_check(x, b);
      const Element nx = v.in(element_check(~x, b), g);
      // Exactly one of b, ¬b is in Ġ.
      CHECK((v.in(cx, g) | nx) == b.one());
      CHECK((v.in(cx, g) & nx) == b.zero());
      for (auto y : elems) {
        const Name cy = element_check(y, b);
        const Element in_x = v.in(cx, g), in_y = v.in(cy, g);
        // Upward closure: x ≤ y is decided by the ground model, so the clause is x∈Ġ → y∈Ġ.
        if (x.leq(y)) CHECK((~in_x | in_y) == b.one());
        // Meet closure.
        CHECK((~(in_x & in_y) | v.in(element_check(x & y, b), g)) == b.one());
      }
    }
    for (unsigned z = 0; z < atoms; ++z) {
      std::vector<HFSet> expected;
      for (auto e : elems)
        if (e.has_atom(z)) expected.push_back(encode_element(e));
      CHECK(val(g, Filter::at_atom(b, z)) == HFSet::of(expected));
    }
  }
}

TEST_CASE("filters and val") {
  const Algebra b(3);
  CHECK_THROWS_AS(Filter::principal(b, b.zero()), InputError);
  CHECK(Filter::from_elements(b, {b.one(), b.element({0, 1})}).generator() == b.element({0, 1}));
  CHECK_THROWS_AS(Filter::from_elements(b, {b.element({0, 1})}), InputError);
  CHECK_THROWS_AS(Filter::from_elements(b, {b.one(), b.element({0, 1}), b.element({1, 2})}), InputError);
  CHECK(Filter::principal(b, b.element({0, 2})).members().size() == 2);
  CHECK(Filter::at_atom(b, 1).is_ultra());
  std::vector<Filter> filters;
  for (auto e : b.elements())
    if (!e.is_zero()) filters.push_back(Filter::principal(b, e));
  for (const auto& f : filters) {
    CHECK(val(Name(3), f) == HFSet());
    for (const auto& x : hf_universe(3)) CHECK(val(check_name(x, b), f) == x);
  }
}

TEST_CASE("mixing") {
  const Algebra b(2);
  const auto atoms = ba::Antichain::atoms(b).members();
  const Name e = check_name(HFSet(), b), o = check_name(hf({HFSet()}), b);
  const Name t = mix(atoms, std::vector<Name>{e, o});
  CHECK(bv_atomic(t, e, Atomic::Eq) == b.atom(0));
  CHECK(bv_atomic(t, o, Atomic::Eq) == b.atom(1));
  const std::vector<Element> whole{b.one()};
  CHECK(bv_atomic(mix(whole, std::vector<Name>{o}), o, Atomic::Eq) == b.one());
  const std::vector<Element> bad{b.one(), b.atom(0)};
  CHECK_THROWS_AS(mix(bad, std::vector<Name>{e, o}), InputError);
  CHECK_THROWS_AS(mix(atoms, std::vector<Name>{e}), InputError);

  fol::Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(rng.below(4));
    const Algebra alg(n);
    const auto parts_all = ba::all_maximal_antichains(alg);
    const auto& part = parts_all[rng.below(parts_all.size())];
    std::vector<Element> a = part.members();
    if (rng.chance(40) && a.size() > 1) a.pop_back();
    std::vector<Name> parts;
    const Name same = oracle::random_name(rng, n, 2, 2);
    for (std::size_t i = 0; i < a.size(); ++i) parts.push_back(rng.chance(20) ? same : oracle::random_name(rng, n, 2, 2));
    const Name m = mix(a, parts);
    Valuer v(n);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].leq(v.eq(m, parts[i])));
    // val naturality under the principal ultrafilters below members of A.
    for (unsigned z = 0; z < n; ++z)
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].has_atom(z)) CHECK(val(m, Filter::at_atom(alg, z)) == val(parts[i], Filter::at_atom(alg, z)));
  }
}

TEST_CASE("pool monotonicity") {
  const auto sig = fol::Signature::set_theory();
  const auto parse = [&](const char* s) { return fol::parse(s, sig); };
  const Algebra b(2);
  const auto small = NamePool::checks(b, 1);
  const auto large = NamePool::standard(b, 2);
  PoolModel ms(small), ml(large);
  // Strict growth for an unbounded quantifier: no rank ≤ 1 set avoids ∅ and differs from it.
  const auto grow = parse("exists x. !(x in y) & !(y in x) & !(x = y)");
  const Name empty = check_name(HFSet(), b);
  CHECK(ms.value(grow, {{"y", empty}}) == b.zero());
  CHECK(ml.value(grow, {{"y", empty}}) == b.one());

  fol::SampleOptions opts;
  opts.max_depth = 3;
  opts.variables = {"x", "y"};
  opts.max_free = 2;
  auto qfree = fol::sample_formulas(membership_only(), 400, 4, opts);
  std::erase_if(qfree, [](const fol::Formula& f) { return f.quantifier_depth() > 0; });
  REQUIRE(qfree.size() >= 10);
  std::size_t grew = 0;
  for (const auto& f : qfree) {
    const auto fv = f.free_variables();
    const auto unbounded = fol::Formula::exists("x", f);
    const auto bounded = fol::Formula::exists("x", fol::Formula::conjunction(fol::Formula::relation(fol::kMembership, {"x", "w"}), f));
    for (std::size_t wi = 0; wi < small.size(); ++wi) {
      for (std::size_t yi = 0; yi < small.size(); ++yi) {
        NameAssignment a{{"w", small[wi]}};
        if (fv.count("y")) a["y"] = small[yi];
        NameAssignment bound_a = a;
        NameAssignment free_a = a;
        free_a.erase("w");
        CHECK(ms.value(bounded, bound_a) == ml.value(bounded, bound_a));
        const Element lo = ms.value(unbounded, free_a), hi = ml.value(unbounded, free_a);
        CHECK(lo.leq(hi));
        if (lo != hi) ++grew;
      }
    }
  }
  CHECK(grew > 0);
}

TEST_CASE("rank check") {
  const Algebra b(2);
  for (const auto& x : hf_universe(3)) {
    const auto r = rank_check(check_name(x, b), b);
    CHECK(r.bounded);
    CHECK(r.attained);
    for (unsigned rk : r.value_ranks) CHECK(rk == x.rank());
  }
  const auto empty = rank_check(Name(2), b);
  CHECK(empty.name_rank == 0);
  CHECK(empty.bounded);
  // A rank-3 name for ∅: the only entry carries value 0.
  const Name inner = Name::make(2, {{Name::make(2, {{Name(2), b.one()}}), b.one()}});
  const Name padded = Name::make(2, {{inner, b.zero()}});
  const auto r = rank_check(padded, b);
  CHECK(r.name_rank == 3);
  CHECK(r.bounded);
  CHECK_FALSE(r.attained);
  CHECK(r.value_ranks == std::vector<unsigned>{0, 0});
  fol::Rng rng(8);
  for (int i = 0; i < 200; ++i) CHECK(rank_check(oracle::random_name(rng, 2, 4, 3), b).bounded);
}

TEST_CASE("power set and separation names") {
  const Algebra one(1);
  const HFSet e;
  CHECK(val(powerset_name(check_name(e, one), one), Filter::at_atom(one, 0)) == hf({e}));
  CHECK(val(powerset_name(check_name(hf({e}), one), one), Filter::at_atom(one, 0)) == hf({e, hf({e})}));
  CHECK_THROWS_AS(powerset_name(check_name(hf({e, hf({e})}), Algebra(3)), Algebra(3)), SizeError);

  fol::Rng rng(21);
  for (unsigned atoms = 1; atoms <= 2; ++atoms) {
    const Algebra b(atoms);
    for (int i = 0; i < 25; ++i) {
      Name t = oracle::random_name(rng, atoms, 2, 2);
      if (t.domain().size() * b.elements().size() > 10) continue;
      const Name p = powerset_name(t, b);
      for (unsigned z = 0; z < atoms; ++z) {
        const auto u = Filter::at_atom(b, z);
        CHECK(val(p, u) == power_set(val(t, u)));
      }
    }
  }

  const auto sig = fol::Signature::set_theory();
  const auto formulas = fol::sample_formulas(membership_only(), 40, 6, {3, {"x", "y"}, 1});
  for (unsigned atoms = 1; atoms <= 2; ++atoms) {
    const Algebra b(atoms);
    const auto pool = NamePool::standard(b, 2);
    const auto universe = hf_universe(2);
    const auto atoms_ac = ba::Antichain::atoms(b).members();
    for (int i = 0; i < 6; ++i) {
      std::vector<Name> parts;
      for (unsigned k = 0; k < atoms; ++k) parts.push_back(check_name(universe[rng.below(universe.size())], b));
      const Name t = mix(atoms_ac, parts);
      CHECK(val(separation_name(t, fol::parse("!(x = x)", sig), "x", pool), Filter::at_atom(b, 0)) == HFSet());
      for (const auto& f : formulas) {
        const auto fv = f.free_variables();
        if (fv.size() != 1 || !fv.count("x")) continue;
        const Name s = separation_name(t, fol::relativize(f), "x", pool);
        for (unsigned z = 0; z < atoms; ++z) {
          const auto u = Filter::at_atom(b, z);
          std::vector<HFSet> keep;
          const HFSet whole = val(t, u);
          for (const auto& y : whole.members())
            if (oracle::hf_holds(f, {{"x", y}}, universe)) keep.push_back(y);
          CHECK(val(s, u) == HFSet::of(keep));
        }
      }
    }
  }
}
