// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Each criterion runs the library route against an independent test-side
// oracle or a definitional brute force.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "bvm/ba/constructions.hpp"
#include "bvm/ba/ideal.hpp"
#include "bvm/ba/poset.hpp"
#include "bvm/cli/commands.hpp"
#include "bvm/fol/generator.hpp"
#include "bvm/names/constructions.hpp"
#include "bvm/names/valuer.hpp"
#include "bvm/omega/witnesses.hpp"
#include "bvm/ultra/direct_limit.hpp"
#include "bvm/ultra/ideal_suite.hpp"
#include "bvm/ultra/poset_diagnostics.hpp"
#include "bvm/ultra/quotient_model.hpp"
#include "bvm/ultra/spanning.hpp"
#include "bvm/ultra/subalgebra.hpp"
#include "support/ideal_oracles.hpp"
#include "support/name_oracles.hpp"
#include "support/omega_oracles.hpp"

using namespace bvm;
using ba::Algebra;
using ba::Element;
using names::HFSet;
using names::Name;
using names::NamePool;
using names::PoolModel;

namespace {

// Tolerances and budgets. All comparisons are exact; only runtimes have limits.
constexpr double kLosBudgetSeconds = 60.0;
constexpr double kLimitBudgetSeconds = 30.0;
constexpr unsigned kLimitRank = 2;
constexpr std::size_t kLosFormulas = 500;
constexpr unsigned kLosMaxAtoms = 4;
constexpr unsigned kLosMaxRank = 2;
constexpr std::size_t kMixingInstances = 1000;
constexpr std::size_t kRoSampledAtSix = 600;
constexpr std::size_t kHomomorphismChecks = 10000;
constexpr std::size_t kRectangles = 1000;
constexpr std::uint64_t kChainDepth = 10;
constexpr std::uint64_t kStandardBound = 50;
constexpr std::size_t kTreeTrialsPerSize = 4000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<fol::Formula> sample(std::size_t n, std::uint64_t seed, unsigned depth = 3) {
  fol::SampleOptions o;
  o.max_depth = depth;
  return fol::sample_formulas(fol::Signature::set_theory(), n, seed, o);
}

std::vector<std::string> free_list(const fol::Formula& f) {
  const auto fv = f.free_variables();
  return {fv.begin(), fv.end()};
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

Outcome los_equivalence() {
  const auto start = Clock::now();
  const auto formulas = sample(kLosFormulas, 101);
  std::size_t instances = 0, failures = 0, models = 0;
  for (unsigned n = 1; n <= kLosMaxAtoms; ++n) {
    const Algebra b(n);
    for (unsigned rank = 1; rank <= kLosMaxRank; ++rank) {
      auto pm = std::make_shared<const PoolModel>(NamePool::standard(b, rank));
      std::vector<std::unique_ptr<ultra::QuotientModel>> ms;
      std::vector<const ultra::QuotientModel*> ptrs;
      for (const auto& u : ultra::enumerate_ultrafilters(b)) {
        ms.push_back(std::make_unique<ultra::QuotientModel>(pm, u));
        ptrs.push_back(ms.back().get());
      }
      const auto sweep = ultra::los_sweep(*pm, ptrs, formulas);
      instances += sweep.plain.instances + sweep.ground.instances;
      failures += sweep.plain.failures + sweep.ground.failures;
      models += ms.size();
    }
  }
  const double t = seconds_since(start);
  return {failures == 0 && t < kLosBudgetSeconds,
          std::to_string(formulas.size()) + " formulas, " + std::to_string(models) + " quotient models, " +
              std::to_string(instances) + " instances, " + std::to_string(failures) + " failures, " + fmt(t) +
              " s (budget " + fmt(kLosBudgetSeconds) + " s)"};
}

// Principal U at z: the quotient at a class tuple against HF truth of the val
// collapse. val must also be constant on each class.
Outcome fiber_oracle() {
  const auto formulas = sample(kLosFormulas, 101);
  std::size_t checks = 0, mismatches = 0;
  for (unsigned n = 1; n <= kLosMaxAtoms; ++n) {
    const Algebra b(n);
    for (unsigned rank = 1; rank <= kLosMaxRank; ++rank) {
      auto pm = std::make_shared<const PoolModel>(NamePool::standard(b, rank));
      const auto universe = names::hf_universe(rank);
      for (const auto& u : ultra::enumerate_ultrafilters(b)) {
        const ultra::QuotientModel m(pm, u);
        const auto f = names::Filter::at_atom(b, u.atom());
        std::vector<HFSet> collapse(m.class_count());
        std::vector<bool> seen(m.class_count(), false);
        for (std::size_t i = 0; i < m.pool().size(); ++i) {
          const HFSet v = names::val(m.pool()[i], f);
          const std::size_t c = m.class_of(i);
          if (!seen[c]) collapse[c] = v, seen[c] = true;
          else if (!(collapse[c] == v)) ++mismatches;
          ++checks;
        }
        for (const auto& phi : formulas) {
          const auto vars = free_list(phi);
          std::size_t rows = 1;
          for (std::size_t k = 0; k < vars.size(); ++k) rows *= m.class_count();
          for (std::size_t row = 0; row < rows; ++row) {
            const auto idx = oracle::unrank_row(row, vars.size(), m.class_count());
            fol::Assignment a;
            std::map<std::string, HFSet> env;
            for (std::size_t k = 0; k < vars.size(); ++k) {
              a[vars[k]] = m.representative(idx[k]);
              env[vars[k]] = collapse[idx[k]];
            }
            if (m.holds(phi, a) != oracle::hf_holds(phi, env, universe)) ++mismatches;
            ++checks;
          }
        }
      }
    }
  }
  return {mismatches == 0, std::to_string(checks) + " class tuples and collapse checks, " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome law_validation() {
  std::size_t structures = 0, failing = 0;
  for (unsigned n = 1; n <= kLosMaxAtoms; ++n) {
    const Algebra b(n);
    for (unsigned rank = 1; rank <= kLosMaxRank; ++rank) {
      for (const auto& pool : {NamePool::standard(b, rank), NamePool::checks(b, rank)}) {
        ++structures;
        if (!fol::check_laws(PoolModel(pool).structure()).ok()) ++failing;
      }
    }
  }
  // A product of classical structures with a function symbol: the function laws apply.
  fol::Signature fsig;
  fsig.add_relation("R", 2);
  fsig.add_function("f", 1);
  fol::ClassicalStructure m0(2, fsig), m1(3, fsig);
  for (std::size_t i = 0; i < 2; ++i) {
    const std::size_t a[] = {i};
    m0.set_function("f", a, 1 - i);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t a[] = {i}, r[] = {i, (i + 1) % 3};
    m1.set_function("f", a, (i + 1) % 3);
    m1.set_relation("R", r, true);
  }
  ++structures;
  if (!fol::check_laws(fol::product_structure({m0, m1})).ok()) ++failing;

  // Hand-built violators, one law each.
  const Algebra b(2);
  fol::Signature rsig;
  rsig.add_relation("P", 1);
  std::vector<std::pair<std::string, fol::BValuedStructure>> bad;
  {
    fol::BValuedStructure s(b, {"s", "t"}, rsig);
    s.set_equality(0, 0, b.atom(0));
    bad.emplace_back("eq_reflexive", s);
  }
  {
    fol::BValuedStructure s(b, {"s", "t"}, rsig);
    s.set_equality(0, 1, b.atom(0));
    bad.emplace_back("eq_symmetric", s);
  }
  {
    fol::BValuedStructure s(b, {"s", "t", "u"}, rsig);
    s.set_equality(0, 1, b.one());
    s.set_equality(1, 0, b.one());
    s.set_equality(1, 2, b.one());
    s.set_equality(2, 1, b.one());
    bad.emplace_back("eq_transitive", s);
  }
  {
    fol::BValuedStructure s(b, {"s", "t"}, rsig);
    s.set_equality(0, 1, b.atom(1));
    s.set_equality(1, 0, b.atom(1));
    const std::size_t a[] = {0};
    s.set_relation("P", a, b.one());
    bad.emplace_back("relation_congruence", s);
  }
  {
    fol::Signature g;
    g.add_function("f", 1);
    fol::BValuedStructure s(b, {"s", "t"}, g);
    const std::size_t a0[] = {0}, a1[] = {1};
    s.set_function("f", 0, a0, b.atom(0));
    s.set_function("f", 1, a1, b.one());
    bad.emplace_back("function_total", s);
  }
  {
    fol::Signature g;
    g.add_function("f", 1);
    fol::BValuedStructure s(b, {"s", "t"}, g);
    const std::size_t a0[] = {0}, a1[] = {1};
    s.set_function("f", 0, a0, b.one());
    s.set_function("f", 1, a0, b.one());
    s.set_function("f", 1, a1, b.one());
    bad.emplace_back("function_functional", s);
  }
  std::size_t flagged = 0;
  for (const auto& [law, s] : bad)
    if (fol::check_laws(s).violates(law)) ++flagged;
  return {failing == 0 && flagged == bad.size() && flagged >= 3,
          std::to_string(structures - failing) + "/" + std::to_string(structures) + " induced structures lawful, " +
              std::to_string(flagged) + "/" + std::to_string(bad.size()) + " violators flagged"};
}

Outcome mixing() {
  fol::Rng rng(202);
  std::size_t lower = 0, lower_fail = 0, exact = 0, exact_fail = 0;
  while (lower < kMixingInstances || exact < kMixingInstances / 2) {
    const unsigned n = 1 + static_cast<unsigned>(rng.below(5));
    const Algebra b(n);
    const auto partitions = ba::all_maximal_antichains(b);
    const auto& part = partitions[rng.below(partitions.size())];
    std::vector<Element> a = part.members();
    const bool maximal = !(rng.chance(40) && a.size() > 1);
    if (!maximal) a.pop_back();
    std::vector<Name> parts;
    for (std::size_t i = 0; i < a.size(); ++i) parts.push_back(oracle::random_name(rng, n, 2, 2));
    const Name m = names::mix(a, parts);
    names::Valuer v(n);
    for (std::size_t i = 0; i < a.size(); ++i) {
      ++lower;
      if (!a[i].leq(v.eq(m, parts[i]))) ++lower_fail;
    }
    bool distinct = maximal;
    for (std::size_t i = 0; i < parts.size() && distinct; ++i)
      for (std::size_t k = i + 1; k < parts.size() && distinct; ++k) distinct = v.eq(parts[i], parts[k]).is_zero();
    if (distinct) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        ++exact;
        if (!(v.eq(m, parts[i]) == a[i])) ++exact_fail;
      }
    }
  }
  return {lower_fail == 0 && exact_fail == 0,
          std::to_string(lower) + " lower-bound instances, " + std::to_string(exact) +
              " exact instances (maximal A, pairwise value-1 distinct), " + std::to_string(lower_fail + exact_fail) +
              " failures"};
}

Outcome ro_correctness() {
  std::size_t posets = 0, bad = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : ba::naturally_labelled_posets(n)) {
      ++posets;
      if (!ba::compare_ro(p, ba::ro_completion(p), ba::ro_oracle(p)).ok()) ++bad;
    }
  const auto six = ba::naturally_labelled_posets(6);
  std::mt19937_64 rng(303);
  std::uniform_int_distribution<std::size_t> pick(0, six.size() - 1);
  for (std::size_t k = 0; k < kRoSampledAtSix; ++k) {
    const auto& p = six[pick(rng)];
    ++posets;
    if (!ba::compare_ro(p, ba::ro_completion(p), ba::ro_oracle(p)).ok()) ++bad;
  }
  return {bad == 0, std::to_string(posets) + " posets (all with <= 5 nodes, " + std::to_string(kRoSampledAtSix) +
                        " sampled of " + std::to_string(six.size()) + " at 6), " + std::to_string(bad) + " disagreements"};
}

Outcome poset_theorem() {
  std::size_t posets = 0, filters = 0, exceptions = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : ba::naturally_labelled_posets(n)) {
      if (!p.is_separative()) continue;
      ++posets;
      for (ultra::NodeSet f : ultra::maximal_filters(p)) {
        ++filters;
        if (!ultra::poset_diagnostics(p, f).agrees()) ++exceptions;
      }
    }
  return {exceptions == 0 && filters > 0, std::to_string(posets) + " separative posets, " + std::to_string(filters) +
                                              " maximal filters, " + std::to_string(exceptions) + " exceptions"};
}

Outcome presentations_and_limits() {
  const auto start = Clock::now();
  const auto formulas = sample(40, 404, 2);
  std::size_t systems = 0, failures = 0, identities = 0;
  for (unsigned n = 1; n <= 3; ++n) {
    const Algebra b(n);
    const auto frag = names::hf_universe(kLimitRank);
    auto pm = std::make_shared<const PoolModel>(NamePool::standard(b, kLimitRank));
    for (const auto& u : ultra::enumerate_ultrafilters(b)) {
      ++systems;
      const ultra::QuotientModel qm(pm, u);
      const ultra::FunctionalModel fm(b, u, frag);
      if (!ultra::presentations_iso(fm, qm).ok()) ++failures;
      const ultra::DirectLimitSystem s(b, u, frag, {});
      const auto r = s.verify(formulas);
      identities += r.identities_checked;
      if (!r.ok() || r.factors != ba::all_maximal_antichains(b).size()) ++failures;
      for (std::size_t c = 0; c < s.limit().class_count(); ++c)
        if (!ultra::extender_rep(s, c).ok()) ++failures;
    }
  }
  const double t = seconds_since(start);
  return {failures == 0 && t < kLimitBudgetSeconds,
          std::to_string(systems) + " systems over the full antichain lattice, " + std::to_string(identities) +
              " identities, " + std::to_string(failures) + " failures, " + fmt(t) + " s (budget " +
              fmt(kLimitBudgetSeconds) + " s)"};
}

Outcome subalgebra_agreement() {
  const auto formulas = sample(kLosFormulas, 505);
  std::size_t instances = 0, mismatches = 0, partitions = 0;
  for (unsigned n = 1; n <= 4; ++n) {
    const Algebra c(n);
    const unsigned rank = n <= 3 ? 2 : 1;
    const PoolModel cp(NamePool::standard(c, rank));
    std::vector<ba::Partition> parts;
    std::vector<std::unique_ptr<PoolModel>> bps;
    std::vector<const PoolModel*> ptrs;
    for (const auto& a : ba::all_maximal_antichains(c)) {
      parts.emplace_back(c, a.members());
      bps.push_back(std::make_unique<PoolModel>(NamePool::standard(parts.back().algebra(), rank)));
      ptrs.push_back(bps.back().get());
    }
    partitions += parts.size();
    for (bool rel : {true, false}) {
      const auto r = ultra::subalgebra_value_agreement(cp, parts, ptrs, formulas, rel);
      instances += r.instances;
      mismatches += r.mismatches;
    }
  }
  return {mismatches == 0 && instances > 0,
          std::to_string(partitions) + " block subalgebras, " + std::to_string(formulas.size()) +
              " formulas (relativized and plain), " + std::to_string(instances) + " instances, " +
              std::to_string(mismatches) + " mismatches"};
}

Outcome omega_module() {
  std::mt19937_64 rng(606);
  std::size_t hom_fail = 0;
  for (std::size_t k = 0; k < kHomomorphismChecks; ++k) {
    const auto a = oracle::random_raw(rng), b = oracle::random_raw(rng);
    const auto x = a.build(), y = b.build();
    const bool ux = omega::u_membership(x), uy = omega::u_membership(y);
    const bool ok = ux == oracle::multiples_oracle(a) && omega::u_membership(x & y) == (ux && uy) &&
                    omega::u_membership(x | y) == (ux || uy) && omega::u_membership(~x) == !ux;
    if (!ok) ++hom_fail;
  }
  const auto w = omega::witness_suite(200, 607);
  const auto ill = omega::illfoundedness_witness(kChainDepth, kStandardBound);
  const auto rect = omega::rectangle_failure_demo(kRectangles, 608);
  const bool pass = hom_fail == 0 && w.missed.ok() && w.chain.ok() && w.descent.ok() && w.ok() && ill.ok() &&
                    ill.chain.size() == kChainDepth + 1 && rect.ok() && rect.samples == kRectangles;
  return {pass, "(a) " + std::to_string(kHomomorphismChecks) + " homomorphism checks, " + std::to_string(hom_fail) +
                    " failures; (b) singletons missed " + (w.missed.ok() ? "yes" : "no") + ", zero-meet chain " +
                    (w.chain.ok() ? "yes" : "no") + ", chain depth " + std::to_string(ill.chain.size() - 1) +
                    " above j(m) for m <= " + std::to_string(ill.m_bound) + " " + (ill.ok() ? "yes" : "no") +
                    "; (c) " + std::to_string(rect.samples) + " rectangles meet both sides " +
                    (rect.meets_triangle && rect.meets_complement ? "yes" : "no")};
}

Outcome ideal_suite() {
  std::size_t ideals = 0, induced_fail = 0;
  for (unsigned n = 1; n <= 4; ++n) {
    const Algebra b(n);
    for (const auto& g : b.elements()) {
      if (g.is_one()) continue;
      ++ideals;
      if (!ultra::ideal_suite(b, ba::Ideal::principal(b, g)).ok()) ++induced_fail;
    }
  }

  // Disjointify against the exhaustive search: every principal ideal and every
  // family of at most 3 nonzero elements that is maximal modulo the ideal.
  std::size_t families = 0, certified = 0, dis_fail = 0;
  for (unsigned n = 1; n <= 4; ++n) {
    const Algebra b(n);
    std::vector<Element> nonzero;
    for (const auto& e : b.elements())
      if (!e.is_zero()) nonzero.push_back(e);
    for (const auto& g : b.elements()) {
      if (g.is_one()) continue;
      const auto i = ba::Ideal::principal(b, g);
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << nonzero.size()); ++mask) {
        if (std::popcount(mask) > 3) continue;
        std::vector<Element> a;
        for (std::size_t k = 0; k < nonzero.size(); ++k)
          if ((mask >> k) & 1U) a.push_back(nonzero[k]);
        if (!ultra::is_maximal_antichain_mod(i, a)) continue;
        ++families;
        const auto got = ultra::disjointify(b, i, a);
        const bool exists = oracle::disjointify_exists(b, i, a);
        if (exists) ++certified;
        if (got.has_value() != exists || (got && !oracle::tuple_disjointifies(i, a, *got))) ++dis_fail;
      }
    }
  }

  // Tree paths against brute force on random valid trees of depth <= 4.
  fol::Rng rng(609);
  std::size_t trees = 0, path_fail = 0;
  for (unsigned n = 2; n <= 4; ++n) {
    const Algebra b(n);
    const auto partitions = ba::all_maximal_antichains(b);
    for (std::size_t trial = 0; trial < kTreeTrialsPerSize; ++trial) {
      const Element g = b.from_bits(rng.below(b.one().bits()) & rng.below(b.one().bits() + 1));
      const auto i = ba::Ideal::principal(b, g);
      const auto in_i = i.members();
      const std::size_t depth = 1 + rng.below(4);
      ultra::AntichainTree t;
      ba::Antichain level = partitions[rng.below(partitions.size())];
      for (std::size_t d = 0; d < depth; ++d) {
        std::vector<ba::Antichain> finer;
        for (const auto& p : partitions)
          if (p.refines(level)) finer.push_back(p);
        level = finer[rng.below(finer.size())];
        std::vector<Element> row;
        for (const auto& mem : level) {
          const Element moved(n, mem.bits() ^ in_i[rng.below(in_i.size())].bits());
          if (!i.contains(mem) && !i.contains(moved)) row.push_back(moved);
          else if (!i.contains(mem)) row.push_back(mem);
        }
        t.push_back(row);
      }
      try {
        ultra::validate_tree(i, t);
      } catch (const InputError&) {
        continue;
      }
      ++trees;
      for (std::size_t s = 0; s < t.front().size(); ++s) {
        const auto got = ultra::tree_path(b, i, t, s);
        if (got.has_value() != oracle::path_exists(i, t, s)) ++path_fail;
      }
    }
  }
  return {induced_fail == 0 && dis_fail == 0 && path_fail == 0 && certified > 0 && trees > 0,
          std::to_string(ideals) + " ideals induce ultrafilters, " + std::to_string(families) +
              " disjointify families (" + std::to_string(certified) + " certified), " + std::to_string(trees) +
              " trees, " + std::to_string(induced_fail + dis_fail + path_fail) + " failures"};
}

#ifdef BVM_EXECUTABLE
std::string run_process(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return out;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
  pclose(p);
  return out;
}
#endif

Outcome determinism() {
  std::size_t runs = 0, differ = 0;
  const std::string dir = BVM_SCENARIO_DIR;
  for (const char* file : {"eval_basic.json", "ultrapower_three_atoms.json", "poset_fork.json"}) {
    const auto s = cli::load_scenario(dir + "/" + file);
    for (std::uint64_t seed : {1u, 42u}) {
      cli::Options o;
      o.seed = seed;
      o.samples = 50;
      const bool eval = std::string(file).starts_with("eval");
      const auto a = cli::render(eval ? cli::cmd_eval(s, o) : cli::cmd_ultrapower(s, o), "json");
      const auto b = cli::render(eval ? cli::cmd_eval(s, o) : cli::cmd_ultrapower(s, o), "json");
      ++runs;
      if (a != b) ++differ;
    }
  }
  cli::Options o;
  o.seed = 7;
  ++runs;
  if (cli::render(cli::cmd_demo_omega(o), "json") != cli::render(cli::cmd_demo_omega(o), "json")) ++differ;
#ifdef BVM_EXECUTABLE
  for (const std::string& args : {"ultrapower --scenario " + dir + "/ultrapower_three_atoms.json --seed 5",
                                 std::string("demo-omega --seed 5")}) {
    const std::string cmd = std::string(BVM_EXECUTABLE) + " " + args;
    const auto a = run_process(cmd), b = run_process(cmd);
    ++runs;
    if (a.empty() || a != b) ++differ;
  }
#endif
  return {differ == 0, std::to_string(runs) + " paired runs (in process and via the executable), " +
                           std::to_string(differ) + " differ"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Los equivalence", los_equivalence},
      {"fiber oracle", fiber_oracle},
      {"equality and function laws", law_validation},
      {"mixing", mixing},
      {"regular-open completion", ro_correctness},
      {"poset ultrafilter theorem", poset_theorem},
      {"two presentations and direct limit", presentations_and_limits},
      {"subalgebra value agreement", subalgebra_agreement},
      {"omega module", omega_module},
      {"ideal suite", ideal_suite},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto start = Clock::now();
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << (k + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[k].first << "  ["
              << o.detail << "] " << fmt(seconds_since(start)) << " s" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
