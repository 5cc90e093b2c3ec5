#include "bvm/cli/commands.hpp"

#include <cmath>
#include <memory>
#include <set>
#include <sstream>

#include "bvm/error.hpp"
#include "bvm/fol/generator.hpp"
#include "bvm/fol/structure.hpp"
#include "bvm/names/pool.hpp"
#include "bvm/omega/witnesses.hpp"
#include "bvm/ultra/descent.hpp"
#include "bvm/ultra/direct_limit.hpp"
#include "bvm/ultra/ideal_suite.hpp"
#include "bvm/ultra/poset_diagnostics.hpp"
#include "bvm/ultra/quotient_model.hpp"
#include "bvm/ultra/spanning.hpp"

namespace bvm::cli {

using nlohmann::json;

namespace {

json atoms_json(ba::Element e) { return e.atoms(); }

void collect_vars(const fol::Formula& f, std::set<std::string>& out) {
  if (f.kind() == fol::Kind::Exists) out.insert(f.var());
  for (const auto& a : f.args()) out.insert(a);
  if (f.kind() == fol::Kind::FunctionEqual) out.insert(f.symbol());
  for (std::size_t i = 0; i < f.arity(); ++i) collect_vars(f.child(i), out);
}

json upset_json(const omega::UPSet& x) {
  return {{"threshold", x.threshold()}, {"period", x.period()}, {"pattern", x.pattern()}, {"prefix", x.prefix()}};
}

json ea_json(const omega::EAFunction& f) {
  return {{"threshold", f.threshold()}, {"slope", f.slope()}, {"intercept", f.intercept()}, {"exceptions", f.exceptions()}};
}

json header(const char* command) {
  return json{{"schema", kReportSchema}, {"command", command}};
}

void finish(json& r, bool ok) { r["status"] = ok ? "pass" : "fail"; }

names::NamePool make_pool(const Scenario& s, unsigned rank) {
  std::vector<names::Name> extra;
  for (const auto& [var, name] : s.assignment) extra.push_back(name);
  auto pool = s.pool_kind == "checks" ? names::NamePool::checks(s.algebra, rank)
                                      : names::NamePool::standard(s.algebra, rank);
  return extra.empty() ? pool : pool.with(extra);
}

void guard(const std::vector<fol::Formula>& fs, std::size_t pool_size) {
  for (const auto& f : fs)
    if (evaluation_cells(f, pool_size) > kMaxCells)
      throw SizeError("formula '" + fol::to_string(f) + "' needs " +
                      std::to_string(static_cast<long long>(evaluation_cells(f, pool_size))) +
                      " table cells, guard is " + std::to_string(static_cast<long long>(kMaxCells)));
}

json law_report_json(const fol::LawReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"law", x.law}, {"symbol", x.symbol}, {"witness", x.witness}});
  return {{"checks", r.checks}, {"ok", r.ok()}, {"violations", v}};
}

// Hand-built structures: names, signature, then table entries whose last
// component is the atom list of the Boolean value.
fol::BValuedStructure build_structure(const ba::Algebra& b, const json& src) {
  std::vector<std::string> names;
  for (const auto& n : src.at("names")) names.push_back(n.get<std::string>());
  fol::Signature sig;
  if (src.contains("relations"))
    for (const auto& [sym, ar] : src.at("relations").items()) sig.add_relation(sym, ar.get<unsigned>());
  if (src.contains("functions"))
    for (const auto& [sym, ar] : src.at("functions").items()) sig.add_function(sym, ar.get<unsigned>());
  fol::BValuedStructure st(b, names, sig);
  auto value = [&](const json& entry) {
    std::vector<unsigned> atoms;
    for (const auto& a : entry.back()) atoms.push_back(a.get<unsigned>());
    for (auto a : atoms)
      if (a >= b.atom_count()) throw InputError("structure value atom out of range");
    return b.element(atoms);
  };
  auto args = [&](const json& entry, std::size_t from) {
    std::vector<std::size_t> out;
    for (std::size_t i = from; i + 1 < entry.size(); ++i) out.push_back(st.index_of(entry[i].get<std::string>()));
    return out;
  };
  if (src.contains("equality"))
    for (const auto& e : src.at("equality")) {
      if (e.size() != 3) throw InputError("equality entries are [s, t, atoms]");
      const auto a = args(e, 0);
      st.set_equality(a[0], a[1], value(e));
    }
  if (src.contains("relation_values"))
    for (const auto& [sym, entries] : src.at("relation_values").items())
      for (const auto& e : entries) st.set_relation(sym, args(e, 0), value(e));
  if (src.contains("function_values"))
    for (const auto& [sym, entries] : src.at("function_values").items())
      for (const auto& e : entries) {
        const auto a = args(e, 0);
        st.set_function(sym, a.front(), std::span<const std::size_t>(a).subspan(1), value(e));
      }
  return st;
}

std::vector<std::string> sorted_free(const fol::Formula& f) {
  const auto fv = f.free_variables();
  return {fv.begin(), fv.end()};
}

}  // namespace

double evaluation_cells(const fol::Formula& f, std::size_t pool_size) {
  std::set<std::string> vars;
  collect_vars(f, vars);
  return std::pow(static_cast<double>(pool_size), static_cast<double>(vars.size()));
}

json cmd_eval(const Scenario& s, const Options& o) {
  json r = header("eval");
  const unsigned rank = o.pool_rank.value_or(s.pool_rank);
  const auto pool = make_pool(s, rank);
  guard(s.formulas, pool.size());
  const names::PoolModel model(pool);
  r["algebra"] = {{"atoms", s.algebra.atom_count()}, {"source", s.poset ? "poset" : "atoms"}};
  r["pool"] = {{"kind", s.pool_kind}, {"rank", rank}, {"size", pool.size()}};
  json results = json::array();
  for (std::size_t i = 0; i < s.formulas.size(); ++i) {
    const auto& f = s.formulas[i];
    names::NameAssignment a;
    for (const auto& v : sorted_free(f)) {
      auto it = s.assignment.find(v);
      if (it == s.assignment.end()) throw InputError("formula '" + s.formula_sources[i] + "' has unassigned variable '" + v + "'");
      a.emplace(v, it->second);
    }
    const auto value = model.value(f, a);
    results.push_back({{"formula", fol::to_string(f)}, {"source", s.formula_sources[i]}, {"value", atoms_json(value)}, {"is_one", value.is_one()}});
  }
  r["results"] = results;

  bool ok = true;
  const auto pool_laws = fol::check_laws(model.structure());
  r["laws"] = {{"pool", law_report_json(pool_laws)}};
  ok = ok && pool_laws.ok();
  json warnings = json::array();
  for (const auto& spec : s.structures) {
    const auto st = build_structure(s.algebra, spec.source);
    const auto lr = fol::check_laws(st);
    r["laws"][spec.label] = law_report_json(lr);
    // Hand-built structures may break the laws on purpose; they warn rather than fail.
    for (const auto& v : lr.violations)
      warnings.push_back({{"structure", spec.label}, {"law", v.law}, {"symbol", v.symbol}, {"witness", v.witness}});
  }
  r["warnings"] = warnings;
  finish(r, ok);
  return r;
}

json cmd_ultrapower(const Scenario& s, const Options& o) {
  json r = header("ultrapower");
  const ba::Algebra& b = s.algebra;
  const unsigned rank = o.pool_rank.value_or(s.pool_rank);
  const unsigned depth = o.depth.value_or(3);
  const std::uint64_t samples = o.samples.value_or(100);
  auto pm = std::make_shared<const names::PoolModel>(make_pool(s, rank));
  const auto sig = fol::Signature::set_theory();
  fol::SampleOptions so;
  so.max_depth = depth;
  std::vector<fol::Formula> formulas = s.formulas;
  for (auto& f : fol::sample_formulas(sig, samples, o.seed, so)) formulas.push_back(std::move(f));
  guard(formulas, pm->pool().size());

  // Function-presentation sizes: fragment^|A| per antichain of the family.
  const auto fragment = names::hf_universe(rank);
  const auto family = s.antichains.empty() ? ba::all_maximal_antichains(b) : ba::refinement_closure(s.antichains);
  double functions = 0;
  for (const auto& a : family) functions += std::pow(static_cast<double>(fragment.size()), static_cast<double>(a.size()));
  if (functions > double(1 << 20)) throw SizeError("functional presentation needs " + std::to_string(functions) + " spanning functions");

  std::vector<fol::Formula> small;
  for (const auto& f : formulas)
    if (f.depth() <= 2 && small.size() < 20) small.push_back(f);

  std::vector<ultra::Ultrafilter> us;
  if (s.ultrafilter_atom) us.push_back(ultra::Ultrafilter::principal(b, *s.ultrafilter_atom));
  else us = ultra::enumerate_ultrafilters(b);

  r["algebra"] = {{"atoms", b.atom_count()}, {"source", s.poset ? "poset" : "atoms"}};
  r["pool"] = {{"kind", s.pool_kind}, {"rank", rank}, {"size", pm->pool().size()}};
  r["formulas"] = {{"declared", s.formulas.size()}, {"sampled", samples}, {"depth", depth}, {"seed", o.seed}};

  std::vector<std::unique_ptr<ultra::QuotientModel>> models;
  for (const auto& u : us) models.push_back(std::make_unique<ultra::QuotientModel>(pm, u));
  std::vector<const ultra::QuotientModel*> ptrs;
  for (const auto& m : models) ptrs.push_back(m.get());
  const auto sweep = ultra::los_sweep(*pm, ptrs, formulas);
  r["los"] = {{"instances", sweep.plain.instances},
              {"failures", sweep.plain.failures},
              {"ground_instances", sweep.ground.instances},
              {"ground_failures", sweep.ground.failures},
              {"examples", sweep.plain.examples}};
  bool ok = sweep.plain.ok() && sweep.ground.ok();

  json per = json::array();
  for (std::size_t k = 0; k < us.size(); ++k) {
    const auto& u = us[k];
    const auto& m = *models[k];
    json e;
    e["ultrafilter"] = u.describe();
    e["atom"] = u.atom();
    const auto g = ultra::degree_of_genericity(b, u);
    e["genericity"] = {{"generic", g.generic}, {"antichains_checked", g.antichains_checked}, {"verdict", g.verdict}};
    e["quotient"] = {{"classes", m.class_count()}, {"ground_classes", m.ground_classes().size()}, {"congruent", m.congruent()}};
    const auto t = ultra::generic_triviality(m, small);
    e["triviality"] = {{"ok", t.ok()}, {"verdict", t.verdict}, {"fragment", t.fragment_size},
                       {"elementarity_instances", t.elementarity_instances}};
    const auto gl = ultra::check_ground_lemmas(m);
    e["ground_lemmas"] = {{"ok", gl.ok()}, {"pairs", gl.pairs_checked}};

    const ultra::FunctionalModel fm(b, u, fragment, s.antichains);
    const auto iso = ultra::presentations_iso(fm, m);
    e["two_presentations"] = {{"ok", iso.ok()}, {"functional_classes", fm.class_count()}};

    const ultra::DirectLimitSystem dl(b, u, fragment, s.antichains);
    const auto d = dl.verify(small);
    bool reps = true;
    for (std::size_t c = 0; c < dl.limit().class_count(); ++c) reps = reps && ultra::extender_rep(dl, c).ok();
    e["direct_limit"] = {{"factors", d.factors},
                         {"refinement_pairs", d.refinement_pairs},
                         {"identities", d.identities_checked},
                         {"well_defined", d.well_defined},
                         {"embedding_triangles", d.embedding_triangles},
                         {"limit_triangles", d.limit_triangles},
                         {"composition", d.composition},
                         {"elementary", d.elementary},
                         {"limit_bijective", d.limit_bijective},
                         {"threads", d.threads},
                         {"extender_representation", reps}};
    const auto sp = ultra::finite_descent_spectrum(b, u);
    e["descent_spectrum"] = {{"order_types", sp.order_types}, {"reason", sp.reason}};
    ok = ok && m.congruent() && t.ok() && gl.ok() && iso.ok() && d.ok() && reps;
    per.push_back(e);
  }
  r["ultrafilters"] = per;

  if (s.ideal) {
    const auto is = ultra::ideal_suite(b, *s.ideal);
    r["ideal"] = {{"quotient_ultrafilters", is.quotient_ultrafilters},
                  {"induced_ultra", is.induced_ultra},
                  {"induced_avoids_ideal", is.induced_avoids_ideal},
                  {"degenerate", s.ideal->degenerate()}};
    ok = ok && is.ok();
  }
  if (s.poset && s.poset->filter) {
    ultra::NodeSet f = 0;
    for (auto n : *s.poset->filter) f |= ultra::NodeSet{1} << n;
    const auto pd = ultra::poset_diagnostics(s.poset->poset, f);
    r["poset_filter"] = {{"two_splits", pd.two_splits},
                         {"undecided", pd.undecided},
                         {"decides_all_two_splits", pd.decides_all_two_splits},
                         {"generates_ultrafilter", pd.generates_ultra},
                         {"agrees", pd.agrees()}};
    ok = ok && pd.agrees();
  }
  finish(r, ok);
  return r;
}

json cmd_demo_omega(const Options& o) {
  json r = header("demo-omega");
  const std::uint64_t depth = o.depth.value_or(10);
  const std::uint64_t samples = o.samples.value_or(1000);
  constexpr std::uint64_t kSchemaSamples = 100, kStandardBound = 50;

  const auto w = omega::witness_suite(kSchemaSamples, o.seed);
  r["witness_suite"] = {
      {"missed_singletons",
       {{"ok", w.missed.ok()}, {"finite_sets_rejected", w.missed.finite_sets_rejected}, {"sampled", w.missed.sampled}}},
      {"zero_meet_chain",
       {{"ok", w.chain.ok()}, {"length", w.chain.length}, {"gap_5_7_outside_u", w.chain.gap_example}}},
      {"descent", {{"ok", w.descent.ok()}, {"length", w.descent.length}}},
      {"finite_partitions", {{"ok", w.partitions.ok()}, {"sampled", w.partitions.sampled}}},
      {"spectrum", w.spectrum},
      {"genericity", w.genericity},
      {"examples",
       {{"a5", upset_json(omega::UPSet::tail(5))},
        {"a5_minus_a7", upset_json(omega::UPSet::tail(5) - omega::UPSet::tail(7))},
        {"evens", upset_json(omega::UPSet::residues(2, {0}))}}},
      {"ok", w.ok()}};

  const auto ill = omega::illfoundedness_witness(depth, kStandardBound);
  json chain = json::array();
  for (const auto& f : ill.chain) chain.push_back(ea_json(f));
  r["illfoundedness"] = {{"depth", depth},         {"chain", chain},
                         {"m_bound", ill.m_bound}, {"strictly_descending", ill.strictly_descending},
                         {"above_standard", ill.above_standard}, {"j_order_preserving", ill.j_order_preserving},
                         {"id_not_standard", ill.id_not_standard}, {"ok", ill.ok()}};
  bool ok = w.ok() && ill.ok();

  if (samples == 0) {
    r["rectangle"] = {{"skipped", true}, {"notice", "rectangle demo skipped: --samples 0"}};
  } else {
    const auto d = omega::rectangle_failure_demo(samples, o.seed);
    json inside = json::array(), outside = json::array();
    for (const auto& p : d.first_inside) inside.push_back({p.first, p.second});
    for (const auto& p : d.first_outside) outside.push_back({p.first, p.second});
    r["rectangle"] = {{"samples", d.samples},
                      {"sides_in_u", d.all_sides_in_u},
                      {"meets_triangle", d.meets_triangle},
                      {"meets_complement", d.meets_complement},
                      {"example_points", d.example_points},
                      {"inside_points", inside},
                      {"outside_points", outside},
                      {"ok", d.ok()}};
    ok = ok && d.ok();
  }
  r["seed"] = o.seed;
  finish(r, ok);
  return r;
}

namespace {

void flatten(const json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

}  // namespace

std::string render(const json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return os.str();
}

int exit_status(const json& report) { return report.value("status", "fail") == "pass" ? 0 : 1; }

}  // namespace bvm::cli
