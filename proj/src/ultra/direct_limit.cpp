#include "bvm/ultra/direct_limit.hpp"

#include <algorithm>
#include <numeric>

#include "bvm/error.hpp"
#include "bvm/names/constructions.hpp"
#include "bvm/names/valuer.hpp"

namespace bvm::ultra {

Ultrafilter induced_ultrafilter(const Ultrafilter& u, const ba::Antichain& a) {
  if (a.size() > 16) throw SizeError("induced ultrafilter: antichain too large");
  const ba::Algebra pa(static_cast<unsigned>(a.size()));
  std::vector<ba::Element> members;
  for (ba::Bits x = 0; x <= ba::full_mask(pa.atom_count()); ++x)
    if (u.contains(a.join_of(x))) members.push_back(pa.from_bits(x));
  return Ultrafilter::from_elements(pa, members);
}

namespace {

// Mask of the antichain positions where two digit vectors satisfy pred.
template <class Pred>
ba::Bits where(const std::vector<std::size_t>& f, const std::vector<std::size_t>& g, Pred pred) {
  ba::Bits m = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (pred(f[i], g[i])) m |= ba::Bits{1} << i;
  return m;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

DirectLimitSystem::DirectLimitSystem(const ba::Algebra& b, Ultrafilter u, std::vector<names::HFSet> fragment,
                                     std::vector<ba::Antichain> family)
    : limit_(b, u, fragment, ba::refinement_closure(family.empty() ? ba::all_maximal_antichains(b) : family)) {
  const std::size_t m = fragment.size();
  for (const auto& a : limit_.family()) {
    FactorModel fm;
    fm.antichain = a;
    fm.induced = induced_ultrafilter(u, a);
    double count = 1;
    for (std::size_t i = 0; i < a.size(); ++i) count *= static_cast<double>(m);
    if (count > 1e5) throw SizeError("direct limit: too many functions on a factor");
    fm.function_count = static_cast<std::size_t>(count);
    fm.class_of.assign(fm.function_count, 0);
    const ba::Algebra pa(static_cast<unsigned>(a.size()));
    for (std::size_t f = 0; f < fm.function_count; ++f) {
      const auto df = digits_of(f, a.size());
      std::size_t c = 0;
      for (; c < fm.reps.size(); ++c) {
        const auto dg = digits_of(fm.reps[c], a.size());
        if (fm.induced.contains(pa.from_bits(where(df, dg, [](auto x, auto y) { return x == y; })))) break;
      }
      if (c == fm.reps.size()) fm.reps.push_back(f);
      fm.class_of[f] = c;
    }
    fm.structure = fol::ClassicalStructure(fm.reps.size(), fol::Signature::set_theory());
    const auto& frag = limit_.fragment();
    for (std::size_t c = 0; c < fm.reps.size(); ++c) {
      fm.structure.set_relation(fol::kGroundPredicate, std::vector<std::size_t>{c}, true);
      const auto dc = digits_of(fm.reps[c], a.size());
      for (std::size_t d = 0; d < fm.reps.size(); ++d) {
        const auto dd = digits_of(fm.reps[d], a.size());
        const ba::Bits mask = where(dc, dd, [&](auto x, auto y) { return frag[y].contains(frag[x]); });
        fm.structure.set_relation(fol::kMembership, std::vector<std::size_t>{c, d},
                                  fm.induced.contains(pa.from_bits(mask)));
      }
    }
    factors_.push_back(std::move(fm));
  }
}

std::vector<std::size_t> DirectLimitSystem::digits_of(std::size_t number, std::size_t length) const {
  const std::size_t m = limit_.fragment().size();
  std::vector<std::size_t> d(length);
  for (auto& x : d) {
    x = number % m;
    number /= m;
  }
  return d;
}

std::size_t DirectLimitSystem::number_of(const std::vector<std::size_t>& digits) const {
  const std::size_t m = limit_.fragment().size();
  std::size_t n = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) n = n * m + *it;
  return n;
}

std::optional<std::size_t> DirectLimitSystem::factor_index(const ba::Antichain& a) const {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].antichain == a) return i;
  return std::nullopt;
}

SpanningFunction DirectLimitSystem::function(std::size_t factor, std::size_t number) const {
  const auto& a = factors_.at(factor).antichain;
  std::vector<names::HFSet> values;
  for (std::size_t d : digits_of(number, a.size())) values.push_back(limit_.fragment()[d]);
  return SpanningFunction(a, std::move(values));
}

std::size_t DirectLimitSystem::j_factor(std::size_t factor, const names::HFSet& x) const {
  const auto& frag = limit_.fragment();
  auto it = std::find(frag.begin(), frag.end(), x);
  if (it == frag.end()) throw InputError("direct limit: constant outside the fragment");
  const auto& fm = factors_.at(factor);
  std::vector<std::size_t> d(fm.antichain.size(), static_cast<std::size_t>(it - frag.begin()));
  return fm.class_of[number_of(d)];
}

std::optional<std::size_t> DirectLimitSystem::connect(std::size_t from, std::size_t to, std::size_t cls) const {
  const auto& a = factors_.at(from);
  const auto& b = factors_.at(to);
  if (!b.antichain.refines(a.antichain)) return std::nullopt;
  const auto map = ba::refinement_map(b.antichain, a.antichain);
  const auto df = digits_of(a.reps.at(cls), a.antichain.size());
  std::vector<std::size_t> dg;
  for (std::size_t i : map) dg.push_back(df[i]);
  return b.class_of[number_of(dg)];
}

std::size_t DirectLimitSystem::to_limit(std::size_t factor, std::size_t cls) const {
  const auto f = function(factor, factors_.at(factor).reps.at(cls));
  auto i = limit_.index_of(f);
  if (!i) throw InputError("direct limit: factor antichain missing from the limit family");
  return limit_.class_of(*i);
}

DirectLimitReport DirectLimitSystem::verify(const std::vector<fol::Formula>& formulas) const {
  DirectLimitReport r;
  r.factors = factors_.size();
  const auto& frag = limit_.fragment();

  // Class-respect: every function of a class maps to the image of the representative.
  for (std::size_t a = 0; a < factors_.size(); ++a) {
    const auto& fa = factors_[a];
    for (std::size_t f = 0; f < fa.function_count; ++f) {
      const std::size_t c = fa.class_of[f];
      auto i = limit_.index_of(function(a, f));
      ++r.identities_checked;
      if (!i || limit_.class_of(*i) != to_limit(a, c)) r.well_defined = false;
    }
    for (const auto& x : frag) {
      ++r.identities_checked;
      if (to_limit(a, j_factor(a, x)) != limit_.j(x)) r.embedding_triangles = false;
    }
  }

  for (std::size_t a = 0; a < factors_.size(); ++a) {
    for (std::size_t b = 0; b < factors_.size(); ++b) {
      if (!factors_[b].antichain.refines(factors_[a].antichain)) continue;
      ++r.refinement_pairs;
      const auto& fa = factors_[a];
      const auto map = ba::refinement_map(factors_[b].antichain, fa.antichain);
      for (std::size_t f = 0; f < fa.function_count; ++f) {
        const auto df = digits_of(f, fa.antichain.size());
        std::vector<std::size_t> dg;
        for (std::size_t i : map) dg.push_back(df[i]);
        ++r.identities_checked;
        if (factors_[b].class_of[number_of(dg)] != *connect(a, b, fa.class_of[f])) r.well_defined = false;
      }
      for (std::size_t c = 0; c < fa.class_count(); ++c) {
        const std::size_t img = *connect(a, b, c);
        ++r.identities_checked;
        if (to_limit(b, img) != to_limit(a, c)) r.limit_triangles = false;
        for (std::size_t cc = 0; cc < factors_.size(); ++cc) {
          if (!factors_[cc].antichain.refines(factors_[b].antichain)) continue;
          ++r.identities_checked;
          if (*connect(b, cc, img) != *connect(a, cc, c)) r.composition = false;
        }
      }
      for (const auto& x : frag) {
        ++r.identities_checked;
        if (*connect(a, b, j_factor(a, x)) != j_factor(b, x)) r.embedding_triangles = false;
      }
      for (const auto& phi : formulas) {
        const auto fv = phi.free_variables();
        const std::vector<std::string> vars(fv.begin(), fv.end());
        const auto ta = fol::holds_table(fa.structure, phi, vars);
        const auto tb = fol::holds_table(factors_[b].structure, phi, vars);
        for (std::size_t row = 0; row < ta.size(); ++row) {
          std::size_t rest = row, brow = 0, scale = 1;
          // Rows are row-major with vars[0] most significant.
          std::vector<std::size_t> cols(vars.size());
          for (std::size_t k = vars.size(); k-- > 0;) {
            cols[k] = rest % fa.class_count();
            rest /= fa.class_count();
          }
          for (std::size_t k = vars.size(); k-- > 0;) {
            brow += *connect(a, b, cols[k]) * scale;
            scale *= factors_[b].class_count();
          }
          ++r.identities_checked;
          if ((ta[row] != 0) != (tb[brow] != 0)) r.elementary = false;
        }
      }
    }
  }

  // Threads: (A,x) ~ (B,y) iff they agree on the common refinement.
  std::vector<std::size_t> offset(factors_.size() + 1, 0);
  for (std::size_t a = 0; a < factors_.size(); ++a) offset[a + 1] = offset[a] + factors_[a].class_count();
  std::vector<std::size_t> parent(offset.back());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t a = 0; a < factors_.size(); ++a)
    for (std::size_t b = a + 1; b < factors_.size(); ++b) {
      const auto c = factor_index(ba::common_refinement(factors_[a].antichain, factors_[b].antichain).common);
      if (!c) {
        r.limit_bijective = false;
        continue;
      }
      for (std::size_t x = 0; x < factors_[a].class_count(); ++x)
        for (std::size_t y = 0; y < factors_[b].class_count(); ++y)
          if (*connect(a, *c, x) == *connect(b, *c, y))
            parent[find_root(parent, offset[a] + x)] = find_root(parent, offset[b] + y);
    }
  std::vector<std::optional<std::size_t>> image_of_thread(parent.size());
  std::vector<char> hit(limit_.class_count(), 0);
  for (std::size_t a = 0; a < factors_.size(); ++a)
    for (std::size_t x = 0; x < factors_[a].class_count(); ++x) {
      const std::size_t root = find_root(parent, offset[a] + x);
      const std::size_t img = to_limit(a, x);
      hit[img] = 1;
      if (!image_of_thread[root]) image_of_thread[root] = img;
      else if (*image_of_thread[root] != img) r.limit_bijective = false;
    }
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (find_root(parent, i) == i) roots.push_back(i);
  r.threads = roots.size();
  if (r.threads != limit_.class_count()) r.limit_bijective = false;
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) r.limit_bijective = false;
  return r;
}

ExtenderRep extender_rep(const DirectLimitSystem& s, std::size_t limit_class) {
  const auto& fm = s.limit();
  if (limit_class >= fm.class_count()) throw InputError("extender rep: class out of range");
  const auto& b = s.algebra();
  const auto& u = s.ultrafilter();

  // The first factor class whose limit image is the requested element.
  std::optional<std::size_t> factor, cls;
  for (std::size_t a = 0; a < s.factors().size() && !factor; ++a)
    for (std::size_t c = 0; c < s.factors()[a].class_count(); ++c)
      if (s.to_limit(a, c) == limit_class) {
        factor = a;
        cls = c;
        break;
      }
  if (!factor) throw InputError("extender rep: element not reached by any factor");
  const auto& fa = s.factors()[*factor];
  const auto f = s.function(*factor, fa.reps[*cls]);
  const auto& a = fa.antichain;
  ExtenderRep r{*factor, f, *u.selected(a)};

  std::vector<names::Name> checks;
  std::vector<names::HFSet> codes, graph;
  for (std::size_t i = 0; i < a.size(); ++i) {
    checks.push_back(names::element_check(a[i], b));
    codes.push_back(names::encode_element(a[i]));
    graph.push_back(names::HFSet::pair(codes.back(), f.at(i)));
  }
  const auto tau_a = names::mix(a.members(), checks);
  const auto a_check = names::check_name(names::HFSet::of(codes), b);
  const auto g_dot = names::generic_name(b);
  const auto f_check = names::check_name(names::HFSet::of(graph), b);
  const auto tau_f = sf_name(f, b);

  names::Valuer v(b.atom_count());
  if (!v.in(tau_a, a_check).is_one() || !v.in(tau_a, g_dot).is_one()) r.selector_named = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (v.in(checks[i], g_dot) != a[i]) r.selector_named = false;
    if (!a[i].leq(v.eq(checks[i], tau_a))) r.selector_named = false;
  }
  r.selector_is_selected = u.contains(v.eq(tau_a, checks[r.selector]));
  if (!v.in(names::pair_name(tau_a, tau_f), f_check).is_one()) r.round_trip = false;
  const auto& rep = fm.elements()[fm.representative(limit_class)];
  if (!u.contains(v.eq(tau_f, sf_name(rep, b)))) r.round_trip = false;
  return r;
}

}  // namespace bvm::ultra
