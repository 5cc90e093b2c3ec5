#include "bvm/ultra/spanning.hpp"

#include <algorithm>

#include "bvm/error.hpp"
#include "bvm/names/constructions.hpp"

namespace bvm::ultra {

SpanningFunction::SpanningFunction(ba::Antichain domain, std::vector<names::HFSet> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (!domain_.maximal()) throw InputError("spanning function: domain is not a maximal antichain");
  if (values_.size() != domain_.size()) throw InputError("spanning function: one value per antichain member required");
}

SpanningFunction SpanningFunction::constant(const ba::Algebra& b, const names::HFSet& x) {
  return SpanningFunction(ba::Antichain::trivial(b), {x});
}

const names::HFSet& SpanningFunction::at_atom(unsigned atom) const {
  auto i = domain_.index_of_atom(atom);
  if (!i) throw InputError("spanning function: atom out of range");
  return values_[*i];
}

SpanningFunction sf_reduce(const SpanningFunction& f, const ba::Antichain& finer) {
  const auto map = ba::refinement_map(finer, f.domain());
  std::vector<names::HFSet> values;
  for (std::size_t i : map) values.push_back(f.at(i));
  return SpanningFunction(finer, std::move(values));
}

namespace {

template <class Pred>
ba::Element join_where(const SpanningFunction& f, const SpanningFunction& g, Pred pred) {
  const auto cr = ba::common_refinement(f.domain(), g.domain());
  ba::Element acc(f.domain().atom_count(), 0);
  for (std::size_t c = 0; c < cr.common.size(); ++c)
    if (pred(f.at(cr.to_first[c]), g.at(cr.to_second[c]))) acc |= cr.common[c];
  return acc;
}

ba::Antichain common_of(const std::vector<const SpanningFunction*>& fs, const ba::Algebra* fallback) {
  if (fs.empty()) return ba::Antichain::trivial(*fallback);
  ba::Antichain c = fs.front()->domain();
  for (std::size_t i = 1; i < fs.size(); ++i) c = ba::common_refinement(c, fs[i]->domain()).common;
  return c;
}

std::vector<std::string> free_list(const fol::Formula& f) {
  const auto fv = f.free_variables();
  return {fv.begin(), fv.end()};
}

}  // namespace

ba::Element sf_agreement(const SpanningFunction& f, const SpanningFunction& g) {
  return join_where(f, g, [](const names::HFSet& x, const names::HFSet& y) { return x == y; });
}

ba::Element sf_membership(const SpanningFunction& f, const SpanningFunction& g) {
  return join_where(f, g, [](const names::HFSet& x, const names::HFSet& y) { return y.contains(x); });
}

bool sf_equiv(const SpanningFunction& f, const SpanningFunction& g, const Ultrafilter& u) {
  return u.contains(sf_agreement(f, g));
}

bool sf_member(const SpanningFunction& f, const SpanningFunction& g, const Ultrafilter& u) {
  return u.contains(sf_membership(f, g));
}

ba::Element sf_satisfaction(const fol::Formula& f, const std::map<std::string, SpanningFunction>& args,
                            const std::vector<names::HFSet>& fragment) {
  if (args.empty()) throw InputError("sf_satisfaction: needs at least one spanning function to fix the algebra");
  std::vector<const SpanningFunction*> fs;
  for (const auto& [k, v] : args) fs.push_back(&v);
  const unsigned n = fs.front()->domain().atom_count();
  const ba::Algebra b(n, {}, ba::Algebra::kHardMaxAtoms);
  const auto c = common_of(fs, &b);
  const auto hf = hf_structure(fragment);
  std::map<names::HFSet, std::size_t> index;
  for (std::size_t i = 0; i < fragment.size(); ++i) index.emplace(fragment[i], i);
  std::map<std::string, ba::RefinementMap> maps;
  for (const auto& [var, g] : args) maps.emplace(var, ba::refinement_map(c, g.domain()));
  ba::Element acc = b.zero();
  for (std::size_t i = 0; i < c.size(); ++i) {
    fol::Assignment a;
    for (const auto& [var, g] : args) {
      auto it = index.find(g.at(maps.at(var)[i]));
      if (it == index.end()) throw InputError("sf_satisfaction: value outside the fragment");
      a[var] = it->second;
    }
    if (fol::holds(hf, f, a)) acc |= c[i];
  }
  return acc;
}

names::Name sf_name(const SpanningFunction& f, const ba::Algebra& b) {
  std::vector<names::Name> parts;
  for (const auto& v : f.values()) parts.push_back(names::check_name(v, b));
  return names::mix(f.domain().members(), parts);
}

FunctionalModel::FunctionalModel(const ba::Algebra& b, Ultrafilter u, std::vector<names::HFSet> fragment,
                                 std::vector<ba::Antichain> family)
    : algebra_(b), u_(u), fragment_(std::move(fragment)), family_(std::move(family)),
      model_(1, fol::Signature::set_theory()) {
  if (fragment_.empty()) throw InputError("functional model: empty fragment");
  if (family_.empty()) family_ = ba::all_maximal_antichains(b);
  for (const auto& a : family_) {
    if (!a.maximal() || a.atom_count() != b.atom_count())
      throw InputError("functional model: family member is not a maximal antichain of the algebra");
    double count = 1;
    for (std::size_t i = 0; i < a.size(); ++i) count *= static_cast<double>(fragment_.size());
    if (count + static_cast<double>(elements_.size()) > 1e5) throw SizeError("functional model: too many spanning functions");
    std::vector<std::size_t> pick(a.size(), 0);
    while (true) {
      std::vector<names::HFSet> values;
      for (std::size_t p : pick) values.push_back(fragment_[p]);
      elements_.emplace_back(a, std::move(values));
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == fragment_.size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  class_of_.assign(elements_.size(), 0);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    std::size_t c = 0;
    while (c < reps_.size() && !sf_equiv(elements_[i], elements_[reps_[c]], u_)) ++c;
    if (c == reps_.size()) reps_.push_back(i);
    class_of_[i] = c;
  }
  model_ = fol::ClassicalStructure(reps_.size(), fol::Signature::set_theory());
  for (std::size_t c = 0; c < reps_.size(); ++c) {
    model_.set_relation(fol::kGroundPredicate, std::vector<std::size_t>{c}, true);
    for (std::size_t d = 0; d < reps_.size(); ++d)
      model_.set_relation(fol::kMembership, std::vector<std::size_t>{c, d}, in(c, d));
  }
}

std::optional<std::size_t> FunctionalModel::index_of(const SpanningFunction& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FunctionalModel::in(std::size_t c, std::size_t d) const {
  return sf_member(elements_[reps_[c]], elements_[reps_[d]], u_);
}

std::size_t FunctionalModel::j(const names::HFSet& x) const {
  const auto c = SpanningFunction::constant(algebra_, x);
  if (auto i = index_of(c)) return class_of_[*i];
  // The trivial antichain may be absent from the family; fall back to equivalence.
  for (std::size_t k = 0; k < reps_.size(); ++k)
    if (sf_equiv(c, elements_[reps_[k]], u_)) return k;
  throw InputError("functional model: constant outside the fragment");
}

bool FunctionalModel::holds(const fol::Formula& f, const fol::Assignment& elements) const {
  fol::Assignment a;
  for (const auto& [var, i] : elements) a[var] = class_of_.at(i);
  return fol::holds(model_, f, a);
}

LosReport sf_los(const FunctionalModel& m, const fol::Formula& f) {
  LosReport r;
  const auto vars = free_list(f);
  const auto truth = fol::holds_table(m.structure(), f, vars);
  const std::size_t n = m.elements().size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) total *= n;
  std::vector<std::size_t> digits(vars.size());
  const auto constant = SpanningFunction::constant(m.algebra(), m.fragment().front());
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t rest = k;
    for (std::size_t i = vars.size(); i-- > 0;) {
      digits[i] = rest % n;
      rest /= n;
    }
    std::map<std::string, SpanningFunction> args;
    std::size_t cls = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      args.emplace(vars[i], m.elements()[digits[i]]);
      cls = cls * m.class_count() + m.class_of(digits[i]);
    }
    // A closed formula still needs an algebra for its satisfaction join.
    if (args.empty()) args.emplace("_", constant);
    const bool boolean = m.ultrafilter().contains(sf_satisfaction(f, args, m.fragment()));
    const bool model = truth[cls] != 0;
    ++r.instances;
    if (model != boolean) {
      ++r.failures;
      if (r.examples.size() < 5) r.examples.push_back(fol::to_string(f) + " (functional) " + m.ultrafilter().describe());
    }
  }
  return r;
}

OpenDenseFunction::OpenDenseFunction(const ba::Algebra& b, std::map<ba::Bits, names::HFSet> values)
    : n_(b.atom_count()), values_(std::move(values)) {
  for (const auto& [bits, v] : values_) {
    if (bits == 0 || (bits & ~ba::full_mask(n_)) != 0) throw InputError("open dense function: bad domain element");
    // Open: every nonzero element below a member is a member with the same value.
    for (ba::Bits sub = (bits - 1) & bits; sub != 0; sub = (sub - 1) & bits) {
      auto it = values_.find(sub);
      if (it == values_.end()) throw InputError("open dense function: domain not downward closed");
      if (!(it->second == v)) throw InputError("open dense function: values not coherent");
    }
  }
  // Dense: every atom lies in the domain (openness then covers every element above it).
  for (unsigned i = 0; i < n_; ++i)
    if (!values_.count(ba::Bits{1} << i)) throw InputError("open dense function: domain not dense");
}

OpenDenseFunction OpenDenseFunction::from_spanning(const ba::Algebra& b, const SpanningFunction& f) {
  std::map<ba::Bits, names::HFSet> values;
  for (std::size_t i = 0; i < f.domain().size(); ++i) {
    const ba::Bits a = f.domain()[i].bits();
    for (ba::Bits sub = a; sub != 0; sub = (sub - 1) & a) values.emplace(sub, f.at(i));
  }
  return OpenDenseFunction(b, std::move(values));
}

ba::Element od_agreement(const OpenDenseFunction& f, const OpenDenseFunction& g, const ba::Algebra& b) {
  ba::Bits acc = 0;
  for (const auto& [bits, v] : f.values()) {
    auto it = g.values().find(bits);
    if (it != g.values().end() && it->second == v) acc |= bits;
  }
  return b.from_bits(acc);
}

IsoReport presentations_iso(const FunctionalModel& fm, const QuotientModel& qm) {
  IsoReport r;
  const auto& b = fm.algebra();
  const std::size_t none = qm.class_count();
  r.map.assign(fm.class_count(), none);
  for (std::size_t c = 0; c < fm.class_count(); ++c) {
    auto q = qm.class_of_name(sf_name(fm.elements()[fm.representative(c)], b));
    if (!q) {
      r.defined = false;
      continue;
    }
    r.map[c] = *q;
  }
  for (std::size_t i = 0; i < fm.elements().size() && r.well_defined; ++i) {
    auto q = qm.class_of_name(sf_name(fm.elements()[i], b));
    if (!q || *q != r.map[fm.class_of(i)]) r.well_defined = false;
  }
  for (std::size_t c = 0; c < fm.class_count(); ++c)
    for (std::size_t d = 0; d < fm.class_count(); ++d) {
      if (r.map[c] == none || r.map[d] == none) continue;
      if (c != d && r.map[c] == r.map[d]) r.injective = false;
      if (fm.in(c, d) != qm.in(r.map[c], r.map[d])) r.preserves_membership = false;
    }
  for (std::size_t g : qm.ground_classes())
    if (std::find(r.map.begin(), r.map.end(), g) == r.map.end()) r.onto = false;
  for (const auto& x : fm.fragment()) {
    auto ju = qm.j(x);
    if (!ju || r.map[fm.j(x)] != *ju) r.commutes_with_j = false;
  }
  return r;
}

}  // namespace bvm::ultra
