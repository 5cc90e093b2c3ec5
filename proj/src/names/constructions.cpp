#include "bvm/names/constructions.hpp"

#include <map>

#include "bvm/ba/antichain.hpp"
#include "bvm/error.hpp"
#include "bvm/names/valuer.hpp"

namespace bvm::names {

Name mix(std::span<const ba::Element> a, std::span<const Name> parts) {
  if (a.empty()) throw InputError("mix: empty antichain");
  if (a.size() != parts.size()) throw InputError("mix: need exactly one name per antichain member");
  if (!ba::is_antichain(a)) throw InputError("mix: input is not an antichain");
  const unsigned n = a.front().atom_count();
  std::vector<NameEntry> entries;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (parts[i].atom_count() != n) throw InputError("mix: name from a different algebra");
    for (const auto& e : parts[i].entries()) entries.push_back({e.name, e.value & a[i]});
  }
  return Name::make(n, std::move(entries));
}

Name element_check(ba::Element e, const ba::Algebra& b) {
  if (!b.owns(e)) throw InputError("element_check: element from a different algebra");
  return check_name(encode_element(e), b);
}

Name generic_name(const ba::Algebra& b) {
  std::vector<NameEntry> entries;
  for (auto e : b.elements()) entries.push_back({element_check(e, b), e});
  return Name::make(b.atom_count(), std::move(entries));
}

HFSet val(const Name& t, const Filter& f) {
  if (t.atom_count() != f.atom_count()) throw InputError("val: filter on a different algebra");
  std::map<Name, HFSet> memo;
  auto rec = [&](auto& self, const Name& n) -> HFSet {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    std::vector<HFSet> members;
    for (const auto& e : n.entries())
      if (f.contains(e.value)) members.push_back(self(self, e.name));
    HFSet out = HFSet::of(std::move(members));
    memo.emplace(n, out);
    return out;
  };
  return rec(rec, t);
}

Name pair_name(const Name& a, const Name& b) {
  const unsigned n = a.atom_count();
  if (b.atom_count() != n) throw InputError("pair_name: names from different algebras");
  const ba::Element one(n, ba::full_mask(n));
  Name single = Name::make(n, {{a, one}});
  Name both = Name::make(n, {{a, one}, {b, one}});
  return Name::make(n, {{single, one}, {both, one}});
}

RankReport rank_check(const Name& t, const ba::Algebra& b) {
  if (t.atom_count() != b.atom_count()) throw InputError("rank_check: name from a different algebra");
  RankReport r;
  r.name_rank = t.rank();
  for (unsigned z = 0; z < b.atom_count(); ++z) {
    const unsigned rk = val(t, Filter::at_atom(b, z)).rank();
    r.value_ranks.push_back(rk);
    if (rk > r.name_rank) {
      r.bounded = false;
      r.violating_atoms.push_back(z);
    }
    if (rk == r.name_rank) r.attained = true;
  }
  return r;
}

Name powerset_name(const Name& t, const ba::Algebra& b, std::size_t exponent_cap) {
  if (t.atom_count() != b.atom_count()) throw InputError("powerset_name: name from a different algebra");
  const auto dom = t.domain();
  const auto elems = b.elements();
  const std::size_t exponent = dom.size() * elems.size();
  if (exponent > exponent_cap)
    throw SizeError("powerset_name: |dom|*|B| = " + std::to_string(exponent) + " exceeds cap " +
                    std::to_string(exponent_cap));
  std::vector<NameEntry> pairs;
  for (const auto& s : dom)
    for (auto e : elems) pairs.push_back({s, e});
  Valuer v(b.atom_count());
  std::vector<NameEntry> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << exponent); ++mask) {
    std::vector<NameEntry> chosen;
    for (std::size_t i = 0; i < exponent; ++i)
      if ((mask >> i) & 1U) chosen.push_back(pairs[i]);
    Name eta = Name::make(b.atom_count(), std::move(chosen));
    out.push_back({eta, v.subset(eta, t)});
  }
  return Name::make(b.atom_count(), std::move(out));
}

Name separation_name(const Name& t, const fol::Formula& phi, const std::string& var, const NamePool& pool,
                     const NameAssignment& params) {
  if (t.atom_count() != pool.algebra().atom_count()) throw InputError("separation_name: name from a different algebra");
  std::vector<Name> extra{t};
  for (const auto& [k, n] : params) extra.push_back(n);
  PoolModel model(pool.with(extra));
  const std::size_t ti = *model.pool().index_of(t);
  std::vector<NameEntry> out;
  for (const auto& s : t.domain()) {
    NameAssignment a = params;
    a[var] = s;
    const std::size_t si = *model.pool().index_of(s);
    out.push_back({s, model.in(si, ti) & model.value(phi, a)});
  }
  return Name::make(t.atom_count(), std::move(out));
}

}  // namespace bvm::names
