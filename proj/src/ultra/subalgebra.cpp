#include "bvm/ultra/subalgebra.hpp"

#include <algorithm>

#include "bvm/error.hpp"
#include "bvm/fol/structure.hpp"
#include "bvm/names/constructions.hpp"
#include "bvm/names/valuer.hpp"

namespace bvm::ultra {

SubalgebraRestriction restrict_to_subalgebra(const Ultrafilter& u, const ba::Partition& p) {
  if (u.atom_count() != p.parent().atom_count()) throw InputError("restrict: ultrafilter lives on another algebra");
  std::vector<ba::Element> members;
  for (const auto& b : p.algebra().elements())
    if (u.contains(p.embed(b))) members.push_back(b);
  auto u0 = Ultrafilter::from_elements(p.algebra(), members);
  return {u0, p.block_of_atom(u.atom())};
}

names::Name embed_name(const names::Name& t, const ba::Partition& p) {
  std::vector<names::NameEntry> entries;
  for (const auto& e : t.entries()) entries.push_back({embed_name(e.name, p), p.embed(e.value)});
  return names::Name::make(p.parent().atom_count(), std::move(entries));
}

ValueAgreement subalgebra_value_agreement(const names::PoolModel& c_pool, const std::vector<ba::Partition>& partitions,
                                          const std::vector<const names::PoolModel*>& b_pools,
                                          const std::vector<fol::Formula>& formulas, bool relativize) {
  if (partitions.size() != b_pools.size()) throw InputError("value agreement: one B pool per partition");
  ValueAgreement r;
  // Each embedded B name, or failing a structural match a C-pool name it is
  // Boolean-equal to with value 1; the equality laws make the two interchangeable.
  std::vector<std::vector<std::size_t>> position(partitions.size());
  names::Valuer valuer(c_pool.pool().algebra().atom_count());
  for (std::size_t k = 0; k < partitions.size(); ++k) {
    for (const auto& t : b_pools[k]->pool().names()) {
      const auto e = embed_name(t, partitions[k]);
      auto i = c_pool.pool().index_of(e);
      for (std::size_t j = 0; !i && j < c_pool.pool().size(); ++j)
        if (valuer.eq(e, c_pool.pool()[j]).is_one()) i = j;
      if (!i) throw InputError("value agreement: C pool has no name equal to the embedded " + e.to_string());
      position[k].push_back(*i);
    }
  }
  const unsigned cn = c_pool.pool().algebra().atom_count();
  const std::size_t csize = c_pool.pool().size();
  for (const auto& phi0 : formulas) {
    const auto phi = relativize ? fol::relativize(phi0) : phi0;
    const auto fv = phi.free_variables();
    const std::vector<std::string> vars(fv.begin(), fv.end());
    const auto ct = fol::boolean_table_bottom_up(c_pool.structure(), phi, vars);
    ++r.formulas;
    for (std::size_t k = 0; k < partitions.size(); ++k) {
      const auto bt = fol::boolean_table_bottom_up(b_pools[k]->structure(), phi, vars);
      const std::size_t bsize = b_pools[k]->pool().size();
      for (std::size_t row = 0; row < bt.size(); ++row) {
        std::size_t rest = row, crow = 0, scale = 1;
        for (std::size_t v = vars.size(); v-- > 0;) {
          crow += position[k][rest % bsize] * scale;
          rest /= bsize;
          scale *= csize;
        }
        ++r.instances;
        const auto lifted = partitions[k].embed(partitions[k].algebra().from_bits(bt[row]));
        if (lifted != ba::Element(cn, ct[crow])) {
          ++r.mismatches;
          if (r.examples.size() < 5) r.examples.push_back(fol::to_string(phi0) + " on partition " + std::to_string(k));
        }
      }
    }
  }
  return r;
}

FactorMapReport check_factor_map(const QuotientModel& qb, const QuotientModel& qc, const ba::Partition& p,
                                 const std::vector<fol::Formula>& formulas) {
  FactorMapReport r;
  const auto& bp = qb.pool();
  const auto& cb = p.parent();
  r.map.assign(qb.class_count(), 0);
  for (std::size_t c = 0; c < qb.class_count(); ++c) {
    auto k = qc.class_of_name(embed_name(bp[qb.representative(c)], p));
    if (!k) {
      r.defined = false;
      continue;
    }
    r.map[c] = *k;
  }
  if (!r.defined) return r;

  for (std::size_t i = 0; i < bp.size(); ++i) {
    ++r.instances;
    auto k = qc.class_of_name(embed_name(bp[i], p));
    if (!k || *k != r.map[qb.class_of(i)]) r.well_defined = false;
  }
  for (std::size_t c = 0; c < qb.class_count(); ++c) {
    if (qb.vcheck(c) != qc.vcheck(r.map[c])) r.preserves_ground = false;
    for (std::size_t d = 0; d < qb.class_count(); ++d) {
      ++r.instances;
      if (c != d && r.map[c] == r.map[d]) r.injective = false;
      if (qb.in(c, d) != qc.in(r.map[c], r.map[d])) r.preserves_membership = false;
    }
  }
  for (std::size_t ci : bp.check_indices()) {
    // The check name's HF set, recovered from the B pool.
    auto x = names::as_check(bp[ci]);
    if (!x) continue;
    auto jb = qb.j(*x);
    auto jc = qc.j(*x);
    ++r.instances;
    if (!jb || !jc || r.map[*jb] != *jc) r.commutes_with_j = false;
  }

  // Elementarity between the ground submodels.
  const auto& gb = qb.ground_classes();
  const auto& gc = qc.ground_classes();
  std::vector<std::size_t> gmap;
  for (std::size_t c : gb) {
    auto it = std::find(gc.begin(), gc.end(), r.map[c]);
    if (it == gc.end()) {
      r.preserves_ground = false;
      gmap.push_back(0);
    } else {
      gmap.push_back(static_cast<std::size_t>(it - gc.begin()));
    }
  }
  if (r.preserves_ground) {
    for (const auto& phi : formulas) {
      const auto fv = phi.free_variables();
      const std::vector<std::string> vars(fv.begin(), fv.end());
      const auto tb = fol::holds_table(qb.ground_structure(), phi, vars);
      const auto tc = fol::holds_table(qc.ground_structure(), phi, vars);
      for (std::size_t row = 0; row < tb.size(); ++row) {
        std::size_t rest = row, crow = 0, scale = 1;
        for (std::size_t v = vars.size(); v-- > 0;) {
          crow += gmap[rest % gb.size()] * scale;
          rest /= gb.size();
          scale *= gc.size();
        }
        ++r.instances;
        if ((tb[row] != 0) != (tc[crow] != 0)) r.elementary = false;
      }
    }
  }

  // k(G₀) = G ∩ j_U(B).
  std::vector<names::NameEntry> restricted;
  std::vector<names::HFSet> codes;
  for (const auto& e : p.elements()) {
    restricted.push_back({names::element_check(e, cb), e});
    codes.push_back(names::encode_element(e));
  }
  const auto g0 = names::Name::make(cb.atom_count(), std::move(restricted));
  const auto jb = names::check_name(names::HFSet::of(codes), cb);
  const auto gdot = names::generic_name(cb);
  const names::NamePool sep_pool(cb, {});
  const auto sep = names::separation_name(gdot, fol::parse("x in y", fol::Signature::set_theory()), "x", sep_pool,
                                          {{"y", jb}});
  r.generic_clause = names::bv_atomic(g0, sep, names::Atomic::Eq).is_one();
  return r;
}

}  // namespace bvm::ultra
