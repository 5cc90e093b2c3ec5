#include "bvm/ultra/ideal_suite.hpp"

#include "bvm/error.hpp"

namespace bvm::ultra {

names::Filter induced_filter(const ba::Algebra& b, const ba::Quotient& q, const names::Filter& f) {
  if (f.atom_count() != q.algebra.atom_count()) throw InputError("induced filter: filter is not on the quotient");
  std::vector<ba::Element> members;
  for (const auto& x : b.elements())
    if (f.contains(q.project(x))) members.push_back(x);
  return names::Filter::from_elements(b, members);
}

bool is_maximal_antichain_mod(const ba::Ideal& i, const std::vector<ba::Element>& a) {
  if (a.empty()) return false;
  ba::Element join(a.front().atom_count(), 0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (i.contains(a[k])) return false;
    for (std::size_t l = k + 1; l < a.size(); ++l)
      if (!i.contains(a[k] & a[l])) return false;
    join |= a[k];
  }
  return i.contains(~join);
}

namespace {

bool place(const std::vector<std::vector<ba::Element>>& candidates, std::size_t k, ba::Element used,
           std::vector<ba::Element>& chosen) {
  if (k == candidates.size()) return used.is_one();
  for (const auto& c : candidates[k]) {
    if (!c.disjoint(used)) continue;
    chosen.push_back(c);
    if (place(candidates, k + 1, used | c, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

bool extend(const ba::Ideal& i, const AntichainTree& t, std::size_t level, ba::Element meet,
            std::vector<std::size_t>& path) {
  if (level == t.size()) return true;
  const auto& prev = t[level - 1][path.back()];
  for (std::size_t k = 0; k < t[level].size(); ++k) {
    const auto& a = t[level][k];
    if (!i.leq_mod(a, prev)) continue;
    const auto m = meet & a;
    if (m.is_zero()) continue;
    path.push_back(k);
    if (extend(i, t, level + 1, m, path)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<ba::Element>> disjointify(const ba::Algebra& b, const ba::Ideal& i,
                                                    const std::vector<ba::Element>& a) {
  if (!is_maximal_antichain_mod(i, a)) throw InputError("disjointify: not a maximal antichain modulo the ideal");
  std::vector<std::vector<ba::Element>> candidates(a.size());
  for (const auto& x : b.elements())
    for (std::size_t k = 0; k < a.size(); ++k)
      if (i.equivalent(x, a[k]) && !x.is_zero()) candidates[k].push_back(x);
  std::vector<ba::Element> chosen;
  if (place(candidates, 0, b.zero(), chosen)) return chosen;
  return std::nullopt;
}

void validate_tree(const ba::Ideal& i, const AntichainTree& t) {
  for (std::size_t n = 0; n < t.size(); ++n) {
    if (!is_maximal_antichain_mod(i, t[n])) throw InputError("tree: a level is not a maximal antichain modulo I");
    if (n == 0) continue;
    for (const auto& a : t[n]) {
      bool refined = false;
      for (const auto& c : t[n - 1]) refined = refined || i.leq_mod(a, c);
      if (!refined) throw InputError("tree: a level does not refine the previous one modulo I");
    }
  }
}

std::optional<std::vector<std::size_t>> tree_path(const ba::Algebra& b, const ba::Ideal& i, const AntichainTree& t,
                                                  std::size_t start) {
  validate_tree(i, t);
  if (t.empty() || start >= t.front().size()) throw InputError("tree path: start is not in the first level");
  (void)b;
  std::vector<std::size_t> path{start};
  if (extend(i, t, 1, t.front()[start], path)) return path;
  return std::nullopt;
}

IdealSuiteReport ideal_suite(const ba::Algebra& b, const ba::Ideal& i) {
  const auto q = ba::quotient(b, i);
  IdealSuiteReport r;
  for (unsigned atom = 0; atom < q.algebra.atom_count(); ++atom) {
    ++r.quotient_ultrafilters;
    const auto f = induced_filter(b, q, names::Filter::at_atom(q.algebra, atom));
    if (!f.is_ultra()) r.induced_ultra = false;
    for (const auto& x : i.members())
      if (f.contains(x)) r.induced_avoids_ideal = false;
  }
  return r;
}

}  // namespace bvm::ultra
