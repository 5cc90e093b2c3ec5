#include "bvm/ultra/descent.hpp"

#include <algorithm>

#include "bvm/error.hpp"
#include "bvm/ultra/direct_limit.hpp"

namespace bvm::ultra {

DescentCheck verify_descent(const Ultrafilter& u, const std::vector<ba::Element>& terms) {
  DescentCheck r;
  if (terms.empty()) return r;
  r.starts_at_one = terms.front().is_one();
  r.inside_u = std::all_of(terms.begin(), terms.end(), [&](const ba::Element& e) { return u.contains(e); });
  r.descending = true;
  r.strict = true;
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    if (!terms[i + 1].leq(terms[i])) r.descending = false;
    if (terms[i + 1] == terms[i]) r.strict = false;
  }
  ba::Element meet = terms.front();
  for (const auto& t : terms) meet &= t;
  r.meet_zero = meet.is_zero();
  ba::Element join(meet.atom_count(), 0);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto next = i + 1 < terms.size() ? terms[i + 1] : meet;
    r.differences.push_back(terms[i] - next);
    join |= r.differences.back();
  }
  r.differences_maximal = r.descending && join.is_one();
  return r;
}

DescentSpectrum finite_descent_spectrum(const ba::Algebra& b, const Ultrafilter& u) {
  DescentSpectrum r;
  r.meet_of_u = b.one();
  for (const auto& e : b.elements())
    if (u.contains(e)) r.meet_of_u &= e;
  if (r.meet_of_u.is_zero()) throw InputError("descent spectrum: U has meet 0, which a finite ultrafilter cannot");
  r.reason = "every term lies above the meet of U, which is nonzero";
  return r;
}

RelativeGenericityReport relative_genericity(const Ultrafilter& u, const ba::Antichain& a,
                                             const std::vector<ba::Antichain>& family) {
  RelativeGenericityReport r;
  for (const auto& c : family) {
    if (!c.refines(a)) throw InputError("relative genericity: antichain does not refine A");
    RelativeMeet m{c, false, std::vector<std::size_t>(a.size(), c.size())};
    for (std::size_t k = 0; k < c.size(); ++k) {
      const std::size_t above = *a.index_above(c[k]);
      if (m.choice[above] == c.size() || u.contains(c[k])) m.choice[above] = k;
    }
    ba::Element join(a.atom_count(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (m.choice[i] < c.size()) join |= c[m.choice[i]];
    m.met = u.contains(join);
    r.generic_relative = r.generic_relative && m.met;
    r.meets.push_back(std::move(m));
  }
  return r;
}

ClassicalReport classical_iff_check(const ba::Algebra& b, const Ultrafilter& u, const ba::Antichain& a,
                                    const std::vector<ba::Antichain>& family,
                                    const std::vector<names::HFSet>& fragment) {
  ClassicalReport r;
  r.generic_relative = relative_genericity(u, a, family).generic_relative;
  std::vector<ba::Antichain> index = family;
  index.push_back(a);
  const DirectLimitSystem s(b, u, fragment, index);
  const std::size_t ai = *s.factor_index(a);
  const auto& fa = s.factors()[ai];
  r.connecting_maps_onto = true;
  for (const auto& c : family) {
    const std::size_t ci = *s.factor_index(c);
    std::vector<char> hit(s.factors()[ci].class_count(), 0);
    for (std::size_t x = 0; x < fa.class_count(); ++x) hit[*s.connect(ai, ci, x)] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) r.connecting_maps_onto = false;
  }
  std::vector<char> hit(s.limit().class_count(), 0);
  bool injective = true;
  for (std::size_t x = 0; x < fa.class_count(); ++x) {
    auto& h = hit[s.to_limit(ai, x)];
    if (h) injective = false;
    h = 1;
  }
  r.limit_is_factor = injective && std::find(hit.begin(), hit.end(), 0) == hit.end();
  return r;
}

}  // namespace bvm::ultra
