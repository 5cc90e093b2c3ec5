#include "bvm/omega/witnesses.hpp"

#include "bvm/error.hpp"

namespace bvm::omega {

UPSet random_upset(std::mt19937_64& rng, bool force_u) {
  std::uniform_int_distribution<std::uint64_t> threshold(0, 23), period(1, 12), coin(0, 1);
  const std::uint64_t n = threshold(rng), p = period(rng);
  std::vector<std::uint64_t> pattern, prefix;
  for (std::uint64_t r = 0; r < p; ++r)
    if ((force_u && r == 0) || coin(rng)) pattern.push_back(r);
  for (std::uint64_t k = 0; k < n; ++k)
    if (coin(rng)) prefix.push_back(k);
  return UPSet::make(n, p, pattern, prefix);
}

namespace {

MissedAntichain missed_antichain(std::uint64_t samples) {
  MissedAntichain m;
  // Any finite set has the all-false eventual pattern, which never holds residue 0.
  m.finite_sets_rejected = UPSet::finite({0, 1, 2}).pattern().empty() && !u_membership(UPSet());
  m.sampled = samples;
  UPSet cover;
  for (std::uint64_t n = 0; n < samples; ++n) {
    const UPSet s = UPSet::singleton(n);
    if (u_membership(s) || !s.is_finite()) m.sampled_rejected = false;
    if (!(cover & s).empty()) m.sampled_disjoint_cover = false;
    cover = cover | s;
  }
  if (!(~cover == UPSet::tail(samples)))
    m.sampled_disjoint_cover = false;
  return m;
}

ZeroMeetChain zero_meet_chain(std::uint64_t length) {
  ZeroMeetChain c;
  c.length = length;
  UPSet running = UPSet::all();
  for (std::uint64_t n = 0; n < length; ++n) {
    const UPSet a = UPSet::tail(n), next = UPSet::tail(n + 1);
    if (!u_membership(a)) c.all_in_u = false;
    if (!next.subset_of(a)) c.descending = false;
    // n drops out at step n + 1 and never returns, so nothing survives every step.
    if (next.contains(n) || !(a - next == UPSet::singleton(n))) c.schema_meet_zero = false;
    running = running & a;
    if (running.empty() || !(running == a)) c.finite_meets_nonzero = false;
  }
  const UPSet gap = UPSet::tail(5) & ~UPSet::tail(7);
  c.gap_example = gap == UPSet::finite({5, 6}) && !u_membership(gap);
  return c;
}

CanonicalDescent canonical_descent(std::uint64_t length) {
  CanonicalDescent d;
  d.length = length;
  d.starts_at_one = UPSet::tail(0) == UPSet::all();
  for (std::uint64_t n = 0; n < length; ++n) {
    if (!u_membership(UPSet::tail(n))) d.inside_u = false;
    if (!(UPSet::tail(n) - UPSet::tail(n + 1) == UPSet::singleton(n))) d.differences_are_singletons = false;
  }
  return d;
}

FinitePartitionsMet finite_partitions(std::uint64_t samples, std::mt19937_64& rng) {
  FinitePartitionsMet f;
  f.sampled = samples;
  for (std::uint64_t s = 0; s < samples; ++s) {
    // Split by a random colouring of residues and of a finite prefix.
    const std::uint64_t pieces = std::uniform_int_distribution<std::uint64_t>(1, 5)(rng);
    const std::uint64_t p = std::uniform_int_distribution<std::uint64_t>(1, 12)(rng);
    const std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(0, 15)(rng);
    std::uniform_int_distribution<std::uint64_t> colour(0, pieces - 1);
    std::vector<std::vector<std::uint64_t>> pats(pieces), pres(pieces);
    for (std::uint64_t r = 0; r < p; ++r) pats[colour(rng)].push_back(r);
    for (std::uint64_t k = 0; k < n; ++k) pres[colour(rng)].push_back(k);
    std::vector<UPSet> part;
    for (std::uint64_t i = 0; i < pieces; ++i) part.push_back(UPSet::make(n, p, pats[i], pres[i]));
    UPSet join;
    std::uint64_t in_u = 0;
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (std::size_t j = i + 1; j < part.size(); ++j)
        if (!(part[i] & part[j]).empty()) f.all_partitions = false;
      join = join | part[i];
      if (u_membership(part[i])) ++in_u;
    }
    if (!(join == UPSet::all())) f.all_partitions = false;
    if (in_u != 1) f.exactly_one_piece = false;
  }
  return f;
}

}  // namespace

WitnessSuite witness_suite(std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  WitnessSuite w;
  w.missed = missed_antichain(samples);
  w.chain = zero_meet_chain(samples);
  w.descent = canonical_descent(samples);
  w.partitions = finite_partitions(samples, rng);
  const bool finite_descent_impossible = !u_membership(UPSet());
  if (finite_descent_impossible && w.descent.ok()) w.spectrum = {"omega"};
  w.genericity = "meets every sampled finite partition, misses the singleton antichain: degree aleph_0";
  return w;
}

IllfoundednessWitness illfoundedness_witness(std::uint64_t depth, std::uint64_t m_bound) {
  if (depth < 1) throw InputError("illfoundedness_witness: depth must be at least 1");
  IllfoundednessWitness w;
  w.m_bound = m_bound;
  for (std::uint64_t k = 0; k <= depth; ++k) w.chain.push_back(EAFunction::identity_minus(k));
  for (std::uint64_t k = 0; k + 1 < w.chain.size(); ++k)
    if (!ea_less(w.chain[k + 1], w.chain[k]) || ea_less(w.chain[k], w.chain[k + 1])) w.strictly_descending = false;
  for (std::uint64_t k = 0; k < w.chain.size(); ++k) {
    for (std::uint64_t m = 0; m <= m_bound; ++m)
      if (!ea_less(j(m), w.chain[k])) w.above_standard = false;
    // id - k is eventually n - k with slope 1 > 0 = slope of j(m): the set
    // {n : m < n - k} is cofinite whatever m is.
    if (w.chain[k].slope() <= 0) w.above_by_schema = false;
  }
  for (std::uint64_t m = 0; m < m_bound; ++m)
    if (!ea_less(j(m), j(m + 1))) w.j_order_preserving = false;
  for (std::uint64_t m = 0; m <= m_bound; ++m)
    if (ea_equiv(EAFunction::identity(), j(m)) || !equal_set(EAFunction::identity(), j(m)).is_finite())
      w.id_not_standard = false;
  return w;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> Triangle::meet_point(const UPSet& b, const UPSet& c) const {
  const auto i = b.next(0);
  if (!i) return std::nullopt;
  const auto jj = c.next(*i + 1);
  if (!jj) return std::nullopt;
  return std::make_pair(*i, *jj);
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> Triangle::complement_point(const UPSet& b, const UPSet& c) const {
  const auto jj = c.next(0);
  if (!jj) return std::nullopt;
  const auto i = b.next(*jj);
  if (!i) return std::nullopt;
  return std::make_pair(*i, *jj);
}

RectangleDemo rectangle_failure_demo(std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RectangleDemo d;
  d.samples = samples;
  const Triangle x;
  const UPSet evens = UPSet::residues(2, {0});
  d.example_points = evens.contains(2) && evens.contains(4) && x.contains(2, 4) && !x.contains(4, 2) &&
                     x.meet_point(evens, evens).has_value() && x.complement_point(evens, evens).has_value();
  for (std::uint64_t s = 0; s < samples; ++s) {
    const UPSet b = random_upset(rng, true), c = random_upset(rng, true);
    if (!u_membership(b) || !u_membership(c)) d.all_sides_in_u = false;
    if (b.is_finite() || c.is_finite()) d.all_sides_infinite = false;
    const auto in = x.meet_point(b, c), out = x.complement_point(b, c);
    if (!in || !b.contains(in->first) || !c.contains(in->second) || !x.contains(in->first, in->second))
      d.meets_triangle = false;
    if (!out || !b.contains(out->first) || !c.contains(out->second) || x.contains(out->first, out->second))
      d.meets_complement = false;
    if (s < 3 && in && out) {
      d.first_inside.push_back(*in);
      d.first_outside.push_back(*out);
    }
  }
  return d;
}

}  // namespace bvm::omega
