#include "bvm/ba/poset.hpp"

#include <algorithm>
#include <bit>

#include "bvm/error.hpp"

namespace bvm::ba {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("p" + std::to_string(i));
  return out;
}

bool is_down_closed(const Poset& p, std::uint64_t set) {
  for (std::uint64_t s = set; s != 0; s &= s - 1) {
    auto q = static_cast<std::size_t>(std::countr_zero(s));
    if ((p.cone(q) & ~set) != 0) return false;
  }
  return true;
}

// cl(U) = {p : ↓p meets U}; int(S) = {p : ↓p ⊆ S}.
std::uint64_t interior_of_closure(const Poset& p, std::uint64_t set) {
  std::uint64_t closure = 0;
  for (std::size_t q = 0; q < p.size(); ++q)
    if ((p.cone(q) & set) != 0) closure |= std::uint64_t{1} << q;
  std::uint64_t interior = 0;
  for (std::size_t q = 0; q < p.size(); ++q)
    if ((p.cone(q) & ~closure) == 0) interior |= std::uint64_t{1} << q;
  return interior;
}

}  // namespace

Poset::Poset(std::vector<std::string> nodes, const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs)
    : nodes_(std::move(nodes)) {
  const std::size_t n = nodes_.size();
  if (n == 0) throw InputError("poset: no nodes");
  if (n > 64) throw SizeError("poset: more than 64 nodes");
  below_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) below_[i] = std::uint64_t{1} << i;
  for (auto [p, q] : leq_pairs) {
    if (p >= n || q >= n) throw InputError("poset: node index out of range");
    below_[q] |= std::uint64_t{1} << p;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t q = 0; q < n; ++q) {
      std::uint64_t acc = below_[q];
      for (std::uint64_t s = below_[q]; s != 0; s &= s - 1) acc |= below_[std::countr_zero(s)];
      if (acc != below_[q]) {
        below_[q] = acc;
        changed = true;
      }
    }
  }
  validate_antisymmetric();
}

Poset Poset::from_matrix(const std::vector<std::vector<bool>>& leq, std::vector<std::string> nodes) {
  const std::size_t n = leq.size();
  if (n == 0) throw InputError("poset: no nodes");
  if (n > 64) throw SizeError("poset: more than 64 nodes");
  Poset out;
  out.nodes_ = nodes.empty() ? default_labels(n) : std::move(nodes);
  if (out.nodes_.size() != n) throw InputError("poset: label count mismatch");
  out.below_.assign(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    if (leq[p].size() != n) throw InputError("poset: relation matrix is not square");
    for (std::size_t q = 0; q < n; ++q)
      if (leq[p][q]) out.below_[q] |= std::uint64_t{1} << p;
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (!out.leq(p, p)) throw InputError("poset: relation is not reflexive");
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        if (out.leq(p, q) && out.leq(q, r) && !out.leq(p, r)) throw InputError("poset: relation is not transitive");
  }
  out.validate_antisymmetric();
  return out;
}

void Poset::validate_antisymmetric() const {
  for (std::size_t p = 0; p < size(); ++p)
    for (std::size_t q = p + 1; q < size(); ++q)
      if (leq(p, q) && leq(q, p)) throw InputError("poset: relation is not antisymmetric");
}

std::size_t Poset::index_of(const std::string& label) const {
  auto it = std::find(nodes_.begin(), nodes_.end(), label);
  if (it == nodes_.end()) throw InputError("poset: unknown node '" + label + "'");
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::uint64_t Poset::upper(std::size_t p) const {
  std::uint64_t out = 0;
  for (std::size_t q = 0; q < size(); ++q)
    if (leq(p, q)) out |= std::uint64_t{1} << q;
  return out;
}

std::uint64_t Poset::minimal_mask() const {
  std::uint64_t out = 0;
  for (std::size_t p = 0; p < size(); ++p)
    if (below_[p] == (std::uint64_t{1} << p)) out |= std::uint64_t{1} << p;
  return out;
}

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::uint64_t s = minimal_mask(); s != 0; s &= s - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
  return out;
}

bool Poset::is_separative() const {
  for (std::size_t p = 0; p < size(); ++p) {
    for (std::size_t q = 0; q < size(); ++q) {
      if (leq(p, q)) continue;
      bool found = false;
      for (std::uint64_t s = below_[p]; s != 0 && !found; s &= s - 1)
        found = !compatible(static_cast<std::size_t>(std::countr_zero(s)), q);
      if (!found) return false;
    }
  }
  return true;
}

RoCompletion ro_completion(const Poset& p) {
  auto mins = p.minimal_elements();
  std::vector<std::string> labels;
  for (auto m : mins) labels.push_back(p.node(m));
  RoCompletion out{Algebra(static_cast<unsigned>(mins.size()), labels, Algebra::kHardMaxAtoms), {}, mins, p.is_separative()};
  for (std::size_t q = 0; q < p.size(); ++q) {
    Bits bits = 0;
    for (std::size_t i = 0; i < mins.size(); ++i)
      if (p.leq(mins[i], q)) bits |= Bits{1} << i;
    out.embed.push_back(out.algebra.from_bits(bits));
  }
  return out;
}

RoOracle ro_oracle(const Poset& p) {
  if (p.size() > 20) throw SizeError("ro_oracle: more than 20 nodes");
  std::vector<std::uint64_t> regular;
  const std::uint64_t limit = std::uint64_t{1} << p.size();
  for (std::uint64_t set = 0; set < limit; ++set)
    if (is_down_closed(p, set) && interior_of_closure(p, set) == set) regular.push_back(set);
  std::sort(regular.begin(), regular.end());
  std::vector<std::uint64_t> atoms;
  for (auto u : regular) {
    if (u == 0) continue;
    bool minimal = std::none_of(regular.begin(), regular.end(),
                                [u](std::uint64_t v) { return v != 0 && v != u && (v & ~u) == 0; });
    if (minimal) atoms.push_back(u);
  }
  const auto n_atoms = static_cast<unsigned>(atoms.size());
  if ((std::size_t{1} << n_atoms) != regular.size())
    throw InputError("ro_oracle: regular open sets do not form a finite Boolean algebra");
  return RoOracle{std::move(regular), std::move(atoms), Algebra(n_atoms, {}, Algebra::kHardMaxAtoms)};
}

RoAgreement compare_ro(const Poset& p, const RoCompletion& completion, const RoOracle& oracle) {
  RoAgreement out;
  const unsigned n = completion.algebra.atom_count();
  out.same_size = n == oracle.algebra.atom_count() && (std::size_t{1} << n) == oracle.regular_open.size();
  if (!out.same_size) return out;

  // S ↦ {q : every minimal below q is in S}
  auto to_open = [&](Bits s) {
    std::uint64_t set = 0;
    for (std::size_t q = 0; q < p.size(); ++q)
      if ((completion.embed[q].bits() & ~s) == 0) set |= std::uint64_t{1} << q;
    return set;
  };
  std::vector<std::uint64_t> image;
  for (Bits s = 0; s <= full_mask(n); ++s) image.push_back(to_open(s));
  auto sorted = image;
  std::sort(sorted.begin(), sorted.end());
  out.bijective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() && sorted == oracle.regular_open;

  out.order_preserving = true;
  for (Bits s = 0; s <= full_mask(n) && out.order_preserving; ++s)
    for (Bits t = 0; t <= full_mask(n); ++t) {
      bool sub = (s & ~t) == 0;
      bool img_sub = (image[s] & ~image[t]) == 0;
      if (sub != img_sub) {
        out.order_preserving = false;
        break;
      }
    }

  out.embedding_matches = true;
  Bits covered = 0;
  for (std::size_t q = 0; q < p.size(); ++q) {
    Element e = completion.embed[q];
    if (e.is_zero() || image[e.bits()] != interior_of_closure(p, p.cone(q))) out.embedding_matches = false;
    for (std::size_t r = 0; r < p.size(); ++r)
      if (p.leq(q, r) && !e.leq(completion.embed[r])) out.embedding_matches = false;
    covered |= e.bits();
  }
  out.dense = covered == full_mask(n);
  return out;
}

std::vector<Poset> naturally_labelled_posets(std::size_t n) {
  if (n == 0 || n > 7) throw SizeError("naturally_labelled_posets: n must be in 1..7");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) slots.emplace_back(i, j);
  std::vector<Poset> out;
  const std::uint64_t limit = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((mask >> k) & 1U) leq[slots[k].first][slots[k].second] = true;
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = a + 1; b < n && transitive; ++b)
        for (std::size_t c = b + 1; c < n && transitive; ++c)
          if (leq[a][b] && leq[b][c] && !leq[a][c]) transitive = false;
    if (transitive) out.push_back(Poset::from_matrix(leq));
  }
  return out;
}

}  // namespace bvm::ba
