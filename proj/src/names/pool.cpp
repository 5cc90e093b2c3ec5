#include "bvm/names/pool.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "bvm/ba/antichain.hpp"
#include "bvm/error.hpp"
#include "bvm/names/constructions.hpp"
#include "bvm/names/valuer.hpp"

namespace bvm::names {

std::optional<HFSet> as_check(const Name& t) {
  std::vector<HFSet> members;
  members.reserve(t.size());
  for (const auto& e : t.entries()) {
    if (!e.value.is_one()) return std::nullopt;
    auto m = as_check(e.name);
    if (!m) return std::nullopt;
    members.push_back(*m);
  }
  // Canonical entries have distinct names when all values are 1, so no collapse happens here.
  return HFSet::of(std::move(members));
}

NamePool::NamePool(const ba::Algebra& b, std::vector<Name> seed, std::size_t max_size)
    : algebra_(b), max_size_(max_size) {
  std::set<Name> all;
  std::vector<Name> stack = std::move(seed);
  while (!stack.empty()) {
    Name n = std::move(stack.back());
    stack.pop_back();
    if (n.atom_count() != b.atom_count()) throw InputError("name pool: name from a different algebra");
    if (!all.insert(n).second) continue;
    if (all.size() > max_size) throw SizeError("name pool exceeds " + std::to_string(max_size) + " names");
    for (const auto& e : n.entries()) stack.push_back(e.name);
  }
  names_.assign(all.begin(), all.end());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (auto x = as_check(names_[i])) {
      checks_.push_back(i);
      check_of_.emplace(*x, i);
    }
  }
}

NamePool::NamePool(const ba::Algebra& b, const std::vector<HFSet>& fragment, const std::vector<Name>& extra,
                   std::size_t max_size)
    : NamePool(b,
               [&] {
                 std::vector<Name> seed = extra;
                 for (const auto& x : fragment) seed.push_back(check_name(x, b));
                 return seed;
               }(),
               max_size) {}

NamePool NamePool::checks(const ba::Algebra& b, unsigned hf_rank, std::size_t max_size) {
  return NamePool(b, hf_universe(hf_rank), {}, max_size);
}

double NamePool::standard_size(unsigned atom_count, unsigned hf_rank) {
  static constexpr double kUniverseSize[] = {1, 2, 4, 16, 65536};
  if (hf_rank > 4) return HUGE_VAL;
  return std::pow(kUniverseSize[hf_rank], atom_count);
}

NamePool NamePool::standard(const ba::Algebra& b, unsigned hf_rank, std::size_t max_size) {
  const unsigned n = b.atom_count();
  if (standard_size(n, hf_rank) > static_cast<double>(max_size))
    throw SizeError("standard pool would hold " + std::to_string(standard_size(n, hf_rank)) + " names, guard is " +
                    std::to_string(max_size));
  const auto fragment = hf_universe(hf_rank);
  std::vector<Name> checks;
  for (const auto& x : fragment) checks.push_back(check_name(x, b));
  const auto atoms = ba::Antichain::atoms(b);
  std::vector<Name> seed = checks;
  // Odometer over functions atoms → fragment; constant functions are the checks themselves.
  std::vector<std::size_t> pick(n, 0);
  const std::size_t k = fragment.size();
  while (true) {
    const bool constant = std::all_of(pick.begin(), pick.end(), [&](std::size_t p) { return p == pick[0]; });
    if (!constant) {
      std::vector<Name> parts;
      for (std::size_t p : pick) parts.push_back(checks[p]);
      seed.push_back(mix(atoms.members(), parts));
    }
    std::size_t i = 0;
    while (i < n && ++pick[i] == k) pick[i++] = 0;
    if (i == n) break;
  }
  return NamePool(b, std::move(seed), max_size);
}

NamePool NamePool::with(const std::vector<Name>& more) const {
  std::vector<Name> seed = names_;
  seed.insert(seed.end(), more.begin(), more.end());
  return NamePool(algebra_, std::move(seed), max_size_);
}

std::optional<std::size_t> NamePool::index_of(const Name& t) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), t);
  if (it == names_.end() || !(*it == t)) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::optional<std::size_t> NamePool::check_index(const HFSet& x) const {
  auto it = check_of_.find(x);
  if (it == check_of_.end()) return std::nullopt;
  return it->second;
}

namespace {

fol::BValuedStructure build_structure(const NamePool& pool) {
  std::vector<std::string> labels;
  labels.reserve(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) labels.push_back("n" + std::to_string(i));
  fol::BValuedStructure s(pool.algebra(), std::move(labels), fol::Signature::set_theory());
  const std::size_t n = pool.size();
  Valuer v(pool.algebra().atom_count());
  auto& eq = s.mutable_equality_table();
  auto& in = s.mutable_relation_table(fol::kMembership);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j >= i) {
        const ba::Bits e = v.eq(pool[i], pool[j]).bits();
        eq[i * n + j] = e;
        eq[j * n + i] = e;
      }
      in[i * n + j] = v.in(pool[i], pool[j]).bits();
    }
  }
  auto& ground = s.mutable_relation_table(fol::kGroundPredicate);
  for (std::size_t i = 0; i < n; ++i) {
    ba::Bits acc = 0;
    for (std::size_t c : pool.check_indices()) acc |= eq[i * n + c];
    ground[i] = acc;
  }
  return s;
}

}  // namespace

PoolModel::PoolModel(NamePool pool) : pool_(std::move(pool)), structure_(build_structure(pool_)) {}

ba::Element PoolModel::in(std::size_t t, std::size_t s) const {
  return pool_.algebra().from_bits(structure_.relation_table(fol::kMembership)[t * pool_.size() + s]);
}

ba::Element PoolModel::eq(std::size_t t, std::size_t s) const {
  return pool_.algebra().from_bits(structure_.equality_table()[t * pool_.size() + s]);
}

ba::Element PoolModel::vcheck(std::size_t t) const {
  return pool_.algebra().from_bits(structure_.relation_table(fol::kGroundPredicate)[t]);
}

fol::Assignment PoolModel::indices(const NameAssignment& a) const {
  fol::Assignment out;
  for (const auto& [var, name] : a) {
    auto idx = pool_.index_of(name);
    if (!idx) throw InputError("name assigned to '" + var + "' is outside the pool");
    out[var] = *idx;
  }
  return out;
}

ba::Element PoolModel::value(const fol::Formula& f, const NameAssignment& a) const {
  return fol::boolean_value(structure_, f, indices(a));
}

ba::Element PoolModel::value(const fol::Formula& f, const fol::Assignment& a) const {
  return fol::boolean_value(structure_, f, a);
}

ba::Element bv_formula(const fol::Formula& f, const NameAssignment& a, const NamePool& pool) {
  return PoolModel(pool).value(f, a);
}

}  // namespace bvm::names
