#include "bvm/names/hfset.hpp"

#include <algorithm>

#include "bvm/error.hpp"

namespace bvm::names {

namespace {

std::size_t mix_hash(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

HFSet::HFSet() {
  static const auto empty_rep = std::make_shared<const Rep>(Rep{{}, 0, mix_hash(0x51ed270b27d1c4a3ULL, 0)});
  rep_ = empty_rep;
}

HFSet HFSet::of(std::vector<HFSet> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) return HFSet();
  Rep r;
  r.hash = 0x51ed270b27d1c4a3ULL;
  for (const auto& m : members) {
    r.rank = std::max(r.rank, m.rank() + 1);
    r.hash = mix_hash(r.hash, m.hash());
  }
  r.hash = mix_hash(r.hash, members.size());
  r.members = std::move(members);
  return HFSet(std::make_shared<const Rep>(std::move(r)));
}

HFSet HFSet::pair(const HFSet& a, const HFSet& b) { return of({singleton(a), of({a, b})}); }

HFSet HFSet::von_neumann(unsigned n) {
  std::vector<HFSet> members;
  for (unsigned i = 0; i < n; ++i) members.push_back(of(members));
  return of(members);
}

bool HFSet::contains(const HFSet& x) const {
  return std::binary_search(members().begin(), members().end(), x);
}

bool HFSet::subset_of(const HFSet& x) const {
  return std::all_of(members().begin(), members().end(), [&](const HFSet& m) { return x.contains(m); });
}

std::string HFSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i > 0) out += ",";
    out += members()[i].to_string();
  }
  return out + "}";
}

bool operator==(const HFSet& a, const HFSet& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.rep_->hash != b.rep_->hash || a.rep_->rank != b.rep_->rank || a.size() != b.size()) return false;
  return a.members() == b.members();
}

std::strong_ordering operator<=>(const HFSet& a, const HFSet& b) {
  if (a.rep_ == b.rep_) return std::strong_ordering::equal;
  if (auto c = a.rank() <=> b.rank(); c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (auto c = a.members()[i] <=> b.members()[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::vector<HFSet> hf_universe(unsigned max_rank) {
  if (max_rank > 4) throw SizeError("hf_universe: rank cap above 4 is not enumerable");
  std::vector<HFSet> level{HFSet()};
  for (unsigned r = 1; r <= max_rank; ++r) level = power_set(HFSet::of(level)).members();
  std::sort(level.begin(), level.end());
  return level;
}

HFSet encode_element(ba::Element e) {
  std::vector<HFSet> members;
  for (unsigned i : e.atoms()) members.push_back(HFSet::von_neumann(i));
  return HFSet::of(std::move(members));
}

HFSet power_set(const HFSet& x) {
  if (x.size() > 16) throw SizeError("power_set: more than 16 members");
  std::vector<HFSet> subsets;
  const std::size_t limit = std::size_t{1} << x.size();
  for (std::size_t mask = 0; mask < limit; ++mask) {
    std::vector<HFSet> pick;
    for (std::size_t i = 0; i < x.size(); ++i)
      if ((mask >> i) & 1U) pick.push_back(x.members()[i]);
    subsets.push_back(HFSet::of(std::move(pick)));
  }
  return HFSet::of(std::move(subsets));
}

}  // namespace bvm::names
