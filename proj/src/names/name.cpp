#include "bvm/names/name.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bvm/error.hpp"

namespace bvm::names {

namespace {

constexpr std::size_t kSeed = 0x2545f4914f6cdd1dULL;

std::size_t mix_hash(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Name::Name(unsigned atom_count) {
  if (atom_count == 0 || atom_count > ba::Algebra::kHardMaxAtoms)
    throw InputError("name: atom count out of range");
  rep_ = std::make_shared<const Rep>(Rep{atom_count, {}, 0, mix_hash(kSeed, atom_count)});
}

Name Name::make(unsigned atom_count, std::vector<NameEntry> entries) {
  if (atom_count == 0 || atom_count > ba::Algebra::kHardMaxAtoms)
    throw InputError("name: atom count out of range");
  for (const auto& e : entries)
    if (e.name.atom_count() != atom_count || e.value.atom_count() != atom_count)
      throw InputError("name: mixed-algebra entry");
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  Rep r;
  r.atom_count = atom_count;
  r.hash = mix_hash(kSeed, atom_count);
  for (const auto& e : entries) {
    r.rank = std::max(r.rank, e.name.rank() + 1);
    r.hash = mix_hash(mix_hash(r.hash, e.name.hash()), e.value.bits());
  }
  r.entries = std::move(entries);
  return Name(std::make_shared<const Rep>(std::move(r)));
}

std::vector<Name> Name::domain() const {
  std::vector<Name> out;
  for (const auto& e : entries())
    if (out.empty() || !(out.back() == e.name)) out.push_back(e.name);
  return out;
}

std::string Name::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i > 0) out += ",";
    out += "<" + entries()[i].name.to_string() + ",{";
    const auto atoms = entries()[i].value.atoms();
    for (std::size_t k = 0; k < atoms.size(); ++k) out += (k ? "," : "") + std::to_string(atoms[k]);
    out += "}>";
  }
  return out + "}";
}

bool operator==(const Name& a, const Name& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.rep_->hash != b.rep_->hash || a.rank() != b.rank() || a.size() != b.size() ||
      a.atom_count() != b.atom_count())
    return false;
  return a.entries() == b.entries();
}

std::strong_ordering operator<=>(const Name& a, const Name& b) {
  if (a.rep_ == b.rep_) return std::strong_ordering::equal;
  if (auto c = a.atom_count() <=> b.atom_count(); c != 0) return c;
  if (auto c = a.rank() <=> b.rank(); c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (auto c = a.entries()[i] <=> b.entries()[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Name check_name(const HFSet& x, const ba::Algebra& b) {
  // Memo so shared members (von Neumann naturals) are built once and share storage.
  std::map<HFSet, Name> memo;
  auto build = [&](auto& self, const HFSet& s) -> Name {
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    std::vector<NameEntry> entries;
    entries.reserve(s.size());
    for (const auto& y : s.members()) entries.push_back({self(self, y), b.one()});
    Name n = Name::make(b.atom_count(), std::move(entries));
    memo.emplace(s, n);
    return n;
  };
  return build(build, x);
}

std::vector<Name> subnames(const Name& t) {
  std::set<Name> seen;
  std::vector<Name> stack{t};
  while (!stack.empty()) {
    Name n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    for (const auto& e : n.entries()) stack.push_back(e.name);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace bvm::names
