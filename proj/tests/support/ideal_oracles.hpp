#pragma once

// Brute-force searches for the ideal suite: every tuple of representatives,
// every index sequence through a tree.

#include <vector>

#include "bvm/ba/algebra.hpp"
#include "bvm/ba/ideal.hpp"
#include "bvm/ultra/ideal_suite.hpp"

namespace oracle {

// Row of a row-major table over `size` values, vars[0] most significant.
inline std::vector<std::size_t> unrank_row(std::size_t row, std::size_t vars, std::size_t size) {
  std::vector<std::size_t> out(vars);
  for (std::size_t k = vars; k-- > 0;) {
    out[k] = row % size;
    row /= size;
  }
  return out;
}

inline bool tuple_disjointifies(const bvm::ba::Ideal& i, const std::vector<bvm::ba::Element>& a, const std::vector<bvm::ba::Element>& b) {
  bvm::ba::Bits used = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (b[k].is_zero() || !i.contains(bvm::ba::Element(a[k].atom_count(), a[k].bits() ^ b[k].bits()))) return false;
    if ((used & b[k].bits()) != 0) return false;
    used |= b[k].bits();
  }
  return used == bvm::ba::full_mask(a.front().atom_count());
}

// Every tuple of representatives.
inline bool disjointify_exists(const bvm::ba::Algebra& b, const bvm::ba::Ideal& i, const std::vector<bvm::ba::Element>& a) {
  const std::size_t m = std::size_t{1} << b.atom_count();
  std::size_t total = 1;
  for (std::size_t k = 0; k < a.size(); ++k) total *= m;
  for (std::size_t row = 0; row < total; ++row) {
    const auto idx = unrank_row(row, a.size(), m);
    std::vector<bvm::ba::Element> t;
    for (std::size_t k : idx) t.push_back(b.from_bits(k));
    if (tuple_disjointifies(i, a, t)) return true;
  }
  return false;
}

// Every index sequence through the tree.
inline bool path_exists(const bvm::ba::Ideal& i, const bvm::ultra::AntichainTree& t, std::size_t start) {
  std::size_t total = 1;
  for (std::size_t n = 1; n < t.size(); ++n) total *= t[n].size();
  for (std::size_t row = 0; row < total; ++row) {
    std::size_t rest = row;
    std::vector<bvm::ba::Element> seq{t[0][start]};
    for (std::size_t n = 1; n < t.size(); ++n) {
      seq.push_back(t[n][rest % t[n].size()]);
      rest /= t[n].size();
    }
    bvm::ba::Bits meet = seq[0].bits();
    bool ok = true;
    for (std::size_t n = 1; n < seq.size(); ++n) {
      ok = ok && i.contains(bvm::ba::Element(seq[n].atom_count(), seq[n].bits() & ~seq[n - 1].bits()));
      meet &= seq[n].bits();
    }
    if (ok && meet != 0) return true;
  }
  return false;
}

}  // namespace oracle
