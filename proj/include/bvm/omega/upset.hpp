#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bvm::omega {

/// An ultimately periodic subset of ℕ: below the threshold N membership is
/// read from an explicit prefix, from N on from a pattern of residues mod p.
/// Values are kept canonical (minimal period, then minimal threshold), so
/// structural equality is set equality.
class UPSet {
 public:
  /// Largest period or threshold a value may reach, operations included.
  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 20;

  UPSet() = default;  // ∅
  /// Residues must be < period and prefix members < threshold. Throws InputError otherwise,
  /// SizeError past kMaxSize.
  static UPSet make(std::uint64_t threshold, std::uint64_t period, const std::vector<std::uint64_t>& pattern,
                    const std::vector<std::uint64_t>& prefix = {});
  static UPSet all() { return make(0, 1, {0}); }
  static UPSet finite(const std::vector<std::uint64_t>& members);
  static UPSet singleton(std::uint64_t n) { return finite({n}); }
  /// {k : k ≥ n}.
  static UPSet tail(std::uint64_t n);
  /// {n : n mod p ∈ residues}.
  static UPSet residues(std::uint64_t period, const std::vector<std::uint64_t>& residues);

  std::uint64_t threshold() const { return threshold_; }
  std::uint64_t period() const { return pattern_.size(); }
  /// Residues in the eventual pattern, ascending.
  std::vector<std::uint64_t> pattern() const;
  /// Members below the threshold, ascending.
  std::vector<std::uint64_t> prefix() const;

  bool contains(std::uint64_t n) const;
  bool empty() const;
  bool is_finite() const;
  bool is_cofinite() const;
  /// Least member ≥ from, if any.
  std::optional<std::uint64_t> next(std::uint64_t from) const;

  UPSet operator&(const UPSet& o) const;
  UPSet operator|(const UPSet& o) const;
  UPSet operator~() const;
  UPSet operator-(const UPSet& o) const { return *this & ~o; }
  bool subset_of(const UPSet& o) const { return (*this - o).empty(); }

  /// "{N=.., p=.., pattern=[..], prefix=[..]}".
  std::string to_string() const;

  friend bool operator==(const UPSet&, const UPSet&) = default;

 private:
  UPSet(std::uint64_t threshold, std::vector<bool> pattern, std::vector<bool> prefix);
  void normalize();
  bool bit(std::uint64_t n) const { return n < threshold_ ? prefix_[n] : pattern_[n % pattern_.size()]; }
  template <class Op>
  UPSet combine(const UPSet& o, Op op) const;

  std::uint64_t threshold_ = 0;
  std::vector<bool> pattern_{false};
  std::vector<bool> prefix_;
};

/// The multiples ultrafilter: S ∈ U iff residue 0 lies in S's eventual
/// pattern, i.e. S eventually contains every multiple of its period. Ultra
/// and nonprincipal on the UPSet algebra; it misses the singletons.
bool u_membership(const UPSet& s);

}  // namespace bvm::omega
