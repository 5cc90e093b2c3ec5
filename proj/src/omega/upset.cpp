#include "bvm/omega/upset.hpp"

#include <numeric>
#include <sstream>

#include "bvm/error.hpp"

namespace bvm::omega {

UPSet::UPSet(std::uint64_t threshold, std::vector<bool> pattern, std::vector<bool> prefix)
    : threshold_(threshold), pattern_(std::move(pattern)), prefix_(std::move(prefix)) {
  normalize();
}

UPSet UPSet::make(std::uint64_t threshold, std::uint64_t period, const std::vector<std::uint64_t>& pattern,
                  const std::vector<std::uint64_t>& prefix) {
  if (period == 0) throw InputError("upset: period must be at least 1");
  if (period > kMaxSize || threshold > kMaxSize) throw SizeError("upset: period or threshold too large");
  std::vector<bool> pat(period, false), pre(threshold, false);
  for (auto r : pattern) {
    if (r >= period) throw InputError("upset: pattern residue out of range");
    pat[r] = true;
  }
  for (auto n : prefix) {
    if (n >= threshold) throw InputError("upset: prefix member not below the threshold");
    pre[n] = true;
  }
  return UPSet(threshold, std::move(pat), std::move(pre));
}

UPSet UPSet::finite(const std::vector<std::uint64_t>& members) {
  std::uint64_t n = 0;
  for (auto m : members) n = std::max(n, m + 1);
  return make(n, 1, {}, members);
}

UPSet UPSet::tail(std::uint64_t n) {
  std::vector<std::uint64_t> prefix;
  return make(n, 1, {0}, prefix);
}

UPSet UPSet::residues(std::uint64_t period, const std::vector<std::uint64_t>& residues) {
  return make(0, period, residues);
}

void UPSet::normalize() {
  const std::uint64_t p = pattern_.size();
  for (std::uint64_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool periodic = true;
    for (std::uint64_t r = 0; r < p && periodic; ++r) periodic = pattern_[r] == pattern_[r % d];
    if (periodic) {
      pattern_.resize(d);
      break;
    }
  }
  while (threshold_ > 0 && prefix_[threshold_ - 1] == pattern_[(threshold_ - 1) % pattern_.size()]) --threshold_;
  prefix_.resize(threshold_);
}

std::vector<std::uint64_t> UPSet::pattern() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < pattern_.size(); ++r)
    if (pattern_[r]) out.push_back(r);
  return out;
}

std::vector<std::uint64_t> UPSet::prefix() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 0; n < threshold_; ++n)
    if (prefix_[n]) out.push_back(n);
  return out;
}

bool UPSet::contains(std::uint64_t n) const { return bit(n); }

bool UPSet::is_finite() const {
  for (bool b : pattern_)
    if (b) return false;
  return true;
}

bool UPSet::is_cofinite() const {
  for (bool b : pattern_)
    if (!b) return false;
  return true;
}

bool UPSet::empty() const { return is_finite() && threshold_ == 0; }

std::optional<std::uint64_t> UPSet::next(std::uint64_t from) const {
  for (std::uint64_t n = from; n < threshold_; ++n)
    if (prefix_[n]) return n;
  const std::uint64_t start = std::max(from, threshold_);
  for (std::uint64_t k = 0; k < pattern_.size(); ++k)
    if (pattern_[(start + k) % pattern_.size()]) return start + k;
  return std::nullopt;
}

template <class Op>
UPSet UPSet::combine(const UPSet& o, Op op) const {
  const std::uint64_t p = std::lcm(pattern_.size(), o.pattern_.size());
  if (p > kMaxSize) throw SizeError("upset: combined period too large");
  const std::uint64_t n = std::max(threshold_, o.threshold_);
  std::vector<bool> pat(p), pre(n);
  // Residue r stands for the members n' ≥ n with n' ≡ r; both tails are periodic there.
  for (std::uint64_t r = 0; r < p; ++r) {
    const std::uint64_t rep = n + ((r + p - n % p) % p);
    pat[r] = op(bit(rep), o.bit(rep));
  }
  for (std::uint64_t k = 0; k < n; ++k) pre[k] = op(bit(k), o.bit(k));
  return UPSet(n, std::move(pat), std::move(pre));
}

UPSet UPSet::operator&(const UPSet& o) const {
  return combine(o, [](bool a, bool b) { return a && b; });
}

UPSet UPSet::operator|(const UPSet& o) const {
  return combine(o, [](bool a, bool b) { return a || b; });
}

UPSet UPSet::operator~() const {
  std::vector<bool> pat(pattern_.size()), pre(threshold_);
  for (std::size_t r = 0; r < pat.size(); ++r) pat[r] = !pattern_[r];
  for (std::size_t k = 0; k < pre.size(); ++k) pre[k] = !prefix_[k];
  return UPSet(threshold_, std::move(pat), std::move(pre));
}

std::string UPSet::to_string() const {
  std::ostringstream os;
  auto list = [&](const std::vector<std::uint64_t>& xs) {
    os << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << ']';
  };
  os << "{N=" << threshold_ << ", p=" << pattern_.size() << ", pattern=";
  list(pattern());
  os << ", prefix=";
  list(prefix());
  os << '}';
  return os.str();
}

bool u_membership(const UPSet& s) {
  const auto pat = s.pattern();
  return !pat.empty() && pat.front() == 0;
}

}  // namespace bvm::omega
