#include "bvm/omega/eafunction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bvm/error.hpp"

namespace bvm::omega {

__extension__ typedef __int128 i128;

EAFunction::EAFunction(std::uint64_t threshold, std::int64_t slope, std::int64_t intercept,
                       std::vector<std::uint64_t> exceptions)
    : threshold_(threshold), slope_(slope), intercept_(intercept), exceptions_(std::move(exceptions)) {
  if (slope_ < 0) throw InputError("eafunction: slope must be nonnegative");
  if (exceptions_.size() != threshold_) throw InputError("eafunction: need one explicit value per n below the threshold");
  if (static_cast<i128>(slope_) * threshold_ + intercept_ < 0)
    throw InputError("eafunction: tail takes negative values");
}

EAFunction EAFunction::identity_minus(std::uint64_t k) {
  return EAFunction(k, 1, -static_cast<std::int64_t>(k), std::vector<std::uint64_t>(k, 0));
}

std::uint64_t EAFunction::operator()(std::uint64_t n) const {
  if (n < threshold_) return exceptions_[n];
  return static_cast<std::uint64_t>(static_cast<i128>(slope_) * n + intercept_);
}

EAFunction EAFunction::successor() const {
  auto exc = exceptions_;
  for (auto& v : exc) ++v;
  return EAFunction(threshold_, slope_, intercept_ + 1, std::move(exc));
}

std::string EAFunction::to_string() const {
  std::ostringstream os;
  os << slope_ << "n" << (intercept_ < 0 ? "" : "+") << intercept_;
  if (threshold_ > 0) {
    os << " from " << threshold_ << ", below: [";
    for (std::size_t i = 0; i < exceptions_.size(); ++i) os << (i ? "," : "") << exceptions_[i];
    os << ']';
  }
  return os.str();
}

namespace {

// The set {n : pred(n)}, where past both thresholds pred depends only on the
// sign of d(n) = da·n + db, which is that of da once |da·n| > |db|.
template <class Pred, class Tail>
UPSet comparison(const EAFunction& f, const EAFunction& g, Pred pred, Tail tail) {
  const std::uint64_t t = std::max(f.threshold(), g.threshold());
  const i128 da = static_cast<i128>(f.slope()) - g.slope();
  const i128 db = static_cast<i128>(f.intercept()) - g.intercept();
  i128 m = t;
  if (da != 0) m = std::max<i128>(m, (db < 0 ? -db : db) / (da < 0 ? -da : da) + 1);
  if (m > static_cast<i128>(UPSet::kMaxSize)) throw SizeError("eafunction: comparison crosses over too late");
  std::vector<std::uint64_t> prefix;
  for (std::uint64_t n = 0; n < static_cast<std::uint64_t>(m); ++n)
    if (pred(f(n), g(n))) prefix.push_back(n);
  const bool eventually = tail(da, db);
  return UPSet::make(static_cast<std::uint64_t>(m), 1, eventually ? std::vector<std::uint64_t>{0} : std::vector<std::uint64_t>{},
                     prefix);
}

}  // namespace

UPSet less_set(const EAFunction& f, const EAFunction& g) {
  return comparison(
      f, g, [](std::uint64_t x, std::uint64_t y) { return x < y; },
      [](i128 da, i128 db) { return da < 0 || (da == 0 && db < 0); });
}

UPSet equal_set(const EAFunction& f, const EAFunction& g) {
  return comparison(
      f, g, [](std::uint64_t x, std::uint64_t y) { return x == y; },
      [](i128 da, i128 db) { return da == 0 && db == 0; });
}

bool ea_equiv(const EAFunction& f, const EAFunction& g) { return u_membership(equal_set(f, g)); }
bool ea_less(const EAFunction& f, const EAFunction& g) { return u_membership(less_set(f, g)); }

SymbolicUltrapower::SymbolicUltrapower(std::vector<EAFunction> functions) : functions_(std::move(functions)) {
  for (std::size_t i = 0; i < functions_.size(); ++i) {
    std::size_t c = 0;
    while (c < reps_.size() && !ea_equiv(functions_[i], functions_[reps_[c]])) ++c;
    if (c == reps_.size()) reps_.push_back(i);
    class_of_.push_back(c);
  }
}

std::vector<std::size_t> SymbolicUltrapower::sorted() const {
  std::vector<std::size_t> order(reps_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return less(a, b); });
  return order;
}

SymbolicUltrapower::OrderReport SymbolicUltrapower::verify_order() const {
  OrderReport r;
  const std::size_t n = reps_.size();
  for (std::size_t c = 0; c < n; ++c) {
    if (less(c, c)) r.irreflexive = false;
    for (std::size_t d = 0; d < n; ++d) {
      const int count = (less(c, d) ? 1 : 0) + (less(d, c) ? 1 : 0) +
                        (ea_equiv(representative(c), representative(d)) ? 1 : 0);
      if (count != 1) r.total = false;
      for (std::size_t e = 0; e < n; ++e)
        if (less(c, d) && less(d, e) && !less(c, e)) r.transitive = false;
    }
  }
  return r;
}

}  // namespace bvm::omega
