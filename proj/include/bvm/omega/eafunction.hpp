#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bvm/omega/upset.hpp"

namespace bvm::omega {

/// f : ℕ → ℕ, explicit below the threshold N and a·n + b from N on (a ≥ 0).
/// A spanning function on the singleton antichain of P(ℕ).
class EAFunction {
 public:
  /// Throws InputError unless there is one exception per n < N and a·N + b ≥ 0.
  EAFunction(std::uint64_t threshold, std::int64_t slope, std::int64_t intercept,
             std::vector<std::uint64_t> exceptions = {});
  static EAFunction constant(std::uint64_t k) { return EAFunction(0, 0, static_cast<std::int64_t>(k)); }
  static EAFunction identity() { return EAFunction(0, 1, 0); }
  /// n ↦ max(n − k, 0).
  static EAFunction identity_minus(std::uint64_t k);

  std::uint64_t threshold() const { return threshold_; }
  std::int64_t slope() const { return slope_; }
  std::int64_t intercept() const { return intercept_; }
  const std::vector<std::uint64_t>& exceptions() const { return exceptions_; }
  std::uint64_t operator()(std::uint64_t n) const;
  /// Pointwise successor.
  EAFunction successor() const;

  std::string to_string() const;
  friend bool operator==(const EAFunction&, const EAFunction&) = default;

 private:
  std::uint64_t threshold_;
  std::int64_t slope_;
  std::int64_t intercept_;
  std::vector<std::uint64_t> exceptions_;
};

/// {n : f(n) < g(n)} and {n : f(n) = g(n)}. Past both thresholds the sign of
/// (a_f − a_g)·n + (b_f − b_g) is eventually constant, so each set is finite or cofinite.
UPSet less_set(const EAFunction& f, const EAFunction& g);
UPSet equal_set(const EAFunction& f, const EAFunction& g);

/// [f] = [g] and [f] < [g] in the ultrapower by the multiples ultrafilter.
bool ea_equiv(const EAFunction& f, const EAFunction& g);
bool ea_less(const EAFunction& f, const EAFunction& g);

/// The classical ultrapower of (ℕ, <, succ, 0) by the multiples ultrafilter,
/// restricted to the classes of finitely many functions.
class SymbolicUltrapower {
 public:
  explicit SymbolicUltrapower(std::vector<EAFunction> functions);

  const std::vector<EAFunction>& functions() const { return functions_; }
  std::size_t class_count() const { return reps_.size(); }
  std::size_t class_of(std::size_t i) const { return class_of_[i]; }
  const EAFunction& representative(std::size_t c) const { return functions_[reps_[c]]; }
  bool less(std::size_t c, std::size_t d) const { return ea_less(representative(c), representative(d)); }
  /// Classes in increasing order.
  std::vector<std::size_t> sorted() const;

  struct OrderReport {
    bool irreflexive = true;
    /// Exactly one of c < d, c = d, d < c.
    bool total = true;
    bool transitive = true;
    bool ok() const { return irreflexive && total && transitive; }
  };
  OrderReport verify_order() const;

 private:
  std::vector<EAFunction> functions_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> reps_;
};

/// j(k) = [c_k].
inline EAFunction j(std::uint64_t k) { return EAFunction::constant(k); }

}  // namespace bvm::omega
