#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bvm/omega/eafunction.hpp"
#include "bvm/omega/upset.hpp"

namespace bvm::omega {

// U misses the singleton antichain {{n}}. The structural half: a singleton is
// finite, finite sets have an empty eventual pattern, so U rejects it. The
// sampled half runs the decider on {n} for n < samples and also checks that
// the sampled singletons are pairwise disjoint and cover [0, samples).
struct MissedAntichain {
  bool finite_sets_rejected = false;
  std::uint64_t sampled = 0;
  bool sampled_rejected = true;
  bool sampled_disjoint_cover = true;
  bool ok() const { return finite_sets_rejected && sampled_rejected && sampled_disjoint_cover; }
};

// The tails a_n = {k >= n}: every a_n in U, a_{n+1} below a_n, and n is not in
// a_{n+1}, so no k lies in every a_n. Finite meets stay nonzero.
struct ZeroMeetChain {
  std::uint64_t length = 0;
  bool all_in_u = true;
  bool descending = true;
  bool schema_meet_zero = true;
  bool finite_meets_nonzero = true;
  bool gap_example = false;  // a_5 minus a_7 is {5,6} and lies outside U
  bool ok() const { return all_in_u && descending && schema_meet_zero && finite_meets_nonzero && gap_example; }
};

// The descent b_n = a_n from b_0 = 1: successive differences are the
// singletons {n}, so the difference antichain is the missed schema.
struct CanonicalDescent {
  std::uint64_t length = 0;
  bool starts_at_one = false;
  bool inside_u = true;
  bool differences_are_singletons = true;
  bool ok() const { return starts_at_one && inside_u && differences_are_singletons; }
};

// Sampled finite UP partitions of the index set: U picks exactly one piece.
struct FinitePartitionsMet {
  std::uint64_t sampled = 0;
  bool all_partitions = true;
  bool exactly_one_piece = true;
  bool ok() const { return all_partitions && exactly_one_piece; }
};

struct WitnessSuite {
  MissedAntichain missed;
  ZeroMeetChain chain;
  CanonicalDescent descent;
  FinitePartitionsMet partitions;
  // Order types of descents from 1 through U with meet 0. A finite descent
  // would put its last term, 0, into U; the canonical descent has type omega.
  std::vector<std::string> spectrum;
  std::string genericity;
  bool ok() const { return missed.ok() && chain.ok() && descent.ok() && partitions.ok() && spectrum == std::vector<std::string>{"omega"}; }
};

WitnessSuite witness_suite(std::uint64_t samples, std::uint64_t seed);

// A random UPSet with threshold below 24 and period at most 12. With
// force_u the eventual pattern contains residue 0, so the result lies in U.
UPSet random_upset(std::mt19937_64& rng, bool force_u = false);

struct IllfoundednessWitness {
  std::vector<EAFunction> chain;  // id, id-1, ..., id-k
  bool strictly_descending = true;
  bool above_standard = true;       // every link above j(m) for m <= m_bound
  bool j_order_preserving = true;   // on 0..m_bound
  bool id_not_standard = true;      // [id] differs from every j(m), m <= m_bound
  bool above_by_schema = true;      // {n : m < n - k} is cofinite for every m
  std::uint64_t m_bound = 0;
  bool ok() const {
    return strictly_descending && above_standard && j_order_preserving && id_not_standard && above_by_schema;
  }
};

IllfoundednessWitness illfoundedness_witness(std::uint64_t depth, std::uint64_t m_bound);

// The strict upper triangle {(i,j) : i < j} of the index square.
class Triangle {
 public:
  bool contains(std::uint64_t i, std::uint64_t j) const { return i < j; }
  // A point of (b x c) inside the triangle, if any.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> meet_point(const UPSet& b, const UPSet& c) const;
  // A point of (b x c) outside the triangle, if any.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> complement_point(const UPSet& b, const UPSet& c) const;
};

struct RectangleDemo {
  std::uint64_t samples = 0;
  bool all_sides_in_u = true;
  bool all_sides_infinite = true;
  bool meets_triangle = true;
  bool meets_complement = true;
  bool example_points = false;  // (2,4) and (4,2) in evens x evens on each side
  std::vector<std::pair<std::uint64_t, std::uint64_t>> first_inside, first_outside;  // for the first few samples
  bool ok() const { return all_sides_in_u && all_sides_infinite && meets_triangle && meets_complement && example_points; }
};

RectangleDemo rectangle_failure_demo(std::uint64_t samples, std::uint64_t seed);

}  // namespace bvm::omega
