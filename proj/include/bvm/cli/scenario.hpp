#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bvm/ba/algebra.hpp"
#include "bvm/ba/antichain.hpp"
#include "bvm/ba/ideal.hpp"
#include "bvm/ba/poset.hpp"
#include "bvm/fol/formula.hpp"
#include "bvm/names/hfset.hpp"
#include "bvm/names/name.hpp"
#include "json.hpp"

namespace bvm::cli {

inline constexpr const char* kScenarioSchema = "bvm-scenario/1";
inline constexpr const char* kReportSchema = "bvm-report/1";

// A hand-built B-valued structure over a custom signature, run through the law checker.
struct StructureSpec {
  std::string label;
  nlohmann::json source;
};

struct PosetSpec {
  ba::Poset poset;
  std::optional<std::vector<std::size_t>> filter;  // generators of a filter to diagnose
};

struct Scenario {
  std::optional<PosetSpec> poset;
  ba::Algebra algebra{1};
  std::optional<unsigned> ultrafilter_atom;  // nullopt: every ultrafilter
  std::optional<ba::Ideal> ideal;
  std::string pool_kind = "standard";
  unsigned pool_rank = 1;
  std::vector<std::string> formula_sources;
  std::vector<fol::Formula> formulas;
  std::map<std::string, names::Name> assignment;
  std::vector<ba::Antichain> antichains;
  std::vector<StructureSpec> structures;
};

// Command-line overrides and sampling controls.
struct Options {
  std::string format = "json";
  unsigned max_atoms = ba::Algebra::kDefaultMaxAtoms;
  std::optional<unsigned> pool_rank;
  std::optional<unsigned> depth;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 1;
};

// HF sets in JSON: a natural n is the von Neumann numeral, an array is the set of its members.
names::HFSet hf_from_json(const nlohmann::json& j);
nlohmann::json hf_to_json(const names::HFSet& x);

// Throws InputError on malformed documents and SizeError when an algebra
// exceeds max_atoms.
Scenario parse_scenario(const nlohmann::json& doc, unsigned max_atoms = ba::Algebra::kDefaultMaxAtoms);
Scenario load_scenario(const std::string& path, unsigned max_atoms = ba::Algebra::kDefaultMaxAtoms);

}  // namespace bvm::cli
