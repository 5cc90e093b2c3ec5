#include "bvm/cli/scenario.hpp"

#include <fstream>
#include <sstream>

#include "bvm/error.hpp"
#include "bvm/names/constructions.hpp"

namespace bvm::cli {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(where + ": missing field '" + key + "'");
  return obj.at(key);
}

unsigned as_unsigned(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(what + " must be a nonnegative integer");
  return j.get<unsigned>();
}

std::vector<unsigned> atom_list(const json& j, const ba::Algebra& b, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array of atom indices");
  std::vector<unsigned> atoms;
  for (const auto& a : j) {
    const unsigned i = as_unsigned(a, what + " entry");
    if (i >= b.atom_count()) throw InputError(what + ": atom " + std::to_string(i) + " out of range");
    atoms.push_back(i);
  }
  return atoms;
}

ba::Element element_of(const json& j, const ba::Algebra& b, const std::string& what) {
  return b.element(atom_list(j, b, what));
}

ba::Poset poset_of(const json& j) {
  const auto& nodes = require(j, "nodes", "poset");
  if (!nodes.is_array()) throw InputError("poset.nodes must be an array");
  std::vector<std::string> labels;
  for (const auto& n : nodes) labels.push_back(n.is_string() ? n.get<std::string>() : n.dump());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (j.contains("leq")) {
    for (const auto& p : j.at("leq")) {
      if (!p.is_array() || p.size() != 2) throw InputError("poset.leq entries must be [lower, upper]");
      auto index = [&](const json& x) -> std::size_t {
        if (x.is_string()) {
          for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == x.get<std::string>()) return i;
          throw InputError("poset.leq: unknown node " + x.dump());
        }
        const unsigned i = as_unsigned(x, "poset.leq node");
        if (i >= labels.size()) throw InputError("poset.leq: node index out of range");
        return i;
      };
      pairs.emplace_back(index(p[0]), index(p[1]));
    }
  }
  return ba::Poset(labels, pairs);
}

names::Name name_of(const json& j, const ba::Algebra& b) {
  if (!j.is_object() || j.size() != 1) throw InputError("name spec must be an object with one of check, element, generic");
  if (j.contains("check")) return names::check_name(hf_from_json(j.at("check")), b);
  if (j.contains("element")) return names::element_check(element_of(j.at("element"), b, "name element"), b);
  if (j.contains("generic")) return names::generic_name(b);
  throw InputError("unknown name spec " + j.dump());
}

}  // namespace

names::HFSet hf_from_json(const json& j) {
  if (j.is_number_integer()) {
    const unsigned n = as_unsigned(j, "HF numeral");
    if (n > 8) throw InputError("HF numeral above 8");
    return names::HFSet::von_neumann(n);
  }
  if (!j.is_array()) throw InputError("HF set must be a natural or an array of HF sets");
  std::vector<names::HFSet> members;
  for (const auto& m : j) members.push_back(hf_from_json(m));
  return names::HFSet::of(std::move(members));
}

json hf_to_json(const names::HFSet& x) {
  json out = json::array();
  for (const auto& m : x.members()) out.push_back(hf_to_json(m));
  return out;
}

Scenario parse_scenario(const json& doc, unsigned max_atoms) {
  if (!doc.is_object()) throw InputError("scenario must be a JSON object");
  if (doc.contains("schema") && doc.at("schema") != kScenarioSchema)
    throw InputError("unsupported scenario schema " + doc.at("schema").dump());
  Scenario s;
  const auto& alg = require(doc, "algebra", "scenario");
  if (alg.contains("atoms")) {
    const unsigned n = as_unsigned(alg.at("atoms"), "algebra.atoms");
    if (n == 0) throw InputError("algebra.atoms must be positive");
    if (n > max_atoms) throw SizeError("algebra has " + std::to_string(n) + " atoms, above the cap of " + std::to_string(max_atoms));
    s.algebra = ba::Algebra(n, {}, max_atoms);
  } else if (alg.contains("poset")) {
    PosetSpec p{poset_of(alg.at("poset")), std::nullopt};
    if (alg.contains("filter")) {
      std::vector<std::size_t> gens;
      for (const auto& g : alg.at("filter")) {
        const unsigned i = as_unsigned(g, "algebra.filter entry");
        if (i >= p.poset.size()) throw InputError("algebra.filter: node index out of range");
        gens.push_back(i);
      }
      p.filter = gens;
    }
    const auto ro = ba::ro_completion(p.poset);
    if (ro.algebra.atom_count() > max_atoms) throw SizeError("regular-open completion exceeds the atom cap");
    s.algebra = ro.algebra;
    s.poset = std::move(p);
  } else {
    throw InputError("algebra must give 'atoms' or 'poset'");
  }
  const ba::Algebra& b = s.algebra;

  if (doc.contains("ultrafilter")) {
    const auto& u = doc.at("ultrafilter");
    if (u.is_string() && u == "all") {
    } else {
      const unsigned a = as_unsigned(require(u, "atom", "ultrafilter"), "ultrafilter.atom");
      if (a >= b.atom_count()) throw InputError("ultrafilter.atom out of range");
      s.ultrafilter_atom = a;
    }
  }
  if (doc.contains("ideal")) {
    const auto& i = doc.at("ideal");
    if (i.contains("generator")) {
      s.ideal = ba::Ideal::principal(b, element_of(i.at("generator"), b, "ideal.generator"));
    } else if (i.contains("members")) {
      std::vector<ba::Element> ms;
      for (const auto& m : i.at("members")) ms.push_back(element_of(m, b, "ideal.members"));
      s.ideal = ba::Ideal::from_members(b, ms);
    } else {
      throw InputError("ideal must give 'generator' or 'members'");
    }
  }
  if (doc.contains("pool")) {
    const auto& p = doc.at("pool");
    if (p.contains("rank")) s.pool_rank = as_unsigned(p.at("rank"), "pool.rank");
    if (p.contains("kind")) {
      s.pool_kind = p.at("kind").get<std::string>();
      if (s.pool_kind != "standard" && s.pool_kind != "checks") throw InputError("pool.kind must be standard or checks");
    }
  }
  if (doc.contains("assignment")) {
    for (const auto& [var, spec] : doc.at("assignment").items()) s.assignment.emplace(var, name_of(spec, b));
  }
  const auto sig = fol::Signature::set_theory();
  if (doc.contains("formulas")) {
    for (const auto& f : doc.at("formulas")) {
      if (!f.is_string()) throw InputError("formulas must be strings");
      s.formula_sources.push_back(f.get<std::string>());
      s.formulas.push_back(fol::parse(s.formula_sources.back(), sig));
    }
  }
  if (doc.contains("antichains")) {
    for (const auto& a : doc.at("antichains")) {
      std::vector<ba::Element> members;
      for (const auto& m : a) members.push_back(element_of(m, b, "antichain member"));
      ba::Antichain ac(members);
      if (!ac.maximal()) throw InputError("antichain " + a.dump() + " is not a maximal antichain");
      s.antichains.push_back(std::move(ac));
    }
  }
  if (doc.contains("structures")) {
    std::size_t k = 0;
    for (const auto& st : doc.at("structures")) {
      StructureSpec spec{st.value("label", "structure" + std::to_string(k)), st};
      s.structures.push_back(std::move(spec));
      ++k;
    }
  }
  return s;
}

Scenario load_scenario(const std::string& path, unsigned max_atoms) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open scenario file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(std::string("scenario is not valid JSON: ") + e.what());
  }
  return parse_scenario(doc, max_atoms);
}

}  // namespace bvm::cli
