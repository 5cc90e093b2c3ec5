#include "bvm/ultra/quotient_model.hpp"

#include <map>

#include "bvm/error.hpp"
#include "bvm/names/constructions.hpp"
#include "bvm/names/valuer.hpp"

namespace bvm::ultra {

namespace {

std::vector<std::string> free_list(const fol::Formula& f) {
  const auto fv = f.free_variables();
  return {fv.begin(), fv.end()};
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

std::string describe_instance(const fol::Formula& f, const std::vector<std::string>& vars,
                              const std::vector<std::size_t>& idx) {
  std::string out = fol::to_string(f) + " at";
  for (std::size_t i = 0; i < vars.size(); ++i) out += " " + vars[i] + "=n" + std::to_string(idx[i]);
  return out;
}

// Decodes row k of a row-major table with `vars` digits in base n.
void decode(std::size_t k, std::size_t n, std::vector<std::size_t>& digits) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    digits[i] = k % n;
    k /= n;
  }
}

std::size_t encode(const std::vector<std::size_t>& digits, std::size_t n) {
  std::size_t k = 0;
  for (std::size_t d : digits) k = k * n + d;
  return k;
}

void compare_plain(const QuotientModel& m, const fol::Formula& f, const std::vector<std::string>& vars,
                   const std::vector<ba::Bits>& values, LosReport& r) {
  const auto truth = fol::holds_table(m.structure(), f, vars);
  const std::size_t n = m.pool().size();
  std::vector<std::size_t> digits(vars.size()), classes(vars.size());
  const auto& u = m.ultrafilter();
  for (std::size_t k = 0; k < values.size(); ++k) {
    decode(k, n, digits);
    for (std::size_t i = 0; i < digits.size(); ++i) classes[i] = m.class_of(digits[i]);
    const bool model = truth[encode(classes, m.class_count())] != 0;
    const bool boolean = u.contains(m.pool().algebra().from_bits(values[k]));
    ++r.instances;
    if (model != boolean) {
      ++r.failures;
      if (r.examples.size() < 5) r.examples.push_back(describe_instance(f, vars, digits) + " " + u.describe());
    }
  }
}

void compare_ground(const QuotientModel& m, const fol::Formula& f, const std::vector<std::string>& vars,
                    const std::vector<ba::Bits>& values, LosReport& r) {
  const auto& ground = m.ground_classes();
  if (ground.empty()) return;
  std::vector<std::size_t> position(m.class_count(), ground.size());
  for (std::size_t i = 0; i < ground.size(); ++i) position[ground[i]] = i;
  const auto truth = fol::holds_table(m.ground_structure(), f, vars);
  const std::size_t n = m.pool().size();
  std::vector<std::size_t> digits(vars.size()), pos(vars.size());
  const auto& u = m.ultrafilter();
  for (std::size_t k = 0; k < values.size(); ++k) {
    decode(k, n, digits);
    bool inside = true;
    for (std::size_t i = 0; i < digits.size() && inside; ++i) {
      pos[i] = position[m.class_of(digits[i])];
      inside = pos[i] < ground.size();
    }
    if (!inside) continue;
    const bool model = truth[encode(pos, ground.size())] != 0;
    const bool boolean = u.contains(m.pool().algebra().from_bits(values[k]));
    ++r.instances;
    if (model != boolean) {
      ++r.failures;
      if (r.examples.size() < 5) r.examples.push_back("ground " + describe_instance(f, vars, digits) + " " + u.describe());
    }
  }
}

}  // namespace

QuotientModel::QuotientModel(std::shared_ptr<const names::PoolModel> pool, Ultrafilter u)
    : pool_(std::move(pool)),
      u_(u),
      model_(1, fol::Signature::set_theory()),
      ground_model_(1, fol::Signature::set_theory()) {
  const auto& b = pool_->pool().algebra();
  if (u_.atom_count() != b.atom_count()) throw InputError("quotient: ultrafilter on a different algebra");
  const std::size_t n = pool_->pool().size();
  class_of_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t c = 0;
    while (c < reps_.size() && !u_.contains(pool_->eq(i, reps_[c]))) ++c;
    if (c == reps_.size()) reps_.push_back(i);
    class_of_[i] = c;
  }
  const std::size_t k = reps_.size();
  for (std::size_t i = 0; i < n && congruent_; ++i) {
    if (u_.contains(pool_->vcheck(i)) != u_.contains(pool_->vcheck(reps_[class_of_[i]]))) congruent_ = false;
    for (std::size_t j = 0; j < n; ++j) {
      const bool direct = u_.contains(pool_->in(i, j));
      const bool via_reps = u_.contains(pool_->in(reps_[class_of_[i]], reps_[class_of_[j]]));
      if (direct != via_reps) {
        congruent_ = false;
        break;
      }
    }
  }
  model_ = fol::ClassicalStructure(k, fol::Signature::set_theory());
  for (std::size_t c = 0; c < k; ++c) {
    const bool ground = vcheck(c);
    model_.set_relation(fol::kGroundPredicate, std::vector<std::size_t>{c}, ground);
    if (ground) ground_.push_back(c);
    for (std::size_t d = 0; d < k; ++d) model_.set_relation(fol::kMembership, std::vector<std::size_t>{c, d}, in(c, d));
  }
  if (!ground_.empty()) {
    ground_model_ = fol::ClassicalStructure(ground_.size(), fol::Signature::set_theory());
    for (std::size_t a = 0; a < ground_.size(); ++a) {
      ground_model_.set_relation(fol::kGroundPredicate, std::vector<std::size_t>{a}, true);
      for (std::size_t b2 = 0; b2 < ground_.size(); ++b2)
        ground_model_.set_relation(fol::kMembership, std::vector<std::size_t>{a, b2}, in(ground_[a], ground_[b2]));
    }
  }
}

bool QuotientModel::in(std::size_t c, std::size_t d) const { return u_.contains(pool_->in(reps_[c], reps_[d])); }

bool QuotientModel::vcheck(std::size_t c) const { return u_.contains(pool_->vcheck(reps_[c])); }

std::optional<std::size_t> QuotientModel::class_of_name(const names::Name& t) const {
  if (auto idx = pool().index_of(t)) return class_of_[*idx];
  names::Valuer v(pool().algebra().atom_count());
  for (std::size_t c = 0; c < reps_.size(); ++c)
    if (u_.contains(v.eq(t, pool()[reps_[c]]))) return c;
  return std::nullopt;
}

std::optional<std::size_t> QuotientModel::j(const names::HFSet& x) const {
  auto idx = pool().check_index(x);
  if (!idx) return std::nullopt;
  return class_of_[*idx];
}

bool QuotientModel::holds(const fol::Formula& f, const fol::Assignment& pool_indices) const {
  fol::Assignment a;
  for (const auto& [var, idx] : pool_indices) {
    if (idx >= class_of_.size()) throw InputError("assignment of '" + var + "' is outside the pool");
    a[var] = class_of_[idx];
  }
  return fol::holds(model_, f, a);
}

void LosReport::merge(const LosReport& o) {
  instances += o.instances;
  failures += o.failures;
  for (const auto& e : o.examples)
    if (examples.size() < 5) examples.push_back(e);
}

LosReport los_check(const QuotientModel& m, const fol::Formula& f) {
  LosReport r;
  const auto vars = free_list(f);
  compare_plain(m, f, vars, fol::boolean_table_bottom_up(m.pool_model().structure(), f, vars), r);
  return r;
}

LosReport los_check_ground(const QuotientModel& m, const fol::Formula& f) {
  LosReport r;
  const auto vars = free_list(f);
  compare_ground(m, f, vars, fol::boolean_table_bottom_up(m.pool_model().structure(), fol::relativize(f), vars), r);
  return r;
}

LosSweep los_sweep(const names::PoolModel& pool, const std::vector<const QuotientModel*>& models,
                   const std::vector<fol::Formula>& formulas) {
  LosSweep out;
  for (const auto* m : models)
    if (&m->pool_model() != &pool) throw InputError("los_sweep: quotient built over a different pool");
  for (const auto& f : formulas) {
    const auto vars = free_list(f);
    const auto plain = fol::boolean_table_bottom_up(pool.structure(), f, vars);
    const auto rel = fol::boolean_table_bottom_up(pool.structure(), fol::relativize(f), vars);
    for (const auto* m : models) {
      compare_plain(*m, f, vars, plain, out.plain);
      compare_ground(*m, f, vars, rel, out.ground);
    }
  }
  return out;
}

fol::ClassicalStructure hf_structure(const std::vector<names::HFSet>& fragment) {
  if (fragment.empty()) throw InputError("hf_structure: empty fragment");
  fol::ClassicalStructure s(fragment.size(), fol::Signature::set_theory());
  for (std::size_t i = 0; i < fragment.size(); ++i) {
    s.set_relation(fol::kGroundPredicate, std::vector<std::size_t>{i}, true);
    for (std::size_t k = 0; k < fragment.size(); ++k)
      s.set_relation(fol::kMembership, std::vector<std::size_t>{i, k}, fragment[k].contains(fragment[i]));
  }
  return s;
}

TrivialityReport generic_triviality(const QuotientModel& m, const std::vector<fol::Formula>& formulas) {
  TrivialityReport r;
  const auto& pool = m.pool();
  std::vector<names::HFSet> fragment;
  std::vector<std::size_t> image;
  for (std::size_t idx : pool.check_indices()) {
    fragment.push_back(*names::as_check(pool[idx]));
    image.push_back(m.class_of(idx));
  }
  r.fragment_size = fragment.size();
  r.ground_classes = m.ground_classes().size();
  for (std::size_t a = 0; a < fragment.size(); ++a)
    for (std::size_t b = 0; b < fragment.size(); ++b) {
      if (a != b && image[a] == image[b]) r.injective = false;
      if (fragment[b].contains(fragment[a]) != m.in(image[a], image[b])) r.preserves_membership = false;
    }
  for (std::size_t c : m.ground_classes())
    if (std::find(image.begin(), image.end(), c) == image.end()) r.onto = false;

  const auto filter = m.ultrafilter().as_filter(pool.algebra());
  std::vector<names::HFSet> vals;
  for (const auto& t : pool.names()) vals.push_back(names::val(t, filter));
  for (std::size_t i = 0; i < pool.size() && r.val_collapse_agrees; ++i)
    for (std::size_t k = 0; k < pool.size(); ++k) {
      const bool same = m.class_of(i) == m.class_of(k);
      const bool member = m.in(m.class_of(i), m.class_of(k));
      if (same != (vals[i] == vals[k]) || member != vals[k].contains(vals[i])) {
        r.val_collapse_agrees = false;
        break;
      }
    }

  if (!fragment.empty() && !formulas.empty() && !m.ground_classes().empty()) {
    const auto hf = hf_structure(fragment);
    std::map<std::size_t, std::size_t> ground_pos;
    for (std::size_t i = 0; i < m.ground_classes().size(); ++i) ground_pos[m.ground_classes()[i]] = i;
    for (const auto& f : formulas) {
      const auto vars = free_list(f);
      const std::size_t total = power(fragment.size(), vars.size());
      std::vector<std::size_t> digits(vars.size());
      for (std::size_t k = 0; k < total; ++k) {
        decode(k, fragment.size(), digits);
        fol::Assignment left, right;
        bool mapped = true;
        for (std::size_t i = 0; i < vars.size(); ++i) {
          left[vars[i]] = digits[i];
          auto it = ground_pos.find(image[digits[i]]);
          if (it == ground_pos.end()) {
            mapped = false;
            break;
          }
          right[vars[i]] = it->second;
        }
        ++r.elementarity_instances;
        if (!mapped || fol::holds(hf, f, left) != fol::holds(m.ground_structure(), f, right)) r.elementary = false;
      }
    }
  }
  r.verdict = r.ok() ? "trivial ultrapower (generic): j_U is an isomorphism onto the ground classes"
                     : "j_U is not an isomorphism onto the ground classes";
  return r;
}

GroundReport check_ground_lemmas(const QuotientModel& m) {
  GroundReport r;
  const auto& pm = m.pool_model();
  const std::size_t k = m.class_count();
  std::vector<bool> has_full_rep(k, false);
  for (std::size_t i = 0; i < m.pool().size(); ++i)
    if (pm.vcheck(i).is_one()) has_full_rep[m.class_of(i)] = true;
  for (std::size_t c = 0; c < k; ++c) {
    if (m.vcheck(c) != has_full_rep[c]) r.representation = false;
    for (std::size_t d = 0; d < k; ++d) {
      ++r.pairs_checked;
      if (m.in(c, d) && m.vcheck(d) && !m.vcheck(c)) r.transitive = false;
    }
  }
  return r;
}

}  // namespace bvm::ultra
