// Bottom-up evaluation: every subformula becomes a dense table over the
// assignments of its free variables, so a quantifier is one pass of joins
// along an axis instead of a re-evaluation of its body per assignment.

#include <algorithm>
#include <cstdint>

#include "bvm/error.hpp"
#include "bvm/fol/structure.hpp"

namespace bvm::fol {

namespace {

constexpr std::size_t kMaxCells = std::size_t{1} << 26;

template <class T>
struct Table {
  std::vector<std::string> vars;  // sorted; vars[0] most significant
  std::vector<T> cells;
};

template <class T>
class TableEvaluator {
 public:
  TableEvaluator(const BValuedStructure& s) : s_(s), n_(s.size()), full_(static_cast<T>(s.algebra().one().bits())) {}

  Table<T> eval(const Formula& f) {
    switch (f.kind()) {
      case Kind::Relation:
        return atom(f.args(), [&](const std::vector<std::size_t>& idx) {
          const auto& t = s_.relation_table(f.symbol());
          std::size_t off = 0;
          for (std::size_t i : idx) off = off * n_ + i;
          return static_cast<T>(t[off]);
        });
      case Kind::Equal:
        return atom(f.args(), [&](const std::vector<std::size_t>& idx) {
          return static_cast<T>(s_.equality_table()[idx[0] * n_ + idx[1]]);
        });
      case Kind::FunctionEqual:
        return atom(f.args(), [&](const std::vector<std::size_t>& idx) {
          const auto& t = s_.function_table(f.symbol());
          std::size_t off = 0;
          for (std::size_t i : idx) off = off * n_ + i;
          return static_cast<T>(t[off]);
        });
      case Kind::Not: {
        Table<T> t = eval(f.child(0));
        for (auto& c : t.cells) c = static_cast<T>(~c & full_);
        return t;
      }
      case Kind::And: {
        Table<T> l = eval(f.child(0));
        Table<T> r = eval(f.child(1));
        std::vector<std::string> vars;
        std::set_union(l.vars.begin(), l.vars.end(), r.vars.begin(), r.vars.end(), std::back_inserter(vars));
        Table<T> out{vars, std::vector<T>(cells(vars.size()))};
        const auto ls = strides(vars, l.vars), rs = strides(vars, r.vars);
        walk(vars.size(), [&](std::size_t k, std::size_t li, std::size_t ri) { out.cells[k] = l.cells[li] & r.cells[ri]; },
             ls, rs);
        return out;
      }
      case Kind::Exists: {
        Table<T> body = eval(f.child(0));
        auto it = std::find(body.vars.begin(), body.vars.end(), f.var());
        if (it == body.vars.end()) return body;
        const std::size_t axis = static_cast<std::size_t>(it - body.vars.begin());
        // Layout: outer × axis × inner.
        std::size_t inner = 1;
        for (std::size_t i = axis + 1; i < body.vars.size(); ++i) inner *= n_;
        const std::size_t outer = body.cells.size() / (inner * n_);
        Table<T> out;
        out.vars = body.vars;
        out.vars.erase(out.vars.begin() + static_cast<std::ptrdiff_t>(axis));
        out.cells.assign(outer * inner, 0);
        for (std::size_t o = 0; o < outer; ++o)
          for (std::size_t a = 0; a < n_; ++a) {
            const T* src = &body.cells[(o * n_ + a) * inner];
            T* dst = &out.cells[o * inner];
            for (std::size_t i = 0; i < inner; ++i) dst[i] |= src[i];
          }
        return out;
      }
    }
    return {};
  }

  /// Entries for the requested variable order (a superset of the table's variables).
  std::vector<ba::Bits> expand(const Table<T>& t, const std::vector<std::string>& order) {
    std::vector<std::string> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& v : t.vars)
      if (!std::binary_search(sorted.begin(), sorted.end(), v)) throw InputError("unassigned free variable '" + v + "'");
    const auto st = strides(order, t.vars);
    std::vector<ba::Bits> out(cells(order.size()));
    walk(order.size(), [&](std::size_t k, std::size_t ti, std::size_t) { out[k] = t.cells[ti]; }, st, st);
    return out;
  }

 private:
  std::size_t cells(std::size_t k) const {
    std::size_t c = 1;
    for (std::size_t i = 0; i < k; ++i) {
      c *= n_;
      if (c > kMaxCells) throw SizeError("evaluation table too large");
    }
    return c;
  }

  template <class Fn>
  Table<T> atom(const std::vector<std::string>& args, Fn value) {
    std::vector<std::string> vars = args;
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    Table<T> out{vars, std::vector<T>(cells(vars.size()))};
    std::vector<std::size_t> pos;
    for (const auto& a : args) pos.push_back(static_cast<std::size_t>(std::find(vars.begin(), vars.end(), a) - vars.begin()));
    std::vector<std::size_t> digits(vars.size(), 0), idx(args.size());
    for (std::size_t k = 0; k < out.cells.size(); ++k) {
      for (std::size_t i = 0; i < args.size(); ++i) idx[i] = digits[pos[i]];
      out.cells[k] = value(idx);
      for (std::size_t d = vars.size(); d-- > 0;) {
        if (++digits[d] < n_) break;
        digits[d] = 0;
      }
    }
    return out;
  }

  /// Stride of each variable of `outer` inside a table over `inner` (0 when absent).
  std::vector<std::size_t> strides(const std::vector<std::string>& outer, const std::vector<std::string>& inner) const {
    std::vector<std::size_t> out(outer.size(), 0);
    for (std::size_t i = 0; i < outer.size(); ++i) {
      auto it = std::find(inner.begin(), inner.end(), outer[i]);
      if (it == inner.end()) continue;
      std::size_t stride = 1;
      for (auto j = it + 1; j != inner.end(); ++j) stride *= n_;
      out[i] = stride;
    }
    return out;
  }

  template <class Fn>
  void walk(std::size_t k, Fn fn, const std::vector<std::size_t>& s1, const std::vector<std::size_t>& s2) const {
    const std::size_t total = cells(k);
    std::vector<std::size_t> digits(k, 0);
    std::size_t i1 = 0, i2 = 0;
    for (std::size_t c = 0; c < total; ++c) {
      fn(c, i1, i2);
      for (std::size_t d = k; d-- > 0;) {
        if (++digits[d] < n_) {
          i1 += s1[d];
          i2 += s2[d];
          break;
        }
        i1 -= s1[d] * (n_ - 1);
        i2 -= s2[d] * (n_ - 1);
        digits[d] = 0;
      }
    }
  }

  const BValuedStructure& s_;
  std::size_t n_;
  T full_;
};

template <class T>
std::vector<ba::Bits> run(const BValuedStructure& s, const Formula& f, const std::vector<std::string>& vars) {
  TableEvaluator<T> ev(s);
  return ev.expand(ev.eval(f), vars);
}

}  // namespace

std::vector<ba::Bits> boolean_table_bottom_up(const BValuedStructure& s, const Formula& f,
                                              const std::vector<std::string>& vars) {
  const unsigned atoms = s.algebra().atom_count();
  if (atoms <= 8) return run<std::uint8_t>(s, f, vars);
  if (atoms <= 16) return run<std::uint16_t>(s, f, vars);
  if (atoms <= 32) return run<std::uint32_t>(s, f, vars);
  return run<std::uint64_t>(s, f, vars);
}

}  // namespace bvm::fol
