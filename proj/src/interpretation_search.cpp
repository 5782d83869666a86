// Search for matrix interpretations as a finite-domain constraint problem.
//
// Every matrix and vector entry becomes a variable over [0, coef_max]
// (upper-left entries of argument matrices over [1, coef_max]).  Interpreting
// a rule symbolically yields polynomial inequalities P ≥ N + δ, which are
// handled by bounds propagation and depth-first search.  The number of
// strict-side rules oriented strictly is maximized by branch and bound.

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>

#include "ddrt/relative_termination.hpp"

namespace ddrt {
namespace {

using VarId = std::uint32_t;

struct Monomial {
  Natural coef;
  std::vector<VarId> vars;  // sorted, with repetition
};

using Poly = std::vector<Monomial>;  // sorted by vars, coefficients > 0

Poly normalized(Poly p) {
  std::sort(p.begin(), p.end(), [](const Monomial& a, const Monomial& b) { return a.vars < b.vars; });
  Poly out;
  for (Monomial& m : p) {
    if (!out.empty() && out.back().vars == m.vars)
      out.back().coef += m.coef;
    else
      out.push_back(std::move(m));
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  Poly all = a;
  all.insert(all.end(), b.begin(), b.end());
  return normalized(std::move(all));
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  out.reserve(a.size() * b.size());
  for (const Monomial& x : a)
    for (const Monomial& y : b) {
      Monomial m{x.coef * y.coef, x.vars};
      m.vars.insert(m.vars.end(), y.vars.begin(), y.vars.end());
      std::sort(m.vars.begin(), m.vars.end());
      out.push_back(std::move(m));
    }
  return normalized(std::move(out));
}

Poly constant_poly(Natural c) { return c ? Poly{{c, {}}} : Poly{}; }
Poly var_poly(VarId v) { return Poly{{1, {v}}}; }

// Symbolic square matrix / vector, entries row-major.
using SymMatrix = std::vector<Poly>;
using SymVector = std::vector<Poly>;

struct SymForm {
  std::map<std::string, SymMatrix> coeffs;
  SymVector constant;
};

struct SymbolVars {
  std::vector<std::vector<VarId>> args;  // row-major per argument
  std::vector<VarId> constant;
};

struct Domain {
  Natural lo;
  Natural hi;
};

Natural sat_mul(Natural a, Natural b) {
  Natural r;
  return __builtin_mul_overflow(a, b, &r) ? std::numeric_limits<Natural>::max() : r;
}

Natural sat_add(Natural a, Natural b) {
  Natural r;
  return __builtin_add_overflow(a, b, &r) ? std::numeric_limits<Natural>::max() : r;
}

/// P ≥ N + δ after cancelling common monomials.
struct Constraint {
  Poly pos;
  Poly neg;
  Natural delta = 0;
  std::vector<VarId> vars;
};

Natural bound(const Poly& p, const std::vector<Domain>& dom, bool upper) {
  Natural sum = 0;
  for (const Monomial& m : p) {
    Natural prod = m.coef;
    for (VarId v : m.vars) prod = sat_mul(prod, upper ? dom[v].hi : dom[v].lo);
    sum = sat_add(sum, prod);
  }
  return sum;
}

bool feasible(const Constraint& c, const std::vector<Domain>& dom) {
  return bound(c.pos, dom, true) >= sat_add(bound(c.neg, dom, false), c.delta);
}

/// nullopt when the inequality holds for every assignment.
std::optional<Constraint> make_constraint(const Poly& l, const Poly& r, Natural delta) {
  Constraint c;
  c.delta = delta;
  std::size_t i = 0, j = 0;
  while (i < l.size() || j < r.size()) {
    if (j == r.size() || (i < l.size() && l[i].vars < r[j].vars)) {
      c.pos.push_back(l[i++]);
    } else if (i == l.size() || r[j].vars < l[i].vars) {
      c.neg.push_back(r[j++]);
    } else {
      if (l[i].coef > r[j].coef)
        c.pos.push_back({l[i].coef - r[j].coef, l[i].vars});
      else if (l[i].coef < r[j].coef)
        c.neg.push_back({r[j].coef - l[i].coef, r[j].vars});
      ++i;
      ++j;
    }
  }
  if (c.neg.empty() && c.delta == 0) return std::nullopt;
  for (const Poly* p : {&c.pos, &c.neg})
    for (const Monomial& m : *p) c.vars.insert(c.vars.end(), m.vars.begin(), m.vars.end());
  std::sort(c.vars.begin(), c.vars.end());
  c.vars.erase(std::unique(c.vars.begin(), c.vars.end()), c.vars.end());
  return c;
}

class Encoder {
 public:
  Encoder(std::size_t dim, Natural coef_max) : dim_(dim), coef_max_(coef_max) {}

  void declare(const std::string& f, std::size_t arity) {
    if (symbols_.count(f)) return;
    SymbolVars sv;
    for (std::size_t i = 0; i < arity; ++i) {
      std::vector<VarId> m;
      for (std::size_t e = 0; e < dim_ * dim_; ++e) m.push_back(fresh(e == 0 ? 1 : 0));
      sv.args.push_back(std::move(m));
    }
    for (std::size_t e = 0; e < dim_; ++e) sv.constant.push_back(fresh(0));
    symbols_.emplace(f, std::move(sv));
  }

  const SymForm& interpret(const Term& t) {
    auto it = memo_.find(t);
    if (it != memo_.end()) return it->second;
    SymForm out;
    if (t.is_var()) {
      SymMatrix id(dim_ * dim_);
      for (std::size_t d = 0; d < dim_; ++d) id[d * dim_ + d] = constant_poly(1);
      out.coeffs.emplace(t.name(), std::move(id));
      out.constant.assign(dim_, Poly{});
    } else {
      const SymbolVars& sv = symbols_.at(t.name());
      for (VarId v : sv.constant) out.constant.push_back(var_poly(v));
      for (std::size_t i = 0; i < t.arity(); ++i) {
        const SymForm& arg = interpret(t.args()[i]);
        const std::vector<VarId>& a = sv.args[i];
        out.constant = add(out.constant, times_vector(a, arg.constant));
        for (const auto& [x, c] : arg.coeffs) {
          SymMatrix scaled = times_matrix(a, c);
          auto [slot, fresh] = out.coeffs.emplace(x, scaled);
          if (!fresh) slot->second = add(slot->second, scaled);
        }
      }
    }
    return memo_.emplace(t, std::move(out)).first->second;
  }

  std::vector<Domain>& domains() { return domains_; }
  const std::map<std::string, SymbolVars>& symbols() const { return symbols_; }
  std::size_t dim() const { return dim_; }

 private:
  VarId fresh(Natural lo) {
    domains_.push_back({lo, std::max(lo, coef_max_)});
    return static_cast<VarId>(domains_.size() - 1);
  }

  static std::vector<Poly> add(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    std::vector<Poly> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
  }

  SymVector times_vector(const std::vector<VarId>& a, const SymVector& v) const {
    SymVector out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t k = 0; k < dim_; ++k)
        if (!v[k].empty()) out[r] = out[r] + var_poly(a[r * dim_ + k]) * v[k];
    return out;
  }

  SymMatrix times_matrix(const std::vector<VarId>& a, const SymMatrix& m) const {
    SymMatrix out(dim_ * dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c)
        for (std::size_t k = 0; k < dim_; ++k)
          if (!m[k * dim_ + c].empty())
            out[r * dim_ + c] = out[r * dim_ + c] + var_poly(a[r * dim_ + k]) * m[k * dim_ + c];
    return out;
  }

  std::size_t dim_;
  Natural coef_max_;
  std::vector<Domain> domains_;
  std::map<std::string, SymbolVars> symbols_;
  std::unordered_map<Term, SymForm, TermHash> memo_;
};

class Solver {
 public:
  Solver(std::vector<Constraint> constraints, std::vector<bool> always_active, std::vector<std::size_t> strict_ids,
         std::vector<Domain> domains, std::vector<VarId> order, const SearchLimits& limits)
      : constraints_(std::move(constraints)),
        always_(std::move(always_active)),
        strict_ids_(std::move(strict_ids)),
        root_(std::move(domains)),
        order_(std::move(order)),
        limits_(limits),
        occurs_(root_.size()) {
    for (std::size_t c = 0; c < constraints_.size(); ++c)
      for (VarId v : constraints_[c].vars) occurs_[v].push_back(c);
  }

  /// Returns the best complete assignment, if any rule was oriented strictly.
  std::optional<std::vector<Domain>> run() {
    State s{root_, std::vector<bool>(constraints_.size(), false)};
    std::vector<std::size_t> all;
    for (std::size_t c = 0; c < constraints_.size(); ++c)
      if (always_[c]) all.push_back(c);
    if (propagate(s, all)) dfs(s, 0);
    return best_;
  }

  bool exhausted() const { return exhausted_; }
  std::size_t nodes() const { return nodes_; }

 private:
  struct State {
    std::vector<Domain> dom;
    std::vector<bool> hard;
  };

  bool active(const State& s, std::size_t c) const { return always_[c] || s.hard[c]; }

  bool propagate(State& s, const std::vector<std::size_t>& seed) {
    std::deque<std::size_t> queue(seed.begin(), seed.end());
    std::vector<bool> queued(constraints_.size(), false);
    for (std::size_t c : seed) queued[c] = true;
    while (!queue.empty()) {
      std::size_t ci = queue.front();
      queue.pop_front();
      queued[ci] = false;
      const Constraint& c = constraints_[ci];
      if (!feasible(c, s.dom)) return false;
      for (VarId v : c.vars) {
        Domain& d = s.dom[v];
        if (d.lo == d.hi) continue;
        const Domain old = d;
        auto ok_at = [&](Natural val) {
          d = {val, val};
          bool ok = feasible(c, s.dom);
          d = old;
          return ok;
        };
        Natural lo = old.lo, hi = old.hi;
        while (lo <= hi && !ok_at(lo)) ++lo;
        if (lo > hi) return false;
        while (hi > lo && !ok_at(hi)) --hi;
        if (lo == old.lo && hi == old.hi) continue;
        d = {lo, hi};
        for (std::size_t other : occurs_[v])
          if (other != ci && !queued[other] && active(s, other)) {
            queued[other] = true;
            queue.push_back(other);
          }
      }
    }
    return true;
  }

  void dfs(State& s, std::size_t pos) {
    if (done_ || exhausted_) return;
    if (++nodes_ > limits_.node_budget) {
      exhausted_ = true;
      return;
    }
    if ((nodes_ & 1023) == 0) limits_.deadline.check();

    std::vector<std::size_t> possible;
    for (std::size_t c : strict_ids_)
      if (feasible(constraints_[c], s.dom)) possible.push_back(c);
    const std::size_t need = best_count_ + 1;
    if (possible.size() < need) return;
    if (possible.size() == need) {
      std::vector<std::size_t> newly;
      for (std::size_t c : possible)
        if (!s.hard[c]) {
          s.hard[c] = true;
          newly.push_back(c);
        }
      if (!newly.empty() && !propagate(s, newly)) return;
    }

    while (pos < order_.size() && s.dom[order_[pos]].lo == s.dom[order_[pos]].hi) ++pos;
    if (pos == order_.size()) {
      // Every variable is fixed, so feasibility is exact.
      std::size_t count = 0;
      for (std::size_t c : strict_ids_)
        if (feasible(constraints_[c], s.dom)) ++count;
      if (count > best_count_) {
        best_count_ = count;
        best_ = s.dom;
        if (count == strict_ids_.size()) done_ = true;
      }
      return;
    }

    const VarId v = order_[pos];
    for (Natural val = s.dom[v].lo; val <= s.dom[v].hi; ++val) {
      State child = s;
      child.dom[v] = {val, val};
      std::vector<std::size_t> seed;
      for (std::size_t c : occurs_[v])
        if (active(child, c)) seed.push_back(c);
      if (propagate(child, seed)) dfs(child, pos + 1);
      if (done_ || exhausted_) return;
    }
  }

  std::vector<Constraint> constraints_;
  std::vector<bool> always_;
  std::vector<std::size_t> strict_ids_;
  std::vector<Domain> root_;
  std::vector<VarId> order_;
  const SearchLimits& limits_;
  std::vector<std::vector<std::size_t>> occurs_;

  std::size_t nodes_ = 0;
  std::size_t best_count_ = 0;
  std::optional<std::vector<Domain>> best_;
  bool done_ = false;
  bool exhausted_ = false;
};

MatrixInterpretation extract(const Encoder& enc, const std::vector<Domain>& dom) {
  MatrixInterpretation mi;
  mi.dim = enc.dim();
  const std::size_t d = enc.dim();
  for (const auto& [f, sv] : enc.symbols()) {
    SymbolInterpretation si;
    for (const auto& a : sv.args) {
      Matrix m(d);
      for (std::size_t e = 0; e < d * d; ++e) m(e / d, e % d) = dom[a[e]].lo;
      si.args.push_back(std::move(m));
    }
    for (VarId v : sv.constant) si.constant.push_back(dom[v].lo);
    mi.symbols.emplace(f, std::move(si));
  }
  return mi;
}

}  // namespace

SearchOutcome search_interpretation(const RelativeProblem& problem, std::size_t dim, std::size_t coef_max,
                                    const SearchLimits& limits) {
  if (dim == 0) throw Error("interpretation dimension must be positive");
  SearchOutcome outcome;
  if (problem.strict.empty()) return outcome;

  Encoder enc(dim, coef_max);
  for (const Trs* side : {&problem.strict, &problem.weak})
    for (const auto& [f, arity] : side->signature()) enc.declare(f, arity);

  std::vector<Constraint> constraints;
  std::vector<bool> always;
  std::vector<std::size_t> strict_ids;

  auto weak_constraints = [&](const Rule& r) {
    const SymForm l = enc.interpret(r.lhs);
    const SymForm& rf = enc.interpret(r.rhs);
    for (const auto& [x, rc] : rf.coeffs) {
      auto it = l.coeffs.find(x);
      for (std::size_t e = 0; e < rc.size(); ++e) {
        auto c = make_constraint(it == l.coeffs.end() ? Poly{} : it->second[e], rc[e], 0);
        if (c) {
          constraints.push_back(std::move(*c));
          always.push_back(true);
        }
      }
    }
    for (std::size_t e = 0; e < dim; ++e)
      if (auto c = make_constraint(l.constant[e], rf.constant[e], 0)) {
        constraints.push_back(std::move(*c));
        always.push_back(true);
      }
  };

  for (const Rule& r : problem.strict) {
    const SymForm l = enc.interpret(r.lhs);
    const SymForm& rf = enc.interpret(r.rhs);
    strict_ids.push_back(constraints.size());
    constraints.push_back(*make_constraint(l.constant[0], rf.constant[0], 1));
    always.push_back(false);
  }
  for (const Rule& r : problem.strict) weak_constraints(r);
  for (const Rule& r : problem.weak) weak_constraints(r);

  // Branch on variables in order of first occurrence; variables that occur
  // in no constraint are fixed at their lower bound.
  std::vector<Domain> domains = enc.domains();
  std::vector<bool> placed(domains.size(), false);
  std::vector<VarId> order;
  for (const Constraint& c : constraints)
    for (VarId v : c.vars)
      if (!placed[v]) {
        placed[v] = true;
        order.push_back(v);
      }
  for (VarId v = 0; v < domains.size(); ++v)
    if (!placed[v]) domains[v].hi = domains[v].lo;

  Solver solver(std::move(constraints), std::move(always), std::move(strict_ids), std::move(domains),
                std::move(order), limits);
  auto best = solver.run();
  outcome.nodes = solver.nodes();
  if (!best) {
    outcome.status = solver.exhausted() ? SearchStatus::BudgetExhausted : SearchStatus::NoneExists;
    return outcome;
  }

  InterpretationFound found{extract(enc, *best), {}, {}};
  found.interpretation.validate();
  for (const Rule& r : problem.strict) {
    Orientation o = orient(found.interpretation, r);
    if (o == Orientation::Incomparable) throw Error("interpretation search produced an unsound result");
    if (o == Orientation::Strict) found.strict_removed.push_back(r);
  }
  for (const Rule& r : problem.weak) {
    Orientation o = orient(found.interpretation, r);
    if (o == Orientation::Incomparable) throw Error("interpretation search produced an unsound result");
    if (o == Orientation::Strict) found.weak_removed.push_back(r);
  }
  if (found.strict_removed.empty()) throw Error("interpretation search produced an unsound result");
  outcome.status = SearchStatus::Found;
  outcome.found = std::move(found);
  return outcome;
}

}  // namespace ddrt
