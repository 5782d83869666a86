#include "ddrt/rule_labeling.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace ddrt {

// ---------------------------------------------------------------------------
// Formula construction

PrecedenceFormula PrecedenceFormula::junction(Kind k, std::vector<PrecedenceFormula> parts) {
  const Kind unit = k == Kind::And ? Kind::True : Kind::False;
  const Kind absorbing = k == Kind::And ? Kind::False : Kind::True;
  PrecedenceFormula out(k);
  for (PrecedenceFormula& p : parts) {
    if (p.kind_ == unit) continue;
    if (p.kind_ == absorbing) return PrecedenceFormula(absorbing);
    if (p.kind_ == k) {
      for (PrecedenceFormula& c : p.children_) out.children_.push_back(std::move(c));
    } else {
      out.children_.push_back(std::move(p));
    }
  }
  if (out.children_.empty()) return PrecedenceFormula(unit);
  if (out.children_.size() == 1) return std::move(out.children_.front());
  return out;
}

PrecedenceFormula PrecedenceFormula::conj(std::vector<PrecedenceFormula> parts) {
  return junction(Kind::And, std::move(parts));
}

PrecedenceFormula PrecedenceFormula::disj(std::vector<PrecedenceFormula> parts) {
  return junction(Kind::Or, std::move(parts));
}

std::string PrecedenceFormula::to_string(std::size_t label_offset) const {
  auto label = [&](std::size_t r) { return std::to_string(r + label_offset); };
  switch (kind_) {
    case Kind::True:
      return "true";
    case Kind::False:
      return "false";
    case Kind::Gt:
      return label(left_) + " > " + label(right_);
    case Kind::Geq:
      return label(left_) + " >= " + label(right_);
    case Kind::And:
    case Kind::Or: {
      std::string sep = kind_ == Kind::And ? " & " : " | ";
      std::string out = "(";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) out += sep;
        out += children_[i].to_string(label_offset);
      }
      return out + ")";
    }
  }
  return {};
}

bool evaluate(const PrecedenceFormula& f, const LevelMap& levels) {
  using K = PrecedenceFormula::Kind;
  switch (f.kind()) {
    case K::True:
      return true;
    case K::False:
      return false;
    case K::Gt:
      return levels[f.left()] > levels[f.right()];
    case K::Geq:
      return f.left() == f.right() || levels[f.left()] > levels[f.right()];
    case K::And:
      return std::all_of(f.children().begin(), f.children().end(),
                         [&](const PrecedenceFormula& c) { return evaluate(c, levels); });
    case K::Or:
      return std::any_of(f.children().begin(), f.children().end(),
                         [&](const PrecedenceFormula& c) { return evaluate(c, levels); });
  }
  return false;
}

PrecedenceFormula build_phi(std::size_t alpha, std::size_t beta, const LabelSeq& gammas) {
  using F = PrecedenceFormula;
  const std::size_t n = gammas.size();
  std::vector<F> disjuncts;
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<F> parts;
    for (std::size_t j = 0; j < i; ++j) parts.push_back(F::gt(alpha, gammas[j]));
    if (i < n) {
      parts.push_back(F::geq(beta, gammas[i]));
      for (std::size_t j = i + 1; j < n; ++j)
        parts.push_back(F::disj({F::gt(beta, gammas[j]), F::gt(alpha, gammas[j])}));
    }
    disjuncts.push_back(F::conj(std::move(parts)));
  }
  return F::disj(std::move(disjuncts));
}

RuleLabelingProblem build_rl_problem(const Trs& trs, std::size_t k, const RuleLabelingLimits& limits) {
  using F = PrecedenceFormula;
  RuleLabelingProblem problem;
  std::vector<F> conjuncts;
  for (const Overlap& o : overlaps(trs)) {
    CriticalPair cp = critical_pair(o);
    std::vector<JoinInstance> joins = join_instances(trs, cp.left, cp.right, k, limits.join);
    if (joins.size() > limits.max_instances) joins.erase(joins.begin() + limits.max_instances, joins.end());
    const std::size_t alpha = o.inner.index;
    const std::size_t beta = o.outer.index;
    std::vector<F> options;
    for (const JoinInstance& j : joins)
      options.push_back(F::conj({build_phi(alpha, beta, j.left), build_phi(beta, alpha, j.right)}));
    conjuncts.push_back(F::disj(std::move(options)));
    problem.overlaps.push_back({std::move(cp), std::move(joins)});
  }
  problem.formula = F::conj(std::move(conjuncts));
  return problem;
}

PrecedenceFormula build_rl(const Trs& trs, std::size_t k, const RuleLabelingLimits& limits) {
  return build_rl_problem(trs, k, limits).formula;
}

// ---------------------------------------------------------------------------
// Solving

namespace {

enum class Tri { False, True, Unknown };

Tri and3(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::True && b == Tri::True) return Tri::True;
  return Tri::Unknown;
}

Tri or3(Tri a, Tri b) {
  if (a == Tri::True || b == Tri::True) return Tri::True;
  if (a == Tri::False && b == Tri::False) return Tri::False;
  return Tri::Unknown;
}

/// Three-valued evaluation; `atom(a, b)` gives the value of a > b for a ≠ b.
Tri evaluate3(const PrecedenceFormula& f, const std::function<Tri(std::size_t, std::size_t)>& atom) {
  using K = PrecedenceFormula::Kind;
  switch (f.kind()) {
    case K::True:
      return Tri::True;
    case K::False:
      return Tri::False;
    case K::Gt:
      return f.left() == f.right() ? Tri::False : atom(f.left(), f.right());
    case K::Geq:
      return f.left() == f.right() ? Tri::True : atom(f.left(), f.right());
    case K::And: {
      Tri acc = Tri::True;
      for (const auto& c : f.children()) {
        acc = and3(acc, evaluate3(c, atom));
        if (acc == Tri::False) break;
      }
      return acc;
    }
    case K::Or: {
      Tri acc = Tri::False;
      for (const auto& c : f.children()) {
        acc = or3(acc, evaluate3(c, atom));
        if (acc == Tri::True) break;
      }
      return acc;
    }
  }
  return Tri::Unknown;
}

void collect_atoms(const PrecedenceFormula& f, std::vector<std::pair<std::size_t, std::size_t>>& atoms,
                   std::size_t n_rules) {
  using K = PrecedenceFormula::Kind;
  if (f.kind() == K::Gt || f.kind() == K::Geq) {
    if (f.left() >= n_rules || f.right() >= n_rules)
      throw Error("precedence atom refers to rule " + std::to_string(std::max(f.left(), f.right())) +
                  " of a system with " + std::to_string(n_rules) + " rules");
    auto a = std::pair(f.left(), f.right());
    if (a.first != a.second && std::find(atoms.begin(), atoms.end(), a) == atoms.end()) atoms.push_back(a);
    return;
  }
  for (const auto& c : f.children()) collect_atoms(c, atoms, n_rules);
}

/// Decides satisfiability by choosing which atoms a > b are required, keeping
/// the required relation acyclic.  Atoms occur only positively, so any
/// linearization of an acyclic required set satisfies the formula.
class EdgeSearch {
 public:
  EdgeSearch(const PrecedenceFormula& f, std::vector<std::pair<std::size_t, std::size_t>> atoms,
             std::size_t n)
      : f_(f), atoms_(std::move(atoms)), value_(atoms_.size(), Tri::Unknown), adj_(n) {}

  std::optional<LevelMap> run() {
    if (!search(0)) return std::nullopt;
    LevelMap levels{std::vector<unsigned>(adj_.size(), 0)};
    std::vector<int> state(adj_.size(), 0);
    std::function<unsigned(std::size_t)> height = [&](std::size_t v) -> unsigned {
      if (state[v] == 2) return levels.level[v];
      state[v] = 1;
      unsigned h = 0;
      for (std::size_t w : adj_[v]) h = std::max(h, height(w) + 1);
      state[v] = 2;
      return levels.level[v] = h;
    };
    for (std::size_t v = 0; v < adj_.size(); ++v) height(v);
    return levels;
  }

 private:
  Tri status() const {
    return evaluate3(f_, [&](std::size_t a, std::size_t b) {
      auto it = std::find(atoms_.begin(), atoms_.end(), std::pair(a, b));
      return value_[it - atoms_.begin()];
    });
  }

  bool reaches(std::size_t from, std::size_t to) const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<std::size_t> stack{from};
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      if (v == to) return true;
      if (seen[v]) continue;
      seen[v] = true;
      for (std::size_t w : adj_[v]) stack.push_back(w);
    }
    return false;
  }

  bool search(std::size_t next) {
    Tri s = status();
    if (s == Tri::True) {
      // remaining unknown atoms are not required
      return true;
    }
    if (s == Tri::False || next == atoms_.size()) return false;
    auto [a, b] = atoms_[next];
    if (!reaches(b, a)) {
      value_[next] = Tri::True;
      adj_[a].push_back(b);
      if (search(next + 1)) return true;
      adj_[a].pop_back();
    }
    value_[next] = Tri::False;
    if (search(next + 1)) return true;
    value_[next] = Tri::Unknown;
    return false;
  }

  const PrecedenceFormula& f_;
  std::vector<std::pair<std::size_t, std::size_t>> atoms_;
  std::vector<Tri> value_;
  std::vector<std::vector<std::size_t>> adj_;
};

/// Depth-first search over level maps of the relevant rules, rule 0 first
/// and lower levels first, so the first solution is lexicographically least.
class LevelSearch {
 public:
  LevelSearch(const PrecedenceFormula& f, std::vector<std::size_t> relevant, std::size_t n,
              std::size_t node_limit)
      : f_(f), relevant_(std::move(relevant)), levels_(n, 0), assigned_(n, false), node_limit_(node_limit) {}

  /// nullopt when the node limit was hit before a solution was found.
  std::optional<LevelMap> run() {
    if (search(0)) return LevelMap{levels_};
    return std::nullopt;
  }

 private:
  bool search(std::size_t next) {
    if (++nodes_ > node_limit_) return false;
    Tri s = evaluate3(f_, [&](std::size_t a, std::size_t b) {
      if (!assigned_[a] || !assigned_[b]) return Tri::Unknown;
      return levels_[a] > levels_[b] ? Tri::True : Tri::False;
    });
    if (s == Tri::False) return false;
    if (next == relevant_.size()) return s == Tri::True;
    std::size_t rule = relevant_[next];
    assigned_[rule] = true;
    for (unsigned lv = 0; lv < relevant_.size(); ++lv) {
      levels_[rule] = lv;
      if (search(next + 1)) return true;
      if (nodes_ > node_limit_) break;
    }
    assigned_[rule] = false;
    levels_[rule] = 0;
    return false;
  }

  const PrecedenceFormula& f_;
  std::vector<std::size_t> relevant_;
  std::vector<unsigned> levels_;
  std::vector<bool> assigned_;
  std::size_t node_limit_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::optional<LevelMap> solve_precedence(const PrecedenceFormula& f, std::size_t n_rules) {
  std::vector<std::pair<std::size_t, std::size_t>> atoms;
  collect_atoms(f, atoms, n_rules);

  auto witness = EdgeSearch(f, atoms, n_rules).run();
  if (!witness) return std::nullopt;

  std::set<std::size_t> relevant;
  for (auto [a, b] : atoms) {
    relevant.insert(a);
    relevant.insert(b);
  }
  if (auto least = LevelSearch(f, {relevant.begin(), relevant.end()}, n_rules, 200000).run()) return least;
  return witness;
}

}  // namespace ddrt
