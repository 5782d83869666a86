#include "ddrt/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace ddrt {

RuleClass classify(const Rule& r) {
  auto left = variable_occurrences(r.lhs);
  auto right = variable_occurrences(r.rhs);
  RuleClass c;
  c.left_linear = std::all_of(left.begin(), left.end(), [](const auto& e) { return e.second == 1; });
  c.right_linear =
      std::all_of(right.begin(), right.end(), [](const auto& e) { return e.second == 1; });
  for (const auto& [v, n] : right) {
    auto it = left.find(v);
    if (n > (it == left.end() ? 0 : it->second)) c.duplicating = true;
  }
  return c;
}

namespace {

std::pair<Term, Term> canonical_rule(const Rule& r) {
  Substitution renaming;
  std::size_t next = 0;
  for (const std::string& v : variables(r.lhs)) renaming.bind(v, Term::var("_" + std::to_string(next++)));
  for (const std::string& v : variables(r.rhs))
    if (!renaming.lookup(v)) renaming.bind(v, Term::var("_" + std::to_string(next++)));
  return {renaming.apply(r.lhs), renaming.apply(r.rhs)};
}

void collect_signature(const Term& t, std::map<std::string, std::size_t>& sig, const Rule& owner) {
  if (t.is_var()) return;
  auto [it, fresh] = sig.emplace(t.name(), t.arity());
  if (!fresh && it->second != t.arity())
    throw InvalidRule(InvalidRule::Kind::ArityClash,
                      "symbol " + t.name() + " used with arities " + std::to_string(it->second) +
                          " and " + std::to_string(t.arity()) + " (rule " +
                          std::to_string(owner.index) + ": " + owner.to_string() + ")");
  for (const Term& a : t.args()) collect_signature(a, sig, owner);
}

}  // namespace

bool is_variant(const Rule& a, const Rule& b) { return canonical_rule(a) == canonical_rule(b); }

Rule rename_apart(const Rule& r, const std::set<std::string>& taken) {
  std::vector<std::string> own = variables(r.lhs);
  for (const std::string& v : variables(r.rhs))
    if (std::find(own.begin(), own.end(), v) == own.end()) own.push_back(v);

  std::set<std::string> used(taken.begin(), taken.end());
  for (const std::string& v : own)
    if (!taken.count(v)) used.insert(v);

  Substitution renaming;
  for (const std::string& v : own) {
    if (!taken.count(v)) continue;
    std::string fresh = v + "_" + std::to_string(r.index);
    while (used.count(fresh)) fresh += "'";
    used.insert(fresh);
    renaming.bind(v, Term::var(fresh));
  }
  return Rule{r.index, renaming.apply(r.lhs), renaming.apply(r.rhs)};
}

// ---------------------------------------------------------------------------
// Trs

Trs::Trs(std::vector<Rule> rules) : rules_(std::move(rules)) {
  std::set<std::size_t> seen;
  for (const Rule& r : rules_) {
    if (!seen.insert(r.index).second)
      throw InvalidRule(InvalidRule::Kind::DuplicateIndex,
                        "duplicate rule index " + std::to_string(r.index));
    if (r.lhs.is_var())
      throw InvalidRule(InvalidRule::Kind::VariableLhs,
                        "left-hand side is a variable (rule " + std::to_string(r.index) + ": " +
                            r.to_string() + ")");
    auto lvars = variables(r.lhs);
    for (const std::string& v : variables(r.rhs))
      if (std::find(lvars.begin(), lvars.end(), v) == lvars.end())
        throw InvalidRule(InvalidRule::Kind::ExtraVariableRhs,
                          "variable " + v + " occurs only on the right (rule " +
                              std::to_string(r.index) + ": " + r.to_string() + ")");
    collect_signature(r.lhs, signature_, r);
    collect_signature(r.rhs, signature_, r);
  }
}

Trs Trs::from_pairs(const std::vector<std::pair<Term, Term>>& rules) {
  std::vector<Rule> out;
  out.reserve(rules.size());
  for (std::size_t i = 0; i < rules.size(); ++i) out.push_back(Rule{i, rules[i].first, rules[i].second});
  return Trs(std::move(out));
}

const Rule* Trs::find(std::size_t index) const {
  for (const Rule& r : rules_)
    if (r.index == index) return &r;
  return nullptr;
}

bool Trs::left_linear() const {
  return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return classify(r).left_linear; });
}

bool Trs::linear() const {
  return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return classify(r).linear(); });
}

std::string Trs::to_string() const {
  std::string out;
  for (const Rule& r : rules_) out += std::to_string(r.index) + ": " + r.to_string() + "\n";
  return out;
}

Trs merge_distinct(const std::vector<const Trs*>& parts) {
  std::vector<Rule> out;
  std::set<std::pair<Term, Term>> seen;
  for (const Trs* part : parts)
    for (const Rule& r : *part)
      if (seen.insert(canonical_rule(r)).second) out.push_back(Rule{out.size(), r.lhs, r.rhs});
  return Trs(std::move(out));
}

SplitTrs split_duplicating(const Trs& trs) {
  std::vector<Rule> dup, nondup;
  for (const Rule& r : trs) (classify(r).duplicating ? dup : nondup).push_back(r);
  return {Trs(std::move(dup)), Trs(std::move(nondup))};
}

// ---------------------------------------------------------------------------
// Rewriting

namespace {

template <typename Visit>
bool visit_redexes(const Trs& trs, const Term& root, const Term& t, Position& here, Visit&& visit) {
  if (t.is_var()) return true;
  for (const Rule& r : trs) {
    if (auto sigma = match(r.lhs, t)) {
      if (!visit(Step{r.index, here, replace_at(root, here, sigma->apply(r.rhs))})) return false;
    }
  }
  for (std::size_t i = 0; i < t.arity(); ++i) {
    here.path.push_back(static_cast<int>(i + 1));
    bool go_on = visit_redexes(trs, root, t.args()[i], here, visit);
    here.path.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

std::vector<Step> one_step_reducts(const Trs& trs, const Term& t) {
  std::vector<Step> out;
  Position here;
  visit_redexes(trs, t, t, here, [&](Step s) {
    out.push_back(std::move(s));
    return true;
  });
  return out;
}

std::optional<Step> first_reduct(const Trs& trs, const Term& t) {
  std::optional<Step> found;
  Position here;
  visit_redexes(trs, t, t, here, [&](Step s) {
    found = std::move(s);
    return false;
  });
  return found;
}

bool is_normal_form(const Trs& trs, const Term& t) { return !first_reduct(trs, t).has_value(); }

TermSet reducts_within(const Trs& trs, const Term& t, std::size_t k, std::size_t budget,
                       const Deadline& deadline) {
  std::unordered_set<Term, TermHash> seen{t};
  std::vector<Term> frontier{t};
  for (std::size_t depth = 0; depth < k && !frontier.empty(); ++depth) {
    std::vector<Term> next;
    for (const Term& u : frontier) {
      deadline.check();
      for (Step& s : one_step_reducts(trs, u)) {
        if (!seen.insert(s.result).second) continue;
        if (seen.size() > budget)
          throw ResourceLimit("reduct exploration exceeded " + std::to_string(budget) + " terms");
        next.push_back(std::move(s.result));
      }
    }
    frontier = std::move(next);
  }
  return TermSet(seen.begin(), seen.end());
}

Closure reachable_closure(const Trs& trs, const Term& t, std::size_t budget, const Deadline& deadline) {
  std::unordered_set<Term, TermHash> seen{t};
  std::deque<Term> queue{t};
  while (!queue.empty()) {
    deadline.check();
    Term u = queue.front();
    queue.pop_front();
    for (Step& s : one_step_reducts(trs, u)) {
      if (!seen.insert(s.result).second) continue;
      if (seen.size() > budget) return {TermSet(seen.begin(), seen.end()), false};
      queue.push_back(std::move(s.result));
    }
  }
  return {TermSet(seen.begin(), seen.end()), true};
}

namespace {

class Developer {
 public:
  Developer(const Trs& trs, std::size_t budget) : trs_(trs), budget_(budget) {}

  const std::vector<Term>& reducts(const Term& t) {
    if (auto it = memo_.find(t); it != memo_.end()) return it->second;
    std::vector<Term> out;
    std::unordered_set<Term, TermHash> seen;
    auto add = [&](Term u) {
      if (seen.insert(u).second) {
        if (++produced_ > budget_)
          throw ResourceLimit("multistep exploration exceeded " + std::to_string(budget_) + " terms");
        out.push_back(std::move(u));
      }
    };

    if (t.is_var()) {
      add(t);
    } else {
      // congruence: every combination of argument reducts
      std::vector<const std::vector<Term>*> arg_sets;
      for (const Term& a : t.args()) arg_sets.push_back(&reducts(a));
      std::vector<Term> args(t.arity(), t);
      product(arg_sets, 0, args, [&](const std::vector<Term>& chosen) {
        add(chosen.empty() ? t : Term::app(t.name(), chosen));
      });
      // contraction at the root with developed substitution
      for (const Rule& r : trs_) {
        auto sigma = match(r.lhs, t);
        if (!sigma) continue;
        std::vector<std::string> vars = variables(r.lhs);
        std::vector<const std::vector<Term>*> var_sets;
        for (const std::string& v : vars) {
          const Term* bound = sigma->lookup(v);
          var_sets.push_back(&reducts(bound ? *bound : Term::var(v)));
        }
        std::vector<Term> values(vars.size(), t);
        product(var_sets, 0, values, [&](const std::vector<Term>& chosen) {
          Substitution tau;
          for (std::size_t i = 0; i < vars.size(); ++i) tau.bind(vars[i], chosen[i]);
          add(tau.apply(r.rhs));
        });
      }
    }
    return memo_.emplace(t, std::move(out)).first->second;
  }

 private:
  template <typename F>
  static void product(const std::vector<const std::vector<Term>*>& sets, std::size_t i,
                      std::vector<Term>& chosen, F&& emit) {
    if (i == sets.size()) {
      emit(chosen);
      return;
    }
    for (const Term& u : *sets[i]) {
      chosen[i] = u;
      product(sets, i + 1, chosen, emit);
    }
  }

  const Trs& trs_;
  std::size_t budget_;
  std::size_t produced_ = 0;
  std::unordered_map<Term, std::vector<Term>, TermHash> memo_;
};

}  // namespace

TermSet multistep_reducts(const Trs& trs, const Term& t, std::size_t budget) {
  Developer dev(trs, budget);
  const auto& out = dev.reducts(t);
  return TermSet(out.begin(), out.end());
}

Normalization normalize(const Trs& trs, const Term& t, std::size_t max_steps, const Deadline& deadline) {
  Normalization n{t, {}};
  while (auto step = first_reduct(trs, n.normal_form)) {
    if (n.steps.size() >= max_steps)
      throw ResourceLimit("normalization exceeded " + std::to_string(max_steps) + " steps");
    if ((n.steps.size() & 255) == 0) deadline.check();
    n.normal_form = step->result;
    n.steps.push_back(std::move(*step));
  }
  return n;
}

}  // namespace ddrt
