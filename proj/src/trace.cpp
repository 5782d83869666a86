#include "ddrt/trace.hpp"

#include <set>

namespace ddrt {

using nlohmann::json;

json formula_to_json(const PrecedenceFormula& f) {
  using K = PrecedenceFormula::Kind;
  switch (f.kind()) {
    case K::True:
      return true;
    case K::False:
      return false;
    case K::Gt:
    case K::Geq:
      return {{"op", f.kind() == K::Gt ? ">" : ">="}, {"left", f.left()}, {"right", f.right()}};
    case K::And:
    case K::Or: {
      json args = json::array();
      for (const auto& c : f.children()) args.push_back(formula_to_json(c));
      return {{"op", f.kind() == K::And ? "and" : "or"}, {"args", std::move(args)}};
    }
  }
  return nullptr;
}

namespace {

class Writer {
 public:
  std::string term(const Term& t) {
    for (const std::string& v : variables(t)) vars_.insert(v);
    return t.to_string();
  }

  json rule(const Rule& r) {
    return {{"index", r.index}, {"label", r.index + 1}, {"lhs", term(r.lhs)}, {"rhs", term(r.rhs)}};
  }

  json rules(const Trs& trs) {
    json out = json::array();
    for (const Rule& r : trs) out.push_back(rule(r));
    return out;
  }

  json critical_pair(const CriticalPair& cp) {
    return {{"source", term(cp.source())},
            {"left", term(cp.left)},
            {"right", term(cp.right)},
            {"inner", rule(cp.origin.inner)},
            {"outer", rule(cp.origin.outer)},
            {"position", cp.origin.pos.to_string()}};
  }

  json steps(const LabelSeq& labels, const std::vector<TraceStep>& trace) {
    json out = json::array();
    for (std::size_t i = 0; i < trace.size(); ++i)
      out.push_back({{"rule", labels[i]}, {"position", trace[i].pos.to_string()}, {"term", term(trace[i].term)}});
    return out;
  }

  json instance(const JoinInstance& j) {
    auto one_based = [](const LabelSeq& s) {
      LabelSeq out;
      for (std::size_t x : s) out.push_back(x + 1);
      return out;
    };
    return {{"left", j.left},
            {"right", j.right},
            {"left_labels", one_based(j.left)},
            {"right_labels", one_based(j.right)},
            {"meet", term(j.meet)},
            {"left_steps", steps(j.left, j.left_trace)},
            {"right_steps", steps(j.right, j.right_trace)}};
  }

  static json interpretation(const MatrixInterpretation& m) {
    json symbols = json::object();
    for (const auto& [f, si] : m.symbols) {
      json matrices = json::array();
      for (const Matrix& a : si.args) {
        json rows = json::array();
        for (std::size_t r = 0; r < m.dim; ++r) {
          json row = json::array();
          for (std::size_t c = 0; c < m.dim; ++c) row.push_back(a(r, c));
          rows.push_back(std::move(row));
        }
        matrices.push_back(std::move(rows));
      }
      symbols[f] = {{"arity", si.args.size()}, {"matrices", std::move(matrices)}, {"constant", si.constant}};
    }
    return {{"dimension", m.dim}, {"symbols", std::move(symbols)}};
  }

  json removal(const RemovalStep& s) {
    auto indices = [](const std::vector<Rule>& rs) {
      std::vector<std::size_t> out;
      for (const Rule& r : rs) out.push_back(r.index);
      return out;
    };
    return {{"strict", rules(s.before.strict)},
            {"weak", rules(s.before.weak)},
            {"interpretation", interpretation(s.found.interpretation)},
            {"removed_strict", indices(s.found.strict_removed)},
            {"removed_weak", indices(s.found.weak_removed)}};
  }

  json termination(const TerminationEvidence& t) {
    json steps_json = json::array();
    for (const RemovalStep& s : t.proof.steps) steps_json.push_back(removal(s));
    json fallback = json::array();
    for (const RemovalStep& s : t.proof.termination_steps) fallback.push_back(removal(s));
    return {{"problem", {{"strict", rules(t.problem.strict)}, {"weak", rules(t.problem.weak)}}},
            {"steps", std::move(steps_json)},
            {"termination_steps", std::move(fallback)},
            {"external", t.proof.external ? json(to_string(*t.proof.external)) : json(nullptr)}};
  }

  json witness(const NonConfluenceWitness& w) {
    return {{"critical_pair", critical_pair(w.cp)},
            {"left_normal_form", term(w.left_normal_form)},
            {"right_normal_form", term(w.right_normal_form)},
            {"left_reachable", w.left_reachable},
            {"right_reachable", w.right_reachable}};
  }

  json rule_labeling(const RuleLabelingProof& p) {
    json levels = json::array();
    for (std::size_t i = 0; i < p.levels.level.size(); ++i)
      levels.push_back({{"index", i}, {"label", i + 1}, {"level", p.levels.level[i]}});
    json overlaps_json = json::array();
    for (const OverlapJoins& o : p.problem.overlaps) {
      json inst = json::array();
      for (const JoinInstance& j : o.instances) inst.push_back(instance(j));
      overlaps_json.push_back({{"critical_pair", critical_pair(o.cp)}, {"instances", std::move(inst)}});
    }
    return {{"formula", formula_to_json(p.problem.formula)},
            {"formula_text", p.problem.formula.to_string(1)},
            {"levels", std::move(levels)},
            {"overlaps", std::move(overlaps_json)}};
  }

  json joins(const std::vector<JoinEvidence>& js) {
    json out = json::array();
    for (const JoinEvidence& j : js) out.push_back({{"critical_pair", critical_pair(j.cp)}, {"join", instance(j.join)}});
    return out;
  }

  const std::set<std::string>& vars() const { return vars_; }

 private:
  std::set<std::string> vars_;
};

}  // namespace

json proof_trace(const Trs& trs, const Verdict& verdict) {
  Writer w;
  json details = json::object();
  details["rules"] = w.rules(trs);
  const bool joins_criterion = verdict.criterion && *verdict.criterion != Criterion::Orthogonal &&
                               *verdict.criterion != Criterion::RuleLabeling &&
                               *verdict.criterion != Criterion::NonConfluence;
  if (joins_criterion || !verdict.joins.empty()) details["joins"] = w.joins(verdict.joins);
  if (verdict.rule_labeling) details["rule_labeling"] = w.rule_labeling(*verdict.rule_labeling);
  if (verdict.termination) details["termination"] = w.termination(*verdict.termination);
  if (verdict.witness) details["witness"] = w.witness(*verdict.witness);
  if (verdict.criterion == Criterion::Orthogonal) details["overlaps"] = 0;
  if (!verdict.diagnostics.empty()) details["diagnostics"] = verdict.diagnostics;

  json out;
  out["verdict"] = to_string(verdict.answer);
  out["criterion"] = verdict.criterion ? json(to_string(*verdict.criterion)) : json(nullptr);
  out["variables"] = w.vars();
  out["details"] = std::move(details);
  return out;
}

}  // namespace ddrt
