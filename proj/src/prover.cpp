#include "ddrt/prover.hpp"

#include <algorithm>
#include <array>

namespace ddrt {

const char* to_string(Answer a) {
  switch (a) {
    case Answer::Yes:
      return "YES";
    case Answer::No:
      return "NO";
    case Answer::Maybe:
      return "MAYBE";
  }
  return "?";
}

namespace {

constexpr std::array<std::pair<Criterion, const char*>, 7> kNames{{
    {Criterion::NonConfluence, "nc"},
    {Criterion::Orthogonal, "ortho"},
    {Criterion::RuleLabeling, "rl"},
    {Criterion::KnuthBendix, "kb"},
    {Criterion::DuplicatingSplit, "dd1"},
    {Criterion::CpsRelative, "dd2"},
    {Criterion::CpsRelativeNontrivial, "dd2x"},
}};

Verdict maybe(std::string reason) {
  Verdict v;
  v.diagnostics.push_back(std::move(reason));
  return v;
}

Verdict yes(Criterion c) {
  Verdict v;
  v.answer = Answer::Yes;
  v.criterion = c;
  return v;
}

RelativeTerminationConfig termination_config(const Config& config, const Deadline& deadline) {
  RelativeTerminationConfig rt;
  rt.dim_max = config.dim_max;
  rt.coef_max = config.coef_max;
  rt.search = {config.search_budget, deadline};
  rt.external_prover = config.external_prover;
  rt.external_timeout = config.external_timeout;
  return rt;
}

JoinLimits join_limits(const Config& config, const Deadline& deadline) {
  return {config.node_budget, deadline};
}

std::vector<TraceStep> trace_of(const Normalization& n) {
  std::vector<TraceStep> out;
  for (const Step& s : n.steps) out.push_back({s.pos, s.result});
  return out;
}

LabelSeq labels_of(const Normalization& n) {
  LabelSeq out;
  for (const Step& s : n.steps) out.push_back(s.rule);
  return out;
}

/// Every critical pair closed within k steps per side, or the reason why not.
std::optional<std::string> join_all(const Trs& trs, const Config& config, const Deadline& deadline,
                                    std::vector<JoinEvidence>& out) {
  for (CriticalPair& cp : critical_pairs(trs)) {
    auto j = joinable_within(trs, cp.left, cp.right, config.k, join_limits(config, deadline));
    if (!j)
      return "critical pair " + cp.to_string() + " is not joinable within " + std::to_string(config.k) + " steps";
    out.push_back({std::move(cp), std::move(*j)});
  }
  return std::nullopt;
}

Verdict relative_criterion(Criterion c, const Trs& trs, RelativeProblem problem, const Config& config,
                           const Deadline& deadline) {
  if (!trs.left_linear()) return maybe("not left-linear");
  Verdict v;
  if (auto failure = join_all(trs, config, deadline, v.joins)) return maybe(*failure);
  RelativeTerminationProof proof = prove_relative_termination(problem, termination_config(config, deadline));
  if (!proof.proved) {
    Verdict m = maybe("relative termination not shown");
    m.diagnostics.insert(m.diagnostics.end(), proof.diagnostics.begin(), proof.diagnostics.end());
    return m;
  }
  v.answer = Answer::Yes;
  v.criterion = c;
  v.termination = TerminationEvidence{std::move(problem), std::move(proof)};
  return v;
}

}  // namespace

const char* to_string(Criterion c) {
  for (const auto& [k, name] : kNames)
    if (k == c) return name;
  return "?";
}

std::optional<Criterion> criterion_from_string(const std::string& name) {
  for (const auto& [k, n] : kNames)
    if (name == n) return k;
  return std::nullopt;
}

const std::vector<Criterion>& default_criteria() {
  static const std::vector<Criterion> order = [] {
    std::vector<Criterion> out;
    for (const auto& [k, name] : kNames) out.push_back(k);
    return out;
  }();
  return order;
}

Config Config::scaled(std::size_t factor) const {
  Config c = *this;
  c.node_budget *= factor;
  c.closure_budget *= factor;
  c.max_instances *= factor;
  c.search_budget *= factor;
  c.normalize_steps *= factor;
  return c;
}

Verdict check_orthogonal(const Trs& trs) {
  if (!trs.left_linear()) return maybe("not left-linear");
  std::size_t n = overlaps(trs).size();
  if (n) return maybe(std::to_string(n) + " overlaps");
  return yes(Criterion::Orthogonal);
}

Verdict check_knuth_bendix(const Trs& trs, const Config& config, const Deadline& deadline) {
  RelativeProblem problem{trs, Trs()};
  RelativeTerminationProof proof = prove_relative_termination(problem, termination_config(config, deadline));
  if (!proof.proved) {
    Verdict m = maybe("termination not shown");
    m.diagnostics.insert(m.diagnostics.end(), proof.diagnostics.begin(), proof.diagnostics.end());
    return m;
  }
  Verdict v;
  for (CriticalPair& cp : critical_pairs(trs)) {
    Normalization l = normalize(trs, cp.left, config.normalize_steps, deadline);
    Normalization r = normalize(trs, cp.right, config.normalize_steps, deadline);
    if (l.normal_form != r.normal_form) {
      Verdict no;
      no.answer = Answer::No;
      no.criterion = Criterion::KnuthBendix;
      no.witness = NonConfluenceWitness{std::move(cp), l.normal_form, r.normal_form, 0, 0};
      no.joins.push_back({no.witness->cp, JoinInstance{labels_of(l), labels_of(r), l.normal_form, trace_of(l),
                                                       trace_of(r)}});
      return no;
    }
    JoinInstance j{labels_of(l), labels_of(r), l.normal_form, trace_of(l), trace_of(r)};
    v.joins.push_back({std::move(cp), std::move(j)});
  }
  v.answer = Answer::Yes;
  v.criterion = Criterion::KnuthBendix;
  v.termination = TerminationEvidence{std::move(problem), std::move(proof)};
  return v;
}

Verdict check_rule_labeling(const Trs& trs, const Config& config, const Deadline& deadline) {
  if (!trs.linear()) return maybe("not linear");
  RuleLabelingLimits limits{join_limits(config, deadline), config.max_instances};
  RuleLabelingProblem problem = build_rl_problem(trs, config.k, limits);
  for (const OverlapJoins& o : problem.overlaps)
    if (o.instances.empty())
      return maybe("critical pair " + o.cp.to_string() + " is not joinable within " + std::to_string(config.k) +
                   " steps");
  std::size_t n = 0;
  for (const Rule& r : trs) n = std::max(n, r.index + 1);
  auto levels = solve_precedence(problem.formula, n);
  if (!levels) return maybe("no rule precedence satisfies the labeling constraints");
  Verdict v = yes(Criterion::RuleLabeling);
  v.rule_labeling = RuleLabelingProof{std::move(problem), std::move(*levels)};
  return v;
}

Verdict check_dd_l1(const Trs& trs, const Config& config, const Deadline& deadline) {
  Trs steps = cps(trs);
  SplitTrs split = split_duplicating(trs);
  RelativeProblem problem{merge_distinct({&steps, &split.duplicating}), split.non_duplicating};
  return relative_criterion(Criterion::DuplicatingSplit, trs, std::move(problem), config, deadline);
}

Verdict check_dd_l2(const Trs& trs, const Config& config, bool exclude_trivial, const Deadline& deadline) {
  RelativeProblem problem{exclude_trivial ? cps_nontrivial(trs) : cps(trs), trs};
  return relative_criterion(exclude_trivial ? Criterion::CpsRelativeNontrivial : Criterion::CpsRelative, trs,
                            std::move(problem), config, deadline);
}

Verdict check_nonconfluence(const Trs& trs, const Config& config, const Deadline& deadline) {
  for (const CriticalPair& cp : critical_pairs(trs)) {
    if (cp.trivial()) continue;
    Closure left = reachable_closure(trs, cp.left, config.closure_budget, deadline);
    if (!left.closed) continue;
    Closure right = reachable_closure(trs, cp.right, config.closure_budget, deadline);
    if (!right.closed) continue;
    bool disjoint = std::none_of(left.terms.begin(), left.terms.end(),
                                 [&](const Term& t) { return right.terms.count(t) > 0; });
    if (!disjoint) continue;
    auto normal = [&](const TermSet& s) -> std::optional<Term> {
      for (const Term& t : s)
        if (is_normal_form(trs, t)) return t;
      return std::nullopt;
    };
    auto u = normal(left.terms);
    auto w = normal(right.terms);
    if (!u || !w) continue;
    Verdict v;
    v.answer = Answer::No;
    v.criterion = Criterion::NonConfluence;
    v.witness = NonConfluenceWitness{cp, *u, *w, left.terms.size(), right.terms.size()};
    return v;
  }
  return maybe("no critical pair with disjoint closed reduct sets");
}

Verdict run_criterion(Criterion c, const Trs& trs, const Config& config, const Deadline& deadline) {
  Verdict v;
  try {
    switch (c) {
      case Criterion::NonConfluence:
        v = check_nonconfluence(trs, config, deadline);
        break;
      case Criterion::Orthogonal:
        v = check_orthogonal(trs);
        break;
      case Criterion::RuleLabeling:
        v = check_rule_labeling(trs, config, deadline);
        break;
      case Criterion::KnuthBendix:
        v = check_knuth_bendix(trs, config, deadline);
        break;
      case Criterion::DuplicatingSplit:
        v = check_dd_l1(trs, config, deadline);
        break;
      case Criterion::CpsRelative:
        v = check_dd_l2(trs, config, false, deadline);
        break;
      case Criterion::CpsRelativeNontrivial:
        v = check_dd_l2(trs, config, true, deadline);
        break;
    }
  } catch (const ResourceLimit& e) {
    v = maybe(e.what());
  } catch (const Timeout&) {
    v = maybe("timeout");
  }
  for (std::string& d : v.diagnostics) d = std::string(to_string(c)) + ": " + d;
  return v;
}

Verdict prove(const Trs& trs, const Config& config) {
  const Deadline deadline(config.timeout);
  Verdict combined;
  for (Criterion c : config.criteria) {
    Verdict v = run_criterion(c, trs, config, deadline);
    if (v.answer != Answer::Maybe) return v;
    combined.diagnostics.insert(combined.diagnostics.end(), v.diagnostics.begin(), v.diagnostics.end());
    if (deadline.expired()) {
      combined.diagnostics.push_back("global timeout");
      break;
    }
  }
  return combined;
}

}  // namespace ddrt
