#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ddrt/critical_pairs.hpp"
#include "ddrt/joinability.hpp"
#include "ddrt/relative_termination.hpp"
#include "ddrt/rule_labeling.hpp"

namespace ddrt {

enum class Answer { Yes, No, Maybe };

const char* to_string(Answer a);

enum class Criterion {
  NonConfluence,  ///< nc: critical pair with disjoint closed reduct sets
  Orthogonal,     ///< ortho
  RuleLabeling,   ///< rl: decreasing rule labeling, linear systems
  KnuthBendix,    ///< kb: termination and joinable critical pairs
  DuplicatingSplit,  ///< dd1: (cps ∪ R_d)/R_nd terminating, left-linear
  CpsRelative,       ///< dd2: cps/R terminating, left-linear
  CpsRelativeNontrivial,  ///< dd2x: as dd2, ignoring trivial critical pairs
};

const char* to_string(Criterion c);
std::optional<Criterion> criterion_from_string(const std::string& name);
/// nc, ortho, rl, kb, dd1, dd2, dd2x
const std::vector<Criterion>& default_criteria();

struct Config {
  std::size_t k = 4;
  std::size_t dim_max = 3;
  std::size_t coef_max = 1;
  std::size_t node_budget = kDefaultNodeBudget;
  std::size_t closure_budget = 2'000;  ///< reduct sets explored by nc
  std::size_t max_instances = 64;
  std::size_t search_budget = 2'000'000;
  std::size_t normalize_steps = 10'000;
  std::string external_prover;
  std::chrono::milliseconds external_timeout{10'000};
  std::chrono::milliseconds timeout{60'000};
  std::vector<Criterion> criteria = default_criteria();

  /// Every node, step and instance budget multiplied by `factor`.
  Config scaled(std::size_t factor) const;
};

/// A critical pair together with the valley that closes it.
struct JoinEvidence {
  CriticalPair cp;
  JoinInstance join;
};

struct RuleLabelingProof {
  RuleLabelingProblem problem;
  LevelMap levels;
};

struct TerminationEvidence {
  RelativeProblem problem;
  RelativeTerminationProof proof;
};

/// Two distinct normal forms reachable from the two sides of a critical
/// pair, whose reduct sets are finite and disjoint.
struct NonConfluenceWitness {
  CriticalPair cp;
  Term left_normal_form;
  Term right_normal_form;
  std::size_t left_reachable = 0;
  std::size_t right_reachable = 0;
};

struct Verdict {
  Answer answer = Answer::Maybe;
  std::optional<Criterion> criterion;
  std::vector<std::string> diagnostics;

  std::vector<JoinEvidence> joins;
  std::optional<RuleLabelingProof> rule_labeling;
  std::optional<TerminationEvidence> termination;
  std::optional<NonConfluenceWitness> witness;
};

Verdict check_orthogonal(const Trs& trs);
Verdict check_knuth_bendix(const Trs& trs, const Config& config, const Deadline& deadline = {});
Verdict check_rule_labeling(const Trs& trs, const Config& config, const Deadline& deadline = {});
Verdict check_dd_l1(const Trs& trs, const Config& config, const Deadline& deadline = {});
Verdict check_dd_l2(const Trs& trs, const Config& config, bool exclude_trivial, const Deadline& deadline = {});
Verdict check_nonconfluence(const Trs& trs, const Config& config, const Deadline& deadline = {});

/// One criterion; budget overruns and the deadline turn into Maybe.
Verdict run_criterion(Criterion c, const Trs& trs, const Config& config, const Deadline& deadline);

/// The enabled criteria in order under one shared deadline; the first Yes
/// or No wins, otherwise Maybe with every criterion's diagnostics.
Verdict prove(const Trs& trs, const Config& config);

}  // namespace ddrt
