#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ddrt/matrix_interpretation.hpp"
#include "ddrt/rewriting.hpp"

namespace ddrt {

/// Termination of `strict` relative to `weak`: no infinite sequence of
/// (→_weak* · →_strict) steps.
struct RelativeProblem {
  Trs strict;
  Trs weak;
};

struct SearchLimits {
  std::size_t node_budget = 2'000'000;
  Deadline deadline;
};

struct InterpretationFound {
  MatrixInterpretation interpretation;
  std::vector<Rule> strict_removed;  ///< rules of `strict` oriented strictly
  std::vector<Rule> weak_removed;    ///< rules of `weak` oriented strictly
};

enum class SearchStatus { Found, NoneExists, BudgetExhausted };

struct SearchOutcome {
  SearchStatus status = SearchStatus::NoneExists;
  std::optional<InterpretationFound> found;
  std::size_t nodes = 0;
};

/// Looks for an interpretation of dimension `dim` with entries in
/// [0, coef_max] that orients every rule weakly and at least one rule of
/// `strict` strictly, maximizing the number of strict-side rules oriented
/// strictly.  Among the maximal ones the first in search order (smallest
/// coefficients first) is returned.
SearchOutcome search_interpretation(const RelativeProblem& problem, std::size_t dim, std::size_t coef_max,
                                    const SearchLimits& limits = {});

/// One round of rule removal.
struct RemovalStep {
  RelativeProblem before;
  InterpretationFound found;
};

enum class ExternalAnswer { Yes, No, Unknown };

const char* to_string(ExternalAnswer a);

struct RelativeTerminationConfig {
  std::size_t dim_max = 3;
  std::size_t coef_max = 1;
  SearchLimits search;
  std::string external_prover;  ///< empty: no external tool
  std::chrono::milliseconds external_timeout{10000};
};

struct RelativeTerminationProof {
  bool proved = false;
  /// Removal rounds until the strict side became empty.
  std::vector<RemovalStep> steps;
  /// When the removal loop got stuck: how termination of strict ∪ weak was
  /// shown (rounds of the internal prover, or the external answer).
  std::vector<RemovalStep> termination_steps;
  std::optional<ExternalAnswer> external;
  std::vector<std::string> diagnostics;
};

/// Removes strictly oriented rules while the strict side is non-empty.  If
/// no interpretation helps, falls back to proving termination of
/// strict ∪ weak, first internally, then with the external tool.  Never
/// claims non-termination.
RelativeTerminationProof prove_relative_termination(const RelativeProblem& problem,
                                                    const RelativeTerminationConfig& config);

/// Termination of `trs` by rule removal alone.
RelativeTerminationProof prove_termination(const Trs& trs, const RelativeTerminationConfig& config);

/// Runs `sh -c "<command> '<file>'"` on a temporary TPDB file holding `trs`
/// and maps the first output line: YES, NO, anything else is Unknown.  An
/// empty system is trivially terminating and spawns nothing.
ExternalAnswer external_termination_check(const Trs& trs, const std::string& command,
                                          std::chrono::milliseconds timeout);

}  // namespace ddrt
