#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ddrt/rewriting.hpp"

namespace ddrt {

using LabelSeq = std::vector<std::size_t>;

/// One rewrite step of a join trace: where it happened and what it produced.
struct TraceStep {
  Position pos;
  Term term;
};

/// A k-join instance of (s, t):
///   s →γ₁ … →γₘ meet ←δₙ … ←δ₁ t
/// `left` lists γ in application order from s; `right` lists δ in
/// application order from t, so δ₁ is the step taken from t.
struct JoinInstance {
  LabelSeq left;
  LabelSeq right;
  Term meet;
  std::vector<TraceStep> left_trace;
  std::vector<TraceStep> right_trace;
};

/// True iff `a` is a (not necessarily contiguous) subsequence of `b`.
bool embedding_leq(const LabelSeq& a, const LabelSeq& b);

struct JoinLimits {
  std::size_t node_budget = kDefaultNodeBudget;  ///< per side
  Deadline deadline;
};

/// Some join instance with both sides of length ≤ k, preferring the least
/// total length.  Absence is not a proof of non-joinability.  Throws
/// ResourceLimit when a side outgrows the node budget.
std::optional<JoinInstance> joinable_within(const Trs& trs, const Term& s, const Term& t,
                                            std::size_t k, const JoinLimits& limits = {});

/// All k-join instances (identified by their label sequences), without the
/// minimality filter.  Sorted by total length, then lexicographically.
std::vector<JoinInstance> all_join_instances(const Trs& trs, const Term& s, const Term& t,
                                             std::size_t k, const JoinLimits& limits = {});

/// J_k(s,t): the k-join instances that are minimal under the product of
/// the embedding order.
std::vector<JoinInstance> join_instances(const Trs& trs, const Term& s, const Term& t,
                                         std::size_t k, const JoinLimits& limits = {});

}  // namespace ddrt
