#pragma once

// Reference implementations used only by tests.  They are written for
// clarity rather than speed and share no algorithmic code with the library;
// only the Term data type is reused.

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ddrt/rewriting.hpp"
#include "ddrt/rule_labeling.hpp"

namespace oracle {

using ddrt::Term;
using Subst = std::map<std::string, Term>;
using Labels = std::vector<std::size_t>;

Term apply(const Subst& s, const Term& t);

/// Robinson unification with explicit occurs check; the result is fully
/// applied (idempotent).
std::optional<Subst> unify(const Term& s, const Term& t);

/// Syntactic matching `pattern`σ = `subject`.
std::optional<Subst> match(const Term& pattern, const Term& subject);

/// Subterm at a path of 0-based argument indices; nullopt if absent.
std::optional<Term> subterm(const Term& t, const std::vector<int>& path);
Term replace(const Term& t, const std::vector<int>& path, const Term& u);

/// Every path of `t`, pre-order.
std::vector<std::vector<int>> paths(const Term& t);

/// Parses "e" or "1.2.1" into 0-based argument indices.
std::optional<std::vector<int>> parse_position(const std::string& text);

/// The result of rewriting `t` at `path` with `lhs -> rhs`, if applicable.
std::optional<Term> rewrite_at(const Term& t, const std::vector<int>& path, const Term& lhs, const Term& rhs);

/// All one-step reducts (rule index, result).
std::vector<std::pair<std::size_t, Term>> reducts(const ddrt::Trs& trs, const Term& t);

bool normal(const ddrt::Trs& trs, const Term& t);

struct Reachable {
  std::set<Term> terms;
  bool closed = true;  ///< false if the search stopped at max_nodes
};

/// Breadth-first reachable terms, stopping after `max_nodes` or as soon as
/// every term of a non-empty `targets` has been seen.
Reachable reachable_set(const ddrt::Trs& trs, const Term& start, std::size_t max_nodes,
                        const std::set<Term>& targets = {});

/// True iff `target` is reachable from `start` within `max_nodes` visited
/// terms; nullopt if the search was cut off.
std::optional<bool> reachable(const ddrt::Trs& trs, const Term& start, const Term& target, std::size_t max_nodes);

/// Renames variables of the terms jointly to #0, #1, ... in order of first
/// occurrence and prints them separated by " | ".
std::string canonical(const std::vector<Term>& terms);

bool variant(const Term& l1, const Term& r1, const Term& l2, const Term& r2);

struct PeakOracle {
  std::size_t inner;
  std::size_t outer;
  Term source;
  Term left;   ///< inner step
  Term right;  ///< outer step
};

/// Critical peaks by brute force: each rule pair, each non-variable path of
/// the outer lhs, excluding root overlaps of a rule with itself.
std::vector<PeakOracle> critical_peaks(const ddrt::Trs& trs);

/// Critical pair steps as canonical rule strings.
std::set<std::string> cps_rules(const ddrt::Trs& trs, bool exclude_trivial);

/// All rewrite sequences of length ≤ k: (labels, end).
std::vector<std::pair<Labels, Term>> sequences(const ddrt::Trs& trs, const Term& start, std::size_t k);

bool subsequence(const Labels& a, const Labels& b);

/// Minimal k-join label pairs by exhaustive enumeration.
std::set<std::pair<Labels, Labels>> minimal_joins(const ddrt::Trs& trs, const Term& s, const Term& t, std::size_t k);

/// Every strict partial order on {0..n-1}, as relation matrices.
std::vector<std::vector<std::vector<bool>>> strict_orders(std::size_t n);

bool holds(const ddrt::PrecedenceFormula& f, const std::vector<std::vector<bool>>& gt);

/// Φ^α_β(γ) evaluated directly under the strict order `gt`.
bool phi_holds(std::size_t alpha, std::size_t beta, const Labels& gamma, const std::vector<std::vector<bool>>& gt);

/// Satisfiability by enumeration of all strict orders on n elements.
bool satisfiable(const ddrt::PrecedenceFormula& f, std::size_t n);

// ---------------------------------------------------------------------------
// Random generation over the signature {f/2, g/1, a/0, b/0} and variables
// {x, y, z}.

struct Generator {
  std::mt19937 rng;
  explicit Generator(unsigned seed) : rng(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

  Term term(int depth, const std::vector<std::string>& vars);
  Term ground(int depth) { return term(depth, {}); }
  /// A linear term using fresh variables from `pool`.
  Term linear(int depth, std::vector<std::string>& pool);
  ddrt::Rule rule(bool left_linear);
  ddrt::Trs trs(std::size_t max_rules, bool left_linear);
};

}  // namespace oracle
