#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ddrt/errors.hpp"
#include "ddrt/term.hpp"

namespace ddrt {

/// A rewrite rule `lhs -> rhs` with a stable label.
struct Rule {
  std::size_t index = 0;
  Term lhs;
  Term rhs;

  std::string to_string() const { return lhs.to_string() + " -> " + rhs.to_string(); }

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct RuleClass {
  bool left_linear = false;
  bool right_linear = false;
  bool duplicating = false;

  bool linear() const { return left_linear && right_linear; }

  friend bool operator==(const RuleClass&, const RuleClass&) = default;
};

RuleClass classify(const Rule& r);

/// True iff the two rules are equal up to a bijective renaming of variables.
bool is_variant(const Rule& a, const Rule& b);

/// A variant of `r` whose variables avoid `taken`.  Variables not in `taken`
/// keep their names; clashing ones get the suffix `_<rule index>` (plus
/// primes if still clashing).
Rule rename_apart(const Rule& r, const std::set<std::string>& taken);

/// A finite set of rules with a consistent signature.  Rule indices are
/// distinct; systems built from a plain rule list are indexed 0..n-1.
class Trs {
 public:
  Trs() = default;
  /// Validates every rule and the signature.  Throws InvalidRule.
  explicit Trs(std::vector<Rule> rules);
  /// Indexes the rules densely in the given order.
  static Trs from_pairs(const std::vector<std::pair<Term, Term>>& rules);

  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  auto begin() const { return rules_.begin(); }
  auto end() const { return rules_.end(); }

  const Rule* find(std::size_t index) const;
  const std::map<std::string, std::size_t>& signature() const { return signature_; }

  bool left_linear() const;
  bool linear() const;

  std::string to_string() const;

 private:
  std::vector<Rule> rules_;
  std::map<std::string, std::size_t> signature_;
};

/// Union of rule lists, re-indexed 0..n-1, dropping rules that are variants
/// of an earlier one.
Trs merge_distinct(const std::vector<const Trs*>& parts);

struct SplitTrs {
  Trs duplicating;
  Trs non_duplicating;
};

/// Partition by the duplicating flag; indices are preserved.
SplitTrs split_duplicating(const Trs& trs);

/// One rewrite step: rule `rule` applied at `pos`, producing `result`.
struct Step {
  std::size_t rule = 0;
  Position pos;
  Term result;

  friend bool operator==(const Step&, const Step&) = default;
};

/// All one-step reducts, positions in pre-order (outermost-leftmost) and
/// rules in system order.
std::vector<Step> one_step_reducts(const Trs& trs, const Term& t);

/// The first reduct in the order of one_step_reducts, if any.
std::optional<Step> first_reduct(const Trs& trs, const Term& t);

bool is_normal_form(const Trs& trs, const Term& t);

inline constexpr std::size_t kDefaultNodeBudget = 100000;

/// All terms reachable from `t` in at most `k` steps (including `t`).
/// Throws ResourceLimit when more than `budget` terms are discovered.
TermSet reducts_within(const Trs& trs, const Term& t, std::size_t k,
                       std::size_t budget = kDefaultNodeBudget,
                       const Deadline& deadline = {});

struct Closure {
  TermSet terms;
  bool closed = false;  ///< false when the budget stopped the exploration
};

/// Every term reachable from `t`, as long as there are at most `budget`.
Closure reachable_closure(const Trs& trs, const Term& t, std::size_t budget,
                          const Deadline& deadline = {});

/// Complete-development reducts of `t`: the relation generated by
/// x ⇒ x, congruence, and lσ ⇒ rτ whenever σ ⇒ τ pointwise.
TermSet multistep_reducts(const Trs& trs, const Term& t,
                          std::size_t budget = kDefaultNodeBudget);

struct Normalization {
  Term normal_form;
  std::vector<Step> steps;
};

/// Rewrites outermost-leftmost until a normal form is reached.  Throws
/// ResourceLimit after `max_steps` steps.
Normalization normalize(const Trs& trs, const Term& t, std::size_t max_steps,
                        const Deadline& deadline = {});

}  // namespace ddrt
