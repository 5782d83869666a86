#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ddrt/critical_pairs.hpp"
#include "ddrt/joinability.hpp"

namespace ddrt {

/// Precedence constraint over rule indices:
///   φ ::= ⊤ | ⊥ | φ ∨ φ | φ ∧ φ | α > β | α ⩾ β
/// where ⩾ is the reflexive closure of >.
class PrecedenceFormula {
 public:
  enum class Kind { True, False, And, Or, Gt, Geq };

  static PrecedenceFormula top() { return PrecedenceFormula(Kind::True); }
  static PrecedenceFormula bottom() { return PrecedenceFormula(Kind::False); }
  static PrecedenceFormula gt(std::size_t a, std::size_t b) { return atom(Kind::Gt, a, b); }
  static PrecedenceFormula geq(std::size_t a, std::size_t b) { return atom(Kind::Geq, a, b); }
  /// Conjunction; flattens nested conjunctions, drops ⊤, absorbs ⊥ and
  /// collapses a single operand.
  static PrecedenceFormula conj(std::vector<PrecedenceFormula> parts);
  /// Disjunction, dual to conj.
  static PrecedenceFormula disj(std::vector<PrecedenceFormula> parts);

  Kind kind() const { return kind_; }
  const std::vector<PrecedenceFormula>& children() const { return children_; }
  std::size_t left() const { return left_; }
  std::size_t right() const { return right_; }

  /// Rule indices are printed shifted by `label_offset` (1 gives the 1-based
  /// labels used in prose).
  std::string to_string(std::size_t label_offset = 0) const;

  friend bool operator==(const PrecedenceFormula&, const PrecedenceFormula&) = default;

 private:
  explicit PrecedenceFormula(Kind k) : kind_(k) {}
  static PrecedenceFormula atom(Kind k, std::size_t a, std::size_t b) {
    PrecedenceFormula f(k);
    f.left_ = a;
    f.right_ = b;
    return f;
  }
  static PrecedenceFormula junction(Kind k, std::vector<PrecedenceFormula> parts);

  Kind kind_;
  std::vector<PrecedenceFormula> children_;
  std::size_t left_ = 0;
  std::size_t right_ = 0;
};

/// Level assignment for rules; the induced order is level(a) > level(b).
struct LevelMap {
  std::vector<unsigned> level;

  unsigned operator[](std::size_t rule) const { return level.at(rule); }
  friend bool operator==(const LevelMap&, const LevelMap&) = default;
};

/// Gt(a,b) ⇔ level a > level b; Geq(a,b) ⇔ a = b or level a > level b.
bool evaluate(const PrecedenceFormula& f, const LevelMap& levels);

/// Φ^α_β(γ) = ⋁_{0≤i≤n} (⋀_{j<i} α>γ_j ∧ Ψ_i) with Ψ_n = ⊤ and
/// Ψ_i = β⩾γ_i ∧ ⋀_{i<j<n} (β>γ_j ∨ α>γ_j) for i < n (γ is 0-based).
PrecedenceFormula build_phi(std::size_t alpha, std::size_t beta, const LabelSeq& gammas);

struct RuleLabelingLimits {
  JoinLimits join;
  std::size_t max_instances = 64;  ///< per overlap
};

/// The join instances that feed one overlap's disjunction.
struct OverlapJoins {
  CriticalPair cp;
  std::vector<JoinInstance> instances;
};

struct RuleLabelingProblem {
  PrecedenceFormula formula = PrecedenceFormula::top();
  std::vector<OverlapJoins> overlaps;
};

/// RL_k: for every overlap (α, p, β), the disjunction over J_k(cp) of
/// Φ^α_β(γ) ∧ Φ^β_α(δ).  An overlap without join instances contributes ⊥.
RuleLabelingProblem build_rl_problem(const Trs& trs, std::size_t k, const RuleLabelingLimits& limits = {});
PrecedenceFormula build_rl(const Trs& trs, std::size_t k, const RuleLabelingLimits& limits = {});

/// A level map over rules 0..n_rules-1 satisfying `f`, or nothing if `f`
/// is unsatisfiable.  Among solutions the one whose levels are
/// lexicographically smallest (rule 0 first) is preferred.
std::optional<LevelMap> solve_precedence(const PrecedenceFormula& f, std::size_t n_rules);

}  // namespace ddrt
