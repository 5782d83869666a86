#pragma once

#include <string>
#include <vector>

#include "ddrt/rewriting.hpp"

namespace ddrt {

/// Superposition of `inner`'s left-hand side onto the function position `pos`
/// of `outer`'s left-hand side.  `inner` is already renamed apart from
/// `outer`; `mgu` unifies inner.lhs with outer.lhs|pos.
struct Overlap {
  Rule inner;
  Position pos;
  Rule outer;
  Substitution mgu;

  /// The peak term outer.lhs·mgu.
  Term source() const { return mgu.apply(outer.lhs); }
};

/// left = l₂μ[r₁μ]_p (inner step), right = r₂μ (outer step).
struct CriticalPair {
  Term left;
  Term right;
  Overlap origin;

  Term source() const { return origin.source(); }
  bool trivial() const { return left == right; }
  std::string to_string() const { return left.to_string() + " <- . -> " + right.to_string(); }
};

/// All overlaps in (outer index, position, inner index) order.  Root
/// overlaps between variants of the same rule are excluded.
std::vector<Overlap> overlaps(const Trs& trs);

CriticalPair critical_pair(const Overlap& o);
std::vector<CriticalPair> critical_pairs(const Trs& trs);

/// The critical pair steps: for every overlap both l₂μ → l₂μ[r₁μ]_p and
/// l₂μ → r₂μ, deduplicated up to renaming and indexed from 0.
Trs cps(const Trs& trs);

/// As cps, omitting both steps of overlaps whose critical pair is trivial.
Trs cps_nontrivial(const Trs& trs);

}  // namespace ddrt
