#pragma once

#include "json.hpp"

#include "ddrt/prover.hpp"

namespace ddrt {

/// Proof trace: {"verdict", "criterion", "variables", "details"}.
///
/// Rules appear as {"index", "label", "lhs", "rhs"} where label = index + 1.
/// Terms are printed in TPDB syntax; "variables" lists every identifier
/// used as a variable anywhere in the trace.  See README for the layout of
/// "details" per criterion.
nlohmann::json proof_trace(const Trs& trs, const Verdict& verdict);

nlohmann::json formula_to_json(const PrecedenceFormula& f);

}  // namespace ddrt
