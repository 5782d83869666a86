#include "ddrt/critical_pairs.hpp"

#include <set>

namespace ddrt {

std::vector<Overlap> overlaps(const Trs& trs) {
  std::vector<Overlap> out;
  for (const Rule& outer : trs) {
    auto outer_vars = variables(outer.lhs);
    std::set<std::string> taken(outer_vars.begin(), outer_vars.end());
    for (const Position& p : positions(outer.lhs).function) {
      const Term& target = subterm_at(outer.lhs, p);
      for (const Rule& original : trs) {
        if (p.is_root() && is_variant(original, outer)) continue;
        Rule inner = rename_apart(original, taken);
        if (auto mu = unify(inner.lhs, target)) out.push_back(Overlap{inner, p, outer, *mu});
      }
    }
  }
  return out;
}

CriticalPair critical_pair(const Overlap& o) {
  Term source = o.mgu.apply(o.outer.lhs);
  return CriticalPair{replace_at(source, o.pos, o.mgu.apply(o.inner.rhs)), o.mgu.apply(o.outer.rhs), o};
}

std::vector<CriticalPair> critical_pairs(const Trs& trs) {
  std::vector<CriticalPair> out;
  for (const Overlap& o : overlaps(trs)) out.push_back(critical_pair(o));
  return out;
}

namespace {

Trs collect_steps(const Trs& trs, bool skip_trivial) {
  std::vector<Rule> steps;
  for (const CriticalPair& cp : critical_pairs(trs)) {
    if (skip_trivial && cp.trivial()) continue;
    Term source = cp.source();
    steps.push_back(Rule{steps.size(), source, cp.left});
    steps.push_back(Rule{steps.size(), source, cp.right});
  }
  Trs raw(std::move(steps));
  return merge_distinct({&raw});
}

}  // namespace

Trs cps(const Trs& trs) { return collect_steps(trs, false); }

Trs cps_nontrivial(const Trs& trs) { return collect_steps(trs, true); }

}  // namespace ddrt
