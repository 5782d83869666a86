#include "ddrt/joinability.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

namespace ddrt {

bool embedding_leq(const LabelSeq& a, const LabelSeq& b) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < b.size() && i < a.size(); ++j)
    if (a[i] == b[j]) ++i;
  return i == a.size();
}

namespace {

struct Path {
  LabelSeq labels;
  Term end;
  std::vector<TraceStep> trace;
};

bool join_order(const JoinInstance& a, const JoinInstance& b) {
  const std::size_t ta = a.left.size() + a.right.size(), tb = b.left.size() + b.right.size();
  if (ta != tb) return ta < tb;
  const std::size_t ma = std::max(a.left.size(), a.right.size()), mb = std::max(b.left.size(), b.right.size());
  if (ma != mb) return ma < mb;
  return std::tie(a.left, a.right) < std::tie(b.left, b.right);
}

void over_budget(std::size_t budget) {
  throw ResourceLimit("join search exceeded " + std::to_string(budget) + " nodes");
}

/// Shortest path (first discovered) to every term within k steps.
std::unordered_map<Term, Path, TermHash> shortest_paths(const Trs& trs, const Term& start,
                                                        std::size_t k, const JoinLimits& limits) {
  std::unordered_map<Term, Path, TermHash> seen;
  seen.emplace(start, Path{{}, start, {}});
  std::vector<Term> frontier{start};
  for (std::size_t depth = 0; depth < k && !frontier.empty(); ++depth) {
    std::vector<Term> next;
    for (const Term& u : frontier) {
      limits.deadline.check();
      const Path base = seen.at(u);
      for (Step& s : one_step_reducts(trs, u)) {
        if (seen.count(s.result)) continue;
        Path p = base;
        p.labels.push_back(s.rule);
        p.trace.push_back({s.pos, s.result});
        p.end = s.result;
        seen.emplace(s.result, std::move(p));
        if (seen.size() > limits.node_budget) over_budget(limits.node_budget);
        next.push_back(std::move(s.result));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

/// Every distinct (label sequence, end term) of length ≤ k.
std::vector<Path> all_paths(const Trs& trs, const Term& start, std::size_t k, const JoinLimits& limits) {
  std::vector<Path> out{Path{{}, start, {}}};
  std::size_t layer_begin = 0;
  for (std::size_t depth = 0; depth < k; ++depth) {
    std::size_t layer_end = out.size();
    std::set<std::pair<LabelSeq, Term>> fresh;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      limits.deadline.check();
      for (Step& s : one_step_reducts(trs, out[i].end)) {
        LabelSeq labels = out[i].labels;
        labels.push_back(s.rule);
        if (!fresh.emplace(labels, s.result).second) continue;
        Path p{std::move(labels), s.result, out[i].trace};
        p.trace.push_back({s.pos, s.result});
        out.push_back(std::move(p));
        if (out.size() > limits.node_budget) over_budget(limits.node_budget);
      }
    }
    if (out.size() == layer_end) break;
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace

std::optional<JoinInstance> joinable_within(const Trs& trs, const Term& s, const Term& t, std::size_t k,
                                            const JoinLimits& limits) {
  auto from_s = shortest_paths(trs, s, k, limits);
  auto from_t = shortest_paths(trs, t, k, limits);
  std::optional<JoinInstance> best;
  for (const auto& [term, left] : from_s) {
    auto it = from_t.find(term);
    if (it == from_t.end()) continue;
    const Path& right = it->second;
    JoinInstance candidate{left.labels, right.labels, term, left.trace, right.trace};
    if (!best || join_order(candidate, *best) ||
        (!join_order(*best, candidate) && candidate.meet < best->meet))
      best = std::move(candidate);
  }
  return best;
}

std::vector<JoinInstance> all_join_instances(const Trs& trs, const Term& s, const Term& t, std::size_t k,
                                             const JoinLimits& limits) {
  std::vector<Path> from_s = all_paths(trs, s, k, limits);
  std::vector<Path> from_t = all_paths(trs, t, k, limits);
  std::unordered_map<Term, std::vector<const Path*>, TermHash> by_end;
  for (const Path& p : from_t) by_end[p.end].push_back(&p);

  std::map<std::pair<LabelSeq, LabelSeq>, JoinInstance> found;
  for (const Path& left : from_s) {
    auto it = by_end.find(left.end);
    if (it == by_end.end()) continue;
    for (const Path* right : it->second) {
      auto key = std::pair(left.labels, right->labels);
      if (found.count(key)) continue;
      found.emplace(std::move(key),
                    JoinInstance{left.labels, right->labels, left.end, left.trace, right->trace});
      if (found.size() > limits.node_budget) over_budget(limits.node_budget);
    }
  }
  std::vector<JoinInstance> out;
  out.reserve(found.size());
  for (auto& [key, j] : found) out.push_back(std::move(j));
  std::stable_sort(out.begin(), out.end(), join_order);
  return out;
}

std::vector<JoinInstance> join_instances(const Trs& trs, const Term& s, const Term& t, std::size_t k,
                                         const JoinLimits& limits) {
  std::vector<JoinInstance> all = all_join_instances(trs, s, t, k, limits);
  std::vector<JoinInstance> minimal;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool dominated = false;
    // A dominating instance is strictly shorter, hence sorted earlier.
    for (std::size_t j = 0; j < i && !dominated; ++j) {
      dominated = embedding_leq(all[j].left, all[i].left) && embedding_leq(all[j].right, all[i].right);
    }
    if (!dominated) minimal.push_back(all[i]);
    limits.deadline.check();
  }
  return minimal;
}

}  // namespace ddrt
