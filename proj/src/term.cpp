#include "ddrt/term.hpp"

#include <algorithm>
#include <sstream>

#include "ddrt/errors.hpp"

namespace ddrt {

struct Term::Node {
  bool is_var;
  std::string name;
  std::vector<Term> args;
  std::size_t hash;
  std::size_t size;
  std::size_t depth;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::var(std::string name) {
  std::size_t h = mix(0x51ed27, std::hash<std::string>{}(name));
  return Term(std::make_shared<const Node>(Node{true, std::move(name), {}, h, 1, 1}));
}

Term Term::app(std::string symbol, std::vector<Term> args) {
  std::size_t h = mix(0x2545f491, std::hash<std::string>{}(symbol));
  std::size_t size = 1;
  std::size_t depth = 0;
  for (const Term& a : args) {
    h = mix(h, a.hash());
    size += a.size();
    depth = std::max(depth, a.depth());
  }
  return Term(std::make_shared<const Node>(
      Node{false, std::move(symbol), std::move(args), h, size, depth + 1}));
}

bool Term::is_var() const { return node_->is_var; }
const std::string& Term::name() const { return node_->name; }
std::span<const Term> Term::args() const { return node_->args; }
std::size_t Term::hash() const { return node_->hash; }
std::size_t Term::size() const { return node_->size; }
std::size_t Term::depth() const { return node_->depth; }

std::string Term::to_string() const {
  if (is_var() || args().empty()) return name();
  std::string out = name() + "(";
  bool first = true;
  for (const Term& a : args()) {
    if (!first) out += ",";
    first = false;
    out += a.to_string();
  }
  return out + ")";
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.is_var() != b.is_var() || a.name() != b.name() ||
      a.arity() != b.arity())
    return false;
  return std::equal(a.args().begin(), a.args().end(), b.args().begin());
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.is_var() != b.is_var())
    return a.is_var() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  if (auto c = a.arity() <=> b.arity(); c != 0) return c;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (auto c = a.args()[i] <=> b.args()[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Positions

Position Position::child(int index) const {
  Position p = *this;
  p.path.push_back(index);
  return p;
}

bool Position::is_prefix_of(const Position& other) const {
  return path.size() <= other.path.size() &&
         std::equal(path.begin(), path.end(), other.path.begin());
}

std::string Position::to_string() const {
  if (path.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(path[i]);
  }
  return out;
}

namespace {

void collect_positions(const Term& t, Position& here, PositionSets& out) {
  if (t.is_var()) {
    out.variable.push_back(here);
    return;
  }
  out.function.push_back(here);
  for (std::size_t i = 0; i < t.arity(); ++i) {
    here.path.push_back(static_cast<int>(i + 1));
    collect_positions(t.args()[i], here, out);
    here.path.pop_back();
  }
}

Term replace_rec(const Term& t, const Position& p, std::size_t depth, const Term& u) {
  if (depth == p.path.size()) return u;
  int i = p.path[depth];
  if (t.is_var() || i < 1 || static_cast<std::size_t>(i) > t.arity())
    throw InvalidPosition("position " + p.to_string() + " is not valid in " + t.to_string());
  std::vector<Term> args(t.args().begin(), t.args().end());
  args[i - 1] = replace_rec(args[i - 1], p, depth + 1, u);
  return Term::app(t.name(), std::move(args));
}

}  // namespace

PositionSets positions(const Term& t) {
  PositionSets out;
  Position here;
  collect_positions(t, here, out);
  return out;
}

const Term& subterm_at(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (int i : p.path) {
    if (cur->is_var() || i < 1 || static_cast<std::size_t>(i) > cur->arity())
      throw InvalidPosition("position " + p.to_string() + " is not valid in " + t.to_string());
    cur = &cur->args()[i - 1];
  }
  return *cur;
}

Term replace_at(const Term& t, const Position& p, const Term& u) {
  return replace_rec(t, p, 0, u);
}

// ---------------------------------------------------------------------------
// Variables

namespace {

void collect_vars(const Term& t, std::vector<std::string>& seen) {
  if (t.is_var()) {
    if (std::find(seen.begin(), seen.end(), t.name()) == seen.end()) seen.push_back(t.name());
    return;
  }
  for (const Term& a : t.args()) collect_vars(a, seen);
}

void count_vars(const Term& t, std::map<std::string, std::size_t>& counts) {
  if (t.is_var()) {
    ++counts[t.name()];
    return;
  }
  for (const Term& a : t.args()) count_vars(a, counts);
}

}  // namespace

std::vector<std::string> variables(const Term& t) {
  std::vector<std::string> seen;
  collect_vars(t, seen);
  return seen;
}

std::map<std::string, std::size_t> variable_occurrences(const Term& t) {
  std::map<std::string, std::size_t> counts;
  count_vars(t, counts);
  return counts;
}

bool is_linear(const Term& t) {
  for (const auto& [v, n] : variable_occurrences(t))
    if (n > 1) return false;
  return true;
}

bool is_ground(const Term& t) {
  if (t.is_var()) return false;
  return std::all_of(t.args().begin(), t.args().end(), [](const Term& a) { return is_ground(a); });
}

// ---------------------------------------------------------------------------
// Substitutions

Substitution::Substitution(std::initializer_list<std::pair<const std::string, Term>> init) {
  for (const auto& [v, t] : init) bind(v, t);
}

void Substitution::bind(const std::string& var, Term value) {
  if (value.is_var() && value.name() == var) {
    map_.erase(var);
    return;
  }
  map_.insert_or_assign(var, std::move(value));
}

const Term* Substitution::lookup(const std::string& var) const {
  auto it = map_.find(var);
  return it == map_.end() ? nullptr : &it->second;
}

Term Substitution::apply(const Term& t) const {
  if (map_.empty()) return t;
  if (t.is_var()) {
    const Term* b = lookup(t.name());
    return b ? *b : t;
  }
  if (t.arity() == 0) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(apply(a));
    changed = changed || !(args.back() == a);
  }
  return changed ? Term::app(t.name(), std::move(args)) : t;
}

Substitution Substitution::then(const Substitution& other) const {
  Substitution out;
  for (const auto& [v, t] : map_) out.bind(v, other.apply(t));
  for (const auto& [v, t] : other.map_)
    if (!map_.count(v)) out.bind(v, t);
  return out;
}

std::string Substitution::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : map_) {
    if (!first) out += ", ";
    first = false;
    out += v + " -> " + t.to_string();
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Matching and unification

namespace {

bool occurs(const std::string& var, const Term& t) {
  if (t.is_var()) return t.name() == var;
  return std::any_of(t.args().begin(), t.args().end(),
                     [&](const Term& a) { return occurs(var, a); });
}

}  // namespace

std::optional<Substitution> match(const Term& pattern, const Term& subject) {
  // Bindings are collected in a plain map first: an identity binding x ↦ x
  // is not stored in a Substitution but still constrains later occurrences.
  Substitution sigma;
  std::map<std::string, Term> seen;
  struct Frame {
    const Term* p;
    const Term* s;
  };
  std::vector<Frame> stack{{&pattern, &subject}};
  while (!stack.empty()) {
    auto [p, s] = stack.back();
    stack.pop_back();
    if (p->is_var()) {
      auto [it, fresh] = seen.emplace(p->name(), *s);
      if (!fresh && !(it->second == *s)) return std::nullopt;
      continue;
    }
    if (s->is_var() || p->name() != s->name() || p->arity() != s->arity()) return std::nullopt;
    for (std::size_t i = p->arity(); i-- > 0;) stack.push_back({&p->args()[i], &s->args()[i]});
  }
  for (auto& [v, t] : seen) sigma.bind(v, t);
  return sigma;
}

std::optional<Substitution> unify(const Term& s, const Term& t) {
  Substitution mgu;
  std::vector<std::pair<Term, Term>> work{{s, t}};
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    a = mgu.apply(a);
    b = mgu.apply(b);
    if (a == b) continue;
    if (!a.is_var() && b.is_var()) std::swap(a, b);
    if (a.is_var()) {
      if (occurs(a.name(), b)) return std::nullopt;
      Substitution single;
      single.bind(a.name(), b);
      mgu = mgu.then(single);
      continue;
    }
    if (a.name() != b.name() || a.arity() != b.arity()) return std::nullopt;
    for (std::size_t i = a.arity(); i-- > 0;) work.emplace_back(a.args()[i], b.args()[i]);
  }
  return mgu;
}

Term canonical_variant(const Term& t) {
  Substitution renaming;
  std::size_t next = 0;
  for (const std::string& v : variables(t)) renaming.bind(v, Term::var("_" + std::to_string(next++)));
  return renaming.apply(t);
}

}  // namespace ddrt
