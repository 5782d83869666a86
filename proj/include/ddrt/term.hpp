#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace ddrt {

/// A first-order term: a variable or a function symbol applied to arguments.
///
/// Terms are immutable and share structure; copying a Term copies a pointer.
/// Equality is syntactic, variable names included.
class Term {
 public:
  static Term var(std::string name);
  static Term app(std::string symbol, std::vector<Term> args = {});

  bool is_var() const;
  /// Variable name or function symbol.
  const std::string& name() const;
  std::span<const Term> args() const;
  std::size_t arity() const { return args().size(); }

  std::size_t hash() const;
  /// Number of symbol and variable occurrences.
  std::size_t size() const;
  std::size_t depth() const;

  std::string to_string() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

using TermSet = std::set<Term>;

/// A path from the root to a subterm.  Argument indices are 1-based; the
/// empty path is the root.
struct Position {
  std::vector<int> path;

  Position() = default;
  Position(std::initializer_list<int> p) : path(p) {}
  explicit Position(std::vector<int> p) : path(std::move(p)) {}

  bool is_root() const { return path.empty(); }
  Position child(int index) const;
  /// True iff this position is a (non-strict) prefix of `other`.
  bool is_prefix_of(const Position& other) const;
  /// Dotted notation ("1.1"); the root prints as "e".
  std::string to_string() const;

  friend auto operator<=>(const Position&, const Position&) = default;
};

struct PositionSets {
  std::vector<Position> function;
  std::vector<Position> variable;
};

/// All positions of `t` in pre-order, split by what they address.
PositionSets positions(const Term& t);
const Term& subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, const Term& u);

/// Distinct variables in left-to-right order of first occurrence.
std::vector<std::string> variables(const Term& t);
/// Occurrence count of each variable.
std::map<std::string, std::size_t> variable_occurrences(const Term& t);
bool is_linear(const Term& t);
bool is_ground(const Term& t);

/// Finite map from variable names to terms.  Identity bindings are never
/// stored, so two substitutions are equal iff their maps are.
class Substitution {
 public:
  using Map = std::map<std::string, Term>;

  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const std::string, Term>> init);

  void bind(const std::string& var, Term value);
  const Term* lookup(const std::string& var) const;
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const Map& map() const { return map_; }
  auto begin() const { return map_.begin(); }
  auto end() const { return map_.end(); }

  Term apply(const Term& t) const;
  /// The substitution x ↦ other(this(x)), i.e. apply `this` first.
  Substitution then(const Substitution& other) const;

  std::string to_string() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  Map map_;
};

inline Term apply_subst(const Substitution& s, const Term& t) { return s.apply(t); }

/// One-sided matching: σ with σ(pattern) = subject and dom(σ) ⊆ vars(pattern).
std::optional<Substitution> match(const Term& pattern, const Term& subject);

/// Syntactic most general unifier with occurs check.  The result is
/// idempotent.
std::optional<Substitution> unify(const Term& s, const Term& t);

/// Rename variables to `_0`, `_1`, … in order of first occurrence; used to
/// compare terms up to variable renaming.
Term canonical_variant(const Term& t);

}  // namespace ddrt

template <>
struct std::hash<ddrt::Term> {
  std::size_t operator()(const ddrt::Term& t) const { return t.hash(); }
};
