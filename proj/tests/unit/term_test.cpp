#include <algorithm>

#include "doctest.h"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace ddrt;
using testing::P;
using testing::T;

TEST_SUITE("term") {

TEST_CASE("positions split function and variable positions") {
  auto x = positions(T("x"));
  CHECK(x.function.empty());
  CHECK(x.variable == std::vector<Position>{P("e")});

  auto ground = positions(T("inc(tl(nat))"));
  CHECK(ground.function == std::vector<Position>{P("e"), P("1"), P("1.1")});
  CHECK(ground.variable.empty());

  auto mixed = positions(T("f(x,g(a))"));
  CHECK(mixed.function == std::vector<Position>{P("e"), P("2"), P("2.1")});
  CHECK(mixed.variable == std::vector<Position>{P("1")});
}

TEST_CASE("positions agree with path enumeration") {
  oracle::Generator gen(7);
  for (int i = 0; i < 200; ++i) {
    Term t = gen.term(4, {"x", "y"});
    auto sets = positions(t);
    CHECK(sets.function.size() + sets.variable.size() == oracle::paths(t).size());
    for (const Position& p : sets.function) CHECK_FALSE(subterm_at(t, p).is_var());
    for (const Position& p : sets.variable) CHECK(subterm_at(t, p).is_var());
  }
}

TEST_CASE("subterm_at and replace_at") {
  Term t = T("inc(tl(nat))");
  CHECK(subterm_at(t, P("1.1")) == T("nat"));
  CHECK(subterm_at(t, P("e")) == t);
  CHECK(subterm_at(T("f(a,b)"), P("2")) == T("b"));
  CHECK_THROWS_AS(subterm_at(t, P("2")), InvalidPosition);
  CHECK_THROWS_AS(subterm_at(T("a"), P("1")), InvalidPosition);

  CHECK(replace_at(t, P("1.1"), T(":(0,inc(nat))")) == T("inc(tl(:(0,inc(nat))))"));
  CHECK(replace_at(t, P("e"), T("a")) == T("a"));
  CHECK(replace_at(T("f(a,b)"), P("1"), T("c")) == T("f(c,b)"));
  CHECK_THROWS_AS(replace_at(t, P("1.2"), T("a")), InvalidPosition);
}

TEST_CASE("position printing and prefixes") {
  CHECK(P("e").to_string() == "e");
  CHECK(P("1.1").to_string() == "1.1");
  CHECK(P("1").is_prefix_of(P("1.2")));
  CHECK(P("e").is_prefix_of(P("2")));
  CHECK_FALSE(P("2").is_prefix_of(P("1.2")));
}

TEST_CASE("variables and linearity") {
  CHECK(variables(T("f(y,g(x,y))")) == std::vector<std::string>{"y", "x"});
  CHECK(variable_occurrences(T("f(x,f(x,y))")) == std::map<std::string, std::size_t>{{"x", 2}, {"y", 1}});
  CHECK(is_linear(T("f(x,y)")));
  CHECK_FALSE(is_linear(T("f(x,x)")));
  CHECK(is_ground(T("f(a,b)")));
}

TEST_CASE("substitutions never store identity bindings") {
  Substitution s;
  s.bind("x", Term::var("x"));
  CHECK(s.empty());
  Substitution t{{"x", T("a")}, {"y", T("g(x)")}};
  CHECK(t.apply(T("f(x,y)")) == T("f(a,g(x))"));
  Substitution u{{"x", T("b")}};
  CHECK(t.then(u).apply(T("f(x,y)")) == u.apply(t.apply(T("f(x,y)"))));
}

TEST_CASE("match") {
  auto m = match(T("hd(:(x,y))"), T("hd(:(0,inc(nat)))"));
  REQUIRE(m);
  CHECK(*m == Substitution{{"x", T("0")}, {"y", T("inc(nat)")}});
  CHECK_FALSE(match(T("f(x,x)"), T("f(a,b)")));
  auto v = match(T("x"), T("f(a)"));
  REQUIRE(v);
  CHECK(*v == Substitution{{"x", T("f(a)")}});
  CHECK(*match(T("f(x,x)"), T("f(a,a)")) == Substitution{{"x", T("a")}});
}

TEST_CASE("unify") {
  auto e = unify(T("nat"), T("nat"));
  REQUIRE(e);
  CHECK(e->empty());
  CHECK_FALSE(unify(T("x"), T("f(x)")));
  CHECK_FALSE(unify(T("f(x,g(x))"), T("f(g(y),y)")));
  auto s = unify(T("f(x,a)"), T("f(b,y)"));
  REQUIRE(s);
  CHECK(*s == Substitution{{"x", T("b")}, {"y", T("a")}});
  CHECK_FALSE(unify(T("f(a,x)"), T("g(x)")));
}

TEST_CASE("unify agrees with an independent unifier") {
  oracle::Generator gen(11);
  for (int i = 0; i < 300; ++i) {
    Term s = gen.term(3, {"x", "y", "z"});
    Term t = gen.term(3, {"x", "y", "z"});
    auto mine = unify(s, t);
    auto ref = oracle::unify(s, t);
    REQUIRE(mine.has_value() == ref.has_value());
    if (!mine) continue;
    CHECK(mine->apply(s) == mine->apply(t));
    CHECK(mine->apply(mine->apply(s)) == mine->apply(s));
    // Most general: the reference unifier is an instance of ours.
    for (const auto& [v, img] : *ref) {
      auto inst = oracle::apply(*ref, mine->apply(Term::var(v)));
      CHECK(inst == img);
    }
  }
}

TEST_CASE("rename_apart") {
  Rule r{0, T("f(x)"), T("g(x,x)")};
  Rule renamed = rename_apart(r, {"x"});
  CHECK(is_variant(r, renamed));
  CHECK(variables(renamed.lhs) != std::vector<std::string>{"x"});

  Rule ground{1, T("a"), T("b")};
  CHECK(rename_apart(ground, {"x"}) == ground);

  Rule two{2, T("f(x,y)"), T("x")};
  Rule r2 = rename_apart(two, {"x"});
  auto vs = variables(r2.lhs);
  CHECK(vs.size() == 2);
  CHECK(std::find(vs.begin(), vs.end(), "x") == vs.end());
  CHECK(is_variant(two, r2));
}

TEST_CASE("canonical variants identify renamings") {
  CHECK(canonical_variant(T("f(x,g(y,x))")) == canonical_variant(T("f(z,g(x,z))")));
  CHECK_FALSE(canonical_variant(T("f(x,y)")) == canonical_variant(T("f(x,x)")));
}

}
