#include "doctest.h"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace ddrt;
using testing::T;

namespace {

InvalidRule::Kind rule_error(const std::string& text) {
  try {
    parse_trs(text);
  } catch (const InvalidRule& e) {
    return e.kind();
  }
  FAIL("no InvalidRule thrown for: " << text);
  return InvalidRule::Kind::VariableLhs;
}

ParseError parse_error(const std::string& text) {
  try {
    parse_trs(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no ParseError thrown for: " << text);
  return ParseError(0, 0, "");
}

}  // namespace

TEST_SUITE("tpdb") {

TEST_CASE("plain systems") {
  auto p = parse_trs("(VAR x y)(RULES hd(:(x,y)) -> x)", "hd.trs");
  REQUIRE(p.trs.size() == 1);
  CHECK(p.trs.rules()[0].lhs == Term::app("hd", {Term::app(":", {Term::var("x"), Term::var("y")})}));
  CHECK(p.trs.rules()[0].rhs == Term::var("x"));
  CHECK(p.source_name == "hd.trs");
  CHECK(p.declared_variables == std::set<std::string>{"x", "y"});

  auto q = parse_trs("(COMMENT nested (parens) are fine)\n(VAR x)\n(RULES\n f(x)->g(x,x)\n a -> b\n)\n(STRATEGY FULL)");
  REQUIRE(q.trs.size() == 2);
  CHECK(q.trs.rules()[1].index == 1);
  CHECK(q.trs.rules()[1].to_string() == "a -> b");
  CHECK(parse_trs("(RULES c() -> d)").trs.rules()[0].lhs == Term::app("c"));
  CHECK(parse_trs("(VAR)(RULES)").trs.empty());
}

TEST_CASE("ill-formed rules") {
  CHECK(rule_error("(VAR x)(RULES x -> a)") == InvalidRule::Kind::VariableLhs);
  CHECK(rule_error("(VAR x y)(RULES f(x) -> y)") == InvalidRule::Kind::ExtraVariableRhs);
  CHECK(rule_error("(VAR x)(RULES f(x) -> f(x,x))") == InvalidRule::Kind::ArityClash);
}

TEST_CASE("malformed text") {
  CHECK(parse_error("(RULES f(a -> b)").line() == 1);
  ParseError e = parse_error("(RULES\n  a -> b\n  c ->\n)");
  CHECK(e.line() == 4);
  CHECK(e.column() == 1);
  CHECK(std::string(e.what()).rfind("4:1:", 0) == 0);
  parse_error("(RULES a -> b)(VAR x)");
  parse_error("(VAR x)(RULES x(a) -> a)");
  parse_error("(RULES a -> b | c -> d)");
  parse_error("(STRATEGY INNERMOST)(RULES a -> b)");
  parse_error("(THEORY (AC f))(RULES a -> b)");
  parse_error("(COMMENT unterminated");
  parse_error("RULES a -> b");
}

TEST_CASE("format_trs round-trips") {
  for (const char* name : {"nat_inc", "nat_inc_double", "swap_loop", "nonlinear_flip", "orthogonal"}) {
    Trs trs = testing::fixture(name);
    Trs again = parse_trs(format_trs(trs)).trs;
    CHECK(again.rules() == trs.rules());
  }
  oracle::Generator gen(41);
  for (int i = 0; i < 50; ++i) {
    Trs trs = gen.trs(4, false);
    CHECK(parse_trs(format_trs(trs)).trs.rules() == trs.rules());
  }
}

TEST_CASE("single terms") {
  CHECK(parse_term("f(x,a)", {"x"}) == Term::app("f", {Term::var("x"), Term::app("a")}));
  CHECK_THROWS_AS(parse_term("f(x) g", {"x"}), ParseError);
}

}
