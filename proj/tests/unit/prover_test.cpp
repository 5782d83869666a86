#include "ddrt/prover.hpp"
#include "doctest.h"
#include "support/helpers.hpp"

using namespace ddrt;
using testing::R;
using testing::T;

namespace {

Config only(Criterion c) {
  Config cfg;
  cfg.criteria = {c};
  return cfg;
}

Answer answer(const std::string& fixture, Criterion c) { return prove(testing::fixture(fixture), only(c)).answer; }

}  // namespace

TEST_SUITE("prover") {

TEST_CASE("criterion names") {
  for (Criterion c : default_criteria()) CHECK(criterion_from_string(to_string(c)) == c);
  CHECK_FALSE(criterion_from_string("auto"));
  CHECK(std::string(to_string(default_criteria().front())) == "nc");
  CHECK(std::string(to_string(Answer::Maybe)) == "MAYBE");
}

TEST_CASE("orthogonality") {
  CHECK(check_orthogonal(testing::fixture("orthogonal")).answer == Answer::Yes);
  CHECK(check_orthogonal(testing::fixture("nat_inc")).answer == Answer::Maybe);
  CHECK(check_orthogonal(R("f(x,x) -> a")).answer == Answer::Maybe);
}

TEST_CASE("rule labeling") {
  CHECK(answer("nat_inc", Criterion::RuleLabeling) == Answer::Yes);
  CHECK(answer("nonlinear_flip", Criterion::RuleLabeling) == Answer::Maybe);
  CHECK(check_rule_labeling(R("a -> b"), Config{}).answer == Answer::Yes);
  CHECK(check_rule_labeling(R("a -> b\na -> c"), Config{}).answer == Answer::Maybe);
}

TEST_CASE("knuth-bendix") {
  Verdict diamond = check_knuth_bendix(R("a -> b\na -> c\nb -> d\nc -> d"), Config{});
  CHECK(diamond.answer == Answer::Yes);
  CHECK(diamond.joins.size() == 2);
  CHECK(answer("duplicating_loop", Criterion::KnuthBendix) == Answer::Maybe);

  Verdict fork = check_knuth_bendix(testing::fixture("fork"), Config{});
  CHECK(fork.answer == Answer::No);
  REQUIRE(fork.witness);
}

TEST_CASE("critical pair steps relative to the system") {
  CHECK(answer("duplicating_loop", Criterion::DuplicatingSplit) == Answer::Yes);
  CHECK(answer("nat_inc_double", Criterion::DuplicatingSplit) == Answer::Maybe);
  CHECK(answer("nat_inc_double", Criterion::CpsRelative) == Answer::Yes);
  CHECK(answer("nat_inc_double", Criterion::CpsRelativeNontrivial) == Answer::Yes);
  CHECK(answer("swap_loop", Criterion::CpsRelative) == Answer::Maybe);
  CHECK(answer("nonlinear_flip", Criterion::CpsRelative) == Answer::Maybe);
  CHECK(answer("orthogonal", Criterion::CpsRelative) == Answer::Yes);
}

TEST_CASE("non-confluence witnesses") {
  Verdict v = check_nonconfluence(testing::fixture("fork"), Config{});
  REQUIRE(v.answer == Answer::No);
  REQUIRE(v.witness);
  CHECK(TermSet{v.witness->left_normal_form, v.witness->right_normal_form} == TermSet{T("b"), T("c")});
  CHECK(check_nonconfluence(testing::fixture("nat_inc"), Config{}).answer == Answer::Maybe);
}

TEST_CASE("combined run") {
  Verdict yes = prove(testing::fixture("nat_inc"), Config{});
  CHECK(yes.answer == Answer::Yes);
  REQUIRE(yes.criterion);
  CHECK(*yes.criterion == Criterion::RuleLabeling);

  Verdict maybe = prove(testing::fixture("swap_loop"), Config{});
  CHECK(maybe.answer == Answer::Maybe);
  CHECK_FALSE(maybe.diagnostics.empty());
}

TEST_CASE("exhausted budgets and deadlines give MAYBE") {
  Config tiny;
  tiny.node_budget = 3;
  tiny.closure_budget = 3;
  tiny.search_budget = 3;
  for (Criterion c : default_criteria()) {
    Verdict v = run_criterion(c, testing::fixture("nat_inc_double"), tiny, Deadline{});
    CHECK(v.answer != Answer::No);
  }
  Verdict late = run_criterion(Criterion::CpsRelative, testing::fixture("nat_inc_double"), Config{},
                               Deadline(std::chrono::milliseconds(0)));
  CHECK(late.answer == Answer::Maybe);
}

}
