#include <chrono>
#include <filesystem>
#include <fstream>

#include "ddrt/critical_pairs.hpp"
#include "ddrt/relative_termination.hpp"
#include "doctest.h"
#include "support/helpers.hpp"

using namespace ddrt;
using testing::R;
using testing::T;

namespace {

/// A shell script in a scratch directory that the external prover hook can
/// run.
std::string script(const std::string& name, const std::string& body) {
  auto dir = std::filesystem::temp_directory_path() / "ddrt-tests";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << "#!/bin/sh\n" << body << "\n";
  return "sh " + path.string();
}

void check_removal_chain(const RelativeProblem& problem, const RelativeTerminationProof& proof) {
  Trs strict = problem.strict, weak = problem.weak;
  for (const RemovalStep& step : proof.steps) {
    CHECK_NOTHROW(step.found.interpretation.validate());
    CHECK_FALSE(step.found.strict_removed.empty());
    for (const Rule& r : strict) CHECK(orient(step.found.interpretation, r) != Orientation::Incomparable);
    for (const Rule& r : weak) CHECK(orient(step.found.interpretation, r) != Orientation::Incomparable);
    for (const Rule& r : step.found.strict_removed) CHECK(orient(step.found.interpretation, r) == Orientation::Strict);
    auto drop = [](const Trs& trs, const std::vector<Rule>& removed) {
      std::vector<Rule> keep;
      for (const Rule& r : trs)
        if (std::find(removed.begin(), removed.end(), r) == removed.end()) keep.push_back(r);
      return Trs(keep);
    };
    strict = drop(strict, step.found.strict_removed);
    weak = drop(weak, step.found.weak_removed);
  }
  CHECK(strict.empty());
}

}  // namespace

TEST_SUITE("relative_termination") {

TEST_CASE("search on tiny problems") {
  CHECK(search_interpretation({R("a -> a"), Trs()}, 1, 1).status == SearchStatus::NoneExists);

  auto ab = search_interpretation({R("a -> b"), Trs()}, 1, 1);
  REQUIRE(ab.status == SearchStatus::Found);
  const auto& m = ab.found->interpretation;
  CHECK(m.symbols.at("a").constant == Vector{1});
  CHECK(m.symbols.at("b").constant == Vector{0});
  CHECK(ab.found->strict_removed.size() == 1);

  auto blocked = search_interpretation({R("a -> b"), R("b -> a")}, 2, 1);
  CHECK(blocked.status == SearchStatus::NoneExists);
}

TEST_CASE("search reports an exhausted budget") {
  Trs big = testing::fixture("nat_inc_double");
  auto out = search_interpretation({cps(big), big}, 3, 3, {10, {}});
  CHECK(out.status == SearchStatus::BudgetExhausted);
}

TEST_CASE("critical pair steps of the extended stream system terminate relative to it") {
  Trs rd = testing::fixture("nat_inc_double");
  RelativeProblem problem{cps(rd), rd};
  RelativeTerminationConfig cfg;
  cfg.dim_max = 2;
  cfg.coef_max = 1;
  auto proof = prove_relative_termination(problem, cfg);
  REQUIRE(proof.proved);
  check_removal_chain(problem, proof);
  for (const RemovalStep& s : proof.steps) CHECK(s.found.interpretation.dim <= 2);
}

TEST_CASE("swapping constants block relative termination of the critical pair steps") {
  Trs swap = testing::fixture("swap_loop");
  RelativeTerminationConfig cfg;
  CHECK_FALSE(prove_relative_termination({cps(swap), swap}, cfg).proved);

  Trs outer_only = R("f(a) -> c\nf(b) -> d");
  auto proof = prove_relative_termination({outer_only, swap}, cfg);
  CHECK(proof.proved);
  check_removal_chain({outer_only, swap}, proof);
}

TEST_CASE("termination by rule removal") {
  // A duplicating rule needs an upper-left entry of at least 2.
  RelativeTerminationConfig cfg;
  CHECK_FALSE(prove_termination(testing::fixture("orthogonal"), cfg).proved);
  cfg.coef_max = 2;
  CHECK(prove_termination(testing::fixture("orthogonal"), cfg).proved);
  CHECK_FALSE(prove_termination(testing::fixture("duplicating_loop"), {}).proved);
  CHECK(prove_termination(Trs(), {}).proved);
}

TEST_CASE("external prover answers") {
  Trs loop = testing::fixture("swap_loop");
  using namespace std::chrono_literals;
  CHECK(external_termination_check(loop, script("yes.sh", "grep -q RULES \"$1\" && echo YES"), 5s) ==
        ExternalAnswer::Yes);
  CHECK(external_termination_check(loop, script("no.sh", "echo NO"), 5s) == ExternalAnswer::No);
  CHECK(external_termination_check(loop, script("junk.sh", "echo maybe later"), 5s) == ExternalAnswer::Unknown);
  CHECK(external_termination_check(loop, script("silent.sh", "exit 3"), 5s) == ExternalAnswer::Unknown);
  CHECK(external_termination_check(Trs(), "false", 5s) == ExternalAnswer::Yes);

  auto start = std::chrono::steady_clock::now();
  CHECK(external_termination_check(loop, script("slow.sh", "sleep 10; echo YES"), 300ms) ==
        ExternalAnswer::Unknown);
  CHECK(std::chrono::steady_clock::now() - start < 5s);
  CHECK(std::string(to_string(ExternalAnswer::Unknown)) == "MAYBE");
}

TEST_CASE("external prover as a last resort") {
  Trs loop = testing::fixture("swap_loop");
  RelativeTerminationConfig cfg;
  cfg.dim_max = 1;
  CHECK_FALSE(prove_relative_termination({cps(loop), loop}, cfg).proved);
  cfg.external_prover = script("claims_yes.sh", "echo YES");
  auto proof = prove_relative_termination({cps(loop), loop}, cfg);
  CHECK(proof.proved);
  REQUIRE(proof.external);
  CHECK(*proof.external == ExternalAnswer::Yes);
}

}
