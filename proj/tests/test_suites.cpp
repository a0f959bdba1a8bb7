#include "doctest.h"
#include "hurwitz/suites.hpp"

using namespace hurwitz;

TEST_CASE("theorem names round trip") {
  for (Theorem t : all_theorems()) CHECK(theorem_from_string(to_string(t)) == t);
  CHECK(all_theorems().size() == 9);
  CHECK_FALSE(theorem_from_string("nope").has_value());
}

TEST_CASE("standard groups") {
  const auto& gs = standard_groups();
  REQUIRE(gs.size() == 5);
  std::vector<std::size_t> orders;
  for (const auto& g : gs) orders.push_back(g.group->order());
  CHECK(orders == std::vector<std::size_t>{24, 12, 8, 24, 48});
}

TEST_CASE("every suite passes on a small sample") {
  SuiteOptions o;
  o.samples = 20;
  o.seed = 3;
  for (Theorem t : all_theorems()) {
    CAPTURE(to_string(t));
    auto r = run_suite(t, o);
    CHECK_FALSE(r.refused);
    CHECK(r.failed == 0);
    CHECK(r.checked > 0);
    CHECK(r.ok(true));
  }
}

TEST_CASE("suites are reproducible from the seed") {
  SuiteOptions o;
  o.samples = 10;
  o.seed = 17;
  auto a = run_suite(Theorem::Cycle, o);
  auto b = run_suite(Theorem::Cycle, o);
  CHECK(a.summary() == b.summary());
  CHECK(a.checked == 50);
}

TEST_CASE("double reverse refuses a non-reversible presentation") {
  SuiteOptions o;
  o.samples = 5;
  o.presentations = {"q8-ijk"};
  auto r = run_suite(Theorem::DoubleReverse, o);
  CHECK(r.refused);
  CHECK(r.refusal.find("q8-ijk") != std::string::npos);
  CHECK_FALSE(r.ok(false));
  CHECK(r.summary().find("refused") != std::string::npos);
}

TEST_CASE("mirror moves run over any presentation") {
  SuiteOptions o;
  o.samples = 20;
  o.presentations = {"q8-ijk", "g4"};
  auto r = run_suite(Theorem::MirrorMoves, o);
  CHECK(r.ok(true));
  CHECK(r.checked == 40);
}

TEST_CASE("tiny caps make suites inconclusive rather than failing") {
  SuiteOptions o;
  o.samples = 10;
  o.node_cap = 2;
  auto r = run_suite(Theorem::Cycle, o);
  CHECK(r.failed == 0);
  CHECK(r.inconclusive > 0);
  CHECK(r.ok(false));
  CHECK_FALSE(r.ok(true));
}
