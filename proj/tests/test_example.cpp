#include <doctest.h>

#include <stdexcept>

#include "ordescent/example.hpp"

using namespace ordescent;

TEST_CASE("every example matches its expected table") {
  for (const std::string& name : example_names()) {
    const ExampleTable t = run_example(name);
    CHECK_MESSAGE(t.passed(), format_example(t));
    CHECK(t.seconds < 5.0);
  }
  CHECK_THROWS_AS(run_example("nope"), std::invalid_argument);
}

TEST_CASE("summary lines") {
  CHECK(run_example("interval-II").summary ==
        "stable regular epi: YES; effective descent: NO; witness α(x,0)=0<x at x=1/2");
  CHECK(run_example("fam-n5").summary == "descent: YES; effective: NO; witness σ=(u,v)");
  CHECK(run_example("sre-fixture").summary == "(1)✓(2)✗(3)✓");
  CHECK(run_example("cond3-fixture").summary == "(1)✓(2)✓(3)✗");
  CHECK(run_example("js-fixture").summary == "(1)✗(2)✓(3)✓");
}
