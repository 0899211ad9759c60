#include <doctest.h>

#include "ordescent/descent_check.hpp"
#include "ordescent/fixtures.hpp"
#include "ordescent/replay.hpp"

using namespace ordescent;

TEST_CASE("replay confirms genuine witnesses and rejects altered ones") {
  const Instance sre = fixtures::sre();
  const Verdict c2 = char_condition_2(LocalLattice(sre.x), sre.f);
  REQUIRE(c2.witness);
  CHECK(replay_witness(sre.x, sre.f, *c2.witness));
  Witness w = *c2.witness;
  w.base = {0};
  const ReplayResult bad = replay_witness(sre.x, sre.f, w);
  CHECK_FALSE(bad);
  CHECK_FALSE(bad.reason.empty());
  w.condition = "no such condition";
  CHECK_FALSE(replay_witness(sre.x, sre.f, w));
}

TEST_CASE("replay of gluing and lifting witnesses") {
  const Instance cond3 = fixtures::cond3();
  const Verdict c3 = char_condition_3(LocalLattice(cond3.x), cond3.f);
  REQUIRE(c3.witness);
  CHECK(replay_witness(cond3.x, cond3.f, *c3.witness));
  Witness glued = *c3.witness;
  glued.family = cond3.f.source.valuation;  // alpha itself always glues
  CHECK_FALSE(replay_witness(cond3.x, cond3.f, glued));

  const Instance js = fixtures::js();
  const Verdict c1 = char_condition_1(LocalLattice(js.x), js.f);
  REQUIRE(c1.witness);
  CHECK(replay_witness(js.x, js.f, *c1.witness));
  Witness lifted = *c1.witness;
  lifted.codomain = {0, 1, 1};
  CHECK_FALSE(replay_witness(js.x, js.f, lifted));
}

TEST_CASE("replay of family witnesses") {
  const auto fx = fixtures::fam_n5();
  const Verdict v = fam_is_effective(LocalLattice(fx.x), fx.f);
  REQUIRE(v.witness);
  CHECK(replay_fam_witness(fx.x, fx.f, *v.witness));
  Witness w = *v.witness;
  w.family = {3, 2};
  CHECK_FALSE(replay_fam_witness(fx.x, fx.f, w));
}
