#include <doctest.h>

#include "ordescent/fixtures.hpp"
#include "ordescent/oracle.hpp"
#include "ordescent/replay.hpp"

using namespace ordescent;

namespace {

// Objects over (B, beta) with a one-point domain, one per b and value.
std::vector<LaxMorphism> points_over(const OrdSet& x, const LaxObject& b) {
  std::vector<LaxMorphism> out;
  for (Element e = 0; e < b.size(); ++e)
    for (Element v = 0; v < x.size(); ++v)
      if (x.leq(v, b(e))) out.push_back({{OrdSet::discrete(1), {v}}, b, {e}});
  return out;
}

}  // namespace

TEST_CASE("canonical data satisfy the unit and cocycle laws") {
  for (const Instance& inst : {fixtures::sre(), fixtures::cond3(), fixtures::js()}) {
    const LocalLattice x(inst.x);
    for (const LaxMorphism& d : objects_over(x, inst.f.target, 2)) {
      const DescentDatum datum = canonical_descent_datum(x, d, inst.f);
      CHECK(check_descent_datum(x, inst.f, datum));
      CHECK(descent_data_isomorphic(x, inst.f, datum, datum));
    }
  }
}

TEST_CASE("broken transitions are rejected") {
  const Instance inst = fixtures::sre();
  const LocalLattice x(inst.x);
  const LaxMorphism d{{OrdSet::discrete(1), {1}}, inst.f.target, {0}};
  DescentDatum datum = canonical_descent_datum(x, d, inst.f);
  REQUIRE(datum.transition.size() >= 2);
  std::swap(datum.transition[0], datum.transition[1]);
  CHECK_FALSE(check_descent_datum(x, inst.f, datum));
  datum.transition.pop_back();
  CHECK_FALSE(check_descent_datum(x, inst.f, datum));
}

TEST_CASE("coequalizer oracle in Ord") {
  const OrdSet c3 = OrdSet::chain(3);
  const MonotoneMap split(transitive_reflexive_closure(std::vector<ElementPair>{{0, 1}, {2, 3}}, 4), c3,
                          {0, 1, 1, 2});
  CHECK(coequalizer_oracle(split));
  const MonotoneMap points(OrdSet::discrete(2), OrdSet::chain(2), {0, 1});
  const OracleVerdict v = coequalizer_oracle(points);
  CHECK_FALSE(v);
  CHECK(v.witness->condition == condition::kCoequalizerOrder);
  const MonotoneMap missing(OrdSet::discrete(1), OrdSet::discrete(2), {0});
  CHECK(coequalizer_oracle(missing).witness->condition == condition::kCoequalizerCarrier);
}

TEST_CASE("coequalizer oracle in the lax comma category") {
  const Instance inst = fixtures::sre();
  const LocalLattice x(inst.x);
  CHECK(coequalizer_oracle(x, inst.f));
  // Valuation of B strictly above what A generates.
  const OrdSet c2 = OrdSet::chain(2);
  const LocalLattice l(c2);
  const LaxMorphism up{{OrdSet::discrete(1), {0}}, {OrdSet::discrete(1), {1}}, {0}};
  const OracleVerdict v = coequalizer_oracle(l, up);
  CHECK_FALSE(v);
  CHECK(v.witness->condition == condition::kCoequalizerValuation);
  CHECK(replay_witness(c2, up, *v.witness));
}

TEST_CASE("essential surjectivity") {
  const Instance sre = fixtures::sre();
  const LocalLattice xs(sre.x);
  CHECK(essential_surjectivity_check(xs, sre.f, 2));
  const OracleVerdict es3 = essential_surjectivity_check(xs, sre.f, 3);
  CHECK_FALSE(es3);
  CHECK(es3.conclusive);
  CHECK(replay_witness(sre.x, sre.f, *es3.witness));

  const Instance cond3 = fixtures::cond3();
  const LocalLattice xc(cond3.x);
  const OracleVerdict es2 = essential_surjectivity_check(xc, cond3.f, 2);
  CHECK_FALSE(es2);
  CHECK(replay_witness(cond3.x, cond3.f, *es2.witness));

  const Instance js = fixtures::js();
  const LocalLattice xj(js.x);
  const OracleVerdict bounded = essential_surjectivity_check(xj, js.f, 2);
  CHECK(bounded);
  CHECK_FALSE(bounded.conclusive);
  CHECK_THROWS_AS(essential_surjectivity_check(xs, sre.f, 3, 10), CapExceeded);
}

TEST_CASE("descent data glue exactly when they are canonical") {
  const Instance inst = fixtures::sre();
  const LocalLattice x(inst.x);
  std::size_t glued = 0, total = 0;
  for (const DescentDatum& datum : enumerate_descent_data(x, inst.f, 2)) {
    ++total;
    const auto d = glue_descent_datum(x, inst.f, datum);
    if (!d) continue;
    ++glued;
    CHECK(descent_data_isomorphic(x, inst.f, canonical_descent_datum(x, *d, inst.f), datum));
  }
  CHECK(total > 0);
  CHECK(glued == total);
}

TEST_CASE("full faithfulness and the pullback-coequalizer form") {
  for (const Instance& inst : {fixtures::sre(), fixtures::cond3(), fixtures::js()}) {
    const LocalLattice x(inst.x);
    CHECK(full_faithfulness_check(x, inst.f, 2));
    CHECK(pullback_coequalizer_check(x, inst.f, 2));
    for (const LaxMorphism& d : points_over(inst.x, inst.f.target))
      for (const LaxMorphism& d2 : points_over(inst.x, inst.f.target)) CHECK(comparison_on_pair(x, inst.f, d, d2));
  }
  // Not surjective: the comparison cannot be faithful on the missing point.
  const OrdSet c2 = OrdSet::chain(2);
  const LocalLattice l(c2);
  const LaxMorphism miss{{OrdSet::discrete(1), {1}}, {OrdSet::discrete(2), {1, 1}}, {0}};
  const OracleVerdict ff = full_faithfulness_check(l, miss, 1);
  CHECK_FALSE(ff);
  CHECK(replay_witness(c2, miss, *ff.witness));
  const OracleVerdict pc = pullback_coequalizer_check(l, miss, 1);
  CHECK_FALSE(pc);
  CHECK(replay_witness(c2, miss, *pc.witness));
}

TEST_CASE("obstruction test") {
  const Instance sre = fixtures::sre();
  const LocalLattice x(sre.x);
  const OracleVerdict v = obstruction_test(x, sre.f, 2);
  REQUIRE_FALSE(v);
  CHECK(v.witness->domain.size() == 2);
  CHECK(replay_witness(sre.x, sre.f, *v.witness));
  const Instance js = fixtures::js();
  CHECK_THROWS_AS(obstruction_test(LocalLattice(js.x), js.f, 2), PreconditionError);
  const Instance id = fixtures::identity_of(sre);
  CHECK(obstruction_test(LocalLattice(id.x), id.f, 2));
}

TEST_CASE("strict pair encoding") {
  const OrdSet c3 = OrdSet::chain(3);
  const auto flat = flatten_strict_pairs(c3);
  CHECK(flat.size() == 6);
  CHECK(order_from_strict_pairs(3, flat) == c3);
}
