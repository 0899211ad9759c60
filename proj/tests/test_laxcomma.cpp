#include <doctest.h>

#include "ordescent/fixtures.hpp"
#include "ordescent/laxcomma.hpp"

using namespace ordescent;

TEST_CASE("lax objects and morphisms are validated") {
  const OrdSet x = OrdSet::chain(2);
  const OrdSet c2 = OrdSet::chain(2);
  CHECK_THROWS_AS(make_lax_object(x, c2, {1, 0}), ValidationError);
  CHECK_THROWS_AS(make_lax_object(x, c2, {0, 2}), IndexError);
  const LaxObject low = make_lax_object(x, OrdSet::discrete(1), {0});
  const LaxObject high = make_lax_object(x, OrdSet::discrete(1), {1});
  CHECK(is_lax_morphism(x, low, high, std::vector<Element>{0}));
  const Verdict v = is_lax_morphism(x, high, low, std::vector<Element>{0});
  REQUIRE_FALSE(v);
  CHECK(v.witness->condition == condition::kLaxInequality);
  CHECK(v.witness->domain == std::vector<std::size_t>{0});
  const LaxObject pair = make_lax_object(x, c2, {0, 0});
  const Verdict m = is_lax_morphism(x, pair, make_lax_object(x, c2, {1, 1}), std::vector<Element>{1, 0});
  CHECK(m.witness->condition == condition::kMonotone);
  const LaxMorphism id = lax_identity(pair);
  CHECK(compose(id, id) == id);
}

TEST_CASE("pullback valuation is the meet below the common value") {
  const OrdSet x = fixtures::diamond();
  const LocalLattice l(x);
  const LaxObject top = make_lax_object(x, OrdSet::discrete(1), {3});
  const LaxMorphism f = make_lax_morphism(x, make_lax_object(x, OrdSet::discrete(1), {1}), top, {0});
  const LaxMorphism g = make_lax_morphism(x, make_lax_object(x, OrdSet::discrete(1), {2}), top, {0});
  const LaxPullback p = pullback_laxcomma(l, f, g);
  REQUIRE(p.pairs.size() == 1);
  CHECK(p.object.valuation == std::vector<Element>{0});
  CHECK(p.first.map == std::vector<Element>{0});
  const LaxPullback self = pullback_laxcomma(l, f, f);
  CHECK(self.object.valuation == std::vector<Element>{1});
  CHECK_THROWS_AS(pullback_laxcomma(l, f, lax_identity(f.source)), Error);
}

TEST_CASE("fibers") {
  const Instance inst = fixtures::sre();
  const Fiber top = fiber(inst.x, inst.f.source, 1);
  CHECK(top.inclusion == std::vector<Element>{0, 2});
  CHECK(top.order.strict_pairs().empty());
  CHECK(fiber(inst.x, inst.f.source, 0).inclusion.size() == 3);
  const MonotoneMap m = fiber_map(inst.x, inst.f, 1);
  CHECK(m.mapping() == std::vector<Element>{0, 1});
  CHECK(pi_at(inst.x, inst.f.source, 1) == top.order);
  CHECK_THROWS_AS(fiber(inst.x, inst.f.source, 2), IndexError);
  CHECK(underlying_fam(inst.f).mapping == std::vector<std::size_t>{0, 0, 1});
  CHECK(underlying_ord(inst.f).mapping() == inst.f.map);
}
