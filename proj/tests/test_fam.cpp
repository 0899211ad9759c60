#include <doctest.h>

#include "ordescent/fam.hpp"
#include "ordescent/fixtures.hpp"
#include "ordescent/replay.hpp"

using namespace ordescent;

TEST_CASE("family morphisms are validated") {
  const OrdSet x = OrdSet::chain(2);
  CHECK_THROWS_AS(make_fam_morphism(x, {{1}}, {{0}}, {0}), ValidationError);
  const Verdict v = is_fam_morphism(x, {{0, 1}}, {{1, 0}}, std::vector<std::size_t>{0, 1});
  CHECK(v.witness->domain == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(is_fam_morphism(x, {{0}}, {{1}}, std::vector<std::size_t>{3}), IndexError);
  CHECK(fam_identity({{0, 1}}).mapping == std::vector<std::size_t>{0, 1});
}

TEST_CASE("N5: descent but not effective") {
  const auto fx = fixtures::fam_n5();
  const LocalLattice x(fx.x);
  CHECK(fam_is_descent(x, fx.f));
  const Verdict eff = fam_is_effective(x, fx.f);
  REQUIRE_FALSE(eff);
  CHECK(eff.witness->condition == condition::kFamGluing);
  // sigma = (u, v).
  CHECK(eff.witness->family == std::vector<Element>{1, 2});
  CHECK(replay_fam_witness(fx.x, fx.f, *eff.witness));
  CHECK_THROWS_AS(fam_is_effective_lcc(x, fx.f), PreconditionError);
}

TEST_CASE("diamond: the same shape is effective") {
  const auto fx = fixtures::fam_diamond();
  const LocalLattice x(fx.x);
  CHECK(fam_is_descent(x, fx.f));
  CHECK(fam_is_effective(x, fx.f));
  CHECK(fam_is_effective_lcc(x, fx.f));
}

TEST_CASE("descent data of a family morphism") {
  const auto fx = fixtures::fam_n5();
  const LocalLattice x(fx.x);
  const auto data = enumerate_fam_descent_data(x, fx.f);
  for (const auto& sigma : data) {
    CHECK(fam_is_compatible(x, fx.f, sigma));
    for (std::size_t j = 0; j < sigma.size(); ++j) CHECK(x.leq(sigma[j], fx.f.source.values[j]));
  }
  // (u, v) is compatible but has no gluing over the top.
  const std::vector<Element> uv{1, 2};
  CHECK(fam_is_compatible(x, fx.f, uv));
  CHECK_FALSE(fam_gluing_search(x, fx.f, uv, 0).has_value());
  const std::vector<Element> alpha{3, 2};
  CHECK(fam_gluing_search(x, fx.f, alpha, 0) == Element{4});
  CHECK_THROWS_AS(for_each_fam_descent_datum(x, fx.f, [](auto) { return true; }, 3), CapExceeded);
}

TEST_CASE("descent fails when a fiber does not cover its target") {
  const OrdSet c2 = OrdSet::chain(2);
  const LocalLattice x(c2);
  const FamMorphism f = make_fam_morphism(c2, {{0}}, {{1}}, {0});
  const Verdict v = fam_is_descent(x, f);
  REQUIRE_FALSE(v);
  CHECK(v.witness->codomain == std::vector<std::size_t>{0});
  CHECK(v.witness->base == std::vector<std::size_t>{1});
  CHECK(replay_fam_witness(c2, f, *v.witness));
}

TEST_CASE("effectiveness is equivalent to descent on distributive X") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const OrdSet& o : preorder_classes(n)) {
      if (!is_locally_complete(o)) continue;
      const LocalLattice x(o);
      if (!x.cartesian_closed()) continue;
      // Every two-to-one family over every target value.
      for (Element t = 0; t < n; ++t)
        for (Element p : down_set(o, t))
          for (Element q : down_set(o, t)) {
            const FamMorphism f = make_fam_morphism(o, {{p, q}}, {{t}}, {0, 0});
            CHECK(fam_is_effective(x, f).holds == fam_is_descent(x, f).holds);
            CHECK(fam_is_effective_lcc(x, f).holds == fam_is_descent(x, f).holds);
          }
    }
}

TEST_CASE("fiber restriction") {
  const OrdSet c2 = OrdSet::chain(2);
  const FamMorphism f = make_fam_morphism(c2, {{0, 1, 1}}, {{1, 1}}, {1, 0, 1});
  std::vector<std::size_t> idx;
  const FamMorphism r = fam_fiber_restriction(f, 1, &idx);
  CHECK(idx == std::vector<std::size_t>{0, 2});
  CHECK(r.source.values == std::vector<Element>{0, 1});
  CHECK(r.mapping == std::vector<std::size_t>{0, 0});
}
