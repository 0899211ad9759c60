#include <doctest.h>

#include <algorithm>
#include <set>

#include "ordescent/fixtures.hpp"
#include "ordescent/ordset.hpp"

using namespace ordescent;

namespace {

OrdSet from_pairs(std::size_t n, std::vector<ElementPair> pairs) { return transitive_reflexive_closure(pairs, n); }

// Greatest lower bound of {a, b}, straight from the definition.
std::optional<Element> naive_meet(const OrdSet& x, Element a, Element b) {
  std::vector<Element> lower;
  for (Element z = 0; z < x.size(); ++z)
    if (x.leq(z, a) && x.leq(z, b)) lower.push_back(z);
  for (Element z : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](Element l) { return x.leq(l, z); })) return z;
  return std::nullopt;
}

bool isomorphic(const OrdSet& p, const OrdSet& q) {
  if (p.size() != q.size()) return false;
  std::vector<Element> perm(p.size());
  for (Element i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    bool ok = true;
    for (Element i = 0; i < p.size() && ok; ++i)
      for (Element j = 0; j < p.size() && ok; ++j) ok = p.leq(i, j) == q.leq(perm[i], perm[j]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("from_relation validates reflexivity and transitivity") {
  CHECK_THROWS_AS(OrdSet::from_relation(2, {0, 0, 0, 1}), ValidationError);
  CHECK_THROWS_AS(OrdSet::from_relation(3, {1, 1, 0, 0, 1, 1, 0, 0, 1}), ValidationError);
  CHECK_THROWS_AS(OrdSet::from_relation(2, {1, 1, 1}), Error);
  const OrdSet x = OrdSet::from_relation(2, {1, 1, 0, 1});
  CHECK(x.leq(0, 1));
  CHECK_FALSE(x.leq(1, 0));
  try {
    OrdSet::from_relation(3, {1, 1, 0, 0, 1, 1, 0, 0, 1});
  } catch (const ValidationError& e) {
    CHECK(e.witness().base == std::vector<std::size_t>{0, 1, 2});
  }
}

TEST_CASE("closure, chains and discrete orders") {
  const OrdSet c = OrdSet::chain(3);
  CHECK(c == from_pairs(3, {{0, 1}, {1, 2}}));
  CHECK(c.leq(0, 2));
  CHECK(OrdSet::discrete(3).strict_pairs().empty());
  CHECK(c.strict_pairs().size() == 3);
  const OrdSet cycle = from_pairs(2, {{0, 1}, {1, 0}});
  CHECK(cycle.iso(0, 1));
  CHECK_FALSE(is_poset(cycle));
  CHECK(is_poset(c));
}

TEST_CASE("preorder counts match the known sequence") {
  // Labeled preorders: 1, 1, 4, 29, 355; up to isomorphism: 1, 1, 3, 9, 33.
  const std::size_t labeled[] = {1, 1, 4, 29, 355};
  const std::size_t classes[] = {1, 1, 3, 9, 33};
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(all_preorders(n).size() == labeled[n]);
    CHECK(preorder_classes(n).size() == classes[n]);
  }
  const auto& reps = preorder_classes(3);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(isomorphic(reps[i], reps[j]));
}

TEST_CASE("local meets and joins agree with the definition") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const OrdSet& x : all_preorders(n))
      for (Element top = 0; top < n; ++top)
        for (Element a : down_set(x, top))
          for (Element b : down_set(x, top)) {
            const auto m = local_meet(x, top, a, b);
            const auto expected = naive_meet(x, a, b);
            REQUIRE(m.has_value() == expected.has_value());
            if (m) CHECK(x.iso(*m, *expected));
          }
  const OrdSet d = fixtures::diamond();
  const Element pq[] = {1, 2};
  CHECK(local_join(d, 3, pq) == Element{3});
  CHECK(local_join(d, 3, {}) == Element{0});
  CHECK_THROWS_AS(local_meet(d, 1, 1, 2), PreconditionError);
}

TEST_CASE("local completeness") {
  CHECK(is_locally_complete(fixtures::n5()));
  CHECK(is_locally_complete(OrdSet::discrete(3)));
  // Two minimal elements below a common top have no meet.
  const OrdSet vee = from_pairs(3, {{0, 2}, {1, 2}});
  const Verdict v = is_locally_complete(vee);
  CHECK_FALSE(v);
  CHECK(v.witness->base.size() == 3);
  CHECK_THROWS_AS(LocalLattice{vee}, NotLocallyComplete);
  CHECK_THROWS_AS(is_locally_cartesian_closed(vee), NotLocallyComplete);
}

TEST_CASE("distributivity of down-sets") {
  CHECK(is_locally_cartesian_closed(fixtures::diamond()));
  CHECK(is_locally_cartesian_closed(OrdSet::chain(4)));
  const Verdict n5 = is_locally_cartesian_closed(fixtures::n5());
  CHECK_FALSE(n5);
  CHECK(n5.witness->base.size() == 4);
  // The lattice tables give the same verdict and witness.
  for (std::size_t n = 1; n <= 4; ++n)
    for (const OrdSet& x : all_preorders(n)) {
      if (!is_locally_complete(x)) continue;
      const LocalLattice l(x);
      const Verdict direct = is_locally_cartesian_closed(x);
      CHECK(l.cartesian_closed().holds == direct.holds);
      CHECK(l.cartesian_closed().witness == direct.witness);
    }
  const LocalLattice l(fixtures::n5());
  CHECK(l.join(4, 1, 2) == 4);
  CHECK(l.meet(4, 3, 2) == 0);
  CHECK(l.bottom(3) == 0);
  CHECK_THROWS_AS(l.meet(1, 1, 2), PreconditionError);
}

TEST_CASE("components and posetal reflection") {
  const OrdSet x = from_pairs(5, {{0, 1}, {3, 1}, {2, 2}, {4, 4}});
  const auto comps = connected_components(x);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].members == std::vector<Element>{0, 1, 3});
  CHECK(comps[1].members == std::vector<Element>{2});
  CHECK_FALSE(component_bottom(x, comps[0]).has_value());
  CHECK(component_bottom(x, comps[1]) == Element{2});

  const OrdSet pre = from_pairs(3, {{0, 1}, {1, 0}, {1, 2}});
  const PosetalReflection r = posetal_reflection(pre);
  CHECK(r.poset.size() == 2);
  CHECK(r.quotient == std::vector<Element>{0, 0, 1});
  CHECK(r.representative == std::vector<Element>{0, 2});
  CHECK(is_poset(r.poset));
}

TEST_CASE("automorphisms") {
  CHECK(automorphisms(OrdSet::discrete(3)).size() == 6);
  CHECK(automorphisms(OrdSet::chain(3)).size() == 1);
  CHECK(automorphisms(fixtures::diamond()).size() == 2);
}
