#include <doctest.h>

#include <algorithm>

#include "ordescent/descent_check.hpp"
#include "ordescent/fixtures.hpp"
#include "ordescent/replay.hpp"

using namespace ordescent;

namespace {

// Join recovery over lifted pairs, with joins found by scanning X.
bool naive_condition_2(const OrdSet& x, const LaxMorphism& f) {
  const OrdSet& b = f.target.carrier;
  const OrdSet& a = f.source.carrier;
  auto meet = [&](Element p, Element q) {
    for (Element z = 0; z < x.size(); ++z) {
      if (!x.leq(z, p) || !x.leq(z, q)) continue;
      bool greatest = true;
      for (Element l = 0; l < x.size(); ++l)
        if (x.leq(l, p) && x.leq(l, q) && !x.leq(l, z)) greatest = false;
      if (greatest) return z;
    }
    return x.size();
  };
  for (Element b0 = 0; b0 < b.size(); ++b0)
    for (Element b1 = 0; b1 < b.size(); ++b1) {
      if (!b.leq(b0, b1)) continue;
      const Element top = f.target(b0);
      for (Element w = 0; w < x.size(); ++w) {
        if (!x.leq(w, top)) continue;
        std::vector<Element> parts;
        for (Element a0 = 0; a0 < a.size(); ++a0)
          for (Element a1 = 0; a1 < a.size(); ++a1)
            if (f(a0) == b0 && f(a1) == b1 && a.leq(a0, a1)) parts.push_back(meet(w, f.source(a0)));
        // Least upper bound of `parts` below `top`.
        std::optional<Element> join;
        for (Element u = 0; u < x.size() && !join; ++u) {
          auto upper = [&](Element v) {
            return x.leq(v, top) && std::all_of(parts.begin(), parts.end(), [&](Element p) { return x.leq(p, v); });
          };
          if (!upper(u)) continue;
          bool least = true;
          for (Element v = 0; v < x.size(); ++v)
            if (upper(v) && !x.leq(u, v)) least = false;
          if (least) join = u;
        }
        if (!join || !x.iso(*join, w)) return false;
      }
    }
  return true;
}

// A disjoint sum of two copies of `inst` over X + X.
Instance doubled(const Instance& inst) {
  const std::size_t n = inst.x.size(), na = inst.f.source.size(), nb = inst.f.target.size();
  auto sum = [](const OrdSet& o) {
    std::vector<ElementPair> pairs;
    for (auto [i, j] : o.strict_pairs()) {
      pairs.emplace_back(i, j);
      pairs.emplace_back(i + o.size(), j + o.size());
    }
    return transitive_reflexive_closure(pairs, 2 * o.size());
  };
  auto shift = [](std::vector<Element> v, std::size_t by) {
    const std::size_t half = v.size();
    for (std::size_t i = 0; i < half; ++i) v.push_back(v[i] + by);
    return v;
  };
  Instance out;
  out.x = sum(inst.x);
  out.f.source = {sum(inst.f.source.carrier), shift(inst.f.source.valuation, n)};
  out.f.target = {sum(inst.f.target.carrier), shift(inst.f.target.valuation, n)};
  out.f.map = shift(inst.f.map, nb);
  (void)na;
  return out;
}

}  // namespace

TEST_CASE("condition-independence fixtures") {
  struct Case {
    Instance inst;
    bool c1, c2, c3;
  };
  for (const Case& c : {Case{fixtures::sre(), true, false, true}, Case{fixtures::cond3(), true, true, false},
                        Case{fixtures::js(), false, true, true}}) {
    const LocalLattice x(c.inst.x);
    const Characterization ch = characterize(x, c.inst.f);
    CHECK(ch.condition1.holds == c.c1);
    CHECK(ch.condition2.holds == c.c2);
    CHECK(ch.condition3.holds == c.c3);
    CHECK_FALSE(ch.holds());
    CHECK_FALSE(is_effective_descent_lax(x, c.inst.f));
    for (const Verdict* v : {&ch.condition1, &ch.condition2, &ch.condition3})
      if (!v->holds) CHECK(replay_witness(c.inst.x, c.inst.f, *v->witness));
    CHECK(naive_condition_2(c.inst.x, c.inst.f) == c.c2);
  }
}

TEST_CASE("sre fixture: stable regular epi, not effective") {
  const Instance inst = fixtures::sre();
  const LocalLattice x(inst.x);
  CHECK(is_regular_epi_lax(x, inst.f));
  CHECK(is_stable_regular_epi_lax(x, inst.f));
  CHECK(stable_regular_epi_direct(x, inst.f));
  const Verdict c2 = char_condition_2(x, inst.f);
  CHECK(c2.witness->codomain == std::vector<std::size_t>{0, 1});
  CHECK(c2.witness->base == std::vector<std::size_t>{1});
  CHECK(evaluate(Predicate::OrdEffectiveDescent, x, inst.f));
  CHECK(is_effective_descent_lax_lcc(x, inst.f).holds == false);
}

TEST_CASE("cond3 fixture: gluing witness sigma = (u, v)") {
  const Instance inst = fixtures::cond3();
  const LocalLattice x(inst.x);
  const Verdict c3 = char_condition_3(x, inst.f);
  REQUIRE_FALSE(c3);
  CHECK(c3.witness->family == std::vector<Element>{1, 2});
  CHECK_THROWS_AS(is_effective_descent_lax_lcc(x, inst.f), PreconditionError);
}

TEST_CASE("identity is effective for every predicate") {
  for (const Instance& base : {fixtures::sre(), fixtures::cond3(), fixtures::js()}) {
    const Instance id = fixtures::identity_of(base);
    const LocalLattice x(id.x);
    for (Predicate p : kAllPredicates) {
      if (p == Predicate::EffectiveDescentLcc && !x.cartesian_closed()) continue;
      CHECK_MESSAGE(evaluate(p, x, id.f), predicate_name(p));
    }
  }
}

TEST_CASE("predicate names round-trip") {
  for (Predicate p : kAllPredicates) CHECK(parse_predicate(predicate_name(p)) == p);
  CHECK_FALSE(parse_predicate("nope").has_value());
  CHECK(predicate_name(Predicate::EffectiveDescentLcc) == "edm-lcc");
}

TEST_CASE("componentwise evaluation matches the whole") {
  for (const Instance& base : {fixtures::sre(), fixtures::js(), fixtures::cond3()}) {
    const Instance two = doubled(base);
    const LocalLattice x(two.x);
    CHECK(componentwise(two.x, two.f).size() == 2);
    for (Predicate p : kAllPredicates) {
      Verdict whole, parts;
      bool whole_pre = false, parts_pre = false;
      try { whole = evaluate(p, x, two.f); } catch (const PreconditionError&) { whole_pre = true; }
      try { parts = evaluate_componentwise(p, x, two.f); } catch (const PreconditionError&) { parts_pre = true; }
      CHECK(whole_pre == parts_pre);
      if (whole_pre || parts_pre) continue;
      CHECK(whole.holds == parts.holds);
      if (!parts.holds) CHECK(replay_witness(two.x, two.f, *parts.witness));
    }
  }
}

TEST_CASE("posetal variants") {
  const Instance inst = fixtures::sre();
  const LocalLattice x(inst.x);
  for (Predicate p : kAllPredicates) {
    if (p == Predicate::EffectiveDescentLcc) continue;
    CHECK(poset_variant(p, x, inst.f).holds == evaluate(p, x, inst.f).holds);
  }
  // A two-element cycle as X.
  Instance cyc = fixtures::identity_of(inst);
  cyc.x = transitive_reflexive_closure(std::vector<ElementPair>{{0, 1}, {1, 0}}, 2);
  const LocalLattice cx(cyc.x);
  CHECK_THROWS_AS(poset_variant(Predicate::EffectiveDescent, cx, cyc.f), PreconditionError);
  const ReflectedBase r = reflect_base(cx, cyc.f);
  CHECK(r.x.size() == 1);
  CHECK(evaluate(Predicate::EffectiveDescent, r.x, r.f).holds == evaluate(Predicate::EffectiveDescent, cx, cyc.f).holds);
}

TEST_CASE("sufficient conditions") {
  const Instance inst = fixtures::sre();
  const LocalLattice x(inst.x);
  // Over the top level the fiber map misses the pair b0 <= b1.
  CHECK_FALSE(cln_sufficient(inst.x, inst.f));
  CHECK_FALSE(cj_sufficient(inst.x, inst.f));
  const Instance id = fixtures::identity_of(inst);
  CHECK(cln_sufficient(id.x, id.f));
  CHECK(cj_sufficient(id.x, id.f));
}
