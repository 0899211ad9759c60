#include <doctest.h>

#include "ordescent/ord_maps.hpp"

using namespace ordescent;

namespace {

OrdSet from_pairs(std::size_t n, std::vector<ElementPair> pairs) { return transitive_reflexive_closure(pairs, n); }

// Every b0 <= ... <= b_{k-1} has a chain a0 <= ... with f(ai) = bi.
bool lifts_chains(const OrdSet& a, const OrdSet& b, const std::vector<Element>& f, std::size_t k) {
  std::vector<Element> bs(k, 0);
  auto next = [&] {
    for (std::size_t i = 0; i < k; ++i) {
      if (++bs[i] < b.size()) return true;
      bs[i] = 0;
    }
    return false;
  };
  do {
    bool chain = true;
    for (std::size_t i = 0; i + 1 < k; ++i) chain = chain && b.leq(bs[i], bs[i + 1]);
    if (!chain) continue;
    std::vector<Element> as(k, 0);
    bool found = false;
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (found) return;
      if (i == k) {
        found = true;
        return;
      }
      for (Element x = 0; x < a.size(); ++x) {
        if (f[x] != bs[i] || (i && !a.leq(as[i - 1], x))) continue;
        as[i] = x;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    if (!found) return false;
  } while (next());
  return true;
}

}  // namespace

TEST_CASE("monotonicity is validated with a witness") {
  const OrdSet c2 = OrdSet::chain(2);
  CHECK_THROWS_AS(MonotoneMap(c2, c2, {1, 0}), ValidationError);
  const Verdict v = is_monotone(c2, c2, std::vector<Element>{1, 0});
  CHECK(v.witness->domain == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(is_monotone(c2, c2, std::vector<Element>{0}), IndexError);
  CHECK_THROWS_AS(is_monotone(c2, c2, std::vector<Element>{0, 2}), IndexError);
  const MonotoneMap id = MonotoneMap::identity(c2);
  CHECK(compose(id, id) == id);
}

TEST_CASE("pullback in Ord has the componentwise order") {
  const OrdSet c2 = OrdSet::chain(2);
  const MonotoneMap f(OrdSet::discrete(2), OrdSet::discrete(1), {0, 0});
  const MonotoneMap g(c2, OrdSet::discrete(1), {0, 0});
  const OrdPullback p = pullback_ord(f, g);
  CHECK(p.pairs.size() == 4);
  CHECK(p.object.strict_pairs().size() == 2);
  CHECK(p.first.mapping() == std::vector<Element>{0, 0, 1, 1});
}

TEST_CASE("descent predicates in Ord") {
  // The V-shaped cover of a 3-chain: b0 <= b1 lifts, b1 <= b2 lifts, the
  // triple does not.
  const OrdSet a = from_pairs(4, {{0, 1}, {2, 3}});
  const OrdSet b = OrdSet::chain(3);
  const std::vector<Element> f{0, 1, 1, 2};
  CHECK(is_surjective(a, b, f));
  CHECK(is_regular_epi_ord(a, b, f));
  CHECK_FALSE(is_descent_ord(a, b, f));
  const Verdict eff = is_effective_descent_ord(a, b, f);
  CHECK_FALSE(eff);
  CHECK(eff.witness->condition == condition::kTripleLifting);

  const OrdSet a2 = from_pairs(4, {{0, 1}, {2, 3}, {0, 3}});
  CHECK(is_descent_ord(a2, b, f));
  const Verdict triple = is_effective_descent_ord(a2, b, f);
  CHECK_FALSE(triple);
  CHECK(triple.witness->codomain == std::vector<std::size_t>{0, 1, 2});

  const Verdict s = is_surjective(OrdSet::discrete(1), b, std::vector<Element>{1});
  CHECK(s.witness->codomain == std::vector<std::size_t>{0});
  const Verdict gen = is_regular_epi_ord(OrdSet::discrete(2), OrdSet::chain(2), std::vector<Element>{0, 1});
  CHECK_FALSE(gen);
  CHECK(gen.witness->codomain == std::vector<std::size_t>{0, 1});
}

TEST_CASE("descent predicates agree with chain lifting on all small maps") {
  for (std::size_t na = 1; na <= 3; ++na)
    for (std::size_t nb = 1; nb <= 3; ++nb)
      for (const OrdSet& a : all_preorders(na))
        for (const OrdSet& b : all_preorders(nb)) {
          std::vector<Element> f(na, 0);
          for (;;) {
            if (is_monotone(a, b, f)) {
              const bool surj = lifts_chains(a, b, f, 1);
              CHECK(is_surjective(a, b, f).holds == surj);
              CHECK(is_descent_ord(a, b, f).holds == (surj && lifts_chains(a, b, f, 2)));
              CHECK(is_effective_descent_ord(a, b, f).holds == (surj && lifts_chains(a, b, f, 3)));
            }
            std::size_t i = 0;
            while (i < na && ++f[i] == nb) f[i++] = 0;
            if (i == na) break;
          }
        }
}
