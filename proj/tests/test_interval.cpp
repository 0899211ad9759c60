#include <doctest.h>

#include "ordescent/interval.hpp"

using namespace ordescent::interval;

namespace {
const Rational kHalf(1, 2);
const Rational kZero(0);
const Rational kOne(1);
}  // namespace

TEST_CASE("interval sets normalize") {
  const IntervalSet a = IntervalSet::half_open(kZero, kHalf).unite(IntervalSet::closed(kHalf, kOne));
  CHECK(a == IntervalSet::closed(kZero, kOne));
  CHECK(IntervalSet::open(kZero, kHalf).unite(IntervalSet::point(kHalf)).pieces().size() == 1);
  CHECK(IntervalSet::open(kZero, kHalf).intersect(IntervalSet::closed(kHalf, kOne)).empty());
  CHECK(IntervalSet::closed(kZero, kHalf).intersect(IntervalSet::closed(kHalf, kOne)) == IntervalSet::point(kHalf));
  CHECK(IntervalSet::open(kZero, kHalf).contains(Rational(1, 4)));
  CHECK_FALSE(IntervalSet::open(kZero, kHalf).contains(kHalf));
}

TEST_CASE("down closure and clamping") {
  CHECK(IntervalSet::point(kHalf).down_closure() == IntervalSet::closed(kZero, kHalf));
  CHECK(IntervalSet::open(Rational(1, 4), kHalf).down_closure() == IntervalSet::half_open(kZero, kHalf));
  CHECK(IntervalSet::closed(kZero, kOne).clamp_min(kHalf) == IntervalSet::closed(kZero, kHalf));
  CHECK(IntervalSet::closed(Rational(3, 4), kOne).clamp_min(kHalf) == IntervalSet::point(kHalf));
}

TEST_CASE("suprema are exact") {
  const Supremum open = interval_sup(IntervalSet::half_open(kZero, kHalf));
  CHECK(open.value == kHalf);
  CHECK_FALSE(open.attained);
  const Supremum closed = interval_sup(IntervalSet::closed(kZero, kHalf));
  CHECK(closed.attained);
  const Supremum none = interval_sup(IntervalSet());
  CHECK(none.empty);
  CHECK(none.value == kZero);
}

TEST_CASE("sampling grid") {
  const auto g = sampling_grid(0);
  // Farey sequence of order 8 has 23 terms.
  CHECK(g.size() == 23);
  CHECK(g.front() == kZero);
  CHECK(g.back() == kOne);
  const auto h = sampling_grid(100);
  CHECK(h.size() > g.size());
  CHECK(std::is_sorted(h.begin(), h.end()));
  CHECK(h == sampling_grid(100));
  CHECK(to_string(kHalf) == "1/2");
}

TEST_CASE("product order example is effective") {
  const ExampleReport r = example_I_verdict();
  CHECK(r.ord_effective_descent);
  CHECK(r.stable_regular_epi);
  CHECK(r.effective_descent);
  CHECK(r.checks > 0);
}

TEST_CASE("sparse order example is a stable regular epi but not effective") {
  const ExampleReport r = example_II_verdict();
  CHECK(r.ord_effective_descent);
  CHECK(r.stable_regular_epi);
  CHECK_FALSE(r.effective_descent);
  CHECK(r.witness_level == kHalf);
  CHECK(r.witness_join == kZero);
}
