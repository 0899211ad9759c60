#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace ordescent::interval {

// Exact reproduction of the two lax morphisms over X = [0,1] with
// A = {(x,y) : y < x or y = x = 0}, f = first projection, alpha = second
// projection. A is never materialized: the index sets that the conditions
// join over are written down as finite unions of intervals.

using Rational = boost::rational<std::int64_t>;

struct Interval {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool operator==(const Interval&) const = default;
};

/// A finite union of intervals in [0,1], kept sorted, disjoint and maximally
/// merged, so equal sets have equal representations.
class IntervalSet {
 public:
  IntervalSet() = default;
  static IntervalSet closed(Rational lo, Rational hi);
  static IntervalSet half_open(Rational lo, Rational hi);  ///< [lo, hi)
  static IntervalSet open(Rational lo, Rational hi);
  static IntervalSet point(Rational p);
  static IntervalSet of(std::vector<Interval> pieces);

  bool empty() const { return pieces_.empty(); }
  bool contains(Rational r) const;
  const std::vector<Interval>& pieces() const { return pieces_; }

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  /// {y in [0,1] : y <= s for some s in the set}.
  IntervalSet down_closure() const;
  /// Image under y -> min(y, w).
  IntervalSet clamp_min(Rational w) const;

  bool operator==(const IntervalSet&) const = default;

 private:
  void normalize();
  std::vector<Interval> pieces_;
};

struct Supremum {
  Rational value;
  bool empty = false;  ///< sup of the empty set is reported as 0 with this flag
  bool attained = false;
};

Supremum interval_sup(const IntervalSet& s);

std::string to_string(const Rational& r);
std::string to_string(const IntervalSet& s);

/// Every rational in [0,1] with denominator at most 8, followed by `extra`
/// pseudo-random rationals drawn with a fixed seed; sorted, no duplicates.
std::vector<Rational> sampling_grid(std::size_t extra = 100, std::uint64_t seed = 20240611);

struct ExampleReport {
  bool ord_effective_descent = false;
  bool stable_regular_epi = false;
  bool effective_descent = false;
  std::size_t samples = 0;
  std::size_t checks = 0;
  /// For a negative verdict: the sampled level x and the join of the lifted
  /// valuations there, which falls strictly below x.
  Rational witness_level{0};
  Rational witness_join{0};
  std::vector<std::string> lines;
};

/// Product order on A. Effective descent via the distributive shortcut:
/// triple lifting and, for b0 <= b1, sup of lifted valuations == b0.
ExampleReport example_I_verdict();

/// Order (x,y) <= (x',y') iff equal or x <= x' and y = y' = 0.
ExampleReport example_II_verdict();

}  // namespace ordescent::interval
