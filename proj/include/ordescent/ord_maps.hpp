#pragma once

#include <span>
#include <vector>

#include "ordescent/ordset.hpp"

namespace ordescent {

/// A monotone map between finite ordered sets. Validated on construction.
class MonotoneMap {
 public:
  MonotoneMap() = default;
  MonotoneMap(OrdSet source, OrdSet target, std::vector<Element> mapping);

  static MonotoneMap identity(const OrdSet& x);

  const OrdSet& source() const { return source_; }
  const OrdSet& target() const { return target_; }
  const std::vector<Element>& mapping() const { return mapping_; }
  Element operator()(Element a) const { return mapping_[a]; }

  bool operator==(const MonotoneMap&) const = default;

 private:
  OrdSet source_;
  OrdSet target_;
  std::vector<Element> mapping_;
};

/// g after f.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

/// Witness domain = {i, j} with i <= j but mapping(i) !<= mapping(j).
/// Throws IndexError on a wrong-length mapping or an out-of-range image.
Verdict is_monotone(const OrdSet& source, const OrdSet& target, std::span<const Element> mapping);

struct OrdPullback {
  OrdSet object;
  std::vector<ElementPair> pairs;  ///< (a, c) with f(a) = g(c), lexicographic
  MonotoneMap first;
  MonotoneMap second;
};

/// Pullback of f: A -> B and g: C -> B with the componentwise order.
OrdPullback pullback_ord(const MonotoneMap& f, const MonotoneMap& g);

// The predicates below take the map in unpacked form; they do not re-check
// monotonicity. Witness positions are codomain elements b0, b1, (b2).

/// Witness codomain = {b} for the first element without preimage.
Verdict is_surjective(const OrdSet& source, const OrdSet& target, std::span<const Element> mapping);

/// Every b0 <= b1 lifts to some a0 <= a1. Witness codomain = {b0, b1}.
Verdict is_descent_ord(const OrdSet& source, const OrdSet& target, std::span<const Element> mapping);

/// Every b0 <= b1 <= b2 lifts to some a0 <= a1 <= a2. Witness codomain = {b0, b1, b2}.
Verdict is_effective_descent_ord(const OrdSet& source, const OrdSet& target,
                                 std::span<const Element> mapping);

/// Surjective and the order of the target is generated by the image of the
/// source order. Witness: codomain = {b} (not surjective) or {b0, b1}
/// (b0 <= b1 not generated).
Verdict is_regular_epi_ord(const OrdSet& source, const OrdSet& target, std::span<const Element> mapping);

inline Verdict is_surjective(const MonotoneMap& f) { return is_surjective(f.source(), f.target(), f.mapping()); }
inline Verdict is_descent_ord(const MonotoneMap& f) {
  return is_descent_ord(f.source(), f.target(), f.mapping());
}
inline Verdict is_effective_descent_ord(const MonotoneMap& f) {
  return is_effective_descent_ord(f.source(), f.target(), f.mapping());
}
inline Verdict is_regular_epi_ord(const MonotoneMap& f) {
  return is_regular_epi_ord(f.source(), f.target(), f.mapping());
}

namespace condition {
inline constexpr const char* kMonotone = "monotone";
inline constexpr const char* kSurjective = "surjective";
inline constexpr const char* kPairLifting = "pair lifting";
inline constexpr const char* kTripleLifting = "triple lifting";
inline constexpr const char* kOrderGenerated = "order generated by image";
}  // namespace condition

}  // namespace ordescent
