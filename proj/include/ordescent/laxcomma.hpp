#pragma once

#include <span>
#include <vector>

#include "ordescent/fam.hpp"
#include "ordescent/ord_maps.hpp"

namespace ordescent {

// Objects of the lax comma category over X are ordered sets with a monotone
// valuation into X; a morphism f: (A, alpha) -> (B, beta) is a monotone map
// with alpha(a) <= beta(f(a)). As with families, X itself is passed
// explicitly to every operation.

struct LaxObject {
  OrdSet carrier;
  std::vector<Element> valuation;

  std::size_t size() const { return carrier.size(); }
  Element operator()(Element a) const { return valuation[a]; }
  bool operator==(const LaxObject&) const = default;
};

struct LaxMorphism {
  LaxObject source;
  LaxObject target;
  std::vector<Element> map;

  Element operator()(Element a) const { return map[a]; }
  bool operator==(const LaxMorphism&) const = default;
};

/// Witness domain = {a, a'} for a <= a' with alpha(a) !<= alpha(a').
Verdict is_lax_object(const OrdSet& x, const OrdSet& carrier, std::span<const Element> valuation);

/// Throws ValidationError (non-monotone valuation) or IndexError.
LaxObject make_lax_object(const OrdSet& x, OrdSet carrier, std::vector<Element> valuation);

/// Monotone carrier map plus the lax inequality. Witness condition is
/// "monotone" (domain {a, a'}) or "lax inequality" (domain {a}).
/// Throws IndexError on malformed input.
Verdict is_lax_morphism(const OrdSet& x, const LaxObject& source, const LaxObject& target,
                        std::span<const Element> map);

LaxMorphism make_lax_morphism(const OrdSet& x, LaxObject source, LaxObject target, std::vector<Element> map);
LaxMorphism lax_identity(const LaxObject& object);
/// g after f.
LaxMorphism compose(const LaxMorphism& g, const LaxMorphism& f);

struct LaxPullback {
  LaxObject object;
  std::vector<ElementPair> pairs;  ///< (a, c) with f(a) = g(c), lexicographic
  LaxMorphism first;
  LaxMorphism second;
};

/// Pullback of f: (A, alpha) -> (B, beta) and g: (C, gamma) -> (B, beta).
/// Carrier is the pullback in Ord, valuation (a, c) -> gamma(c) /\ alpha(a)
/// with the meet taken below beta(b) for the common image b.
LaxPullback pullback_laxcomma(const LocalLattice& x, const LaxMorphism& f, const LaxMorphism& g);

struct Fiber {
  OrdSet order;
  std::vector<Element> inclusion;  ///< ascending members of A
};

/// A_x = {a : x <= alpha(a)} with the induced order.
Fiber fiber(const OrdSet& x, const LaxObject& a, Element level);

/// The restriction A_x -> B_x of f; indices refer to the two fibers.
MonotoneMap fiber_map(const OrdSet& x, const LaxMorphism& f, Element level);

/// The fiber at `level` as an ordered set.
OrdSet pi_at(const OrdSet& x, const LaxObject& a, Element level);

FamObject underlying_fam(const LaxObject& a);
FamMorphism underlying_fam(const LaxMorphism& f);
MonotoneMap underlying_ord(const LaxMorphism& f);

namespace condition {
inline constexpr const char* kLaxInequality = "lax inequality";
inline constexpr const char* kMonotoneValuation = "monotone valuation";
}  // namespace condition

}  // namespace ordescent
