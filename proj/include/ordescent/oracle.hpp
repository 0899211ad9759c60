#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ordescent/descent_check.hpp"

namespace ordescent {

// Brute-force checks that do not use any of the closed-form
// characterizations: coequalizers are built from kernel pairs, descent data
// are explicit objects with a transition map, and the comparison functor is
// tested on every object up to a size bound.

/// A negative answer is always conclusive. A positive answer of a bounded
/// search only covers objects up to `bound`.
struct OracleVerdict {
  bool holds = true;
  bool conclusive = true;
  std::size_t bound = 0;
  std::optional<Witness> witness;
  std::string detail;

  explicit operator bool() const { return holds; }
};

/// Kernel pair of f, coequalizer of its projections, and the comparison from
/// the coequalizer to the codomain of f. Holds iff the comparison is an
/// isomorphism. Conclusive either way.
OracleVerdict coequalizer_oracle(const MonotoneMap& f);
OracleVerdict coequalizer_oracle(const LocalLattice& x, const LaxMorphism& f);

/// The kernel pair (A x_B A, alpha(a) /\ alpha(a')) with its projections.
struct KernelPair {
  LaxPullback pullback;  ///< pairs are (a1, a2)
  LaxMorphism first() const { return pullback.first; }
  LaxMorphism second() const { return pullback.second; }
};
KernelPair kernel_pair(const LocalLattice& x, const LaxMorphism& f);

/// An object q: (C, gamma) -> (A, alpha) over the domain of f, with a
/// transition from the pullback of q along the first kernel-pair projection
/// to the pullback along the second. Both pullbacks are indexed as
/// pullback_laxcomma(projection, q) lists them: pairs (k, c), k an index of
/// the kernel pair. `transition[i]` is the image of the i-th pair.
struct DescentDatum {
  LaxMorphism over;
  std::vector<std::size_t> transition;

  bool operator==(const DescentDatum&) const = default;
};

/// Checks that `over` is a morphism into the domain of f and the transition
/// is an isomorphism over the kernel pair satisfying the unit and cocycle
/// laws. The cocycle law is evaluated on the triple pullback, built as the
/// pullback of the two kernel-pair projections.
Verdict check_descent_datum(const LocalLattice& x, const LaxMorphism& f, const DescentDatum& datum);

/// The datum obtained by pulling d: (D, delta) -> (B, beta) back along f,
/// with the transition induced by the kernel-pair projections.
DescentDatum canonical_descent_datum(const LocalLattice& x, const LaxMorphism& d, const LaxMorphism& f);

/// Exhaustive isomorphism test between two data over the same f.
bool descent_data_isomorphic(const LocalLattice& x, const LaxMorphism& f, const DescentDatum& lhs,
                             const DescentDatum& rhs);

/// Visits every valid descent datum with |C| <= bound, one per isomorphism
/// class, in a fixed order (size, carrier class, q, gamma, transition). The
/// visitor returns false to stop. Throws CapExceeded after `cap` candidates.
void for_each_descent_datum(const LocalLattice& x, const LaxMorphism& f, std::size_t bound,
                            const std::function<bool(const DescentDatum&)>& visit,
                            std::size_t cap = kDefaultEnumerationCap);
std::vector<DescentDatum> enumerate_descent_data(const LocalLattice& x, const LaxMorphism& f, std::size_t bound,
                                                 std::size_t cap = kDefaultEnumerationCap);

/// Searches for d: (D, delta) -> (B, beta), |D| <= |C|, whose canonical datum
/// is isomorphic to `datum`.
std::optional<LaxMorphism> glue_descent_datum(const LocalLattice& x, const LaxMorphism& f,
                                              const DescentDatum& datum);

/// Objects d: (D, delta) -> (B, beta) with |D| <= bound, one per isomorphism
/// class over (B, beta).
std::vector<LaxMorphism> objects_over(const LocalLattice& x, const LaxObject& base, std::size_t bound);

/// Every datum with |C| <= bound is isomorphic to a canonical one.
/// Witness: family = gamma, domain = q, base = strict pairs of C flattened,
/// codomain = transition.
OracleVerdict essential_surjectivity_check(const LocalLattice& x, const LaxMorphism& f, std::size_t bound,
                                           std::size_t cap = kDefaultEnumerationCap);

/// The comparison on one pair of objects over (B, beta): h -> id x h is a
/// bijection from maps D -> D' over (B, beta) onto morphisms of the pulled
/// back data. Witness as in full_faithfulness_check.
Verdict comparison_on_pair(const LocalLattice& x, const LaxMorphism& f, const LaxMorphism& d, const LaxMorphism& d2);

/// For objects D, D' over (B, beta) with sizes <= bound, h -> id x h is a
/// bijection from maps D -> D' over (B, beta) onto morphisms of the canonical
/// data. Witness: domain = D's map to B, codomain = D''s map to B,
/// family = delta followed by delta', base = strict pairs of the disjoint
/// union D + D' flattened (D' shifted by |D|). `cap` bounds the candidates
/// examined on a single pair.
OracleVerdict full_faithfulness_check(const LocalLattice& x, const LaxMorphism& f, std::size_t bound,
                                      std::size_t cap = kDefaultEnumerationCap);
/// The same over a precomputed objects_over(x, f.target, bound).
OracleVerdict full_faithfulness_check(const LocalLattice& x, const LaxMorphism& f,
                                      std::span<const LaxMorphism> objects, std::size_t bound,
                                      std::size_t cap = kDefaultEnumerationCap);

/// For every d: (D, delta) -> (B, beta) with |D| <= bound, the projection
/// A x_B D -> D is the coequalizer of its kernel pair. When this holds, the
/// comparison is bijective on every pair (D, D') with |D| <= bound and D' of
/// any size; it is the source-bounded form of full_faithfulness_check.
/// Witness: domain = D's map to B, family = delta, base = strict pairs of D
/// flattened.
OracleVerdict pullback_coequalizer_check(const LocalLattice& x, const LaxMorphism& f, std::size_t bound);
OracleVerdict pullback_coequalizer_check(const LocalLattice& x, const LaxMorphism& f,
                                         std::span<const LaxMorphism> objects, std::size_t bound);

/// Mixed objects (C, chi) have a monotone carrier but an arbitrary
/// valuation chi. For every such object with |C| <= bound and every monotone
/// g: C -> B with chi <= beta o g, the pullback along f carries the meet
/// valuation; if that valuation is monotone while chi is not, the mixed
/// object descends along f without being an object of the lax comma
/// category, and f is not effective for descent.
/// Requires f effective for descent in Ord and in Fam(X); throws
/// PreconditionError naming the failing one.
/// Witness: domain = {c0, c1} with c0 <= c1, chi(c0) !<= chi(c1);
/// codomain = g; family = chi; base = strict pairs of C flattened.
OracleVerdict obstruction_test(const LocalLattice& x, const LaxMorphism& f, std::size_t bound);

/// Strict pairs of an order flattened as i0, j0, i1, j1, ...
std::vector<std::size_t> flatten_strict_pairs(const OrdSet& c);
OrdSet order_from_strict_pairs(std::size_t size, std::span<const std::size_t> flat);

namespace condition {
inline constexpr const char* kCoequalizerCarrier = "coequalizer carrier";
inline constexpr const char* kCoequalizerOrder = "coequalizer order";
inline constexpr const char* kCoequalizerValuation = "coequalizer valuation";
inline constexpr const char* kTransitionOverKernel = "transition over kernel pair";
inline constexpr const char* kTransitionIso = "transition isomorphism";
inline constexpr const char* kUnitLaw = "unit law";
inline constexpr const char* kCocycleLaw = "cocycle law";
inline constexpr const char* kUngluable = "descent datum does not glue";
inline constexpr const char* kNotFaithful = "comparison not faithful";
inline constexpr const char* kNotFull = "comparison not full";
inline constexpr const char* kPullbackNotCoequalizer = "pullback projection not a coequalizer";
inline constexpr const char* kMixedDescends = "non-monotone valuation descends";
}  // namespace condition

}  // namespace ordescent
