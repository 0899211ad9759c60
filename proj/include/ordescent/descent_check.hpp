#pragma once

#include <string_view>
#include <vector>

#include "ordescent/laxcomma.hpp"

namespace ordescent {

// Closed-form characterizations of (stable / effective) regular epimorphisms
// in the lax comma category. Every function takes X as a LocalLattice, so
// the local-completeness precondition is checked when the lattice is built.
// Joins are always taken inside the down-set of a codomain valuation, so no
// bottom element of X is needed.

/// Regular epi in Ord, and beta(b) ~= join of {alpha(a) : f(a) <= b} below
/// beta(b). Witness codomain = {b} for the valuation part.
Verdict is_regular_epi_lax(const LocalLattice& x, const LaxMorphism& f);

/// Descent in Ord and descent of the underlying family morphism.
Verdict is_stable_regular_epi_lax(const LocalLattice& x, const LaxMorphism& f);

/// The same predicate evaluated straight from the formula
///   for all b, w <= beta(b): w ~= join of {w /\ alpha(a) : f(a) = b},
/// with meets and joins recomputed on the bare order rather than taken from
/// the lattice tables or the family layer.
Verdict stable_regular_epi_direct(const LocalLattice& x, const LaxMorphism& f);

/// Condition (1): the carrier map is effective for descent in Ord.
Verdict char_condition_1(const LocalLattice& x, const LaxMorphism& f);

/// Condition (2): for all b0 <= b1 and w <= beta(b0),
///   w ~= join of {w /\ alpha(a0) : a0 <= a1, f(a0) = b0, f(a1) = b1}.
/// Witness codomain = {b0, b1}, base = {w}.
Verdict char_condition_2(const LocalLattice& x, const LaxMorphism& f);

/// Condition (3): every descent datum sigma <= alpha glues fiberwise,
///   alpha(a') /\ join{sigma(a) : f(a) = b} ~= sigma(a')  for f(a') = b.
/// Witness family = sigma, codomain = {b}, domain = {a'}.
Verdict char_condition_3(const LocalLattice& x, const LaxMorphism& f, std::size_t cap = kDefaultEnumerationCap);

/// Condition (3) with the join taken over all of A instead of the fiber and
/// meets/joins taken globally in X. Fails (condition "global join") when the
/// join or the meet does not exist. Only used to flag instances where the two
/// readings differ.
Verdict char_condition_3_global_join(const LocalLattice& x, const LaxMorphism& f,
                                     std::size_t cap = kDefaultEnumerationCap);

struct Characterization {
  Verdict condition1;
  Verdict condition2;
  Verdict condition3;

  bool holds() const { return condition1.holds && condition2.holds && condition3.holds; }
  /// The first failing condition's verdict, or a passing verdict.
  Verdict verdict() const;
};

/// All three conditions evaluated on X as a whole (no component routing).
Characterization characterize(const LocalLattice& x, const LaxMorphism& f, std::size_t cap = kDefaultEnumerationCap);

/// Conditions (1), (2), (3) in order, stopping at the first failure. Routed
/// through the connected components of X; witnesses refer to f itself.
Verdict is_effective_descent_lax(const LocalLattice& x, const LaxMorphism& f,
                                 std::size_t cap = kDefaultEnumerationCap);

/// Condition (1) plus: for all b0 <= b1,
///   beta(b0) ~= join of {alpha(a0) : a0 <= a1, f(ai) = bi}.
/// Throws PreconditionError unless every down-set of X is distributive.
Verdict is_effective_descent_lax_lcc(const LocalLattice& x, const LaxMorphism& f);

/// Effective descent in Ord, and every fiber map f_x effective for descent
/// in Ord. Witness base = {x} and codomain in B for a fiber failure.
Verdict cln_sufficient(const OrdSet& x, const LaxMorphism& f);

/// Effective descent in Ord, and every fiber map f_x a descent map in Ord.
Verdict cj_sufficient(const OrdSet& x, const LaxMorphism& f);

struct ComponentMorphism {
  Component base;                    ///< members of X in this component
  LaxMorphism morphism;              ///< valuations re-indexed into `base`
  std::vector<Element> domain;       ///< inclusion of the restricted A
  std::vector<Element> codomain;     ///< inclusion of the restricted B
};

/// Splits f along the connected components of X, in component order.
std::vector<ComponentMorphism> componentwise(const OrdSet& x, const LaxMorphism& f);

/// Carries a witness of a component morphism back to f. Families are
/// extended by alpha outside the component.
Witness lift_witness(const ComponentMorphism& part, const LaxMorphism& f, Witness w);

enum class Predicate {
  RegularEpi,
  StableRegularEpi,
  EffectiveDescent,
  EffectiveDescentLcc,
  FamDescent,
  FamEffective,
  OrdEffectiveDescent,
  Cln,
  Cj,
};

inline constexpr Predicate kAllPredicates[] = {
    Predicate::RegularEpi,   Predicate::StableRegularEpi,    Predicate::EffectiveDescent,
    Predicate::EffectiveDescentLcc, Predicate::FamDescent,   Predicate::FamEffective,
    Predicate::OrdEffectiveDescent, Predicate::Cln,          Predicate::Cj,
};

/// Command-line name ("repi", "srepi", "edm", ...).
std::string_view predicate_name(Predicate p);
std::optional<Predicate> parse_predicate(std::string_view name);

/// Evaluates on X as a whole.
Verdict evaluate(Predicate p, const LocalLattice& x, const LaxMorphism& f, std::size_t cap = kDefaultEnumerationCap);

/// Conjunction over componentwise(f), witnesses lifted back to f.
Verdict evaluate_componentwise(Predicate p, const LocalLattice& x, const LaxMorphism& f,
                               std::size_t cap = kDefaultEnumerationCap);

/// The predicate for morphisms of posets over a poset: validates that X, A
/// and B are antisymmetric, then delegates. Throws PreconditionError with the
/// antisymmetry witness otherwise.
Verdict poset_variant(Predicate p, const LocalLattice& x, const LaxMorphism& f,
                      std::size_t cap = kDefaultEnumerationCap);

/// The same morphism over the posetal reflection of X (valuations composed
/// with the quotient).
struct ReflectedBase {
  LocalLattice x;
  LaxMorphism f;
};
ReflectedBase reflect_base(const LocalLattice& x, const LaxMorphism& f);

namespace condition {
inline constexpr const char* kValuationGenerated = "valuation generated by image";
inline constexpr const char* kLiftedJoinRecovery = "join recovery over lifted pairs";
inline constexpr const char* kLiftedJoinCover = "lifted pairs cover the valuation";
inline constexpr const char* kGlobalJoin = "global join gluing";
inline constexpr const char* kFiberTripleLifting = "fiber triple lifting";
inline constexpr const char* kFiberPairLifting = "fiber pair lifting";
inline constexpr const char* kAntisymmetry = "antisymmetry";
}  // namespace condition

}  // namespace ordescent
