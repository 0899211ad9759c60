#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ordescent/ordset.hpp"

namespace ordescent {

// Families of elements of a fixed ambient ordered set X. X is passed
// explicitly to every operation; all meets and joins are computed inside
// the down-set of the relevant target value, never globally in X.

struct FamObject {
  std::vector<Element> values;

  std::size_t size() const { return values.size(); }
  bool operator==(const FamObject&) const = default;
};

/// An index map J -> K with source.values[j] <= target.values[mapping[j]].
struct FamMorphism {
  FamObject source;
  FamObject target;
  std::vector<std::size_t> mapping;

  bool operator==(const FamMorphism&) const = default;
};

/// Witness domain = {j} for the first index violating the inequality.
/// Throws IndexError on malformed input.
Verdict is_fam_morphism(const OrdSet& x, const FamObject& source, const FamObject& target,
                        std::span<const std::size_t> mapping);

/// Validating constructor; throws ValidationError.
FamMorphism make_fam_morphism(const OrdSet& x, FamObject source, FamObject target,
                              std::vector<std::size_t> mapping);

FamMorphism fam_identity(const FamObject& object);

// The predicates below need local meets and joins; local completeness of X
// is enforced by constructing the LocalLattice.

/// Descent: for every k and every w <= target[k], w is isomorphic to the join
/// of {w /\ source[j] : f(j) = k} inside the down-set of target[k].
/// Witness: codomain = {k}, base = {w}.
Verdict fam_is_descent(const LocalLattice& x, const FamMorphism& f);

/// The compatibility condition on a candidate family sigma <= source:
/// sigma_j /\ a_i ~= a_j /\ sigma_i for i, j in a common fiber.
bool fam_is_compatible(const LocalLattice& x, const FamMorphism& f, std::span<const Element> sigma);

/// Visits every descent datum sigma (sigma_j <= source_j, compatible) in
/// lexicographic order of element indices, index 0 most significant. The
/// visitor returns false to stop. Throws CapExceeded when the candidate
/// product exceeds `cap`.
void for_each_fam_descent_datum(const LocalLattice& x, const FamMorphism& f,
                                const std::function<bool(std::span<const Element>)>& visit,
                                std::size_t cap = kDefaultEnumerationCap);

std::vector<std::vector<Element>> enumerate_fam_descent_data(const LocalLattice& x, const FamMorphism& f,
                                                             std::size_t cap = kDefaultEnumerationCap);

/// Only the gluing equation: for every descent datum sigma, every k and
/// j in f^-1(k), source_j /\ (join of sigma over the fiber) ~= sigma_j.
/// Witness: family = sigma, codomain = {k}, domain = {j}.
Verdict fam_gluing_condition(const LocalLattice& x, const FamMorphism& f, std::size_t cap = kDefaultEnumerationCap);

/// Descent plus the gluing equation. Witness is the descent witness when
/// descent fails, otherwise the gluing witness.
Verdict fam_is_effective(const LocalLattice& x, const FamMorphism& f, std::size_t cap = kDefaultEnumerationCap);

/// On locally complete, locally cartesian closed X effectiveness reduces to
/// descent. Throws PreconditionError naming the failed lattice law otherwise.
Verdict fam_is_effective_lcc(const LocalLattice& x, const FamMorphism& f);

/// Brute-force search for a gluing of sigma over k: the least-index
/// w <= target[k] with w /\ source_j ~= sigma_j for every j in f^-1(k).
/// Does not assume the gluing is the join of sigma. Throws ValidationError
/// when sigma is not a descent datum.
std::optional<Element> fam_gluing_search(const LocalLattice& x, const FamMorphism& f, std::span<const Element> sigma,
                                         std::size_t k);

/// The restriction of f to the fiber over k, (source_j)_{f(j)=k} -> (target_k).
/// `indices` receives the original indices of the fiber in order.
FamMorphism fam_fiber_restriction(const FamMorphism& f, std::size_t k, std::vector<std::size_t>* indices = nullptr);

namespace condition {
inline constexpr const char* kFamInequality = "family inequality";
inline constexpr const char* kFamDescent = "fiberwise join recovery";
inline constexpr const char* kFamGluing = "gluing of descent data";
}  // namespace condition

}  // namespace ordescent
