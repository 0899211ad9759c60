#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ordescent/verdict.hpp"

namespace ordescent {

using ElementPair = std::pair<Element, Element>;

/// A finite ordered set: a reflexive and transitive relation on
/// {0, ..., size-1}. Antisymmetry is not required; elements with
/// leq(i,j) && leq(j,i) are isomorphic.
class OrdSet {
 public:
  OrdSet() = default;

  /// Takes a full row-major size*size relation and validates reflexivity
  /// and transitivity.
  static OrdSet from_relation(std::size_t size, std::vector<std::uint8_t> relation);
  /// As from_relation, without validation; `relation` must already be a
  /// 0/1 preorder.
  static OrdSet from_preorder(std::size_t size, std::vector<std::uint8_t> relation) {
    return OrdSet(size, std::move(relation));
  }
  static OrdSet discrete(std::size_t size);
  static OrdSet chain(std::size_t size);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool leq(Element i, Element j) const { return rel_[i * size_ + j] != 0; }
  bool iso(Element i, Element j) const { return leq(i, j) && leq(j, i); }
  bool comparable(Element i, Element j) const { return leq(i, j) || leq(j, i); }
  bool contains(Element i) const { return i < size_; }

  /// All pairs (i,j), i != j, with i <= j.
  std::vector<ElementPair> strict_pairs() const;
  const std::vector<std::uint8_t>& relation() const { return rel_; }

  bool operator==(const OrdSet&) const = default;

 private:
  OrdSet(std::size_t size, std::vector<std::uint8_t> rel) : size_(size), rel_(std::move(rel)) {}

  std::size_t size_ = 0;
  std::vector<std::uint8_t> rel_;
};

/// Smallest preorder on `size` elements containing `pairs`.
OrdSet transitive_reflexive_closure(std::span<const ElementPair> pairs, std::size_t size);

/// Induced suborder on `members` (in the given order).
OrdSet induced_order(const OrdSet& x, std::span<const Element> members);

/// Fails with witness base = {i, j} for the first isomorphic pair i < j.
Verdict is_poset(const OrdSet& x);

struct PosetalReflection {
  OrdSet poset;
  /// Element of `x` -> class index. Classes are numbered by their least
  /// member, which is the canonical representative.
  std::vector<Element> quotient;
  std::vector<Element> representative;
};

PosetalReflection posetal_reflection(const OrdSet& x);

std::vector<Element> down_set(const OrdSet& x, Element top);

/// Greatest lower bound of {a, b} inside the down-set of `bound`
/// (least-index representative of the isomorphism class), or nothing when the
/// lower bounds have no greatest element. Throws PreconditionError unless
/// a <= bound and b <= bound.
std::optional<Element> local_meet(const OrdSet& x, Element bound, Element a, Element b);

/// Least upper bound of `subset` inside the down-set of `bound`. The empty
/// subset yields the bottom of that down-set, if any.
std::optional<Element> local_join(const OrdSet& x, Element bound, std::span<const Element> subset);

/// Every down-set is a complete lattice. For finite carriers this reduces to
/// every pair below a common bound having a meet, since each down-set already
/// has a top. Witness base = {bound, a, b} for a pair without meet.
Verdict is_locally_complete(const OrdSet& x);

/// Every down-set is a distributive lattice (for finite lattices:
/// cartesian closed <=> Heyting <=> distributive). Witness
/// base = {bound, a, b, c} with a /\ (b \/ c) not isomorphic to
/// (a /\ b) \/ (a /\ c). Throws NotLocallyComplete on non-lattice down-sets.
Verdict is_locally_cartesian_closed(const OrdSet& x);

struct Component {
  std::vector<Element> members;  ///< ascending; also the inclusion map
  OrdSet order;                  ///< induced order, indexed like `members`
};

/// Zigzag-connected components, ordered by least member.
std::vector<Component> connected_components(const OrdSet& x);

/// Least-index bottom element of the component (an index of `x`).
std::optional<Element> component_bottom(const OrdSet& x, const Component& component);

/// A locally complete ordered set with precomputed local meets and joins.
/// Construction is the local-completeness check; every operation that needs
/// meets or joins inside down-sets takes this type, so the precondition is
/// carried by the type. Results are least-index representatives.
class LocalLattice {
 public:
  /// Throws NotLocallyComplete (witness base = {bound, a, b}).
  explicit LocalLattice(OrdSet order);

  const OrdSet& order() const { return order_; }
  std::size_t size() const { return order_.size(); }
  bool leq(Element a, Element b) const { return order_.leq(a, b); }
  bool iso(Element a, Element b) const { return order_.iso(a, b); }

  /// Meet of a and b; both must lie below `bound`.
  Element meet(Element bound, Element a, Element b) const;
  /// Join inside the down-set of `bound`; elements must lie below it.
  Element join(Element bound, std::span<const Element> subset) const;
  Element join(Element bound, Element a, Element b) const;
  /// Bottom of the down-set of `bound`.
  Element bottom(Element bound) const { return bottom_[bound]; }

  /// Distributivity of every down-set; witness as is_locally_cartesian_closed.
  const Verdict& cartesian_closed() const { return cartesian_closed_; }

 private:
  void require_below(Element bound, Element a) const;

  OrdSet order_;
  std::vector<std::uint32_t> meet_;  // n*n, sentinel when no common bound
  std::vector<std::uint32_t> join_;  // n*n*n, indexed [bound][a][b]
  std::vector<Element> bottom_;
  Verdict cartesian_closed_;
};

/// Enumerates every preorder (labeled) or one representative per isomorphism
/// class on `size` elements. Sizes up to 4 are supported.
const std::vector<OrdSet>& all_preorders(std::size_t size);
const std::vector<OrdSet>& preorder_classes(std::size_t size);

/// Order automorphisms, as permutations.
std::vector<std::vector<Element>> automorphisms(const OrdSet& x);

}  // namespace ordescent
