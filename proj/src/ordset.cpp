#include "ordescent/ordset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ordescent {

namespace {

void check_index(const OrdSet& x, Element i, const char* what) {
  if (!x.contains(i)) {
    throw IndexError(std::string(what) + ": element " + std::to_string(i) +
                     " out of range for ordered set of size " + std::to_string(x.size()));
  }
}

// Union-find over element indices, used for components.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

OrdSet OrdSet::from_relation(std::size_t size, std::vector<std::uint8_t> relation) {
  if (relation.size() != size * size) {
    throw Error("relation has " + std::to_string(relation.size()) + " entries, expected " +
                std::to_string(size * size));
  }
  for (auto& r : relation) r = r ? 1 : 0;
  OrdSet out(size, std::move(relation));
  for (Element i = 0; i < size; ++i) {
    if (!out.leq(i, i)) {
      throw ValidationError("relation is not reflexive at " + std::to_string(i),
                            Witness{"reflexivity", {}, {}, {i}, {}});
    }
  }
  for (Element i = 0; i < size; ++i)
    for (Element j = 0; j < size; ++j)
      for (Element k = 0; k < size; ++k)
        if (out.leq(i, j) && out.leq(j, k) && !out.leq(i, k)) {
          throw ValidationError("relation is not transitive at (" + std::to_string(i) + "," +
                                    std::to_string(j) + "," + std::to_string(k) + ")",
                                Witness{"transitivity", {}, {}, {i, j, k}, {}});
        }
  return out;
}

OrdSet OrdSet::discrete(std::size_t size) {
  std::vector<std::uint8_t> rel(size * size, 0);
  for (std::size_t i = 0; i < size; ++i) rel[i * size + i] = 1;
  return OrdSet(size, std::move(rel));
}

OrdSet OrdSet::chain(std::size_t size) {
  std::vector<std::uint8_t> rel(size * size, 0);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i; j < size; ++j) rel[i * size + j] = 1;
  return OrdSet(size, std::move(rel));
}

std::vector<ElementPair> OrdSet::strict_pairs() const {
  std::vector<ElementPair> out;
  for (Element i = 0; i < size_; ++i)
    for (Element j = 0; j < size_; ++j)
      if (i != j && leq(i, j)) out.emplace_back(i, j);
  return out;
}

OrdSet transitive_reflexive_closure(std::span<const ElementPair> pairs, std::size_t size) {
  std::vector<std::uint8_t> rel(size * size, 0);
  for (std::size_t i = 0; i < size; ++i) rel[i * size + i] = 1;
  for (const auto& [a, b] : pairs) {
    if (a >= size || b >= size) {
      throw IndexError("pair (" + std::to_string(a) + "," + std::to_string(b) +
                       ") out of range for size " + std::to_string(size));
    }
    rel[a * size + b] = 1;
  }
  // Warshall
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      if (rel[i * size + k])
        for (std::size_t j = 0; j < size; ++j)
          if (rel[k * size + j]) rel[i * size + j] = 1;
  return OrdSet::from_relation(size, std::move(rel));
}

OrdSet induced_order(const OrdSet& x, std::span<const Element> members) {
  const std::size_t n = members.size();
  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    check_index(x, members[i], "induced_order");
    for (std::size_t j = 0; j < n; ++j) rel[i * n + j] = x.leq(members[i], members[j]);
  }
  return OrdSet::from_relation(n, std::move(rel));
}

Verdict is_poset(const OrdSet& x) {
  for (Element i = 0; i < x.size(); ++i)
    for (Element j = i + 1; j < x.size(); ++j)
      if (x.iso(i, j)) return Verdict::fail({"antisymmetry", {}, {}, {i, j}, {}});
  return Verdict::pass();
}

PosetalReflection posetal_reflection(const OrdSet& x) {
  PosetalReflection out;
  out.quotient.assign(x.size(), 0);
  for (Element i = 0; i < x.size(); ++i) {
    Element rep = i;
    for (Element j = 0; j < i; ++j)
      if (x.iso(i, j)) {
        rep = j;
        break;
      }
    if (rep == i) {
      out.quotient[i] = out.representative.size();
      out.representative.push_back(i);
    } else {
      out.quotient[i] = out.quotient[rep];
    }
  }
  out.poset = induced_order(x, out.representative);
  return out;
}

std::vector<Element> down_set(const OrdSet& x, Element top) {
  check_index(x, top, "down_set");
  std::vector<Element> out;
  for (Element y = 0; y < x.size(); ++y)
    if (x.leq(y, top)) out.push_back(y);
  return out;
}

std::optional<Element> local_meet(const OrdSet& x, Element bound, Element a, Element b) {
  check_index(x, bound, "local_meet");
  check_index(x, a, "local_meet");
  check_index(x, b, "local_meet");
  if (!x.leq(a, bound) || !x.leq(b, bound)) {
    throw PreconditionError("local_meet: arguments must lie below the bound",
                            Witness{"below-bound", {}, {}, {bound, a, b}, {}});
  }
  // Lower bounds of {a,b} automatically lie below `bound`.
  const std::size_t n = x.size();
  for (Element z = 0; z < n; ++z) {
    if (!x.leq(z, a) || !x.leq(z, b)) continue;
    bool greatest = true;
    for (Element l = 0; l < n && greatest; ++l)
      if (x.leq(l, a) && x.leq(l, b) && !x.leq(l, z)) greatest = false;
    if (greatest) return z;
  }
  return std::nullopt;
}

std::optional<Element> local_join(const OrdSet& x, Element bound, std::span<const Element> subset) {
  check_index(x, bound, "local_join");
  for (Element s : subset) {
    check_index(x, s, "local_join");
    if (!x.leq(s, bound)) {
      throw PreconditionError("local_join: subset must lie below the bound",
                              Witness{"below-bound", {}, {}, {bound, s}, {}});
    }
  }
  const std::size_t n = x.size();
  auto is_upper = [&](Element u) {
    if (!x.leq(u, bound)) return false;
    return std::all_of(subset.begin(), subset.end(), [&](Element s) { return x.leq(s, u); });
  };
  for (Element u = 0; u < n; ++u) {
    if (!is_upper(u)) continue;
    bool least = true;
    for (Element v = 0; v < n && least; ++v)
      if (is_upper(v) && !x.leq(u, v)) least = false;
    if (least) return u;
  }
  return std::nullopt;
}

Verdict is_locally_complete(const OrdSet& x) {
  for (Element top = 0; top < x.size(); ++top)
    for (Element a = 0; a < x.size(); ++a) {
      if (!x.leq(a, top)) continue;
      for (Element b = 0; b < x.size(); ++b) {
        if (!x.leq(b, top)) continue;
        if (!local_meet(x, top, a, b)) return Verdict::fail({"local completeness", {}, {}, {top, a, b}, {}});
      }
    }
  return Verdict::pass();
}

Verdict is_locally_cartesian_closed(const OrdSet& x) {
  if (auto lc = is_locally_complete(x); !lc) {
    throw NotLocallyComplete("ordered set is not locally complete", lc.witness);
  }
  const std::size_t n = x.size();
  for (Element top = 0; top < n; ++top) {
    const auto below = down_set(x, top);
    for (Element a : below)
      for (Element b : below)
        for (Element c : below) {
          const Element bc[] = {b, c};
          const Element bc_join = *local_join(x, top, bc);
          const Element lhs = *local_meet(x, top, a, bc_join);
          const Element parts[] = {*local_meet(x, top, a, b), *local_meet(x, top, a, c)};
          const Element rhs = *local_join(x, top, parts);
          if (!x.iso(lhs, rhs)) return Verdict::fail({"distributivity", {}, {}, {top, a, b, c}, {}});
        }
  }
  return Verdict::pass();
}

std::vector<Component> connected_components(const OrdSet& x) {
  DisjointSets sets(x.size());
  for (Element i = 0; i < x.size(); ++i)
    for (Element j = i + 1; j < x.size(); ++j)
      if (x.comparable(i, j)) sets.unite(i, j);
  std::vector<Component> out;
  std::vector<std::size_t> slot(x.size(), x.size());
  for (Element i = 0; i < x.size(); ++i) {
    const std::size_t root = sets.find(i);
    if (slot[root] == x.size()) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].members.push_back(i);
  }
  for (auto& c : out) c.order = induced_order(x, c.members);
  return out;
}

std::optional<Element> component_bottom(const OrdSet& x, const Component& component) {
  for (Element m : component.members) {
    check_index(x, m, "component_bottom");
    if (std::all_of(component.members.begin(), component.members.end(),
                    [&](Element other) { return x.leq(m, other); }))
      return m;
  }
  return std::nullopt;
}

std::vector<std::vector<Element>> automorphisms(const OrdSet& x) {
  std::vector<Element> perm(x.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Element>> out;
  do {
    bool ok = true;
    for (Element i = 0; i < x.size() && ok; ++i)
      for (Element j = 0; j < x.size() && ok; ++j)
        if (x.leq(i, j) != x.leq(perm[i], perm[j])) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace ordescent

namespace ordescent {

namespace {
constexpr std::uint32_t kNone = 0xffffffffu;
}

LocalLattice::LocalLattice(OrdSet order) : order_(std::move(order)) {
  if (auto lc = is_locally_complete(order_); !lc) {
    throw NotLocallyComplete("ordered set is not locally complete", lc.witness);
  }
  const std::size_t n = order_.size();
  meet_.assign(n * n, kNone);
  join_.assign(n * n * n, kNone);
  bottom_.assign(n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element top = 0; top < n; ++top)
        if (order_.leq(a, top) && order_.leq(b, top)) {
          meet_[a * n + b] = static_cast<std::uint32_t>(*local_meet(order_, top, a, b));
          break;
        }
  for (Element top = 0; top < n; ++top) {
    bottom_[top] = *local_join(order_, top, {});
    for (Element a = 0; a < n; ++a) {
      if (!order_.leq(a, top)) continue;
      for (Element b = 0; b < n; ++b) {
        if (!order_.leq(b, top)) continue;
        const Element ab[] = {a, b};
        join_[(top * n + a) * n + b] = static_cast<std::uint32_t>(*local_join(order_, top, ab));
      }
    }
  }
  // Distributivity, read off the tables.
  cartesian_closed_ = Verdict::pass();
  for (Element top = 0; top < n; ++top) {
    const auto below = down_set(order_, top);
    const auto j = [&](Element a, Element b) { return join_[(top * n + a) * n + b]; };
    for (Element a : below)
      for (Element b : below)
        for (Element c : below)
          if (!order_.iso(meet_[a * n + j(b, c)], j(meet_[a * n + b], meet_[a * n + c]))) {
            cartesian_closed_ = Verdict::fail({"distributivity", {}, {}, {top, a, b, c}, {}});
            return;
          }
  }
}

void LocalLattice::require_below(Element bound, Element a) const {
  if (bound >= size() || a >= size() || !order_.leq(a, bound)) {
    throw PreconditionError("element " + std::to_string(a) + " does not lie below " + std::to_string(bound),
                            Witness{"below-bound", {}, {}, {bound, a}, {}});
  }
}

Element LocalLattice::meet(Element bound, Element a, Element b) const {
  require_below(bound, a);
  require_below(bound, b);
  return meet_[a * size() + b];
}

Element LocalLattice::join(Element bound, Element a, Element b) const {
  require_below(bound, a);
  require_below(bound, b);
  return join_[(bound * size() + a) * size() + b];
}

Element LocalLattice::join(Element bound, std::span<const Element> subset) const {
  if (bound >= size()) throw IndexError("join: bound out of range");
  Element acc = bottom_[bound];
  for (Element s : subset) {
    require_below(bound, s);
    acc = join_[(bound * size() + acc) * size() + s];
  }
  return acc;
}

}  // namespace ordescent
