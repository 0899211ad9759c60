#include "ordescent/oracle.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace ordescent {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t i, std::size_t j) {
    i = find(i);
    j = find(j);
    if (i < j) parent[j] = i;
    else if (j < i) parent[i] = j;
  }
};

// Advances `digits` (each in [0, radix)) as an odometer, last digit fastest,
// so the sequence is lexicographic with index 0 most significant.
bool next_tuple(std::vector<Element>& digits, std::size_t radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix) return true;
    digits[i] = 0;
  }
  return false;
}

template <class Visit>
void for_each_monotone_map(const OrdSet& src, const OrdSet& dst, Visit&& visit) {
  if (dst.empty() && !src.empty()) return;
  std::vector<Element> m(src.size(), 0);
  do {
    bool ok = true;
    for (Element i = 0; i < src.size() && ok; ++i)
      for (Element j = 0; j < src.size() && ok; ++j)
        if (src.leq(i, j) && !dst.leq(m[i], m[j])) ok = false;
    if (ok && !visit(m)) return;
  } while (!m.empty() && next_tuple(m, dst.size()));
}

// Monotone valuations v on `carrier` with v(c) <= bound[c]; values restricted
// to least-index representatives of isomorphism classes of X when
// `canonical` is set.
template <class Visit>
void for_each_valuation_below(const OrdSet& x, const OrdSet& carrier, std::span<const Element> bound, bool canonical,
                              Visit&& visit) {
  const std::size_t n = carrier.size();
  std::vector<std::vector<Element>> choices(n);
  for (std::size_t c = 0; c < n; ++c)
    for (Element y = 0; y < x.size(); ++y) {
      if (!x.leq(y, bound[c])) continue;
      bool least = true;
      for (Element z = 0; z < y && canonical && least; ++z) least = !x.iso(z, y);
      if (least) choices[c].push_back(y);
    }
  std::vector<Element> v(n);
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t c) -> void {
    if (c == n) {
      stop = !visit(v);
      return;
    }
    for (Element y : choices[c]) {
      bool ok = true;
      for (std::size_t e = 0; e < c && ok; ++e) {
        if (carrier.leq(e, c) && !x.leq(v[e], y)) ok = false;
        if (carrier.leq(c, e) && !x.leq(y, v[e])) ok = false;
      }
      if (!ok) continue;
      v[c] = y;
      self(self, c + 1);
      if (stop) return;
    }
  };
  rec(rec, 0);
}

std::string describe_order(const OrdSet& c) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [i, j] : c.strict_pairs()) {
    out << (first ? "" : ", ") << i << "<=" << j;
    first = false;
  }
  out << "}";
  return out.str();
}

std::string describe_sequence(std::span<const Element> s) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << ")";
  return out.str();
}

// Everything about a descent datum that depends on f alone.
struct Kernel {
  KernelPair pair;
  LaxPullback triple;                     // pullback of the second projection along the first
  std::vector<std::size_t> index;         // (a1, a2) -> index in the kernel pair, or npos
  std::size_t a_size = 0;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Kernel(const LocalLattice& x, const LaxMorphism& f)
      : pair(kernel_pair(x, f)),
        triple(pullback_laxcomma(x, pair.second(), pair.first())),
        a_size(f.source.size()) {
    index.assign(a_size * a_size, npos);
    for (std::size_t k = 0; k < pair.pullback.pairs.size(); ++k)
      index[pair.pullback.pairs[k].first * a_size + pair.pullback.pairs[k].second] = k;
  }
};

using KernelPtr = std::shared_ptr<const Kernel>;

KernelPtr make_kernel(const LocalLattice& x, const LaxMorphism& f) { return std::make_shared<const Kernel>(x, f); }

// Pullback of `over` along a projection of the kernel pair; only the object
// and the pairs are filled in.
LaxPullback pull_over_kernel(const LocalLattice& x, const Kernel& kernel, bool second_projection,
                             const LaxMorphism& over) {
  const LaxPullback& kp = kernel.pair.pullback;
  LaxPullback out;
  for (std::size_t k = 0; k < kp.pairs.size(); ++k) {
    const Element a = second_projection ? kp.pairs[k].second : kp.pairs[k].first;
    for (Element c = 0; c < over.map.size(); ++c)
      if (over(c) == a) out.pairs.emplace_back(k, c);
  }
  const std::size_t n = out.pairs.size();
  std::vector<std::uint8_t> rel(n * n);
  std::vector<Element> valuation(n);
  const OrdSet& ko = kp.object.carrier;
  const OrdSet& co = over.source.carrier;
  for (std::size_t i = 0; i < n; ++i) {
    const auto [k, c] = out.pairs[i];
    for (std::size_t j = 0; j < n; ++j) rel[i * n + j] = ko.leq(k, out.pairs[j].first) && co.leq(c, out.pairs[j].second);
    valuation[i] = x.meet(over.target(over(c)), over.source(c), kp.object(k));
  }
  out.object = {OrdSet::from_preorder(n, std::move(rel)), std::move(valuation)};
  return out;
}

// The pieces of a descent datum needed to evaluate its transition.
struct DatumFrame {
  KernelPtr shared;
  const KernelPair& kernel;
  LaxPullback first;   // pullback of q along the first projection
  LaxPullback second;  // pullback of q along the second projection
  std::vector<std::size_t> first_index;   // (k, c) -> index in `first`, or npos
  std::vector<std::size_t> second_index;  // (k, c) -> index in `second`, or npos
  const std::vector<std::size_t>& kernel_index;
  std::size_t c_size = 0;
  std::size_t a_size = 0;

  static constexpr std::size_t npos = Kernel::npos;

  DatumFrame(const LocalLattice& x, KernelPtr k, const LaxMorphism& over)
      : shared(std::move(k)),
        kernel(shared->pair),
        first(pull_over_kernel(x, *shared, false, over)),
        second(pull_over_kernel(x, *shared, true, over)),
        kernel_index(shared->index),
        c_size(over.source.size()),
        a_size(shared->a_size) {
    const std::size_t k_size = kernel.pullback.pairs.size();
    first_index.assign(k_size * c_size, npos);
    second_index.assign(k_size * c_size, npos);
    for (std::size_t i = 0; i < first.pairs.size(); ++i)
      first_index[first.pairs[i].first * c_size + first.pairs[i].second] = i;
    for (std::size_t i = 0; i < second.pairs.size(); ++i)
      second_index[second.pairs[i].first * c_size + second.pairs[i].second] = i;
  }
  DatumFrame(const DatumFrame& o)
      : shared(o.shared),
        kernel(shared->pair),
        first(o.first),
        second(o.second),
        first_index(o.first_index),
        second_index(o.second_index),
        kernel_index(shared->index),
        c_size(o.c_size),
        a_size(o.a_size) {}

  // The image of c under the transition over kernel element k; c must lie
  // over the first component of k.
  Element apply(const std::vector<std::size_t>& transition, std::size_t k, Element c) const {
    return second.pairs[transition[first_index[k * c_size + c]]].second;
  }
};

Witness datum_witness(const char* cond, std::vector<std::size_t> domain, std::vector<std::size_t> base) {
  return {cond, std::move(domain), {}, std::move(base), {}};
}

}  // namespace

std::vector<std::size_t> flatten_strict_pairs(const OrdSet& c) {
  std::vector<std::size_t> out;
  for (const auto& [i, j] : c.strict_pairs()) {
    out.push_back(i);
    out.push_back(j);
  }
  return out;
}

OrdSet order_from_strict_pairs(std::size_t size, std::span<const std::size_t> flat) {
  if (flat.size() % 2 != 0) throw Error("odd number of entries in a flattened pair list");
  std::vector<ElementPair> pairs;
  for (std::size_t i = 0; i < flat.size(); i += 2) pairs.emplace_back(flat[i], flat[i + 1]);
  return transitive_reflexive_closure(pairs, size);
}

// ---------------------------------------------------------------------------
// Coequalizers

namespace {

struct Quotient {
  std::vector<std::size_t> class_of;   // element of A -> class
  std::vector<Element> representative;  // class -> least member
  OrdSet order;
};

Quotient coequalize_kernel_pair(const MonotoneMap& f) {
  const OrdPullback kp = pullback_ord(f, f);
  DisjointSets sets(f.source().size());
  for (const auto& [a1, a2] : kp.pairs) sets.unite(a1, a2);
  Quotient q;
  q.class_of.assign(f.source().size(), 0);
  std::vector<std::size_t> index(f.source().size(), DatumFrame::npos);
  for (Element a = 0; a < f.source().size(); ++a) {
    const std::size_t root = sets.find(a);
    if (index[root] == DatumFrame::npos) {
      index[root] = q.representative.size();
      q.representative.push_back(a);
    }
    q.class_of[a] = index[root];
  }
  std::vector<ElementPair> generated;
  for (const auto& [a, a2] : f.source().strict_pairs()) generated.emplace_back(q.class_of[a], q.class_of[a2]);
  q.order = transitive_reflexive_closure(generated, q.representative.size());
  return q;
}

// Compares the coequalizer with the codomain through the induced map.
OracleVerdict compare_quotient(const MonotoneMap& f, const Quotient& q) {
  OracleVerdict out;
  std::vector<std::size_t> class_over(f.target().size(), DatumFrame::npos);
  for (std::size_t k = 0; k < q.representative.size(); ++k) {
    const Element b = f(q.representative[k]);
    if (class_over[b] != DatumFrame::npos) {
      out.holds = false;
      out.witness = Witness{condition::kCoequalizerCarrier, {class_over[b], k}, {b}, {}, {}};
      out.detail = "two classes over the same element";
      return out;
    }
    class_over[b] = k;
  }
  for (Element b = 0; b < f.target().size(); ++b)
    if (class_over[b] == DatumFrame::npos) {
      out.holds = false;
      out.witness = Witness{condition::kCoequalizerCarrier, {}, {b}, {}, {}};
      out.detail = "element " + std::to_string(b) + " of B is not in the image";
      return out;
    }
  for (Element b0 = 0; b0 < f.target().size(); ++b0)
    for (Element b1 = 0; b1 < f.target().size(); ++b1)
      if (q.order.leq(class_over[b0], class_over[b1]) != f.target().leq(b0, b1)) {
        out.holds = false;
        out.witness = Witness{condition::kCoequalizerOrder, {}, {b0, b1}, {}, {}};
        out.detail = "coequalizer order differs from B on (" + std::to_string(b0) + "," + std::to_string(b1) + ")";
        return out;
      }
  return out;
}

}  // namespace

OracleVerdict coequalizer_oracle(const MonotoneMap& f) { return compare_quotient(f, coequalize_kernel_pair(f)); }

OracleVerdict coequalizer_oracle(const LocalLattice& x, const LaxMorphism& f) {
  const MonotoneMap carrier = underlying_ord(f);
  const Quotient q = coequalize_kernel_pair(carrier);
  OracleVerdict out = compare_quotient(carrier, q);
  if (!out) return out;
  // Least valuation on the quotient below the codomain valuation that still
  // receives alpha, found by scanning X.
  for (std::size_t k = 0; k < q.representative.size(); ++k) {
    const Element b = carrier(q.representative[k]);
    std::optional<Element> least;
    for (Element y = 0; y < x.size() && !least; ++y) {
      if (!x.leq(y, f.target(b))) continue;
      bool upper = true;
      for (Element a = 0; a < f.source.size() && upper; ++a)
        if (q.order.leq(q.class_of[a], k)) upper = x.leq(f.source(a), y);
      if (!upper) continue;
      bool below_all = true;
      for (Element z = 0; z < x.size() && below_all; ++z) {
        if (!x.leq(z, f.target(b))) continue;
        bool z_upper = true;
        for (Element a = 0; a < f.source.size() && z_upper; ++a)
          if (q.order.leq(q.class_of[a], k)) z_upper = x.leq(f.source(a), z);
        if (z_upper) below_all = x.leq(y, z);
      }
      if (below_all) least = y;
    }
    if (!least || !x.iso(*least, f.target(b))) {
      out.holds = false;
      out.witness = Witness{condition::kCoequalizerValuation, {}, {b}, {}, {}};
      out.detail = "coequalizer valuation at " + std::to_string(b) + " is below beta";
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Descent data

KernelPair kernel_pair(const LocalLattice& x, const LaxMorphism& f) { return {pullback_laxcomma(x, f, f)}; }

namespace {

// Transition laws of a datum whose object over A is already validated.
Verdict check_transition(const LocalLattice& x, const DatumFrame& frame, const DescentDatum& datum) {
  const LaxMorphism& q = datum.over;
  const auto& p1 = frame.first;
  const auto& p2 = frame.second;
  const auto& xi = datum.transition;
  const std::size_t n = p1.pairs.size();
  if (xi.size() != n || p2.pairs.size() != n) return Verdict::fail(datum_witness(condition::kTransitionIso, {}, {}));
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (xi[i] >= n || hit[xi[i]]) return Verdict::fail(datum_witness(condition::kTransitionIso, {}, {i}));
    hit[xi[i]] = true;
    if (p2.pairs[xi[i]].first != p1.pairs[i].first)
      return Verdict::fail(datum_witness(condition::kTransitionOverKernel, {p1.pairs[i].second}, {p1.pairs[i].first}));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!x.iso(p1.object(i), p2.object(xi[i])))
      return Verdict::fail(datum_witness(condition::kTransitionIso, {p1.pairs[i].second}, {p1.pairs[i].first}));
    for (std::size_t j = 0; j < n; ++j)
      if (p1.object.carrier.leq(i, j) != p2.object.carrier.leq(xi[i], xi[j]))
        return Verdict::fail(datum_witness(condition::kTransitionIso, {p1.pairs[i].second, p1.pairs[j].second},
                                           {p1.pairs[i].first, p1.pairs[j].first}));
  }

  // Unit: over the diagonal the transition is the identity.
  for (Element c = 0; c < q.source.size(); ++c) {
    const Element a = q(c);
    const std::size_t k = frame.kernel_index[a * frame.a_size + a];
    if (frame.apply(xi, k, c) != c) return Verdict::fail(datum_witness(condition::kUnitLaw, {c}, {k}));
  }

  // Cocycle over the triple pullback (k12, k23) with matching middle entry.
  const auto& kpairs = frame.kernel.pullback.pairs;
  for (const auto& [k12, k23] : frame.shared->triple.pairs) {
    const Element a1 = kpairs[k12].first;
    const Element a3 = kpairs[k23].second;
    const std::size_t k13 = frame.kernel_index[a1 * frame.a_size + a3];
    for (Element c = 0; c < q.source.size(); ++c) {
      if (q(c) != a1) continue;
      const Element via = frame.apply(xi, k23, frame.apply(xi, k12, c));
      if (via != frame.apply(xi, k13, c))
        return Verdict::fail(datum_witness(condition::kCocycleLaw, {c}, {k12, k23}));
    }
  }
  return Verdict::pass();
}

DescentDatum canonical_with(const LocalLattice& x, const LaxMorphism& d, const LaxMorphism& f, const KernelPtr& kernel) {
  const LaxPullback c = pullback_laxcomma(x, f, d);
  const LaxMorphism over = c.first;
  const DatumFrame frame(x, kernel, over);
  std::vector<std::size_t> pair_index(f.source.size() * d.source.size(), DatumFrame::npos);
  for (std::size_t i = 0; i < c.pairs.size(); ++i)
    pair_index[c.pairs[i].first * d.source.size() + c.pairs[i].second] = i;

  DescentDatum out{over, std::vector<std::size_t>(frame.first.pairs.size())};
  for (std::size_t i = 0; i < frame.first.pairs.size(); ++i) {
    const auto [k, ce] = frame.first.pairs[i];
    const Element a2 = frame.kernel.pullback.pairs[k].second;
    const Element e = c.pairs[ce].second;
    const std::size_t target = pair_index[a2 * d.source.size() + e];
    out.transition[i] = frame.second_index[k * frame.c_size + target];
  }
  return out;
}

}  // namespace

Verdict check_descent_datum(const LocalLattice& x, const LaxMorphism& f, const DescentDatum& datum) {
  const LaxMorphism& q = datum.over;
  if (!(q.target == f.source)) throw Error("descent datum does not lie over the domain of f");
  if (auto v = is_lax_object(x.order(), q.source.carrier, q.source.valuation); !v) return v;
  if (auto v = is_lax_morphism(x.order(), q.source, q.target, q.map); !v) return v;
  return check_transition(x, DatumFrame(x, make_kernel(x, f), q), datum);
}

DescentDatum canonical_descent_datum(const LocalLattice& x, const LaxMorphism& d, const LaxMorphism& f) {
  return canonical_with(x, d, f, make_kernel(x, f));
}

namespace {

bool data_isomorphic(const LocalLattice& x, const DatumFrame& lf, const DescentDatum& lhs, const DatumFrame& rf,
                     const DescentDatum& rhs) {
  const LaxObject& c = lhs.over.source;
  const LaxObject& c2 = rhs.over.source;
  if (c.size() != c2.size()) return false;
  const std::size_t n = c.size();
  std::vector<Element> u(n);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, Element i) -> bool {
    if (i == n) {
      const std::size_t k_size = lf.kernel.pullback.pairs.size();
      for (std::size_t k = 0; k < k_size; ++k) {
        const Element a1 = lf.kernel.pullback.pairs[k].first;
        for (Element e = 0; e < n; ++e)
          if (lhs.over(e) == a1 && u[lf.apply(lhs.transition, k, e)] != rf.apply(rhs.transition, k, u[e]))
            return false;
      }
      return true;
    }
    for (Element j = 0; j < n; ++j) {
      if (used[j] || rhs.over(j) != lhs.over(i) || !x.iso(c(i), c2(j))) continue;
      bool ok = true;
      for (Element e = 0; e < i && ok; ++e)
        ok = c.carrier.leq(e, i) == c2.carrier.leq(u[e], j) && c.carrier.leq(i, e) == c2.carrier.leq(j, u[e]);
      if (!ok) continue;
      used[j] = true;
      u[i] = j;
      if (self(self, i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

bool descent_data_isomorphic(const LocalLattice& x, const LaxMorphism& f, const DescentDatum& lhs,
                             const DescentDatum& rhs) {
  if (lhs.over.source.size() != rhs.over.source.size()) return false;
  const KernelPtr kernel = make_kernel(x, f);
  const DatumFrame lf(x, kernel, lhs.over);
  const DatumFrame rf(x, kernel, rhs.over);
  return data_isomorphic(x, lf, lhs, rf, rhs);
}

void for_each_descent_datum(const LocalLattice& x, const LaxMorphism& f, std::size_t bound,
                            const std::function<bool(const DescentDatum&)>& visit, std::size_t cap) {
  std::size_t candidates = 0;
  auto charge = [&] {
    if (++candidates > cap) {
      throw CapExceeded("descent-datum enumeration exceeds the cap of " + std::to_string(cap) + " candidates");
    }
  };
  const KernelPtr kernel = make_kernel(x, f);
  bool stop = false;
  for (std::size_t n = 0; n <= bound && !stop; ++n) {
    for (const OrdSet& carrier : preorder_classes(n)) {
      std::vector<std::pair<DescentDatum, DatumFrame>> accepted;
      for_each_monotone_map(carrier, f.source.carrier, [&](const std::vector<Element>& q) {
        std::vector<Element> cap_valuation(n);
        for (Element c = 0; c < n; ++c) cap_valuation[c] = f.source(q[c]);
        for_each_valuation_below(x.order(), carrier, cap_valuation, false, [&](const std::vector<Element>& gamma) {
          const LaxMorphism over{LaxObject{carrier, gamma}, f.source, q};
          DatumFrame frame(x, kernel, over);
          const auto& p1 = frame.first.pairs;
          const auto& p2 = frame.second.pairs;
          const OrdSet& o1 = frame.first.object.carrier;
          const OrdSet& o2 = frame.second.object.carrier;
          std::vector<std::size_t> xi(p1.size());
          std::vector<bool> used(p2.size(), false);
          if (p1.size() != p2.size()) return true;
          // Transitions over the kernel pair, injective, identity over the
          // diagonal, preserving valuations and order on the part assigned
          // so far; the laws are checked on the complete map.
          auto rec = [&](auto&& self, std::size_t i) -> void {
            if (stop) return;
            if (i == p1.size()) {
              charge();
              DescentDatum datum{over, xi};
              if (!check_transition(x, frame, datum)) return;
              for (const auto& [other, other_frame] : accepted)
                if (data_isomorphic(x, frame, datum, other_frame, other)) return;
              accepted.emplace_back(datum, frame);
              stop = !visit(datum);
              return;
            }
            const auto [k, c] = p1[i];
            const auto [a1, a2] = frame.kernel.pullback.pairs[k];
            for (std::size_t j = 0; j < p2.size(); ++j) {
              if (used[j] || p2[j].first != k) continue;
              if (a1 == a2 && p2[j].second != c) continue;
              if (!x.iso(frame.first.object(i), frame.second.object(j))) continue;
              bool ok = true;
              for (std::size_t h = 0; h < i && ok; ++h)
                ok = o1.leq(h, i) == o2.leq(xi[h], j) && o1.leq(i, h) == o2.leq(j, xi[h]);
              if (!ok) continue;
              used[j] = true;
              xi[i] = j;
              self(self, i + 1);
              used[j] = false;
              if (stop) return;
            }
          };
          rec(rec, 0);
          return !stop;
        });
        return !stop;
      });
      if (stop) break;
    }
  }
}

std::vector<DescentDatum> enumerate_descent_data(const LocalLattice& x, const LaxMorphism& f, std::size_t bound,
                                                 std::size_t cap) {
  std::vector<DescentDatum> out;
  for_each_descent_datum(
      x, f, bound,
      [&](const DescentDatum& d) {
        out.push_back(d);
        return true;
      },
      cap);
  return out;
}

namespace {

std::optional<LaxMorphism> glue_with(const LocalLattice& x, const LaxMorphism& f, const KernelPtr& kernel,
                                     const DescentDatum& datum) {
  const LaxMorphism& q = datum.over;
  const LaxObject& c = q.source;
  const DatumFrame frame(x, kernel, q);

  // Orbits of the transition: the candidate carrier of the glued object.
  DisjointSets sets(c.size());
  for (std::size_t i = 0; i < frame.first.pairs.size(); ++i)
    sets.unite(frame.first.pairs[i].second, frame.second.pairs[datum.transition[i]].second);
  std::vector<std::size_t> orbit(c.size());
  std::vector<Element> orbit_rep;
  std::vector<std::size_t> index(c.size(), DatumFrame::npos);
  for (Element e = 0; e < c.size(); ++e) {
    const std::size_t root = sets.find(e);
    if (index[root] == DatumFrame::npos) {
      index[root] = orbit_rep.size();
      orbit_rep.push_back(e);
    }
    orbit[e] = index[root];
  }
  const std::size_t m = orbit_rep.size();
  std::vector<Element> over_b(m);
  for (std::size_t o = 0; o < m; ++o) over_b[o] = f(q(orbit_rep[o]));

  const OrdSet& a_ord = f.source.carrier;
  for (const OrdSet& d_ord : all_preorders(m)) {
    if (!is_monotone(d_ord, f.target.carrier, over_b)) continue;
    bool order_ok = true;
    for (Element e = 0; e < c.size() && order_ok; ++e)
      for (Element e2 = 0; e2 < c.size() && order_ok; ++e2)
        order_ok = c.carrier.leq(e, e2) == (a_ord.leq(q(e), q(e2)) && d_ord.leq(orbit[e], orbit[e2]));
    if (!order_ok) continue;

    std::vector<std::vector<Element>> choices(m);
    for (std::size_t o = 0; o < m; ++o) {
      const Element top = f.target(over_b[o]);
      for (Element y = 0; y < x.size(); ++y) {
        if (!x.leq(y, top)) continue;
        bool ok = true;
        for (Element e = 0; e < c.size() && ok; ++e)
          if (orbit[e] == o) ok = x.iso(x.meet(top, y, f.source(q(e))), c(e));
        if (ok) choices[o].push_back(y);
      }
    }
    std::vector<Element> delta(m);
    std::optional<LaxMorphism> found;
    auto rec = [&](auto&& self, std::size_t o) -> void {
      if (found) return;
      if (o == m) {
        LaxMorphism d{LaxObject{d_ord, delta}, f.target, over_b};
        const DescentDatum canonical = canonical_with(x, d, f, kernel);
        if (canonical.over.source.size() == c.size() &&
            data_isomorphic(x, DatumFrame(x, kernel, canonical.over), canonical, frame, datum))
          found = std::move(d);
        return;
      }
      for (Element y : choices[o]) {
        bool ok = true;
        for (std::size_t p = 0; p < o && ok; ++p) {
          if (d_ord.leq(p, o) && !x.leq(delta[p], y)) ok = false;
          if (d_ord.leq(o, p) && !x.leq(y, delta[p])) ok = false;
        }
        if (!ok) continue;
        delta[o] = y;
        self(self, o + 1);
        if (found) return;
      }
    };
    rec(rec, 0);
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace

std::optional<LaxMorphism> glue_descent_datum(const LocalLattice& x, const LaxMorphism& f,
                                              const DescentDatum& datum) {
  return glue_with(x, f, make_kernel(x, f), datum);
}

std::vector<LaxMorphism> objects_over(const LocalLattice& x, const LaxObject& base, std::size_t bound) {
  std::vector<LaxMorphism> out;
  for (std::size_t n = 0; n <= bound; ++n)
    for (const OrdSet& carrier : preorder_classes(n)) {
      const auto autos = automorphisms(carrier);
      for_each_monotone_map(carrier, base.carrier, [&](const std::vector<Element>& d) {
        std::vector<Element> cap(n);
        for (Element e = 0; e < n; ++e) cap[e] = base(d[e]);
        for_each_valuation_below(x.order(), carrier, cap, true, [&](const std::vector<Element>& delta) {
          // Keep the lexicographically least member of each Aut(D)-orbit.
          for (const auto& perm : autos) {
            std::vector<Element> pd(n), pv(n);
            for (Element e = 0; e < n; ++e) {
              pd[e] = d[perm[e]];
              pv[e] = delta[perm[e]];
            }
            if (std::tie(pd, pv) < std::tie(d, delta)) return true;
          }
          out.push_back({LaxObject{carrier, delta}, base, d});
          return true;
        });
        return true;
      });
    }
  return out;
}

OracleVerdict essential_surjectivity_check(const LocalLattice& x, const LaxMorphism& f, std::size_t bound,
                                           std::size_t cap) {
  OracleVerdict out;
  out.conclusive = false;
  out.bound = bound;
  std::size_t checked = 0;
  const KernelPtr kernel = make_kernel(x, f);
  for_each_descent_datum(
      x, f, bound,
      [&](const DescentDatum& datum) {
        ++checked;
        if (glue_with(x, f, kernel, datum)) return true;
        const LaxObject& c = datum.over.source;
        out.holds = false;
        out.conclusive = true;
        out.witness = Witness{condition::kUngluable, datum.over.map, datum.transition, flatten_strict_pairs(c.carrier),
                              c.valuation};
        out.detail = "datum C=" + describe_order(c.carrier) + " q=" + describe_sequence(datum.over.map) +
                     " gamma=" + describe_sequence(c.valuation) + " has no gluing";
        return false;
      },
      cap);
  if (out.holds) out.detail = std::to_string(checked) + " descent data up to size " + std::to_string(bound) + " glue";
  return out;
}

namespace {

struct Pulled {
  LaxMorphism object;
  DescentDatum datum;
  std::vector<ElementPair> pairs;       // C as pairs (a, e)
  std::vector<std::size_t> pair_index;  // (a, e) -> index in C, or npos
  std::unique_ptr<DatumFrame> frame;
};

Pulled pull_back(const LocalLattice& x, const LaxMorphism& f, const KernelPtr& kernel, const LaxMorphism& d) {
  Pulled p{d, canonical_with(x, d, f, kernel), {}, {}, nullptr};
  p.frame = std::make_unique<DatumFrame>(x, kernel, p.datum.over);
  p.pair_index.assign(f.source.size() * d.source.size(), DatumFrame::npos);
  p.pairs = pullback_laxcomma(x, f, d).pairs;
  for (std::size_t i = 0; i < p.pairs.size(); ++i)
    p.pair_index[p.pairs[i].first * d.source.size() + p.pairs[i].second] = i;
  return p;
}

// Compares maps D -> D' over (B, beta) with morphisms between the pulled-back
// data. Returns the failing condition, or nullptr.
template <class Charge>
const char* compare_on_pair(const LocalLattice& x, const Pulled& ps, const Pulled& pt, Charge&& charge) {
  const LaxMorphism& d = ps.object;
  const LaxMorphism& d2 = pt.object;
  const DescentDatum& cs = ps.datum;
  const DescentDatum& ct = pt.datum;
  const std::size_t nd = d.source.size();
  const std::size_t nd2 = d2.source.size();

  // Maps over B: h: D -> D' monotone, d' h = d, delta <= delta' h, sent to
  // id x h on the pullback carriers.
  std::set<std::vector<Element>> images;
  bool faithful = true;
  for_each_monotone_map(d.source.carrier, d2.source.carrier, [&](const std::vector<Element>& h) {
    charge();
    for (Element e = 0; e < nd; ++e)
      if (d2(h[e]) != d(e) || !x.leq(d.source(e), d2.source(h[e]))) return true;
    std::vector<Element> u(ps.pairs.size());
    for (Element i = 0; i < u.size(); ++i) u[i] = pt.pair_index[ps.pairs[i].first * nd2 + h[ps.pairs[i].second]];
    if (!images.insert(u).second) faithful = false;
    return faithful;
  });
  if (!faithful) return condition::kNotFaithful;

  // Morphisms of data: u: C -> C' over A, lax, commuting with transitions.
  const LaxObject& c = cs.over.source;
  const LaxObject& c2 = ct.over.source;
  const DatumFrame& fs = *ps.frame;
  const DatumFrame& ft = *pt.frame;
  std::vector<Element> u(c.size());
  bool full = true;
  auto rec = [&](auto&& self, Element i) -> void {
    if (i == c.size()) {
      charge();
      const std::size_t k_size = fs.kernel.pullback.pairs.size();
      for (std::size_t k = 0; k < k_size; ++k) {
        const Element a1 = fs.kernel.pullback.pairs[k].first;
        for (Element e = 0; e < c.size(); ++e)
          if (cs.over(e) == a1 && u[fs.apply(cs.transition, k, e)] != ft.apply(ct.transition, k, u[e])) return;
      }
      if (!images.count(u)) full = false;
      return;
    }
    for (Element j = 0; j < c2.size(); ++j) {
      if (ct.over(j) != cs.over(i) || !x.leq(c(i), c2(j))) continue;
      bool ok = true;
      for (Element e = 0; e < i && ok; ++e)
        ok = (!c.carrier.leq(e, i) || c2.carrier.leq(u[e], j)) && (!c.carrier.leq(i, e) || c2.carrier.leq(j, u[e]));
      if (!ok) continue;
      u[i] = j;
      self(self, i + 1);
      if (!full) return;
    }
  };
  rec(rec, 0);
  return full ? nullptr : condition::kNotFull;
}

Witness pair_witness(const char* cond, const LaxMorphism& d, const LaxMorphism& d2) {
  std::vector<Element> family = d.source.valuation;
  family.insert(family.end(), d2.source.valuation.begin(), d2.source.valuation.end());
  std::vector<std::size_t> base = flatten_strict_pairs(d.source.carrier);
  for (std::size_t e : flatten_strict_pairs(d2.source.carrier)) base.push_back(e + d.source.size());
  return {cond, d.map, d2.map, std::move(base), std::move(family)};
}

}  // namespace

Verdict comparison_on_pair(const LocalLattice& x, const LaxMorphism& f, const LaxMorphism& d, const LaxMorphism& d2) {
  const KernelPtr kernel = make_kernel(x, f);
  const Pulled ps = pull_back(x, f, kernel, d);
  const Pulled pt = pull_back(x, f, kernel, d2);
  if (const char* cond = compare_on_pair(x, ps, pt, [] {})) return Verdict::fail(pair_witness(cond, d, d2));
  return Verdict::pass();
}

OracleVerdict full_faithfulness_check(const LocalLattice& x, const LaxMorphism& f, std::size_t bound,
                                      std::size_t cap) {
  return full_faithfulness_check(x, f, objects_over(x, f.target, bound), bound, cap);
}

OracleVerdict full_faithfulness_check(const LocalLattice& x, const LaxMorphism& f,
                                      std::span<const LaxMorphism> objects, std::size_t bound, std::size_t cap) {
  OracleVerdict out;
  out.conclusive = false;
  out.bound = bound;
  std::vector<Pulled> pulled;
  pulled.reserve(objects.size());
  const KernelPtr kernel = make_kernel(x, f);
  for (const LaxMorphism& d : objects) pulled.push_back(pull_back(x, f, kernel, d));

  std::size_t candidates = 0;
  auto charge = [&] {
    if (++candidates > cap) {
      throw CapExceeded("full-faithfulness search exceeds the cap of " + std::to_string(cap) + " candidates on one pair");
    }
  };
  for (std::size_t s = 0; s < objects.size(); ++s)
    for (std::size_t t = 0; t < objects.size(); ++t) {
      candidates = 0;
      const char* cond = compare_on_pair(x, pulled[s], pulled[t], charge);
      if (!cond) continue;
      const LaxMorphism& d = objects[s];
      const LaxMorphism& d2 = objects[t];
      out.holds = false;
      out.conclusive = true;
      out.witness = pair_witness(cond, d, d2);
      out.detail = std::string(cond == condition::kNotFaithful ? "distinct maps over B have the same pullback"
                                                              : "a morphism of descent data is not induced by a map over B") +
                   ": D=" + describe_order(d.source.carrier) + " over " + describe_sequence(d.map) +
                   " delta=" + describe_sequence(d.source.valuation) + ", D'=" + describe_order(d2.source.carrier) +
                   " over " + describe_sequence(d2.map) + " delta'=" + describe_sequence(d2.source.valuation);
      return out;
    }
  out.detail = std::to_string(objects.size()) + " objects over B up to size " + std::to_string(bound) + " compared";
  return out;
}

OracleVerdict pullback_coequalizer_check(const LocalLattice& x, const LaxMorphism& f, std::size_t bound) {
  return pullback_coequalizer_check(x, f, objects_over(x, f.target, bound), bound);
}

OracleVerdict pullback_coequalizer_check(const LocalLattice& x, const LaxMorphism& f,
                                         std::span<const LaxMorphism> objects, std::size_t bound) {
  OracleVerdict out;
  out.conclusive = false;
  out.bound = bound;
  for (const LaxMorphism& d : objects) {
    const LaxPullback p = pullback_laxcomma(x, f, d);
    const OracleVerdict coeq = coequalizer_oracle(x, p.second);
    if (coeq) continue;
    out.holds = false;
    out.conclusive = true;
    out.witness = Witness{condition::kPullbackNotCoequalizer, d.map, {}, flatten_strict_pairs(d.source.carrier),
                          d.source.valuation};
    out.detail = "D=" + describe_order(d.source.carrier) + " over " + describe_sequence(d.map) +
                 " delta=" + describe_sequence(d.source.valuation) + ": " + coeq.detail;
    return out;
  }
  out.detail = std::to_string(objects.size()) + " pullback projections up to size " + std::to_string(bound) +
               " are coequalizers";
  return out;
}

OracleVerdict obstruction_test(const LocalLattice& x, const LaxMorphism& f, std::size_t bound) {
  if (auto e = char_condition_1(x, f); !e) {
    throw PreconditionError("carrier map is not effective for descent in Ord", e.witness);
  }
  if (auto e = fam_is_effective(x, underlying_fam(f)); !e) {
    throw PreconditionError("underlying family morphism is not effective for descent in Fam(X)", e.witness);
  }
  OracleVerdict out;
  out.conclusive = false;
  out.bound = bound;
  const OrdSet& b_ord = f.target.carrier;
  const OrdSet& a_ord = f.source.carrier;
  bool found = false;
  for (std::size_t n = 0; n <= bound && !found; ++n)
    for (const OrdSet& carrier : preorder_classes(n)) {
      if (found) break;
      for_each_monotone_map(carrier, b_ord, [&](const std::vector<Element>& g) {
        std::vector<Element> chi(n, 0);
        do {
          bool below = true;
          for (Element c = 0; c < n && below; ++c) below = x.leq(chi[c], f.target(g[c]));
          if (!below) continue;
          std::optional<ElementPair> broken;
          for (Element c = 0; c < n && !broken; ++c)
            for (Element c2 = 0; c2 < n && !broken; ++c2)
              if (carrier.leq(c, c2) && !x.leq(chi[c], chi[c2])) broken = ElementPair{c, c2};
          if (!broken) continue;
          // Pullback along f with the meet valuation.
          std::vector<ElementPair> pairs;
          std::vector<Element> value;
          for (Element a = 0; a < a_ord.size(); ++a)
            for (Element c = 0; c < n; ++c)
              if (f(a) == g[c]) {
                pairs.emplace_back(a, c);
                value.push_back(x.meet(f.target(g[c]), chi[c], f.source(a)));
              }
          bool monotone = true;
          for (std::size_t i = 0; i < pairs.size() && monotone; ++i)
            for (std::size_t j = 0; j < pairs.size() && monotone; ++j)
              if (a_ord.leq(pairs[i].first, pairs[j].first) && carrier.leq(pairs[i].second, pairs[j].second))
                monotone = x.leq(value[i], value[j]);
          if (!monotone) continue;
          found = true;
          out.holds = false;
          out.conclusive = true;
          out.witness = Witness{condition::kMixedDescends, {broken->first, broken->second}, g,
                                flatten_strict_pairs(carrier), chi};
          out.detail = "C=" + describe_order(carrier) + " chi=" + describe_sequence(chi) + " over " +
                       describe_sequence(g) + ": pullback valuation is monotone, chi is not on (" +
                       std::to_string(broken->first) + "," + std::to_string(broken->second) + ")";
          return false;
        } while (n > 0 && next_tuple(chi, x.size()));
        return true;
      });
    }
  if (out.holds) out.detail = "no non-monotone mixed object up to size " + std::to_string(bound) + " descends";
  return out;
}

}  // namespace ordescent
