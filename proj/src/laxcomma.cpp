#include "ordescent/laxcomma.hpp"

#include <string>

namespace ordescent {

Verdict is_lax_object(const OrdSet& x, const OrdSet& carrier, std::span<const Element> valuation) {
  if (valuation.size() != carrier.size()) {
    throw IndexError("valuation has " + std::to_string(valuation.size()) + " entries for a carrier of size " +
                     std::to_string(carrier.size()));
  }
  for (Element a = 0; a < valuation.size(); ++a)
    if (!x.contains(valuation[a])) {
      throw IndexError("valuation of " + std::to_string(a) + " is " + std::to_string(valuation[a]) +
                       ", outside X of size " + std::to_string(x.size()));
    }
  for (Element a = 0; a < carrier.size(); ++a)
    for (Element a2 = 0; a2 < carrier.size(); ++a2)
      if (carrier.leq(a, a2) && !x.leq(valuation[a], valuation[a2]))
        return Verdict::fail({condition::kMonotoneValuation, {a, a2}, {}, {}, {}});
  return Verdict::pass();
}

LaxObject make_lax_object(const OrdSet& x, OrdSet carrier, std::vector<Element> valuation) {
  if (auto v = is_lax_object(x, carrier, valuation); !v) {
    throw ValidationError("valuation is not monotone", *v.witness);
  }
  return {std::move(carrier), std::move(valuation)};
}

Verdict is_lax_morphism(const OrdSet& x, const LaxObject& source, const LaxObject& target,
                        std::span<const Element> map) {
  if (auto m = is_monotone(source.carrier, target.carrier, map); !m) return m;
  for (Element a = 0; a < map.size(); ++a)
    if (!x.leq(source(a), target(map[a]))) return Verdict::fail({condition::kLaxInequality, {a}, {map[a]}, {}, {}});
  return Verdict::pass();
}

LaxMorphism make_lax_morphism(const OrdSet& x, LaxObject source, LaxObject target, std::vector<Element> map) {
  for (const LaxObject* o : {&source, &target})
    if (auto v = is_lax_object(x, o->carrier, o->valuation); !v) {
      throw ValidationError("valuation is not monotone", *v.witness);
    }
  if (auto v = is_lax_morphism(x, source, target, map); !v) {
    throw ValidationError(v.witness->condition == condition::kMonotone ? "map is not monotone"
                                                                       : "lax inequality fails",
                          *v.witness);
  }
  return {std::move(source), std::move(target), std::move(map)};
}

LaxMorphism lax_identity(const LaxObject& object) {
  std::vector<Element> id(object.size());
  for (Element a = 0; a < id.size(); ++a) id[a] = a;
  return {object, object, std::move(id)};
}

LaxMorphism compose(const LaxMorphism& g, const LaxMorphism& f) {
  if (!(f.target == g.source)) throw Error("compose: target of f differs from source of g");
  std::vector<Element> m(f.map.size());
  for (Element a = 0; a < m.size(); ++a) m[a] = g(f(a));
  return {f.source, g.target, std::move(m)};
}

LaxPullback pullback_laxcomma(const LocalLattice& x, const LaxMorphism& f, const LaxMorphism& g) {
  if (!(f.target == g.target)) throw Error("pullback_laxcomma: maps have different codomains");
  LaxPullback out;
  for (Element a = 0; a < f.map.size(); ++a)
    for (Element c = 0; c < g.map.size(); ++c)
      if (f(a) == g(c)) out.pairs.emplace_back(a, c);
  const std::size_t n = out.pairs.size();
  std::vector<std::uint8_t> rel(n * n);
  std::vector<Element> valuation(n), p1(n), p2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [a, c] = out.pairs[i];
    for (std::size_t j = 0; j < n; ++j)
      rel[i * n + j] = f.source.carrier.leq(a, out.pairs[j].first) && g.source.carrier.leq(c, out.pairs[j].second);
    valuation[i] = x.meet(f.target(f(a)), g.source(c), f.source(a));
    p1[i] = a;
    p2[i] = c;
  }
  out.object = {OrdSet::from_preorder(n, std::move(rel)), std::move(valuation)};
  out.first = {out.object, f.source, std::move(p1)};
  out.second = {out.object, g.source, std::move(p2)};
  return out;
}

Fiber fiber(const OrdSet& x, const LaxObject& a, Element level) {
  if (!x.contains(level)) throw IndexError("fiber level " + std::to_string(level) + " outside X");
  Fiber out;
  for (Element e = 0; e < a.size(); ++e)
    if (x.leq(level, a(e))) out.inclusion.push_back(e);
  out.order = induced_order(a.carrier, out.inclusion);
  return out;
}

MonotoneMap fiber_map(const OrdSet& x, const LaxMorphism& f, Element level) {
  const Fiber src = fiber(x, f.source, level);
  const Fiber dst = fiber(x, f.target, level);
  std::vector<Element> position(f.target.size(), 0);
  for (std::size_t i = 0; i < dst.inclusion.size(); ++i) position[dst.inclusion[i]] = i;
  std::vector<Element> m;
  m.reserve(src.inclusion.size());
  for (Element a : src.inclusion) m.push_back(position[f(a)]);
  return MonotoneMap(src.order, dst.order, std::move(m));
}

OrdSet pi_at(const OrdSet& x, const LaxObject& a, Element level) { return fiber(x, a, level).order; }

FamObject underlying_fam(const LaxObject& a) { return {a.valuation}; }

FamMorphism underlying_fam(const LaxMorphism& f) {
  return {underlying_fam(f.source), underlying_fam(f.target), std::vector<std::size_t>(f.map.begin(), f.map.end())};
}

MonotoneMap underlying_ord(const LaxMorphism& f) { return MonotoneMap(f.source.carrier, f.target.carrier, f.map); }

}  // namespace ordescent
