#include "ordescent/descent_check.hpp"

#include <array>
#include <string>

namespace ordescent {

namespace {

std::optional<Element> least_upper_bound(const OrdSet& x, std::span<const Element> subset) {
  auto upper = [&](Element u) {
    for (Element s : subset)
      if (!x.leq(s, u)) return false;
    return true;
  };
  for (Element u = 0; u < x.size(); ++u) {
    if (!upper(u)) continue;
    bool least = true;
    for (Element v = 0; v < x.size() && least; ++v) least = !upper(v) || x.leq(u, v);
    if (least) return u;
  }
  return std::nullopt;
}

std::optional<Element> greatest_lower_bound(const OrdSet& x, Element a, Element b) {
  for (Element l = 0; l < x.size(); ++l) {
    if (!x.leq(l, a) || !x.leq(l, b)) continue;
    bool greatest = true;
    for (Element m = 0; m < x.size() && greatest; ++m) greatest = !(x.leq(m, a) && x.leq(m, b)) || x.leq(m, l);
    if (greatest) return l;
  }
  return std::nullopt;
}

Verdict ord_part(Verdict (*pred)(const OrdSet&, const OrdSet&, std::span<const Element>), const LaxMorphism& f) {
  return pred(f.source.carrier, f.target.carrier, f.map);
}

}  // namespace

Verdict is_regular_epi_lax(const LocalLattice& x, const LaxMorphism& f) {
  if (auto r = ord_part(is_regular_epi_ord, f); !r) return r;
  std::vector<Element> parts;
  for (Element b = 0; b < f.target.size(); ++b) {
    parts.clear();
    for (Element a = 0; a < f.source.size(); ++a)
      if (f.target.carrier.leq(f(a), b)) parts.push_back(f.source(a));
    if (!x.iso(f.target(b), x.join(f.target(b), parts)))
      return Verdict::fail({condition::kValuationGenerated, {}, {b}, {}, {}});
  }
  return Verdict::pass();
}

Verdict is_stable_regular_epi_lax(const LocalLattice& x, const LaxMorphism& f) {
  if (auto d = ord_part(is_descent_ord, f); !d) return d;
  return fam_is_descent(x, underlying_fam(f));
}

Verdict stable_regular_epi_direct(const LocalLattice& x, const LaxMorphism& f) {
  if (auto d = ord_part(is_descent_ord, f); !d) return d;
  const OrdSet& order = x.order();
  std::vector<Element> parts;
  for (Element b = 0; b < f.target.size(); ++b) {
    const Element top = f.target(b);
    for (Element w = 0; w < order.size(); ++w) {
      if (!order.leq(w, top)) continue;
      parts.clear();
      for (Element a = 0; a < f.source.size(); ++a)
        if (f(a) == b) parts.push_back(*local_meet(order, top, w, f.source(a)));
      const auto joined = local_join(order, top, parts);
      if (!joined || !order.iso(w, *joined)) return Verdict::fail({condition::kFamDescent, {}, {b}, {w}, {}});
    }
  }
  return Verdict::pass();
}

Verdict char_condition_1(const LocalLattice&, const LaxMorphism& f) {
  return ord_part(is_effective_descent_ord, f);
}

Verdict char_condition_2(const LocalLattice& x, const LaxMorphism& f) {
  const OrdSet& a_ord = f.source.carrier;
  const OrdSet& b_ord = f.target.carrier;
  std::vector<Element> lifted, parts;
  for (Element b0 = 0; b0 < b_ord.size(); ++b0)
    for (Element b1 = 0; b1 < b_ord.size(); ++b1) {
      if (!b_ord.leq(b0, b1)) continue;
      lifted.clear();
      for (Element a0 = 0; a0 < a_ord.size(); ++a0) {
        if (f(a0) != b0) continue;
        for (Element a1 = 0; a1 < a_ord.size(); ++a1)
          if (f(a1) == b1 && a_ord.leq(a0, a1)) {
            lifted.push_back(a0);
            break;
          }
      }
      const Element top = f.target(b0);
      for (Element w = 0; w < x.size(); ++w) {
        if (!x.leq(w, top)) continue;
        parts.clear();
        for (Element a0 : lifted) parts.push_back(x.meet(top, w, f.source(a0)));
        if (!x.iso(w, x.join(top, parts)))
          return Verdict::fail({condition::kLiftedJoinRecovery, {}, {b0, b1}, {w}, {}});
      }
    }
  return Verdict::pass();
}

Verdict char_condition_3(const LocalLattice& x, const LaxMorphism& f, std::size_t cap) {
  return fam_gluing_condition(x, underlying_fam(f), cap);
}

Verdict char_condition_3_global_join(const LocalLattice& x, const LaxMorphism& f, std::size_t cap) {
  const OrdSet& order = x.order();
  const FamMorphism fam = underlying_fam(f);
  Verdict result = Verdict::pass();
  for_each_fam_descent_datum(
      x, fam,
      [&](std::span<const Element> sigma) {
        const auto glued = least_upper_bound(order, sigma);
        for (Element a = 0; a < sigma.size(); ++a) {
          const auto m = glued ? greatest_lower_bound(order, f.source(a), *glued) : std::nullopt;
          if (!m || !order.iso(*m, sigma[a])) {
            result = Verdict::fail(
                {condition::kGlobalJoin, {a}, {f(a)}, {}, std::vector<Element>(sigma.begin(), sigma.end())});
            return false;
          }
        }
        return true;
      },
      cap);
  return result;
}

Verdict Characterization::verdict() const {
  if (!condition1) return condition1;
  if (!condition2) return condition2;
  return condition3;
}

Characterization characterize(const LocalLattice& x, const LaxMorphism& f, std::size_t cap) {
  return {char_condition_1(x, f), char_condition_2(x, f), char_condition_3(x, f, cap)};
}

Verdict is_effective_descent_lax(const LocalLattice& x, const LaxMorphism& f, std::size_t cap) {
  return evaluate_componentwise(Predicate::EffectiveDescent, x, f, cap);
}

Verdict is_effective_descent_lax_lcc(const LocalLattice& x, const LaxMorphism& f) {
  if (const auto& ccc = x.cartesian_closed(); !ccc) {
    throw PreconditionError("valuation order is not locally cartesian closed (distributivity fails)", ccc.witness);
  }
  if (auto c1 = char_condition_1(x, f); !c1) return c1;
  const OrdSet& a_ord = f.source.carrier;
  const OrdSet& b_ord = f.target.carrier;
  std::vector<Element> parts;
  for (Element b0 = 0; b0 < b_ord.size(); ++b0)
    for (Element b1 = 0; b1 < b_ord.size(); ++b1) {
      if (!b_ord.leq(b0, b1)) continue;
      parts.clear();
      for (Element a0 = 0; a0 < a_ord.size(); ++a0) {
        if (f(a0) != b0) continue;
        for (Element a1 = 0; a1 < a_ord.size(); ++a1)
          if (f(a1) == b1 && a_ord.leq(a0, a1)) {
            parts.push_back(f.source(a0));
            break;
          }
      }
      if (!x.iso(f.target(b0), x.join(f.target(b0), parts)))
        return Verdict::fail({condition::kLiftedJoinCover, {}, {b0, b1}, {}, {}});
    }
  return Verdict::pass();
}

namespace {

Verdict fiberwise(const OrdSet& x, const LaxMorphism& f, bool effective) {
  for (Element level = 0; level < x.size(); ++level) {
    const MonotoneMap fx = fiber_map(x, f, level);
    Verdict v = effective ? is_effective_descent_ord(fx) : is_descent_ord(fx);
    if (v) continue;
    const Fiber target = fiber(x, f.target, level);
    Witness w = *v.witness;
    for (auto& b : w.codomain) b = target.inclusion[b];
    w.condition = effective ? condition::kFiberTripleLifting : condition::kFiberPairLifting;
    w.base = {level};
    return Verdict::fail(std::move(w));
  }
  return Verdict::pass();
}

}  // namespace

Verdict cln_sufficient(const OrdSet& x, const LaxMorphism& f) {
  if (auto e = ord_part(is_effective_descent_ord, f); !e) return e;
  return fiberwise(x, f, true);
}

Verdict cj_sufficient(const OrdSet& x, const LaxMorphism& f) {
  if (auto e = ord_part(is_effective_descent_ord, f); !e) return e;
  return fiberwise(x, f, false);
}

std::vector<ComponentMorphism> componentwise(const OrdSet& x, const LaxMorphism& f) {
  auto components = connected_components(x);
  std::vector<std::size_t> component_of(x.size());
  std::vector<Element> position(x.size());
  for (std::size_t i = 0; i < components.size(); ++i)
    for (std::size_t p = 0; p < components[i].members.size(); ++p) {
      component_of[components[i].members[p]] = i;
      position[components[i].members[p]] = p;
    }

  std::vector<ComponentMorphism> out;
  out.reserve(components.size());
  for (std::size_t i = 0; i < components.size(); ++i) {
    ComponentMorphism part;
    std::vector<Element> a_position(f.source.size()), b_position(f.target.size());
    for (Element a = 0; a < f.source.size(); ++a)
      if (component_of[f.source(a)] == i) {
        a_position[a] = part.domain.size();
        part.domain.push_back(a);
      }
    for (Element b = 0; b < f.target.size(); ++b)
      if (component_of[f.target(b)] == i) {
        b_position[b] = part.codomain.size();
        part.codomain.push_back(b);
      }
    LaxObject src{induced_order(f.source.carrier, part.domain), {}};
    LaxObject dst{induced_order(f.target.carrier, part.codomain), {}};
    std::vector<Element> map;
    for (Element a : part.domain) {
      src.valuation.push_back(position[f.source(a)]);
      map.push_back(b_position[f(a)]);
    }
    for (Element b : part.codomain) dst.valuation.push_back(position[f.target(b)]);
    part.morphism = {std::move(src), std::move(dst), std::move(map)};
    part.base = std::move(components[i]);
    out.push_back(std::move(part));
  }
  return out;
}

Witness lift_witness(const ComponentMorphism& part, const LaxMorphism& f, Witness w) {
  for (auto& a : w.domain) a = part.domain[a];
  for (auto& b : w.codomain) b = part.codomain[b];
  for (auto& e : w.base) e = part.base.members[e];
  if (!w.family.empty()) {
    std::vector<Element> family = f.source.valuation;
    for (std::size_t i = 0; i < w.family.size(); ++i) family[part.domain[i]] = part.base.members[w.family[i]];
    w.family = std::move(family);
  }
  return w;
}

namespace {

constexpr std::array<std::string_view, 9> kPredicateNames = {
    "repi", "srepi", "edm", "edm-lcc", "fam-descent", "fam-edm", "ord-edm", "cln", "cj",
};

}  // namespace

std::string_view predicate_name(Predicate p) { return kPredicateNames[static_cast<std::size_t>(p)]; }

std::optional<Predicate> parse_predicate(std::string_view name) {
  for (std::size_t i = 0; i < kPredicateNames.size(); ++i)
    if (kPredicateNames[i] == name) return static_cast<Predicate>(i);
  return std::nullopt;
}

Verdict evaluate(Predicate p, const LocalLattice& x, const LaxMorphism& f, std::size_t cap) {
  switch (p) {
    case Predicate::RegularEpi: return is_regular_epi_lax(x, f);
    case Predicate::StableRegularEpi: return is_stable_regular_epi_lax(x, f);
    case Predicate::EffectiveDescent: return characterize(x, f, cap).verdict();
    case Predicate::EffectiveDescentLcc: return is_effective_descent_lax_lcc(x, f);
    case Predicate::FamDescent: return fam_is_descent(x, underlying_fam(f));
    case Predicate::FamEffective: return fam_is_effective(x, underlying_fam(f), cap);
    case Predicate::OrdEffectiveDescent: return char_condition_1(x, f);
    case Predicate::Cln: return cln_sufficient(x.order(), f);
    case Predicate::Cj: return cj_sufficient(x.order(), f);
  }
  throw Error("unknown predicate");
}

Verdict evaluate_componentwise(Predicate p, const LocalLattice& x, const LaxMorphism& f, std::size_t cap) {
  for (const ComponentMorphism& part : componentwise(x.order(), f)) {
    const LocalLattice local(part.base.order);
    Verdict v;
    try {
      if (p == Predicate::EffectiveDescent) {
        // Conditions in order, stopping at the first failure.
        v = char_condition_1(local, part.morphism);
        if (v) v = char_condition_2(local, part.morphism);
        if (v) v = char_condition_3(local, part.morphism, cap);
      } else {
        v = evaluate(p, local, part.morphism, cap);
      }
    } catch (const PreconditionError& e) {
      std::optional<Witness> w = e.witness();
      if (w) w = lift_witness(part, f, std::move(*w));
      throw PreconditionError(e.what(), std::move(w));
    }
    if (!v) return Verdict::fail(lift_witness(part, f, std::move(*v.witness)));
  }
  return Verdict::pass();
}

Verdict poset_variant(Predicate p, const LocalLattice& x, const LaxMorphism& f, std::size_t cap) {
  const std::pair<const OrdSet*, const char*> orders[] = {
      {&x.order(), "X"}, {&f.source.carrier, "A"}, {&f.target.carrier, "B"}};
  for (const auto& [order, name] : orders)
    if (auto v = is_poset(*order); !v) {
      throw PreconditionError(std::string(name) + " is not antisymmetric", v.witness);
    }
  return evaluate(p, x, f, cap);
}

ReflectedBase reflect_base(const LocalLattice& x, const LaxMorphism& f) {
  const PosetalReflection r = posetal_reflection(x.order());
  LaxMorphism g = f;
  for (auto& v : g.source.valuation) v = r.quotient[v];
  for (auto& v : g.target.valuation) v = r.quotient[v];
  return {LocalLattice(r.poset), std::move(g)};
}

}  // namespace ordescent
