#include "ordescent/replay.hpp"

#include <string>

namespace ordescent {

namespace {

ReplayResult confirmed() { return {true, {}}; }
ReplayResult rejected(std::string why) { return {false, std::move(why)}; }

// Greatest lower bound of a and b (any one of an isomorphism class).
std::optional<Element> meet(const OrdSet& x, Element a, Element b) {
  for (Element l = 0; l < x.size(); ++l) {
    if (!x.leq(l, a) || !x.leq(l, b)) continue;
    bool greatest = true;
    for (Element m = 0; m < x.size() && greatest; ++m)
      if (x.leq(m, a) && x.leq(m, b)) greatest = x.leq(m, l);
    if (greatest) return l;
  }
  return std::nullopt;
}

// Least upper bound of `s` among the elements below `top`.
std::optional<Element> join_below(const OrdSet& x, Element top, const std::vector<Element>& s) {
  auto upper = [&](Element u) {
    if (!x.leq(u, top)) return false;
    for (Element e : s)
      if (!x.leq(e, u)) return false;
    return true;
  };
  for (Element u = 0; u < x.size(); ++u) {
    if (!upper(u)) continue;
    bool least = true;
    for (Element v = 0; v < x.size() && least; ++v)
      if (upper(v)) least = x.leq(u, v);
    if (least) return u;
  }
  return std::nullopt;
}

bool recovers(const OrdSet& x, Element top, Element w, const std::vector<Element>& values) {
  std::vector<Element> parts;
  for (Element v : values) {
    const auto m = meet(x, w, v);
    if (!m) return false;
    parts.push_back(*m);
  }
  const auto j = join_below(x, top, parts);
  return j && x.leq(w, *j) && x.leq(*j, w);
}

bool sizes_ok(const Witness& w, std::size_t domain, std::size_t codomain, std::size_t base) {
  return w.domain.size() == domain && w.codomain.size() == codomain && w.base.size() == base;
}

struct View {
  const OrdSet& x;
  const std::vector<Element>& alpha;
  const std::vector<Element>& beta;
  const std::vector<std::size_t>& map;
};

ReplayResult replay_fam(const View& v, const Witness& w) {
  const OrdSet& x = v.x;
  const std::string& c = w.condition;
  if (c == condition::kFamInequality) {
    if (!sizes_ok(w, 1, 1, 0) || v.map[w.domain[0]] != w.codomain[0]) return rejected("malformed witness");
    if (x.leq(v.alpha[w.domain[0]], v.beta[w.codomain[0]])) return rejected("inequality holds");
    return confirmed();
  }
  if (c == condition::kFamDescent) {
    if (!sizes_ok(w, 0, 1, 1)) return rejected("malformed witness");
    const Element b = w.codomain[0], wv = w.base[0];
    if (b >= v.beta.size() || wv >= x.size() || !x.leq(wv, v.beta[b])) return rejected("w is not below beta(b)");
    std::vector<Element> fiber;
    for (std::size_t a = 0; a < v.map.size(); ++a)
      if (v.map[a] == b) fiber.push_back(v.alpha[a]);
    if (recovers(x, v.beta[b], wv, fiber)) return rejected("join over the fiber recovers w");
    return confirmed();
  }
  if (c == condition::kFamGluing) {
    if (!sizes_ok(w, 1, 1, 0) || w.family.size() != v.alpha.size()) return rejected("malformed witness");
    const std::vector<Element>& sigma = w.family;
    const Element b = w.codomain[0], a1 = w.domain[0];
    if (v.map[a1] != b) return rejected("a' is not in the fiber over b");
    for (std::size_t a = 0; a < sigma.size(); ++a)
      if (sigma[a] >= x.size() || !x.leq(sigma[a], v.alpha[a])) return rejected("sigma is not below alpha");
    for (std::size_t i = 0; i < sigma.size(); ++i)
      for (std::size_t j = 0; j < sigma.size(); ++j) {
        if (v.map[i] != v.map[j]) continue;
        const auto l = meet(x, sigma[j], v.alpha[i]);
        const auto r = meet(x, v.alpha[j], sigma[i]);
        if (!l || !r || !x.iso(*l, *r)) return rejected("sigma is not compatible");
      }
    std::vector<Element> parts;
    for (std::size_t a = 0; a < sigma.size(); ++a)
      if (v.map[a] == b) parts.push_back(sigma[a]);
    const auto glued = join_below(x, v.beta[b], parts);
    if (!glued) return confirmed();
    const auto back = meet(x, v.alpha[a1], *glued);
    if (back && x.iso(*back, sigma[a1])) return rejected("gluing equation holds");
    return confirmed();
  }
  return rejected("no replay for condition '" + c + "'");
}

bool lifts_pair(const LaxMorphism& f, Element b0, Element b1) {
  for (Element a0 = 0; a0 < f.source.size(); ++a0)
    for (Element a1 = 0; a1 < f.source.size(); ++a1)
      if (f(a0) == b0 && f(a1) == b1 && f.source.carrier.leq(a0, a1)) return true;
  return false;
}

bool lifts_triple(const LaxMorphism& f, Element b0, Element b1, Element b2, const std::vector<bool>* keep = nullptr) {
  const OrdSet& a = f.source.carrier;
  auto kept = [&](Element e) { return !keep || (*keep)[e]; };
  for (Element a1 = 0; a1 < a.size(); ++a1) {
    if (f(a1) != b1 || !kept(a1)) continue;
    bool below = false, above = false;
    for (Element e = 0; e < a.size(); ++e) {
      if (!kept(e)) continue;
      below = below || (f(e) == b0 && a.leq(e, a1));
      above = above || (f(e) == b2 && a.leq(a1, e));
    }
    if (below && above) return true;
  }
  return false;
}

// The order generated by the image pairs differs from B on (b0, b1): b0 <= b1
// is generated iff a chain of image pairs leads from b0 to b1.
bool replay_generated(const LaxMorphism& f, Element b0, Element b1) {
  const OrdSet& a = f.source.carrier;
  std::vector<bool> reach(f.target.size(), false);
  reach[b0] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (Element e = 0; e < a.size(); ++e)
      for (Element e2 = 0; e2 < a.size(); ++e2)
        if (a.leq(e, e2) && reach[f(e)] && !reach[f(e2)]) reach[f(e2)] = grew = true;
  }
  return reach[b1] != f.target.carrier.leq(b0, b1);
}

// beta(b) is not the join of the alpha(a) with f(a) <= b.
bool replay_valuation(const OrdSet& x, const LaxMorphism& f, Element b0) {
  std::vector<Element> values;
  for (Element e = 0; e < f.source.size(); ++e)
    if (f.target.carrier.leq(f(e), b0)) values.push_back(f.source(e));
  const auto j = join_below(x, f.target(b0), values);
  return !j || !x.iso(*j, f.target(b0));
}

ReplayResult replay_mixed(const LocalLattice& lx, const LaxMorphism& f, const Witness& w) {
  const OrdSet& x = lx.order();
  const std::size_t n = w.codomain.size();
  if (w.family.size() != n || w.domain.size() != 2) return rejected("malformed witness");
  const OrdSet c = order_from_strict_pairs(n, w.base);
  const auto& g = w.codomain;
  const auto& chi = w.family;
  if (!is_monotone(c, f.target.carrier, g)) return rejected("g is not monotone");
  for (Element e = 0; e < n; ++e)
    if (!x.leq(chi[e], f.target(g[e]))) return rejected("chi is not below beta o g");
  const Element c0 = w.domain[0], c1 = w.domain[1];
  if (!c.leq(c0, c1) || x.leq(chi[c0], chi[c1])) return rejected("chi is monotone on the witness pair");
  for (Element a = 0; a < f.source.size(); ++a)
    for (Element e = 0; e < n; ++e)
      for (Element a2 = 0; a2 < f.source.size(); ++a2)
        for (Element e2 = 0; e2 < n; ++e2) {
          if (f(a) != g[e] || f(a2) != g[e2]) continue;
          if (!f.source.carrier.leq(a, a2) || !c.leq(e, e2)) continue;
          const auto v = meet(x, chi[e], f.source(a));
          const auto v2 = meet(x, chi[e2], f.source(a2));
          if (!v || !v2 || !x.leq(*v, *v2)) return rejected("pullback valuation is not monotone");
        }
  return confirmed();
}

ReplayResult replay_ungluable(const LocalLattice& lx, const LaxMorphism& f, const Witness& w) {
  const std::size_t n = w.domain.size();
  if (w.family.size() != n) return rejected("malformed witness");
  const OrdSet c = order_from_strict_pairs(n, w.base);
  DescentDatum datum{{LaxObject{c, w.family}, f.source, w.domain}, w.codomain};
  if (auto valid = check_descent_datum(lx, f, datum); !valid) return rejected("not a descent datum");
  for (const LaxMorphism& d : objects_over(lx, f.target, n))
    if (descent_data_isomorphic(lx, f, canonical_descent_datum(lx, d, f), datum))
      return rejected("datum is isomorphic to a pulled-back object");
  return confirmed();
}

ReplayResult replay_pair(const LocalLattice& lx, const LaxMorphism& f, const Witness& w) {
  const std::size_t nd = w.domain.size(), nd2 = w.codomain.size();
  if (w.family.size() != nd + nd2 || w.base.size() % 2) return rejected("malformed witness");
  std::vector<ElementPair> p, p2;
  for (std::size_t i = 0; i < w.base.size(); i += 2) {
    const Element s = w.base[i], t = w.base[i + 1];
    if (s < nd && t < nd) p.emplace_back(s, t);
    else if (s >= nd && t >= nd) p2.emplace_back(s - nd, t - nd);
    else return rejected("pair crosses the two objects");
  }
  LaxObject d_obj{transitive_reflexive_closure(p, nd), {w.family.begin(), w.family.begin() + nd}};
  LaxObject d2_obj{transitive_reflexive_closure(p2, nd2), {w.family.begin() + nd, w.family.end()}};
  const LaxMorphism d{d_obj, f.target, w.domain};
  const LaxMorphism d2{d2_obj, f.target, w.codomain};
  for (const LaxMorphism* m : {&d, &d2})
    if (!is_lax_object(lx.order(), m->source.carrier, m->source.valuation) ||
        !is_lax_morphism(lx.order(), m->source, m->target, m->map))
      return rejected("object is not over (B, beta)");
  if (auto v = comparison_on_pair(lx, f, d, d2); !v && v.witness->condition == w.condition) return confirmed();
  return rejected("comparison is bijective on this pair");
}

}  // namespace

ReplayResult replay_fam_witness(const OrdSet& x, const FamMorphism& f, const Witness& w) {
  return replay_fam({x, f.source.values, f.target.values, f.mapping}, w);
}

ReplayResult replay_witness(const OrdSet& x, const LaxMorphism& f, const Witness& w) {
  const OrdSet& a = f.source.carrier;
  const OrdSet& b = f.target.carrier;
  const std::string& c = w.condition;
  const std::size_t nb = b.size();
  auto in_b = [&](const std::vector<std::size_t>& v) {
    for (auto e : v)
      if (e >= nb) return false;
    return true;
  };

  if (c == condition::kMonotone) {
    if (!sizes_ok(w, 2, 0, 0)) return rejected("malformed witness");
    return a.leq(w.domain[0], w.domain[1]) && !b.leq(f(w.domain[0]), f(w.domain[1])) ? confirmed()
                                                                                    : rejected("map is monotone there");
  }
  if (c == condition::kLaxInequality) {
    if (w.domain.size() != 1) return rejected("malformed witness");
    return !x.leq(f.source(w.domain[0]), f.target(f(w.domain[0]))) ? confirmed() : rejected("inequality holds");
  }
  if (c == condition::kSurjective) {
    if (!sizes_ok(w, 0, 1, 0) || !in_b(w.codomain)) return rejected("malformed witness");
    for (Element e = 0; e < a.size(); ++e)
      if (f(e) == w.codomain[0]) return rejected("element has a preimage");
    return confirmed();
  }
  if (c == condition::kPairLifting) {
    if (!sizes_ok(w, 0, 2, 0) || !in_b(w.codomain)) return rejected("malformed witness");
    const Element b0 = w.codomain[0], b1 = w.codomain[1];
    if (!b.leq(b0, b1)) return rejected("b0 is not below b1");
    return lifts_pair(f, b0, b1) ? rejected("pair lifts") : confirmed();
  }
  if (c == condition::kTripleLifting) {
    if (!sizes_ok(w, 0, 3, 0) || !in_b(w.codomain)) return rejected("malformed witness");
    const Element b0 = w.codomain[0], b1 = w.codomain[1], b2 = w.codomain[2];
    if (!b.leq(b0, b1) || !b.leq(b1, b2)) return rejected("not a chain in B");
    return lifts_triple(f, b0, b1, b2) ? rejected("triple lifts") : confirmed();
  }
  if (c == condition::kOrderGenerated) {
    if (!sizes_ok(w, 0, 2, 0) || !in_b(w.codomain)) return rejected("malformed witness");
    return replay_generated(f, w.codomain[0], w.codomain[1]) ? confirmed() : rejected("generated order agrees");
  }
  if (c == condition::kValuationGenerated) {
    if (!sizes_ok(w, 0, 1, 0) || !in_b(w.codomain)) return rejected("malformed witness");
    return replay_valuation(x, f, w.codomain[0]) ? confirmed() : rejected("join reaches beta(b)");
  }
  if (c == condition::kLiftedJoinRecovery || c == condition::kLiftedJoinCover) {
    const std::size_t base_size = c == condition::kLiftedJoinRecovery ? 1 : 0;
    if (!sizes_ok(w, 0, 2, base_size) || !in_b(w.codomain)) return rejected("malformed witness");
    const Element b0 = w.codomain[0], b1 = w.codomain[1];
    const Element top = f.target(b0);
    const Element wv = base_size ? w.base[0] : top;
    if (!b.leq(b0, b1) || wv >= x.size() || !x.leq(wv, top)) return rejected("witness outside the condition");
    std::vector<Element> values;
    for (Element a0 = 0; a0 < a.size(); ++a0)
      for (Element a1 = 0; a1 < a.size(); ++a1)
        if (f(a0) == b0 && f(a1) == b1 && a.leq(a0, a1)) {
          values.push_back(f.source(a0));
          break;
        }
    return recovers(x, top, wv, values) ? rejected("lifted join recovers w") : confirmed();
  }
  if (c == condition::kFiberTripleLifting || c == condition::kFiberPairLifting) {
    if (w.base.size() != 1 || !in_b(w.codomain)) return rejected("malformed witness");
    const Element level = w.base[0];
    std::vector<bool> keep(a.size());
    for (Element e = 0; e < a.size(); ++e) keep[e] = x.leq(level, f.source(e));
    for (Element e : w.codomain)
      if (!x.leq(level, f.target(e))) return rejected("witness is outside the fiber of B");
    if (c == condition::kFiberPairLifting) {
      if (w.codomain.size() != 2 || !b.leq(w.codomain[0], w.codomain[1])) return rejected("malformed witness");
      for (Element a0 = 0; a0 < a.size(); ++a0)
        for (Element a1 = 0; a1 < a.size(); ++a1)
          if (keep[a0] && keep[a1] && f(a0) == w.codomain[0] && f(a1) == w.codomain[1] && a.leq(a0, a1))
            return rejected("pair lifts in the fiber");
      return confirmed();
    }
    if (w.codomain.size() != 3 || !b.leq(w.codomain[0], w.codomain[1]) || !b.leq(w.codomain[1], w.codomain[2]))
      return rejected("malformed witness");
    return lifts_triple(f, w.codomain[0], w.codomain[1], w.codomain[2], &keep) ? rejected("triple lifts in the fiber")
                                                                                : confirmed();
  }
  if (c == condition::kFamDescent || c == condition::kFamGluing || c == condition::kFamInequality) {
    const std::vector<std::size_t> map(f.map.begin(), f.map.end());
    return replay_fam({x, f.source.valuation, f.target.valuation, map}, w);
  }
  if (c == condition::kCoequalizerCarrier) {
    if (!sizes_ok(w, 0, 1, 0) || !in_b(w.codomain)) return rejected("malformed witness");
    for (Element e = 0; e < a.size(); ++e)
      if (f(e) == w.codomain[0]) return rejected("element has a preimage");
    return confirmed();
  }
  if (c == condition::kCoequalizerOrder) {
    if (!sizes_ok(w, 0, 2, 0) || !in_b(w.codomain)) return rejected("malformed witness");
    return replay_generated(f, w.codomain[0], w.codomain[1]) ? confirmed() : rejected("generated order agrees");
  }
  if (c == condition::kCoequalizerValuation) {
    if (!sizes_ok(w, 0, 1, 0) || !in_b(w.codomain)) return rejected("malformed witness");
    return replay_valuation(x, f, w.codomain[0]) ? confirmed() : rejected("join reaches beta(b)");
  }
  if (c == condition::kPullbackNotCoequalizer) {
    if (w.family.size() != w.domain.size() || !in_b(w.domain)) return rejected("malformed witness");
    const OrdSet d_ord = order_from_strict_pairs(w.domain.size(), w.base);
    if (!is_lax_object(x, d_ord, w.family) || !is_lax_morphism(x, LaxObject{d_ord, w.family}, f.target, w.domain))
      return rejected("object is not over (B, beta)");
    const LocalLattice lx(x);
    const LaxMorphism d{LaxObject{d_ord, w.family}, f.target, w.domain};
    return coequalizer_oracle(lx, pullback_laxcomma(lx, f, d).second) ? rejected("projection is a coequalizer")
                                                                      : confirmed();
  }
  if (c == condition::kMixedDescends || c == condition::kUngluable || c == condition::kNotFaithful ||
      c == condition::kNotFull) {
    const LocalLattice lx(x);
    if (c == condition::kMixedDescends) return replay_mixed(lx, f, w);
    if (c == condition::kUngluable) return replay_ungluable(lx, f, w);
    return replay_pair(lx, f, w);
  }
  return rejected("no replay for condition '" + c + "'");
}

}  // namespace ordescent
