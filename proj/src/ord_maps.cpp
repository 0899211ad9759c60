#include "ordescent/ord_maps.hpp"

#include <string>

namespace ordescent {

MonotoneMap::MonotoneMap(OrdSet source, OrdSet target, std::vector<Element> mapping)
    : source_(std::move(source)), target_(std::move(target)), mapping_(std::move(mapping)) {
  if (auto v = is_monotone(source_, target_, mapping_); !v) {
    throw ValidationError("map is not monotone", *v.witness);
  }
}

MonotoneMap MonotoneMap::identity(const OrdSet& x) {
  std::vector<Element> id(x.size());
  for (Element i = 0; i < x.size(); ++i) id[i] = i;
  return MonotoneMap(x, x, std::move(id));
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (!(f.target() == g.source())) throw Error("compose: target of f differs from source of g");
  std::vector<Element> m(f.source().size());
  for (Element a = 0; a < m.size(); ++a) m[a] = g(f(a));
  return MonotoneMap(f.source(), g.target(), std::move(m));
}

Verdict is_monotone(const OrdSet& source, const OrdSet& target, std::span<const Element> mapping) {
  if (mapping.size() != source.size()) {
    throw IndexError("map has " + std::to_string(mapping.size()) + " entries for a source of size " +
                     std::to_string(source.size()));
  }
  for (Element a = 0; a < mapping.size(); ++a)
    if (!target.contains(mapping[a])) {
      throw IndexError("image of " + std::to_string(a) + " is " + std::to_string(mapping[a]) +
                       ", outside a target of size " + std::to_string(target.size()));
    }
  for (Element i = 0; i < source.size(); ++i)
    for (Element j = 0; j < source.size(); ++j)
      if (source.leq(i, j) && !target.leq(mapping[i], mapping[j]))
        return Verdict::fail({condition::kMonotone, {i, j}, {}, {}, {}});
  return Verdict::pass();
}

OrdPullback pullback_ord(const MonotoneMap& f, const MonotoneMap& g) {
  if (!(f.target() == g.target())) throw Error("pullback_ord: maps have different codomains");
  OrdPullback out;
  for (Element a = 0; a < f.source().size(); ++a)
    for (Element c = 0; c < g.source().size(); ++c)
      if (f(a) == g(c)) out.pairs.emplace_back(a, c);
  const std::size_t n = out.pairs.size();
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rel[i * n + j] = f.source().leq(out.pairs[i].first, out.pairs[j].first) &&
                       g.source().leq(out.pairs[i].second, out.pairs[j].second);
  out.object = OrdSet::from_relation(n, std::move(rel));
  std::vector<Element> p1(n), p2(n);
  for (std::size_t i = 0; i < n; ++i) {
    p1[i] = out.pairs[i].first;
    p2[i] = out.pairs[i].second;
  }
  out.first = MonotoneMap(out.object, f.source(), std::move(p1));
  out.second = MonotoneMap(out.object, g.source(), std::move(p2));
  return out;
}

Verdict is_surjective(const OrdSet& source, const OrdSet& target, std::span<const Element> mapping) {
  std::vector<bool> hit(target.size(), false);
  for (Element a = 0; a < source.size(); ++a) hit[mapping[a]] = true;
  for (Element b = 0; b < target.size(); ++b)
    if (!hit[b]) return Verdict::fail({condition::kSurjective, {}, {b}, {}, {}});
  return Verdict::pass();
}

Verdict is_descent_ord(const OrdSet& source, const OrdSet& target, std::span<const Element> mapping) {
  const std::size_t na = source.size();
  for (Element b0 = 0; b0 < target.size(); ++b0)
    for (Element b1 = 0; b1 < target.size(); ++b1) {
      if (!target.leq(b0, b1)) continue;
      bool lifted = false;
      for (Element a0 = 0; a0 < na && !lifted; ++a0) {
        if (mapping[a0] != b0) continue;
        for (Element a1 = 0; a1 < na && !lifted; ++a1)
          lifted = mapping[a1] == b1 && source.leq(a0, a1);
      }
      if (!lifted) return Verdict::fail({condition::kPairLifting, {}, {b0, b1}, {}, {}});
    }
  return Verdict::pass();
}

Verdict is_effective_descent_ord(const OrdSet& source, const OrdSet& target,
                                 std::span<const Element> mapping) {
  const std::size_t na = source.size();
  const std::size_t nb = target.size();
  for (Element b0 = 0; b0 < nb; ++b0)
    for (Element b1 = 0; b1 < nb; ++b1) {
      if (!target.leq(b0, b1)) continue;
      for (Element b2 = 0; b2 < nb; ++b2) {
        if (!target.leq(b1, b2)) continue;
        bool lifted = false;
        for (Element a1 = 0; a1 < na && !lifted; ++a1) {
          if (mapping[a1] != b1) continue;
          bool below = false, above = false;
          for (Element a = 0; a < na; ++a) {
            below = below || (mapping[a] == b0 && source.leq(a, a1));
            above = above || (mapping[a] == b2 && source.leq(a1, a));
          }
          lifted = below && above;
        }
        if (!lifted) return Verdict::fail({condition::kTripleLifting, {}, {b0, b1, b2}, {}, {}});
      }
    }
  return Verdict::pass();
}

Verdict is_regular_epi_ord(const OrdSet& source, const OrdSet& target, std::span<const Element> mapping) {
  if (auto s = is_surjective(source, target, mapping); !s) return s;
  std::vector<ElementPair> image;
  for (const auto& [a, a2] : source.strict_pairs()) image.emplace_back(mapping[a], mapping[a2]);
  const OrdSet generated = transitive_reflexive_closure(image, target.size());
  for (Element b0 = 0; b0 < target.size(); ++b0)
    for (Element b1 = 0; b1 < target.size(); ++b1)
      if (target.leq(b0, b1) != generated.leq(b0, b1))
        return Verdict::fail({condition::kOrderGenerated, {}, {b0, b1}, {}, {}});
  return Verdict::pass();
}

}  // namespace ordescent
