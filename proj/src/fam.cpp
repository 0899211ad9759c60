#include "ordescent/fam.hpp"

#include <string>

namespace ordescent {

namespace {

void check_family(const OrdSet& x, const FamObject& obj, const char* which) {
  for (Element v : obj.values)
    if (!x.contains(v)) {
      throw IndexError(std::string(which) + " family value " + std::to_string(v) + " outside X");
    }
}

std::vector<std::vector<std::size_t>> fibers(const FamMorphism& f) {
  std::vector<std::vector<std::size_t>> out(f.target.size());
  for (std::size_t j = 0; j < f.mapping.size(); ++j) out[f.mapping[j]].push_back(j);
  return out;
}

std::size_t checked_product(const LocalLattice& x, const FamMorphism& f, std::size_t cap) {
  std::size_t total = 1;
  for (Element a : f.source.values) {
    std::size_t below = 0;
    for (Element y = 0; y < x.size(); ++y) below += x.leq(y, a);
    if (below != 0 && total > cap / below) {
      throw CapExceeded("descent-data enumeration exceeds the cap of " + std::to_string(cap) + " candidates");
    }
    total *= below;
  }
  return total;
}

}  // namespace

Verdict is_fam_morphism(const OrdSet& x, const FamObject& source, const FamObject& target,
                        std::span<const std::size_t> mapping) {
  check_family(x, source, "source");
  check_family(x, target, "target");
  if (mapping.size() != source.size()) throw IndexError("index map length differs from the source family");
  for (std::size_t j = 0; j < mapping.size(); ++j) {
    if (mapping[j] >= target.size()) throw IndexError("index " + std::to_string(j) + " maps outside the target");
  }
  for (std::size_t j = 0; j < mapping.size(); ++j)
    if (!x.leq(source.values[j], target.values[mapping[j]]))
      return Verdict::fail({condition::kFamInequality, {j}, {mapping[j]}, {}, {}});
  return Verdict::pass();
}

FamMorphism make_fam_morphism(const OrdSet& x, FamObject source, FamObject target,
                              std::vector<std::size_t> mapping) {
  if (auto v = is_fam_morphism(x, source, target, mapping); !v) {
    throw ValidationError("not a morphism of families", *v.witness);
  }
  return {std::move(source), std::move(target), std::move(mapping)};
}

FamMorphism fam_identity(const FamObject& object) {
  std::vector<std::size_t> id(object.size());
  for (std::size_t j = 0; j < id.size(); ++j) id[j] = j;
  return {object, object, std::move(id)};
}

Verdict fam_is_descent(const LocalLattice& x, const FamMorphism& f) {
  const auto fib = fibers(f);
  std::vector<Element> parts;
  for (std::size_t k = 0; k < f.target.size(); ++k) {
    const Element top = f.target.values[k];
    for (Element w = 0; w < x.size(); ++w) {
      if (!x.leq(w, top)) continue;
      parts.clear();
      for (std::size_t j : fib[k]) parts.push_back(x.meet(top, w, f.source.values[j]));
      if (!x.iso(w, x.join(top, parts))) return Verdict::fail({condition::kFamDescent, {}, {k}, {w}, {}});
    }
  }
  return Verdict::pass();
}

bool fam_is_compatible(const LocalLattice& x, const FamMorphism& f, std::span<const Element> sigma) {
  if (sigma.size() != f.source.size()) return false;
  for (std::size_t j = 0; j < sigma.size(); ++j)
    if (sigma[j] >= x.size() || !x.leq(sigma[j], f.source.values[j])) return false;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j) {
      if (f.mapping[i] != f.mapping[j]) continue;
      const Element top = f.target.values[f.mapping[i]];
      if (!x.iso(x.meet(top, sigma[j], f.source.values[i]), x.meet(top, f.source.values[j], sigma[i]))) return false;
    }
  return true;
}

void for_each_fam_descent_datum(const LocalLattice& x, const FamMorphism& f,
                                const std::function<bool(std::span<const Element>)>& visit, std::size_t cap) {
  checked_product(x, f, cap);
  const std::size_t n = f.source.size();
  std::vector<std::vector<Element>> choices(n);
  for (std::size_t j = 0; j < n; ++j)
    for (Element y = 0; y < x.size(); ++y)
      if (x.leq(y, f.source.values[j])) choices[j].push_back(y);

  std::vector<Element> sigma(n);
  bool stop = false;
  // Depth-first in lexicographic order; prunes on compatibility with the
  // already-assigned indices of the same fiber.
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (stop) return;
    if (j == n) {
      stop = !visit(sigma);
      return;
    }
    const Element top = f.target.values[f.mapping[j]];
    for (Element s : choices[j]) {
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i) {
        if (f.mapping[i] != f.mapping[j]) continue;
        ok = x.iso(x.meet(top, s, f.source.values[i]), x.meet(top, f.source.values[j], sigma[i]));
      }
      if (!ok) continue;
      sigma[j] = s;
      self(self, j + 1);
      if (stop) return;
    }
  };
  rec(rec, 0);
}

std::vector<std::vector<Element>> enumerate_fam_descent_data(const LocalLattice& x, const FamMorphism& f,
                                                             std::size_t cap) {
  std::vector<std::vector<Element>> out;
  for_each_fam_descent_datum(
      x, f,
      [&](std::span<const Element> sigma) {
        out.emplace_back(sigma.begin(), sigma.end());
        return true;
      },
      cap);
  return out;
}

Verdict fam_gluing_condition(const LocalLattice& x, const FamMorphism& f, std::size_t cap) {
  const auto fib = fibers(f);
  Verdict result = Verdict::pass();
  std::vector<Element> parts;
  for_each_fam_descent_datum(
      x, f,
      [&](std::span<const Element> sigma) {
        for (std::size_t k = 0; k < fib.size(); ++k) {
          const Element top = f.target.values[k];
          parts.clear();
          for (std::size_t i : fib[k]) parts.push_back(sigma[i]);
          const Element glued = x.join(top, parts);
          for (std::size_t j : fib[k]) {
            if (!x.iso(x.meet(top, f.source.values[j], glued), sigma[j])) {
              result = Verdict::fail(
                  {condition::kFamGluing, {j}, {k}, {}, std::vector<Element>(sigma.begin(), sigma.end())});
              return false;
            }
          }
        }
        return true;
      },
      cap);
  return result;
}

Verdict fam_is_effective(const LocalLattice& x, const FamMorphism& f, std::size_t cap) {
  if (auto d = fam_is_descent(x, f); !d) return d;
  return fam_gluing_condition(x, f, cap);
}

Verdict fam_is_effective_lcc(const LocalLattice& x, const FamMorphism& f) {
  if (const auto& ccc = x.cartesian_closed(); !ccc) {
    throw PreconditionError("valuation order is not locally cartesian closed (distributivity fails)", ccc.witness);
  }
  return fam_is_descent(x, f);
}

std::optional<Element> fam_gluing_search(const LocalLattice& x, const FamMorphism& f, std::span<const Element> sigma,
                                         std::size_t k) {
  if (k >= f.target.size()) throw IndexError("fam_gluing_search: fiber index out of range");
  if (!fam_is_compatible(x, f, sigma)) {
    throw ValidationError("family is not a descent datum",
                          Witness{condition::kFamGluing, {}, {k}, {}, {sigma.begin(), sigma.end()}});
  }
  const Element top = f.target.values[k];
  for (Element w = 0; w < x.size(); ++w) {
    if (!x.leq(w, top)) continue;
    bool ok = true;
    for (std::size_t j = 0; j < f.source.size() && ok; ++j)
      if (f.mapping[j] == k) ok = x.iso(x.meet(top, w, f.source.values[j]), sigma[j]);
    if (ok) return w;
  }
  return std::nullopt;
}

FamMorphism fam_fiber_restriction(const FamMorphism& f, std::size_t k, std::vector<std::size_t>* indices) {
  FamMorphism out;
  out.target.values = {f.target.values.at(k)};
  if (indices) indices->clear();
  for (std::size_t j = 0; j < f.source.size(); ++j)
    if (f.mapping[j] == k) {
      out.source.values.push_back(f.source.values[j]);
      out.mapping.push_back(0);
      if (indices) indices->push_back(j);
    }
  return out;
}

}  // namespace ordescent
