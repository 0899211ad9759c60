// Tables of small preorders, built once on first use.

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "ordescent/ordset.hpp"

namespace ordescent {

namespace {

constexpr std::size_t kMaxCatalogSize = 4;

struct Catalog {
  std::array<std::vector<OrdSet>, kMaxCatalogSize + 1> labeled;
  std::array<std::vector<OrdSet>, kMaxCatalogSize + 1> classes;
};

std::vector<std::uint8_t> permuted(const OrdSet& x, const std::vector<Element>& perm) {
  const std::size_t n = x.size();
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i * n + j] = x.leq(perm[i], perm[j]);
  return rel;
}

Catalog build() {
  Catalog c;
  for (std::size_t n = 0; n <= kMaxCatalogSize; ++n) {
    std::vector<ElementPair> off;
    for (Element i = 0; i < n; ++i)
      for (Element j = 0; j < n; ++j)
        if (i != j) off.emplace_back(i, j);
    for (std::uint32_t bits = 0; bits < (1u << off.size()); ++bits) {
      std::vector<std::uint8_t> rel(n * n, 0);
      for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;
      for (std::size_t k = 0; k < off.size(); ++k)
        if (bits >> k & 1u) rel[off[k].first * n + off[k].second] = 1;
      bool transitive = true;
      for (std::size_t i = 0; i < n && transitive; ++i)
        for (std::size_t j = 0; j < n && transitive; ++j)
          for (std::size_t k = 0; k < n && transitive; ++k)
            if (rel[i * n + j] && rel[j * n + k] && !rel[i * n + k]) transitive = false;
      if (transitive) c.labeled[n].push_back(OrdSet::from_relation(n, std::move(rel)));
    }
    std::set<std::vector<std::uint8_t>> seen;
    for (const auto& x : c.labeled[n]) {
      std::vector<Element> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<std::uint8_t> best = x.relation();
      do {
        best = std::max(best, permuted(x, perm));
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (seen.insert(best).second) c.classes[n].push_back(OrdSet::from_relation(n, best));
    }
  }
  return c;
}

const Catalog& catalog() {
  static const Catalog c = build();
  return c;
}

void check_size(std::size_t size) {
  if (size > kMaxCatalogSize) {
    throw Error("preorder catalog supports sizes up to " + std::to_string(kMaxCatalogSize));
  }
}

}  // namespace

const std::vector<OrdSet>& all_preorders(std::size_t size) {
  check_size(size);
  return catalog().labeled[size];
}

const std::vector<OrdSet>& preorder_classes(std::size_t size) {
  check_size(size);
  return catalog().classes[size];
}

}  // namespace ordescent
