#include "ordescent/fixtures.hpp"

namespace ordescent::fixtures {

OrdSet two_chain() { return OrdSet::chain(2); }

OrdSet diamond() {
  const ElementPair pairs[] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return transitive_reflexive_closure(pairs, 4);
}

OrdSet n5() {
  const ElementPair pairs[] = {{0, 1}, {0, 2}, {1, 3}, {3, 4}, {2, 4}};
  return transitive_reflexive_closure(pairs, 5);
}

std::vector<std::string> n5_names() { return {"bot", "u", "v", "w", "top"}; }
std::vector<std::string> diamond_names() { return {"bot", "p", "q", "top"}; }

Instance sre() {
  const OrdSet x = two_chain();
  const ElementPair a_pairs[] = {{1, 2}};
  LaxObject a{transitive_reflexive_closure(a_pairs, 3), {1, 0, 1}};
  LaxObject b{OrdSet::chain(2), {1, 1}};
  return {x, make_lax_morphism(x, std::move(a), std::move(b), {0, 0, 1})};
}

Instance cond3() {
  const OrdSet x = n5();
  LaxObject a{OrdSet::discrete(2), {3, 2}};
  LaxObject b{OrdSet::discrete(1), {4}};
  return {x, make_lax_morphism(x, std::move(a), std::move(b), {0, 0})};
}

Instance js() {
  const OrdSet x = two_chain();
  const ElementPair a_pairs[] = {{0, 1}, {2, 3}, {0, 3}};
  LaxObject a{transitive_reflexive_closure(a_pairs, 4), {1, 1, 1, 1}};
  LaxObject b{OrdSet::chain(3), {1, 1, 1}};
  return {x, make_lax_morphism(x, std::move(a), std::move(b), {0, 1, 1, 2})};
}

FamFixture fam_n5() {
  const OrdSet x = n5();
  return {x, make_fam_morphism(x, {{3, 2}}, {{4}}, {0, 0})};
}

FamFixture fam_diamond() {
  const OrdSet x = diamond();
  return {x, make_fam_morphism(x, {{1, 2}}, {{3}}, {0, 0})};
}

Instance identity_of(const Instance& inst) { return {inst.x, lax_identity(inst.f.source)}; }

}  // namespace ordescent::fixtures
