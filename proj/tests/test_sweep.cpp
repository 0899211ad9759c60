#include <doctest.h>

#include <algorithm>
#include <set>

#include "ordescent/sweep.hpp"

using namespace ordescent;

namespace {

using Key = std::vector<std::size_t>;

std::vector<std::vector<Element>> perms(std::size_t n) {
  std::vector<Element> p(n);
  for (Element i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<Element>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool monotone(const OrdSet& s, const OrdSet& t, const std::vector<Element>& m) {
  for (Element i = 0; i < s.size(); ++i)
    for (Element j = 0; j < s.size(); ++j)
      if (s.leq(i, j) && !t.leq(m[i], m[j])) return false;
  return true;
}

std::vector<std::vector<Element>> all_maps(std::size_t n, std::size_t m) {
  std::vector<std::vector<Element>> out;
  if (n > 0 && m == 0) return out;
  std::vector<Element> v(n, 0);
  for (;;) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == m) v[i++] = 0;
    if (i == n) return out;
  }
}

// Smallest encoding of the instance over all relabelings of X, A and B.
Key canonical(const OrdSet& x, const OrdSet& a, const OrdSet& b, const std::vector<Element>& alpha,
              const std::vector<Element>& beta, const std::vector<Element>& f) {
  Key best;
  for (const auto& px : perms(x.size()))
    for (const auto& pa : perms(a.size()))
      for (const auto& pb : perms(b.size())) {
        Key k{x.size(), a.size(), b.size()};
        auto rel = [&](const OrdSet& o, const std::vector<Element>& p) {
          std::vector<std::size_t> r(o.size() * o.size());
          for (Element i = 0; i < o.size(); ++i)
            for (Element j = 0; j < o.size(); ++j) r[p[i] * o.size() + p[j]] = o.leq(i, j);
          k.insert(k.end(), r.begin(), r.end());
        };
        rel(x, px);
        rel(a, pa);
        rel(b, pb);
        std::vector<std::size_t> al(a.size()), fa(a.size()), be(b.size());
        for (Element i = 0; i < a.size(); ++i) {
          al[pa[i]] = px[alpha[i]];
          fa[pa[i]] = pb[f[i]];
        }
        for (Element i = 0; i < b.size(); ++i) be[pb[i]] = px[beta[i]];
        k.insert(k.end(), al.begin(), al.end());
        k.insert(k.end(), be.begin(), be.end());
        k.insert(k.end(), fa.begin(), fa.end());
        if (best.empty() || k < best) best = k;
      }
  return best;
}

std::size_t brute_force_classes(std::size_t max_x, std::size_t max_a, std::size_t max_b) {
  std::set<Key> seen;
  for (std::size_t nx = 0; nx <= max_x; ++nx)
    for (const OrdSet& x : all_preorders(nx)) {
      if (!is_locally_complete(x)) continue;
      for (std::size_t nb = 0; nb <= max_b; ++nb)
        for (const OrdSet& b : all_preorders(nb))
          for (const auto& beta : all_maps(nb, nx)) {
            if (!monotone(b, x, beta)) continue;
            for (std::size_t na = 0; na <= max_a; ++na)
              for (const OrdSet& a : all_preorders(na))
                for (const auto& alpha : all_maps(na, nx)) {
                  if (!monotone(a, x, alpha)) continue;
                  for (const auto& f : all_maps(na, nb)) {
                    if (!monotone(a, b, f)) continue;
                    bool lax = true;
                    for (Element i = 0; i < na; ++i) lax = lax && x.leq(alpha[i], beta[f[i]]);
                    if (lax) seen.insert(canonical(x, a, b, alpha, beta, f));
                  }
                }
          }
    }
  return seen.size();
}

}  // namespace

TEST_CASE("instance enumeration visits one instance per isomorphism class") {
  for (auto [mx, ma, mb] : {std::tuple{2, 2, 2}, std::tuple{3, 2, 2}, std::tuple{2, 3, 1}}) {
    std::size_t visited = 0;
    std::set<Key> keys;
    for_each_instance(mx, ma, mb, [&](const LocalLattice& x, const LaxMorphism& f) {
      ++visited;
      keys.insert(canonical(x.order(), f.source.carrier, f.target.carrier, f.source.valuation, f.target.valuation,
                            f.map));
    });
    CHECK(keys.size() == visited);
    CHECK(visited == brute_force_classes(mx, ma, mb));
  }
}

TEST_CASE("small sweep passes every invariant") {
  SweepOptions o;
  o.max_x = 2;
  o.max_a = 2;
  o.max_b = 2;
  o.bound = 2;
  o.sample_every = 5;
  const SweepReport r = run_sweep(o);
  CHECK_FALSE(r.aborted);
  CHECK(r.passed());
  CHECK(r.instances > 0);
  for (const InvariantResult& inv : r.invariants) CHECK_MESSAGE(inv.passed(), inv.name);
  CHECK(r.find(invariant::kOracleAgreement)->checked > 0);
  CHECK(r.find(invariant::kRoundTrip)->checked > 0);
  CHECK(format_report(r).find("all invariants pass") != std::string::npos);
  CHECK(format_records(r).find("kind=invariant") != std::string::npos);
}

TEST_CASE("the report does not depend on the number of threads") {
  SweepOptions o;
  o.max_x = 2;
  o.max_a = 2;
  o.max_b = 2;
  o.bound = 1;
  o.threads = 1;
  const SweepReport one = run_sweep(o);
  o.threads = 3;
  const SweepReport three = run_sweep(o);
  CHECK(one.instances == three.instances);
  CHECK(one.effective == three.effective);
  CHECK(one.replayed == three.replayed);
  for (std::size_t i = 0; i < one.invariants.size(); ++i) CHECK(one.invariants[i].checked == three.invariants[i].checked);
}

TEST_CASE("trivial sweep") {
  SweepOptions o;
  o.max_x = 2;
  o.max_a = 1;
  o.max_b = 1;
  o.bound = 1;
  const SweepReport r = run_sweep(o);
  CHECK(r.passed());
  CHECK(r.seconds < 1.0);
}

TEST_CASE("an exceeded cap aborts the sweep cleanly") {
  SweepOptions o;
  o.max_x = 2;
  o.max_a = 2;
  o.max_b = 2;
  o.bound = 2;
  o.cap = 2;
  const SweepReport r = run_sweep(o);
  CHECK(r.aborted);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.abort_reason.empty());
}
