#include "ordescent/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "ordescent/replay.hpp"
#include "ordescent/report.hpp"

namespace ordescent {

namespace {

using Values = std::vector<Element>;

// Monotone maps src -> dst, optionally with v(i) constrained by `allowed`.
template <class Allowed, class Visit>
void for_each_map(const OrdSet& src, const OrdSet& dst, Allowed&& allowed, Visit&& visit) {
  const std::size_t n = src.size();
  Values m(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      visit(m);
      return;
    }
    for (Element y = 0; y < dst.size(); ++y) {
      if (!allowed(i, y)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = (!src.leq(j, i) || dst.leq(m[j], y)) && (!src.leq(i, j) || dst.leq(y, m[j]));
      if (!ok) continue;
      m[i] = y;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

constexpr auto kAny = [](std::size_t, Element) { return true; };

using Perm = std::vector<Element>;

struct Base {
  std::shared_ptr<const LocalLattice> x;
  std::vector<Perm> automorphisms;
};

struct Unit {
  std::size_t base = 0;
  const OrdSet* b = nullptr;
  Values beta;
  std::vector<std::pair<const Perm*, Perm>> stabilizer;  // (on X, on B)
};

std::vector<Base> bases(std::size_t max_x) {
  std::vector<Base> out;
  for (std::size_t n = 0; n <= max_x; ++n)
    for (const OrdSet& x : preorder_classes(n)) {
      if (!is_locally_complete(x)) continue;
      out.push_back({std::make_shared<const LocalLattice>(x), automorphisms(x)});
    }
  return out;
}

// Codomains (B, beta) up to Aut(X) x Aut(B), with the stabilizer of beta.
std::vector<Unit> units(const std::vector<Base>& all, std::size_t max_b) {
  std::vector<Unit> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const OrdSet& x = all[i].x->order();
    for (std::size_t nb = 0; nb <= max_b; ++nb)
      for (const OrdSet& b : preorder_classes(nb)) {
        const auto aut_b = automorphisms(b);
        for_each_map(b, x, kAny, [&](const Values& beta) {
          Unit u{i, &b, beta, {}};
          Values image(nb);
          for (const Perm& p : all[i].automorphisms)
            for (const Perm& t : aut_b) {
              for (Element e = 0; e < nb; ++e) image[t[e]] = p[beta[e]];
              if (image < beta) return;
              if (image == beta) u.stabilizer.emplace_back(&p, t);
            }
          out.push_back(std::move(u));
        });
      }
  }
  return out;
}

template <class Visit>
void for_each_in_unit(const Base& base, const Unit& unit, std::size_t max_a, Visit&& visit) {
  const OrdSet& x = base.x->order();
  const OrdSet& b = *unit.b;
  const LaxObject target{b, unit.beta};
  for (std::size_t na = 0; na <= max_a; ++na)
    for (const OrdSet& a : preorder_classes(na)) {
      const auto aut_a = automorphisms(a);
      for_each_map(a, x, kAny, [&](const Values& alpha) {
        auto lax = [&](std::size_t i, Element e) { return x.leq(alpha[i], unit.beta[e]); };
        for_each_map(a, b, lax, [&](const Values& f) {
          Values alpha2(na), f2(na);
          for (const auto& [p, t] : unit.stabilizer)
            for (const Perm& r : aut_a) {
              for (Element i = 0; i < na; ++i) {
                alpha2[r[i]] = (*p)[alpha[i]];
                f2[r[i]] = t[f[i]];
              }
              if (std::tie(alpha2, f2) < std::tie(alpha, f)) return;
            }
          visit(LaxMorphism{LaxObject{a, alpha}, target, f});
        });
      });
    }
}

// ---------------------------------------------------------------------------
// Checks

enum class Status { Holds, Fails, Precondition };

struct Outcome {
  Status status = Status::Holds;
  std::optional<Witness> witness;

  bool holds() const { return status == Status::Holds; }
  bool operator==(const Outcome& o) const { return status == o.status; }
};

template <class Fn>
Outcome outcome(Fn&& fn) {
  try {
    Verdict v = fn();
    return v ? Outcome{} : Outcome{Status::Fails, std::move(v.witness)};
  } catch (const PreconditionError& e) {
    return {Status::Precondition, e.witness()};
  }
}

std::string encode(const OrdSet& x, const LaxMorphism& f) {
  std::ostringstream out;
  auto order = [&](const OrdSet& o) {
    out << o.size() << ":";
    for (auto r : o.relation()) out << int(r);
    out << "|";
  };
  auto seq = [&](const Values& v) {
    for (Element e : v) out << e << ",";
    out << "|";
  };
  order(x);
  order(f.source.carrier);
  seq(f.source.valuation);
  order(f.target.carrier);
  seq(f.target.valuation);
  seq(f.map);
  return out.str();
}

std::uint64_t mix(std::uint64_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  return h ^ (h >> 33);
}

std::uint64_t hash_of(const std::string& s, std::uint64_t seed) {
  std::uint64_t h = mix(seed + 0x9e3779b97f4a7c15ULL);
  for (unsigned char c : s) h = mix(h ^ c);
  return h;
}

const std::vector<const char*>& invariant_names() {
  static const std::vector<const char*> names = {
      invariant::kOracleAgreement, invariant::kPairwiseSample, invariant::kStableRegularEpi,
      invariant::kImplications,    invariant::kComponentwise,  invariant::kLccShortcut,
      invariant::kReflection,      invariant::kFamLcc,         invariant::kFamDecomposition,
      invariant::kCoequalizer,     invariant::kCanonicalData,  invariant::kDiscreteCarriers,
      invariant::kReplay,          invariant::kRoundTrip,
  };
  return names;
}

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::pair<std::string, std::string>> offending;  // (encoding, dump)
};

struct UnitResult {
  std::map<std::string, Tally> tallies;
  std::size_t instances = 0;
  std::size_t effective = 0;
  std::size_t global_join_differs = 0;
  std::vector<std::string> global_join_examples;
  std::size_t discrete_es_differs = 0;
  std::size_t replayed = 0;
};

class InstanceChecker {
 public:
  InstanceChecker(const SweepOptions& options, const LocalLattice& x, const Unit& unit, UnitResult& out)
      : options_(options), x_(x), unit_(unit), out_(out) {}

  void run(const LaxMorphism& f) {
    f_ = &f;
    key_.clear();
    ++out_.instances;
    const FamMorphism fam = underlying_fam(f);

    std::map<Predicate, Outcome> whole;
    for (Predicate p : kAllPredicates) whole[p] = outcome([&] { return evaluate(p, x_, f, options_.cap); });
    for (const auto& [p, o] : whole) replay(o, x_.order(), f);

    // Componentwise routing.
    bool same = true;
    for (Predicate p : kAllPredicates) {
      const Outcome o = outcome([&] { return evaluate_componentwise(p, x_, f, options_.cap); });
      replay(o, x_.order(), f);
      same = same && o == whole[p];
    }
    expect(invariant::kComponentwise, same);

    const bool edm = whole[Predicate::EffectiveDescent].holds();
    if (edm) ++out_.effective;

    // Implications between the predicates.
    auto implies = [&](Predicate p, Predicate q) { return !whole[p].holds() || whole[q].holds(); };
    expect(invariant::kImplications,
           implies(Predicate::Cln, Predicate::Cj) && implies(Predicate::Cj, Predicate::EffectiveDescent) &&
               implies(Predicate::EffectiveDescent, Predicate::OrdEffectiveDescent) &&
               implies(Predicate::EffectiveDescent, Predicate::FamEffective) &&
               implies(Predicate::EffectiveDescent, Predicate::StableRegularEpi) &&
               implies(Predicate::StableRegularEpi, Predicate::RegularEpi) &&
               implies(Predicate::FamEffective, Predicate::FamDescent));

    // Stable regular epi, composite vs. the formula on the bare order.
    const Outcome direct = outcome([&] { return stable_regular_epi_direct(x_, f); });
    replay(direct, x_.order(), f);
    expect(invariant::kStableRegularEpi, direct == whole[Predicate::StableRegularEpi]);

    // Shortcut on locally cartesian closed X.
    const Outcome& lcc = whole[Predicate::EffectiveDescentLcc];
    expect(invariant::kLccShortcut, x_.cartesian_closed() ? lcc == whole[Predicate::EffectiveDescent]
                                                          : lcc.status == Status::Precondition);

    check_reflection(f, whole);
    check_fam(fam, whole);
    check_coequalizer(f, whole);
    check_canonical_data(f);

    // The literal reading of the gluing condition, flagged only.
    const Outcome literal = outcome([&] { return char_condition_3_global_join(x_, f, options_.cap); });
    const Outcome fiberwise = outcome([&] { return char_condition_3(x_, f, options_.cap); });
    if (!(literal == fiberwise)) {
      ++out_.global_join_differs;
      if (out_.global_join_examples.size() < options_.max_dumps) out_.global_join_examples.push_back(dump());
    }

    check_oracles(f, whole);
    check_discrete(f, fam, whole);

    if (sampled(17)) {
      const Instance inst{x_.order(), f};
      expect(invariant::kRoundTrip, parse_instance(dump_instance(inst)) == inst);
    }
  }

 private:
  const std::string& key() {
    if (key_.empty()) key_ = encode(x_.order(), *f_);
    return key_;
  }

  bool sampled(std::uint64_t salt) {
    return hash_of(key(), options_.seed + salt) % std::max<std::size_t>(options_.sample_every, 1) == 0;
  }

  std::string dump() { return dump_instance(Instance{x_.order(), *f_}); }

  void expect(const char* name, bool ok) {
    Tally& t = out_.tallies[name];
    ++t.checked;
    if (ok) return;
    ++t.failed;
    if (t.offending.size() < options_.max_dumps) t.offending.emplace_back(key(), dump());
  }

  void replay(const Outcome& o, const OrdSet& x, const LaxMorphism& f) {
    if (o.status != Status::Fails) return;
    ++out_.replayed;
    expect(invariant::kReplay, o.witness && replay_witness(x, f, *o.witness));
  }

  void replay(const OracleVerdict& v, const OrdSet& x, const LaxMorphism& f) {
    if (v.holds) return;
    ++out_.replayed;
    expect(invariant::kReplay, v.witness && replay_witness(x, f, *v.witness));
  }

  void check_reflection(const LaxMorphism& f, std::map<Predicate, Outcome>& whole) {
    const ReflectedBase r = reflect_base(x_, f);
    const bool posets = is_poset(x_.order()) && is_poset(f.source.carrier) && is_poset(f.target.carrier);
    bool same = true;
    for (Predicate p : kAllPredicates) {
      const Outcome o = outcome([&] { return evaluate(p, r.x, r.f, options_.cap); });
      replay(o, r.x.order(), r.f);
      same = same && o == whole[p];
      const Outcome pv = outcome([&] { return poset_variant(p, x_, f, options_.cap); });
      same = same && (posets ? pv == whole[p] : pv.status == Status::Precondition);
    }
    expect(invariant::kReflection, same);
  }

  void check_fam(const FamMorphism& fam, std::map<Predicate, Outcome>& whole) {
    const bool effective = whole[Predicate::FamEffective].holds();
    if (x_.cartesian_closed()) expect(invariant::kFamLcc, effective == whole[Predicate::FamDescent].holds());

    // Effective iff every fiber restriction is.
    bool fibers = true;
    for (std::size_t k = 0; k < fam.target.values.size(); ++k)
      fibers = fibers && fam_is_effective(x_, fam_fiber_restriction(fam, k), options_.cap);
    // Effective iff descent and every datum has a gluing found by search,
    // which is then the fiber join.
    bool glued = whole[Predicate::FamDescent].holds();
    bool joins = true;
    if (glued) {
      for_each_fam_descent_datum(
          x_, fam,
          [&](std::span<const Element> sigma) {
            for (std::size_t k = 0; k < fam.target.values.size() && glued; ++k) {
              const auto w = fam_gluing_search(x_, fam, sigma, k);
              if (!w) {
                glued = false;
                break;
              }
              std::vector<Element> fiber;
              for (std::size_t j = 0; j < sigma.size(); ++j)
                if (fam.mapping[j] == k) fiber.push_back(sigma[j]);
              joins = joins && x_.iso(*w, x_.join(fam.target.values[k], fiber));
            }
            return glued;
          },
          options_.cap);
    }
    expect(invariant::kFamDecomposition, fibers == effective && glued == effective && joins);
  }

  void check_coequalizer(const LaxMorphism& f, std::map<Predicate, Outcome>& whole) {
    const MonotoneMap carrier = underlying_ord(f);
    const OracleVerdict ord = coequalizer_oracle(carrier);
    const OracleVerdict lax = coequalizer_oracle(x_, f);
    replay(lax, x_.order(), f);
    const bool ord_repi = is_regular_epi_ord(carrier).holds;
    expect(invariant::kCoequalizer, ord.holds == ord_repi && lax.holds == whole[Predicate::RegularEpi].holds());
  }

  void check_canonical_data(const LaxMorphism& f) {
    bool ok = check_descent_datum(x_, f, canonical_descent_datum(x_, lax_identity(f.target), f)).holds;
    for (Element b = 0; b < f.target.size() && ok; ++b)
      for (Element w = 0; w < x_.size() && ok; ++w) {
        if (!x_.leq(w, f.target(b))) continue;
        const LaxMorphism point{LaxObject{OrdSet::discrete(1), {w}}, f.target, {b}};
        ok = check_descent_datum(x_, f, canonical_descent_datum(x_, point, f)).holds;
      }
    expect(invariant::kCanonicalData, ok);
  }

  const std::vector<LaxMorphism>& objects() {
    if (!objects_) objects_ = objects_over(x_, LaxObject{*unit_.b, unit_.beta}, options_.bound);
    return *objects_;
  }

  const std::vector<LaxMorphism>& small_objects() {
    if (!small_objects_) small_objects_ = objects_over(x_, LaxObject{*unit_.b, unit_.beta}, 1);
    return *small_objects_;
  }

  void check_oracles(const LaxMorphism& f, std::map<Predicate, Outcome>& whole) {
    const bool edm = whole[Predicate::EffectiveDescent].holds();
    const std::size_t n = options_.bound;
    // The obstruction is meaningful whenever its preconditions hold.
    if (whole[Predicate::OrdEffectiveDescent].holds() && whole[Predicate::FamEffective].holds()) {
      const OracleVerdict ob = obstruction_test(x_, f, n);
      replay(ob, x_.order(), f);
      expect(invariant::kOracleAgreement, ob.holds || !edm);
    }
    if (!edm) return;
    const OracleVerdict es = essential_surjectivity_check(x_, f, n, options_.cap);
    const OracleVerdict pc = pullback_coequalizer_check(x_, f, objects(), n);
    const OracleVerdict ff = full_faithfulness_check(x_, f, small_objects(), 1, options_.cap);
    for (const OracleVerdict* v : {&es, &pc, &ff}) replay(*v, x_.order(), f);
    expect(invariant::kOracleAgreement, es.holds && pc.holds && ff.holds);
    if (sampled(41)) {
      const OracleVerdict full = full_faithfulness_check(x_, f, objects(), n, options_.cap);
      replay(full, x_.order(), f);
      expect(invariant::kPairwiseSample, full.holds);
    }
  }

  // Discrete carriers: the lax comma category restricts to Fam(X).
  void check_discrete(const LaxMorphism& f, const FamMorphism& fam, std::map<Predicate, Outcome>& whole) {
    const std::size_t na = f.source.size();
    if (f.source.carrier != OrdSet::discrete(na) || f.target.carrier != OrdSet::discrete(f.target.size())) return;
    if (!is_surjective(underlying_ord(f)) || na > options_.bound) return;
    // Essential surjectivity alone does not see failures of full
    // faithfulness, so both halves are compared with effectiveness in Fam(X).
    const OracleVerdict es = essential_surjectivity_check(x_, f, na, options_.cap);
    const OracleVerdict pc = pullback_coequalizer_check(x_, f, objects(), options_.bound);
    bool ok = (es.holds && pc.holds) == whole[Predicate::FamEffective].holds();
    if (es.holds != whole[Predicate::FamEffective].holds()) ++out_.discrete_es_differs;

    // Data on discrete C with q bijective are the family descent data.
    std::set<Values> lax_data, fam_data;
    auto canonical = [&](Values v) {
      for (Element& e : v)
        for (Element z = 0; z < e; ++z)
          if (x_.iso(z, e)) {
            e = z;
            break;
          }
      return v;
    };
    for_each_descent_datum(
        x_, f, na,
        [&](const DescentDatum& d) {
          const LaxMorphism& q = d.over;
          if (q.source.size() != na || q.source.carrier != OrdSet::discrete(na)) return true;
          Values gamma(na);
          std::vector<bool> hit(na, false);
          for (Element c = 0; c < na; ++c) {
            if (hit[q(c)]) return true;
            hit[q(c)] = true;
            gamma[q(c)] = q.source(c);
          }
          ok = ok && lax_data.insert(canonical(gamma)).second;
          return true;
        },
        options_.cap);
    for (const auto& sigma : enumerate_fam_descent_data(x_, fam, options_.cap)) fam_data.insert(canonical(sigma));
    expect(invariant::kDiscreteCarriers, ok && lax_data == fam_data);
  }

  const SweepOptions& options_;
  const LocalLattice& x_;
  const Unit& unit_;
  UnitResult& out_;
  const LaxMorphism* f_ = nullptr;
  std::string key_;
  std::optional<std::vector<LaxMorphism>> objects_;
  std::optional<std::vector<LaxMorphism>> small_objects_;
};

}  // namespace

void for_each_instance(std::size_t max_x, std::size_t max_a, std::size_t max_b,
                       const std::function<void(const LocalLattice&, const LaxMorphism&)>& visit) {
  const auto all = bases(max_x);
  for (const Unit& u : units(all, max_b))
    for_each_in_unit(all[u.base], u, max_a, [&](const LaxMorphism& f) { visit(*all[u.base].x, f); });
}

bool SweepReport::passed() const {
  if (aborted) return false;
  return std::all_of(invariants.begin(), invariants.end(), [](const InvariantResult& r) { return r.passed(); });
}

const InvariantResult* SweepReport::find(const std::string& name) const {
  for (const auto& r : invariants)
    if (r.name == name) return &r;
  return nullptr;
}

SweepReport run_sweep(const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.options = options;
  const auto all = bases(options.max_x);
  const auto work = units(all, options.max_b);
  report.orders = all.size();

  std::vector<UnitResult> results(work.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex abort_mutex;
  auto worker = [&] {
    for (std::size_t i; !stop && (i = next++) < work.size();) {
      const Unit& u = work[i];
      const LocalLattice& x = *all[u.base].x;
      InstanceChecker checker(options, x, u, results[i]);
      try {
        for_each_in_unit(all[u.base], u, options.max_a, [&](const LaxMorphism& f) {
          if (!stop) checker.run(f);
        });
      } catch (const CapExceeded& e) {
        std::lock_guard lock(abort_mutex);
        stop = true;
        report.aborted = true;
        report.abort_reason = e.what();
      }
    }
  };
  std::size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(work.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::map<std::string, Tally> merged;
  for (const char* name : invariant_names()) merged[name];
  for (const UnitResult& r : results) {
    report.instances += r.instances;
    report.effective += r.effective;
    report.global_join_differs += r.global_join_differs;
    report.discrete_es_differs += r.discrete_es_differs;
    report.replayed += r.replayed;
    for (const auto& e : r.global_join_examples) report.global_join_examples.push_back(e);
    for (const auto& [name, t] : r.tallies) {
      Tally& m = merged[name];
      m.checked += t.checked;
      m.failed += t.failed;
      m.offending.insert(m.offending.end(), t.offending.begin(), t.offending.end());
    }
  }
  std::sort(report.global_join_examples.begin(), report.global_join_examples.end());
  if (report.global_join_examples.size() > options.max_dumps) report.global_join_examples.resize(options.max_dumps);
  for (const char* name : invariant_names()) {
    Tally& t = merged[name];
    std::sort(t.offending.begin(), t.offending.end());
    InvariantResult r{name, t.checked, t.failed, {}};
    for (std::size_t i = 0; i < t.offending.size() && i < options.max_dumps; ++i)
      r.offending.push_back(t.offending[i].second);
    report.invariants.push_back(std::move(r));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string format_report(const SweepReport& r) {
  std::ostringstream out;
  const auto& o = r.options;
  out << "sweep |X|<=" << o.max_x << " |A|<=" << o.max_a << " |B|<=" << o.max_b << " N=" << o.bound << "\n";
  out << "orders " << r.orders << ", instances " << r.instances << ", effective for descent " << r.effective
      << ", witnesses replayed " << r.replayed << "\n";
  if (r.aborted) out << "ABORTED: " << r.abort_reason << "\n";
  for (const auto& inv : r.invariants) {
    char line[128];
    std::snprintf(line, sizeof line, "  %-28s %-4s %10zu checked %6zu failed\n", inv.name.c_str(),
                  inv.passed() ? "pass" : "FAIL", inv.checked, inv.failed);
    out << line;
  }
  out << "gluing over the whole domain differs from the fiberwise reading on " << r.global_join_differs
      << " instances\n";
  out << "on discrete carriers, essential surjectivity alone differs from effectiveness in Fam(X) on "
      << r.discrete_es_differs << " instances\n";
  for (const auto& inv : r.invariants)
    for (const auto& dump : inv.offending) out << "# offending instance (" << inv.name << ")\n" << dump;
  out << (r.passed() ? "all invariants pass" : "INVARIANT FAILURES") << " in " << r.seconds << " s\n";
  return out.str();
}

std::string format_records(const SweepReport& r) {
  std::ostringstream out;
  out << record({{"kind", "sweep"},
                 {"max_x", std::to_string(r.options.max_x)},
                 {"max_a", std::to_string(r.options.max_a)},
                 {"max_b", std::to_string(r.options.max_b)},
                 {"bound", std::to_string(r.options.bound)},
                 {"instances", std::to_string(r.instances)},
                 {"effective", std::to_string(r.effective)},
                 {"global_join_differs", std::to_string(r.global_join_differs)},
                 {"discrete_es_differs", std::to_string(r.discrete_es_differs)},
                 {"aborted", r.aborted ? "true" : "false"},
                 {"seconds", std::to_string(r.seconds)}})
      << "\n";
  for (const auto& inv : r.invariants)
    out << record({{"kind", "invariant"},
                   {"name", inv.name},
                   {"status", inv.passed() ? "pass" : "fail"},
                   {"checked", std::to_string(inv.checked)},
                   {"failed", std::to_string(inv.failed)}})
        << "\n";
  return out.str();
}

}  // namespace ordescent
