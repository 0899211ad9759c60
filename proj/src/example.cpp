#include "ordescent/example.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "ordescent/descent_check.hpp"
#include "ordescent/fam.hpp"
#include "ordescent/fixtures.hpp"
#include "ordescent/interval.hpp"
#include "ordescent/replay.hpp"
#include "ordescent/report.hpp"

namespace ordescent {

namespace {

std::string yes_no(bool b) { return b ? "YES" : "NO"; }
std::string mark(bool b) { return b ? "✓" : "✗"; }

std::string family_text(const Witness& w, const ElementNames& names) {
  std::string s = "σ=(";
  for (std::size_t i = 0; i < w.family.size(); ++i)
    s += (i ? "," : "") + (w.family[i] < names.size() ? names[w.family[i]] : std::to_string(w.family[i]));
  return s + ")";
}

ExampleTable interval_example(bool second) {
  const interval::ExampleReport r = second ? interval::example_II_verdict() : interval::example_I_verdict();
  ExampleTable t;
  t.name = second ? "interval-II" : "interval-I";
  t.details = r.lines;
  t.rows.push_back({"effective descent in Ord", "YES", yes_no(r.ord_effective_descent)});
  if (second) {
    t.rows.push_back({"stable regular epi", "YES", yes_no(r.stable_regular_epi)});
    t.rows.push_back({"effective descent", "NO", yes_no(r.effective_descent)});
    const std::string witness = "α(x,0)=" + interval::to_string(r.witness_join) +
                                "<x at x=" + interval::to_string(r.witness_level);
    t.rows.push_back({"witness", "α(x,0)=0<x at x=1/2", witness});
    t.summary = "stable regular epi: " + yes_no(r.stable_regular_epi) +
                "; effective descent: " + yes_no(r.effective_descent) + "; witness " + witness;
  } else {
    t.rows.push_back({"effective descent", "YES", yes_no(r.effective_descent)});
    t.summary = "effective descent: " + yes_no(r.effective_descent) + " (" + std::to_string(r.samples) +
                " sampled rationals, " + std::to_string(r.checks) + " exact checks)";
  }
  return t;
}

ExampleTable fixture_example(const std::string& name, const Instance& inst, bool c1, bool c2, bool c3,
                             const ElementNames& names) {
  const LocalLattice x(inst.x);
  const Characterization c = characterize(x, inst.f);
  ExampleTable t;
  t.name = name;
  const Verdict* conditions[] = {&c.condition1, &c.condition2, &c.condition3};
  const bool expected[] = {c1, c2, c3};
  for (int i = 0; i < 3; ++i) {
    const std::string label = "condition (" + std::to_string(i + 1) + ")";
    t.rows.push_back({label, mark(expected[i]), mark(conditions[i]->holds)});
    t.summary += label.substr(10) + mark(conditions[i]->holds);
    if (!conditions[i]->holds) {
      const Witness& w = *conditions[i]->witness;
      t.details.push_back(label + " witness " + describe(w, names) + ", replay " +
                          (replay_witness(inst.x, inst.f, w) ? "confirms" : "REJECTS"));
    }
  }
  t.rows.push_back({"effective descent", yes_no(c1 && c2 && c3), yes_no(c.holds())});
  return t;
}

ExampleTable sre_example() {
  const Instance inst = fixtures::sre();
  ExampleTable t = fixture_example("sre-fixture", inst, true, false, true, {});
  const LocalLattice x(inst.x);
  t.rows.insert(t.rows.begin(),
                {"stable regular epi", "YES", yes_no(is_stable_regular_epi_lax(x, inst.f).holds)});
  const Verdict c2 = char_condition_2(x, inst.f);
  t.rows.push_back({"witness", "(b0,b1,w=1)", c2.witness ? describe(*c2.witness) : "none"});
  return t;
}

ExampleTable fam_example() {
  const fixtures::FamFixture n5 = fixtures::fam_n5();
  const fixtures::FamFixture diamond = fixtures::fam_diamond();
  const LocalLattice x(n5.x);
  const LocalLattice d(diamond.x);
  const Verdict descent = fam_is_descent(x, n5.f);
  const Verdict effective = fam_is_effective(x, n5.f);
  ExampleTable t;
  t.name = "fam-n5";
  t.rows.push_back({"N5: descent", "YES", yes_no(descent.holds)});
  t.rows.push_back({"N5: effective", "NO", yes_no(effective.holds)});
  const std::string witness = effective.witness ? family_text(*effective.witness, fixtures::n5_names()) : "none";
  t.rows.push_back({"N5: witness", "σ=(u,v)", witness});
  t.rows.push_back({"diamond: effective", "YES", yes_no(fam_is_effective(d, diamond.f).holds)});
  if (effective.witness) {
    t.details.push_back("N5 gluing fails at " + describe(*effective.witness, fixtures::n5_names()) + ", replay " +
                        (replay_fam_witness(n5.x, n5.f, *effective.witness) ? "confirms" : "REJECTS"));
  }
  t.summary = "descent: " + yes_no(descent.holds) + "; effective: " + yes_no(effective.holds) + "; witness " + witness;
  return t;
}

}  // namespace

bool ExampleTable::passed() const {
  for (const ExampleRow& r : rows)
    if (!r.matches()) return false;
  for (const std::string& d : details)
    if (d.find("REJECTS") != std::string::npos) return false;
  return true;
}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = {"interval-I",    "interval-II", "sre-fixture",
                                                 "cond3-fixture", "js-fixture",  "fam-n5"};
  return names;
}

ExampleTable run_example(const std::string& name) {
  const auto t0 = std::chrono::steady_clock::now();
  ExampleTable t;
  if (name == "interval-I") {
    t = interval_example(false);
  } else if (name == "interval-II") {
    t = interval_example(true);
  } else if (name == "sre-fixture") {
    t = sre_example();
  } else if (name == "cond3-fixture") {
    t = fixture_example(name, fixtures::cond3(), true, true, false, fixtures::n5_names());
  } else if (name == "js-fixture") {
    t = fixture_example(name, fixtures::js(), false, true, true, {});
  } else if (name == "fam-n5") {
    t = fam_example();
  } else {
    throw std::invalid_argument("unknown example '" + name + "'");
  }
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return t;
}

std::string format_example(const ExampleTable& table) {
  // Display width in code points, so the UTF-8 marks line up.
  auto width = [](const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
  };
  std::size_t label = 5, expected = 8;
  for (const ExampleRow& r : table.rows) {
    label = std::max(label, width(r.label));
    expected = std::max(expected, width(r.expected));
  }
  auto pad = [&](const std::string& s, std::size_t w) { return s + std::string(w > width(s) ? w - width(s) : 0, ' '); };
  std::string out = table.name + "\n";
  out += "  " + pad("check", label) + "  " + pad("expected", expected) + "  computed\n";
  for (const ExampleRow& r : table.rows)
    out += "  " + pad(r.label, label) + "  " + pad(r.expected, expected) + "  " + r.computed +
           (r.matches() ? "" : "   MISMATCH") + "\n";
  for (const std::string& d : table.details) out += "  " + d + "\n";
  if (!table.summary.empty()) out += table.summary + "\n";
  out += std::string(table.passed() ? "matches" : "DOES NOT MATCH") + " in " + std::to_string(table.seconds) + " s\n";
  return out;
}

}  // namespace ordescent
