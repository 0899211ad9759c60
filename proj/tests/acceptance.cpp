// One line per acceptance criterion; exits non-zero when any fails.

#include <cstdio>
#include <string>

#include "ordescent/example.hpp"
#include "ordescent/sweep.hpp"

using namespace ordescent;

namespace {

bool all_passed(const SweepReport& r, std::initializer_list<const char*> names, std::string& note) {
  bool ok = !r.aborted;
  for (const char* name : names) {
    const InvariantResult* inv = r.find(name);
    if (!inv || !inv->passed()) {
      ok = false;
      note += std::string(" ") + name + (inv ? ": " + std::to_string(inv->failed) + " failed" : ": missing");
    }
  }
  if (r.aborted) note += " aborted: " + r.abort_reason;
  return ok;
}

bool has_line(const ExampleTable& t, const std::string& text) {
  for (const std::string& d : t.details)
    if (d == text) return true;
  return false;
}

int failures = 0;

void report(int number, const std::string& label, bool ok, const std::string& note) {
  if (!ok) ++failures;
  std::printf("criterion %d %-38s %s%s%s\n", number, label.c_str(), ok ? "PASS" : "FAIL", note.empty() ? "" : " ",
              note.c_str());
  std::fflush(stdout);
}

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "(%.2f s)", s);
  return buf;
}

}  // namespace

int main() {
  const ExampleTable one = run_example("interval-I");
  report(1, "product-order interval example", one.passed() && one.seconds < 5 &&
         has_line(one, "sup of lifted valuations equals beta(b0) on all sampled b0 <= b1: yes"),
         seconds(one.seconds));

  const ExampleTable two = run_example("interval-II");
  report(2, "sparse-order interval example", two.passed() && two.seconds < 5 &&
         has_line(two, "join of lifted valuations is 0 < x at every sampled x in (0,1): yes"),
         seconds(two.seconds));

  bool fixtures_ok = true;
  std::string fixture_note;
  for (const char* name : {"sre-fixture", "cond3-fixture", "js-fixture"}) {
    const ExampleTable t = run_example(name);
    fixtures_ok = fixtures_ok && t.passed();
    fixture_note += std::string(fixture_note.empty() ? "" : " ") + t.summary;
  }
  report(3, "condition-independence fixtures", fixtures_ok, fixture_note);

  // The remaining criteria share one sweep at the default scale.
  const SweepOptions options;
  const SweepReport sweep = run_sweep(options);
  const ExampleTable fam = run_example("fam-n5");
  std::string fam_note;
  const bool fam_ok = fam.passed() && all_passed(sweep, {invariant::kFamLcc}, fam_note);
  report(4, "family descent suite", fam_ok, fam.summary + fam_note);

  std::string sweep_note;
  const bool sweep_ok =
      all_passed(sweep,
                 {invariant::kOracleAgreement, invariant::kPairwiseSample, invariant::kStableRegularEpi,
                  invariant::kImplications, invariant::kComponentwise, invariant::kLccShortcut,
                  invariant::kReflection},
                 sweep_note) &&
      sweep.seconds < 600;
  report(5, "exhaustive equivalence sweep", sweep_ok,
         std::to_string(sweep.instances) + " instances, " + std::to_string(sweep.effective) + " effective " +
             seconds(sweep.seconds) + sweep_note);

  std::string laws_note;
  report(6, "oracle self-consistency",
         all_passed(sweep, {invariant::kCanonicalData, invariant::kCoequalizer}, laws_note), laws_note);

  std::string replay_note;
  bool replay_ok = all_passed(sweep, {invariant::kReplay}, replay_note);
  for (const std::string& name : example_names()) {
    const ExampleTable t = run_example(name);
    for (const std::string& d : t.details)
      if (d.find("replay REJECTS") != std::string::npos) {
        replay_ok = false;
        replay_note += " " + name;
      }
  }
  report(7, "certificate replay", replay_ok, std::to_string(sweep.replayed) + " sweep witnesses" + replay_note);

  std::printf("%s\n", failures ? "acceptance: FAIL" : "acceptance: PASS");
  return failures ? 1 : 0;
}
