#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordescent/instance_io.hpp"
#include "ordescent/oracle.hpp"

namespace ordescent {

struct SweepOptions {
  std::size_t max_a = 3;
  std::size_t max_b = 3;
  std::size_t max_x = 4;
  std::size_t bound = 3;  ///< oracle bound N
  std::uint64_t seed = 1;  ///< selects the instances for the sampled checks
  std::size_t threads = 0;  ///< 0: hardware concurrency
  /// One in `sample_every` instances also runs the pairwise comparison
  /// oracle at the full bound.
  std::size_t sample_every = 400;
  std::size_t cap = kDefaultEnumerationCap;
  std::size_t max_dumps = 5;  ///< offending instances kept per invariant
};

/// Visits one lax morphism per isomorphism class, for every locally complete
/// X with |X| <= max_x (one per isomorphism class) and |A| <= max_a,
/// |B| <= max_b. Isomorphisms act on X, A and B simultaneously.
void for_each_instance(std::size_t max_x, std::size_t max_a, std::size_t max_b,
                       const std::function<void(const LocalLattice&, const LaxMorphism&)>& visit);

struct InvariantResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> offending;  ///< dumped instances, by encoding

  bool passed() const { return failed == 0; }
};

struct SweepReport {
  SweepOptions options;
  std::size_t orders = 0;     ///< locally complete X visited
  std::size_t instances = 0;
  std::size_t effective = 0;  ///< instances satisfying all three conditions
  std::size_t global_join_differs = 0;
  /// Discrete-carrier instances where essential surjectivity alone disagrees
  /// with effectiveness in Fam(X).
  std::size_t discrete_es_differs = 0;
  std::size_t replayed = 0;
  std::vector<InvariantResult> invariants;
  std::vector<std::string> global_join_examples;
  double seconds = 0;
  bool aborted = false;
  std::string abort_reason;

  bool passed() const;
  const InvariantResult* find(const std::string& name) const;
};

/// Evaluates every cross-check on every instance. Instances are split into
/// independent units processed in parallel; the report does not depend on
/// the scheduling. CapExceeded aborts the sweep cleanly (`aborted`).
SweepReport run_sweep(const SweepOptions& options);

/// Pass/fail matrix, one line per invariant.
std::string format_report(const SweepReport& report);
std::string format_records(const SweepReport& report);

namespace invariant {
inline constexpr const char* kOracleAgreement = "oracle-agreement";
inline constexpr const char* kPairwiseSample = "pairwise-comparison-sample";
inline constexpr const char* kStableRegularEpi = "srepi-direct";
inline constexpr const char* kImplications = "implication-chain";
inline constexpr const char* kComponentwise = "componentwise";
inline constexpr const char* kLccShortcut = "lcc-shortcut";
inline constexpr const char* kReflection = "posetal-reflection";
inline constexpr const char* kFamLcc = "fam-lcc";
inline constexpr const char* kFamDecomposition = "fam-decomposition";
inline constexpr const char* kCoequalizer = "coequalizer";
inline constexpr const char* kCanonicalData = "canonical-data-laws";
inline constexpr const char* kDiscreteCarriers = "discrete-carriers";
inline constexpr const char* kReplay = "witness-replay";
inline constexpr const char* kRoundTrip = "round-trip";
}  // namespace invariant

}  // namespace ordescent
