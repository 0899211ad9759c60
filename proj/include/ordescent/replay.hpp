#pragma once

#include "ordescent/oracle.hpp"

namespace ordescent {

// Re-checks a negative certificate against the defining formula of its
// condition, using only the bare orders of X, A and B (no lattice tables and
// none of the predicate implementations). Returns true when the witness
// reconfirms the failure.

struct ReplayResult {
  bool confirmed = false;
  std::string reason;  ///< why a witness was rejected

  explicit operator bool() const { return confirmed; }
};

ReplayResult replay_witness(const OrdSet& x, const LaxMorphism& f, const Witness& w);

/// Witnesses of family-level predicates, with J -> K given by `f`.
ReplayResult replay_fam_witness(const OrdSet& x, const FamMorphism& f, const Witness& w);

}  // namespace ordescent
