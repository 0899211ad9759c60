#pragma once

#include <string>
#include <vector>

#include "ordescent/fam.hpp"
#include "ordescent/instance_io.hpp"

namespace ordescent::fixtures {

/// 0 < 1.
OrdSet two_chain();
/// bottom 0, atoms 1 (p) and 2 (q), top 3.
OrdSet diamond();
/// bottom 0, u 1, v 2, w 3, top 4, with u < w; the smallest non-distributive
/// lattice that is not the diamond.
OrdSet n5();

/// Element names used in reports ("bot", "u", ...), indexed like the order.
std::vector<std::string> n5_names();
std::vector<std::string> diamond_names();

/// X = 2-chain; B = b0 <= b1 with beta = (1,1); A = {a0, a0', a1} with
/// a0' <= a1 only; f = (b0, b0, b1); alpha = (1, 0, 1).
/// Effective for descent in Ord and a stable regular epimorphism, but join
/// recovery over lifted pairs fails at (b0, b1, w = 1).
Instance sre();

/// X = N5; B a point valued top; A two incomparable points valued (w, v);
/// f constant. Conditions (1) and (2) hold, gluing fails at sigma = (u, v).
Instance cond3();

/// X = 2-chain with every valuation 1; B = 3-chain; A = {a0, a1, a1', a2}
/// with a0 <= a1, a1' <= a2, a0 <= a2; f = (0, 1, 1, 2). Triple lifting
/// fails, conditions (2) and (3) hold.
Instance js();

struct FamFixture {
  OrdSet x;
  FamMorphism f;
};

/// (w, v) -> (top) over N5: descent, not effective.
FamFixture fam_n5();
/// (p, q) -> (top) over the diamond: effective.
FamFixture fam_diamond();

/// The identity on the domain of `inst`.
Instance identity_of(const Instance& inst);

}  // namespace ordescent::fixtures
