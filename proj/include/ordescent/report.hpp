#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ordescent/oracle.hpp"

namespace ordescent {

/// Names for the elements of X; indices are printed when empty.
using ElementNames = std::vector<std::string>;

/// Compact rendering of the witness positions, e.g. "(b0,b1,w=1)" or
/// "sigma=(u,v) at b0, a0".
std::string describe(const Witness& w, const ElementNames& x_names = {});

/// Which numbered condition of the effective-descent characterization a
/// witness condition belongs to ("(1)", "(2)", "(3)"), or empty.
std::string condition_number(const std::string& condition);

std::string to_string(const OracleVerdict& v);

/// One `key=value` record per line; values with spaces are quoted.
std::string record(const std::vector<std::pair<std::string, std::string>>& fields);
std::vector<std::pair<std::string, std::string>> witness_fields(const Witness& w);

}  // namespace ordescent
