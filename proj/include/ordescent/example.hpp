#pragma once

#include <string>
#include <vector>

namespace ordescent {

/// One row of an expected-vs-computed table.
struct ExampleRow {
  std::string label;
  std::string expected;
  std::string computed;

  bool matches() const { return expected == computed; }
};

struct ExampleTable {
  std::string name;
  std::string summary;               ///< one-line verdict, e.g. "descent: YES; effective: NO; ..."
  std::vector<ExampleRow> rows;
  std::vector<std::string> details;
  double seconds = 0;

  bool passed() const;
};

/// interval-I, interval-II, sre-fixture, cond3-fixture, js-fixture, fam-n5.
const std::vector<std::string>& example_names();

/// Throws std::invalid_argument for an unknown name.
ExampleTable run_example(const std::string& name);

std::string format_example(const ExampleTable& table);

}  // namespace ordescent
