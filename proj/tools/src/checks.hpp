#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qrmt::cli {

/// A named measurement that passes when value < tolerance.
struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;

  [[nodiscard]] bool pass() const { return value < tolerance; }
};

/// "ok 3 - name (value=..., tol=...)" lines after a "1..N" plan.
void print_tap(std::ostream& out, const std::vector<Check>& checks);

bool all_pass(const std::vector<Check>& checks);

}  // namespace qrmt::cli
