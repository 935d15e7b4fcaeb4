#pragma once

#include <functional>
#include <string>
#include <vector>

#include "trigspline/kernels.hpp"

namespace trigspline::verify {

enum class Level { quick, full };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs the self-verification suite against the oracles. `quick` covers the
// node identities at small sizes plus a few point values; `full` runs every
// acceptance check at its pinned tolerance. The series configuration feeds
// the spline builds under test, so degrading its tolerance makes the checks
// fail (a deliberate negative-control knob).
std::vector<CheckResult> run(Level level, const SeriesConfig& series = {},
                             const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace trigspline::verify
