#pragma once

#include <string>
#include <vector>

namespace cfded {

struct VerifyCheck {
  std::string name;
  bool passed;
  std::string detail;
};

/// Golden fixtures: the expansions and cluster coincidences of 1/sqrt(53)
/// and the convergent criterion on the digits of e. Never throws; a check
/// that raises records the error in `detail`.
std::vector<VerifyCheck> run_golden_checks();

}  // namespace cfded
