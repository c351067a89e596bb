#pragma once

#include <string>
#include <vector>

namespace ternions {

struct GoldenCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // short summary, or the first differing item
};

// Replay every enumerated fact about the q = 2 case against the golden
// reference data: the operation tables, the ideal structure, the element
// classification, the 21 submodules with their 42 generators, the degree
// profile, the Fano core, the second-ideal exclusion, and the right-side
// twin.  Eight checks, each reported individually.
std::vector<GoldenCheck> verify_golden();

bool all_passed(const std::vector<GoldenCheck>& checks);

}  // namespace ternions
