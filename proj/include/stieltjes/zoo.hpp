#pragma once

#include <string>
#include <vector>

#include "stieltjes/core.hpp"

namespace stieltjes {

struct ZooEntry {
  std::string name;
  std::string variation;  // smooth, bv, singular, cbv, non-integrable
  std::string description;
  BoundaryFunction fn;
};

// Entries with default parameters.
std::vector<ZooEntry> catalog();
// Name plus optional parameters, e.g. {"step2pi", "1.0"} or {"cantor", "20"}.
ZooEntry lookup(const std::string& name, const std::vector<std::string>& params = {});

}  // namespace stieltjes
