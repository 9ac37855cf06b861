#pragma once

#include <string>
#include <vector>

#include "decomp/types.hpp"

namespace decomp {

// Embedded reference datasets (yearly count data on a unit grid):
//   horse_kick: deaths by horse kick in Prussian cavalry corps, n = 200
//   plant:      plants per plot, n = 500
std::vector<std::string> dataset_names();
IncrementData embedded_dataset(const std::string& name);

}  // namespace decomp
