#include "decomp/datasets.hpp"

#include <utility>

namespace decomp {

namespace {

IncrementData expand(const std::vector<std::pair<std::int64_t, int>>& histogram) {
  std::vector<IncrementRecord> records;
  for (const auto& [z, count] : histogram) {
    for (int i = 0; i < count; ++i) records.push_back({1.0, z});
  }
  return IncrementData(std::move(records));
}

}  // namespace

std::vector<std::string> dataset_names() { return {"horse_kick", "plant"}; }

IncrementData embedded_dataset(const std::string& name) {
  if (name == "horse_kick") {
    return expand({{0, 109}, {1, 65}, {2, 22}, {3, 3}, {4, 1}});
  }
  if (name == "plant") {
    return expand({{0, 274},
                   {1, 71},
                   {2, 58},
                   {3, 36},
                   {4, 20},
                   {5, 12},
                   {6, 10},
                   {7, 7},
                   {8, 6},
                   {9, 3},
                   {10, 0},
                   {11, 2},
                   {12, 1}});
  }
  throw Error(Errc::not_found, "unknown embedded dataset: " + name);
}

}  // namespace decomp
