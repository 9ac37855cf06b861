#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <utility>
#include <vector>

#include "decomp/errors.hpp"

namespace decomp {

// All nonnegative integer vectors (k_1..k_m) with sum_j j*k_j = z: the state
// space of the imputation chain for one increment of size z.
//
// The ordering is frozen as reverse-lexicographic (vectors compared from the
// k_m coordinate down, descending), so chains are reproducible under a seed.
class SolutionSet {
 public:
  SolutionSet(int m, std::int64_t z, std::vector<std::int32_t> flat);

  int m() const noexcept { return m_; }
  std::int64_t z() const noexcept { return z_; }
  std::size_t size() const noexcept { return count_; }
  std::size_t bytes() const noexcept { return flat_.size() * sizeof(std::int32_t); }

  std::span<const std::int32_t> at(std::size_t idx) const;

  // Candidate pair for the neighbor proposal, with wrap at the ends:
  // interior l -> (l-1, l+1); first -> (second, last); last -> (first, second-to-last).
  std::pair<std::size_t, std::size_t> neighbor_pair(std::size_t idx) const;

  // Position of a member vector in the frozen ordering.
  std::size_t index_of(std::span<const std::int32_t> k) const;

 private:
  int m_;
  std::int64_t z_;
  std::size_t count_;
  std::vector<std::int32_t> flat_;  // count_ rows of length m_
};

// Enumerates the full solution set for (m, z). The estimated footprint is
// checked against max_bytes before anything is allocated.
SolutionSet enumerate_solutions(int m, std::int64_t z,
                                std::uint64_t max_bytes = std::uint64_t{2} << 30);

// Number of partitions of z into parts of size <= m, saturating at 2^63.
std::uint64_t bounded_partition_count(std::int64_t z, int m);

// Shared store of solution sets keyed by (m, z); each key is enumerated at
// most once per process. Readers are concurrent; enumeration of a missing key
// is serialized per key.
class SolutionCache {
 public:
  explicit SolutionCache(std::uint64_t memory_budget = std::uint64_t{2} << 30)
      : budget_(memory_budget) {}

  const SolutionSet& get(int m, std::int64_t z);
  std::uint64_t bytes_used() const noexcept;

 private:
  struct Entry {
    std::once_flag once;
    std::unique_ptr<SolutionSet> set;
    std::exception_ptr error;
  };

  std::uint64_t budget_;
  mutable std::shared_mutex mutex_;
  std::map<std::pair<int, std::int64_t>, std::shared_ptr<Entry>> entries_;
  std::uint64_t bytes_used_ = 0;
};

}  // namespace decomp
