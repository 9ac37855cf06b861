#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "decomp/errors.hpp"

namespace decomp {

class BaseDistribution;

// Finite Levy measure of an integer compound Poisson process:
// values()[k-1] is the rate nu_k of jumps of size k, k = 1..m.
class LevyMeasure {
 public:
  explicit LevyMeasure(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<double>& values() const noexcept { return values_; }
  double value(std::size_t k) const { return values_.at(k - 1); }  // 1-based jump size

  // lambda = sum_k nu_k
  double total_mass() const noexcept;

  // p = nu / lambda; degenerate when lambda == 0
  BaseDistribution base_distribution() const;

 private:
  std::vector<double> values_;
};

// Jump-size distribution on {1..m}: probs()[j-1] = p_j. No atom at zero.
class BaseDistribution {
 public:
  explicit BaseDistribution(std::vector<double> probs);

  // Normalizes nonnegative weights over jump sizes 1..m.
  static BaseDistribution normalized(std::vector<double> weights);

  std::size_t size() const noexcept { return probs_.size(); }
  const std::vector<double>& probs() const noexcept { return probs_; }
  double prob(std::size_t j) const { return probs_.at(j - 1); }  // 1-based

 private:
  std::vector<double> probs_;
};

// Truncated increment pmf q_0..q_K with the mass beyond K kept on record.
class CompoundPmf {
 public:
  CompoundPmf(std::vector<double> probs, double tail_mass);

  std::size_t size() const noexcept { return probs_.size(); }  // K + 1
  const std::vector<double>& probs() const noexcept { return probs_; }
  double prob(std::size_t k) const { return probs_.at(k); }  // 0-based increment size
  double tail_mass() const noexcept { return tail_mass_; }

 private:
  std::vector<double> probs_;
  double tail_mass_;
};

// Convolution inverse r of a compound pmf: r * q = delta_0. Entries may be
// negative; r_0 = 1/q_0 > 0.
class InverseSequence {
 public:
  explicit InverseSequence(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<double>& values() const noexcept { return values_; }
  double l1_norm() const noexcept;

 private:
  std::vector<double> values_;
};

struct IncrementRecord {
  double delta;    // time gap, > 0
  std::int64_t z;  // observed increment, >= 0
};

// The dataset: increment observations (Delta_i, Z_i).
class IncrementData {
 public:
  explicit IncrementData(std::vector<IncrementRecord> records);

  std::size_t size() const noexcept { return records_.size(); }
  const std::vector<IncrementRecord>& records() const noexcept { return records_; }
  double delta(std::size_t i) const { return records_.at(i).delta; }
  std::int64_t z(std::size_t i) const { return records_.at(i).z; }

  double total_time() const noexcept;  // T = sum Delta_i
  std::int64_t max_z() const noexcept;
  bool equidistant(double rel_tol = 1e-9) const noexcept;

  // FNV-1a over the binary record stream; recorded in output metadata.
  std::string digest() const;

 private:
  std::vector<IncrementRecord> records_;
};

}  // namespace decomp
