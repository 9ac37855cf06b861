#include "decomp/types.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

#include "decomp/kernels.hpp"

namespace decomp {

LevyMeasure::LevyMeasure(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(Errc::invalid_argument, "LevyMeasure: empty support");
  for (double v : values_) {
    if (!(v >= 0.0)) throw Error(Errc::invalid_argument, "LevyMeasure: negative entry");
  }
}

double LevyMeasure::total_mass() const noexcept {
  return kernels::sum(values_.data(), values_.size());
}

BaseDistribution LevyMeasure::base_distribution() const {
  const double lambda = total_mass();
  if (lambda <= 0.0) {
    throw Error(Errc::degenerate_input, "LevyMeasure: zero total mass has no base distribution");
  }
  std::vector<double> p(values_);
  for (double& v : p) v /= lambda;
  return BaseDistribution(std::move(p));
}

BaseDistribution::BaseDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw Error(Errc::invalid_argument, "BaseDistribution: empty support");
  double total = 0.0;
  for (double v : probs_) {
    if (!(v >= 0.0)) throw Error(Errc::invalid_argument, "BaseDistribution: negative entry");
    total += v;
  }
  if (std::fabs(total - 1.0) > 1e-12) {
    throw Error(Errc::invalid_argument, "BaseDistribution: probabilities sum to " +
                                            std::to_string(total) + ", not 1");
  }
}

BaseDistribution BaseDistribution::normalized(std::vector<double> weights) {
  double total = 0.0;
  for (double v : weights) {
    if (!(v >= 0.0)) throw Error(Errc::invalid_argument, "BaseDistribution: negative weight");
    total += v;
  }
  if (total <= 0.0) throw Error(Errc::invalid_argument, "BaseDistribution: zero weight vector");
  for (double& v : weights) v /= total;
  // nudge the largest entry so the strict sum-to-one check cannot trip on roundoff
  double sum = 0.0;
  std::size_t arg_max = 0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    sum += weights[j];
    if (weights[j] > weights[arg_max]) arg_max = j;
  }
  weights[arg_max] += 1.0 - sum;
  return BaseDistribution(std::move(weights));
}

CompoundPmf::CompoundPmf(std::vector<double> probs, double tail_mass)
    : probs_(std::move(probs)), tail_mass_(tail_mass) {
  if (probs_.empty()) throw Error(Errc::invalid_argument, "CompoundPmf: empty");
  for (double v : probs_) {
    if (!(v >= 0.0)) throw Error(Errc::invalid_argument, "CompoundPmf: negative entry");
  }
  if (tail_mass_ < 0.0) {
    if (tail_mass_ < -1e-12) {
      throw Error(Errc::invalid_argument, "CompoundPmf: negative tail mass");
    }
    tail_mass_ = 0.0;  // roundoff from the truncation sum
  }
  const double total = kernels::sum(probs_.data(), probs_.size()) + tail_mass_;
  if (std::fabs(total - 1.0) > 1e-12) {
    throw Error(Errc::invalid_argument,
                "CompoundPmf: mass sums to " + std::to_string(total) + ", not 1");
  }
}

InverseSequence::InverseSequence(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty() || !(values_[0] > 0.0)) {
    throw Error(Errc::invalid_argument, "InverseSequence: r_0 must be positive");
  }
}

double InverseSequence::l1_norm() const noexcept {
  return kernels::l1_norm(values_.data(), values_.size());
}

IncrementData::IncrementData(std::vector<IncrementRecord> records)
    : records_(std::move(records)) {
  if (records_.empty()) throw Error(Errc::invalid_argument, "IncrementData: empty dataset");
  for (const auto& r : records_) {
    if (!(r.delta > 0.0)) throw Error(Errc::bad_input, "IncrementData: non-positive time gap");
    if (r.z < 0) throw Error(Errc::bad_input, "IncrementData: negative increment");
  }
}

double IncrementData::total_time() const noexcept {
  double t = 0.0;
  for (const auto& r : records_) t += r.delta;
  return t;
}

std::int64_t IncrementData::max_z() const noexcept {
  std::int64_t m = 0;
  for (const auto& r : records_) m = std::max(m, r.z);
  return m;
}

bool IncrementData::equidistant(double rel_tol) const noexcept {
  const double d0 = records_.front().delta;
  for (const auto& r : records_) {
    if (std::fabs(r.delta - d0) > rel_tol * d0) return false;
  }
  return true;
}

std::string IncrementData::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const void* data, std::size_t n) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= bytes[i];
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& r : records_) {
    feed(&r.delta, sizeof(r.delta));
    feed(&r.z, sizeof(r.z));
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace decomp
