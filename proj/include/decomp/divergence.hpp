#pragma once

#include <span>

namespace decomp {

// Discrete divergences over a common index set; a shorter vector is read as
// zero-padded. A point with a_i > 0 and b_i = 0 makes KL and V infinite.

// sum a_i log(a_i / b_i)
double kl_divergence(std::span<const double> a, std::span<const double> b);

// sum a_i log^2(a_i / b_i)
double v_divergence(std::span<const double> a, std::span<const double> b);

// sqrt( sum (sqrt(a_i) - sqrt(b_i))^2 ), the unnormalised Hellinger distance
double hellinger(std::span<const double> a, std::span<const double> b);

// sum |a_i - b_i| with zero padding
double l1_distance(std::span<const double> a, std::span<const double> b);

}  // namespace decomp
