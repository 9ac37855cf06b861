#pragma once

#include <cmath>
#include <cstdint>

namespace decomp {

// Counter-based generator (splitmix64). One chain owns one seed; every
// consumer derives its own stream from (seed, phase, index), so results are
// bit-reproducible regardless of execution order or thread scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t state) noexcept : state_(state) {}

  static std::uint64_t mix(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  static Rng derive(std::uint64_t seed, std::uint64_t s1, std::uint64_t s2) noexcept {
    std::uint64_t h = mix(seed + 0x9e3779b97f4a7c15ULL);
    h = mix(h ^ (s1 + 0x9e3779b97f4a7c15ULL));
    h = mix(h ^ (s2 + 0x632be59bd9b4e019ULL));
    return Rng(h);
  }

  std::uint64_t next_u64() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // [0, 1)
  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // (0, 1), safe under log()
  double uniform_open() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // uniform integer in [0, n); n >= 1
  std::uint64_t uniform_below(std::uint64_t n) noexcept {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  double normal() noexcept {
    const double u1 = uniform_open();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  // Gamma(shape, rate), mean shape/rate. Marsaglia-Tsang for shape >= 1,
  // boosted by U^{1/shape} below 1.
  double gamma(double shape, double rate) noexcept {
    if (shape < 1.0) {
      const double u = uniform_open();
      return gamma(shape + 1.0, rate) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform_open();
      const double x2 = x * x;
      if (u < 1.0 - 0.0331 * x2 * x2) return d * v / rate;
      if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v / rate;
    }
  }

  // Exact Poisson sampling; large means are split by additivity so the
  // multiplicative method never underflows.
  std::int64_t poisson(double mean) noexcept {
    std::int64_t total = 0;
    while (mean > 30.0) {
      total += poisson_small(15.0);
      mean -= 15.0;
    }
    return total + poisson_small(mean);
  }

 private:
  std::int64_t poisson_small(double mean) noexcept {
    if (mean <= 0.0) return 0;
    const double limit = std::exp(-mean);
    std::int64_t k = 0;
    double prod = 1.0;
    do {
      ++k;
      prod *= uniform();
    } while (prod > limit);
    return k - 1;
  }

  std::uint64_t state_;
};

// Stream phase tags; combined with the iteration counter in the high bits so
// distinct phases of one Gibbs iteration never collide.
namespace streams {
constexpr std::uint64_t impute = 1;
constexpr std::uint64_t nu = 2;
constexpr std::uint64_t beta = 3;
constexpr std::uint64_t gamma = 4;
constexpr std::uint64_t simulate = 5;
constexpr std::uint64_t grid = 6;

constexpr std::uint64_t phase(std::uint64_t tag, std::uint64_t iteration) noexcept {
  return (tag << 56) | iteration;
}
}  // namespace streams

}  // namespace decomp
