#ifndef OMA_RNG_HPP
#define OMA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "oma/core.hpp"

namespace oma {

/// Deterministic random source. mt19937_64 output is fixed by the standard;
/// the distribution transforms below are written out explicitly so that
/// identical seeds give identical streams on every platform and compiler.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; pairs are cached.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = kTwoPi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  /// Random unit vector in R^n (direction uniform on the sphere).
  VectorXd unit_vector(int n) {
    VectorXd v(n);
    double norm2 = 0.0;
    do {
      for (int i = 0; i < n; ++i) v[i] = gaussian();
      norm2 = v.squaredNorm();
    } while (norm2 == 0.0);
    return v / std::sqrt(norm2);
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace oma

#endif  // OMA_RNG_HPP
