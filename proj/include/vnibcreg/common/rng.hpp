#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include "vnibcreg/common/check.hpp"

namespace vnibcreg {

/// Deterministic random source. All sampling is implemented on top of the
/// raw engine so streams do not depend on the standard library's
/// distribution implementations, which vary between toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer on [lo, hi], both inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    VNIB_CHECK(lo <= hi, "uniform_int: empty range [", lo, ", ", hi, "]");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());  // full range
    // Rejection sampling to avoid modulo bias.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

  /// Standard normal via Box-Muller (no cached second value, so the state
  /// is exactly the engine state).
  double normal() {
    double u1;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  double normal(double mean, double stddev) {
    return mean + stddev * normal();
  }

  /// Zero-mean normal with the given stddev, truncated to |x| <= bound.
  /// stddev == 0 degenerates to the point mass at 0.
  double truncated_normal(double stddev, double bound) {
    VNIB_CHECK(bound >= 0.0, "truncated_normal: negative bound");
    if (stddev == 0.0) return 0.0;
    for (;;) {
      const double x = normal(0.0, stddev);
      if (std::abs(x) <= bound) return x;
    }
  }

  /// Fisher-Yates shuffle.
  template <class Vec>
  void shuffle(Vec& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j =
          static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

  std::string save_state() const {
    std::ostringstream os;
    os << engine_;
    return os.str();
  }

  void restore_state(const std::string& state) {
    std::istringstream is(state);
    is >> engine_;
    VNIB_CHECK(!is.fail(), "Rng: malformed serialized state");
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace vnibcreg
