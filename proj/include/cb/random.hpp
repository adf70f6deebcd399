#pragma once

#include "cb/config.hpp"

#include <cstdint>
#include <random>

namespace cb {

/// Seeded generator whose draws are identical across standard libraries
/// (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  ProjPoint integer_point(std::int64_t bound) {
    for (;;) {
      const auto x = uniform(-bound, bound), y = uniform(-bound, bound), z = uniform(-bound, bound);
      if (x != 0 || y != 0 || z != 0) return ProjPoint(x, y, z);
    }
  }

  Config8 integer_config(std::int64_t bound) {
    auto p = [&] { return integer_point(bound); };
    return Config8({p(), p(), p(), p(), p(), p(), p(), p()});
  }

  /// Integer config with distinct points, no three collinear, no six coconic. Throws
  /// std::runtime_error after max_attempts degenerate draws.
  Config8 nondegenerate_config(std::int64_t bound, int max_attempts = 1000);

  /// Integer matrix with nonzero determinant.
  ProjTransform transform(std::int64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace cb
