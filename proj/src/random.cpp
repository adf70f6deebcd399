#include "cb/random.hpp"

namespace cb {

Config8 Rng::nondegenerate_config(std::int64_t bound, int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Config8 c = integer_config(bound);
    if (c.degeneracy().nondegenerate()) return c;
  }
  throw std::runtime_error("no nondegenerate configuration after " +
                           std::to_string(max_attempts) + " draws");
}

ProjTransform Rng::transform(std::int64_t bound) {
  for (;;) {
    RatMatrix m(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) m(r, c) = uniform(-bound, bound);
    ProjTransform t(m);
    if (t.det() != 0) return t;
  }
}

}  // namespace cb
