#include "cb/lp.hpp"

#include <vector>

namespace cb {

bool nonnegative_feasible(const RatMatrix& a, const RatVector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw ShapeError("rhs length mismatch");
  if (m == 0) return true;

  // Tableau columns: n structural, m artificial, rhs last.
  const std::size_t width = n + m + 1;
  std::vector<Rat> t(m * width);
  auto at = [&](std::size_t r, std::size_t c) -> Rat& { return t[r * width + c]; };
  std::vector<Rat> cost(width);
  std::vector<std::size_t> basis(m);

  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = b[r] < 0;
    for (std::size_t c = 0; c < n; ++c) at(r, c) = flip ? Rat(-a(r, c)) : a(r, c);
    at(r, n + r) = 1;
    at(r, width - 1) = flip ? Rat(-b[r]) : b[r];
    basis[r] = n + r;
    for (std::size_t c = 0; c < n; ++c) cost[c] -= at(r, c);
    cost[width - 1] -= at(r, width - 1);
  }

  for (;;) {
    std::size_t enter = width;
    for (std::size_t c = 0; c + 1 < width; ++c) {
      if (cost[c] < 0) {
        enter = c;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    Rat best_ratio;
    for (std::size_t r = 0; r < m; ++r) {
      if (at(r, enter) <= 0) continue;
      Rat ratio = at(r, width - 1) / at(r, enter);
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    // Phase-one objective is bounded below by zero, so some row always qualifies.
    if (leave == m) break;

    Rat inv = 1 / at(leave, enter);
    for (std::size_t c = 0; c < width; ++c) {
      if (at(leave, c) != 0) at(leave, c) *= inv;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || at(r, enter) == 0) continue;
      Rat f = at(r, enter);
      for (std::size_t c = 0; c < width; ++c) {
        if (at(leave, c) != 0) at(r, c) -= f * at(leave, c);
      }
    }
    if (cost[enter] != 0) {
      Rat f = cost[enter];
      for (std::size_t c = 0; c < width; ++c) {
        if (at(leave, c) != 0) cost[c] -= f * at(leave, c);
      }
    }
    basis[leave] = enter;
  }
  return cost[width - 1] == 0;
}

}  // namespace cb
