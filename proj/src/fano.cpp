#include "cb/fano.hpp"

#include <algorithm>
#include <stdexcept>

namespace cb {

namespace {

// Slot triples of the monomial; slot 7 is the distinguished eighth point.
constexpr std::array<std::array<int, 3>, 21> kSlots = [] {
  std::array<std::array<int, 3>, 21> s{};
  for (int i = 0; i < 7; ++i) {
    s[i] = {i, (i + 1) % 7, 7};
    s[7 + i] = {i, (i + 1) % 7, (i + 3) % 7};
    s[14 + i] = {i, (i + 1) % 7, (i + 5) % 7};
  }
  return s;
}();

int permutation_sign(const std::array<int, 8>& p) {
  int inversions = 0;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      if (p[a] > p[b]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

// Integral copies of the points: P_i = scale_i^{-1} * integral_i.
struct IntegralPoints {
  std::array<std::array<Int, 3>, 8> coords;
  Rat correction = 1;  // product of scale_i^{-8}
};

IntegralPoints integralize(const Config8& c) {
  IntegralPoints out;
  for (int i = 0; i < 8; ++i) {
    const auto& p = c.points()[i];
    const Int l = denominator_lcm(p.coords());
    for (int k = 0; k < 3; ++k) out.coords[i][k] = Rat(p[k] * l).get_num();
    out.correction /= pow(Rat(l), 8);
  }
  return out;
}

class BracketTable {
 public:
  explicit BracketTable(const IntegralPoints& pts) {
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b)
        for (int c = 0; c < 8; ++c) {
          const auto &p = pts.coords[a], &q = pts.coords[b], &r = pts.coords[c];
          table_[a * 64 + b * 8 + c] = p[0] * (q[1] * r[2] - q[2] * r[1]) -
                                       p[1] * (q[0] * r[2] - q[2] * r[0]) +
                                       p[2] * (q[0] * r[1] - q[1] * r[0]);
        }
  }
  const Int& operator()(int a, int b, int c) const { return table_[a * 64 + b * 8 + c]; }

 private:
  std::array<Int, 512> table_;
};

// slots: 0-based point indices, slots[7] the eighth.
void monomial(const BracketTable& br, const std::array<int, 8>& slots, Int& out) {
  out = 1;
  for (const auto& s : kSlots) {
    const Int& b = br(slots[s[0]], slots[s[1]], slots[s[2]]);
    if (b == 0) {
      out = 0;
      return;
    }
    out *= b;
  }
}

}  // namespace

Rat fano_monomial(const Config8& c, const FanoTuple& t) {
  std::array<int, 8> slots{};
  std::array<bool, 8> seen{};
  for (int i = 0; i < 8; ++i) {
    const PointIndex label = i < 7 ? t.seven[i] : t.eighth;
    if (label < 1 || label > 8 || seen[label - 1]) {
      throw std::invalid_argument("Fano tuple must be a permutation of 1..8");
    }
    seen[label - 1] = true;
    slots[i] = label - 1;
  }
  Rat product = 1;
  for (const auto& s : kSlots) {
    product *= bracket(c.points()[slots[s[0]]], c.points()[slots[s[1]]], c.points()[slots[s[2]]]);
  }
  return product;
}

FanoSum p9_fano(const Config8& c, FanoMode mode) {
  const IntegralPoints pts = integralize(c);
  const BracketTable br(pts);

  // per_eighth[e] accumulates sign * F over permutations with pi(8) = e.
  std::array<Int, 8> per_eighth;
  std::uint64_t evaluations = 0;
  Int f;

  if (mode == FanoMode::full) {
    std::array<int, 8> p{0, 1, 2, 3, 4, 5, 6, 7};
    do {
      monomial(br, p, f);
      ++evaluations;
      if (permutation_sign(p) > 0) {
        per_eighth[p[7]] += f;
      } else {
        per_eighth[p[7]] -= f;
      }
    } while (std::next_permutation(p.begin(), p.end()));
  } else {
    for (int e = 0; e < 8; ++e) {
      std::array<int, 7> others{};
      for (int i = 0, n = 0; i < 8; ++i)
        if (i != e) others[n++] = i;
      // Representatives: the minimum first, then second slot < seventh slot.
      std::array<int, 6> tail{};
      std::copy(others.begin() + 1, others.end(), tail.begin());
      do {
        if (tail[0] > tail[5]) continue;
        std::array<int, 8> p{others[0], tail[0], tail[1], tail[2], tail[3], tail[4], tail[5], e};
        monomial(br, p, f);
        ++evaluations;
        if (permutation_sign(p) > 0) {
          per_eighth[e] += f;
        } else {
          per_eighth[e] -= f;
        }
      } while (std::next_permutation(tail.begin(), tail.end()));
      per_eighth[e] *= 14;
    }
  }

  FanoSum out;
  out.evaluations = evaluations;
  for (int k = 0; k < 3; ++k) {
    Int acc = 0;
    for (int e = 0; e < 8; ++e) acc += per_eighth[e] * pts.coords[e][k];
    out.vector[k] = Rat(acc) * pts.correction;
  }
  return out;
}

}  // namespace cb
