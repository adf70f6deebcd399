#pragma once

#include "cb/config.hpp"

#include "json.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace cb {

/// An element of the min-plus semiring: a rational or +infinity.
class TropValue {
 public:
  TropValue() = default;  // +infinity
  TropValue(Rat v) : v_(std::move(v)) {}  // NOLINT: implicit on purpose
  TropValue(long v) : v_(Rat(v)) {}      // NOLINT

  static TropValue infinity() { return {}; }

  bool finite() const { return v_.has_value(); }
  const Rat& value() const { return *v_; }

  friend bool operator==(const TropValue&, const TropValue&) = default;
  friend bool operator<(const TropValue& a, const TropValue& b) {
    if (!a.finite()) return false;
    return !b.finite() || a.value() < b.value();
  }

 private:
  std::optional<Rat> v_;
};

/// Tropical addition (min) and multiplication (+).
TropValue oplus(const TropValue& a, const TropValue& b);
TropValue otimes(const TropValue& a, const TropValue& b);
std::string to_string(const TropValue& v);

class TropMatrix {
 public:
  TropMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  TropValue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const TropValue& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<TropValue> data_;
};

struct TropDeterminant {
  TropValue value;
  bool unique = false;         // exactly one permutation attains a finite minimum
  std::vector<int> assignment;  // row -> column of one minimizer
};

/// min over permutations of the summed entries, by the Hungarian method.
/// Uniqueness is decided by re-solving with each optimal edge forbidden.
TropDeterminant tropical_determinant(const TropMatrix& m);

/// Valuations of the coordinates of P5..P8; P1..P4 are the standard frame.
struct TropConfig {
  std::array<std::array<TropValue, 3>, 4> points;
};

enum class Factor { Cx, Cy, Cz, Dx, Dy, Dz };
const char* factor_name(Factor f);
std::optional<Factor> parse_factor(std::string_view name);
inline constexpr std::array<Factor, 6> kAllFactors{Factor::Cx, Factor::Cy, Factor::Cz,
                                                   Factor::Dx, Factor::Dy, Factor::Dz};

struct TropP9 {
  Rat u, v;  // tropical y9/x9 and z9/x9
  std::array<TropDeterminant, 6> factors;  // in kAllFactors order
  bool all_unique() const;
};

/// The tropicalized chart formula u = Dx Cy / (Cx Dy), v = Dx Cz / (Cx Dz).
/// Integer coefficients 2 and 3 in the D matrices get valuation v_p when
/// coefficient_prime > 1, and 0 otherwise. Throws std::domain_error when a
/// factor is +infinity.
TropP9 tropical_p9(const TropConfig& t, std::int64_t coefficient_prime = 0);

/// p-adic valuation; nullopt for zero.
std::optional<long> padic_valuation(const Rat& x, std::int64_t prime);

struct ValuationTrial {
  int trial;
  std::array<long, 2> exact;      // val(u), val(v)
  std::array<Rat, 2> predicted;   // trop(u), trop(v)
  bool all_unique;
  bool agrees;
  bool cancellation;              // some factor lost its lowest term
  bool factors_sound;             // val >= trop per factor, equal where the minimizer is unique
};

struct ValuationReport {
  std::int64_t prime = 2;
  std::uint64_t seed = 0;
  std::int64_t bound = 0;
  int trials = 0;
  int rejected_draws = 0;
  int agreements = 0;
  int cancellation_events = 0;
  int unexplained_disagreements = 0;   // disagreement without any factor cancellation
  int factor_soundness_violations = 0;  // trials where some factor is not sound
  int unique_trials = 0;
  int unique_disagreements = 0;
  int chart_lower_bound_violations = 0;  // val(u) or val(v) below prediction
  std::vector<ValuationTrial> details;
};

nlohmann::json to_json(const ValuationReport& r);

/// Samples coordinates sign * (r + p k) * p^e with r in [1, p-1], k in [0, 3],
/// e in [-bound, bound] for P5..P8, and compares exact valuations of the chart
/// point against tropical_p9 of the exponents.
ValuationReport valuation_agreement(std::int64_t prime, int trials, std::uint64_t seed,
                                    std::int64_t bound = 3);

/// One trial on explicit coordinates; nullopt when some factor vanishes.
std::optional<ValuationTrial> valuation_trial(const std::array<std::array<Rat, 3>, 4>& coords,
                                              std::int64_t prime, int trial = 0);

}  // namespace cb
