#pragma once

#include "cb/config.hpp"

#include "json.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cb {

/// Eight points normalized to P1=(1:0:0), P2=(0:1:0), P3=(0:0:1), P4=(1:1:1),
/// P5=(1:a:b), P6=(1:c:d), P7=(1:e:f), P8=(1:g:h).
struct SpecializedConfig {
  std::array<Rat, 8> params;  // a..h
  Config8 config() const;
};

/// Last-row expansion of one 9x9 minor of the 9x10 cubic monomial matrix whose
/// rows are P1..P8 and the chart point (1, u, v).
struct MinorIdentityData {
  int minor_index;  // the deleted column, 1..10
  /// Coefficients of u^2v, uv^2, u^2, uv, v^2, u, v.
  std::array<Rat, 7> cofactors;
  /// Coefficients of every last-row monomial 1, u, v, u^2, uv, v^2, u^3, u^2v, uv^2, v^3
  /// (zero at the deleted column).
  std::array<Rat, 10> expansion;

  /// True when the minor vanishes identically in (u, v).
  bool degenerate() const;
  Rat evaluate(const Rat& u, const Rat& v) const;
};

MinorIdentityData cofactors_A(const SpecializedConfig& s, int minor_index);

/// The chart coordinates (u, v) = (y9/x9, z9/x9) predicted by the
/// determinantal formula: u = Dx Cy / (Cx Dy), v = Dx Cz / (Cx Dz).
/// Throws std::domain_error when Cx, Dy or Dz vanishes.
std::pair<Rat, Rat> predicted_chart_point(const SpecializedConfig& s);

struct VerifyFailure {
  int trial;
  std::string detail;
};

struct VerifyReport {
  std::string identity;
  std::uint64_t seed = 0;
  std::int64_t bound = 0;
  int trials = 0;
  int rejected_draws = 0;
  std::vector<VerifyFailure> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
};

nlohmann::json to_json(const VerifyReport& r);

const std::vector<std::string>& identity_names();

/// Evaluates both sides of the named identity exactly on `trials` seeded
/// random draws with integer coordinates in [-bound, bound]. Throws
/// std::invalid_argument for an unknown name or trials < 1.
VerifyReport run_identity_suite(const std::string& which, int trials, std::uint64_t seed,
                                std::int64_t bound);

}  // namespace cb
