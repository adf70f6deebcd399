#include "cb/verify.hpp"

#include "cb/cbpoint.hpp"
#include "cb/fano.hpp"
#include "cb/pencil.hpp"
#include "cb/random.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace cb {

Config8 SpecializedConfig::config() const {
  const auto& p = params;
  return Config8({ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1), ProjPoint(1, 1, 1),
                  ProjPoint(1, p[0], p[1]), ProjPoint(1, p[2], p[3]), ProjPoint(1, p[4], p[5]),
                  ProjPoint(1, p[6], p[7])});
}

namespace {

// Last-row column of each cofactor A1..A7 (0-based).
constexpr std::array<int, 7> kCofactorColumns{7, 8, 3, 4, 5, 1, 2};

std::array<Rat, 10> chart_monomials(const Rat& u, const Rat& v) {
  return {1, u, v, u * u, u * v, v * v, u * u * u, u * u * v, u * v * v, v * v * v};
}

}  // namespace

bool MinorIdentityData::degenerate() const {
  for (const auto& x : expansion)
    if (x != 0) return false;
  return true;
}

Rat MinorIdentityData::evaluate(const Rat& u, const Rat& v) const {
  const auto mono = chart_monomials(u, v);
  Rat sum = 0;
  for (std::size_t k = 0; k < 10; ++k) sum += expansion[k] * mono[k];
  return sum;
}

MinorIdentityData cofactors_A(const SpecializedConfig& s, int minor_index) {
  if (minor_index < 1 || minor_index > 10) throw std::invalid_argument("minor index must be 1..10");
  const RatMatrix rows = cubic_monomial_matrix(s.config().points());  // 8 x 10
  const std::size_t deleted = static_cast<std::size_t>(minor_index - 1);

  MinorIdentityData out{minor_index, {}, {}};
  const RatMatrix kept = rows.without_col(deleted);  // 8 x 9
  for (std::size_t col = 0; col < 10; ++col) {
    if (col == deleted) continue;
    // Position of this column inside the 9x9 minor, and the sign of the
    // cofactor at row 9 (1-based) of that minor.
    const std::size_t pos = col < deleted ? col : col - 1;
    const int sign = (8 + pos) % 2 == 0 ? 1 : -1;
    out.expansion[col] = sign * ff_determinant(kept.without_col(pos));
  }
  for (std::size_t a = 0; a < 7; ++a) out.cofactors[a] = out.expansion[kCofactorColumns[a]];
  return out;
}

std::pair<Rat, Rat> predicted_chart_point(const SpecializedConfig& s) {
  const CBIngredients g = ingredients(s.config(), {1, 2, 3});
  if (g.cx == 0 || g.dy == 0 || g.dz == 0) {
    throw std::domain_error("chart point undefined: Cx, Dy or Dz vanishes");
  }
  return {g.dx * g.cy / (g.cx * g.dy), g.dx * g.cz / (g.cx * g.dz)};
}

nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) failures.push_back({{"trial", f.trial}, {"detail", f.detail}});
  return {{"identity", r.identity},   {"seed", r.seed},
          {"bound", r.bound},         {"trials", r.trials},
          {"rejected_draws", r.rejected_draws}, {"failures", failures},
          {"notes", r.notes},         {"status", r.passed() ? "pass" : "fail"}};
}

namespace {

constexpr int kMaxRejections = 1000;

// A trial either rejects its draw (returns nullopt), passes (empty string) or
// fails with a description.
using TrialResult = std::optional<std::string>;
using Trial = std::function<TrialResult(Rng&, std::int64_t, VerifyReport&)>;

std::array<ProjPoint, 6> random_six(Rng& rng, std::int64_t bound) {
  auto p = [&] { return rng.integer_point(bound); };
  return {p(), p(), p(), p(), p(), p()};
}

std::array<ProjPoint, 7> rest_of(const Config8& c, std::array<PointIndex, 7> labels) {
  return {c(labels[0]), c(labels[1]), c(labels[2]), c(labels[3]),
          c(labels[4]), c(labels[5]), c(labels[6])};
}

std::string mismatch(const Rat& lhs, const Rat& rhs) {
  return "lhs " + to_string(lhs) + " != rhs " + to_string(rhs);
}

TrialResult conic_expansion(Rng& rng, std::int64_t bound, VerifyReport&) {
  const auto six = random_six(rng, bound);
  const Rat lhs = conic_det(six), rhs = conic_bracket_expansion(six);
  return lhs == rhs ? "" : mismatch(lhs, rhs);
}

TrialResult singular_cubic_expansion(Rng& rng, std::int64_t bound, VerifyReport&) {
  const Config8 c = rng.integer_config(bound);
  const Rat lhs = singular_cubic_det(c(7), rest_of(c, {1, 2, 3, 4, 5, 6, 8}));
  const Rat rhs = singular_cubic_bracket_expansion(c.points());
  return lhs == rhs ? "" : mismatch(lhs, rhs);
}

TrialResult equivariance_c(Rng& rng, std::int64_t bound, VerifyReport&) {
  const auto six = random_six(rng, bound);
  const ProjTransform t = rng.transform(bound);
  std::array<ProjPoint, 6> moved = six;
  for (auto& p : moved) p = apply_transform(t, p);
  const Rat lhs = conic_det(moved), rhs = pow(t.det(), 4) * conic_det(six);
  return lhs == rhs ? "" : mismatch(lhs, rhs);
}

TrialResult equivariance_d(Rng& rng, std::int64_t bound, VerifyReport&) {
  const Config8 c = rng.integer_config(bound);
  const ProjTransform t = rng.transform(bound);
  const Config8 moved = c.transformed(t);
  const std::array<PointIndex, 7> rest{2, 3, 4, 5, 6, 7, 8};
  const Rat lhs = singular_cubic_det(moved(1), rest_of(moved, rest));
  const Rat rhs = pow(t.det(), 9) * singular_cubic_det(c(1), rest_of(c, rest));
  return lhs == rhs ? "" : mismatch(lhs, rhs);
}

TrialResult cayley_identity(Rng& rng, std::int64_t bound, VerifyReport&) {
  const Config8 c = rng.integer_config(bound);
  if (!c.degeneracy().nondegenerate()) return std::nullopt;
  const ProjPoint p9 = p9_determinantal(c, default_triple(c));
  const auto holds = cayley_identity_holds(c, p9);
  if (!holds) return std::nullopt;
  return *holds ? "" : "(5,6,7,8)_9 != (5,6,7,8)_1234 at P9 = " + to_string(p9);
}

TrialResult fano_symmetry(Rng& rng, std::int64_t bound, VerifyReport&) {
  const Config8 c = rng.integer_config(bound);
  std::array<PointIndex, 8> perm{1, 2, 3, 4, 5, 6, 7, 8};
  for (int i = 7; i > 0; --i) std::swap(perm[i], perm[rng.uniform(0, i)]);
  FanoTuple t{{perm[0], perm[1], perm[2], perm[3], perm[4], perm[5], perm[6]}, perm[7]};
  FanoTuple shifted{{t.seven[6], t.seven[0], t.seven[1], t.seven[2], t.seven[3], t.seven[4],
                     t.seven[5]},
                    t.eighth};
  FanoTuple mirrored{{t.seven[6], t.seven[5], t.seven[4], t.seven[3], t.seven[2], t.seven[1],
                      t.seven[0]},
                     t.eighth};
  const Rat f = fano_monomial(c, t);
  if (fano_monomial(c, shifted) != f) return "cyclic shift: " + mismatch(fano_monomial(c, shifted), f);
  if (fano_monomial(c, mirrored) != -f) return "reversal: " + mismatch(fano_monomial(c, mirrored), -f);
  return "";
}

TrialResult minor_identities(Rng& rng, std::int64_t bound, VerifyReport& report) {
  SpecializedConfig s;
  for (auto& x : s.params) x = rng.uniform(-bound, bound);
  if (!s.config().degeneracy().nondegenerate()) return std::nullopt;
  std::pair<Rat, Rat> uv;
  try {
    uv = predicted_chart_point(s);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
  std::ostringstream failures;
  std::vector<int> degenerate;
  for (int minor = 1; minor <= 10; ++minor) {
    const auto data = cofactors_A(s, minor);
    if (data.degenerate()) degenerate.push_back(minor);
    const Rat value = data.evaluate(uv.first, uv.second);
    if (value != 0) failures << "minor " << minor << " evaluates to " << to_string(value) << "; ";
  }
  if (report.notes.empty()) {
    std::ostringstream note;
    note << "identically vanishing minors (deleted column):";
    for (int m : degenerate) note << ' ' << m;
    report.notes.push_back(note.str());
  }
  return failures.str();
}

TrialResult cross_ratio_invariance(Rng& rng, std::int64_t bound, VerifyReport&) {
  const Config8 c = rng.integer_config(bound);
  const ProjTransform t = rng.transform(bound);
  const Config8 moved = c.transformed(t);
  try {
    const std::array<ProjPoint, 4> q{c(1), c(2), c(3), c(4)};
    const std::array<ProjPoint, 4> tq{moved(1), moved(2), moved(3), moved(4)};
    const std::array<ProjPoint, 4> quad{c(5), c(6), c(7), c(8)};
    const std::array<ProjPoint, 4> tquad{moved(5), moved(6), moved(7), moved(8)};
    const Rat lines = cross_ratio_lines(c(5), q), tlines = cross_ratio_lines(moved(5), tq);
    if (lines != tlines) return "lines: " + mismatch(tlines, lines);
    const Rat conics = cross_ratio_conics(quad, q), tconics = cross_ratio_conics(tquad, tq);
    if (conics != tconics) return "conics: " + mismatch(tconics, conics);
  } catch (const DegenerateCrossRatio&) {
    return std::nullopt;
  }
  return "";
}

TrialResult cross_method(Rng& rng, std::int64_t bound, VerifyReport&) {
  const Config8 c = rng.integer_config(bound);
  if (!c.degeneracy().nondegenerate()) return std::nullopt;
  const Triple t = default_triple(c);
  const ProjPoint det = p9_determinantal(c, t);
  if (p9_reduced(c, t) != det) return "reduced differs from determinantal";
  if (p9_cross_ratio(c) != det) return "cross-ratio differs from determinantal";
  const auto fano = p9_fano(c, FanoMode::reduced).vector;
  if (canonical(fano) != det) return "Fano sum differs from determinantal";
  return "";
}

TrialResult divisibility_degree(Rng& rng, std::int64_t bound, VerifyReport&) {
  const Config8 c = rng.integer_config(bound);
  if (!c.degeneracy().nondegenerate()) return std::nullopt;
  const Triple t = default_triple(c);
  const auto raw = p9_determinantal_vector(c, t);
  const Rat b = bracket(c(t.i), c(t.j), c(t.k));
  for (const auto& x : raw) {
    if (!is_integer(x / b)) return "coordinate not divisible by the triple bracket";
  }
  const PointIndex which = static_cast<PointIndex>(rng.uniform(1, 8));
  Rat lambda = rng.uniform(2, 9);
  if (rng.uniform(0, 1)) lambda = -lambda;
  const Config8 scaled = c.with_point(which, c(which).scaled(lambda));
  const bool in_triple = which == t.i || which == t.j || which == t.k;
  const auto raw_scaled = p9_determinantal_vector(scaled, t);
  const Rat factor = pow(lambda, in_triple ? 9 : 8);
  for (std::size_t k = 0; k < 3; ++k) {
    if (raw_scaled[k] != factor * raw[k]) return "determinantal vector degree mismatch";
  }
  const auto fano = p9_fano(c, FanoMode::reduced).vector;
  const auto fano_scaled = p9_fano(scaled, FanoMode::reduced).vector;
  for (std::size_t k = 0; k < 3; ++k) {
    if (fano_scaled[k] != pow(lambda, 8) * fano[k]) return "Fano vector degree mismatch";
  }
  return "";
}

const std::map<std::string, Trial>& registry() {
  static const std::map<std::string, Trial> trials{
      {"conic-expansion", conic_expansion},
      {"singular-cubic-expansion", singular_cubic_expansion},
      {"equivariance-C", equivariance_c},
      {"equivariance-D", equivariance_d},
      {"cayley-identity", cayley_identity},
      {"fano-symmetry", fano_symmetry},
      {"minor-identities", minor_identities},
      {"cross-ratio-invariance", cross_ratio_invariance},
      {"cross-method", cross_method},
      {"divisibility-degree", divisibility_degree},
  };
  return trials;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

VerifyReport run_identity_suite(const std::string& which, int trials, std::uint64_t seed,
                                std::int64_t bound) {
  const auto it = registry().find(which);
  if (it == registry().end()) throw std::invalid_argument("unknown identity '" + which + "'");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");

  VerifyReport report;
  report.identity = which;
  report.seed = seed;
  report.bound = bound;
  report.trials = trials;
  Rng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    int rejections = 0;
    for (;;) {
      const TrialResult r = it->second(rng, bound, report);
      if (r) {
        if (!r->empty()) report.failures.push_back({trial, *r});
        break;
      }
      ++report.rejected_draws;
      if (++rejections >= kMaxRejections) {
        throw std::runtime_error(which + ": too many degenerate draws at bound " +
                                 std::to_string(bound));
      }
    }
  }
  return report;
}

}  // namespace cb
