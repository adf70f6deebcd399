#pragma once

#include "cb/projective.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <vector>

namespace cb {

/// Indices are 1-based throughout the public API, matching point labels P1..P8.
using PointIndex = int;

struct Triple {
  PointIndex i, j, k;
  friend bool operator==(const Triple&, const Triple&) = default;
};

struct DegeneracyReport {
  std::vector<std::array<PointIndex, 2>> coincident_pairs;
  std::vector<std::array<PointIndex, 3>> collinear_triples;
  std::vector<std::array<PointIndex, 6>> coconic_sextuples;

  /// True when the points are distinct, no three collinear and no six coconic.
  bool nondegenerate() const {
    return coincident_pairs.empty() && collinear_triples.empty() && coconic_sextuples.empty();
  }
  std::string summary() const;
  friend bool operator==(const DegeneracyReport&, const DegeneracyReport&) = default;
};

/// Exhaustive exact test of all 28 pairs, 56 triples and 28 sextuples.
DegeneracyReport degeneracy_report(std::span<const ProjPoint, 8> points);

/// Eight labelled points. The degeneracy report is computed once, on first
/// request, and shared between copies.
class Config8 {
 public:
  explicit Config8(std::array<ProjPoint, 8> points);

  const ProjPoint& operator()(PointIndex label) const { return points_[label - 1]; }
  const std::array<ProjPoint, 8>& points() const { return points_; }

  const DegeneracyReport& degeneracy() const;

  Config8 relabeled(const std::array<PointIndex, 8>& order) const;
  Config8 transformed(const ProjTransform& t) const;
  Config8 with_point(PointIndex label, const ProjPoint& p) const;

 private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<const DegeneracyReport> report;
  };
  std::array<ProjPoint, 8> points_;
  std::shared_ptr<Cache> cache_;
};

class DegenerateConfiguration : public std::domain_error {
 public:
  DegenerateConfiguration(const std::string& what, DegeneracyReport report)
      : std::domain_error(what), report_(std::move(report)) {}
  const DegeneracyReport& report() const { return report_; }

 private:
  DegeneracyReport report_;
};

}  // namespace cb
