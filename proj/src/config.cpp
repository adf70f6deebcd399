#include "cb/config.hpp"

#include <algorithm>
#include <sstream>

namespace cb {

std::string DegeneracyReport::summary() const {
  if (nondegenerate()) return "nondegenerate";
  std::ostringstream out;
  const char* sep = "";
  for (const auto& p : coincident_pairs) {
    out << sep << "P" << p[0] << "=P" << p[1];
    sep = ", ";
  }
  for (const auto& t : collinear_triples) {
    out << sep << "collinear [" << t[0] << t[1] << t[2] << "]";
    sep = ", ";
  }
  for (const auto& s : coconic_sextuples) {
    out << sep << "coconic {";
    for (auto i : s) out << i;
    out << "}";
    sep = ", ";
  }
  return out.str();
}

DegeneracyReport degeneracy_report(std::span<const ProjPoint, 8> points) {
  DegeneracyReport report;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      if (same_point(points[a], points[b])) report.coincident_pairs.push_back({a + 1, b + 1});

  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int c = b + 1; c < 8; ++c)
        if (bracket(points[a], points[b], points[c]) == 0)
          report.collinear_triples.push_back({a + 1, b + 1, c + 1});

  // A sextuple is the complement of a pair.
  for (int skip1 = 0; skip1 < 8; ++skip1)
    for (int skip2 = skip1 + 1; skip2 < 8; ++skip2) {
      std::array<PointIndex, 6> labels{};
      std::size_t n = 0;
      for (int i = 0; i < 8; ++i)
        if (i != skip1 && i != skip2) labels[n++] = i + 1;
      const std::array<ProjPoint, 6> six{points[labels[0] - 1], points[labels[1] - 1],
                                         points[labels[2] - 1], points[labels[3] - 1],
                                         points[labels[4] - 1], points[labels[5] - 1]};
      if (conic_det(six) == 0) report.coconic_sextuples.push_back(labels);
    }
  std::sort(report.coconic_sextuples.begin(), report.coconic_sextuples.end());
  return report;
}

Config8::Config8(std::array<ProjPoint, 8> points)
    : points_(std::move(points)), cache_(std::make_shared<Cache>()) {}

const DegeneracyReport& Config8::degeneracy() const {
  std::call_once(cache_->once,
                 [&] { cache_->report = std::make_unique<DegeneracyReport>(degeneracy_report(points_)); });
  return *cache_->report;
}

Config8 Config8::relabeled(const std::array<PointIndex, 8>& order) const {
  return Config8({(*this)(order[0]), (*this)(order[1]), (*this)(order[2]), (*this)(order[3]),
                  (*this)(order[4]), (*this)(order[5]), (*this)(order[6]), (*this)(order[7])});
}

Config8 Config8::transformed(const ProjTransform& t) const {
  auto f = [&](int i) { return apply_transform(t, points_[i]); };
  return Config8({f(0), f(1), f(2), f(3), f(4), f(5), f(6), f(7)});
}

Config8 Config8::with_point(PointIndex label, const ProjPoint& p) const {
  auto pts = points_;
  pts[label - 1] = p;
  return Config8(pts);
}

}  // namespace cb
