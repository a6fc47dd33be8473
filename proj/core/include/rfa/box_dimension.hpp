#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace rfa {

/// Ordinates of a graph over [0,1], sampled at the midpoints (i+0.5)/S.
/// S must be a power of two >= 4096, so that every dyadic column of the
/// counting ladder holds at least a handful of samples.
class GraphSample {
public:
  explicit GraphSample(std::vector<double> ys);
  static GraphSample from_function(const std::function<double(double)>& f,
                                   int S);

  int size() const { return static_cast<int>(ys_.size()); }
  double abscissa(int i) const;
  const std::vector<double>& ordinates() const { return ys_; }

private:
  std::vector<double> ys_;
};

/// Dyadic scales eps_j = 2^-j for j in [j_min, j_max].
struct ScaleLadder {
  int j_min = 4;
  int j_max = 12;
};

/// Cells of size eps = 2^-j needed to cover the sampled graph, counted per
/// abscissa column as ceil(spread/eps) + 1 — the column-range count, which
/// does not depend on a grid anchor. Requires 2^j <= S/4.
std::int64_t box_count(const GraphSample& gs, int j);

/// Anchored variant: cells [k eps, (k+1) eps) offset by `anchor` from the
/// global minimum. Counts move with the anchor; reported alongside the
/// primary count to show the sensitivity, never fitted.
std::int64_t box_count_anchored(const GraphSample& gs, int j, double anchor);

/// Least-squares slope of log2(count) against j over the ladder — the
/// box-dimension estimate of the sampled graph.
double estimate_dim(const GraphSample& gs, ScaleLadder ladder = {});

/// Closed-form graph dimension 2 + ln|a| / ln b of the dilation-b solution;
/// asserted for b > 1, |a b| > 1, |a| < 1.
double theoretical_dim(double a, double b);

}  // namespace rfa
