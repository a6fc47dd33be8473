#include "rfa/box_dimension.hpp"

#include <cmath>
#include <string>

#include "rfa/errors.hpp"
#include "rfa/numerics.hpp"

namespace rfa {

GraphSample::GraphSample(std::vector<double> ys) : ys_(std::move(ys)) {
  const int S = size();
  if (S < 4096 || !is_power_of_two(S)) {
    throw InvalidArgument("graph sample needs a power-of-two size >= 4096");
  }
  for (int i = 0; i < S; ++i) {
    if (!std::isfinite(ys_[static_cast<std::size_t>(i)])) {
      throw InvalidArgument("graph sample: ordinate " + std::to_string(i) +
                            " is not finite");
    }
  }
}

GraphSample GraphSample::from_function(const std::function<double(double)>& f,
                                       int S) {
  if (S < 4096 || !is_power_of_two(S)) {
    throw InvalidArgument("graph sample needs a power-of-two size >= 4096");
  }
  std::vector<double> ys(static_cast<std::size_t>(S));
  for (int i = 0; i < S; ++i) {
    ys[static_cast<std::size_t>(i)] = f((i + 0.5) / S);
  }
  return GraphSample(std::move(ys));
}

double GraphSample::abscissa(int i) const {
  if (i < 0 || i >= size()) {
    throw InvalidArgument("sample index outside the graph");
  }
  return (i + 0.5) / size();
}

namespace {

void check_scale(const GraphSample& gs, int j) {
  if (j < 0) throw InvalidArgument("scale index j must be >= 0");
  const int cols = 1 << j;
  if (j >= 31 || cols > gs.size() / 4) {
    throw InvalidArgument("scale 2^-" + std::to_string(j) +
                          " too fine for " + std::to_string(gs.size()) +
                          " samples; need 2^j <= S/4");
  }
}

}  // namespace

std::int64_t box_count(const GraphSample& gs, int j) {
  check_scale(gs, j);
  const int cols = 1 << j;
  const int per = gs.size() / cols;
  const double eps = std::ldexp(1.0, -j);
  const auto& ys = gs.ordinates();
  std::int64_t total = 0;
  for (int c = 0; c < cols; ++c) {
    double lo = ys[static_cast<std::size_t>(c) * per];
    double hi = lo;
    for (int i = 1; i < per; ++i) {
      const double v = ys[static_cast<std::size_t>(c) * per + i];
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
    total += static_cast<std::int64_t>(std::ceil((hi - lo) / eps)) + 1;
  }
  return total;
}

std::int64_t box_count_anchored(const GraphSample& gs, int j, double anchor) {
  check_scale(gs, j);
  if (!std::isfinite(anchor)) {
    throw InvalidArgument("anchor offset must be finite");
  }
  const int cols = 1 << j;
  const int per = gs.size() / cols;
  const double eps = std::ldexp(1.0, -j);
  const auto& ys = gs.ordinates();

  double origin = ys[0];
  for (double v : ys) origin = std::min(origin, v);
  origin += anchor;

  std::int64_t total = 0;
  for (int c = 0; c < cols; ++c) {
    double lo = ys[static_cast<std::size_t>(c) * per];
    double hi = lo;
    for (int i = 1; i < per; ++i) {
      const double v = ys[static_cast<std::size_t>(c) * per + i];
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
    const auto cell_lo =
        static_cast<std::int64_t>(std::floor((lo - origin) / eps));
    const auto cell_hi =
        static_cast<std::int64_t>(std::floor((hi - origin) / eps));
    total += cell_hi - cell_lo + 1;
  }
  return total;
}

double estimate_dim(const GraphSample& gs, ScaleLadder ladder) {
  if (ladder.j_min < 0 || ladder.j_min >= ladder.j_max) {
    throw InvalidArgument("scale ladder needs 0 <= j_min < j_max");
  }
  check_scale(gs, ladder.j_max);
  std::vector<double> xs, ys;
  xs.reserve(static_cast<std::size_t>(ladder.j_max - ladder.j_min) + 1);
  ys.reserve(xs.capacity());
  for (int j = ladder.j_min; j <= ladder.j_max; ++j) {
    xs.push_back(static_cast<double>(j));
    ys.push_back(std::log2(static_cast<double>(box_count(gs, j))));
  }
  return fit_line(xs, ys).slope;
}

double theoretical_dim(double a, double b) {
  if (!(b > 1.0)) {
    throw InvalidArgument("closed-form dimension requires b > 1");
  }
  if (!(std::abs(a) < 1.0)) {
    throw InvalidArgument("closed-form dimension requires |a| < 1");
  }
  if (!(std::abs(a * b) > 1.0)) {
    throw RegimeError("closed-form dimension asserted for |a b| > 1 only; "
                      "got |a b| = " + std::to_string(std::abs(a * b)));
  }
  return 2.0 + std::log(std::abs(a)) / std::log(b);
}

}  // namespace rfa
