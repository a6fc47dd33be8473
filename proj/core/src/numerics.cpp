#include "rfa/numerics.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "rfa/errors.hpp"

namespace rfa {

namespace {

// Sum f at the midpoints of cells [i0, i0+count) without weights, splitting
// the range in half until a direct loop takes over. The tree shape depends
// only on the resolution, never on the values.
double midpoint_sum(const std::function<double(double)>& f, double lo,
                    double h, std::int64_t i0, std::int64_t count) {
  if (count <= 64) {
    double acc = 0.0;
    for (std::int64_t i = 0; i < count; ++i) {
      const double x = lo + (static_cast<double>(i0 + i) + 0.5) * h;
      const double v = f(x);
      if (!std::isfinite(v)) {
        throw EvaluationError("integrand returned a non-finite value at x = " +
                              std::to_string(x));
      }
      acc += v;
    }
    return acc;
  }
  const std::int64_t half = count / 2;
  return midpoint_sum(f, lo, h, i0, half) +
         midpoint_sum(f, lo, h, i0 + half, count - half);
}

}  // namespace

double integrate(const std::function<double(double)>& f, Interval iv,
                 QuadratureSpec q) {
  if (!(iv.lo < iv.hi)) {
    throw InvalidArgument("integration interval requires lo < hi");
  }
  if (!is_power_of_two(q.resolution) || q.resolution < 2) {
    throw InvalidArgument(
        "quadrature resolution must be a power of two >= 2, got " +
        std::to_string(q.resolution));
  }
  const double h = iv.length() / q.resolution;
  return midpoint_sum(f, iv.lo, h, 0, q.resolution) * h;
}

double integrate_error_estimate(const std::function<double(double)>& f,
                                Interval iv, QuadratureSpec q) {
  QuadratureSpec coarse = q;
  coarse.resolution = q.resolution / 2;
  return std::abs(integrate(f, iv, q) - integrate(f, iv, coarse));
}

LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size()) {
    throw InvalidArgument("fit_line: abscissa and ordinate counts differ");
  }
  if (xs.size() < 2) {
    throw InvalidArgument("fit_line needs at least two points");
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    sxx += dx * dx;
    sxy += dx * (ys[i] - my);
  }
  if (sxx == 0.0) {
    throw DegenerateFitError("fit_line: all abscissae coincide");
  }
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

double geometric_tail(double r, int start) {
  if (start < 0) {
    throw InvalidArgument("geometric_tail: start must be >= 0");
  }
  if (r < 0.0) {
    throw InvalidArgument("geometric_tail: ratio must be >= 0");
  }
  if (r >= 1.0) {
    throw DivergenceError("geometric_tail: ratio " + std::to_string(r) +
                          " >= 1, the tail is infinite");
  }
  return std::pow(r, start) / (1.0 - r);
}

double lu_determinant(std::vector<double> m, int n) {
  if (n < 1 || m.size() != static_cast<std::size_t>(n) * n) {
    throw InvalidArgument("lu_determinant: matrix storage does not match n");
  }
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(m[static_cast<std::size_t>(col) * n + col]);
    for (int row = col + 1; row < n; ++row) {
      const double cand = std::abs(m[static_cast<std::size_t>(row) * n + col]);
      if (cand > best) {
        best = cand;
        pivot = row;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(m[static_cast<std::size_t>(pivot) * n + j],
                  m[static_cast<std::size_t>(col) * n + j]);
      }
      det = -det;
    }
    const double d = m[static_cast<std::size_t>(col) * n + col];
    det *= d;
    for (int row = col + 1; row < n; ++row) {
      const double factor = m[static_cast<std::size_t>(row) * n + col] / d;
      for (int j = col; j < n; ++j) {
        m[static_cast<std::size_t>(row) * n + j] -=
            factor * m[static_cast<std::size_t>(col) * n + j];
      }
    }
  }
  return det;
}

double pairwise_sum(const double* values, std::size_t count) {
  if (count == 0) return 0.0;
  if (count <= 64) {
    double acc = 0.0;
    for (std::size_t i = 0; i < count; ++i) acc += values[i];
    return acc;
  }
  const std::size_t half = count / 2;
  return pairwise_sum(values, half) + pairwise_sum(values + half, count - half);
}

}  // namespace rfa
