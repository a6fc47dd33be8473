#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace rfa {

/// Closed interval [lo, hi] with lo < hi.
struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  double length() const { return hi - lo; }
};

/// Quadrature scheme. Midpoint is the only scheme on purpose: it never
/// evaluates on cell boundaries, where the piecewise functions in this
/// library carry their jumps.
enum class QuadScheme { Midpoint };

struct QuadratureSpec {
  int resolution = 1 << 14;  // number of cells; power of two >= 2
  QuadScheme scheme = QuadScheme::Midpoint;
};

/// Composite midpoint rule over `iv`. Cell values are accumulated with a
/// fixed pairwise tree, so results are bit-for-bit reproducible regardless
/// of optimization level. Throws EvaluationError when the integrand returns
/// a non-finite value (naming the abscissa), InvalidArgument on a bad
/// interval or resolution.
double integrate(const std::function<double(double)>& f, Interval iv,
                 QuadratureSpec q = {});

/// A-posteriori refinement proxy |I(res) - I(res/2)|.
double integrate_error_estimate(const std::function<double(double)>& f,
                                Interval iv, QuadratureSpec q = {});

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Ordinary least squares y ~ slope x + intercept. Throws DegenerateFitError
/// when all abscissae coincide, InvalidArgument on a size mismatch or fewer
/// than two points.
LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys);

/// Tail bound sum_{n >= start} r^n = r^start / (1 - r) for 0 <= r < 1.
/// Throws DivergenceError when r >= 1, InvalidArgument for r < 0 or a
/// negative start.
double geometric_tail(double r, int start);

/// Determinant of an n x n row-major matrix by LU with partial pivoting.
double lu_determinant(std::vector<double> m, int n);

/// Deterministic pairwise sum of values[0..count).
double pairwise_sum(const double* values, std::size_t count);

inline bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace rfa
