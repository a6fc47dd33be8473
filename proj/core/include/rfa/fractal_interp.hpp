#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rfa/functional_equation.hpp"
#include "rfa/real_function.hpp"

namespace rfa {

/// One segment of a piecewise right-hand side, living on the local
/// coordinate [0,1]. Built-in shapes know their one-sided limits exactly;
/// custom callables fall back to polynomial extrapolation through the
/// offsets 1e-4, 1e-5, 1e-6 and are flagged approximate.
class Piece {
public:
  static Piece constant(double c);
  /// Straight line with the given endpoint values.
  static Piece affine(double at0, double at1);
  /// sum_i coeffs[i] x^i.
  static Piece polynomial(std::vector<double> coeffs);
  /// amplitude * cos(omega x + phase) + offset.
  static Piece trig(double amplitude, double omega, double phase, double offset);
  /// Opaque callable. With allow_numeric_limits = false, asking for a
  /// one-sided limit throws UnsupportedFunction instead of estimating.
  static Piece custom(std::function<double(double)> f,
                      bool allow_numeric_limits = true);

  double operator()(double x) const;
  /// One-sided limits into the domain: from the right at x in [0,1), from
  /// the left at x in (0,1].
  double limit_from_right(double x) const;
  double limit_from_left(double x) const;
  /// False when limits are numeric estimates rather than closed forms.
  bool analytic_limits() const;

private:
  enum class Kind { Polynomial, Trig, Custom };
  Piece(Kind k) : kind_(k) {}

  Kind kind_;
  std::vector<double> coeffs_;           // Polynomial
  double amp_ = 0, omega_ = 0, phase_ = 0, offset_ = 0;  // Trig
  std::function<double(double)> fn_;     // Custom
  bool numeric_limits_ok_ = true;
};

/// A right-hand side on [0,1] glued from N >= 2 equal pieces, extended to a
/// unit-periodic function. Conventions: value(0) = piece_1(0); for x in
/// ((n-1)/N, n/N] the value is piece_n(N x - n + 1), i.e. nodes belong to
/// the piece on their left; value(x) = value(x - 1) for x > 1, so positive
/// integers map to piece_N(1). Under this gluing the closed-form node values
/// of the interpolation construction are exact.
class PiecewiseG {
public:
  explicit PiecewiseG(std::vector<Piece> pieces);

  int piece_count() const { return static_cast<int>(pieces_.size()); }
  /// 1-based segment access, n in [1, N].
  const Piece& piece(int n) const;
  double operator()(double x) const;
  /// value at every positive integer: piece_N(1).
  double value_at_one() const;
  RealFunction as_function() const;

private:
  std::vector<Piece> pieces_;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Hutchinson system w_n(x, y) = ((x + n - 1)/N, a y + q_n(x)) whose
/// attractor is a function graph over [0,1].
class IfsSpec {
public:
  IfsSpec(double a, std::vector<Piece> q, std::vector<double> q_at_zero);

  int map_count() const { return static_cast<int>(q_.size()); }
  double vertical_scale() const { return a_; }
  /// Vertical shift map of branch n at local coordinate x in [0,1];
  /// q_n(0) is the stored right limit, not the raw piece value.
  double q_at(int n, double x) const;
  Point2 map(int n, Point2 p) const;

private:
  double a_;
  std::vector<Piece> q_;
  std::vector<double> q0_;
};

/// Node values of the fixed point of f - a f(N.) = g at the uniform nodes
/// n/N: y_0 = g(0)/(1-a), y_N = g(1)/(1-a), and in between
/// y_n = g(n/N) + a/(1-a) g(1). Requires |a| < 1 and N >= 1.
std::vector<double> interpolation_values(const RealFunction& g, double a, int N);

/// IFS whose attractor is the graph of the solution with right-hand side g:
/// q_n(x) = g((x + n - 1)/N), with the value at x = 0 replaced by the right
/// limit into segment n.
IfsSpec ifs_from_g(const PiecewiseG& g, double a);

/// True when every interior jump of g equals a/(1-a) (g(1) - g(0)) within
/// 1e-12 — exactly the condition for the interpolant to be continuous.
/// Exact for built-in pieces; custom pieces contribute extrapolated limits.
bool continuity_condition(const PiecewiseG& g, double a);

/// Right-hand side g = g0 + f0 - a f0(N .) built from a base interpolant f0
/// (unit-periodic, given on [0,1]) and a perturbation g0 with
/// g0(0) = g0(1) = 0. Solving with this g reproduces f0 plus the solution
/// for g0. Premises are spot-checked; a violation throws ContractViolation
/// naming the failed condition.
PiecewiseG g_from_base(const RealFunction& f0, const RealFunction& g0,
                       double a, int N);

/// The truncated-series interpolant for right-hand side g, ready for many
/// evaluations. b = piece count, sup norm taken over one period.
SeriesSolution fif_solution(const PiecewiseG& g, double a, double tol = 1e-10);

/// One-off evaluation of the interpolant at x.
double evaluate_fif(const PiecewiseG& g, double a, double x, double tol = 1e-10);

struct PointCloud {
  std::vector<Point2> points;
};

/// Play the chaos game on the system: iterate from `seed`, choosing branches
/// uniformly with a 64-bit generator seeded by rng_seed, discard the first
/// burn_in points and keep the remaining iterations - burn_in. Deterministic
/// for fixed arguments.
PointCloud render_attractor(const IfsSpec& ifs, std::int64_t iterations,
                            Point2 seed, int burn_in, std::uint64_t rng_seed);

/// Uniform-node interpolation data: values y_0..y_N at x_n = n/N.
struct InterpolationProblem {
  double a = 0.5;
  std::vector<double> y;
  int node_intervals() const { return static_cast<int>(y.size()) - 1; }
};

/// A right-hand side whose interpolant passes through every (n/N, y_n):
/// segment 1 runs affinely from (1-a) y_0 to y_1 - a y_N, interior segments
/// are constants y_n - a y_N, the last segment is the constant (1-a) y_N.
PiecewiseG piecewise_from_data(const InterpolationProblem& problem);

}  // namespace rfa
