#pragma once

#include <optional>

#include "rfa/numerics.hpp"
#include "rfa/real_function.hpp"

namespace rfa {

/// Exponent p in [1, inf] of the solution space. Infinity is a distinct
/// state (not a large double), so the scale threshold |b|^{1/p} is exactly 1
/// there and regime comparisons stay exact.
class LebesgueExponent {
public:
  static LebesgueExponent finite(double p);
  static LebesgueExponent infinite() { return LebesgueExponent(); }

  bool is_infinite() const { return infinite_; }
  /// Finite value; throws for the infinite exponent.
  double value() const;
  /// |b|^{1/p}; exactly 1 when infinite (any b != 0).
  double scale_root(double abs_b) const;

private:
  LebesgueExponent() : p_(0.0), infinite_(true) {}
  explicit LebesgueExponent(double p) : p_(p), infinite_(false) {}

  double p_;
  bool infinite_;
};

/// Which geometric series solves f(x) - a f(bx) = g(x).
enum class Regime { Contractive, Expansive };

/// Parameters of the equation together with the ambient exponent.
struct EquationParams {
  double a = 0.0;
  double b = 2.0;
  LebesgueExponent p = LebesgueExponent::infinite();

  /// Critical scale |b|^{1/p}. b must be nonzero.
  double critical_scale() const;

  /// Contractive iff |a| < |b|^{1/p}, Expansive iff |a| > |b|^{1/p}.
  /// The comparison is exact; sitting on the line throws ResonanceError.
  Regime regime() const;
};

/// Operator norm of u -> u(b .): |b|^{-1/p}, 1 for the sup norm.
double t_norm(const EquationParams& params);

/// x -> f(b x); b must be nonzero. The result is periodic only when f is
/// periodic and b is an integer.
RealFunction apply_T(double b, const RealFunction& f);

/// x -> f(x) - a f(b x), the left-hand side of the equation.
RealFunction apply_M(const EquationParams& params, const RealFunction& f);

struct Bounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Two-sided norm bound for the equation operator applied to a function of
/// known norm: |1 - |a| / |b|^{1/p}| nf <= ||f - a f(b.)|| <= (1 + |a| / |b|^{1/p}) nf.
Bounds sandwich_bounds(const EquationParams& params, double norm_f);

/// Sup-norm distance between the right-hand side and the contractive
/// solution: ||g - f||_inf <= |a| / (1 - |a|) ||g||_inf. Requires |a| < 1.
double smoothing_distance_bound(double a, double sup_norm_g);

/// |<u(b.), v> - (1/b) <u, v(./b)>| by quadrature on iv — the duality
/// relation that should vanish for integrable u, v concentrated inside iv.
double adjoint_identity_residual(double b, const RealFunction& u,
                                 const RealFunction& v, QuadratureSpec q,
                                 Interval iv);

/// Truncated geometric-series solution with a certified sup-norm tail bound.
/// Contractive: f = sum_{n>=0} a^n g(b^n x); expansive: f = -sum_{n>=1}
/// a^{-n} g(b^{-n} x).
class SeriesSolution {
public:
  SeriesSolution(EquationParams params, RealFunction g, Regime regime,
                 int truncation, double tail_bound);

  double operator()(double x) const;
  const EquationParams& params() const { return params_; }
  Regime regime() const { return regime_; }
  /// Number of retained terms (>= 1).
  int truncation() const { return truncation_; }
  /// Sup-norm bound on the discarded tail; <= the tol passed to solve().
  double tail_bound() const { return tail_bound_; }
  RealFunction as_function() const;

private:
  EquationParams params_;
  RealFunction g_;
  Regime regime_;
  int truncation_;
  double tail_bound_;
};

/// Solve f(x) - a f(bx) = g(x) by the series of the regime the parameters
/// select. Pass a known bound on sup |g| or nullopt to have one estimated.
/// Throws ResonanceError on |a| = |b|^{1/p}; RegimeError when the selected
/// branch has pointwise ratio >= 1 (its series converges in norm only, which
/// a pointwise evaluator cannot honour); InvalidArgument for b = 0 (see
/// solve_b_zero) or a non-positive tolerance.
SeriesSolution solve(const EquationParams& params, const RealFunction& g,
                     std::optional<double> sup_norm_g = std::nullopt,
                     double tol = 1e-10);

/// Degenerate b = 0 branch: f(x) = g(x) + a/(1-a) g(0) pointwise, a != 1.
/// g(0) is an explicit argument because the caller may know it exactly.
RealFunction solve_b_zero(double a, const RealFunction& g, double g_at_zero);

}  // namespace rfa
