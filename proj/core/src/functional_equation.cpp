#include "rfa/functional_equation.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "rfa/errors.hpp"

namespace rfa {

LebesgueExponent LebesgueExponent::finite(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw InvalidArgument("Lebesgue exponent must satisfy 1 <= p < inf, got " +
                          std::to_string(p));
  }
  return LebesgueExponent(p);
}

double LebesgueExponent::value() const {
  if (infinite_) {
    throw InvalidArgument("the infinite exponent has no finite value");
  }
  return p_;
}

double LebesgueExponent::scale_root(double abs_b) const {
  if (abs_b <= 0.0) {
    throw InvalidArgument("scale_root requires |b| > 0");
  }
  if (infinite_) return 1.0;
  return std::pow(abs_b, 1.0 / p_);
}

double EquationParams::critical_scale() const {
  if (b == 0.0) {
    throw InvalidArgument("critical scale undefined for b = 0");
  }
  return p.scale_root(std::abs(b));
}

Regime EquationParams::regime() const {
  const double crit = critical_scale();
  const double mag = std::abs(a);
  if (mag < crit) return Regime::Contractive;
  if (mag > crit) return Regime::Expansive;
  throw ResonanceError("|a| = |b|^{1/p} exactly (" + std::to_string(mag) +
                       "): the equation has no unique solution on this line");
}

double t_norm(const EquationParams& params) {
  if (params.b == 0.0) {
    throw InvalidArgument("operator norm undefined for b = 0");
  }
  if (params.p.is_infinite()) return 1.0;
  return std::pow(std::abs(params.b), -1.0 / params.p.value());
}

RealFunction apply_T(double b, const RealFunction& f) {
  if (b == 0.0) throw InvalidArgument("apply_T requires b != 0");
  const bool keeps_period =
      f.periodic() && b == std::floor(b) && std::abs(b) >= 1.0;
  return RealFunction::composite([f, b](double x) { return f(b * x); },
                                 keeps_period);
}

RealFunction apply_M(const EquationParams& params, const RealFunction& f) {
  if (params.b == 0.0) throw InvalidArgument("apply_M requires b != 0");
  const double a = params.a;
  const double b = params.b;
  const bool keeps_period =
      f.periodic() && b == std::floor(b) && std::abs(b) >= 1.0;
  return RealFunction::composite(
      [f, a, b](double x) { return f(x) - a * f(b * x); }, keeps_period);
}

Bounds sandwich_bounds(const EquationParams& params, double norm_f) {
  if (norm_f < 0.0) {
    throw InvalidArgument("sandwich_bounds requires a nonnegative norm");
  }
  const double ratio = std::abs(params.a) / params.critical_scale();
  Bounds out;
  out.lower = std::abs(1.0 - ratio) * norm_f;
  out.upper = (1.0 + ratio) * norm_f;
  return out;
}

double smoothing_distance_bound(double a, double sup_norm_g) {
  if (!(std::abs(a) < 1.0)) {
    throw InvalidArgument("smoothing bound requires |a| < 1, got a = " +
                          std::to_string(a));
  }
  if (sup_norm_g < 0.0) {
    throw InvalidArgument("smoothing bound requires a nonnegative norm");
  }
  return std::abs(a) / (1.0 - std::abs(a)) * sup_norm_g;
}

double adjoint_identity_residual(double b, const RealFunction& u,
                                 const RealFunction& v, QuadratureSpec q,
                                 Interval iv) {
  if (b == 0.0) {
    throw InvalidArgument("adjoint identity requires b != 0");
  }
  const double lhs =
      integrate([&](double x) { return u(b * x) * v(x); }, iv, q);
  const double rhs =
      integrate([&](double x) { return u(x) * v(x / b); }, iv, q) / b;
  return std::abs(lhs - rhs);
}

SeriesSolution::SeriesSolution(EquationParams params, RealFunction g,
                               Regime regime, int truncation, double tail_bound)
    : params_(params),
      g_(std::move(g)),
      regime_(regime),
      truncation_(truncation),
      tail_bound_(tail_bound) {
  if (truncation_ < 1) {
    throw InvalidArgument("series truncation must keep at least one term");
  }
}

double SeriesSolution::operator()(double x) const {
  double acc = 0.0;
  if (regime_ == Regime::Contractive) {
    double coef = 1.0;
    double arg = x;
    for (int n = 0; n < truncation_; ++n) {
      acc += coef * g_(arg);
      coef *= params_.a;
      arg *= params_.b;
    }
  } else {
    double coef = 1.0;
    double arg = x;
    for (int n = 1; n <= truncation_; ++n) {
      coef /= params_.a;
      arg /= params_.b;
      acc -= coef * g_(arg);
    }
  }
  return acc;
}

RealFunction SeriesSolution::as_function() const {
  // Periodicity survives only in the contractive direction with integer b:
  // every term g(b^n (x+1)) = g(b^n x + b^n) then repeats.
  const bool periodic = g_.periodic() && regime_ == Regime::Contractive &&
                        params_.b == std::floor(params_.b) &&
                        std::abs(params_.b) >= 1.0;
  return RealFunction::composite([s = *this](double x) { return s(x); },
                                 periodic);
}

SeriesSolution solve(const EquationParams& params, const RealFunction& g,
                     std::optional<double> sup_norm_g, double tol) {
  if (params.b == 0.0) {
    throw InvalidArgument(
        "b = 0 is outside the series framework; use solve_b_zero");
  }
  if (!(tol > 0.0)) {
    throw InvalidArgument("solve requires a positive tolerance");
  }
  const Regime regime = params.regime();  // throws on the critical line

  // Pointwise convergence needs the plain geometric ratio below 1 in the
  // chosen direction, which is stricter than the norm condition when p is
  // finite. E.g. 1 < |a| < |b|^{1/p} contracts in norm yet diverges at
  // almost every x; refusing is the honest move.
  const double ratio = regime == Regime::Contractive ? std::abs(params.a)
                                                     : 1.0 / std::abs(params.a);
  if (!(ratio < 1.0)) {
    throw RegimeError(
        "series ratio " + std::to_string(ratio) +
        " >= 1: the selected branch converges in norm only, not pointwise");
  }

  const double sup = sup_norm_g ? *sup_norm_g : estimate_sup_norm(g);
  if (sup < 0.0 || !std::isfinite(sup)) {
    throw InvalidArgument("sup-norm bound for g must be finite and >= 0");
  }

  // Smallest T >= 1 with sup * ratio^T / (1 - ratio) <= tol.
  int truncation = 0;
  double tail = sup / (1.0 - ratio);
  const int max_terms = 200000;
  do {
    tail *= ratio;
    ++truncation;
    if (truncation > max_terms) {
      throw DivergenceError("series needs more than " +
                            std::to_string(max_terms) +
                            " terms to reach tolerance " + std::to_string(tol));
    }
  } while (tail > tol);

  return SeriesSolution(params, g, regime, truncation, tail);
}

RealFunction solve_b_zero(double a, const RealFunction& g, double g_at_zero) {
  if (a == 1.0) {
    throw ResonanceError(
        "b = 0 with a = 1 forces g(0) = 0 and determines nothing else");
  }
  if (!std::isfinite(g_at_zero)) {
    throw InvalidArgument("g(0) must be finite");
  }
  const double shift = a / (1.0 - a) * g_at_zero;
  return RealFunction::composite([g, shift](double x) { return g(x) + shift; },
                                 g.periodic());
}

}  // namespace rfa
