#include "rfa/real_function.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "rfa/errors.hpp"

namespace rfa {

RealFunction::RealFunction(std::function<double(double)> f, FunctionKind k,
                           bool periodic)
    : eval_(std::move(f)), kind_(k), periodic_(periodic) {
  if (!eval_) throw InvalidArgument("RealFunction requires a callable");
}

RealFunction RealFunction::analytic(std::function<double(double)> f,
                                    bool unit_period) {
  return RealFunction(std::move(f), FunctionKind::AnalyticBuiltin, unit_period);
}

RealFunction RealFunction::constant(double c) {
  return RealFunction([c](double) { return c; }, FunctionKind::AnalyticBuiltin,
                      true);
}

RealFunction RealFunction::composite(std::function<double(double)> f,
                                     bool unit_period) {
  return RealFunction(std::move(f), FunctionKind::Composite, unit_period);
}

RealFunction RealFunction::piecewise(std::function<double(double)> f) {
  return RealFunction(std::move(f), FunctionKind::Piecewise, true);
}

RealFunction RealFunction::periodic_samples(std::vector<double> values) {
  if (values.size() < 2) {
    throw InvalidArgument("periodic_samples needs at least two values");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw InvalidArgument("periodic_samples: value " + std::to_string(i) +
                            " is not finite");
    }
  }
  const auto S = values.size();
  auto eval = [vals = std::move(values), S](double x) {
    const double t = x - std::floor(x);  // exactly in [0, 1)
    const double u = t * static_cast<double>(S);
    std::size_t i = static_cast<std::size_t>(u);
    if (i >= S) i = S - 1;  // t just below 1 can round u up to S
    const double frac = u - static_cast<double>(i);
    const std::size_t next = (i + 1) % S;
    return vals[i] + frac * (vals[next] - vals[i]);
  };
  return RealFunction(std::move(eval), FunctionKind::PeriodicSamples, true);
}

RealFunction RealFunction::periodic_from_unit(std::function<double(double)> f0) {
  if (!f0) throw InvalidArgument("periodic_from_unit requires a callable");
  auto eval = [f = std::move(f0)](double x) {
    if (x >= 0.0 && x <= 1.0) return f(x);
    double t = x - std::floor(x);
    if (x > 1.0 && t == 0.0) t = 1.0;  // integers above 1 belong to the right end
    return f(t);
  };
  return RealFunction(std::move(eval), FunctionKind::Composite, true);
}

double estimate_sup_norm(const RealFunction& f) {
  const int S = 4096;
  const double lo = f.periodic() ? 0.0 : -1.0;
  const double hi = 1.0;
  const double h = (hi - lo) / S;
  double m = 0.0;
  for (int i = 0; i < S; ++i) {
    const double v = std::abs(f(lo + (i + 0.5) * h));
    if (!(v <= m)) {
      if (!std::isfinite(v)) {
        throw EvaluationError("sup-norm scan hit a non-finite value");
      }
      m = v;
    }
  }
  return 1.1 * m;
}

}  // namespace rfa
