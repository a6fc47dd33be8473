#pragma once

#include <functional>
#include <vector>

namespace rfa {

/// How a RealFunction came to be. Downstream code treats the kinds the same;
/// the tag exists so tools can report what they are working with.
enum class FunctionKind { AnalyticBuiltin, Piecewise, PeriodicSamples, Composite };

/// A real-valued function of one real variable, evaluable at any finite x.
/// `periodic()` marks unit period; the solver exploits it when estimating
/// sup norms (one period suffices).
class RealFunction {
public:
  double operator()(double x) const { return eval_(x); }
  FunctionKind kind() const { return kind_; }
  bool periodic() const { return periodic_; }

  static RealFunction analytic(std::function<double(double)> f,
                               bool unit_period = false);
  static RealFunction constant(double c);

  /// Assembled from other functions (shifts, sums, solutions).
  static RealFunction composite(std::function<double(double)> f,
                                bool unit_period = false);

  /// A glued piecewise map, always unit-periodic here.
  static RealFunction piecewise(std::function<double(double)> f);

  /// Values at i/S for i = 0..S-1, extended by unit period with linear
  /// interpolation between grid points; value(x) == value(x - floor(x))
  /// holds exactly.
  static RealFunction periodic_samples(std::vector<double> values);

  /// Periodic extension of f0 given on [0,1], with the right-closed
  /// convention: for x > 1, value(x) = value(x - 1), so positive integers
  /// map to f0(1) rather than f0(0). Below 0 the plain unit shift applies.
  static RealFunction periodic_from_unit(std::function<double(double)> f0);

private:
  RealFunction(std::function<double(double)> f, FunctionKind k, bool periodic);

  std::function<double(double)> eval_;
  FunctionKind kind_;
  bool periodic_;
};

/// max |f| over 4096 midpoint samples of one period (periodic) or of [-1,1],
/// inflated by 10% as a cheap upper-bound proxy for truncation bookkeeping.
double estimate_sup_norm(const RealFunction& f);

}  // namespace rfa
