#include "rfa/fractal_interp.hpp"

#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "rfa/errors.hpp"

namespace rfa {

namespace {

void require_unit_range(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InvalidArgument(std::string(what) + " must lie in [0,1], got " +
                          std::to_string(x));
  }
}

// Lagrange extrapolation of (h_i, v_i) to h = 0.
double extrapolate_to_zero(const double h[3], const double v[3]) {
  double acc = 0.0;
  for (int i = 0; i < 3; ++i) {
    double w = 1.0;
    for (int j = 0; j < 3; ++j) {
      if (j != i) w *= -h[j] / (h[i] - h[j]);
    }
    acc += w * v[i];
  }
  return acc;
}

}  // namespace

Piece Piece::constant(double c) { return polynomial({c}); }

Piece Piece::affine(double at0, double at1) {
  return polynomial({at0, at1 - at0});
}

Piece Piece::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) {
    throw InvalidArgument("polynomial piece needs at least one coefficient");
  }
  for (double c : coeffs) {
    if (!std::isfinite(c)) {
      throw InvalidArgument("polynomial piece: non-finite coefficient");
    }
  }
  Piece p(Kind::Polynomial);
  p.coeffs_ = std::move(coeffs);
  return p;
}

Piece Piece::trig(double amplitude, double omega, double phase, double offset) {
  if (!std::isfinite(amplitude) || !std::isfinite(omega) ||
      !std::isfinite(phase) || !std::isfinite(offset)) {
    throw InvalidArgument("trig piece: non-finite parameter");
  }
  Piece p(Kind::Trig);
  p.amp_ = amplitude;
  p.omega_ = omega;
  p.phase_ = phase;
  p.offset_ = offset;
  return p;
}

Piece Piece::custom(std::function<double(double)> f, bool allow_numeric_limits) {
  if (!f) throw InvalidArgument("custom piece requires a callable");
  Piece p(Kind::Custom);
  p.fn_ = std::move(f);
  p.numeric_limits_ok_ = allow_numeric_limits;
  return p;
}

double Piece::operator()(double x) const {
  require_unit_range(x, "piece argument");
  switch (kind_) {
    case Kind::Polynomial: {
      double acc = 0.0;
      for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
      return acc;
    }
    case Kind::Trig:
      return amp_ * std::cos(omega_ * x + phase_) + offset_;
    case Kind::Custom:
      return fn_(x);
  }
  throw EvaluationError("piece with unknown kind");
}

double Piece::limit_from_right(double x) const {
  if (!(x >= 0.0 && x < 1.0)) {
    throw InvalidArgument("right limit exists for x in [0,1) only");
  }
  if (kind_ != Kind::Custom) return (*this)(x);  // built-ins are continuous
  if (!numeric_limits_ok_) {
    throw UnsupportedFunction(
        "this piece was constructed without numeric one-sided limits");
  }
  const double h[3] = {1e-4, 1e-5, 1e-6};
  const double v[3] = {fn_(x + h[0]), fn_(x + h[1]), fn_(x + h[2])};
  return extrapolate_to_zero(h, v);
}

double Piece::limit_from_left(double x) const {
  if (!(x > 0.0 && x <= 1.0)) {
    throw InvalidArgument("left limit exists for x in (0,1] only");
  }
  if (kind_ != Kind::Custom) return (*this)(x);
  if (!numeric_limits_ok_) {
    throw UnsupportedFunction(
        "this piece was constructed without numeric one-sided limits");
  }
  const double h[3] = {1e-4, 1e-5, 1e-6};
  const double v[3] = {fn_(x - h[0]), fn_(x - h[1]), fn_(x - h[2])};
  return extrapolate_to_zero(h, v);
}

bool Piece::analytic_limits() const { return kind_ != Kind::Custom; }

PiecewiseG::PiecewiseG(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.size() < 2) {
    throw InvalidArgument("a piecewise right-hand side needs >= 2 segments");
  }
}

const Piece& PiecewiseG::piece(int n) const {
  if (n < 1 || n > piece_count()) {
    throw InvalidArgument("piece index " + std::to_string(n) +
                          " outside [1, " + std::to_string(piece_count()) + "]");
  }
  return pieces_[static_cast<std::size_t>(n) - 1];
}

double PiecewiseG::operator()(double x) const {
  const double t = x - std::floor(x);
  if (t == 0.0) {
    // Integers: x >= 1 sits at the right end of the last segment, x <= 0 at
    // the left end of the first.
    return x >= 1.0 ? pieces_.back()(1.0) : pieces_.front()(0.0);
  }
  const int N = piece_count();
  int n = static_cast<int>(std::ceil(t * N));
  if (n < 1) n = 1;
  if (n > N) n = N;
  const double local = t * N - (n - 1);
  return pieces_[static_cast<std::size_t>(n) - 1](local);
}

double PiecewiseG::value_at_one() const { return pieces_.back()(1.0); }

RealFunction PiecewiseG::as_function() const {
  return RealFunction::piecewise([g = *this](double x) { return g(x); });
}

IfsSpec::IfsSpec(double a, std::vector<Piece> q, std::vector<double> q_at_zero)
    : a_(a), q_(std::move(q)), q0_(std::move(q_at_zero)) {
  if (!(std::abs(a_) < 1.0)) {
    throw RegimeError("attractor maps require |a| < 1, got a = " +
                      std::to_string(a_));
  }
  if (q_.size() < 2 || q_.size() != q0_.size()) {
    throw InvalidArgument("IFS needs >= 2 branches with one shift value each");
  }
}

double IfsSpec::q_at(int n, double x) const {
  if (n < 1 || n > map_count()) {
    throw InvalidArgument("IFS branch " + std::to_string(n) + " outside [1, " +
                          std::to_string(map_count()) + "]");
  }
  require_unit_range(x, "IFS abscissa");
  if (x == 0.0) return q0_[static_cast<std::size_t>(n) - 1];
  return q_[static_cast<std::size_t>(n) - 1](x);
}

Point2 IfsSpec::map(int n, Point2 p) const {
  const double qx = q_at(n, p.x);  // validates n and p.x
  const int N = map_count();
  return Point2{(p.x + (n - 1)) / N, a_ * p.y + qx};
}

std::vector<double> interpolation_values(const RealFunction& g, double a,
                                         int N) {
  if (!(std::abs(a) < 1.0)) {
    throw RegimeError("interpolation values require |a| < 1, got a = " +
                      std::to_string(a));
  }
  if (N < 1) throw InvalidArgument("node count N must be >= 1");
  const double g1 = g(1.0);
  std::vector<double> y(static_cast<std::size_t>(N) + 1);
  y[0] = g(0.0) / (1.0 - a);
  for (int n = 1; n < N; ++n) {
    y[static_cast<std::size_t>(n)] =
        g(static_cast<double>(n) / N) + a / (1.0 - a) * g1;
  }
  y[static_cast<std::size_t>(N)] = g1 / (1.0 - a);
  return y;
}

IfsSpec ifs_from_g(const PiecewiseG& g, double a) {
  const int N = g.piece_count();
  std::vector<Piece> q;
  std::vector<double> q0;
  q.reserve(static_cast<std::size_t>(N));
  q0.reserve(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n) {
    q.push_back(g.piece(n));
    q0.push_back(g.piece(n).limit_from_right(0.0));
  }
  return IfsSpec(a, std::move(q), std::move(q0));
}

bool continuity_condition(const PiecewiseG& g, double a) {
  if (!(std::abs(a) < 1.0)) {
    throw RegimeError("continuity condition defined for |a| < 1 only");
  }
  const int N = g.piece_count();
  const double required =
      a / (1.0 - a) * (g.value_at_one() - g.piece(1)(0.0));
  for (int n = 1; n < N; ++n) {
    const double jump = g.piece(n + 1).limit_from_right(0.0) - g.piece(n)(1.0);
    if (std::abs(jump - required) > 1e-12) return false;
  }
  return true;
}

PiecewiseG g_from_base(const RealFunction& f0, const RealFunction& g0,
                       double a, int N) {
  if (N < 2) throw InvalidArgument("g_from_base needs N >= 2 segments");
  if (!(std::abs(a) < 1.0)) {
    throw RegimeError("g_from_base requires |a| < 1, got a = " +
                      std::to_string(a));
  }
  const double tol = 1e-9;
  if (std::abs(g0(0.0)) > tol) {
    throw ContractViolation("g0(0) = 0 violated: g0(0) = " +
                            std::to_string(g0(0.0)));
  }
  if (std::abs(g0(1.0)) > tol) {
    throw ContractViolation("g0(1) = 0 violated: g0(1) = " +
                            std::to_string(g0(1.0)));
  }
  for (double x : {0.3, 0.6}) {
    if (std::abs(g0(x + 1.0) - g0(x)) > tol) {
      throw ContractViolation("g0 is not unit-periodic: g0(" +
                              std::to_string(x + 1.0) + ") != g0(" +
                              std::to_string(x) + ")");
    }
  }
  for (double x : {1.25, 1.5, 1.875}) {
    if (std::abs(f0(x) - f0(x - 1.0)) > tol) {
      throw ContractViolation("f0 is not unit-periodic above 1: f0(" +
                              std::to_string(x) + ") != f0(" +
                              std::to_string(x - 1.0) + ")");
    }
  }

  std::vector<Piece> pieces;
  pieces.reserve(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n) {
    pieces.push_back(Piece::custom([f0, g0, a, N, n](double t) {
      const double s = (t + (n - 1)) / N;
      return g0(s) + f0(s) - a * f0(N * s);
    }));
  }
  return PiecewiseG(std::move(pieces));
}

SeriesSolution fif_solution(const PiecewiseG& g, double a, double tol) {
  if (!(std::abs(a) < 1.0)) {
    throw RegimeError("the interpolant exists for |a| < 1 only, got a = " +
                      std::to_string(a));
  }
  EquationParams params;
  params.a = a;
  params.b = static_cast<double>(g.piece_count());
  params.p = LebesgueExponent::infinite();
  return solve(params, g.as_function(), std::nullopt, tol);
}

double evaluate_fif(const PiecewiseG& g, double a, double x, double tol) {
  return fif_solution(g, a, tol)(x);
}

PointCloud render_attractor(const IfsSpec& ifs, std::int64_t iterations,
                            Point2 seed, int burn_in, std::uint64_t rng_seed) {
  if (iterations <= 0) throw InvalidArgument("iterations must be positive");
  if (burn_in < 0 || burn_in >= iterations) {
    throw InvalidArgument("burn_in must satisfy 0 <= burn_in < iterations");
  }
  require_unit_range(seed.x, "seed abscissa");

  std::mt19937_64 rng(rng_seed);
  const auto branches = static_cast<std::uint64_t>(ifs.map_count());
  PointCloud cloud;
  cloud.points.reserve(static_cast<std::size_t>(iterations - burn_in));
  Point2 p = seed;
  for (std::int64_t i = 0; i < iterations; ++i) {
    // Plain modulo: the bias is immaterial for rendering and keeps the
    // stream identical across standard libraries.
    const int n = static_cast<int>(rng() % branches) + 1;
    p = ifs.map(n, p);
    if (i >= burn_in) cloud.points.push_back(p);
  }
  return cloud;
}

PiecewiseG piecewise_from_data(const InterpolationProblem& problem) {
  const int N = problem.node_intervals();
  if (N < 2) {
    throw InvalidArgument("interpolation data needs >= 3 node values");
  }
  if (!(std::abs(problem.a) < 1.0)) {
    throw RegimeError("interpolation requires |a| < 1, got a = " +
                      std::to_string(problem.a));
  }
  for (std::size_t i = 0; i < problem.y.size(); ++i) {
    if (!std::isfinite(problem.y[i])) {
      throw InvalidArgument("node value " + std::to_string(i) +
                            " is not finite");
    }
  }
  const double a = problem.a;
  const std::vector<double>& y = problem.y;
  const double yN = y.back();

  std::vector<Piece> pieces;
  pieces.reserve(static_cast<std::size_t>(N));
  pieces.push_back(Piece::affine((1.0 - a) * y[0], y[1] - a * yN));
  for (int n = 2; n < N; ++n) {
    pieces.push_back(Piece::constant(y[static_cast<std::size_t>(n)] - a * yN));
  }
  pieces.push_back(Piece::constant((1.0 - a) * yN));
  return PiecewiseG(std::move(pieces));
}

}  // namespace rfa
