#include "rfa/box_dimension.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "rfa/errors.hpp"
#include "rfa/functional_equation.hpp"

using namespace rfa;

namespace {

// The dilation-series graph used throughout: f = sum a^n cos(2 pi b^n x)
// via the solver, with the argument reduced mod 1 before the cosine so deep
// terms keep full precision on dyadic grids.
GraphSample rough_graph(double a, double b, int S) {
  EquationParams p;
  p.a = a;
  p.b = b;
  const RealFunction g = RealFunction::analytic(
      [](double x) {
        const double t = x - std::floor(x);
        return std::cos(2.0 * std::numbers::pi * t);
      },
      true);
  const SeriesSolution f = solve(p, g, 1.0, 1e-9);
  return GraphSample::from_function([&](double x) { return f(x); }, S);
}

}  // namespace

TEST_CASE("graph samples validate their shape") {
  CHECK_THROWS_AS(GraphSample(std::vector<double>(100, 0.0)), InvalidArgument);
  CHECK_THROWS_AS(GraphSample(std::vector<double>(5000, 0.0)),
                  InvalidArgument);
  std::vector<double> bad(4096, 0.0);
  bad[7] = std::nan("");
  CHECK_THROWS_AS(GraphSample(std::move(bad)), InvalidArgument);

  const GraphSample g = GraphSample::from_function([](double x) { return x; },
                                                   4096);
  CHECK(g.size() == 4096);
  CHECK(g.abscissa(0) == doctest::Approx(0.5 / 4096));
  CHECK_THROWS_AS(g.abscissa(4096), InvalidArgument);
}

TEST_CASE("column counts of flat and linear graphs are exact") {
  const GraphSample lin =
      GraphSample::from_function([](double x) { return x; }, 1 << 14);
  // Each column's spread is below eps, so every column costs exactly 2.
  CHECK(box_count(lin, 2) == 8);
  CHECK(box_count(lin, 5) == 64);
  CHECK(estimate_dim(lin, {2, 10}) == doctest::Approx(1.0).epsilon(1e-12));

  const GraphSample flat =
      GraphSample::from_function([](double) { return 0.25; }, 1 << 14);
  CHECK(box_count(flat, 3) == 8);
  CHECK(estimate_dim(flat, {2, 10}) == doctest::Approx(1.0).epsilon(1e-12));
  // Anchored counting agrees wherever columns sit inside one cell.
  CHECK(box_count_anchored(flat, 3, 0.0) == 8);
  CHECK(box_count_anchored(flat, 3, 0.37) == 8);

  CHECK_THROWS_AS(box_count(lin, 13), InvalidArgument);  // needs 2^j <= S/4
  CHECK_THROWS_AS(box_count(lin, -1), InvalidArgument);
  CHECK_THROWS_AS(estimate_dim(lin, {5, 5}), InvalidArgument);
  CHECK_THROWS_AS(box_count_anchored(lin, 3, std::nan("")), InvalidArgument);
}

TEST_CASE("rough graphs count close to the closed-form dimension") {
  const GraphSample g = rough_graph(0.7, 2.0, 1 << 16);
  const double est = estimate_dim(g, {4, 12});
  const double closed = theoretical_dim(0.7, 2.0);
  CHECK(closed == doctest::Approx(1.4854268271702415));
  CHECK(est > closed - 0.1);
  CHECK(est < closed + 0.1);
}

TEST_CASE("steeper vertical scales give larger estimates") {
  const double lo = estimate_dim(rough_graph(0.55, 2.0, 1 << 14), {4, 10});
  const double hi = estimate_dim(rough_graph(0.8, 2.0, 1 << 14), {4, 10});
  CHECK(lo < hi);
  CHECK(lo > 1.0);
  CHECK(hi < 2.0);
}

TEST_CASE("closed-form dimension guards its regime") {
  CHECK(theoretical_dim(0.8, 4.0) == doctest::Approx(1.8390359525644667));
  CHECK_THROWS_AS(theoretical_dim(0.7, 0.9), InvalidArgument);
  CHECK_THROWS_AS(theoretical_dim(1.2, 2.0), InvalidArgument);
  CHECK_THROWS_AS(theoretical_dim(0.4, 2.0), RegimeError);  // |a b| <= 1
}
