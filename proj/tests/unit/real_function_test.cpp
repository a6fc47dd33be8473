#include "rfa/real_function.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "rfa/errors.hpp"

using namespace rfa;

TEST_CASE("factories tag kind and period") {
  const RealFunction c = RealFunction::constant(3.5);
  CHECK(c(0.0) == 3.5);
  CHECK(c(1234.5) == 3.5);
  CHECK(c.kind() == FunctionKind::AnalyticBuiltin);
  CHECK(c.periodic());

  const RealFunction f =
      RealFunction::analytic([](double x) { return x * x; });
  CHECK_FALSE(f.periodic());

  const RealFunction g = RealFunction::composite([](double x) { return x; });
  CHECK(g.kind() == FunctionKind::Composite);

  CHECK_THROWS_AS(RealFunction::analytic(nullptr), InvalidArgument);
}

TEST_CASE("periodic samples interpolate and wrap") {
  const RealFunction f = RealFunction::periodic_samples({0.0, 1.0});
  CHECK(f(0.0) == 0.0);
  CHECK(f(0.25) == doctest::Approx(0.5));
  CHECK(f(0.5) == 1.0);
  CHECK(f(0.75) == doctest::Approx(0.5));  // wraps back toward samples[0]
  CHECK(f.kind() == FunctionKind::PeriodicSamples);
  CHECK(f.periodic());

  // The unit-shift identity holds exactly, not just approximately.
  for (double x : {7.3, -2.6, 105.125}) {
    CHECK(f(x) == f(x - std::floor(x)));
  }

  CHECK_THROWS_AS(RealFunction::periodic_samples({1.0}), InvalidArgument);
  CHECK_THROWS_AS(RealFunction::periodic_samples({1.0, std::nan("")}),
                  InvalidArgument);
}

TEST_CASE("periodic extension keeps the right endpoint at integers") {
  const RealFunction f =
      RealFunction::periodic_from_unit([](double x) { return x; });
  CHECK(f(0.0) == 0.0);
  CHECK(f(0.5) == 0.5);
  CHECK(f(1.0) == 1.0);
  CHECK(f(2.0) == 1.0);   // not 0: integers above 1 take the right-end value
  CHECK(f(1.25) == doctest::Approx(0.25));
  CHECK(f(-0.75) == doctest::Approx(0.25));
  CHECK(f(-1.0) == 0.0);  // below zero the plain shift applies
  CHECK(f.periodic());
}

TEST_CASE("sup norm estimate inflates the sampled maximum") {
  CHECK(estimate_sup_norm(RealFunction::constant(2.0)) ==
        doctest::Approx(2.2));
  const RealFunction s = RealFunction::analytic(
      [](double x) { return std::sin(2.0 * std::numbers::pi * x); }, true);
  const double n = estimate_sup_norm(s);
  CHECK(n > 1.0);
  CHECK(n <= 1.1);
  // Non-periodic scan covers [-1, 1].
  const RealFunction r = RealFunction::analytic([](double x) { return x; });
  CHECK(estimate_sup_norm(r) > 1.09);
}
