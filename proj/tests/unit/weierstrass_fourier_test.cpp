#include "rfa/weierstrass_fourier.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "rfa/errors.hpp"

using namespace rfa;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kRoot2 = std::sqrt(2.0);

}  // namespace

TEST_CASE("classical members are the normalized trigonometric system") {
  CHECK(eval_classical(basis_const(), 0.77) == 1.0);
  CHECK(eval_classical(basis_cos(1), 0.0) == doctest::Approx(kRoot2));
  CHECK(eval_classical(basis_sin(1), 0.25) == doctest::Approx(kRoot2));
  CHECK(eval_classical(basis_cos(3), 0.5) == doctest::Approx(-kRoot2));
  CHECK_THROWS_AS(eval_classical(basis_cos(0), 0.0), InvalidArgument);

  const auto s = sample_classical(basis_cos(2), 1 << 8);
  REQUIRE(s.size() == 256);
  CHECK(s[0] == doctest::Approx(eval_classical(basis_cos(2), 0.5 / 256)));
}

TEST_CASE("rough member frozen values") {
  // At x = 0 every dyadic term is cos(0): sqrt(1-a^2) sqrt(2) / (1-a).
  // For a = 0.6 that is 0.8 sqrt(2) / 0.4 = 2 sqrt(2).
  WfParams wp{0.6};
  CHECK(eval_hat(basis_cos(1), wp, 0.0) ==
        doctest::Approx(2.0 * kRoot2).epsilon(1e-9));
  // Sine members vanish identically at 0: fraction doubling keeps the
  // argument exactly zero forever.
  CHECK(eval_hat(basis_sin(1), wp, 0.0) == 0.0);
  CHECK(eval_hat(basis_sin(5), WfParams{0.9}, 0.0) == 0.0);
  // a = 0 collapses to the classical member.
  CHECK(eval_hat(basis_cos(1), WfParams{0.0}, 1.0 / 3.0) ==
        doctest::Approx(eval_classical(basis_cos(1), 1.0 / 3.0)));
  CHECK(eval_hat(basis_const(), wp, 0.31) == 1.0);
  CHECK_THROWS_AS(eval_hat(basis_cos(1), WfParams{1.0}, 0.0), RegimeError);
  CHECK_THROWS_AS(eval_hat(basis_cos(1), wp, 0.0, -1.0), InvalidArgument);
}

TEST_CASE("orthonormalized member frozen values") {
  WfParams wp{0.6};
  // Odd indices are untouched.
  CHECK(eval_tilde(basis_cos(3), wp, 0.371) ==
        eval_hat(basis_cos(3), wp, 0.371));
  // Even: sqrt(1-a^2) hat_2(0) - a c_1(0) = 0.8 * 2 sqrt(2) - 0.6 sqrt(2)
  //     = sqrt(2).
  CHECK(eval_tilde(basis_cos(2), wp, 0.0) ==
        doctest::Approx(kRoot2).epsilon(1e-9));
  CHECK(eval_tilde(basis_const(), wp, 0.5) == 1.0);
}

TEST_CASE("closed-form pairings of rough members") {
  WfParams wp{0.6};
  CHECK(gram_hat_analytic(basis_cos(1), basis_cos(4), wp) ==
        doctest::Approx(0.36));
  CHECK(gram_hat_analytic(basis_cos(3), basis_cos(6), wp) ==
        doctest::Approx(0.6));
  CHECK(gram_hat_analytic(basis_cos(1), basis_cos(3), wp) == 0.0);
  CHECK(gram_hat_analytic(basis_cos(2), basis_cos(2), wp) == 1.0);
  CHECK(gram_hat_analytic(basis_cos(1), basis_sin(2), wp) == 0.0);
  CHECK(gram_hat_analytic(basis_const(), basis_const(), wp) == 1.0);
  CHECK(gram_hat_analytic(basis_const(), basis_cos(1), wp) == 0.0);
  CHECK(gram_hat_analytic(basis_sin(5), basis_sin(10), wp) ==
        doctest::Approx(0.6));
  // Signs carry through for negative a.
  CHECK(gram_hat_analytic(basis_cos(1), basis_cos(2), WfParams{-0.5}) ==
        doctest::Approx(-0.5));
  CHECK(gram_hat_analytic(basis_cos(1), basis_cos(8), WfParams{-0.5}) ==
        doctest::Approx(-0.125));
}

TEST_CASE("quadrature pairings agree with the closed forms") {
  WfParams wp{0.6};
  const QuadratureSpec q{1 << 12, QuadScheme::Midpoint};
  struct Pair { int k, l; };
  for (Pair pr : {Pair{1, 1}, Pair{1, 2}, Pair{1, 4}, Pair{3, 6}, Pair{1, 3},
                  Pair{2, 5}}) {
    const double closed =
        gram_hat_analytic(basis_cos(pr.k), basis_cos(pr.l), wp);
    const double quad =
        gram_quadrature(basis_cos(pr.k), basis_cos(pr.l), wp, q);
    CHECK(quad == doctest::Approx(closed).epsilon(2e-3).scale(1.0));
  }
}

TEST_CASE("sampled grids refuse unresolvable frequencies") {
  CHECK_THROWS_AS(sample_hat(basis_cos(9), WfParams{0.5}, 1 << 5),
                  InvalidArgument);
  // a = 0: single term, grid equals the classical samples exactly.
  const auto h = sample_hat(basis_cos(2), WfParams{0.0}, 1 << 8);
  const auto c = sample_classical(basis_cos(2), 1 << 8);
  REQUIRE(h.size() == c.size());
  for (std::size_t i = 0; i < h.size(); ++i) CHECK(h[i] == c[i]);
}

TEST_CASE("orthonormalized family is numerically orthonormal") {
  WfParams wp{0.6};
  const int res = 1 << 14;
  const int K = 8;
  std::vector<std::vector<double>> fs;
  fs.push_back(std::vector<double>(static_cast<std::size_t>(res), 1.0));
  for (int k = 1; k <= K; ++k) {
    fs.push_back(sample_tilde(basis_cos(k), wp, res));
  }
  for (int k = 1; k <= K; ++k) {
    fs.push_back(sample_tilde(basis_sin(k), wp, res));
  }
  const GramMatrix G = gram_of_samples(fs);
  double worst = 0.0;
  for (int i = 0; i < G.size; ++i) {
    for (int j = 0; j < G.size; ++j) {
      const double target = i == j ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(G.at(i, j) - target));
    }
  }
  CHECK(worst < 5e-4);
}

TEST_CASE("analytic Gram block and sampled Gram agree") {
  WfParams wp{0.5};
  const GramMatrix block = gram_hat_block(4, wp);
  CHECK(block.at(0, 0) == 1.0);
  CHECK(block.at(0, 1) == doctest::Approx(0.5));
  CHECK(block.at(0, 3) == doctest::Approx(0.25));
  CHECK(block.at(0, 2) == 0.0);
  CHECK(block.at(1, 3) == doctest::Approx(0.5));
  CHECK(block.at(2, 1) == block.at(1, 2));
  CHECK_THROWS_AS(block.at(4, 0), InvalidArgument);
  CHECK_THROWS_AS(gram_hat_block(0, wp), InvalidArgument);
  CHECK_THROWS_AS(gram_hat_block(2, wp, BasisKind::Const), InvalidArgument);

  const GramMatrix I2 = gram_of_samples({{1, 1, 1, 1}, {1, -1, 1, -1}});
  CHECK(I2.at(0, 0) == 1.0);
  CHECK(I2.at(0, 1) == 0.0);
  CHECK(I2.at(1, 1) == 1.0);
}

TEST_CASE("Gram determinants and the closed-form candidate") {
  for (double a : {0.3, 0.5, 0.6}) {
    WfParams wp{a};
    for (int m : {1, 2, 3}) {
      const GramDetResult r = gram_det(m, wp);
      CHECK(r.det_both_families ==
            doctest::Approx(r.conjectured).epsilon(1e-9));
      CHECK(r.det_single_family * r.det_single_family ==
            doctest::Approx(r.det_both_families).epsilon(1e-9));
    }
    // m = 0 is the boundary case where the candidate and the matrix
    // determinant genuinely part ways: a single member is unit-normalized,
    // so every determinant is 1, while the formula value is 1 - a^2.
    const GramDetResult r0 = gram_det(0, wp);
    CHECK(r0.det_single_family == doctest::Approx(1.0));
    CHECK(r0.det_both_families == doctest::Approx(1.0));
    CHECK(r0.conjectured == doctest::Approx(1.0 - a * a));
  }
  CHECK_THROWS_AS(gram_det(7, WfParams{0.5}), InvalidArgument);
}

TEST_CASE("inner-product series reproduces the unnormalized pairings") {
  // Base pairing of the classical system under dyadic dilation is a
  // Kronecker delta: <c_k(2^m .), c_l> = [k 2^m == l]. Feeding those exact
  // values at formula scale 1 must reproduce <u_k, u_l> of the raw
  // geometric members u_k = sum a^n c_{k 2^n}, i.e. the closed-form pairing
  // divided by (1 - a^2).
  for (double a : {0.3, 0.6}) {
    WfParams wp{a};
    struct Pair { int k, l; };
    for (Pair pr : {Pair{1, 1}, Pair{1, 2}, Pair{2, 2}, Pair{1, 4},
                    Pair{3, 5}, Pair{2, 6}}) {
      auto base = [&pr](int m, TransferSide side) {
        const std::int64_t k = pr.k, l = pr.l;
        const std::int64_t scaled = side == TransferSide::Forward
                                        ? k << m
                                        : l << m;
        const std::int64_t other = side == TransferSide::Forward ? l : k;
        return scaled == other ? 1.0 : 0.0;
      };
      const double expected =
          gram_hat_analytic(basis_cos(pr.k), basis_cos(pr.l), wp) /
          (1.0 - a * a);
      const double got = inner_product_series(pr.k, pr.l, a, 1.0, base, 60);
      CHECK(got == doctest::Approx(expected).epsilon(1e-12).scale(1.0));
    }
  }

  auto dummy = [](int, TransferSide) { return 0.0; };
  CHECK(inner_product_series(3, 3, 0.0, 2.0, dummy, 10) == 1.0);
  CHECK(inner_product_series(3, 4, 0.0, 2.0, dummy, 10) == 0.0);
  CHECK_THROWS_AS(inner_product_series(1, 1, 1.5, 2.0, dummy, 10),
                  RegimeError);
  CHECK_THROWS_AS(inner_product_series(0, 1, 0.5, 2.0, dummy, 10),
                  InvalidArgument);
  CHECK_THROWS_AS(inner_product_series(1, 1, 0.5, 2.0, dummy, 0),
                  InvalidArgument);
  CHECK_THROWS_AS(inner_product_series(1, 1, 0.5, -1.0, dummy, 10),
                  InvalidArgument);
}

TEST_CASE("classical coefficients by quadrature") {
  // h = sqrt(2) cos(4 pi x) is the k = 2 cosine member itself.
  CoeffVector cv = classical_coeffs(
      [](double x) { return kRoot2 * std::cos(2.0 * kTwoPi * x); }, 4);
  CHECK(cv.alpha0 == doctest::Approx(0.0).scale(1.0));
  CHECK(cv.alpha[1] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(cv.alpha[0]) < 1e-12);
  CHECK(std::abs(cv.alpha[2]) < 1e-12);
  CHECK(std::abs(cv.beta[1]) < 1e-12);

  // h(x) = x - 1/2: pure sine series with beta_n = -sqrt(2) / (2 pi n).
  cv = classical_coeffs([](double x) { return x - 0.5; }, 3);
  for (int n = 1; n <= 3; ++n) {
    CHECK(cv.beta[static_cast<std::size_t>(n) - 1] ==
          doctest::Approx(-kRoot2 / (kTwoPi * n)).epsilon(1e-6));
    CHECK(std::abs(cv.alpha[static_cast<std::size_t>(n) - 1]) < 1e-11);
  }
  CHECK_THROWS_AS(classical_coeffs([](double) { return 1.0; }, -1),
                  InvalidArgument);
}

TEST_CASE("coefficient transform sends c_1 to its two-term expansion") {
  // The classical k = 1 cosine has tilde coordinates sqrt(1-a^2) on index 1
  // and -a on index 2, nothing else.
  for (double a : {0.3, 0.6}) {
    WfParams wp{a};
    CoeffVector classical;
    classical.basis = CoeffBasis::Classical;
    classical.alpha.assign(8, 0.0);
    classical.beta.assign(8, 0.0);
    classical.alpha[0] = 1.0;
    const CoeffVector tilde = transform_coeffs(classical, wp);
    CHECK(tilde.basis == CoeffBasis::Tilde);
    CHECK(tilde.alpha[0] == doctest::Approx(std::sqrt(1.0 - a * a)));
    CHECK(tilde.alpha[1] == doctest::Approx(-a));
    for (int n = 3; n <= 8; ++n) {
      CHECK(std::abs(tilde.alpha[static_cast<std::size_t>(n) - 1]) < 1e-14);
    }
    // Resynthesis gives back sqrt(2) cos(2 pi x) pointwise.
    for (double x : {0.1, 0.37}) {
      CHECK(synthesize(tilde, wp, x) ==
            doctest::Approx(kRoot2 * std::cos(kTwoPi * x)).epsilon(1e-8));
    }
  }
}

TEST_CASE("transform rejects non-classical input") {
  CoeffVector cv;
  cv.basis = CoeffBasis::Tilde;
  cv.alpha.assign(2, 0.0);
  cv.beta.assign(2, 0.0);
  CHECK_THROWS_AS(transform_coeffs(cv, WfParams{0.5}), InvalidArgument);
}

TEST_CASE("approximation error decreases in the orthonormalized system") {
  // h(x) = x - 1/2 with exact coefficients extended beyond the table.
  auto h = [](double x) { return x - 0.5; };
  WfParams wp{0.6};
  CoeffProvider exact;
  exact.alpha = [](std::int64_t) { return 0.0; };
  exact.beta = [](std::int64_t n) {
    return -kRoot2 / (kTwoPi * static_cast<double>(n));
  };

  double prev = 2.0;
  for (int K : {2, 5, 10, 20}) {
    CoeffVector classical;
    classical.basis = CoeffBasis::Classical;
    classical.alpha.assign(static_cast<std::size_t>(K), 0.0);
    classical.beta.resize(static_cast<std::size_t>(K));
    for (int n = 1; n <= K; ++n) {
      classical.beta[static_cast<std::size_t>(n) - 1] = exact.beta(n);
    }
    const CoeffVector tilde = transform_coeffs(classical, wp, 0, &exact);
    const double err = l2_error_512(
        h, [&](double x) { return synthesize(tilde, wp, x, 1e-8); });
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 0.1);
}

TEST_CASE("rms error over the midpoint grid") {
  CHECK(l2_error_512([](double) { return 1.0; }, [](double) { return 1.0; }) ==
        0.0);
  CHECK(l2_error_512([](double) { return 1.0; }, [](double) { return 0.0; }) ==
        doctest::Approx(1.0));
  // Full periods of the normalized cosine have unit mean square exactly.
  CHECK(l2_error_512([](double x) { return kRoot2 * std::cos(kTwoPi * x); },
                     [](double) { return 0.0; }) ==
        doctest::Approx(1.0).epsilon(1e-12));
}
