#include "rfa/weierstrass_fourier.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rfa/errors.hpp"

namespace rfa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_params(WfParams wp) {
  if (!(std::abs(wp.a) < 1.0)) {
    throw RegimeError("the dilation system needs |a| < 1, got a = " +
                      std::to_string(wp.a));
  }
}

void check_index(BasisIndex idx) {
  if (idx.kind != BasisKind::Const && idx.k < 1) {
    throw InvalidArgument("basis frequency must be >= 1, got " +
                          std::to_string(idx.k));
  }
}

double frac(double x) { return x - std::floor(x); }

double trig(BasisKind kind, double t) {
  // t is the argument already reduced mod 1.
  return kind == BasisKind::Cos ? std::sqrt(2.0) * std::cos(kTwoPi * t)
                                : std::sqrt(2.0) * std::sin(kTwoPi * t);
}

// Minimal T >= 1 with sqrt(1-a^2) sqrt(2) |a|^T / (1-|a|) <= tol.
int hat_truncation(double a, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  const double r = std::abs(a);
  const double scale = std::sqrt(1.0 - a * a) * std::sqrt(2.0);
  int T = 0;
  double tail = scale / (1.0 - r);
  const int max_terms = 200000;
  do {
    tail *= r;
    ++T;
    if (T > max_terms) {
      throw DivergenceError("dilation series needs more than " +
                            std::to_string(max_terms) + " terms at a = " +
                            std::to_string(a));
    }
  } while (tail > tol);
  return T;
}

}  // namespace

double eval_classical(BasisIndex idx, double x) {
  check_index(idx);
  if (idx.kind == BasisKind::Const) return 1.0;
  return trig(idx.kind, frac(static_cast<double>(idx.k) * x));
}

double eval_hat(BasisIndex idx, WfParams wp, double x, double tol) {
  check_params(wp);
  check_index(idx);
  if (idx.kind == BasisKind::Const) return 1.0;
  const int T = hat_truncation(wp.a, tol);
  // frac(2 t) keeps the binary digits of k x exactly; k 2^n x itself would
  // lose the low digits long before the series tail matters.
  double t = frac(static_cast<double>(idx.k) * x);
  double coef = 1.0;
  double acc = 0.0;
  for (int n = 0; n < T; ++n) {
    acc += coef * trig(idx.kind, t);
    coef *= wp.a;
    t = frac(2.0 * t);
  }
  return std::sqrt(1.0 - wp.a * wp.a) * acc;
}

double eval_tilde(BasisIndex idx, WfParams wp, double x, double tol) {
  check_params(wp);
  check_index(idx);
  if (idx.kind == BasisKind::Const) return 1.0;
  if (idx.k % 2 == 1) return eval_hat(idx, wp, x, tol);
  const double root = std::sqrt(1.0 - wp.a * wp.a);
  BasisIndex half = idx;
  half.k = idx.k / 2;
  return root * eval_hat(idx, wp, x, tol) - wp.a * eval_classical(half, x);
}

std::vector<double> sample_classical(BasisIndex idx, int resolution) {
  check_index(idx);
  if (!is_power_of_two(resolution) || resolution < 2) {
    throw InvalidArgument("sample resolution must be a power of two >= 2");
  }
  std::vector<double> out(static_cast<std::size_t>(resolution));
  for (int i = 0; i < resolution; ++i) {
    const double x = (i + 0.5) / resolution;
    out[static_cast<std::size_t>(i)] = eval_classical(idx, x);
  }
  return out;
}

std::vector<double> sample_hat(BasisIndex idx, WfParams wp, int resolution,
                               double tol) {
  check_params(wp);
  check_index(idx);
  if (!is_power_of_two(resolution) || resolution < 2) {
    throw InvalidArgument("sample resolution must be a power of two >= 2");
  }
  std::vector<double> out(static_cast<std::size_t>(resolution), 0.0);
  if (idx.kind == BasisKind::Const) {
    for (double& v : out) v = 1.0;
    return out;
  }
  const std::int64_t cap = resolution / 4;
  if (idx.k > cap) {
    throw InvalidArgument("resolution " + std::to_string(resolution) +
                          " cannot resolve frequency " + std::to_string(idx.k) +
                          "; need resolution >= 4 k");
  }
  const int T = hat_truncation(wp.a, tol);
  std::vector<double> t(static_cast<std::size_t>(resolution));
  for (int i = 0; i < resolution; ++i) {
    t[static_cast<std::size_t>(i)] =
        frac(static_cast<double>(idx.k) * (i + 0.5) / resolution);
  }
  double coef = 1.0;
  std::int64_t freq = idx.k;
  for (int n = 0; n < T && freq <= cap; ++n) {
    for (int i = 0; i < resolution; ++i) {
      auto& ti = t[static_cast<std::size_t>(i)];
      out[static_cast<std::size_t>(i)] += coef * trig(idx.kind, ti);
      ti = frac(2.0 * ti);
    }
    coef *= wp.a;
    freq *= 2;
  }
  const double root = std::sqrt(1.0 - wp.a * wp.a);
  for (double& v : out) v *= root;
  return out;
}

std::vector<double> sample_tilde(BasisIndex idx, WfParams wp, int resolution,
                                 double tol) {
  check_params(wp);
  check_index(idx);
  if (idx.kind == BasisKind::Const || idx.k % 2 == 1) {
    return sample_hat(idx, wp, resolution, tol);
  }
  std::vector<double> out = sample_hat(idx, wp, resolution, tol);
  BasisIndex half = idx;
  half.k = idx.k / 2;
  const std::vector<double> low = sample_classical(half, resolution);
  const double root = std::sqrt(1.0 - wp.a * wp.a);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = root * out[i] - wp.a * low[i];
  }
  return out;
}

double gram_hat_analytic(BasisIndex i, BasisIndex j, WfParams wp) {
  check_params(wp);
  check_index(i);
  check_index(j);
  const bool i_const = i.kind == BasisKind::Const;
  const bool j_const = j.kind == BasisKind::Const;
  if (i_const || j_const) return (i_const && j_const) ? 1.0 : 0.0;
  if (i.kind != j.kind) return 0.0;
  if (i.k == j.k) return 1.0;
  int lo = i.k, hi = j.k;
  if (lo > hi) std::swap(lo, hi);
  if (hi % lo != 0) return 0.0;
  const int ratio = hi / lo;
  if (!is_power_of_two(ratio)) return 0.0;
  double v = 1.0;
  for (int r = ratio; r > 1; r /= 2) v *= wp.a;
  return v;
}

double GramMatrix::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= size || j >= size) {
    throw InvalidArgument("Gram index outside the matrix");
  }
  return entries[static_cast<std::size_t>(i) * size + j];
}

double& GramMatrix::at(int i, int j) {
  if (i < 0 || j < 0 || i >= size || j >= size) {
    throw InvalidArgument("Gram index outside the matrix");
  }
  return entries[static_cast<std::size_t>(i) * size + j];
}

GramMatrix gram_hat_block(int K, WfParams wp, BasisKind family) {
  check_params(wp);
  if (K < 1) throw InvalidArgument("Gram block needs K >= 1");
  if (family == BasisKind::Const) {
    throw InvalidArgument("Gram block is per trigonometric family");
  }
  GramMatrix m;
  m.size = K;
  m.entries.assign(static_cast<std::size_t>(K) * K, 0.0);
  for (int i = 0; i < K; ++i) {
    for (int j = i; j < K; ++j) {
      const double v =
          gram_hat_analytic({family, i + 1}, {family, j + 1}, wp);
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
  }
  return m;
}

GramMatrix gram_of_samples(const std::vector<std::vector<double>>& fs) {
  if (fs.empty()) throw InvalidArgument("no sampled functions given");
  const std::size_t len = fs.front().size();
  if (len < 2) throw InvalidArgument("sampled functions need >= 2 values");
  for (const auto& f : fs) {
    if (f.size() != len) {
      throw InvalidArgument("sampled functions differ in length");
    }
  }
  const int K = static_cast<int>(fs.size());
  GramMatrix m;
  m.size = K;
  m.entries.assign(static_cast<std::size_t>(K) * K, 0.0);
  std::vector<double> prod(len);
  for (int i = 0; i < K; ++i) {
    for (int j = i; j < K; ++j) {
      for (std::size_t s = 0; s < len; ++s) {
        prod[s] = fs[static_cast<std::size_t>(i)][s] *
                  fs[static_cast<std::size_t>(j)][s];
      }
      const double v =
          pairwise_sum(prod.data(), len) / static_cast<double>(len);
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
  }
  return m;
}

double gram_quadrature(BasisIndex i, BasisIndex j, WfParams wp,
                       QuadratureSpec q, double tol) {
  const std::vector<double> fi = sample_hat(i, wp, q.resolution, tol);
  const std::vector<double> fj = sample_hat(j, wp, q.resolution, tol);
  std::vector<double> prod(fi.size());
  for (std::size_t s = 0; s < fi.size(); ++s) prod[s] = fi[s] * fj[s];
  return pairwise_sum(prod.data(), prod.size()) /
         static_cast<double>(prod.size());
}

GramDetResult gram_det(int m, WfParams wp) {
  check_params(wp);
  if (m < 0 || m > 6) {
    throw InvalidArgument("gram_det supports 0 <= m <= 6");
  }
  const int K = 1 << m;
  const GramMatrix cos_block = gram_hat_block(K, wp, BasisKind::Cos);

  GramDetResult out;
  out.det_single_family = lu_determinant(cos_block.entries, K);

  // cos and sin blocks are identical and never couple, so lay them out
  // block-diagonally and take one determinant of the honest 2K matrix.
  const int K2 = 2 * K;
  std::vector<double> both(static_cast<std::size_t>(K2) * K2, 0.0);
  for (int i = 0; i < K; ++i) {
    for (int j = 0; j < K; ++j) {
      const double v = cos_block.at(i, j);
      both[static_cast<std::size_t>(i) * K2 + j] = v;
      both[static_cast<std::size_t>(i + K) * K2 + (j + K)] = v;
    }
  }
  out.det_both_families = lu_determinant(std::move(both), K2);
  out.conjectured = std::pow(1.0 - wp.a * wp.a, static_cast<double>(K));
  return out;
}

double inner_product_series(int k, int l, double a, double b,
                            const std::function<double(int, TransferSide)>& base_ip,
                            int terms) {
  if (k < 1 || l < 1) throw InvalidArgument("series indices must be >= 1");
  if (terms < 1) throw InvalidArgument("series needs terms >= 1");
  if (!(b > 0.0)) throw InvalidArgument("series scale b must be positive");
  if (!(a * a < b)) {
    throw RegimeError("inner-product series requires a^2 < b, got a = " +
                      std::to_string(a) + ", b = " + std::to_string(b));
  }
  if (!base_ip) throw InvalidArgument("base inner-product callback missing");
  if (a == 0.0) return k == l ? 1.0 : 0.0;

  std::vector<double> cross(static_cast<std::size_t>(terms) + 1, 0.0);
  for (int m = 1; m <= terms; ++m) {
    cross[static_cast<std::size_t>(m)] =
        base_ip(m, TransferSide::Forward) + base_ip(m, TransferSide::Adjoint);
  }

  double acc = k == l ? 1.0 / (1.0 - a * a / b) : 0.0;
  for (int n = 1; n <= terms; ++n) {
    for (int m = 1; m <= n; ++m) {
      // a^{2n-m} / b^{n-m}; the ratio form stays finite even when one factor
      // underflows.
      const double w = std::pow(a, 2 * n - m) / std::pow(b, n - m);
      acc += w * cross[static_cast<std::size_t>(m)];
    }
  }
  return acc;
}

CoeffVector classical_coeffs(const std::function<double(double)>& h, int K,
                             QuadratureSpec q) {
  if (K < 0) throw InvalidArgument("coefficient count must be >= 0");
  const Interval unit{0.0, 1.0};
  CoeffVector cv;
  cv.basis = CoeffBasis::Classical;
  cv.alpha0 = integrate(h, unit, q);
  cv.alpha.resize(static_cast<std::size_t>(K));
  cv.beta.resize(static_cast<std::size_t>(K));
  for (int n = 1; n <= K; ++n) {
    cv.alpha[static_cast<std::size_t>(n) - 1] = integrate(
        [&](double x) { return h(x) * eval_classical(basis_cos(n), x); }, unit,
        q);
    cv.beta[static_cast<std::size_t>(n) - 1] = integrate(
        [&](double x) { return h(x) * eval_classical(basis_sin(n), x); }, unit,
        q);
  }
  return cv;
}

namespace {

// Table lookup with provider fallback; frequencies beyond both count as 0.
double coeff_at(const std::vector<double>& table,
                const std::function<double(std::int64_t)>& provider,
                std::int64_t n) {
  if (n <= static_cast<std::int64_t>(table.size())) {
    return table[static_cast<std::size_t>(n) - 1];
  }
  if (provider) return provider(n);
  return 0.0;
}

}  // namespace

CoeffVector transform_coeffs(const CoeffVector& classical, WfParams wp,
                             int tail_terms, const CoeffProvider* extend) {
  check_params(wp);
  if (classical.basis != CoeffBasis::Classical) {
    throw InvalidArgument("transform_coeffs expects classical coefficients");
  }
  if (classical.alpha.size() != classical.beta.size()) {
    throw InvalidArgument("coefficient families differ in length");
  }
  const double a = wp.a;
  int depth = tail_terms;
  if (depth <= 0) {
    depth = 1;
    double p = std::abs(a);
    while (p > 1e-12 && depth < 4000) {
      p *= std::abs(a);
      ++depth;
    }
  }

  const std::function<double(std::int64_t)> no_provider;
  const auto& ext_a = extend ? extend->alpha : no_provider;
  const auto& ext_b = extend ? extend->beta : no_provider;

  CoeffVector out;
  out.basis = CoeffBasis::Tilde;
  out.alpha0 = classical.alpha0;
  const int K = classical.terms();
  out.alpha.resize(static_cast<std::size_t>(K));
  out.beta.resize(static_cast<std::size_t>(K));

  const double one_minus_a2 = 1.0 - a * a;
  const double root = std::sqrt(one_minus_a2);
  for (int n = 1; n <= K; ++n) {
    double sum_a = 0.0, sum_b = 0.0;
    double am = 1.0;
    std::int64_t idx = n;
    for (int m = 0; m < depth; ++m) {
      if (idx > K && !extend) break;  // nothing but zeros from here on
      sum_a += am * coeff_at(classical.alpha, ext_a, idx);
      sum_b += am * coeff_at(classical.beta, ext_b, idx);
      am *= a;
      if (idx > (std::int64_t{1} << 60)) break;
      idx *= 2;
    }
    if (n % 2 == 1) {
      out.alpha[static_cast<std::size_t>(n) - 1] = root * sum_a;
      out.beta[static_cast<std::size_t>(n) - 1] = root * sum_b;
    } else {
      const double la = coeff_at(classical.alpha, ext_a, n / 2);
      const double lb = coeff_at(classical.beta, ext_b, n / 2);
      out.alpha[static_cast<std::size_t>(n) - 1] =
          -a * la + one_minus_a2 * sum_a;
      out.beta[static_cast<std::size_t>(n) - 1] =
          -a * lb + one_minus_a2 * sum_b;
    }
  }
  return out;
}

double synthesize(const CoeffVector& cv, WfParams wp, double x, double tol) {
  if (cv.alpha.size() != cv.beta.size()) {
    throw InvalidArgument("coefficient families differ in length");
  }
  double acc = cv.alpha0;
  const int K = cv.terms();
  if (cv.basis == CoeffBasis::Classical) {
    for (int n = 1; n <= K; ++n) {
      acc += cv.alpha[static_cast<std::size_t>(n) - 1] *
                 eval_classical(basis_cos(n), x) +
             cv.beta[static_cast<std::size_t>(n) - 1] *
                 eval_classical(basis_sin(n), x);
    }
  } else {
    for (int n = 1; n <= K; ++n) {
      acc += cv.alpha[static_cast<std::size_t>(n) - 1] *
                 eval_tilde(basis_cos(n), wp, x, tol) +
             cv.beta[static_cast<std::size_t>(n) - 1] *
                 eval_tilde(basis_sin(n), wp, x, tol);
    }
  }
  return acc;
}

double l2_error_512(const std::function<double(double)>& h,
                    const std::function<double(double)>& approx) {
  const int S = 512;
  std::vector<double> sq(static_cast<std::size_t>(S));
  for (int i = 0; i < S; ++i) {
    const double x = (i + 0.5) / S;
    const double d = h(x) - approx(x);
    sq[static_cast<std::size_t>(i)] = d * d;
  }
  return std::sqrt(pairwise_sum(sq.data(), sq.size()) / S);
}

}  // namespace rfa
