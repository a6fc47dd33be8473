#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rfa/numerics.hpp"

namespace rfa {

enum class BasisKind { Const, Cos, Sin };

/// Index into the trigonometric system: the constant, or cos/sin of
/// frequency k >= 1 (in cycles per unit).
struct BasisIndex {
  BasisKind kind = BasisKind::Cos;
  int k = 1;
};

inline BasisIndex basis_const() { return {BasisKind::Const, 0}; }
inline BasisIndex basis_cos(int k) { return {BasisKind::Cos, k}; }
inline BasisIndex basis_sin(int k) { return {BasisKind::Sin, k}; }

/// Vertical scale of the dilation-2 system; |a| < 1.
struct WfParams {
  double a = 0.5;
};

/// Classical orthonormal member: 1, sqrt(2) cos(2 pi k x), or
/// sqrt(2) sin(2 pi k x).
double eval_classical(BasisIndex idx, double x);

/// Rough member: sqrt(1-a^2) sum_{n>=0} a^n sqrt(2) trig(2 pi k 2^n x); the
/// constant member stays 1. The dyadic arguments are reduced mod 1 by exact
/// fraction doubling, so deep terms lose no precision. Truncated once the
/// sup-norm tail falls below tol.
double eval_hat(BasisIndex idx, WfParams wp, double x, double tol = 1e-10);

/// Orthonormalized member: odd k keeps the rough member; even k is
/// sqrt(1-a^2) hat_k - a classical_{k/2}; the constant stays 1.
double eval_tilde(BasisIndex idx, WfParams wp, double x, double tol = 1e-10);

/// Values at the midpoints (i+0.5)/resolution, i = 0..resolution-1.
std::vector<double> sample_classical(BasisIndex idx, int resolution);

/// Midpoint-grid samples of the rough member. Terms are also cut once the
/// frequency k 2^n exceeds resolution/4: a power-of-two grid folds higher
/// terms onto constants (aliasing), so keeping them would corrupt every
/// inner product by more than the dropped mass. Requires 4 k <= resolution.
std::vector<double> sample_hat(BasisIndex idx, WfParams wp, int resolution,
                               double tol = 1e-10);
std::vector<double> sample_tilde(BasisIndex idx, WfParams wp, int resolution,
                                 double tol = 1e-10);

/// Closed-form inner product of two rough members: 1 on the diagonal, a^j
/// when one frequency is 2^j times the other within the same family, else 0
/// (families never mix; the constant pairs only with itself).
double gram_hat_analytic(BasisIndex i, BasisIndex j, WfParams wp);

/// Dense symmetric matrix in row-major storage.
struct GramMatrix {
  int size = 0;
  std::vector<double> entries;

  double at(int i, int j) const;
  double& at(int i, int j);
};

/// Analytic Gram of one family's members with frequencies 1..K.
GramMatrix gram_hat_block(int K, WfParams wp, BasisKind family = BasisKind::Cos);

/// Gram of arbitrary sampled functions: entry (i,j) is the mean of the
/// elementwise product, i.e. the midpoint-rule inner product on [0,1].
GramMatrix gram_of_samples(const std::vector<std::vector<double>>& fs);

/// Quadrature inner product of two rough members over one period.
double gram_quadrature(BasisIndex i, BasisIndex j, WfParams wp,
                       QuadratureSpec q = {}, double tol = 1e-10);

struct GramDetResult {
  double det_single_family;  // cos block with frequencies 1..2^m
  double det_both_families;  // cos and sin blocks together (size 2^{m+1})
  double conjectured;        // (1 - a^2)^{2^m}
};

/// Determinants of the leading Gram blocks next to the closed-form
/// candidate, left uninterpreted: callers compare whichever pairing they
/// mean. (For m >= 1 the both-families determinant matches the candidate;
/// the single family gives its square root.)
GramDetResult gram_det(int m, WfParams wp);

enum class TransferSide { Forward, Adjoint };

/// Inner-product expansion for solutions built from a base system g_k with
/// scale b: c delta_{kl} + sum_{n=1}^{terms} (a^{2n}/b^n) sum_{m=1}^{n}
/// (b/a)^m base_ip(m, side) summed over both sides, c = (1 - a^2/b)^{-1}.
/// base_ip(m, Forward) supplies <g_k(b^m .), g_l> in the base pairing and
/// base_ip(m, Adjoint) the mirrored <g_k, g_l(b^m .)> term. Requires
/// a^2 < b. An orthonormal diagnosis means: the value approaches
/// delta_{kl} * c after the caller's normalisation.
double inner_product_series(int k, int l, double a, double b,
                            const std::function<double(int, TransferSide)>& base_ip,
                            int terms);

enum class CoeffBasis { Classical, Tilde };

/// Coefficients against either system: alpha0 for the constant, alpha[n-1] /
/// beta[n-1] for the cos/sin member of frequency n, n = 1..K.
struct CoeffVector {
  CoeffBasis basis = CoeffBasis::Classical;
  double alpha0 = 0.0;
  std::vector<double> alpha;
  std::vector<double> beta;

  int terms() const { return static_cast<int>(alpha.size()); }
};

/// Classical Fourier coefficients of h by quadrature over [0,1].
CoeffVector classical_coeffs(const std::function<double(double)>& h, int K,
                             QuadratureSpec q = {});

/// Classical coefficients at arbitrary frequency, for the dyadic sums that
/// outrun any finite table.
struct CoeffProvider {
  std::function<double(std::int64_t)> alpha;
  std::function<double(std::int64_t)> beta;
};

/// Map classical coefficients onto the orthonormalized system:
///   odd n:  tilde_n = sqrt(1-a^2) sum_{m>=0} a^m coef_{n 2^m}
///   even n: tilde_n = -a coef_{n/2} + (1-a^2) sum_{m>=0} a^m coef_{n 2^m}
/// (each family separately; the constant passes through). Frequencies beyond
/// the table come from `extend` when given, else count as 0. tail_terms <= 0
/// picks the smallest depth with |a|^depth <= 1e-12.
CoeffVector transform_coeffs(const CoeffVector& classical, WfParams wp,
                             int tail_terms = 0,
                             const CoeffProvider* extend = nullptr);

/// Partial sum of the coefficient vector in its own basis at x.
double synthesize(const CoeffVector& cv, WfParams wp, double x,
                  double tol = 1e-10);

/// Root-mean-square difference over the 512 midpoints (i+0.5)/512.
double l2_error_512(const std::function<double(double)>& h,
                    const std::function<double(double)>& approx);

}  // namespace rfa
