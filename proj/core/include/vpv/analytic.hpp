#pragma once

// Floating-point side of the library: zeta, truncated Dirichlet series of c_k(n),
// and Jacobi theta q-expansions.

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace vpv {

/// Cutoff index and stopping tolerance for truncated sums.
struct TruncationControl {
  std::uint64_t max_index;
  double tolerance;

  /// Throws UsageError unless max_index >= 2 and 0 < tolerance < 1.
  TruncationControl(std::uint64_t max_index = 200, double tolerance = 1e-15);
};

/// Riemann zeta for real s > 1 (direct sum to 10^4 plus four Euler-Maclaurin
/// corrections; the cutoff grows when the remainder estimate exceeds tol).
double zeta(double s, double tol = 1e-12);

/// Euler-Maclaurin remainder estimate used by zeta() at the given cutoff.
double zeta_error_bound(double s, std::uint64_t cutoff);

struct DirichletComparison {
  double partial;   ///< sum_{k<=K} c_k(n) / k^{s+1}
  double target;    ///< sigma_{m-1-s}(g) / zeta(s+1)
  double residual;  ///< |partial - target|
};

/// Throws DomainError when s <= 0 or g = gcd(n) = 0 (the divisor sum diverges).
DirichletComparison dirichlet_partial_cohen(double s, std::span<const std::int64_t> n, std::uint64_t K);

/// sum_{d <= x} mu(d) / d.
double moebius_harmonic_partial(std::uint64_t x);

/// sum_{k<=K} c_k(n) / k via sum_{e | g} e^{m-1} sum_{d <= K/e} mu(d)/d.
double ramanujan_mean_zero(std::span<const std::int64_t> n, std::uint64_t K);
/// Same partial sum accumulated term by term from the closed form of c_k.
double ramanujan_mean_direct(std::span<const std::int64_t> n, std::uint64_t K);

/// theta_1(z, q) = 2 q^{1/4} sum_{k>=0} (-1)^k q^{k(k+1)} sin((2k+1) z), 0 <= q < 1.
double theta1(double z, double q, const TruncationControl& trunc = {});
/// theta_1 / (2 q^{1/4}); well defined at q = 0 where it equals sin z.
double theta1_reduced(double z, double q, const TruncationControl& trunc = {});
/// 2 q^{1/2} sum_{k>=1} (-1)^k q^{k(k+1)} sin((2k+1) z): the display with the shifted
/// prefactor and the k = 0 term missing. Only used to exhibit the discrepancy.
double theta1_shifted_display(double z, double q, const TruncationControl& trunc = {});
/// Jacobi triple product: 2 q^{1/4} sin z prod_{n>=1} (1-q^{2n})(1 - 2 q^{2n} cos 2z + q^{4n}).
double theta1_product(double z, double q, const TruncationControl& trunc = {});

struct LogRatioSides {
  double lhs;
  double rhs;
};

/// lhs = sum_{k<=K} (1/k) q^{2k}/(1-q^{2k}) sin 2k alpha sin 2k beta,
/// rhs = (1/4) log[theta_1(a+b) sin(a-b) / (theta_1(a-b) sin(a+b))].
/// DomainError when sin(alpha +- beta) vanishes or |q| >= 1.
LogRatioSides theta_log_ratio_check(double alpha, double beta, double q,
                                    const TruncationControl& trunc = {});

enum class ThetaIdentity { Thm6_1, Cor6_2, Cor6_3, Thm6_4, Cor6_5, Cor6_6 };

const char* to_string(ThetaIdentity id);

/// How the sine factors are read.
enum class SineReading {
  Corrected,       ///< sin 2k alpha sin 2k beta on the left, dilated sin k(alpha -+ beta) on the right
  RepeatedAlpha,   ///< left side literally sin 2k alpha sin 2k alpha
  UndilatedRatio,  ///< right-side factors keep sin(alpha -+ beta) at every dilation k
};

struct ThetaVpvParams {
  ThetaIdentity id = ThetaIdentity::Cor6_2;
  double alpha = 0.7;
  double beta = 0.3;
  double q = 0.1;
  std::uint64_t cutoff = 40;
  double tolerance = 1e-8;
  /// Real x_h in (0, 1), positive real roots (Thm6_1 with one entry, Thm6_4).
  std::vector<double> x;
  /// Rotation numbers theta_h with x_h = exp(2 pi i theta_h) (alternative to x).
  std::vector<double> rotations;
  /// Integer exponents (Cor6_2 with one entry, Cor6_6).
  std::vector<std::int64_t> n;
  /// Dimension for the x -> 1 limits (Cor6_3 uses 1).
  unsigned m = 1;
  SineReading reading = SineReading::Corrected;
  /// Cor6_6: left sum over k | g without the k^{m-1} weight, as displayed.
  bool printed_left_weights = false;
  /// Give the k = 1 product factor the exponent c_1 = phi(1) = J_m(1) = 1 on top of the
  /// leading factor (the corollaries as displayed). Thm6_1 and Thm6_4 have f_1 = 0 either way.
  bool printed_product_from_one = false;
  /// Recompute both residuals with 200 significant digits. Needed to see the truncation
  /// error shrink once it drops under double rounding (q^{2K} is 1e-40 at q = 0.1, K = 20).
  /// Integer-weight identities (Cor6_2, Cor6_3, Cor6_5, Cor6_6) with the Corrected or
  /// RepeatedAlpha reading only; UsageError otherwise.
  bool extended_precision = false;
};

struct ThetaVpvResult {
  bool skipped = false;
  std::string reason;
  /// Matched-index partial sums of the log of each side over {(k, d) : k d <= K}.
  std::complex<double> lhs;
  std::complex<double> rhs;
  double residual = 0.0;
  /// Left log summed to convergence, and the right log with each dilated factor
  /// evaluated through theta_1 for k <= K.
  std::complex<double> lhs_reference;
  std::complex<double> rhs_closed;
  double tail_residual = 0.0;
  bool pass = false;
};

/// Verifies one of the theta product identities by matched-index rearrangement.
ThetaVpvResult theta_vpv_check(const ThetaVpvParams& params);

}  // namespace vpv
