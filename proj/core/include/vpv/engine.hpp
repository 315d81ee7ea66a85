#pragma once

// Visible points of radial lattice regions and the finite vpv summation formulas.

#include "vpv/exact.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace vpv {

inline constexpr std::uint64_t kDefaultLatticeCap = 10'000'000;

// ---------------------------------------------------------------- regions

/// A region made of rays from the origin, cut off at finite bounds.
///
/// Box:     1 <= a_i <= bounds[i].
/// Pyramid: 1 <= a_n <= bounds[0], lower <= a_i < a_n for i < n, lower in {0, 1}.
class RadialRegion {
 public:
  enum class Shape { Box, Pyramid };

  static RadialRegion box(std::vector<std::uint64_t> bounds);
  static RadialRegion pyramid(unsigned dims, std::uint64_t apex_bound, unsigned lower = 1);

  Shape shape() const noexcept { return shape_; }
  unsigned dims() const noexcept { return dims_; }
  const std::vector<std::uint64_t>& bounds() const noexcept { return bounds_; }
  unsigned lower() const noexcept { return lower_; }

  bool contains(std::span<const std::uint64_t> point) const;
  /// Number of lattice points (all of them, visible or not).
  std::uint64_t size() const;

 private:
  RadialRegion(Shape shape, unsigned dims, std::vector<std::uint64_t> bounds, unsigned lower);
  Shape shape_;
  unsigned dims_;
  std::vector<std::uint64_t> bounds_;
  unsigned lower_;
};

using Point = std::vector<std::uint64_t>;

/// Calls visit on every lattice point of the region in lexicographic order.
/// ResourceError when the region holds more than cap points.
void for_each_lattice_point(const RadialRegion& region,
                            const std::function<void(std::span<const std::uint64_t>)>& visit,
                            std::uint64_t cap = kDefaultLatticeCap);

/// Points whose coordinate gcd is 1, lexicographic.
std::vector<Point> visible_points(const RadialRegion& region, std::uint64_t cap = kDefaultLatticeCap);

/// True iff every lattice point of the region is j * v for exactly one visible v and j >= 1.
bool multiples_partition_check(const RadialRegion& region, std::uint64_t cap = kDefaultLatticeCap);

/// Rows of the 2-D box [1,width] x [1,height], top row first: a bullet for a visible
/// point and 'x' otherwise, separated by single spaces.
std::vector<std::string> render_visible_grid(std::uint64_t width, std::uint64_t height);

// ---------------------------------------------------------------- sequences

/// a_1 .. a_n with finite support; absent indices are zero.
class FiniteSequence {
 public:
  explicit FiniteSequence(std::uint64_t bound);
  FiniteSequence(std::uint64_t bound, const std::map<std::uint64_t, Rational>& values);

  /// a_k = 1 at k, zero elsewhere.
  static FiniteSequence indicator(std::uint64_t bound, std::uint64_t k);
  static FiniteSequence constant(std::uint64_t bound, const Rational& value);

  std::uint64_t bound() const noexcept { return bound_; }
  /// Zero for indices outside [1, bound].
  Rational operator[](std::uint64_t k) const;
  void set(std::uint64_t k, const Rational& value);
  const std::map<std::uint64_t, Rational>& support() const noexcept { return values_; }

 private:
  std::uint64_t bound_;
  std::map<std::uint64_t, Rational> values_;
};

/// S_k = sum_{j : jk <= n} a_{jk}.
Rational tail_sum(const FiniteSequence& a, std::uint64_t k);

/// Seeded sequence with nonzero rational entries p/q, |p| <= max_num, 1 <= q <= max_den,
/// on a random subset of [1, bound] of the given size (or all of it when size >= bound).
FiniteSequence random_sequence(std::mt19937_64& rng, std::uint64_t bound, std::uint64_t support_size,
                               long max_num = 9, long max_den = 9, bool allow_zero = false);

// ---------------------------------------------------------------- identities

struct SummationSides {
  double lhs = 0.0;
  double rhs = 0.0;
  /// |lhs - rhs| / max(1, sum of absolute values of the terms).
  double residual = 0.0;
};

/// sum_k a_k prod_h (1-q_h)/(1-q_h^{1/k}) against S_1 + sum_{k>=2} S_k sum_{Sel(m,k)} prod_h q_h^{j_h/k}.
SummationSides lemma_3_2_check(const FiniteSequence& a, std::span<const double> q);

/// Inner-sum reading for the 2-D summation formula.
enum class InnerSumReading {
  Resolved,  ///< 0 < j < M, gcd(j, M) = 1, exponent b_{Mk} j x / M
  Printed,   ///< 0 < j < k, gcd(j, M) = 1, exponent b_{Mk} j x / k
};

/// n = a.bound(). DomainError when some a_k != 0 has b_k x = 0.
SummationSides thm_5_1_check(const FiniteSequence& a, const FiniteSequence& b, double x,
                             InnerSumReading reading = InnerSumReading::Resolved);
SummationSides thm_5_2_check(const FiniteSequence& a, const FiniteSequence& b, const FiniteSequence& c,
                             double x);
/// Left weight k a_k (1 - e^{b_k x}) / (1 - e^{b_k x / k}); right inner sum over Sel(2, M) of e^{b j_1 x / M}.
SummationSides thm_5_8_check(const FiniteSequence& a, const FiniteSequence& b, double x);
/// General h; bs.size() == h.
SummationSides thm_5_10_check(const FiniteSequence& a, std::span<const FiniteSequence> bs, double x);

struct ExactSides {
  Rational lhs;
  Rational rhs;
  bool equal() const { return lhs == rhs; }
};

/// sum_{k<=n} a_k k^m  vs  sum_{j<=n} J_m(j) S_j.
ExactSides jordan_summation_sides(const FiniteSequence& a, unsigned m);
/// n(n+1)(2n+1)/6  vs  n + sum_{j=2}^{n} [n/j] J_2(j).
ExactSides square_sum_sides(std::uint64_t n);
/// sum_{k<=n} k^a  vs  sum_j J_m(j) j^{a-m} sum_{k <= [n/j]} k^{a-m}; a = 0 gives n.
ExactSides jordan_power_sides(unsigned m, long a, std::uint64_t n);
/// sum_{k<=n} k^m  vs  sum_j [n/j] J_m(j).
ExactSides jordan_floor_sides(unsigned m, std::uint64_t n);
/// sum_{k<=n} z^k k^m  vs  sum_j J_m(j) z^j (1 - z^{j[n/j]}) / (1 - z^j); z != 1 and z^j != 1.
/// With printed = true the factor z^j is dropped, as displayed.
ExactSides jordan_geometric_sides(unsigned m, std::uint64_t n, const Rational& z, bool printed = false);

// ---------------------------------------------------------------- bracket polynomial

/// T_mu = -sum_{alpha=1}^{mu} C(mu, alpha) B_alpha / k^{alpha-1}.
Rational bracket_T(unsigned mu, std::uint64_t k);
/// [x^m] prod_lambda sum_{mu>=1} T_mu (b_lambda x)^{mu-1}, as defined next to the display.
Rational bracket_polynomial(unsigned m, std::uint64_t k, std::span<const Rational> bs);
/// [x^m] prod_lambda (1/k) sum_{A=0}^{k-1} exp(b_lambda A x / k), from Faulhaber sums.
Rational bracket_oracle(unsigned m, std::uint64_t k, std::span<const Rational> bs);
/// sum over A in [0,k)^h of ((b . A) / k)^m = m! k^h bracket_oracle.
Rational bracket_grid(unsigned m, std::uint64_t k, std::span<const Rational> bs);

/// sum_{k<=n} a_k P(k)  vs  sum_{M>=2} sum_{k<=[n/M]} a_{Mk} sum_{Sel(h,M)} ((b_{Mk} . j) / M)^m,
/// with P = bracket_grid (or bracket_polynomial when printed is set). bs.size() == h.
ExactSides bracket_summation_sides(unsigned m, const FiniteSequence& a, std::span<const FiniteSequence> bs,
                                   bool printed = false);

// ---------------------------------------------------------------- products

struct ProductComparison {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  /// Residual of the same truncation at half the cutoff.
  double half_residual = 0.0;
};

/// prod over (a,b,c) = 1, 0 <= a,b < c <= c_max of (1 - x^a y^b z^c)^{-1/c} against
/// [(1-xz)(1-yz)/((1-z)(1-xyz))]^{1/((1-x)(1-y))}. DomainError outside the convergence region.
ProductComparison cor_5_3_check(double x, double y, double z, std::uint64_t c_max);

struct HyperpyramidResult {
  /// Log of the left product over visible points with apex coordinate <= K, each factor
  /// expanded and kept only at lattice points with apex coordinate <= K.
  double matched_lhs = 0.0;
  /// Exponent on the right, k <= K.
  double matched_rhs = 0.0;
  double matched_residual = 0.0;
  /// Full log(1 - x^a) factors over visible points with apex <= K, against the right
  /// exponent summed to convergence.
  double naive_lhs = 0.0;
  double converged_rhs = 0.0;
  double naive_residual = 0.0;
};

/// Hyperpyramid product with n = x.size() = b.size(), 0 < x_i < 1, sum b_i = 1.
/// lower = 1 keeps a_i >= 1 for i < n; lower = 0 is the displayed range, which needs
/// b_i = 0 for i < n (0^{b} in the exponent) and otherwise throws DomainError.
HyperpyramidResult hyperpyramid_check(std::span<const double> x, std::span<const Rational> b, std::uint64_t K,
                                      unsigned lower = 1);

}  // namespace vpv
