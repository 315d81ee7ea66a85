#pragma once

// Generalized Ramanujan-Cohen sums, Jordan totients and the phi_t(m; k) family.
//
// Almost everything here is a sum over the selector set
//
//     Sel(m, k) = { j in [0,k)^m : gcd(j_1, ..., j_m, k) = 1, j != 0 },
//
// so each function comes with an enumeration route over Sel(m, k) and a
// closed form obtained by Moebius inversion over the divisors of k.

#include "vpv/exact.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace vpv {

inline constexpr std::uint64_t kDefaultSelectorCap = 10'000'000;

/// Dimension m and modulus k of a selector set. Sel(m, 1) is empty.
struct LatticeSelector {
  unsigned m;
  std::uint64_t k;

  LatticeSelector(unsigned dims, std::uint64_t modulus);
};

using Tuple = std::vector<std::uint64_t>;

/// Calls visit(j) for every tuple of Sel(m, k) in lexicographic order.
/// Throws ResourceError when |Sel(m, k)| exceeds cap.
void for_each_selector(const LatticeSelector& sel,
                       const std::function<void(std::span<const std::uint64_t>)>& visit,
                       std::uint64_t cap = kDefaultSelectorCap);

std::vector<Tuple> enumerate_selector(const LatticeSelector& sel,
                                      std::uint64_t cap = kDefaultSelectorCap);

/// count[s] = #{ j in Sel(m, k) : j_1 + ... + j_m = s }.
std::vector<std::uint64_t> selector_sum_distribution(const LatticeSelector& sel,
                                                     std::uint64_t cap = kDefaultSelectorCap);

/// J_m(k) = k^m prod_{p | k} (1 - p^-m); J_m(1) = 1.
Integer jordan(unsigned m, std::uint64_t k);
std::uint64_t euler_phi(std::uint64_t k);

/// c_k(n) by summing cos(2 pi j.n / k) over Sel(m, k) in floating point.
/// Requires k >= 2. Throws ConsistencyError if the float sum is not within 1e-6 of an integer.
Integer ramanujan_cohen_enum(std::uint64_t k, std::span<const std::int64_t> n,
                             std::uint64_t cap = kDefaultSelectorCap);

/// c_k(n) = sum_{e | gcd(k, g)} mu(k/e) e^m with g = gcd(|n_1|, ..., |n_m|).
/// For k = 1 this gives 1.
Integer ramanujan_cohen(std::uint64_t k, std::span<const std::int64_t> n);

/// Full-grid power sum: sum over [0,e)^m of (i_1 + ... + i_m)^t  (0^0 = 1).
Integer grid_power_sum(unsigned t, unsigned m, std::uint64_t e);

/// phi_t(m; k) = sum over Sel(m, k) of ((j_1 + ... + j_m) / k)^t.
Rational phi_t_enum(unsigned t, unsigned m, std::uint64_t k, std::uint64_t cap = kDefaultSelectorCap);
/// sum_{e | k} mu(k/e) H_t(m, e) with H_t the normalized full-grid sum; no size limit.
Rational phi_t_closed(unsigned t, unsigned m, std::uint64_t k);
/// Both routes; ConsistencyError if they disagree. phi_t(t, m, 1) = 0.
Rational phi_t(unsigned t, unsigned m, std::uint64_t k, std::uint64_t cap = kDefaultSelectorCap);

/// sum over Sel(m, k) of (j_1 + ... + j_m)^t = k^t phi_t(m; k).
Integer unnormalized_phi(unsigned t, unsigned m, std::uint64_t k,
                         std::uint64_t cap = kDefaultSelectorCap);

/// Range used for the free variable a in the fixed-slice count.
enum class RangeConvention { HalfOpen, Closed };

/// #{ a : gcd(a, m_fixed, k) = 1, a + m_fixed != 0 } with a in [0,k) (HalfOpen) or [0,k] (Closed).
std::uint64_t m_phi(std::uint64_t m_fixed, std::uint64_t k,
                    RangeConvention range = RangeConvention::HalfOpen);

/// sigma_s(n) = sum_{d | n} d^s for any integer s.
Rational sigma(long s, std::uint64_t n);

/// sum over Sel(m, k) of exp(2 pi i (j . theta) / k), m = thetas.size().
std::complex<double> selector_character_sum(std::uint64_t k, std::span<const double> thetas,
                                            std::uint64_t cap = kDefaultSelectorCap);

}  // namespace vpv
