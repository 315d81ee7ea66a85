#pragma once

// Brute-force reference implementations used only by the tests. Kept deliberately
// naive and independent of the library code paths they check.

#include "vpv/exact.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <vector>

namespace oracle {

using vpv::Integer;
using vpv::Rational;

inline Rational q(long v) { return Rational(v); }

inline int mobius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

// Calls f on every tuple of [0,k)^m.
template <class F>
void grid(unsigned m, std::uint64_t k, F&& f) {
  std::vector<std::uint64_t> j(m, 0);
  while (true) {
    f(j);
    int p = static_cast<int>(m) - 1;
    while (p >= 0 && j[p] + 1 == k) j[p--] = 0;
    if (p < 0) return;
    ++j[p];
  }
}

inline bool in_selector(const std::vector<std::uint64_t>& j, std::uint64_t k) {
  std::uint64_t g = k;
  bool nonzero = false;
  for (auto v : j) {
    g = std::gcd(g, v);
    nonzero |= v != 0;
  }
  return nonzero && g == 1;
}

inline std::uint64_t selector_count(unsigned m, std::uint64_t k) {
  if (k == 1) return 0;
  std::uint64_t c = 0;
  grid(m, k, [&](const auto& j) { c += in_selector(j, k); });
  return c;
}

// c_k(n) as the literal cosine sum, rounded.
inline long ramanujan(std::uint64_t k, const std::vector<std::int64_t>& n) {
  if (k == 1) return 1;
  double s = 0;
  grid(static_cast<unsigned>(n.size()), k, [&](const auto& j) {
    if (!in_selector(j, k)) return;
    double dot = 0;
    for (std::size_t i = 0; i < j.size(); ++i) dot += static_cast<double>(j[i]) * static_cast<double>(n[i]);
    s += std::cos(2 * std::numbers::pi * dot / static_cast<double>(k));
  });
  return std::lround(s);
}

inline Rational phi(unsigned t, unsigned m, std::uint64_t k) {
  Rational s = 0;
  if (k == 1) return s;
  grid(m, k, [&](const auto& j) {
    if (!in_selector(j, k)) return;
    Rational x(static_cast<long>(std::accumulate(j.begin(), j.end(), std::uint64_t{0})), static_cast<long>(k));
    x.canonicalize();
    Rational p = 1;
    for (unsigned i = 0; i < t; ++i) p *= x;
    s += p;
  });
  return s;
}

inline Integer jordan_by_divisor_law(unsigned m, std::uint64_t k) {
  // J_m(k) = sum_{d | k} mu(k/d) d^m
  Integer s = 0;
  for (std::uint64_t d = 1; d <= k; ++d)
    if (k % d == 0) {
      Integer p = 1;
      for (unsigned i = 0; i < m; ++i) p *= static_cast<unsigned long>(d);
      s += mobius(k / d) * p;
    }
  return s;
}

// Partition numbers by the standard dynamic programme.
inline std::vector<Integer> partitions(std::size_t N) {
  std::vector<Integer> p(N + 1, 0);
  p[0] = 1;
  for (std::size_t part = 1; part <= N; ++part)
    for (std::size_t s = part; s <= N; ++s) p[s] += p[s - part];
  return p;
}

}  // namespace oracle
