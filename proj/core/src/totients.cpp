#include "vpv/totients.hpp"

#include "vpv/errors.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace vpv {

namespace {

Integer to_integer(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

void check_cap(const LatticeSelector& sel, std::uint64_t cap) {
  if (sel.k < 2) return;
  if (jordan(sel.m, sel.k) > to_integer(cap))
    throw ResourceError("selector Sel(" + std::to_string(sel.m) + ", " + std::to_string(sel.k) +
                        ") exceeds the enumeration cap of " + std::to_string(cap) + " tuples");
}

// Odometer over [0,k)^m keeping prefix[i] = gcd(k, j_0, ..., j_i), so membership in
// Sel(m, k) is prefix[m-1] == 1. After bumping position p all trailing entries are 0
// and their prefix gcds equal prefix[p].
template <typename Visit>
void walk_selector(const LatticeSelector& sel, Visit&& visit) {
  if (sel.k < 2) return;
  const unsigned m = sel.m;
  const std::uint64_t k = sel.k;
  std::vector<std::uint64_t> j(m, 0);
  std::vector<std::uint64_t> prefix(m, k);
  while (true) {
    if (prefix[m - 1] == 1) visit(std::span<const std::uint64_t>(j));
    int p = static_cast<int>(m) - 1;
    while (p >= 0 && j[p] + 1 == k) {
      j[p] = 0;
      --p;
    }
    if (p < 0) return;
    ++j[p];
    const std::uint64_t g = std::gcd(p == 0 ? k : prefix[p - 1], j[p]);
    for (unsigned i = static_cast<unsigned>(p); i < m; ++i) prefix[i] = g;
  }
}

std::uint64_t abs_u64(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

}  // namespace

LatticeSelector::LatticeSelector(unsigned dims, std::uint64_t modulus) : m(dims), k(modulus) {
  if (m == 0) throw UsageError("selector dimension must be >= 1");
  if (k == 0) throw DomainError("selector modulus must be >= 1");
}

void for_each_selector(const LatticeSelector& sel,
                       const std::function<void(std::span<const std::uint64_t>)>& visit,
                       std::uint64_t cap) {
  check_cap(sel, cap);
  walk_selector(sel, visit);
}

std::vector<Tuple> enumerate_selector(const LatticeSelector& sel, std::uint64_t cap) {
  check_cap(sel, cap);
  std::vector<Tuple> out;
  walk_selector(sel, [&out](std::span<const std::uint64_t> j) { out.emplace_back(j.begin(), j.end()); });
  return out;
}

std::vector<std::uint64_t> selector_sum_distribution(const LatticeSelector& sel, std::uint64_t cap) {
  check_cap(sel, cap);
  std::vector<std::uint64_t> count(sel.m * (sel.k - 1) + 1, 0);
  walk_selector(sel, [&count](std::span<const std::uint64_t> j) {
    ++count[std::accumulate(j.begin(), j.end(), std::uint64_t{0})];
  });
  return count;
}

Integer jordan(unsigned m, std::uint64_t k) {
  if (m == 0) throw UsageError("jordan: m must be >= 1");
  if (k == 0) throw DomainError("jordan: k must be >= 1");
  Integer out = 1;
  for (const auto& [p, e] : factorize(k)) {
    const Integer pm = ipow(to_integer(p), m);
    out *= ipow(pm, e) - ipow(pm, e - 1);
  }
  return out;
}

std::uint64_t euler_phi(std::uint64_t k) { return jordan(1, k).get_ui(); }

Integer ramanujan_cohen_enum(std::uint64_t k, std::span<const std::int64_t> n, std::uint64_t cap) {
  if (k < 2) throw DomainError("ramanujan_cohen_enum: enumeration oracle requires k >= 2");
  const LatticeSelector sel(static_cast<unsigned>(n.size()), k);
  check_cap(sel, cap);

  std::vector<std::uint64_t> residues(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    const auto sk = static_cast<std::int64_t>(k);
    residues[i] = static_cast<std::uint64_t>(((n[i] % sk) + sk) % sk);
  }
  std::vector<double> cosines(k);
  for (std::uint64_t r = 0; r < k; ++r)
    cosines[r] = std::cos(2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(k));

  double total = 0.0;
  walk_selector(sel, [&](std::span<const std::uint64_t> j) {
    std::uint64_t phase = 0;
    for (std::size_t i = 0; i < j.size(); ++i) phase = (phase + j[i] * residues[i]) % k;
    total += cosines[phase];
  });
  const double rounded = std::round(total);
  if (std::abs(total - rounded) >= 1e-6)
    throw ConsistencyError("ramanujan_cohen_enum: rounding residual " +
                           std::to_string(std::abs(total - rounded)) + " >= 1e-6");
  return Integer(static_cast<long>(rounded));
}

Integer ramanujan_cohen(std::uint64_t k, std::span<const std::int64_t> n) {
  if (n.empty()) throw UsageError("ramanujan_cohen: n must have at least one component");
  if (k == 0) throw DomainError("ramanujan_cohen: k must be >= 1");
  std::uint64_t g = 0;
  for (auto v : n) g = std::gcd(g, abs_u64(v));
  const std::uint64_t kg = std::gcd(k, g);
  const auto m = static_cast<unsigned long>(n.size());
  Integer out = 0;
  for (auto e : divisors(kg)) {
    const int mu = moebius(k / e);
    if (mu != 0) out += mu * ipow(to_integer(e), m);
  }
  return out;
}

Integer grid_power_sum(unsigned t, unsigned m, std::uint64_t e) {
  if (m == 0) throw UsageError("grid_power_sum: m must be >= 1");
  if (e == 0) throw DomainError("grid_power_sum: e must be >= 1");
  // Coefficients of (1 + x + ... + x^{e-1})^m: multiply by the window polynomial m times.
  std::vector<Integer> coeffs{1};
  for (unsigned r = 0; r < m; ++r) {
    std::vector<Integer> next(coeffs.size() + e - 1, 0);
    Integer window = 0;
    for (std::size_t s = 0; s < next.size(); ++s) {
      if (s < coeffs.size()) window += coeffs[s];
      if (s >= e) window -= coeffs[s - e];
      next[s] = window;
    }
    coeffs = std::move(next);
  }
  Integer out = 0;
  for (std::size_t s = 0; s < coeffs.size(); ++s) out += coeffs[s] * ipow(to_integer(s), t);
  return out;
}

Rational phi_t_enum(unsigned t, unsigned m, std::uint64_t k, std::uint64_t cap) {
  if (k < 2) return 0;
  const auto count = selector_sum_distribution(LatticeSelector(m, k), cap);
  Integer acc = 0;
  for (std::size_t s = 0; s < count.size(); ++s)
    if (count[s] != 0) acc += to_integer(count[s]) * ipow(to_integer(s), t);
  return make_rational(acc, ipow(to_integer(k), t));
}

Rational phi_t_closed(unsigned t, unsigned m, std::uint64_t k) {
  if (m == 0) throw UsageError("phi_t: m must be >= 1");
  if (k == 0) throw DomainError("phi_t: k must be >= 1");
  if (k == 1) return 0;
  Rational acc = 0;
  for (auto e : divisors(k)) {
    const int mu = moebius(k / e);
    if (mu == 0) continue;
    acc += mu * make_rational(grid_power_sum(t, m, e), ipow(to_integer(e), t));
  }
  return acc;
}

Rational phi_t(unsigned t, unsigned m, std::uint64_t k, std::uint64_t cap) {
  Rational closed = phi_t_closed(t, m, k);
  if (closed != phi_t_enum(t, m, k, cap))
    throw ConsistencyError("phi_t: enumeration and Moebius routes disagree");
  return closed;
}

Integer unnormalized_phi(unsigned t, unsigned m, std::uint64_t k, std::uint64_t cap) {
  const Rational scaled = phi_t(t, m, k, cap) * Rational(ipow(to_integer(k), t));
  if (scaled.get_den() != 1) throw ConsistencyError("unnormalized_phi: non-integral value");
  return scaled.get_num();
}

std::uint64_t m_phi(std::uint64_t m_fixed, std::uint64_t k, RangeConvention range) {
  if (k == 0) throw DomainError("m_phi: k must be >= 1");
  const std::uint64_t last = range == RangeConvention::HalfOpen ? k - 1 : k;
  const std::uint64_t base = std::gcd(m_fixed, k);
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a <= last; ++a)
    if (std::gcd(a, base) == 1 && a + m_fixed != 0) ++count;
  return count;
}

Rational sigma(long s, std::uint64_t n) {
  Rational acc = 0;
  for (auto d : divisors(n)) acc += rpow(Rational(to_integer(d)), s);
  return acc;
}

std::complex<double> selector_character_sum(std::uint64_t k, std::span<const double> thetas,
                                            std::uint64_t cap) {
  const LatticeSelector sel(static_cast<unsigned>(thetas.size()), k);
  check_cap(sel, cap);
  std::complex<double> total = 0.0;
  walk_selector(sel, [&](std::span<const std::uint64_t> j) {
    double phase = 0.0;
    for (std::size_t i = 0; i < j.size(); ++i) phase += static_cast<double>(j[i]) * thetas[i];
    // Only the fractional part of phase / k matters.
    const double turns = std::fmod(phase / static_cast<double>(k), 1.0);
    total += std::polar(1.0, 2.0 * std::numbers::pi * turns);
  });
  return total;
}

}  // namespace vpv
