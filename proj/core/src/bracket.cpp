#include "vpv/engine.hpp"

#include "vpv/errors.hpp"
#include "vpv/totients.hpp"

namespace vpv {

namespace {

using Poly = std::vector<Rational>;

// Product truncated after x^m.
Poly multiply(const Poly& a, const Poly& b, unsigned m) {
  Poly out(m + 1, Rational(0));
  for (unsigned i = 0; i <= m; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; i + j <= m; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Rational product_coefficient(unsigned m, std::span<const Rational> bs, const std::function<Rational(unsigned, const Rational&)>& coeff) {
  if (bs.empty()) throw UsageError("bracket polynomial needs h >= 1 values b");
  Poly acc(m + 1, Rational(0));
  acc[0] = 1;
  for (const auto& b : bs) {
    Poly factor(m + 1);
    for (unsigned d = 0; d <= m; ++d) factor[d] = coeff(d, b);
    acc = multiply(acc, factor, m);
  }
  return acc[m];
}

Rational q_of(std::uint64_t v) { return Rational(Integer(static_cast<unsigned long>(v))); }

}  // namespace

Rational bracket_T(unsigned mu, std::uint64_t k) {
  if (mu == 0) throw UsageError("bracket_T: mu must be >= 1");
  if (k == 0) throw DomainError("bracket_T: k must be >= 1");
  Rational t = 0;
  for (unsigned alpha = 1; alpha <= mu; ++alpha)
    t -= Rational(binomial(mu, alpha)) * bernoulli(alpha) / rpow(q_of(k), static_cast<long>(alpha) - 1);
  return t;
}

Rational bracket_polynomial(unsigned m, std::uint64_t k, std::span<const Rational> bs) {
  if (k == 0) throw DomainError("bracket_polynomial: k must be >= 1");
  return product_coefficient(m, bs, [k](unsigned d, const Rational& b) {
    return Rational(bracket_T(d + 1, k) * rpow(b, static_cast<long>(d)));
  });
}

Rational bracket_oracle(unsigned m, std::uint64_t k, std::span<const Rational> bs) {
  if (k == 0) throw DomainError("bracket_oracle: k must be >= 1");
  // (1/k) sum_{A<k} e^{b A x / k} = sum_d (b/k)^d F_d(k) / (k d!) x^d with F_d(k) = sum_{A<k} A^d
  const Rational kk = q_of(k);
  return product_coefficient(m, bs, [&](unsigned d, const Rational& b) {
    return Rational(rpow(b / kk, static_cast<long>(d)) * Rational(faulhaber_sum(d, k)) / (kk * Rational(factorial(d))));
  });
}

Rational bracket_grid(unsigned m, std::uint64_t k, std::span<const Rational> bs) {
  if (bs.empty()) throw UsageError("bracket_grid needs h >= 1 values b");
  if (k == 0) throw DomainError("bracket_grid: k must be >= 1");
  const auto h = static_cast<unsigned>(bs.size());
  std::uint64_t cells = 1;
  for (unsigned i = 0; i < h; ++i) {
    if (cells > kDefaultSelectorCap / k) throw ResourceError("bracket_grid: grid [0,k)^h too large");
    cells *= k;
  }
  const Rational kk = q_of(k);
  std::vector<std::uint64_t> A(h, 0);
  Rational total = 0;
  while (true) {
    Rational dot = 0;
    for (unsigned i = 0; i < h; ++i) dot += bs[i] * q_of(A[i]);
    total += rpow(dot / kk, static_cast<long>(m));
    int p = static_cast<int>(h) - 1;
    while (p >= 0 && A[p] + 1 == k) A[p--] = 0;
    if (p < 0) break;
    ++A[p];
  }
  return total;
}

ExactSides bracket_summation_sides(unsigned m, const FiniteSequence& a, std::span<const FiniteSequence> bs,
                                   bool printed) {
  if (bs.empty()) throw UsageError("bracket_summation_sides: need h >= 1 sequences b");
  const auto h = static_cast<unsigned>(bs.size());
  auto b_at = [&](std::uint64_t k) {
    std::vector<Rational> v(h);
    for (unsigned l = 0; l < h; ++l) v[l] = bs[l][k];
    return v;
  };

  ExactSides out{0, 0};
  for (const auto& [k, ak] : a.support()) {
    const auto b = b_at(k);
    out.lhs += ak * (printed ? bracket_polynomial(m, k, b) : bracket_grid(m, k, b));
  }
  const std::uint64_t n = a.bound();
  for (std::uint64_t M = 2; M <= n; ++M) {
    const Rational MM = q_of(M);
    for (std::uint64_t k = 1; k <= n / M; ++k) {
      const Rational amk = a[M * k];
      if (amk == 0) continue;
      const auto b = b_at(M * k);
      Rational inner = 0;
      for_each_selector(LatticeSelector(h, M), [&](std::span<const std::uint64_t> j) {
        Rational dot = 0;
        for (unsigned l = 0; l < h; ++l) dot += b[l] * q_of(j[l]);
        inner += rpow(dot / MM, static_cast<long>(m));
      });
      out.rhs += amk * inner;
    }
  }
  return out;
}

}  // namespace vpv
