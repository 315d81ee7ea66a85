#pragma once

// Exact integer/rational arithmetic and the classical combinatorial functions
// (Moebius, divisors, Bernoulli, Stirling, Faulhaber).

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace vpv {

using Integer = mpz_class;
/// Always canonical: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// Parses "p", "-p", "p/q". Throws UsageError on malformed text or q == 0.
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& value);
/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

Integer ipow(const Integer& base, unsigned long exponent);
/// base^exponent with 0^0 = 1. Negative exponents of zero throw DomainError.
Rational rpow(const Rational& base, long exponent);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-exponent decomposition with strictly ascending primes; 1 factors as {}.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> pairs);

  const std::vector<PrimePower>& pairs() const noexcept { return pairs_; }
  bool empty() const noexcept { return pairs_.empty(); }
  std::size_t size() const noexcept { return pairs_.size(); }
  auto begin() const noexcept { return pairs_.begin(); }
  auto end() const noexcept { return pairs_.end(); }

  /// Product of p^e.
  Integer value() const;

 private:
  std::vector<PrimePower> pairs_;
};

std::uint64_t gcd_many(std::span<const std::uint64_t> xs);
std::uint64_t gcd_many(std::initializer_list<std::uint64_t> xs);

/// Limit of the cached smallest-prime-factor sieve; larger inputs use trial division.
inline constexpr std::uint64_t kSieveLimit = 1'000'000;

Factorization factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);
int moebius(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Bernoulli numbers with B_1 = -1/2.
Rational bernoulli(unsigned a);

/// Stirling numbers of the second kind; S(0,0) = 1, S(n,j) = 0 for j > n.
Integer stirling2(unsigned n, unsigned j);

/// sum_{A=0}^{k-1} A^m with 0^0 = 1, by direct summation.
Integer faulhaber_sum_direct(unsigned m, std::uint64_t k);
/// Same sum from the Bernoulli closed form.
Integer faulhaber_sum_bernoulli(unsigned m, std::uint64_t k);
/// Computes both routes; throws ConsistencyError if they differ.
Integer faulhaber_sum(unsigned m, std::uint64_t k);

}  // namespace vpv
