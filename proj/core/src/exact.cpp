#include "vpv/exact.hpp"

#include "vpv/errors.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace vpv {

namespace {

Integer to_integer(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

// Smallest prime factor for every n < kSieveLimit, built on first use.
const std::vector<std::uint32_t>& spf_table() {
  static const std::vector<std::uint32_t> table = [] {
    std::vector<std::uint32_t> spf(kSieveLimit, 0);
    for (std::uint64_t i = 2; i < kSieveLimit; ++i) {
      if (spf[i] != 0) continue;
      for (std::uint64_t j = i; j < kSieveLimit; j += i) {
        if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
      }
    }
    return spf;
  }();
  return table;
}

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw DomainError(std::string(what) + ": argument must be >= 1");
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in '" + text + "'");
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw UsageError("not a rational number: '" + text + "'");
  }
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational rpow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (exponent > 0) {
    const auto e = static_cast<unsigned long>(exponent);
    return make_rational(ipow(base.get_num(), e), ipow(base.get_den(), e));
  }
  if (base == 0) throw DomainError("zero raised to a negative power");
  const auto e = static_cast<unsigned long>(-exponent);
  return make_rational(ipow(base.get_den(), e), ipow(base.get_num(), e));
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Factorization::Factorization(std::vector<PrimePower> pairs) : pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].exponent == 0 || pairs_[i].prime < 2)
      throw DomainError("factorization: prime >= 2 and exponent >= 1 required");
    if (i > 0 && pairs_[i - 1].prime >= pairs_[i].prime)
      throw DomainError("factorization: primes must be strictly ascending");
  }
}

Integer Factorization::value() const {
  Integer out = 1;
  for (const auto& [p, e] : pairs_) out *= ipow(to_integer(p), e);
  return out;
}

std::uint64_t gcd_many(std::span<const std::uint64_t> xs) {
  if (xs.empty()) throw UsageError("gcd_many: empty list");
  std::uint64_t g = 0;
  for (auto x : xs) g = std::gcd(g, x);
  return g;
}

std::uint64_t gcd_many(std::initializer_list<std::uint64_t> xs) {
  return gcd_many(std::span<const std::uint64_t>(xs.begin(), xs.size()));
}

Factorization factorize(std::uint64_t n) {
  require_positive(n, "factorize");
  std::vector<PrimePower> pairs;
  auto push = [&pairs](std::uint64_t p) {
    if (!pairs.empty() && pairs.back().prime == p)
      ++pairs.back().exponent;
    else
      pairs.push_back({p, 1});
  };
  if (n < kSieveLimit) {
    const auto& spf = spf_table();
    while (n > 1) {
      const std::uint64_t p = spf[n];
      push(p);
      n /= p;
    }
    return Factorization(std::move(pairs));
  }
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      push(p);
      n /= p;
    }
  }
  if (n > 1) push(n);
  return Factorization(std::move(pairs));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.size() == 1 && f.pairs()[0].exponent == 1;
}

int moebius(std::uint64_t n) {
  require_positive(n, "moebius");
  int sign = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  require_positive(n, "divisors");
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational bernoulli(unsigned a) {
  // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1, which fixes B_1 = -1/2.
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  while (table.size() <= a) {
    const auto n = static_cast<unsigned>(table.size());
    Rational acc = 0;
    for (unsigned j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * table[j];
    table.push_back(-acc / Rational(n + 1));
  }
  return table[a];
}

Integer stirling2(unsigned n, unsigned j) {
  if (j > n) return 0;
  // row[i] holds S(r, i) for the current row r.
  std::vector<Integer> row(j + 1, 0);
  row[0] = 1;
  for (unsigned r = 1; r <= n; ++r) {
    for (unsigned i = std::min(r, j); i >= 1; --i) row[i] = Integer(i) * row[i] + row[i - 1];
    row[0] = 0;
  }
  return row[j];
}

Integer faulhaber_sum_direct(unsigned m, std::uint64_t k) {
  require_positive(k, "faulhaber_sum");
  Integer acc = 0;
  for (std::uint64_t a = 0; a < k; ++a) acc += ipow(to_integer(a), m);  // mpz_pow_ui(0,0) = 1
  return acc;
}

Integer faulhaber_sum_bernoulli(unsigned m, std::uint64_t k) {
  require_positive(k, "faulhaber_sum");
  // sum_{A<k} A^m = 1/(m+1) * sum_{j=0}^{m} C(m+1, j) B_j k^{m+1-j}   (B_1 = -1/2)
  const Integer kk = to_integer(k);
  Rational acc = 0;
  for (unsigned j = 0; j <= m; ++j)
    acc += Rational(binomial(m + 1, j)) * bernoulli(j) * Rational(ipow(kk, m + 1 - j));
  acc /= Rational(m + 1);
  if (acc.get_den() != 1) throw ConsistencyError("faulhaber closed form is not an integer");
  return acc.get_num();
}

Integer faulhaber_sum(unsigned m, std::uint64_t k) {
  Integer direct = faulhaber_sum_direct(m, k);
  if (direct != faulhaber_sum_bernoulli(m, k))
    throw ConsistencyError("faulhaber_sum: direct and Bernoulli routes disagree");
  return direct;
}

}  // namespace vpv
