#include "vpv/audit.hpp"

#include "vpv/errors.hpp"

#include <algorithm>
#include <set>

namespace vpv::audit {

Discovery discover_linear_relation(const ArithmeticFunction& target, const std::vector<ArithmeticFunction>& basis,
                                   std::span<const std::uint64_t> k_fit, std::uint64_t k_verify_max) {
  const std::size_t nb = basis.size();
  if (nb == 0) throw UsageError("discover_linear_relation: empty basis");
  if (std::set<std::uint64_t>(k_fit.begin(), k_fit.end()).size() != k_fit.size())
    throw UsageError("discover_linear_relation: fit points must be distinct");
  if (k_fit.size() < nb) throw UsageError("discover_linear_relation: need at least as many fit points as basis functions");

  // Least-squares is pointless in exact arithmetic: take the first nb rows, use the rest
  // as extra verification points through the general loop below.
  std::vector<std::vector<Rational>> A(nb, std::vector<Rational>(nb + 1));
  for (std::size_t r = 0; r < nb; ++r) {
    for (std::size_t c = 0; c < nb; ++c) A[r][c] = basis[c](k_fit[r]);
    A[r][nb] = target(k_fit[r]);
  }

  Discovery out;
  for (std::size_t col = 0; col < nb; ++col) {
    std::size_t pivot = col;
    while (pivot < nb && A[pivot][col] == 0) ++pivot;
    if (pivot == nb) {
      out.singular = true;
      out.message = "fit system is singular";
      return out;
    }
    std::swap(A[col], A[pivot]);
    for (std::size_t r = 0; r < nb; ++r) {
      if (r == col || A[r][col] == 0) continue;
      const Rational f = A[r][col] / A[col][col];
      for (std::size_t c = col; c <= nb; ++c) A[r][c] -= f * A[col][c];
    }
  }
  out.fitted.resize(nb);
  for (std::size_t i = 0; i < nb; ++i) out.fitted[i] = A[i][nb] / A[i][i];

  const std::uint64_t k_min = *std::min_element(k_fit.begin(), k_fit.end());
  for (std::uint64_t k = k_min; k <= k_verify_max; ++k) {
    Rational v = 0;
    for (std::size_t i = 0; i < nb; ++i) v += out.fitted[i] * basis[i](k);
    if (v != target(k)) {
      out.first_failure = k;
      out.message = "fitted relation fails at k = " + std::to_string(k);
      return out;
    }
  }
  for (auto k : k_fit) {
    if (k <= k_verify_max && k >= k_min) continue;
    Rational v = 0;
    for (std::size_t i = 0; i < nb; ++i) v += out.fitted[i] * basis[i](k);
    if (v != target(k)) {
      out.first_failure = k;
      out.message = "fitted relation fails at k = " + std::to_string(k);
      return out;
    }
  }
  out.coefficients = out.fitted;
  out.message = "verified for " + std::to_string(k_min) + " <= k <= " + std::to_string(k_verify_max);
  return out;
}

}  // namespace vpv::audit
