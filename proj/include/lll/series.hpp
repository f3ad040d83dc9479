#ifndef LLL_SERIES_HPP
#define LLL_SERIES_HPP

// Truncated power series as coefficient vectors, generic in the scalar so the
// same code runs on exact rationals and on doubles.

#include <algorithm>
#include <cstddef>
#include <vector>

namespace lll {

/// Truncated power-series product, keeping degrees < len.
template <class Scalar>
std::vector<Scalar> series_mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                               std::size_t len) {
  std::vector<Scalar> c(len, Scalar(0));
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == Scalar(0)) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

template <class Scalar>
std::vector<Scalar> series_pow(const std::vector<Scalar>& a, unsigned k, std::size_t len) {
  std::vector<Scalar> result(len, Scalar(0));
  if (len == 0) return result;
  result[0] = Scalar(1);
  std::vector<Scalar> base(a.begin(), a.begin() + std::min(a.size(), len));
  while (k) {
    if (k & 1u) result = series_mul(result, base, len);
    k >>= 1;
    if (k) base = series_mul(base, base, len);
  }
  return result;
}

}  // namespace lll

#endif  // LLL_SERIES_HPP
