#ifndef LLL_BOUNDS_HPP
#define LLL_BOUNDS_HPP

// Exact and asymptotic evaluation of the resampling bound chain:
//   Q_0 = 1,  Q_n = p * sum_{n_1+..+n_D = n-1} Q_{n_1}...Q_{n_D}
// whose Lagrange-inversion closed form is Q_n = p^n C(Dn, n) / ((D-1)n + 1).

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lll/errors.hpp"
#include "lll/series.hpp"

namespace lll {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational parse_rational(const std::string& text);  // "a/b" or "a"
std::string to_string(const Rational& q);          // "a/b", or "a" when integral

class NoCutoffError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct BoundParams {
  Rational p;
  int delta = 2;
  std::uint64_t m = 1;
  double A = 4.0;

  void check() const;  // throws std::invalid_argument
};

/// Largest n accepted by q_recurrence.
inline constexpr std::size_t kRecurrenceCap = 256;

/// Q_0..Q_n of the recurrence, by repeated D-fold convolution.
template <class Scalar>
std::vector<Scalar> resampling_recurrence(const Scalar& p, int delta, std::size_t n) {
  std::vector<Scalar> q{Scalar(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    const auto power = series_pow(q, static_cast<unsigned>(delta), k);
    q.push_back(p * power[k - 1]);
  }
  return q;
}

std::vector<Rational> q_recurrence_series(const BoundParams& params, std::size_t n);
Rational q_recurrence(const BoundParams& params, std::size_t n);

BigInt binomial(unsigned n, unsigned k);
Rational q_closed_form(const BoundParams& params, std::size_t n);

/// b = (1 + 1/(D-1))^(D-1) * p * D.
double growth_base(const BoundParams& params);

/// sqrt(1 + 1/(D-1)) * b^n.
double phase_bound(const BoundParams& params, std::size_t n);

/// log of (A n)^m b^n; the bound itself overflows doubles quickly.
double log_algorithm_bound(const BoundParams& params, std::size_t n);

struct LllCondition {
  bool strict = false;   // b < 1
  bool classic = false;  // e p D <= 1
};

LllCondition lll_condition(const BoundParams& params);
LllCondition lll_condition(double p, int delta);

/// Smallest N >= 1 such that m log n + m log A + n log b < 0 for every n >= N.
std::uint64_t cutoff_estimate(std::uint64_t m, double A, double b);
std::uint64_t cutoff_estimate(const BoundParams& params);

struct BoundSeries {
  std::vector<Rational> q_exact;
  std::vector<double> q_asymptotic;  // phase_bound(n); q_asymptotic[0] is phase_bound at n = 0
  double base = 0.0;
};

/// Q_0..Q_n from the recurrence, checked term by term against the closed form.
BoundSeries bound_series(const BoundParams& params, std::size_t n);

/// Rows n, Q_n as a fraction, Q_n as a double, phase_bound(n), b^n.
void write_bound_csv(std::ostream& out, const BoundSeries& series);

}  // namespace lll

#endif  // LLL_BOUNDS_HPP
