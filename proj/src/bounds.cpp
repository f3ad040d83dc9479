#include "lll/bounds.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <ostream>

namespace lll {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (text.empty() || slash == 0 || slash + 1 == text.size())
    throw std::invalid_argument("not a rational: '" + text + "'");
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

std::string to_string(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

void BoundParams::check() const {
  if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0,1]");
  if (delta < 2) throw std::invalid_argument("Delta must be at least 2");
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (!(A > 0.0)) throw std::invalid_argument("A must be positive");
}

std::vector<Rational> q_recurrence_series(const BoundParams& params, std::size_t n) {
  params.check();
  if (n > kRecurrenceCap) throw SizeError("q_recurrence: n exceeds cap " + std::to_string(kRecurrenceCap));
  return resampling_recurrence(params.p, params.delta, n);
}

Rational q_recurrence(const BoundParams& params, std::size_t n) {
  return q_recurrence_series(params, n).back();
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;  // exact at every step
  return r;
}

Rational q_closed_form(const BoundParams& params, std::size_t n) {
  params.check();
  const auto d = static_cast<unsigned>(params.delta);
  const auto nn = static_cast<unsigned>(n);
  Rational pn = 1;
  for (std::size_t i = 0; i < n; ++i) pn *= params.p;
  return pn * Rational(binomial(d * nn, nn)) / Rational(BigInt((d - 1) * nn + 1));
}

double growth_base(const BoundParams& params) {
  params.check();
  const double d = params.delta;
  return std::pow(d / (d - 1.0), d - 1.0) * params.p.convert_to<double>() * d;
}

double phase_bound(const BoundParams& params, std::size_t n) {
  const double d = params.delta;
  return std::sqrt(1.0 + 1.0 / (d - 1.0)) * std::pow(growth_base(params), static_cast<double>(n));
}

double log_algorithm_bound(const BoundParams& params, std::size_t n) {
  const double nn = static_cast<double>(n);
  return static_cast<double>(params.m) * std::log(params.A * nn) + nn * std::log(growth_base(params));
}

namespace {

bool classic_holds(double p, int delta) {
  // inclusive boundary, up to rounding of e * p * D
  return std::numbers::e * p * delta <= 1.0 + 8 * DBL_EPSILON;
}

void check_implication(const LllCondition& c) {
  if (c.classic && !c.strict) throw std::logic_error("lll_condition: classic condition without strict");
}

}  // namespace

LllCondition lll_condition(const BoundParams& params) {
  params.check();
  // b = D^D p / (D-1)^(D-1), compared exactly
  const int d = params.delta;
  BigInt num = 1, den = 1;
  for (int i = 0; i < d; ++i) num *= d;
  for (int i = 0; i < d - 1; ++i) den *= d - 1;
  const Rational b = Rational(num, den) * params.p;
  LllCondition c{b < 1, classic_holds(params.p.convert_to<double>(), d)};
  check_implication(c);
  return c;
}

LllCondition lll_condition(double p, int delta) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
  if (delta < 2) throw std::invalid_argument("Delta must be at least 2");
  const double d = delta;
  LllCondition c{std::pow(d / (d - 1.0), d - 1.0) * p * d < 1.0, classic_holds(p, delta)};
  check_implication(c);
  return c;
}

std::uint64_t cutoff_estimate(std::uint64_t m, double A, double b) {
  if (!(A > 1.0)) throw std::invalid_argument("cutoff_estimate: A must exceed 1");
  if (m < 1) throw std::invalid_argument("cutoff_estimate: m must be positive");
  if (!(b < 1.0)) throw NoCutoffError("cutoff_estimate: growth base is not below 1");
  if (b <= 0.0) return 1;
  const double mm = static_cast<double>(m);
  const double lb = std::log(b);
  auto f = [&](double n) { return mm * std::log(A * n) + n * lb; };

  // f is concave with its maximum at -m / log b
  const double peak = std::max(1.0, -mm / lb);
  const double lo_peak = std::max(1.0, std::floor(peak));
  if (f(lo_peak) < 0.0 && f(std::ceil(peak)) < 0.0) return 1;

  auto lo = static_cast<std::uint64_t>(std::ceil(peak));  // f(lo) may still be >= 0
  if (f(static_cast<double>(lo)) < 0.0) {
    // the integer peak sits at floor(peak); everything beyond it is negative
    return lo;
  }
  std::uint64_t hi = lo * 2;
  while (f(static_cast<double>(hi)) >= 0.0) {
    lo = hi;
    hi *= 2;
  }
  // f(lo) >= 0 > f(hi), f decreasing on [lo, hi]
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (f(static_cast<double>(mid)) >= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

std::uint64_t cutoff_estimate(const BoundParams& params) {
  params.check();
  if (!lll_condition(params).strict) throw NoCutoffError("cutoff_estimate: strict condition fails");
  return cutoff_estimate(params.m, params.A, growth_base(params));
}

BoundSeries bound_series(const BoundParams& params, std::size_t n) {
  BoundSeries s;
  s.q_exact = q_recurrence_series(params, n);
  for (std::size_t k = 0; k <= n; ++k) {
    if (s.q_exact[k] != q_closed_form(params, k))
      throw std::logic_error("bound_series: recurrence and closed form disagree at n=" + std::to_string(k));
    s.q_asymptotic.push_back(phase_bound(params, k));
  }
  s.base = growth_base(params);
  return s;
}

void write_bound_csv(std::ostream& out, const BoundSeries& series) {
  const auto old = out.precision(17);
  out << "n,q_exact,q_float,phase_bound,b_pow_n\n";
  for (std::size_t n = 0; n < series.q_exact.size(); ++n) {
    out << n << ',' << to_string(series.q_exact[n]) << ',' << series.q_exact[n].convert_to<double>()
        << ',' << series.q_asymptotic[n] << ',' << std::pow(series.base, static_cast<double>(n)) << '\n';
  }
  out.precision(old);
}

}  // namespace lll
