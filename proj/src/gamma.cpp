#include "lll/gamma.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "lll/series.hpp"

namespace lll {

void PhiParams::check() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw std::invalid_argument("gamma must be positive");
  if (!(r >= 3.0) || !std::isfinite(r)) throw std::invalid_argument("r must be at least 3");
}

double PhiParams::q() const { return -std::expm1(-1.0 / gamma); }

double PhiParams::radius() const { return 1.0 / std::expm1(1.0 / gamma); }

namespace {

// 1 - q^2 (x+1)^2, positive on [0, R)
double pole_factor(double x, double q) {
  const double s = q * (x + 1.0);
  return (1.0 - s) * (1.0 + s);
}

void check_domain(double x, const PhiParams& p) {
  p.check();
  if (!(x >= 0.0) || !(x < p.radius()) || !(pole_factor(x, p.q()) > 0.0))
    throw std::domain_error("phi: argument outside [0, R)");
}

// phi'/phi
double log_derivative(double x, double q, double r) {
  const double d = pole_factor(x, q);
  return 2.0 * r / (x + 1.0) + 2.0 * q * q * (x + 1.0) / d;
}

// t phi'(t)/phi(t) - 1; increasing on (0, R), -1 at 0, +inf at R
double char_fn(double t, double q, double r) { return t * log_derivative(t, q, r) - 1.0; }

double char_fn_prime(double t, double q, double r) {
  const double d = pole_factor(t, q);
  const double x1 = t + 1.0;
  return 2.0 * r / (x1 * x1) + 2.0 * q * q * ((2.0 * t + 1.0) * d + 2.0 * q * q * t * x1 * x1) / (d * d);
}

}  // namespace

double phi(double x, const PhiParams& p) {
  check_domain(x, p);
  const double q = p.q();
  const double log_phi = -std::log(p.gamma) + (2.0 * p.r - 3.0) * std::log(q) + 2.0 * p.r * std::log1p(x) -
                         std::log(pole_factor(x, q));
  return std::exp(log_phi);
}

double phi_prime(double x, const PhiParams& p) {
  return phi(x, p) * log_derivative(x, p.q(), p.r);
}

GammaSolution solve_tau(const PhiParams& params, double tol) {
  params.check();
  if (!(tol > 0.0)) throw std::invalid_argument("solve_tau: tolerance must be positive");
  const double q = params.q();
  const double r = params.r;
  const double R = params.radius();

  double lo = 0.0;
  double hi = 0.0;
  for (int k = 1;; ++k) {
    const double x = R * (1.0 - std::ldexp(1.0, -k));
    if (!(pole_factor(x, q) > 0.0) || k > 60) throw SolverError("solve_tau: no sign change below R");
    if (char_fn(x, q, r) > 0.0) {
      hi = x;
      break;
    }
    lo = x;
  }

  double t = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double h = char_fn(t, q, r);
    if (h == 0.0) break;
    if (h < 0.0)
      lo = t;
    else
      hi = t;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
    double next = t - h / char_fn_prime(t, q, r);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == t) break;
    t = next;
  }

  GammaSolution s;
  s.params = params;
  s.tau = t;
  const double f = phi(t, params);
  s.rho = f / t;
  s.residual = std::abs(char_fn(t, q, r));
  if (!(s.residual <= tol))
    throw SolverError("solve_tau: residual " + std::to_string(s.residual) + " above tolerance");
  return s;
}

double min_gamma(double r, double tol) {
  if (!(r >= 3.0)) throw std::invalid_argument("min_gamma: r must be at least 3");
  if (!(tol > 0.0)) throw std::invalid_argument("min_gamma: tolerance must be positive");
  auto rho = [r](double g) { return solve_tau({g, r}).rho; };

  constexpr double kSmallest = 0.05;  // below this q rounds to 1 in double precision
  double hi = 1.0;
  while (rho(hi) >= 1.0) {
    hi *= 2.0;
    if (hi > 1e6) throw SolverError("min_gamma: no gamma with rho < 1");
  }
  double lo = hi / 2.0;
  while (rho(lo) < 1.0) {
    hi = lo;
    lo /= 2.0;
    if (lo < kSmallest) throw SolverError("min_gamma: bracket fell below the representable range");
  }

  constexpr int kSamples = 32;
  double prev = rho(lo);
  for (int i = 1; i <= kSamples; ++i) {
    const double cur = rho(lo + (hi - lo) * i / kSamples);
    if (!(cur < prev)) throw SolverError("min_gamma: rho is not decreasing in gamma on the bracket");
    prev = cur;
  }

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (rho(mid) < 1.0)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

double half_length_for_girth(int girth, GirthModel model) {
  if (girth < 3) throw std::invalid_argument("girth must be at least 3");
  if (model == GirthModel::conservative) return std::max(3.0, std::ceil(girth / 2.0));
  return std::max(3.0, (girth + 1) / 2.0);
}

int admissible_gamma_millis(int girth, GirthModel model) {
  static std::mutex mu;
  static std::map<double, int> cache;  // keyed by r
  const double r = half_length_for_girth(girth, model);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(r); it != cache.end()) return it->second;
  }
  const int millis = static_cast<int>(std::ceil(min_gamma(r, 1e-10) * 1000.0));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(r, millis);
  return millis;
}

std::int64_t colors_needed(int delta, int girth, GirthModel model) {
  if (delta < 0) throw std::invalid_argument("colors_needed: negative degree");
  if (delta <= 1) return delta;
  const std::int64_t g = admissible_gamma_millis(girth, model);
  const std::int64_t scaled = (2000 + g) * (delta - 1);
  return (scaled + 999) / 1000 + 1;
}

CycleProbBounds cycle_prob_bounds(double gamma, int delta, int k) {
  if (!(gamma > 0.0)) throw std::invalid_argument("cycle_prob_bounds: gamma must be positive");
  if (delta < 2) throw std::invalid_argument("cycle_prob_bounds: Delta must be at least 2");
  if (k < 3) throw std::invalid_argument("cycle_prob_bounds: k must be at least 3");
  const double q = -std::expm1(-1.0 / gamma);
  const double pair = std::pow(q, 2 * k - 3) / (gamma * (delta - 1));
  return {pair, (delta - 1) * pair};
}

std::vector<double> q_coloring_series(double gamma, int r, std::size_t n, double eps) {
  PhiParams{gamma, static_cast<double>(r)}.check();
  if (!(eps > 0.0)) throw std::invalid_argument("q_coloring_series: eps must be positive");
  if (n > kColoringRecurrenceCap) throw std::length_error("q_coloring_series: n exceeds cap");
  const double q = -std::expm1(-1.0 / gamma);
  const double q2 = q * q;

  std::vector<double> Q{1.0};
  for (std::size_t m = 1; m <= n; ++m) {
    auto power = series_pow(Q, static_cast<unsigned>(2 * r), m);  // Q^(2k) for k = r
    const auto square = series_mul(Q, Q, m);
    double coef = std::pow(q, 2 * r - 3) / gamma;  // (1/gamma) q^(2k-3)
    double sum = 0.0;
    double prev = 0.0;
    for (int k = r;; ++k) {
      const double term = coef * power[m - 1];
      sum += term;
      if (k > r && prev > 0.0) {
        const double ratio = term / prev;
        if (ratio < 1.0 && term * ratio / (1.0 - ratio) <= eps * sum) break;
      }
      if (term == 0.0 && k > r) break;
      if (k - r > 1'000'000) throw SolverError("q_coloring_series: k-sum did not converge");
      prev = term;
      coef *= q2;
      power = series_mul(power, square, m);
    }
    Q.push_back(sum);
  }
  return Q;
}

double q_coloring_recurrence(double gamma, int r, std::size_t n, double eps) {
  return q_coloring_series(gamma, r, n, eps).back();
}

}  // namespace lll
