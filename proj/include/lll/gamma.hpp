#ifndef LLL_GAMMA_HPP
#define LLL_GAMMA_HPP

// Growth rate of the bichromatic-cycle recurrence and the palette slack it
// implies.
//
// With q = 1 - exp(-1/gamma) the generating function W = Q - 1 of
//   Q_n = sum_{k>=r} (1/gamma) q^(2k-3) [x^(n-1)] Q(x)^(2k),   Q_0 = 1
// satisfies W = z phi(W) with
//   phi(x) = (1/gamma) q^(2r-3) (x+1)^(2r) / (1 - q^2 (x+1)^2),
// analytic on |x| < R = 1/q - 1. The coefficients grow like rho^n where
// rho = phi(tau)/tau and tau in (0, R) solves phi(tau) = tau phi'(tau).
// A palette of ceil((2 + gamma)(Delta - 1)) + 1 colors suffices when rho < 1.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lll {

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PhiParams {
  double gamma = 1.0;
  /// Half-length of the shortest bichromatic cycle that can occur; at least 3.
  /// Integral in the recurrence; fractional values interpolate between girths.
  double r = 3.0;

  void check() const;  // throws std::invalid_argument
  double q() const;    // 1 - exp(-1/gamma)
  double radius() const;  // 1/q - 1
};

/// Throws std::domain_error outside [0, R).
double phi(double x, const PhiParams& params);
double phi_prime(double x, const PhiParams& params);

struct GammaSolution {
  PhiParams params;
  double tau = 0.0;
  double rho = 0.0;
  double residual = 0.0;  // |phi(tau) - tau phi'(tau)| / phi(tau)
};

/// Root of phi(t) - t phi'(t) on (0, R): sign bracket, then Newton steps kept
/// inside the bracket (bisection when a step leaves it).
GammaSolution solve_tau(const PhiParams& params, double tol = 1e-12);

inline double growth_rate(double gamma, double r) { return solve_tau({gamma, r}).rho; }

/// Smallest gamma (to within tol) with rho(gamma, r) < 1. Returns the upper
/// end of the final bracket, so rho(result) < 1 always holds. Checks on a
/// sample grid that rho decreases across the initial bracket.
double min_gamma(double r, double tol = 1e-4);

enum class GirthModel {
  conservative,  // r = max(3, ceil(girth / 2)): shortest even cycle length allowed by the girth
  interpolated,  // r = max(3, (girth + 1) / 2): girth read as 2r - 1 for every girth
};

double half_length_for_girth(int girth, GirthModel model = GirthModel::conservative);

/// min_gamma rounded up to three decimals, in thousandths (1731 for girth 3..6).
/// Memoized; safe to call from several threads.
int admissible_gamma_millis(int girth, GirthModel model = GirthModel::conservative);
inline double admissible_gamma(int girth, GirthModel model = GirthModel::conservative) {
  return admissible_gamma_millis(girth, model) / 1000.0;
}

/// ceil((2 + gamma)(Delta - 1)) + 1 with gamma = admissible_gamma(girth).
std::int64_t colors_needed(int delta, int girth, GirthModel model = GirthModel::conservative);

struct CycleProbBounds {
  double pair_bound;  // two given consecutive edges on a bichromatic 2k-cycle
  double edge_bound;  // a given edge on a bichromatic 2k-cycle
};

CycleProbBounds cycle_prob_bounds(double gamma, int delta, int k);

/// Q_0..Q_n of the coloring recurrence; the sum over k >= r is cut once the
/// remaining tail is below eps times the partial sum.
std::vector<double> q_coloring_series(double gamma, int r, std::size_t n, double eps = 1e-15);
double q_coloring_recurrence(double gamma, int r, std::size_t n, double eps = 1e-15);

inline constexpr std::size_t kColoringRecurrenceCap = 400;

}  // namespace lll

#endif  // LLL_GAMMA_HPP
