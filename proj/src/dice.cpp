#include "lll/dice.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace lll {

namespace {

using Dice = std::array<int, 3>;
constexpr int kAce = 1;

// rerolls[t][i]: value die i takes if it is rerolled in phase t
bool some_branch_succeeds(const Dice& dice, const std::vector<Dice>& rerolls, std::size_t phase) {
  if (phase == rerolls.size()) return true;
  for (int bit = 0; bit < 2; ++bit) {
    const std::size_t a = bit == 0 ? 0 : 1;
    const std::size_t b = a + 1;
    if (dice[a] != kAce && dice[b] != kAce) continue;
    Dice next = dice;
    next[a] = rerolls[phase][a];
    next[b] = rerolls[phase][b];
    if (some_branch_succeeds(next, rerolls, phase + 1)) return true;
  }
  return false;
}

}  // namespace

double DiceEstimate::sigma(double p) const {
  if (trials == 0) return 0.0;
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

double DiceEstimate::z_score(double p) const {
  const double s = sigma(p);
  return s > 0.0 ? (estimate() - p) / s : 0.0;
}

DiceEstimate dice_experiment(std::uint64_t trials, Rng& rng, int phases) {
  if (trials == 0) throw std::invalid_argument("dice_experiment: trials must be positive");
  if (phases < 1) throw std::invalid_argument("dice_experiment: phases must be positive");
  std::uniform_int_distribution<int> die(1, 6);
  DiceEstimate out;
  out.trials = trials;
  std::vector<Dice> rerolls(static_cast<std::size_t>(phases));
  for (std::uint64_t t = 0; t < trials; ++t) {
    Dice dice{die(rng), die(rng), die(rng)};
    for (auto& r : rerolls)
      for (int& v : r) v = die(rng);
    if (some_branch_succeeds(dice, rerolls, 0)) ++out.successes;
  }
  return out;
}

double dice_fresh_roll_probability(int phases) {
  return std::pow(91.0 / 216.0, phases);
}

}  // namespace lll
