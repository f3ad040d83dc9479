#ifndef LLL_DICE_HPP
#define LLL_DICE_HPP

// Three-dice toy experiment. Three fair dice are rolled; in each phase a bit
// selects dice {1,2} (bit 0) or {2,3} (bit 1), the phase succeeds if one of
// them shows an ace, and the two examined dice are rerolled before the next
// phase. The experiment succeeds if some sequence of bits passes every phase.
//
// Each die is rerolled at most once per phase, and the reroll value of a die
// in a given phase is shared by all bit branches that reroll it.

#include <cstdint>

#include "lll/engine.hpp"

namespace lll {

struct DiceEstimate {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;

  double estimate() const { return trials ? double(successes) / double(trials) : 0.0; }
  /// Binomial standard error at probability p.
  double sigma(double p) const;
  double z_score(double p) const;
};

/// Runs `trials` independent experiments with `phases` phases (1 or more).
DiceEstimate dice_experiment(std::uint64_t trials, Rng& rng, int phases = 2);

/// (1 - (5/6)^3)^phases = (91/216)^phases: the value obtained when every
/// phase starts from a fresh roll of all three dice.
double dice_fresh_roll_probability(int phases = 2);

}  // namespace lll

#endif  // LLL_DICE_HPP
