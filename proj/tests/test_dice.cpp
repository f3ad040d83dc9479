#include <cmath>

#include "doctest.h"
#include "lll/dice.hpp"

using namespace lll;

namespace {

bool ace_in(int a, int b) { return a == 1 || b == 1; }

// Exact count over the three initial dice and the three phase-one rerolls;
// phase-two rerolls never matter. A die rerolled by either bit takes the
// same new value.
int exact_two_phase_successes() {
  int wins = 0;
  for (int d0 = 1; d0 <= 6; ++d0)
    for (int d1 = 1; d1 <= 6; ++d1)
      for (int d2 = 1; d2 <= 6; ++d2)
        for (int r0 = 1; r0 <= 6; ++r0)
          for (int r1 = 1; r1 <= 6; ++r1)
            for (int r2 = 1; r2 <= 6; ++r2) {
              bool win = false;
              // bit 0: dice {0,1}
              if (ace_in(d0, d1)) win = win || ace_in(r0, r1) || ace_in(r1, d2);
              // bit 1: dice {1,2}
              if (ace_in(d1, d2)) win = win || ace_in(d0, r1) || ace_in(r1, r2);
              wins += win;
            }
  return wins;
}

}  // namespace

TEST_CASE("exact two-phase probability") {
  CHECK(exact_two_phase_successes() == 9031);
  CHECK(9031.0 / 46656.0 > dice_fresh_roll_probability(2));
}

TEST_CASE("two-phase estimate matches exact enumeration") {
  Rng rng(2718);
  const auto est = dice_experiment(400'000, rng, 2);
  const double p = 9031.0 / 46656.0;
  CHECK(std::abs(est.z_score(p)) <= 3.0);
}

TEST_CASE("single phase matches complement counting") {
  Rng rng(31);
  const auto est = dice_experiment(400'000, rng, 1);
  const double p = 1.0 - std::pow(5.0 / 6.0, 3);
  CHECK(p == doctest::Approx(91.0 / 216.0));
  CHECK(dice_fresh_roll_probability(1) == doctest::Approx(p));
  CHECK(std::abs(est.z_score(p)) <= 3.0);
}

TEST_CASE("fresh-roll target value") {
  CHECK(dice_fresh_roll_probability(2) == doctest::Approx(8281.0 / 46656.0).epsilon(1e-14));
  CHECK(dice_fresh_roll_probability(2) == doctest::Approx(0.1774906).epsilon(1e-6));
}

TEST_CASE("edge cases and determinism") {
  Rng rng(1);
  const auto one = dice_experiment(1, rng);
  CHECK((one.estimate() == 0.0 || one.estimate() == 1.0));
  CHECK_THROWS_AS(dice_experiment(0, rng), std::invalid_argument);
  CHECK_THROWS_AS(dice_experiment(10, rng, 0), std::invalid_argument);
  Rng a(44), b(44);
  CHECK(dice_experiment(10'000, a).successes == dice_experiment(10'000, b).successes);
}
