#ifndef LLL_SAT_HPP
#define LLL_SAT_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "lll/engine.hpp"

namespace lll {

/// CNF formula with DIMACS literals: +v / -v for variable v in 1..num_vars.
struct Cnf {
  std::size_t num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

Cnf parse_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Cnf& cnf);

/// One event per clause ("clause is violated") over boolean variables
/// uniform on {0,1}; variable v of the formula is index v-1. p = 2^-k for the
/// shortest non-tautological clause width k.
EventSystem cnf_event_system(const Cnf& cnf);

bool satisfies(const Cnf& cnf, const Assignment& a);

/// Random 3-CNF whose clauses form a ring: clause j shares one variable with
/// each of its two ring neighbours and owns one private variable, so every
/// clause overlaps exactly two others. Variable ids, literal signs and clause
/// order are shuffled.
Cnf random_ring_3sat(std::size_t clauses, Rng& rng);

}  // namespace lll

#endif  // LLL_SAT_HPP
