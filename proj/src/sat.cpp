#include "lll/sat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

namespace lll {

Cnf parse_dimacs(std::istream& in) {
  Cnf cnf;
  bool header = false;
  std::size_t declared_clauses = 0;
  std::vector<int> current;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c" || tok[0] == 'c') continue;
    if (tok == "%") break;  // SATLIB trailer
    if (tok == "p") {
      std::string fmt;
      long long nv = -1, nc = -1;
      if (header || !(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0 || nc < 0)
        throw ParseError("dimacs: bad problem line at line " + std::to_string(lineno));
      cnf.num_vars = static_cast<std::size_t>(nv);
      declared_clauses = static_cast<std::size_t>(nc);
      header = true;
      continue;
    }
    if (!header) throw ParseError("dimacs: clause before problem line");
    ls.clear();
    ls.str(line);
    long long lit;
    while (ls >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(current);
        current.clear();
        continue;
      }
      if (static_cast<std::size_t>(std::llabs(lit)) > cnf.num_vars)
        throw ParseError("dimacs: literal out of range at line " + std::to_string(lineno));
      current.push_back(static_cast<int>(lit));
    }
    if (!ls.eof()) throw ParseError("dimacs: malformed token at line " + std::to_string(lineno));
  }
  if (!header) throw ParseError("dimacs: missing problem line");
  if (!current.empty()) cnf.clauses.push_back(current);
  if (cnf.clauses.size() != declared_clauses)
    throw ParseError("dimacs: clause count does not match header");
  for (const auto& c : cnf.clauses)
    if (c.empty()) throw ParseError("dimacs: empty clause");
  return cnf;
}

void write_dimacs(std::ostream& out, const Cnf& cnf) {
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& c : cnf.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
}

EventSystem cnf_event_system(const Cnf& cnf) {
  std::vector<Event> events;
  events.reserve(cnf.clauses.size());
  std::size_t min_width = 0;
  for (const auto& clause : cnf.clauses) {
    // variable -> value that falsifies its literal; -1 marks x and !x together
    std::map<VarId, Value> falsifying;
    for (int lit : clause) {
      const VarId v = static_cast<VarId>(std::abs(lit)) - 1;
      const Value f = lit > 0 ? 0 : 1;
      auto [it, fresh] = falsifying.emplace(v, f);
      if (!fresh && it->second != f) it->second = -1;
    }
    std::vector<VarId> scope;
    std::vector<Value> want;
    bool tautology = false;
    for (auto [v, f] : falsifying) {
      scope.push_back(v);
      want.push_back(f);
      tautology = tautology || f < 0;
    }
    if (!tautology && (min_width == 0 || scope.size() < min_width)) min_width = scope.size();
    Predicate pred = [want, tautology](std::span<const Value> vals) {
      if (tautology) return false;
      return std::equal(vals.begin(), vals.end(), want.begin());
    };
    events.emplace_back(std::move(scope), std::move(pred));
  }
  EventSystem sys(VariableSpace::uniform(cnf.num_vars, Domain::values({0, 1})), std::move(events));
  sys.with_probability_bound(min_width == 0 ? 0.0 : std::ldexp(1.0, -static_cast<int>(min_width)));
  return sys;
}

bool satisfies(const Cnf& cnf, const Assignment& a) {
  if (a.size() != cnf.num_vars) return false;
  for (const auto& clause : cnf.clauses) {
    bool sat = false;
    for (int lit : clause) {
      const Value x = a[static_cast<std::size_t>(std::abs(lit)) - 1];
      if ((lit > 0 && x == 1) || (lit < 0 && x == 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

Cnf random_ring_3sat(std::size_t clauses, Rng& rng) {
  if (clauses < 3) throw std::invalid_argument("random_ring_3sat: need at least 3 clauses");
  const std::size_t nv = 2 * clauses;
  std::vector<int> ids(nv);
  std::iota(ids.begin(), ids.end(), 1);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::bernoulli_distribution coin(0.5);
  auto lit = [&](std::size_t slot) { return coin(rng) ? ids[slot] : -ids[slot]; };

  // slot j: variable shared by clauses j and j+1; slot clauses + j: private to j
  Cnf cnf;
  cnf.num_vars = nv;
  for (std::size_t j = 0; j < clauses; ++j) {
    const std::size_t left = (j + clauses - 1) % clauses;
    std::vector<int> c{lit(left), lit(j), lit(clauses + j)};
    std::shuffle(c.begin(), c.end(), rng);
    cnf.clauses.push_back(std::move(c));
  }
  std::shuffle(cnf.clauses.begin(), cnf.clauses.end(), rng);
  return cnf;
}

}  // namespace lll
