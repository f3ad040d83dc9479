#ifndef LLL_ENGINE_HPP
#define LLL_ENGINE_HPP

// Variable-based Moser resampling: event systems over independent variables,
// the resampling algorithm with an explicit recursion stack, witness forests
// reconstructed from its trace, and the validation algorithm that replays a
// forest against fresh randomness.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lll/errors.hpp"

namespace lll {

using Rng = std::mt19937_64;
using Value = std::int64_t;
using VarId = std::size_t;
using EventId = std::size_t;

/// Finite domain of one variable: an explicit value list or an inclusive
/// integer range, optionally with per-value sampling weights.
class Domain {
 public:
  static Domain values(std::vector<Value> vals);
  static Domain range(Value lo, Value hi);
  static Domain weighted(std::vector<Value> vals, std::vector<double> weights);

  std::size_t size() const noexcept;
  Value at(std::size_t i) const;
  bool contains(Value v) const noexcept;
  bool uniform() const noexcept { return weights_.empty(); }

  Value sample(Rng& rng) const;

  /// Probability that sample() returns the i-th value.
  double probability(std::size_t i) const;

 private:
  Domain() = default;

  std::vector<Value> values_;  // empty for ranges
  Value lo_ = 0;
  Value hi_ = -1;
  std::vector<double> weights_;
};

class VariableSpace {
 public:
  VariableSpace() = default;
  explicit VariableSpace(std::vector<Domain> domains);

  /// `count` variables sharing one domain.
  static VariableSpace uniform(std::size_t count, const Domain& domain);

  std::size_t count() const noexcept { return domains_.size(); }
  const Domain& domain(VarId i) const { return domains_.at(i); }

 private:
  std::vector<Domain> domains_;
};

using Assignment = std::vector<Value>;

/// Predicates receive the scoped values in scope order, so they cannot read
/// variables outside the scope.
using Predicate = std::function<bool(std::span<const Value>)>;

struct Event {
  Event(std::vector<VarId> scope, Predicate predicate);

  std::vector<VarId> scope;  // sorted, distinct, non-empty
  Predicate predicate;
};

/// Monte-Carlo estimate of max_j Pr[E_j] with a 95% normal-approximation
/// interval for the maximizing event.
struct ProbabilityEstimate {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::size_t samples = 0;
};

/// Immutable after construction; safe to share across threads.
class EventSystem {
 public:
  EventSystem(VariableSpace space, std::vector<Event> events);

  const VariableSpace& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return events_.size(); }
  const Event& event(EventId j) const { return events_.at(j); }

  /// N_j, sorted, always containing j.
  const std::vector<EventId>& neighbors(EventId j) const { return neighbors_.at(j); }

  /// Events whose scope contains variable i, sorted.
  const std::vector<EventId>& events_of(VarId i) const { return by_variable_.at(i); }

  /// max_j |N_j|.
  std::size_t max_degree() const noexcept { return max_degree_; }

  /// Caller-supplied analytic bound on max_j Pr[E_j].
  EventSystem& with_probability_bound(double p);
  /// Stores a Monte-Carlo estimate of max_j Pr[E_j] from `samples` fresh draws.
  EventSystem& estimate_probability(std::size_t samples, Rng& rng);

  std::optional<double> probability_bound() const noexcept { return p_; }
  const std::optional<ProbabilityEstimate>& probability_estimate() const noexcept {
    return p_estimate_;
  }

  bool valid_assignment(const Assignment& a) const;

 private:
  VariableSpace space_;
  std::vector<Event> events_;
  std::vector<std::vector<EventId>> neighbors_;
  std::vector<std::vector<EventId>> by_variable_;
  std::size_t max_degree_ = 0;
  std::optional<double> p_;
  std::optional<ProbabilityEstimate> p_estimate_;
};

Assignment sample_all(const EventSystem& system, Rng& rng);
void resample_scope(const EventSystem& system, EventId j, Assignment& a, Rng& rng);

bool occurs(const Event& event, const Assignment& a);
bool occurs(const EventSystem& system, EventId j, const Assignment& a);

struct TraceEntry {
  EventId event;
  std::size_t depth;  // 0 for root calls

  bool operator==(const TraceEntry&) const = default;
};

struct RunStats {
  std::uint64_t steps = 0;   // Resample calls, root and recursive
  std::uint64_t phases = 0;  // root calls
  std::vector<TraceEntry> trace;
  bool terminated = false;
  std::uint64_t seed = 0;

  bool operator==(const RunStats&) const = default;
};

enum class RootPhase { begin, end };

struct MOptions {
  /// Defaults to default_step_limit(m).
  std::optional<std::uint64_t> step_limit;
  /// Maintain the set of occurring events incrementally through the
  /// variable-to-event index instead of rescanning predicates.
  bool use_index = true;
  /// Called with the current assignment just before and just after every
  /// root call.
  std::function<void(RootPhase, EventId, const Assignment&)> on_root;
};

struct MResult {
  Assignment assignment;
  RunStats stats;
};

/// 64 * m * ceil(log2(m + 2)).
std::uint64_t default_step_limit(std::size_t m);

MResult m_algorithm(const EventSystem& system, std::uint64_t seed,
                    const MOptions& options = {});

struct ForestNode {
  EventId label;
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;  // sorted by label
};

class WitnessForest {
 public:
  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  const std::vector<ForestNode>& nodes() const noexcept { return nodes_; }
  const std::vector<std::size_t>& roots() const noexcept { return roots_; }

  std::size_t add_root(EventId label);
  std::size_t add_child(std::size_t parent, EventId label);

  /// Roots in insertion order, children by label, preorder within trees.
  std::vector<std::size_t> node_order() const;
  std::vector<EventId> labels_in_order() const;

 private:
  std::vector<ForestNode> nodes_;
  std::vector<std::size_t> roots_;
};

WitnessForest build_witness_forest(std::span<const TraceEntry> trace,
                                   const EventSystem& system);

bool scopes_disjoint(const EventSystem& system, EventId a, EventId b);
bool check_feasible(const WitnessForest& forest, const EventSystem& system);

enum class Validation { success, failure };

Validation validate(const WitnessForest& forest, const EventSystem& system, Rng& rng);

}  // namespace lll

#endif  // LLL_ENGINE_HPP
