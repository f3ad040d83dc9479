#include "lll/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace lll {

// ---------------------------------------------------------------------------
// Domain / VariableSpace

Domain Domain::values(std::vector<Value> vals) {
  if (vals.empty()) throw std::invalid_argument("Domain: empty value list");
  Domain d;
  d.values_ = std::move(vals);
  return d;
}

Domain Domain::range(Value lo, Value hi) {
  if (hi < lo) throw std::invalid_argument("Domain: empty range");
  Domain d;
  d.lo_ = lo;
  d.hi_ = hi;
  return d;
}

Domain Domain::weighted(std::vector<Value> vals, std::vector<double> weights) {
  if (vals.empty()) throw std::invalid_argument("Domain: empty value list");
  if (vals.size() != weights.size())
    throw std::invalid_argument("Domain: one weight per value required");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w))
      throw std::invalid_argument("Domain: weights must be finite and nonnegative");
    total += w;
  }
  if (total <= 0.0) throw std::invalid_argument("Domain: weights sum to zero");
  Domain d;
  d.values_ = std::move(vals);
  // stored cumulative, normalized
  d.weights_.resize(weights.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i] / total;
    d.weights_[i] = acc;
  }
  d.weights_.back() = 1.0;
  return d;
}

std::size_t Domain::size() const noexcept {
  if (!values_.empty()) return values_.size();
  return static_cast<std::size_t>(hi_ - lo_) + 1;
}

Value Domain::at(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("Domain::at");
  if (!values_.empty()) return values_[i];
  return lo_ + static_cast<Value>(i);
}

bool Domain::contains(Value v) const noexcept {
  if (!values_.empty()) return std::find(values_.begin(), values_.end(), v) != values_.end();
  return v >= lo_ && v <= hi_;
}

Value Domain::sample(Rng& rng) const {
  if (weights_.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, size() - 1);
    return at(pick(rng));
  }
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double x = u(rng);
  auto it = std::upper_bound(weights_.begin(), weights_.end(), x);
  if (it == weights_.end()) --it;
  return values_[static_cast<std::size_t>(it - weights_.begin())];
}

double Domain::probability(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("Domain::probability");
  if (weights_.empty()) return 1.0 / static_cast<double>(size());
  return i == 0 ? weights_[0] : weights_[i] - weights_[i - 1];
}

VariableSpace::VariableSpace(std::vector<Domain> domains) : domains_(std::move(domains)) {}

VariableSpace VariableSpace::uniform(std::size_t count, const Domain& domain) {
  return VariableSpace(std::vector<Domain>(count, domain));
}

// ---------------------------------------------------------------------------
// Events

Event::Event(std::vector<VarId> s, Predicate p) : scope(std::move(s)), predicate(std::move(p)) {
  if (scope.empty()) throw std::invalid_argument("Event: empty scope");
  std::sort(scope.begin(), scope.end());
  if (std::adjacent_find(scope.begin(), scope.end()) != scope.end())
    throw std::invalid_argument("Event: repeated variable in scope");
  if (!predicate) throw std::invalid_argument("Event: missing predicate");
}

EventSystem::EventSystem(VariableSpace space, std::vector<Event> events)
    : space_(std::move(space)), events_(std::move(events)) {
  const std::size_t l = space_.count();
  by_variable_.assign(l, {});
  for (EventId j = 0; j < events_.size(); ++j) {
    for (VarId i : events_[j].scope) {
      if (i >= l) throw std::invalid_argument("EventSystem: scope index out of range");
      by_variable_[i].push_back(j);
    }
  }
  neighbors_.assign(events_.size(), {});
  for (EventId j = 0; j < events_.size(); ++j) {
    auto& nb = neighbors_[j];
    for (VarId i : events_[j].scope)
      nb.insert(nb.end(), by_variable_[i].begin(), by_variable_[i].end());
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    max_degree_ = std::max(max_degree_, nb.size());
  }
}

EventSystem& EventSystem::with_probability_bound(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability bound outside [0,1]");
  p_ = p;
  return *this;
}

EventSystem& EventSystem::estimate_probability(std::size_t samples, Rng& rng) {
  if (samples == 0) throw std::invalid_argument("estimate_probability: zero samples");
  std::vector<std::size_t> hits(events_.size(), 0);
  for (std::size_t s = 0; s < samples; ++s) {
    const Assignment a = sample_all(*this, rng);
    for (EventId j = 0; j < events_.size(); ++j)
      if (occurs(events_[j], a)) ++hits[j];
  }
  ProbabilityEstimate est;
  est.samples = samples;
  if (!hits.empty()) {
    const auto best = *std::max_element(hits.begin(), hits.end());
    const double n = static_cast<double>(samples);
    est.value = static_cast<double>(best) / n;
    const double half = 1.96 * std::sqrt(est.value * (1.0 - est.value) / n);
    est.lower = std::max(0.0, est.value - half);
    est.upper = std::min(1.0, est.value + half);
  }
  p_estimate_ = est;
  return *this;
}

bool EventSystem::valid_assignment(const Assignment& a) const {
  if (a.size() != space_.count()) return false;
  for (VarId i = 0; i < a.size(); ++i)
    if (!space_.domain(i).contains(a[i])) return false;
  return true;
}

Assignment sample_all(const EventSystem& system, Rng& rng) {
  const auto& space = system.space();
  Assignment a(space.count());
  for (VarId i = 0; i < a.size(); ++i) a[i] = space.domain(i).sample(rng);
  return a;
}

void resample_scope(const EventSystem& system, EventId j, Assignment& a, Rng& rng) {
  for (VarId i : system.event(j).scope) a[i] = system.space().domain(i).sample(rng);
}

bool occurs(const Event& event, const Assignment& a) {
  // scopes are short; a small fixed buffer avoids allocation on the hot path
  constexpr std::size_t kInline = 16;
  Value buf[kInline];
  std::vector<Value> heap;
  Value* vals = buf;
  if (event.scope.size() > kInline) {
    heap.resize(event.scope.size());
    vals = heap.data();
  }
  for (std::size_t k = 0; k < event.scope.size(); ++k) {
    const VarId i = event.scope[k];
    if (i >= a.size()) throw ContractViolation("occurs: scope index outside assignment");
    vals[k] = a[i];
  }
  return event.predicate(std::span<const Value>(vals, event.scope.size()));
}

bool occurs(const EventSystem& system, EventId j, const Assignment& a) {
  return occurs(system.event(j), a);
}

// ---------------------------------------------------------------------------
// Resampling algorithm

std::uint64_t default_step_limit(std::size_t m) {
  const auto lg = static_cast<std::uint64_t>(std::ceil(std::log2(static_cast<double>(m) + 2.0)));
  return std::max<std::uint64_t>(1, 64 * static_cast<std::uint64_t>(m) * lg);
}

namespace {

// Tracks which events occur under the current assignment.
class OccurrenceTracker {
 public:
  OccurrenceTracker(const EventSystem& system, const Assignment& a, bool indexed)
      : system_(system), a_(a), indexed_(indexed) {
    if (!indexed_) return;
    flags_.assign(system.size(), 0);
    for (EventId j = 0; j < system.size(); ++j) refresh(j);
  }

  std::optional<EventId> least_occurring() const {
    if (indexed_) {
      if (occurring_.empty()) return std::nullopt;
      return *occurring_.begin();
    }
    for (EventId j = 0; j < system_.size(); ++j)
      if (occurs(system_, j, a_)) return j;
    return std::nullopt;
  }

  std::optional<EventId> least_occurring_neighbor(EventId j) const {
    for (EventId k : system_.neighbors(j)) {
      if (indexed_ ? flags_[k] != 0 : occurs(system_, k, a_)) return k;
    }
    return std::nullopt;
  }

  // After resampling e^j only the events of N_j can change.
  void after_resample(EventId j) {
    if (!indexed_) return;
    for (EventId k : system_.neighbors(j)) refresh(k);
  }

 private:
  void refresh(EventId j) {
    const bool now = occurs(system_, j, a_);
    if (now == (flags_[j] != 0)) return;
    flags_[j] = now ? 1 : 0;
    if (now)
      occurring_.insert(j);
    else
      occurring_.erase(j);
  }

  const EventSystem& system_;
  const Assignment& a_;
  bool indexed_;
  std::vector<char> flags_;
  std::set<EventId> occurring_;
};

}  // namespace

MResult m_algorithm(const EventSystem& system, std::uint64_t seed, const MOptions& options) {
  Rng rng(seed);
  MResult out;
  out.stats.seed = seed;
  const std::uint64_t limit = options.step_limit.value_or(default_step_limit(system.size()));
  if (limit == 0) throw std::invalid_argument("m_algorithm: step limit must be positive");

  Assignment& a = out.assignment;
  a = sample_all(system, rng);
  OccurrenceTracker tracker(system, a, options.use_index);
  RunStats& st = out.stats;

  struct Frame {
    EventId event;
  };
  std::vector<Frame> stack;

  auto call = [&](EventId j) {
    resample_scope(system, j, a, rng);
    tracker.after_resample(j);
    st.trace.push_back({j, stack.size()});
    ++st.steps;
    stack.push_back({j});
  };

  while (auto root = tracker.least_occurring()) {
    if (st.steps >= limit) return out;
    if (options.on_root) options.on_root(RootPhase::begin, *root, a);
    ++st.phases;
    call(*root);
    while (!stack.empty()) {
      auto next = tracker.least_occurring_neighbor(stack.back().event);
      if (!next) {
        stack.pop_back();
        continue;
      }
      if (st.steps >= limit) return out;
      call(*next);
    }
    if (options.on_root) options.on_root(RootPhase::end, *root, a);
  }
  st.terminated = true;
  return out;
}

// ---------------------------------------------------------------------------
// Witness forests

std::size_t WitnessForest::add_root(EventId label) {
  nodes_.push_back({label, std::nullopt, {}});
  roots_.push_back(nodes_.size() - 1);
  return nodes_.size() - 1;
}

std::size_t WitnessForest::add_child(std::size_t parent, EventId label) {
  if (parent >= nodes_.size()) throw ContractViolation("add_child: no such parent");
  const std::size_t id = nodes_.size();
  nodes_.push_back({label, parent, {}});
  auto& ch = nodes_[parent].children;
  // stable: equal labels keep insertion order
  auto pos = std::upper_bound(ch.begin(), ch.end(), label,
                              [&](EventId l, std::size_t n) { return l < nodes_[n].label; });
  ch.insert(pos, id);
  return id;
}

std::vector<std::size_t> WitnessForest::node_order() const {
  std::vector<std::size_t> order;
  order.reserve(nodes_.size());
  std::vector<std::size_t> todo;
  for (std::size_t r : roots_) {
    todo.push_back(r);
    while (!todo.empty()) {
      const std::size_t u = todo.back();
      todo.pop_back();
      order.push_back(u);
      const auto& ch = nodes_[u].children;
      for (auto it = ch.rbegin(); it != ch.rend(); ++it) todo.push_back(*it);
    }
  }
  return order;
}

std::vector<EventId> WitnessForest::labels_in_order() const {
  std::vector<EventId> labels;
  for (std::size_t u : node_order()) labels.push_back(nodes_[u].label);
  return labels;
}

WitnessForest build_witness_forest(std::span<const TraceEntry> trace, const EventSystem& system) {
  WitnessForest forest;
  std::vector<std::size_t> path;  // node ids of the current recursion stack
  for (const auto& [event, depth] : trace) {
    if (event >= system.size()) throw ContractViolation("trace: unknown event id");
    if (depth == 0) {
      path.assign(1, forest.add_root(event));
      continue;
    }
    if (depth > path.size())
      throw ContractViolation("trace: depth jumps by more than one");
    path.resize(depth);
    path.push_back(forest.add_child(path.back(), event));
  }
  return forest;
}

bool scopes_disjoint(const EventSystem& system, EventId a, EventId b) {
  const auto& x = system.event(a).scope;
  const auto& y = system.event(b).scope;
  auto i = x.begin();
  auto k = y.begin();
  while (i != x.end() && k != y.end()) {
    if (*i == *k) return false;
    if (*i < *k)
      ++i;
    else
      ++k;
  }
  return true;
}

namespace {

bool pairwise_disjoint(const EventSystem& system, const WitnessForest& f,
                       const std::vector<std::size_t>& ids) {
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = a + 1; b < ids.size(); ++b)
      if (!scopes_disjoint(system, f.nodes()[ids[a]].label, f.nodes()[ids[b]].label))
        return false;
  return true;
}

}  // namespace

bool check_feasible(const WitnessForest& forest, const EventSystem& system) {
  for (const auto& n : forest.nodes())
    if (n.label >= system.size()) return false;
  if (!pairwise_disjoint(system, forest, forest.roots())) return false;
  for (const auto& n : forest.nodes()) {
    if (!pairwise_disjoint(system, forest, n.children)) return false;
    for (std::size_t c : n.children)
      if (scopes_disjoint(system, n.label, forest.nodes()[c].label)) return false;
  }
  return true;
}

Validation validate(const WitnessForest& forest, const EventSystem& system, Rng& rng) {
  if (!check_feasible(forest, system)) throw ContractViolation("validate: infeasible forest");
  Assignment a = sample_all(system, rng);
  for (EventId j : forest.labels_in_order()) {
    if (!occurs(system, j, a)) return Validation::failure;
    resample_scope(system, j, a, rng);
  }
  return Validation::success;
}

}  // namespace lll
