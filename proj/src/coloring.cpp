#include "lll/coloring.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

namespace lll {

namespace {

constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

std::size_t forbidden_cap(const Graph& g) {
  return g.max_degree() == 0 ? 0 : 2 * (g.max_degree() - 1);
}

void check_palette(const Graph& g, std::size_t palette) {
  const std::size_t d = g.max_degree();
  if (d >= 1 && palette < 2 * d - 1)
    throw PaletteError("palette of " + std::to_string(palette) + " colors is below 2*Delta-1 = " +
                       std::to_string(2 * d - 1));
}

// (vertex, color) -> incident edge of that color. Requires a proper coloring.
class ColorIndex {
 public:
  ColorIndex(const Graph& g, const EdgeColoring& c)
      : g_(g), c_(c), k_(c.palette), slots_(g.vertex_count() * c.palette, kNoEdge) {
    if (c.colors.size() != g.edge_count()) throw ContractViolation("coloring size does not match graph");
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Color col = c.colors[e];
      if (col == kUncolored) continue;
      if (col < 0 || static_cast<std::size_t>(col) >= k_)
        throw ContractViolation("color outside palette on edge " + std::to_string(e));
      const auto [u, v] = g.edge(e);
      for (Vertex w : {u, v}) {
        EdgeId& s = slot(w, col);
        if (s != kNoEdge) throw ContractViolation("coloring is not proper");
        s = e;
      }
    }
  }

  const Graph& graph() const { return g_; }
  const EdgeColoring& coloring() const { return c_; }

  EdgeId at(Vertex v, Color col) const { return slots_[v * k_ + static_cast<std::size_t>(col)]; }

  // Call after c.colors[e] changed from `old`.
  void moved(EdgeId e, Color old) {
    const auto [u, v] = g_.edge(e);
    for (Vertex w : {u, v}) {
      if (old != kUncolored) slot(w, old) = kNoEdge;
      slot(w, c_.colors[e]) = e;
    }
  }

  // Marks forbidden colors of e in `mark` (resized to K) and returns how many.
  std::size_t forbidden(EdgeId e, std::vector<char>& mark) const {
    mark.assign(k_, 0);
    std::size_t count = 0;
    auto add = [&](Color col) {
      if (!mark[static_cast<std::size_t>(col)]) {
        mark[static_cast<std::size_t>(col)] = 1;
        ++count;
      }
    };
    const auto [u, v] = g_.edge(e);
    for (Vertex w : {u, v})
      for (auto [x, f] : g_.incident(w))
        if (f != e && c_.colors[f] != kUncolored) add(c_.colors[f]);
    for (auto [x, e1] : g_.incident(u)) {
      if (e1 == e) continue;
      const Color a = c_.colors[e1];
      if (a == kUncolored) continue;
      const EdgeId e2 = at(v, a);
      if (e2 == kNoEdge || e2 == e) continue;
      const Vertex y = g_.other_end(e2, v);
      if (y == x) continue;
      if (auto e3 = g_.edge_between(x, y); e3 && c_.colors[*e3] != kUncolored) add(c_.colors[*e3]);
    }
    if (count > forbidden_cap(g_))
      throw std::logic_error("forbidden set exceeds 2(Delta-1) at edge " + std::to_string(e));
    return count;
  }

  // Alternating walk from e through colors (color(e), b); returns the edges of
  // the closed walk, or nothing if the two-colored component is a path or the
  // cycle would exceed max_len.
  bool walk(EdgeId e, Color b, std::size_t max_len, std::vector<EdgeId>& out) const {
    const Color a = c_.colors[e];
    out.assign(1, e);
    Vertex cur = g_.edge(e).second;
    Color need = b;
    while (true) {
      const EdgeId f = at(cur, need);
      if (f == kNoEdge) return false;
      if (f == e) return true;
      if (out.size() >= max_len) return false;
      out.push_back(f);
      cur = g_.other_end(f, cur);
      need = need == a ? b : a;
    }
  }

  // Calls fn(walk) for every bichromatic cycle through e (each exactly once).
  template <class Fn>
  void cycles_through(EdgeId e, std::size_t max_len, std::vector<EdgeId>& buf, Fn&& fn) const {
    if (c_.colors[e] == kUncolored) return;
    const Vertex v = g_.edge(e).second;
    for (auto [w, f] : g_.incident(v)) {
      if (f == e || c_.colors[f] == kUncolored) continue;
      if (walk(e, c_.colors[f], max_len, buf)) fn(buf);
    }
  }

  std::optional<Cycle> least(std::optional<std::span<const EdgeId>> restrict) const {
    std::optional<Cycle> best;
    std::vector<EdgeId> buf;
    auto consider = [&](const std::vector<EdgeId>& w) {
      if (best && w.size() > best->length()) return;
      Cycle cand(w);
      if (!best || cand < *best) best = std::move(cand);
    };
    auto limit = [&] { return best ? best->length() : g_.edge_count(); };
    if (restrict) {
      for (EdgeId e : *restrict) cycles_through(e, limit(), buf, consider);
    } else {
      for (EdgeId e = 0; e < g_.edge_count(); ++e) cycles_through(e, limit(), buf, consider);
    }
    return best;
  }

  std::vector<Cycle> all() const {
    std::vector<Cycle> out;
    std::vector<EdgeId> buf;
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      cycles_through(e, g_.edge_count(), buf, [&](const std::vector<EdgeId>& w) {
        if (*std::min_element(w.begin(), w.end()) == e) out.emplace_back(w);
      });
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  EdgeId& slot(Vertex v, Color col) { return slots_[v * k_ + static_cast<std::size_t>(col)]; }

  const Graph& g_;
  const EdgeColoring& c_;
  std::size_t k_;
  std::vector<EdgeId> slots_;
};

// Colors edge e uniformly among the colors allowed by forbidden_colors.
class Painter {
 public:
  Painter(const Graph& g, EdgeColoring& c, Rng& rng, const ColorObserver* obs)
      : g_(g), c_(c), index_(g, c), rng_(rng), obs_(obs) {}

  const ColorIndex& index() const { return index_; }

  void paint(EdgeId e, bool greedy) {
    const std::size_t f = index_.forbidden(e, mark_);
    const std::size_t available = c_.palette - f;
    if (available + forbidden_cap(g_) < c_.palette || available == 0)
      throw std::logic_error("color choice margin violated at edge " + std::to_string(e));
    std::uniform_int_distribution<std::size_t> pick(0, available - 1);
    std::size_t r = pick(rng_);
    Color chosen = kUncolored;
    for (std::size_t col = 0; col < c_.palette; ++col) {
      if (mark_[col]) continue;
      if (r-- == 0) {
        chosen = static_cast<Color>(col);
        break;
      }
    }
    const Color old = c_.colors[e];
    c_.colors[e] = chosen;
    index_.moved(e, old);
    if (obs_ && obs_->on_assign) obs_->on_assign(c_, ChoiceInfo{e, f, available, greedy});
  }

 private:
  const Graph& g_;
  EdgeColoring& c_;
  ColorIndex index_;
  Rng& rng_;
  const ColorObserver* obs_;
  std::vector<char> mark_;
};

}  // namespace

// ---------------------------------------------------------------------------

bool EdgeColoring::complete() const {
  return std::none_of(colors.begin(), colors.end(), [](Color c) { return c == kUncolored; });
}

Cycle::Cycle(std::vector<EdgeId> walk) : edges(std::move(walk)), key(edges) {
  std::sort(key.begin(), key.end());
}

bool Cycle::contains(EdgeId e) const { return std::binary_search(key.begin(), key.end(), e); }

bool Cycle::shares_edge(const Cycle& other) const {
  auto i = key.begin();
  auto j = other.key.begin();
  while (i != key.end() && j != other.key.end()) {
    if (*i == *j) return true;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return false;
}

std::vector<Color> forbidden_colors(const Graph& g, const EdgeColoring& c, EdgeId e) {
  if (e >= g.edge_count()) throw std::out_of_range("forbidden_colors: edge out of range");
  ColorIndex index(g, c);
  std::vector<char> mark;
  index.forbidden(e, mark);
  std::vector<Color> out;
  for (std::size_t col = 0; col < mark.size(); ++col)
    if (mark[col]) out.push_back(static_cast<Color>(col));
  return out;
}

bool is_proper(const Graph& g, const EdgeColoring& c) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      const Color a = c.colors[inc[i].edge];
      if (a == kUncolored) continue;
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        if (c.colors[inc[j].edge] == a) return false;
    }
  }
  return true;
}

bool is_4_acyclic(const Graph& g, const EdgeColoring& c) {
  if (!is_proper(g, c)) return false;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Color ce = c.colors[e];
    if (ce == kUncolored) continue;
    const auto [u, v] = g.edge(e);
    for (auto [x, e1] : g.incident(u)) {
      if (e1 == e || c.colors[e1] == kUncolored) continue;
      for (auto [y, e2] : g.incident(v)) {
        if (e2 == e || y == x || c.colors[e2] != c.colors[e1]) continue;
        auto e3 = g.edge_between(x, y);
        if (e3 && c.colors[*e3] == ce) return false;
      }
    }
  }
  return true;
}

EdgeColoring greedy_4acyclic(const Graph& g, std::size_t palette, Rng& rng) {
  check_palette(g, palette);
  EdgeColoring c(palette, g.edge_count());
  Painter painter(g, c, rng, nullptr);
  for (EdgeId e = 0; e < g.edge_count(); ++e) painter.paint(e, true);
  return c;
}

std::optional<Cycle> find_bichromatic_cycle(const Graph& g, const EdgeColoring& c,
                                            std::optional<std::span<const EdgeId>> restrict) {
  return ColorIndex(g, c).least(restrict);
}

std::vector<Cycle> all_bichromatic_cycles(const Graph& g, const EdgeColoring& c) {
  return ColorIndex(g, c).all();
}

std::vector<char> edges_on_bichromatic_cycles(const Graph& g, const EdgeColoring& c) {
  std::vector<char> flags(g.edge_count(), 0);
  for (const auto& cyc : all_bichromatic_cycles(g, c))
    for (EdgeId e : cyc.key) flags[e] = 1;
  return flags;
}

ColorResult col_alg(const Graph& g, std::size_t palette, std::uint64_t seed, const ColorOptions& options) {
  check_palette(g, palette);
  const std::uint64_t limit = options.step_limit.value_or(default_step_limit(g.edge_count()));
  if (limit == 0) throw std::invalid_argument("col_alg: step limit must be positive");

  Rng rng(seed);
  ColorResult out;
  out.coloring = EdgeColoring(palette, g.edge_count());
  ColorRunStats& st = out.stats;
  st.seed = seed;
  const ColorObserver* obs = options.observer;

  Painter painter(g, out.coloring, rng, obs);
  for (EdgeId e = 0; e < g.edge_count(); ++e) painter.paint(e, true);
  const ColorIndex& index = painter.index();

  const bool incremental = options.mode == DetectionMode::incremental;
  std::set<Cycle> known;
  if (incremental) {
    for (auto& cyc : index.all()) known.insert(std::move(cyc));
  }
  std::vector<char> dirty(g.edge_count(), 0);
  std::vector<EdgeId> dirty_list;

  std::vector<Cycle> stack;
  auto recolor = [&](Cycle cyc) {
    ++st.steps;
    st.cycle_lengths.push_back(cyc.length());
    st.call_depths.push_back(stack.size());
    for (EdgeId e : cyc.key) {
      painter.paint(e, false);
      if (!dirty[e]) {
        dirty[e] = 1;
        dirty_list.push_back(e);
      }
    }
    stack.push_back(std::move(cyc));
  };

  while (true) {
    std::optional<Cycle> root;
    if (incremental) {
      if (!known.empty()) root = *known.begin();
    } else {
      root = index.least(std::nullopt);
    }
    if (!root) break;
    if (st.steps >= limit) return out;

    if (obs && obs->on_root) obs->on_root(RootPhase::begin, *root, out.coloring);
    ++st.phases;
    st.root_cycles.push_back(root->key);
    recolor(*root);
    while (!stack.empty()) {
      auto next = index.least(std::span<const EdgeId>(stack.back().key));
      if (!next) {
        stack.pop_back();
        continue;
      }
      if (st.steps >= limit) return out;
      recolor(std::move(*next));
    }
    if (obs && obs->on_root) obs->on_root(RootPhase::end, *root, out.coloring);

    if (incremental) {
      for (auto it = known.begin(); it != known.end();) {
        const bool touched = std::any_of(it->key.begin(), it->key.end(), [&](EdgeId e) { return dirty[e] != 0; });
        it = touched ? known.erase(it) : std::next(it);
      }
      std::vector<EdgeId> buf;
      for (EdgeId e : dirty_list)
        index.cycles_through(e, g.edge_count(), buf, [&](const std::vector<EdgeId>& w) { known.emplace(w); });
    }
    for (EdgeId e : dirty_list) dirty[e] = 0;
    dirty_list.clear();
  }
  st.terminated = true;
  return out;
}

AcyclicVerdict verify_acyclic(const Graph& g, const EdgeColoring& c) {
  if (c.colors.size() != g.edge_count()) throw ContractViolation("verify_acyclic: coloring size mismatch");
  for (Color col : c.colors) {
    if (col == kUncolored) throw ContractViolation("verify_acyclic: uncolored edge");
    if (col < 0 || static_cast<std::size_t>(col) >= c.palette)
      throw ContractViolation("verify_acyclic: color outside palette");
  }
  AcyclicVerdict v;
  v.proper = is_proper(g, c);
  if (!v.proper) return v;
  v.witness = find_bichromatic_cycle(g, c);
  v.acyclic = !v.witness.has_value();
  return v;
}

std::uint64_t count_cycles_through_edge(const Graph& g, EdgeId e, std::size_t length,
                                        std::uint64_t work_limit) {
  if (e >= g.edge_count()) throw std::out_of_range("count_cycles_through_edge: edge out of range");
  if (length < 3) throw std::invalid_argument("count_cycles_through_edge: length must be at least 3");
  const auto [u, v] = g.edge(e);
  std::vector<char> on_path(g.vertex_count(), 0);
  std::uint64_t count = 0;
  std::uint64_t work = 0;

  // paths v -> u with exactly length-1 edges avoiding e; explicit stack of
  // (vertex, next incidence index)
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> stack{{v, 0}};
  on_path[v] = 1;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto& inc = g.incident(top.v);
    if (top.next == inc.size()) {
      on_path[top.v] = 0;
      stack.pop_back();
      continue;
    }
    const auto [w, f] = inc[top.next++];
    if (++work > work_limit) throw SizeError("count_cycles_through_edge: work limit exceeded");
    if (f == e || on_path[w]) continue;
    const std::size_t edges_used = stack.size();  // after taking f
    if (w == u) {
      if (edges_used == length - 1) ++count;
      continue;
    }
    if (edges_used < length - 1) {
      on_path[w] = 1;
      stack.push_back({w, 0});
    }
  }

  std::uint64_t bound = 1;
  const std::uint64_t base = g.max_degree() == 0 ? 0 : g.max_degree() - 1;
  for (std::size_t i = 0; i + 2 < length && bound <= count; ++i) bound *= base;
  if (count > bound) throw std::logic_error("cycle count exceeds (Delta-1)^(2k-2)");
  return count;
}

}  // namespace lll
