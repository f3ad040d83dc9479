#ifndef LLL_COLORING_HPP
#define LLL_COLORING_HPP

// Acyclic edge coloring by recoloring bichromatic cycles.
//
// The greedy phase colors edges in index order, each uniformly among the
// colors that keep the coloring proper and free of bichromatic 4-cycles.
// Then, while a bichromatic cycle exists, the least one is recolored edge by
// edge under the same rule, recursing on the least bichromatic cycle sharing
// an edge with the cycle just recolored. Cycles are ordered by length, then
// by their sorted edge-index tuple.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lll/engine.hpp"
#include "lll/graph.hpp"

namespace lll {

using Color = std::int32_t;
inline constexpr Color kUncolored = -1;

class PaletteError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EdgeColoring {
  EdgeColoring() = default;
  EdgeColoring(std::size_t palette_size, std::size_t edges)
      : palette(palette_size), colors(edges, kUncolored) {}

  std::size_t palette = 0;  // K
  std::vector<Color> colors;

  bool complete() const;
  bool operator==(const EdgeColoring&) const = default;
};

/// Even cycle given by its edges in walk order.
struct Cycle {
  Cycle() = default;
  /// `walk` must list the edges of a closed walk in order.
  explicit Cycle(std::vector<EdgeId> walk);

  std::vector<EdgeId> edges;  // walk order, starting from the edge it was found through
  std::vector<EdgeId> key;    // sorted edge indices

  std::size_t length() const noexcept { return edges.size(); }
  bool contains(EdgeId e) const;
  bool shares_edge(const Cycle& other) const;

  /// Canonical total order: length first, then the sorted edge tuple.
  friend bool operator<(const Cycle& a, const Cycle& b) {
    if (a.key.size() != b.key.size()) return a.key.size() < b.key.size();
    return a.key < b.key;
  }
  friend bool operator==(const Cycle& a, const Cycle& b) { return a.key == b.key; }
};

/// Colors e may not take: colors of colored edges adjacent to e, plus, for
/// every pair e1 = {u,x}, e2 = {v,y} of equally colored edges at the two ends
/// of e = {u,v}, the color of the edge {x,y} closing the 4-cycle. The current
/// color of e itself is ignored. Sorted; at most 2(Delta-1) entries.
std::vector<Color> forbidden_colors(const Graph& g, const EdgeColoring& c, EdgeId e);

bool is_proper(const Graph& g, const EdgeColoring& c);
/// Proper and no bichromatic 4-cycle, over colored edges only.
bool is_4_acyclic(const Graph& g, const EdgeColoring& c);

/// Palette must satisfy K >= 2 Delta - 1.
EdgeColoring greedy_4acyclic(const Graph& g, std::size_t palette, Rng& rng);

/// Least bichromatic cycle under the canonical order. With `restrict`, only
/// cycles containing one of those edges qualify. Coloring must be proper.
std::optional<Cycle> find_bichromatic_cycle(const Graph& g, const EdgeColoring& c,
                                            std::optional<std::span<const EdgeId>> restrict = {});

/// Every bichromatic cycle, sorted canonically.
std::vector<Cycle> all_bichromatic_cycles(const Graph& g, const EdgeColoring& c);

/// flags[e] != 0 iff edge e lies on some bichromatic cycle.
std::vector<char> edges_on_bichromatic_cycles(const Graph& g, const EdgeColoring& c);

enum class DetectionMode {
  rescan,       // full sweep before every root call
  incremental,  // cached cycle set, refreshed through recolored edges
};

struct ChoiceInfo {
  EdgeId edge;
  std::size_t forbidden;  // |forbidden_colors|
  std::size_t available;  // palette - forbidden
  bool greedy;            // false while recoloring
};

struct ColorObserver {
  /// After every single edge assignment, greedy or recolor.
  std::function<void(const EdgeColoring&, const ChoiceInfo&)> on_assign;
  /// Just before and just after each root Recolor call.
  std::function<void(RootPhase, const Cycle&, const EdgeColoring&)> on_root;
};

struct ColorOptions {
  /// Defaults to 64 * m * ceil(log2(m + 2)) Recolor calls.
  std::optional<std::uint64_t> step_limit;
  DetectionMode mode = DetectionMode::incremental;
  const ColorObserver* observer = nullptr;
};

struct ColorRunStats {
  std::uint64_t steps = 0;   // Recolor calls
  std::uint64_t phases = 0;  // root Recolor calls
  std::vector<std::size_t> cycle_lengths;  // per call, in call order
  std::vector<std::size_t> call_depths;    // per call, 0 for root calls
  std::vector<std::vector<EdgeId>> root_cycles;  // sorted edge sets of root calls
  bool terminated = false;
  std::uint64_t seed = 0;

  bool operator==(const ColorRunStats&) const = default;
};

struct ColorResult {
  EdgeColoring coloring;
  ColorRunStats stats;
};

ColorResult col_alg(const Graph& g, std::size_t palette, std::uint64_t seed,
                    const ColorOptions& options = {});

struct AcyclicVerdict {
  bool proper = false;
  bool acyclic = false;  // false whenever the coloring is improper
  std::optional<Cycle> witness;
};

/// Every edge must be colored within the palette.
AcyclicVerdict verify_acyclic(const Graph& g, const EdgeColoring& c);

/// Number of distinct cycles of the given even length through edge e, by
/// exhaustive search; throws SizeError when `work_limit` DFS expansions are
/// exceeded.
std::uint64_t count_cycles_through_edge(const Graph& g, EdgeId e, std::size_t length,
                                        std::uint64_t work_limit = 50'000'000);

}  // namespace lll

#endif  // LLL_COLORING_HPP
