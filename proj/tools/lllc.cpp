// lllc: command-line front end for the resampling engine, bound tables,
// acyclic edge coloring and the gamma solver.
//
// Exit codes: 0 success, 2 verification failure, 3 not terminated within the
// step limit, 4 bad input or usage.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lll/bounds.hpp"
#include "lll/coloring.hpp"
#include "lll/dice.hpp"
#include "lll/engine.hpp"
#include "lll/gamma.hpp"
#include "lll/graph.hpp"
#include "lll/sat.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 2;
constexpr int kExitNotTerminated = 3;
constexpr int kExitInput = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string general(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::uint64_t random_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

// stdout, or the file given by --out
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path);
    if (!file_) throw UsageError("cannot open output file " + path);
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return in;
}

void csv_preamble(std::ostream& os, const Json& config) {
  os << "# schema: 1\n# config: " << config.dump() << '\n';
}

lll::GirthModel parse_model(const std::string& s) {
  if (s == "conservative") return lll::GirthModel::conservative;
  if (s == "interpolated") return lll::GirthModel::interpolated;
  throw UsageError("unknown girth model " + s);
}

lll::DetectionMode parse_mode(const std::string& s) {
  if (s == "incremental") return lll::DetectionMode::incremental;
  if (s == "rescan") return lll::DetectionMode::rescan;
  throw UsageError("unknown detection mode " + s);
}

// Palette for --auto: the gamma formula at the graph's girth; forests only
// need a proper 4-acyclic coloring.
std::size_t auto_palette(const lll::Graph& g, lll::GirthModel model) {
  const auto girth = g.girth();
  if (!girth) return g.max_degree() == 0 ? 1 : 2 * g.max_degree() - 1;
  return static_cast<std::size_t>(lll::colors_needed(static_cast<int>(g.max_degree()), static_cast<int>(*girth), model));
}

Json cycle_json(const std::optional<lll::Cycle>& c) {
  if (!c) return nullptr;
  return c->edges;
}

// ---------------------------------------------------------------------------
// gamma

struct GammaArgs {
  std::vector<int> girths;
  std::vector<int> table;
  bool fig1 = false;
  std::optional<int> delta;
  std::string model = "conservative";
  double tol = 1e-4;
  std::string out;
};

int cmd_gamma(const GammaArgs& a) {
  const auto model = parse_model(a.model);
  struct Row {
    std::string label;
    int girth;
  };
  std::vector<Row> rows;
  if (a.fig1) {
    rows = {{"-", 3}, {"7", 7}, {"53", 53}, {"219", 219}};
  } else if (!a.table.empty()) {
    if (a.table[0] > a.table[1]) throw UsageError("--table: gmin exceeds gmax");
    for (int g = a.table[0]; g <= a.table[1]; ++g) rows.push_back({std::to_string(g), g});
  } else {
    for (int g : a.girths) rows.push_back({std::to_string(g), g});
  }
  if (rows.empty()) throw UsageError("gamma: give --girth, --table or --fig1");
  if (a.delta && *a.delta < 0) throw UsageError("--delta must be nonnegative");

  Json config = {{"command", "gamma"}, {"model", a.model}, {"tol", a.tol}};
  config["delta"] = a.delta ? Json(*a.delta) : Json(nullptr);
  if (a.fig1) config["preset"] = "fig1";

  Sink sink(a.out);
  auto& os = sink.os();
  csv_preamble(os, config);
  os << "girth,r,gamma_min,gamma,tau,rho,K\n";
  for (const auto& row : rows) {
    const double r = lll::half_length_for_girth(row.girth, model);
    const double gmin = lll::min_gamma(r, a.tol);
    const double gamma = lll::admissible_gamma(row.girth, model);
    const auto sol = lll::solve_tau({gamma, r});
    os << row.label << ',' << general(r) << ',' << fixed(gmin, 6) << ',' << fixed(gamma, 3) << ','
       << fixed(sol.tau, 10) << ',' << fixed(sol.rho, 10) << ',';
    if (a.delta) os << lll::colors_needed(*a.delta, row.girth, model);
    os << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// color / verify

struct ColorArgs {
  std::string graph;
  std::optional<std::size_t> k;
  bool automatic = false;
  std::string model = "conservative";
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> step_limit;
  std::string mode = "incremental";
  std::string out;
};

int cmd_color(const ColorArgs& a) {
  auto in = open_input(a.graph);
  const lll::Graph g = lll::read_graph(in);
  if (!a.k && !a.automatic) throw UsageError("color: give --k or --auto");
  const std::size_t palette = a.k ? *a.k : auto_palette(g, parse_model(a.model));
  const std::uint64_t seed = a.seed.value_or(random_seed());

  lll::ColorOptions opts;
  opts.step_limit = a.step_limit;
  opts.mode = parse_mode(a.mode);
  const auto res = lll::col_alg(g, palette, seed, opts);
  const auto verdict = lll::verify_acyclic(g, res.coloring);

  Json config = {{"command", "color"}, {"graph", a.graph}, {"auto", a.automatic}, {"model", a.model},
                 {"mode", a.mode}, {"seed", seed}};
  config["step_limit"] = opts.step_limit.value_or(lll::default_step_limit(g.edge_count()));

  Json out = {{"schema", 1}, {"config", config}, {"K", palette}, {"colors", res.coloring.colors}};
  out["stats"] = {{"steps", res.stats.steps},
                  {"phases", res.stats.phases},
                  {"seed", res.stats.seed},
                  {"terminated", res.stats.terminated}};
  out["verdict"] = {{"proper", verdict.proper}, {"acyclic", verdict.acyclic}, {"witness", cycle_json(verdict.witness)}};

  Sink sink(a.out);
  sink.os() << out.dump(2) << '\n';
  if (!res.stats.terminated) return kExitNotTerminated;
  return verdict.proper && verdict.acyclic ? kExitOk : kExitVerify;
}

struct VerifyArgs {
  std::string graph;
  std::string coloring;
  std::string out;
};

int cmd_verify(const VerifyArgs& a) {
  auto gin = open_input(a.graph);
  const lll::Graph g = lll::read_graph(gin);
  auto cin = open_input(a.coloring);
  Json doc;
  try {
    doc = Json::parse(cin);
  } catch (const Json::exception& e) {
    throw lll::ParseError(std::string("coloring: ") + e.what());
  }
  lll::EdgeColoring c;
  try {
    c.palette = doc.at("K").get<std::size_t>();
    c.colors = doc.at("colors").get<std::vector<lll::Color>>();
  } catch (const Json::exception& e) {
    throw lll::ParseError(std::string("coloring: ") + e.what());
  }
  const auto v = lll::verify_acyclic(g, c);
  Json out = {{"schema", 1},
              {"config", {{"command", "verify"}, {"graph", a.graph}, {"coloring", a.coloring}}},
              {"proper", v.proper},
              {"acyclic", v.acyclic},
              {"witness", cycle_json(v.witness)}};
  Sink sink(a.out);
  sink.os() << out.dump(2) << '\n';
  return v.proper && v.acyclic ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------------------
// bench

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

template <class T>
T parse_number(const std::string& s, const std::string& what) {
  std::istringstream in(s);
  T v{};
  if (!(in >> v) || !in.eof()) throw UsageError("bad " + what + ": '" + s + "'");
  return v;
}

lll::Graph generate(const std::string& spec, std::uint64_t seed) {
  const auto p = split(spec, ':');
  const std::string kind = p.empty() ? "" : p[0];
  auto need = [&](std::size_t n) {
    if (p.size() != n + 1) throw UsageError("generator " + kind + " takes " + std::to_string(n) + " parameters");
  };
  lll::Rng rng(seed);
  try {
    if (kind == "random-regular") {
      need(2);
      return lll::random_regular_graph(parse_number<std::size_t>(p[1], "degree"),
                                       parse_number<std::size_t>(p[2], "vertex count"), rng);
    }
    if (kind == "gnp") {
      need(2);
      const double prob = parse_number<double>(p[2], "edge probability");
      if (!(prob >= 0.0 && prob <= 1.0)) throw UsageError("gnp: probability outside [0,1]");
      return lll::gnp_graph(parse_number<std::size_t>(p[1], "vertex count"), prob, rng);
    }
    if (kind == "cycle") {
      need(1);
      return lll::cycle_graph(parse_number<std::size_t>(p[1], "vertex count"));
    }
    if (kind == "complete") {
      need(1);
      return lll::complete_graph(parse_number<std::size_t>(p[1], "vertex count"));
    }
    if (kind == "petersen") {
      need(0);
      return lll::petersen_graph();
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("generator: ") + e.what());
  }
  throw UsageError("unknown generator '" + spec + "'");
}

struct BenchArgs {
  std::string gen;
  std::size_t seeds = 100;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> graph_seed;
  std::optional<std::size_t> k;
  bool automatic = false;
  std::string model = "conservative";
  std::optional<std::uint64_t> step_limit;
  std::string mode = "incremental";
  unsigned threads = 0;
  std::string out;
};

int cmd_bench(const BenchArgs& a) {
  const std::uint64_t base = a.seed.value_or(random_seed());
  const std::uint64_t graph_seed = a.graph_seed.value_or(base);
  const lll::Graph g = generate(a.gen, graph_seed);
  if (!a.k && !a.automatic) throw UsageError("bench: give --k or --auto");
  const std::size_t palette = a.k ? *a.k : auto_palette(g, parse_model(a.model));

  lll::ColorOptions opts;
  opts.step_limit = a.step_limit;
  opts.mode = parse_mode(a.mode);
  // palette errors surface before any thread starts
  if (g.max_degree() >= 1 && palette < 2 * g.max_degree() - 1)
    throw lll::PaletteError("palette below 2*Delta-1");

  struct Row {
    std::uint64_t steps = 0;
    std::uint64_t phases = 0;
    bool terminated = false;
    bool verified = false;
  };
  std::vector<Row> rows(a.seeds);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < rows.size() && !failed;) {
        const auto res = lll::col_alg(g, palette, base + i, opts);
        const auto v = lll::verify_acyclic(g, res.coloring);
        rows[i] = {res.stats.steps, res.stats.phases, res.stats.terminated, v.proper && v.acyclic};
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!error) error = std::current_exception();
      failed = true;
    }
  };
  unsigned threads = a.threads ? a.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, rows.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  Json config = {{"command", "bench"}, {"gen", a.gen},     {"graph_seed", graph_seed}, {"seed", base},
                 {"seeds", a.seeds},   {"K", palette},     {"mode", a.mode},
                 {"vertices", g.vertex_count()},           {"edges", g.edge_count()},
                 {"delta", g.max_degree()}};
  config["step_limit"] = opts.step_limit.value_or(lll::default_step_limit(g.edge_count()));

  Sink sink(a.out);
  auto& os = sink.os();
  csv_preamble(os, config);
  os << "seed,steps,phases,terminated\n";
  std::uint64_t max_steps = 0;
  std::size_t done = 0;
  bool all_verified = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << base + i << ',' << rows[i].steps << ',' << rows[i].phases << ',' << (rows[i].terminated ? 1 : 0) << '\n';
    max_steps = std::max(max_steps, rows[i].steps);
    if (rows[i].terminated) {
      ++done;
      all_verified = all_verified && rows[i].verified;
    }
  }
  os << "# terminated: " << done << '/' << rows.size() << '\n';
  os << "# tail: n,pr_steps_ge_n\n";
  for (std::uint64_t n = 1; !rows.empty(); n *= 2) {
    const auto hits = std::count_if(rows.begin(), rows.end(), [n](const Row& r) { return r.steps >= n; });
    os << "# tail: " << n << ',' << general(double(hits) / double(rows.size())) << '\n';
    if (n > max_steps) break;
  }
  return all_verified ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------------------
// sat

struct SatArgs {
  std::string cnf;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> step_limit;
  std::string trace;
  bool scan = false;
  std::string out;
};

int cmd_sat(const SatArgs& a) {
  auto in = open_input(a.cnf);
  const lll::Cnf cnf = lll::parse_dimacs(in);
  const auto system = lll::cnf_event_system(cnf);
  const std::uint64_t seed = a.seed.value_or(random_seed());
  lll::MOptions opts;
  opts.step_limit = a.step_limit;
  opts.use_index = !a.scan;
  const auto res = lll::m_algorithm(system, seed, opts);
  const bool sat = res.stats.terminated && lll::satisfies(cnf, res.assignment);

  Json config = {{"command", "sat"}, {"cnf", a.cnf}, {"seed", seed}, {"index", !a.scan}};
  config["step_limit"] = opts.step_limit.value_or(lll::default_step_limit(system.size()));
  Json out = {{"schema", 1},
              {"config", config},
              {"variables", cnf.num_vars},
              {"clauses", cnf.clauses.size()},
              {"terminated", res.stats.terminated},
              {"satisfied", sat},
              {"steps", res.stats.steps},
              {"phases", res.stats.phases},
              {"seed", seed}};
  out["assignment"] = res.stats.terminated ? Json(res.assignment) : Json(nullptr);
  Sink sink(a.out);
  sink.os() << out.dump(2) << '\n';

  if (!a.trace.empty()) {
    Json t = {{"seed", seed}, {"steps", res.stats.steps}, {"phases", res.stats.phases}};
    Json entries = Json::array();
    for (const auto& e : res.stats.trace) entries.push_back({e.event, e.depth});
    t["trace"] = std::move(entries);
    Sink ts(a.trace);
    ts.os() << t.dump() << '\n';
  }
  if (!res.stats.terminated) return kExitNotTerminated;
  return sat ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------------------
// bounds

struct BoundsArgs {
  std::string p;
  int delta = 2;
  std::size_t n = 10;
  std::uint64_t m = 1;
  double A = 4.0;
  std::string out;
};

int cmd_bounds(const BoundsArgs& a) {
  lll::BoundParams params;
  try {
    params.p = lll::parse_rational(a.p);
  } catch (const std::exception& e) {
    throw UsageError("bad --p '" + a.p + "': " + e.what());
  }
  params.delta = a.delta;
  params.m = a.m;
  params.A = a.A;
  params.check();
  const auto series = lll::bound_series(params, a.n);
  const auto cond = lll::lll_condition(params);
  std::string cutoff = "none";
  if (cond.strict && params.A > 1.0) cutoff = std::to_string(lll::cutoff_estimate(params));

  Json config = {{"command", "bounds"}, {"p", lll::to_string(params.p)}, {"delta", a.delta},
                 {"n", a.n},            {"m", a.m},                      {"A", a.A}};
  Sink sink(a.out);
  auto& os = sink.os();
  csv_preamble(os, config);
  os << "# base: " << general(series.base) << '\n';
  os << "# strict: " << (cond.strict ? "true" : "false") << '\n';
  os << "# classic: " << (cond.classic ? "true" : "false") << '\n';
  os << "# cutoff: " << cutoff << '\n';
  lll::write_bound_csv(os, series);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// dice

struct DiceArgs {
  std::uint64_t trials = 1'000'000;
  std::optional<std::uint64_t> seed;
  int phases = 2;
  std::string out;
};

int cmd_dice(const DiceArgs& a) {
  if (a.trials == 0) throw UsageError("dice: --trials must be positive");
  const std::uint64_t seed = a.seed.value_or(random_seed());
  lll::Rng rng(seed);
  const auto est = lll::dice_experiment(a.trials, rng, a.phases);
  const double target = lll::dice_fresh_roll_probability(a.phases);
  Json out = {{"schema", 1},
              {"config", {{"command", "dice"}, {"trials", a.trials}, {"phases", a.phases}, {"seed", seed}}},
              {"successes", est.successes},
              {"estimate", est.estimate()},
              {"fresh_roll_target", target},
              {"sigma", est.sigma(target)},
              {"z", est.z_score(target)}};
  Sink sink(a.out);
  sink.os() << out.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resampling algorithms, acyclic edge coloring and the gamma solver"};
  app.name("lllc");
  app.require_subcommand(1);

  GammaArgs ga;
  auto* gamma = app.add_subcommand("gamma", "Minimal gamma per girth and the resulting palette size (CSV)");
  auto* g_girth = gamma->add_option("--girth", ga.girths, "Girth(s) to tabulate")->check(CLI::PositiveNumber);
  auto* g_table = gamma->add_option("--table", ga.table, "Girth range gmin gmax")->expected(2);
  auto* g_fig1 = gamma->add_flag("--fig1", ga.fig1, "General case plus girths 7, 53, 219");
  g_girth->excludes(g_table)->excludes(g_fig1);
  g_table->excludes(g_fig1);
  gamma->add_option("--delta", ga.delta, "Maximum degree for the K column");
  gamma->add_option("--model", ga.model, "conservative | interpolated")->capture_default_str();
  gamma->add_option("--tol", ga.tol, "Bisection width for gamma_min")->capture_default_str()->check(CLI::PositiveNumber);
  gamma->add_option("--out", ga.out, "Output file");

  ColorArgs ca;
  auto* color = app.add_subcommand("color", "Acyclic edge coloring of a graph file (JSON)");
  color->add_option("--graph", ca.graph, "Edge-list file")->required();
  auto* c_k = color->add_option("--k", ca.k, "Palette size");
  auto* c_auto = color->add_flag("--auto", ca.automatic, "Palette from the gamma formula at the graph's girth");
  c_k->excludes(c_auto);
  color->add_option("--model", ca.model, "Girth model for --auto")->capture_default_str();
  color->add_option("--seed", ca.seed, "RNG seed (random if omitted)");
  color->add_option("--step-limit", ca.step_limit, "Maximum Recolor calls")->check(CLI::PositiveNumber);
  color->add_option("--mode", ca.mode, "incremental | rescan")->capture_default_str();
  color->add_option("--out", ca.out, "Output file");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a coloring JSON for properness and acyclicity");
  verify->add_option("--graph", va.graph, "Edge-list file")->required();
  verify->add_option("--coloring", va.coloring, "Coloring JSON with K and colors")->required();
  verify->add_option("--out", va.out, "Output file");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Coloring runs over many seeds (CSV)");
  bench->add_option("--gen", ba.gen, "random-regular:d:l | gnp:l:prob | cycle:l | complete:l | petersen")
      ->required();
  bench->add_option("--seeds", ba.seeds, "Number of runs")->capture_default_str();
  bench->add_option("--seed", ba.seed, "First run seed (random if omitted)");
  bench->add_option("--graph-seed", ba.graph_seed, "Generator seed (defaults to --seed)");
  auto* b_k = bench->add_option("--k", ba.k, "Palette size");
  auto* b_auto = bench->add_flag("--auto", ba.automatic, "Palette from the gamma formula");
  b_k->excludes(b_auto);
  bench->add_option("--model", ba.model, "Girth model for --auto")->capture_default_str();
  bench->add_option("--step-limit", ba.step_limit, "Maximum Recolor calls per run")->check(CLI::PositiveNumber);
  bench->add_option("--mode", ba.mode, "incremental | rescan")->capture_default_str();
  bench->add_option("--threads", ba.threads, "Worker threads (0 = hardware)")->capture_default_str();
  bench->add_option("--out", ba.out, "Output file");

  SatArgs sa;
  auto* sat = app.add_subcommand("sat", "Resampling on a DIMACS CNF formula (JSON)");
  sat->add_option("--cnf", sa.cnf, "DIMACS file")->required();
  sat->add_option("--seed", sa.seed, "RNG seed (random if omitted)");
  sat->add_option("--step-limit", sa.step_limit, "Maximum Resample calls")->check(CLI::PositiveNumber);
  sat->add_option("--trace", sa.trace, "Write the call trace as JSON to this file");
  sat->add_flag("--scan", sa.scan, "Rescan all events instead of the variable index");
  sat->add_option("--out", sa.out, "Output file");

  BoundsArgs bo;
  auto* bounds = app.add_subcommand("bounds", "Exact Q_n table, LLL conditions and cutoff (CSV)");
  bounds->add_option("--p", bo.p, "Event probability as a/b")->required();
  bounds->add_option("--delta", bo.delta, "Dependency degree, loop included")->capture_default_str();
  bounds->add_option("--n", bo.n, "Largest n")->capture_default_str();
  bounds->add_option("--m", bo.m, "Number of events")->capture_default_str();
  bounds->add_option("--A", bo.A, "Prefactor A > 1 for the cutoff")->capture_default_str();
  bounds->add_option("--out", bo.out, "Output file");

  DiceArgs da;
  auto* dice = app.add_subcommand("dice", "Three-dice experiment (JSON)");
  dice->add_option("--trials", da.trials, "Number of trials")->capture_default_str();
  dice->add_option("--seed", da.seed, "RNG seed (random if omitted)");
  dice->add_option("--phases", da.phases, "Number of phases")->capture_default_str()->check(CLI::PositiveNumber);
  dice->add_option("--out", da.out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gamma) return cmd_gamma(ga);
    if (*color) return cmd_color(ca);
    if (*verify) return cmd_verify(va);
    if (*bench) return cmd_bench(ba);
    if (*sat) return cmd_sat(sa);
    if (*bounds) return cmd_bounds(bo);
    if (*dice) return cmd_dice(da);
  } catch (const UsageError& e) {
    std::cerr << "lllc: " << e.what() << '\n';
    return kExitInput;
  } catch (const lll::ParseError& e) {
    std::cerr << "lllc: parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const lll::ContractViolation& e) {
    std::cerr << "lllc: invalid input: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "lllc: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::length_error& e) {
    std::cerr << "lllc: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "lllc: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "lllc: internal error: " << e.what() << '\n';
    return 1;
  }
  return kExitInput;
}
