#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "lll/graph.hpp"
#include "lll/sat.hpp"

namespace lll {

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  std::size_t l = 0, m = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == 'c' || tok[0] == '#') continue;
    if (tok == "p") {
      std::string kind;
      long long ll = -1, mm = -1;
      if (header || !(ls >> kind >> ll >> mm) || kind != "edges" || ll < 0 || mm < 0)
        throw ParseError("graph: bad header at line " + std::to_string(lineno));
      l = static_cast<std::size_t>(ll);
      m = static_cast<std::size_t>(mm);
      header = true;
      continue;
    }
    if (!header) throw ParseError("graph: edge before header at line " + std::to_string(lineno));
    ls.clear();
    ls.str(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra) || u < 0 || v < 0)
      throw ParseError("graph: bad edge line " + std::to_string(lineno));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!header) throw ParseError("graph: missing 'p edges <l> <m>' header");
  if (edges.size() != m) throw ParseError("graph: edge count does not match header");
  try {
    return Graph(l, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p edges " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace lll
