#include "netfunc/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "netfunc/error.hpp"

namespace netfunc {

namespace {

bool blank_or_comment(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::istringstream fields(line);
    std::string extra;
    if (!have_header) {
      std::string tag;
      long long count = -1;
      if (!(fields >> tag >> count) || tag != "n" || count < 0 || (fields >> extra)) {
        throw ParseError(line_no, "expected header 'n <count>'");
      }
      n = static_cast<std::size_t>(count);
      have_header = true;
      continue;
    }
    long long u = -1;
    long long v = -1;
    if (!(fields >> u >> v) || (fields >> extra)) {
      throw ParseError(line_no, "expected edge 'u v'");
    }
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw ParseError(line_no, "vertex id out of range");
    }
    if (u == v) throw ParseError(line_no, "loop edge");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'n <count>'");
  return Graph::from_edge_list(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::string& header_comment) {
  if (!header_comment.empty()) {
    std::istringstream lines(header_comment);
    std::string line;
    while (std::getline(lines, line)) out << "# " << line << '\n';
  }
  out << "n " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace netfunc
