#include "heredenum/io.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "heredenum/errors.hpp"

namespace heredenum::io {
namespace {

struct Line {
  std::size_t number;
  std::string content;  // comment stripped; may be empty
  bool blank;           // nothing at all besides whitespace
};

bool is_space_only(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<Line> next() {
    std::string raw;
    if (!std::getline(in_, raw)) return std::nullopt;
    ++number_;
    Line line{number_, raw, is_space_only(raw)};
    auto hash = line.content.find('#');
    if (hash != std::string::npos) line.content.erase(hash);
    return line;
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

// Parses exactly two non-negative integers from a line.
std::pair<long long, long long> two_ints(const Line& line, const char* what) {
  std::istringstream ss(line.content);
  long long a = 0;
  long long b = 0;
  if (!(ss >> a >> b)) throw ParseError(line.number, std::string("expected ") + what);
  std::string extra;
  if (ss >> extra) throw ParseError(line.number, "unexpected token '" + extra + "'");
  if (a < 0 || b < 0) throw ParseError(line.number, "negative value");
  return {a, b};
}

// Reads one block whose header is `header`.
Graph read_block(LineReader& reader, const Line& header) {
  auto [n, m] = two_ints(header, "header 'n m'");
  if (m > n * (n - 1) / 2 && n > 0) throw ParseError(header.number, "more edges than a simple graph allows");
  if (n == 0 && m != 0) throw ParseError(header.number, "edges on an empty graph");
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t last_line = header.number;
  while (static_cast<long long>(edges.size()) < m) {
    auto line = reader.next();
    if (!line) throw ParseError(last_line + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    last_line = line->number;
    if (is_space_only(line->content)) continue;
    auto [u, v] = two_ints(*line, "edge 'u v'");
    if (u >= n || v >= n) throw ParseError(line->number, "vertex id out of range");
    if (u == v) throw ParseError(line->number, "self-loop");
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(e).second) throw ParseError(line->number, "duplicate edge");
    edges.push_back(e);
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

}  // namespace

Graph parse_graph(std::istream& in) {
  LineReader reader(in);
  std::optional<Graph> graph;
  while (auto line = reader.next()) {
    if (is_space_only(line->content)) continue;
    if (graph) throw ParseError(line->number, "content after the last edge");
    graph = read_block(reader, *line);
  }
  if (!graph) throw ParseError(1, "missing header 'n m'");
  return *graph;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::vector<Graph> parse_family(std::istream& in) {
  LineReader reader(in);
  std::vector<Graph> out;
  bool separated = true;
  while (auto line = reader.next()) {
    if (line->blank) {
      separated = true;
      continue;
    }
    if (is_space_only(line->content)) continue;
    if (!separated) throw ParseError(line->number, "blocks must be separated by a blank line");
    out.push_back(read_block(reader, *line));
    separated = false;
  }
  if (out.empty()) throw ParseError(1, "no graphs in family file");
  return out;
}

std::vector<Graph> parse_family(const std::string& text) {
  std::istringstream in(text);
  return parse_family(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_graph(in);
}

std::vector<Graph> read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_family(in);
}

std::string to_edge_list(const Graph& G) {
  std::ostringstream out;
  out << G.order() << ' ' << G.edge_count() << '\n';
  for (auto [u, v] : G.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace heredenum::io
