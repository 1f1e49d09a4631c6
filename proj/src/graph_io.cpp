#include "p5col/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "p5col/errors.hpp"

namespace p5col {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, int line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                               std::string(tok) + "'");
  }
  return value;
}

Graph parse_dimacs(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError(lineno, "duplicate problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
        throw ParseError(lineno, "malformed header, expected 'p edge <n> <m>'");
      }
      n = to_int(tok[2], lineno, "vertex count");
      long long m = to_int(tok[3], lineno, "edge count");
      if (n < 0 || m < 0 || n > std::numeric_limits<int>::max()) {
        throw ParseError(lineno, "malformed header, negative or huge count");
      }
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (tok[0] == "e") {
      if (n < 0) throw ParseError(lineno, "edge line before 'p edge' header");
      if (tok.size() != 3) throw ParseError(lineno, "malformed edge line");
      long long u = to_int(tok[1], lineno, "vertex id");
      long long v = to_int(tok[2], lineno, "vertex id");
      if (u < 1 || v < 1 || u > n || v > n) {
        throw ParseError(lineno, "vertex id out of range 1.." + std::to_string(n));
      }
      if (u == v) throw ParseError(lineno, "self-loop on vertex " + std::to_string(u));
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
      continue;
    }
    throw ParseError(lineno, "unknown line type '" + std::string(tok[0]) + "'");
  }
  if (n < 0) throw ParseError(lineno, "malformed header, missing 'p edge' line");
  return Graph(static_cast<int>(n), edges);
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long declared = -1;
  long long max_id = -1;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    auto hash = view.find('#');
    if (hash != std::string_view::npos) {
      auto tok = split_ws(view.substr(hash + 1));
      if (tok.size() == 2 && tok[0] == "n") {
        declared = to_int(tok[1], lineno, "vertex count");
        if (declared < 0 || declared > std::numeric_limits<int>::max()) {
          throw ParseError(lineno, "invalid vertex count");
        }
      }
      view = view.substr(0, hash);
    }
    auto tok = split_ws(view);
    if (tok.empty()) continue;
    if (tok.size() != 2) throw ParseError(lineno, "expected 'u v'");
    long long u = to_int(tok[0], lineno, "vertex id");
    long long v = to_int(tok[1], lineno, "vertex id");
    if (u < 0 || v < 0 || u >= std::numeric_limits<int>::max() ||
        v >= std::numeric_limits<int>::max()) {
      throw ParseError(lineno, "vertex id out of range");
    }
    if (u == v) throw ParseError(lineno, "self-loop on vertex " + std::to_string(u));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    edge_lines.push_back(lineno);
    max_id = std::max({max_id, u, v});
  }
  long long n = declared >= 0 ? declared : max_id + 1;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].first >= n || edges[i].second >= n) {
      throw ParseError(edge_lines[i], "vertex id out of range 0.." + std::to_string(n - 1));
    }
  }
  return Graph(static_cast<int>(n), edges);
}

}  // namespace

GraphFormat parse_format_name(std::string_view name) {
  if (name == "dimacs" || name == "col") return GraphFormat::Dimacs;
  if (name == "edges" || name == "edge-list" || name == "edgelist") {
    return GraphFormat::EdgeList;
  }
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

GraphFormat format_from_path(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.substr(path.size() - suffix.size()) == suffix;
  };
  return ends_with(".col") || ends_with(".dimacs") ? GraphFormat::Dimacs
                                                   : GraphFormat::EdgeList;
}

Graph parse_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::Dimacs ? parse_dimacs(in) : parse_edge_list(in);
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  std::istringstream in{std::string(text)};
  return parse_graph(in, format);
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_graph(in, format);
}

void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
  if (format == GraphFormat::Dimacs) {
    out << "p edge " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  } else {
    out << "# n " << g.n() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  }
}

std::string format_graph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  write_graph(out, g, format);
  return out.str();
}

VertexWeights parse_weights(std::istream& in, int n) {
  std::vector<int> w(n, 1);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    view = view.substr(0, view.find('#'));
    auto tok = split_ws(view);
    if (tok.empty()) continue;
    if (tok.size() != 2) throw ParseError(lineno, "expected 'vertex weight'");
    long long v = to_int(tok[0], lineno, "vertex id");
    long long weight = to_int(tok[1], lineno, "weight");
    if (v < 0 || v >= n) {
      throw ParseError(lineno, "vertex id out of range 0.." + std::to_string(n - 1));
    }
    if (weight < 1 || weight > std::numeric_limits<int>::max()) {
      throw ParseError(lineno, "weight must be a positive integer");
    }
    w[v] = static_cast<int>(weight);
  }
  return VertexWeights(std::move(w));
}

VertexWeights read_weights_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_weights(in, n);
}

}  // namespace p5col
