#include "zkqbc/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace zkqbc::dimacs {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::size_t to_count(std::string_view token, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

graph::Graph parse(std::string_view text) {
  bool have_problem = false;
  std::size_t n = 0;
  std::size_t declared_m = 0;
  std::vector<std::pair<graph::Vertex, graph::Vertex>> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tok = split_ws(line);
    if (tok.empty()) continue;

    if (tok[0] == "c") continue;

    if (tok[0] == "p") {
      if (have_problem) throw ParseError(line_no, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "edge") {
        throw ParseError(line_no, "malformed problem line, expected 'p edge <n> <m>'");
      }
      n = to_count(tok[2], line_no, "vertex count");
      declared_m = to_count(tok[3], line_no, "edge count");
      have_problem = true;
      continue;
    }

    if (tok[0] == "e") {
      if (!have_problem) throw ParseError(line_no, "edge before problem line");
      if (tok.size() != 3) throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
      const std::size_t u = to_count(tok[1], line_no, "vertex");
      const std::size_t v = to_count(tok[2], line_no, "vertex");
      for (std::size_t x : {u, v}) {
        if (x < 1 || x > n) {
          throw ParseError(line_no, "vertex " + std::to_string(x) + " out of range 1.." + std::to_string(n));
        }
      }
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
        throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      }
      edges.emplace_back(static_cast<graph::Vertex>(u - 1), static_cast<graph::Vertex>(v - 1));
      continue;
    }

    throw ParseError(line_no, "unrecognized line '" + std::string(line) + "'");
  }

  if (!have_problem) throw ParseError(0, "missing problem line");
  if (edges.size() != declared_m) {
    throw ParseError(0, "problem line declares " + std::to_string(declared_m) + " edges, found " +
                            std::to_string(edges.size()));
  }
  return graph::Graph(n, std::move(edges));
}

graph::Graph load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open graph file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string serialize(const graph::Graph& g) {
  std::string out = "p edge " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges()) {
    out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  }
  return out;
}

}  // namespace zkqbc::dimacs
