#include "zkqbc/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace zkqbc::graph {

Graph::Graph(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges)
    : n_(vertex_count), adjacency_(vertex_count) {
  std::set<Edge> seen;
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a >= n_ || b >= n_) {
      throw std::invalid_argument("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                  ") has an endpoint outside 0.." + std::to_string(n_) + "-1");
    }
    if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    const Edge e{std::min(a, b), std::max(a, b)};
    if (!seen.insert(e).second) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + ")");
    }
    edges_.push_back(e);
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<bool> seen(n_, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

bool Graph::edge_count_within_bounds() const {
  if (n_ == 0) return edges_.empty();
  const double m = static_cast<double>(edges_.size());
  const double n = static_cast<double>(n_);
  return m >= n - 1.0 && m <= n * n / 2.0;
}

std::vector<std::string> Graph::validation_warnings() const {
  std::vector<std::string> out;
  if (!is_connected()) {
    out.emplace_back("graph is disconnected; edge-count bound n-1 <= m <= n^2/2 not checked");
  } else if (!edge_count_within_bounds()) {
    out.emplace_back("edge count " + std::to_string(edges_.size()) +
                     " outside [n-1, n^2/2] for n = " + std::to_string(n_));
  }
  return out;
}

Color color_from_index(int index) {
  if (index < 0 || index > 2) throw std::invalid_argument("color index " + std::to_string(index));
  return static_cast<Color>(index);
}

char color_letter(Color c) { return "BRY"[color_index(c)]; }

std::array<std::size_t, 3> Coloring::class_sizes() const {
  std::array<std::size_t, 3> sizes{};
  for (Color c : colors) ++sizes[color_index(c)];
  return sizes;
}

std::string Coloring::to_string() const {
  std::string s;
  s.reserve(colors.size());
  for (Color c : colors) s.push_back(color_letter(c));
  return s;
}

Coloring coloring_from_string(const std::string& letters) {
  Coloring c;
  c.colors.reserve(letters.size());
  for (char ch : letters) {
    switch (ch) {
      case 'B': c.colors.push_back(Color::B); break;
      case 'R': c.colors.push_back(Color::R); break;
      case 'Y': c.colors.push_back(Color::Y); break;
      default: throw std::invalid_argument(std::string("unknown color letter '") + ch + "'");
    }
  }
  return c;
}

Permutation::Permutation(std::array<Color, 3> image) : image_(image) {
  std::array<bool, 3> hit{};
  for (Color c : image_) {
    const int i = color_index(c);
    if (i < 0 || i > 2 || hit[i]) throw std::invalid_argument("color permutation is not a bijection");
    hit[i] = true;
  }
}

const std::array<Permutation, 6>& Permutation::all() {
  static const std::array<Permutation, 6> perms = [] {
    std::array<Permutation, 6> out;
    std::array<Color, 3> image{Color::B, Color::R, Color::Y};
    std::size_t i = 0;
    do {
      out[i++] = Permutation(image);
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
  }();
  return perms;
}

std::vector<std::size_t> monochromatic_edges(const Graph& g, const Coloring& c) {
  if (c.size() != g.vertex_count()) {
    throw std::invalid_argument("coloring has " + std::to_string(c.size()) + " entries for " +
                                std::to_string(g.vertex_count()) + " vertices");
  }
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (c[e.u] == c[e.v]) bad.push_back(i);
  }
  return bad;
}

bool is_valid_3coloring(const Graph& g, const Coloring& c) { return monochromatic_edges(g, c).empty(); }

Coloring permute_colors(const Coloring& c, const Permutation& p) {
  Coloring out;
  out.colors.reserve(c.size());
  for (Color col : c.colors) out.colors.push_back(p(col));
  return out;
}

namespace {

void require_small(const Graph& g) {
  if (g.vertex_count() > kMaxExhaustiveVertices) {
    throw std::invalid_argument("exhaustive coloring supports at most " +
                                std::to_string(kMaxExhaustiveVertices) + " vertices, got " +
                                std::to_string(g.vertex_count()));
  }
}

// Vertices are assigned in index order, so "earlier neighbours" are the ones
// already colored when v is reached.
std::vector<std::vector<Vertex>> earlier_neighbors(const Graph& g) {
  std::vector<std::vector<Vertex>> out(g.vertex_count());
  for (const Edge& e : g.edges()) out[e.v].push_back(e.u);
  return out;
}

class NearColoringSearch {
 public:
  explicit NearColoringSearch(const Graph& g)
      : g_(g), earlier_(earlier_neighbors(g)), current_(g.vertex_count()), best_cost_(g.edge_count() + 1) {}

  Coloring run() {
    descend(0, 0);
    return Coloring{best_};
  }

 private:
  // Each unassigned vertex must pay at least its cheapest conflict count
  // against already-colored neighbours; these edge sets are disjoint.
  std::size_t lower_bound(std::size_t next) const {
    std::size_t lb = 0;
    for (std::size_t w = next; w < g_.vertex_count(); ++w) {
      std::array<std::size_t, 3> conflicts{};
      for (Vertex u : g_.neighbors(static_cast<Vertex>(w))) {
        if (u < next) ++conflicts[color_index(current_[u])];
      }
      lb += *std::min_element(conflicts.begin(), conflicts.end());
    }
    return lb;
  }

  void descend(std::size_t v, std::size_t cost) {
    if (cost + lower_bound(v) >= best_cost_) return;
    if (v == g_.vertex_count()) {
      best_cost_ = cost;
      best_ = current_;
      return;
    }
    for (Color c : kColors) {
      std::size_t added = 0;
      for (Vertex u : earlier_[v]) added += current_[u] == c ? 1 : 0;
      current_[v] = c;
      descend(v + 1, cost + added);
      if (best_cost_ == 0) return;
    }
  }

  const Graph& g_;
  std::vector<std::vector<Vertex>> earlier_;
  std::vector<Color> current_;
  std::vector<Color> best_;
  std::size_t best_cost_;
};

}  // namespace

std::optional<Coloring> brute_force_3color(const Graph& g) {
  require_small(g);
  const auto earlier = earlier_neighbors(g);
  const std::size_t n = g.vertex_count();
  std::vector<Color> current(n, Color::B);
  std::vector<int> next_choice(n + 1, 0);

  std::size_t v = 0;
  while (true) {
    if (v == n) return Coloring{current};
    bool placed = false;
    while (next_choice[v] < 3) {
      const Color c = color_from_index(next_choice[v]++);
      const bool clash = std::any_of(earlier[v].begin(), earlier[v].end(),
                                     [&](Vertex u) { return current[u] == c; });
      if (!clash) {
        current[v] = c;
        placed = true;
        break;
      }
    }
    if (placed) {
      ++v;
      next_choice[v] = 0;
    } else {
      if (v == 0) return std::nullopt;
      --v;
    }
  }
}

NearColoring best_near_coloring(const Graph& g) {
  require_small(g);
  NearColoring out;
  out.coloring = NearColoringSearch(g).run();
  out.bad_edges = monochromatic_edges(g, out.coloring);
  return out;
}

}  // namespace zkqbc::graph
