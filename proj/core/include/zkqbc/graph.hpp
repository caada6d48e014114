#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zkqbc::graph {

using Vertex = std::uint32_t;

/// Undirected edge with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1. The constructor normalizes
/// each edge to u < v and rejects self-loops, duplicates and out-of-range
/// endpoints with std::invalid_argument. Edge order is preserved.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }

  bool is_connected() const;

  /// n-1 <= m <= n^2/2, the edge-count window of a simple connected graph.
  bool edge_count_within_bounds() const;

  /// Human-readable warnings (disconnected graph, bound violations).
  std::vector<std::string> validation_warnings() const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// The three colors with their fixed index map B->0, R->1, Y->2; the index is
/// also the protocol state a vertex of that color is committed to.
enum class Color : std::uint8_t { B = 0, R = 1, Y = 2 };

inline constexpr std::array<Color, 3> kColors{Color::B, Color::R, Color::Y};

inline int color_index(Color c) { return static_cast<int>(c); }
Color color_from_index(int index);
char color_letter(Color c);

struct Coloring {
  std::vector<Color> colors;

  std::size_t size() const { return colors.size(); }
  Color operator[](std::size_t i) const { return colors[i]; }
  bool operator==(const Coloring&) const = default;

  /// Number of vertices of each color, indexed by color_index.
  std::array<std::size_t, 3> class_sizes() const;
  std::string to_string() const;
};

/// Parses a string such as "BRY" into a coloring.
Coloring coloring_from_string(const std::string& letters);

/// A bijection of {B,R,Y}, stored as the image of each color.
class Permutation {
 public:
  Permutation() = default;  // identity
  /// Throws std::invalid_argument unless `image` is a bijection.
  explicit Permutation(std::array<Color, 3> image);

  Color operator()(Color c) const { return image_[color_index(c)]; }
  const std::array<Color, 3>& image() const { return image_; }
  bool operator==(const Permutation&) const = default;

  /// All six permutations, identity first, in lexicographic order of images.
  static const std::array<Permutation, 6>& all();

 private:
  std::array<Color, 3> image_{Color::B, Color::R, Color::Y};
};

/// Throws std::invalid_argument when the coloring length differs from n.
bool is_valid_3coloring(const Graph& g, const Coloring& c);

/// Edges whose endpoints share a color.
std::vector<std::size_t> monochromatic_edges(const Graph& g, const Coloring& c);

Coloring permute_colors(const Coloring& c, const Permutation& p);

inline constexpr std::size_t kMaxExhaustiveVertices = 20;

/// Lexicographically first valid 3-coloring (vertex 0 most significant,
/// B < R < Y), or nullopt. Throws std::invalid_argument for n > 20.
std::optional<Coloring> brute_force_3color(const Graph& g);

struct NearColoring {
  Coloring coloring;
  std::vector<std::size_t> bad_edges;  ///< indices into g.edges()
};

/// Lexicographically first coloring with the fewest monochromatic edges.
/// Throws std::invalid_argument for n > 20.
NearColoring best_near_coloring(const Graph& g);

}  // namespace zkqbc::graph
