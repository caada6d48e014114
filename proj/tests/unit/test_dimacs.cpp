#include <gtest/gtest.h>

#include "zkqbc/dimacs.hpp"
#include "zkqbc/random.hpp"

namespace zkqbc::dimacs {
namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "expected a parse error";
  return 0;
}

std::string error_message(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

TEST(Dimacs, ParsesTriangle) {
  const auto g = parse("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.edge(0), (graph::Edge{0, 1}));
  EXPECT_EQ(g.edge(2), (graph::Edge{0, 2}));
}

TEST(Dimacs, CommentsBlankLinesCrlfAndTabs) {
  const auto g = parse("c hello\r\n\r\np edge 3 2\r\n  e\t1 2 \r\nc mid\r\ne 3 2\r\n\n");
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edge(1), (graph::Edge{1, 2}));
}

TEST(Dimacs, NoTrailingNewline) { EXPECT_EQ(parse("p edge 2 1\ne 1 2").edge_count(), 1u); }

TEST(Dimacs, VertexOutOfRange) {
  EXPECT_EQ(error_line("p edge 2 1\ne 1 3\n"), 2u);
  EXPECT_NE(error_message("p edge 2 1\ne 1 3\n").find("vertex 3 out of range"), std::string::npos);
  EXPECT_EQ(error_line("p edge 2 1\ne 0 1\n"), 2u);
}

TEST(Dimacs, EdgeBeforeProblemLine) {
  EXPECT_EQ(error_line("e 1 2\n"), 1u);
  EXPECT_NE(error_message("e 1 2\n").find("edge before problem line"), std::string::npos);
}

TEST(Dimacs, StructuralErrors) {
  EXPECT_EQ(error_line("p edge 3 2\ne 1 2\ne 2 1\n"), 3u);  // duplicate
  EXPECT_EQ(error_line("p edge 3 1\ne 2 2\n"), 2u);         // self-loop
  EXPECT_EQ(error_line("p edge 3 1\np edge 3 1\n"), 2u);    // duplicate p-line
  EXPECT_EQ(error_line("p col 3 1\n"), 1u);                 // wrong format keyword
  EXPECT_EQ(error_line("p edge 3\n"), 1u);
  EXPECT_EQ(error_line("p edge 3 1\ne 1 x\n"), 2u);
  EXPECT_EQ(error_line("p edge 3 1\ne 1 2 3\n"), 2u);
  EXPECT_EQ(error_line("p edge 3 1\nx 1 2\n"), 2u);
  EXPECT_EQ(error_line("p edge 3 1\ne -1 2\n"), 2u);
  EXPECT_EQ(error_line("p edge 3 2\ne 1 2\n"), 0u);  // count mismatch
  EXPECT_EQ(error_line("c nothing\n"), 0u);          // missing p-line
}

TEST(Dimacs, MissingFile) { EXPECT_THROW(load("/nonexistent/graph.col"), std::runtime_error); }

TEST(Dimacs, SerializeIsIdempotentUnderReparse) {
  const std::string messy = "c comment\np edge 4 3\ne 2 1\n\ne 4 3\nc x\ne 1 4\n";
  const auto once = serialize(parse(messy));
  EXPECT_EQ(once, "p edge 4 3\ne 1 2\ne 3 4\ne 1 4\n");
  EXPECT_EQ(serialize(parse(once)), once);
}

TEST(Dimacs, RoundTripRandomGraphs) {
  Rng rng = make_stream(50, 0, StreamRole::Auxiliary);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 15);
    std::vector<std::pair<graph::Vertex, graph::Vertex>> e;
    for (graph::Vertex u = 0; u < n; ++u)
      for (graph::Vertex v = u + 1; v < n; ++v)
        if (bernoulli(rng, 0.4)) e.emplace_back(v, u);
    const graph::Graph g(n, e);
    EXPECT_EQ(parse(serialize(g)), g);
  }
}

}  // namespace
}  // namespace zkqbc::dimacs
