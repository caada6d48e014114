#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "zkqbc/graph.hpp"

/// DIMACS .col reader and writer.
///
///   c <text>           comment
///   p edge <n> <m>     problem line, exactly once, before any edge
///   e <u> <v>          edge, 1 <= u, v <= n, u != v
///
/// Tokens are whitespace separated; LF or CRLF endings; blank lines ignored.
namespace zkqbc::dimacs {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);

  /// 1-based line number, 0 for whole-file errors.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

graph::Graph parse(std::string_view text);

/// Reads and parses a file. Throws ParseError, or std::runtime_error if the file can't be read.
graph::Graph load(const std::filesystem::path& path);

/// Canonical text: one problem line followed by edges in stored order.
std::string serialize(const graph::Graph& g);

}  // namespace zkqbc::dimacs
