#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "treeprof/tree.hpp"

namespace treeprof {

// Shared text format: first line is the vertex count n, followed by n-1
// lines "u v" with 0-based endpoints. Anything malformed is rejected with
// the offending line number; whole-structure failures (disconnected or
// cyclic input) report line 0.
struct ParseError : std::runtime_error {
  int line = 0;

  // what() reads "line N: message".
  ParseError(int line_, const std::string& message);

  // Keeps the message verbatim; for wrappers that add their own context.
  static ParseError verbatim(int line_, const std::string& message);

 private:
  struct Verbatim {};
  ParseError(Verbatim, int line_, const std::string& message);
};

Tree parse_edge_list(std::istream& in);
Tree parse_edge_list(const std::string& text);

// Edges emitted as u < v in lexicographic order; ends with a newline.
std::string format_edge_list(const Tree& t);

// File wrappers; errors mention the path.
Tree load_tree_file(const std::string& file_path);
void save_tree_file(const Tree& t, const std::string& file_path);

}  // namespace treeprof
