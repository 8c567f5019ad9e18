#include "treeprof/edgelist_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace treeprof {

namespace {

// A line must hold exactly the expected whitespace-separated integer
// fields, nothing more.
void parse_fields(const std::string& text, int line, int count, long long* out) {
  std::istringstream fields(text);
  for (int i = 0; i < count; ++i) {
    if (!(fields >> out[i])) {
      throw ParseError(line, "expected " + std::to_string(count) +
                                 " integer field(s)");
    }
  }
  std::string rest;
  if (fields >> rest) {
    throw ParseError(line, "unexpected trailing content '" + rest + "'");
  }
}

std::string read_data_line(std::istream& in, int& line) {
  std::string text;
  if (!std::getline(in, text)) {
    throw ParseError(line + 1, "unexpected end of input");
  }
  ++line;
  if (!text.empty() && text.back() == '\r') text.pop_back();
  return text;
}

}  // namespace

ParseError::ParseError(int line_, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_) + ": " + message),
      line(line_) {}

ParseError::ParseError(Verbatim, int line_, const std::string& message)
    : std::runtime_error(message), line(line_) {}

ParseError ParseError::verbatim(int line_, const std::string& message) {
  return ParseError(Verbatim{}, line_, message);
}

Tree parse_edge_list(std::istream& in) {
  int line = 0;
  long long n = 0;
  // read_data_line advances `line`; keep the calls sequenced so the error
  // position is the line just read, not the previous one.
  const std::string header = read_data_line(in, line);
  parse_fields(header, line, 1, &n);
  if (n < 1 || n > kMaxTreeSize) {
    throw ParseError(line, "vertex count " + std::to_string(n) +
                               " out of range [1, " +
                               std::to_string(kMaxTreeSize) + "]");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (long long i = 0; i + 1 < n; ++i) {
    long long uv[2];
    const std::string edge_line = read_data_line(in, line);
    parse_fields(edge_line, line, 2, uv);
    for (long long e : {uv[0], uv[1]}) {
      if (e < 0 || e >= n) {
        throw ParseError(line, "endpoint " + std::to_string(e) +
                                   " out of range [0, " + std::to_string(n - 1) +
                                   "]");
      }
    }
    if (uv[0] == uv[1]) {
      throw ParseError(line, "self-loop at vertex " + std::to_string(uv[0]));
    }
    edges.emplace_back(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
  }
  std::string trailing;
  while (std::getline(in, trailing)) {
    ++line;
    if (!trailing.empty() && trailing.back() == '\r') trailing.pop_back();
    if (trailing.find_first_not_of(" \t") != std::string::npos) {
      throw ParseError(line, "unexpected extra line");
    }
  }
  try {
    return make_tree(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

Tree parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string format_edge_list(const Tree& t) {
  std::ostringstream out;
  out << t.n() << '\n';
  for (const auto& [u, v] : edge_list(t)) out << u << ' ' << v << '\n';
  return out.str();
}

Tree load_tree_file(const std::string& file_path) {
  std::ifstream in(file_path);
  if (!in) throw std::runtime_error("cannot open " + file_path);
  try {
    return parse_edge_list(in);
  } catch (const ParseError& e) {
    throw ParseError::verbatim(e.line, file_path + ": " + e.what());
  }
}

void save_tree_file(const Tree& t, const std::string& file_path) {
  std::ofstream out(file_path);
  if (!out) throw std::runtime_error("cannot open " + file_path);
  out << format_edge_list(t);
  if (!out) throw std::runtime_error("cannot write " + file_path);
}

}  // namespace treeprof
