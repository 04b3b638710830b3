#include "signet/graph_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

namespace signet {

namespace {

[[noreturn]] void parse_fail(const std::string& source, int line, const std::string& what) {
  throw Error(Errc::parse_error,
              source + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

SignedDigraph parse_graph(std::istream& in, const std::string& source_name) {
  std::string line;
  int line_no = 0;
  long n = -1;
  Matrix weights;
  std::set<std::pair<long, long>> seen;

  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    if (n < 0) {
      std::string tag;
      if (!(fields >> tag)) continue;  // blank or comment-only line
      long count = 0;
      if (tag != "n" || !(fields >> count))
        parse_fail(source_name, line_no, "expected header 'n <count>'");
      std::string extra;
      if (fields >> extra) parse_fail(source_name, line_no, "trailing text after node count");
      if (count < 2) parse_fail(source_name, line_no, "node count must be at least 2");
      n = count;
      weights = Matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      continue;
    }
    std::string first;
    if (!(fields >> first)) continue;  // blank or comment-only line
    long i = 0, j = 0;
    double w = 0.0;
    std::size_t used = 0;
    try {
      i = std::stol(first, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != first.size() || !(fields >> j >> w))
      parse_fail(source_name, line_no, "expected '<i> <j> <w>'");
    std::string extra;
    if (fields >> extra) parse_fail(source_name, line_no, "trailing text after edge");
    if (i < 1 || i > n || j < 1 || j > n)
      parse_fail(source_name, line_no, "node index out of range 1.." + std::to_string(n));
    if (!seen.insert({i, j}).second)
      parse_fail(source_name, line_no,
                 "duplicate entry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    weights(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = w;
  }
  if (n < 0) parse_fail(source_name, line_no, "missing 'n <count>' header");
  return SignedDigraph::validate(std::move(weights));
}

SignedDigraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, path + ": cannot open file");
  return parse_graph(in, path);
}

std::string format_graph(const SignedDigraph& g) {
  std::ostringstream out;
  out << "n " << g.size() << "\n";
  char buf[40];
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g.weight(i, j) != 0.0) {
        std::snprintf(buf, sizeof buf, "%.17g", g.weight(i, j));
        out << (i + 1) << " " << (j + 1) << " " << buf << "\n";
      }
  return out.str();
}

}  // namespace signet
