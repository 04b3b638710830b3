#include "signet/graph.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace signet {

SignedDigraph SignedDigraph::validate(Matrix weights) {
  if (!weights.square())
    throw Error(Errc::bad_dimension, "weight matrix must be square");
  const std::size_t n = weights.rows();
  if (n < 2)
    throw Error(Errc::bad_dimension,
                "need at least 2 nodes, got " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!std::isfinite(weights(i, j)))
        throw Error(Errc::non_finite, "non-finite weight at (" +
                                          std::to_string(i + 1) + ", " +
                                          std::to_string(j + 1) + ")");
  for (std::size_t i = 0; i < n; ++i)
    if (weights(i, i) != 0.0)
      throw Error(Errc::self_loop, "self-loop at node " + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = weights(i, j), b = weights(j, i);
      if ((a > 0.0 && b < 0.0) || (a < 0.0 && b > 0.0))
        throw Error(Errc::digon_sign_violation,
                    "digon sign violation between nodes " + std::to_string(i + 1) +
                        " and " + std::to_string(j + 1));
    }
  return SignedDigraph(std::move(weights));
}

Matrix laplacian(const SignedDigraph& g) {
  const std::size_t n = g.size();
  Matrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    double deg = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      deg += std::abs(g.weight(i, j));
      if (i != j) l(i, j) = -g.weight(i, j);
    }
    l(i, i) = deg;
  }
  return l;
}

SignedDigraph induced_unsigned(const SignedDigraph& g) {
  const std::size_t n = g.size();
  Matrix abs_w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) abs_w(i, j) = std::abs(g.weight(i, j));
  return SignedDigraph::validate(std::move(abs_w));
}

namespace {

// Tarjan. Successors of node u are the heads of edges leaving u, i.e. the
// nodes i with a_iu != 0 (column u of the weight matrix).
struct TarjanState {
  const SignedDigraph& g;
  std::vector<int> index, lowlink, on_stack;
  std::vector<std::size_t> stack;
  int counter = 0;
  std::size_t scc_count = 0;

  explicit TarjanState(const SignedDigraph& graph)
      : g(graph),
        index(graph.size(), -1),
        lowlink(graph.size(), 0),
        on_stack(graph.size(), 0) {}

  void visit(std::size_t u) {
    index[u] = lowlink[u] = counter++;
    stack.push_back(u);
    on_stack[u] = 1;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g.weight(i, u) == 0.0) continue;
      if (index[i] < 0) {
        visit(i);
        lowlink[u] = std::min(lowlink[u], lowlink[i]);
      } else if (on_stack[i]) {
        lowlink[u] = std::min(lowlink[u], index[i]);
      }
    }
    if (lowlink[u] == index[u]) {
      ++scc_count;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
      } while (w != u);
    }
  }
};

}  // namespace

bool is_strongly_connected(const SignedDigraph& g) {
  TarjanState t(g);
  for (std::size_t u = 0; u < g.size(); ++u)
    if (t.index[u] < 0) t.visit(u);
  return t.scc_count == 1;
}

GraphReport degree_report(const SignedDigraph& g) {
  const std::size_t n = g.size();
  GraphReport rep;
  rep.in_degrees.assign(n, 0.0);
  rep.out_degrees.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double w = std::abs(g.weight(i, j));
      rep.in_degrees[i] += w;
      rep.out_degrees[j] += w;
    }
  rep.weight_balanced = true;
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(rep.in_degrees[i] - rep.out_degrees[i]) > 1e-9)
      rep.weight_balanced = false;
  rep.strongly_connected = is_strongly_connected(g);
  return rep;
}

}  // namespace signet
