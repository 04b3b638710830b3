#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "signet/graph.hpp"

// Hand-checked graph battery: every fixture is strongly connected, n runs
// from 2 to 8, and balanced/unbalanced as well as weight-balanced/unbalanced
// cases are all represented. Edges are (i, j, w) with 1-based indices,
// meaning a_ij = w (edge from v_j into v_i).

namespace signet::testing {

using Edge = std::tuple<int, int, double>;

struct Fixture {
  std::string name;
  std::size_t n = 0;
  std::vector<Edge> edges;
  bool balanced = false;
  bool weight_balanced = false;
};

inline SignedDigraph make_graph(std::size_t n, const std::vector<Edge>& edges) {
  Matrix w(n, n);
  for (const auto& [i, j, val] : edges)
    w(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = val;
  return SignedDigraph::validate(std::move(w));
}

inline SignedDigraph make_graph(const Fixture& f) { return make_graph(f.n, f.edges); }

inline const std::vector<Fixture>& battery() {
  static const std::vector<Fixture> fixtures = {
      {"neg_digon", 2, {{1, 2, -1}, {2, 1, -1}}, true, true},
      {"pos_digon_wu", 2, {{1, 2, 2}, {2, 1, 1}}, true, false},
      {"unit_3cycle", 3, {{2, 1, 1}, {3, 2, 1}, {1, 3, 1}}, true, true},
      {"wu_3cycle", 3, {{2, 1, 2}, {3, 2, 1}, {1, 3, 1}}, true, false},
      {"neg_3cycle", 3, {{2, 1, 1}, {3, 2, 1}, {1, 3, -1}}, false, true},
      {"bal_4",
       4,
       {{2, 1, 1.5}, {3, 2, -1}, {4, 3, 2}, {1, 4, -0.5}, {3, 1, -1}, {2, 4, -0.5}},
       true,
       false},
      {"unb_4", 4, {{2, 1, 1}, {3, 2, 1.5}, {4, 3, -1}, {1, 4, 2}, {3, 1, 1}}, false, false},
      {"bal_5_wb", 5, {{2, 1, 1}, {3, 2, 1}, {4, 3, -1}, {5, 4, 1}, {1, 5, -1}}, true, true},
      {"unb_5",
       5,
       {{2, 1, 1}, {3, 2, 1}, {4, 3, -1}, {5, 4, 1}, {1, 5, 1}, {4, 1, 2}},
       false,
       false},
      // 6-node pair used by the protocol-contrast and fixed-time suites:
      // same topology, one cross-partition sign flipped.
      {"six_balanced",
       6,
       {{2, 1, 1}, {3, 2, 2}, {4, 3, -1}, {5, 4, 1}, {6, 5, 2}, {1, 6, -1}, {1, 3, 0.5}, {5, 2, -1}},
       true,
       false},
      {"six_unbalanced",
       6,
       {{2, 1, 1}, {3, 2, 2}, {4, 3, -1}, {5, 4, 1}, {6, 5, 2}, {1, 6, 1}, {1, 3, 0.5}, {5, 2, -1}},
       false,
       false},
      {"unb_7",
       7,
       {{2, 1, 1}, {3, 2, 1}, {4, 3, 1}, {5, 4, -1}, {6, 5, 1}, {7, 6, 1}, {1, 7, -1}, {5, 1, -1}, {1, 4, -2}},
       false,
       false},
      {"bal_8",
       8,
       {{2, 1, 1}, {3, 2, 1}, {4, 3, 2}, {5, 4, -1}, {6, 5, 1}, {7, 6, 1}, {8, 7, 1}, {1, 8, -2}, {6, 2, -1}, {3, 7, -0.5}},
       true,
       false},
  };
  return fixtures;
}

inline const Fixture& fixture(const std::string& name) {
  for (const Fixture& f : battery())
    if (f.name == name) return f;
  throw std::out_of_range("no fixture named " + name);
}

/// Random strongly connected signed digraph: a random directed Hamiltonian
/// cycle (guaranteeing strong connectivity) plus random extra edges, both
/// respecting digon sign symmetry. |weights| are drawn from [wlo, whi].
inline SignedDigraph random_strongly_connected(std::mt19937& rng, std::size_t n,
                                               double wlo = 0.1, double whi = 10.0) {
  std::uniform_real_distribution<double> mag(wlo, whi);
  std::bernoulli_distribution coin(0.5);
  Matrix a(n, n);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  auto add_edge = [&](std::size_t i, std::size_t j) {
    if (i == j || a(i, j) != 0.0) return;
    double w = mag(rng) * (coin(rng) ? 1.0 : -1.0);
    if (a(j, i) != 0.0 && a(j, i) * w < 0.0) w = -w;
    a(i, j) = w;
  };
  for (std::size_t k = 0; k < n; ++k) add_edge(perm[(k + 1) % n], perm[k]);
  std::uniform_int_distribution<std::size_t> node(0, n - 1);
  const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, n * (n - 1) / 2)(rng);
  for (std::size_t k = 0; k < extra; ++k) add_edge(node(rng), node(rng));
  return SignedDigraph::validate(std::move(a));
}

/// Random structurally balanced graph by planting a partition: node signs
/// sigma are drawn first, then every edge weight gets the sign
/// sigma_i * sigma_j.
inline SignedDigraph random_balanced(std::mt19937& rng, std::size_t n,
                                     double wlo = 0.1, double whi = 10.0) {
  const SignedDigraph base = random_strongly_connected(rng, n, wlo, whi);
  std::bernoulli_distribution coin(0.5);
  std::vector<int> sigma(n);
  for (auto& s : sigma) s = coin(rng) ? 1 : -1;
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (base.weight(i, j) != 0.0)
        a(i, j) = sigma[i] * sigma[j] * std::abs(base.weight(i, j));
  return SignedDigraph::validate(std::move(a));
}

/// Random graph with no connectivity guarantee, for the reachability and
/// balance oracles.
inline SignedDigraph random_sparse(std::mt19937& rng, std::size_t n, double density = 0.3) {
  std::uniform_real_distribution<double> mag(0.1, 10.0);
  std::bernoulli_distribution edge(density), coin(0.5);
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !edge(rng)) continue;
      double w = mag(rng) * (coin(rng) ? 1.0 : -1.0);
      if (a(j, i) != 0.0 && a(j, i) * w < 0.0) w = -w;
      a(i, j) = w;
    }
  return SignedDigraph::validate(std::move(a));
}

}  // namespace signet::testing
