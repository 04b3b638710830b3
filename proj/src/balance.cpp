#include "signet/balance.hpp"

#include <algorithm>
#include <deque>

namespace signet {

namespace {

// Underlying undirected edge sign between u and v; 0 when absent. Digon sign
// symmetry guarantees the two directions never disagree.
int edge_sign(const SignedDigraph& g, std::size_t u, std::size_t v) {
  const double w = g.weight(u, v) != 0.0 ? g.weight(u, v) : g.weight(v, u);
  if (w > 0.0) return 1;
  if (w < 0.0) return -1;
  return 0;
}

// Chain of BFS parents from `node` up to the root (inclusive).
std::vector<std::size_t> root_chain(const std::vector<long>& parent, std::size_t node) {
  std::vector<std::size_t> chain{node};
  while (parent[chain.back()] >= 0)
    chain.push_back(static_cast<std::size_t>(parent[chain.back()]));
  return chain;
}

// Splices the two root paths of a contradicting non-tree edge (u, v) into a
// semi-cycle: u -> ... -> lca -> ... -> v plus the closing edge (v, u).
std::vector<std::size_t> make_witness(const std::vector<long>& parent,
                                      std::size_t u, std::size_t v) {
  auto cu = root_chain(parent, u);
  auto cv = root_chain(parent, v);
  // Trim the shared suffix, keeping the lowest common ancestor once.
  while (cu.size() > 1 && cv.size() > 1 && cu[cu.size() - 2] == cv[cv.size() - 2]) {
    cu.pop_back();
    cv.pop_back();
  }
  std::vector<std::size_t> cycle(cu.begin(), cu.end());  // u .. lca
  for (std::size_t k = cv.size() - 1; k-- > 0;) cycle.push_back(cv[k]);  // .. v
  return cycle;
}

}  // namespace

BalanceResult structural_balance(const SignedDigraph& g) {
  const std::size_t n = g.size();

  // Connectivity of the underlying graph first: the verdict is only unique
  // per connected component.
  {
    std::vector<char> seen(n, 0);
    std::deque<std::size_t> queue{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v)
        if (!seen[v] && edge_sign(g, u, v) != 0) {
          seen[v] = 1;
          ++count;
          queue.push_back(v);
        }
    }
    if (count != n)
      throw Error(Errc::disconnected_underlying_graph,
                  "underlying undirected graph is disconnected");
  }

  std::vector<int> sigma(n, 0);
  std::vector<long> parent(n, -1);
  std::deque<std::size_t> queue{0};
  sigma[0] = 1;  // canonical: first node gets +1
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < n; ++v) {
      const int sign = edge_sign(g, u, v);
      if (sign == 0) continue;
      const int want = sigma[u] * sign;
      if (sigma[v] == 0) {
        sigma[v] = want;
        parent[v] = static_cast<long>(u);
        queue.push_back(v);
      } else if (sigma[v] != want) {
        BalanceResult res;
        res.balanced = false;
        res.witness = make_witness(parent, u, v);
        return res;
      }
    }
  }

  BalanceResult res;
  res.balanced = true;
  res.gauge = std::move(sigma);
  return res;
}

bool verify_gauge(const SignedDigraph& g, const std::vector<int>& gauge) {
  const std::size_t n = g.size();
  if (gauge.size() != n)
    throw Error(Errc::dimension_mismatch, "gauge length does not match node count");
  for (int s : gauge)
    if (s != 1 && s != -1)
      throw Error(Errc::invalid_params, "gauge entries must be +1 or -1");
  const Matrix l = laplacian(g);
  const Matrix lbar = laplacian(induced_unsigned(g));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(gauge[i] * gauge[j] * l(i, j) - lbar(i, j)) > 1e-12)
        return false;
  return true;
}

}  // namespace signet
