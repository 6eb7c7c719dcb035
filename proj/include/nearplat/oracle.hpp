#pragma once

// Brute-force reference enumeration: every labelled k-regular graph on v
// vertices, reduced to isomorphism classes, then every rotation system of each
// class. Slow by design and independent of search.hpp; used to check it.

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/isomorphism.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nearplat/canonical.hpp"
#include "nearplat/planar_map.hpp"

namespace nearplat {

class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kOracleMaxVertices = 10;
inline constexpr int kOracleMaxDarts = 32;

namespace detail {

using Adjacency = std::vector<std::vector<int>>;
using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

inline bool connected(const Adjacency& g) {
  std::vector<char> seen(g.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : g[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.size();
}

// Labelled k-regular graphs with N(0) = {1..k}; every unlabelled graph has
// such a labelling.
inline void regular_graphs(int k, int v, std::vector<Adjacency>& out) {
  std::vector<std::vector<char>> adj(v, std::vector<char>(v, 0));
  std::vector<int> deg(v, 0);
  for (int w = 1; w <= k; ++w) {
    adj[0][w] = adj[w][0] = 1;
    ++deg[w];
  }
  deg[0] = k;
  // Fill vertex u's remaining edges to higher vertices, in increasing order.
  auto rec = [&](auto&& self, int u, int from) -> void {
    if (u == v) {
      Adjacency g(v);
      for (int a = 0; a < v; ++a) {
        for (int b = 0; b < v; ++b) {
          if (adj[a][b]) g[a].push_back(b);
        }
      }
      if (connected(g)) out.push_back(std::move(g));
      return;
    }
    if (deg[u] == k) {
      self(self, u + 1, u + 2);
      return;
    }
    for (int w = std::max(from, u + 1); w < v; ++w) {
      if (adj[u][w] || deg[w] == k) continue;
      adj[u][w] = adj[w][u] = 1;
      ++deg[u];
      ++deg[w];
      self(self, u, w + 1);
      adj[u][w] = adj[w][u] = 0;
      --deg[u];
      --deg[w];
    }
  };
  rec(rec, 1, 2);
}

inline BoostGraph to_boost(const Adjacency& g) {
  BoostGraph bg(g.size());
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (int w : g[u]) {
      if (static_cast<int>(u) < w) boost::add_edge(u, w, bg);
    }
  }
  return bg;
}

// Cheap invariant for bucketing: sorted per-vertex triangle counts.
inline std::vector<int> triangle_profile(const Adjacency& g) {
  const int n = static_cast<int>(g.size());
  std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u) {
    for (int w : g[u]) m[u][w] = 1;
  }
  std::vector<int> t(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int a : g[u]) {
      for (int b : g[u]) {
        if (a < b && m[a][b]) ++t[u];
      }
    }
  }
  std::sort(t.begin(), t.end());
  return t;
}

inline std::vector<Adjacency> regular_graph_classes(int k, int v) {
  std::vector<Adjacency> labelled;
  regular_graphs(k, v, labelled);
  std::vector<std::pair<std::vector<int>, Adjacency>> classes;
  std::vector<BoostGraph> reps;
  for (auto& g : labelled) {
    auto inv = triangle_profile(g);
    const auto bg = to_boost(g);
    bool seen = false;
    for (std::size_t i = 0; i < classes.size() && !seen; ++i) {
      seen = classes[i].first == inv && boost::isomorphism(bg, reps[i]);
    }
    if (!seen) {
      classes.emplace_back(std::move(inv), std::move(g));
      reps.push_back(bg);
    }
  }
  std::vector<Adjacency> out;
  for (auto& c : classes) out.push_back(std::move(c.second));
  return out;
}

}  // namespace detail

/// Canonical codes of all connected simple k-regular plane maps on exactly v
/// vertices.
inline std::set<CanonicalCode> brute_force_oracle(int k, int v) {
  if (k < 1 || v < 1) throw std::invalid_argument("brute_force_oracle: k and v must be positive");
  if (v > kOracleMaxVertices || k * v > kOracleMaxDarts) {
    throw CapExceeded("brute_force_oracle: v=" + std::to_string(v) + ", k=" + std::to_string(k) +
                      " exceeds the cap");
  }
  std::set<CanonicalCode> codes;
  if ((k * v) % 2 != 0 || k >= v) return codes;

  std::vector<int> base(k);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> cyclic;  // cyclic orders of slots, slot 0 first
  {
    std::vector<int> rest(base.begin() + 1, base.end());
    do {
      std::vector<int> order{0};
      order.insert(order.end(), rest.begin(), rest.end());
      cyclic.push_back(order);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }

  for (const auto& g : detail::regular_graph_classes(k, v)) {
    const int darts = k * v;
    std::vector<int> rev(darts);
    for (int u = 0; u < v; ++u) {
      for (int i = 0; i < k; ++i) {
        const int w = g[u][i];
        const int j = static_cast<int>(std::find(g[w].begin(), g[w].end(), u) - g[w].begin());
        rev[u * k + i] = w * k + j;
      }
    }
    std::vector<int> choice(v, 0);
    std::vector<int> next(darts);
    std::vector<char> used(darts);
    while (true) {
      for (int u = 0; u < v; ++u) {
        const auto& order = cyclic[choice[u]];
        for (int i = 0; i < k; ++i) next[u * k + order[i]] = u * k + order[(i + 1) % k];
      }
      std::fill(used.begin(), used.end(), 0);
      int faces = 0;
      for (int d0 = 0; d0 < darts; ++d0) {
        if (used[d0]) continue;
        ++faces;
        for (int d = d0; !used[d]; d = next[rev[d]]) used[d] = 1;
      }
      if (2 - v + darts / 2 - faces == 0) {
        std::vector<std::vector<int>> rot(v);
        for (int u = 0; u < v; ++u) {
          for (int slot : cyclic[choice[u]]) rot[u].push_back(g[u][slot]);
        }
        codes.insert(canonical_code(PlanarMap(std::move(rot))));
      }
      int u = 0;
      while (u < v && ++choice[u] == static_cast<int>(cyclic.size())) choice[u++] = 0;
      if (u == v) break;
    }
  }
  return codes;
}

}  // namespace nearplat
