//  Copyright 2026 The lrbkit Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// Small undirected multigraph helpers shared by the chamber graph and the
// thin LRB graph: spanning forests, simple cycle enumeration, and per-class
// parity over a fundamental cycle basis.

#ifndef LRB_DETAIL_GRAPH_HPP_
#define LRB_DETAIL_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "../error.hpp"

namespace lrb {

  //! A closed walk without repeated vertices. edges[i] joins vertices[i] and
  //! vertices[(i + 1) % length].
  struct Cycle {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> edges;

    std::size_t length() const noexcept {
      return edges.size();
    }

    bool operator==(Cycle const&) const = default;
  };

  inline constexpr std::size_t default_cycle_cap = 1'000'000;

  namespace detail {

    struct Endpoints {
      std::size_t u;
      std::size_t v;
    };

    inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    inline std::vector<std::vector<std::pair<std::size_t, std::size_t>>>
    incidence(std::size_t n, std::span<Endpoints const> edges) {
      // vertex -> (neighbour, edge index)
      std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
      for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e].u].emplace_back(edges[e].v, e);
        adj[edges[e].v].emplace_back(edges[e].u, e);
      }
      return adj;
    }

    struct SpanningForest {
      std::vector<std::size_t> parent;       // npos at roots
      std::vector<std::size_t> parent_edge;  // npos at roots
      std::vector<std::size_t> depth;
      std::vector<std::size_t> component;
      std::vector<char>        tree_edge;
      std::size_t              components = 0;
    };

    // BFS forest, roots taken in ascending vertex order.
    inline SpanningForest spanning_forest(std::size_t                n,
                                          std::span<Endpoints const> edges) {
      SpanningForest f;
      f.parent.assign(n, npos);
      f.parent_edge.assign(n, npos);
      f.depth.assign(n, 0);
      f.component.assign(n, npos);
      f.tree_edge.assign(edges.size(), 0);
      auto const adj = incidence(n, edges);
      for (std::size_t root = 0; root < n; ++root) {
        if (f.component[root] != npos) {
          continue;
        }
        std::vector<std::size_t> queue{root};
        f.component[root] = f.components;
        for (std::size_t i = 0; i < queue.size(); ++i) {
          std::size_t const x = queue[i];
          for (auto [y, e] : adj[x]) {
            if (f.component[y] == npos) {
              f.component[y]   = f.components;
              f.parent[y]      = x;
              f.parent_edge[y] = e;
              f.depth[y]       = f.depth[x] + 1;
              f.tree_edge[e]   = 1;
              queue.push_back(y);
            }
          }
        }
        ++f.components;
      }
      return f;
    }

    // The fundamental cycle of non-tree edge e: e from u to v, then the tree
    // path back from v to u.
    inline Cycle fundamental_cycle(SpanningForest const&      f,
                                   std::span<Endpoints const> edges,
                                   std::size_t                e) {
      std::size_t              a = edges[e].u, b = edges[e].v;
      std::vector<std::size_t> up_a, up_b, edge_a, edge_b;  // paths to LCA
      while (f.depth[a] > f.depth[b]) {
        up_a.push_back(a);
        edge_a.push_back(f.parent_edge[a]);
        a = f.parent[a];
      }
      while (f.depth[b] > f.depth[a]) {
        up_b.push_back(b);
        edge_b.push_back(f.parent_edge[b]);
        b = f.parent[b];
      }
      while (a != b) {
        up_a.push_back(a);
        edge_a.push_back(f.parent_edge[a]);
        a = f.parent[a];
        up_b.push_back(b);
        edge_b.push_back(f.parent_edge[b]);
        b = f.parent[b];
      }
      // u -> ... -> lca -> ... -> v, closed by e.
      Cycle c;
      c.vertices = up_a;
      c.vertices.push_back(a);
      c.vertices.insert(c.vertices.end(), up_b.rbegin(), up_b.rend());
      c.edges = edge_a;
      c.edges.insert(c.edges.end(), edge_b.rbegin(), edge_b.rend());
      c.edges.push_back(e);
      return c;
    }

    //! A cycle on which some class occurs an odd number of times.
    struct OddCycle {
      Cycle       cycle;
      std::size_t class_key;
    };

    // Checks that every simple cycle carries an even number of edges of each
    // class. Cycle parities add over GF(2) under symmetric difference, so
    // checking the fundamental cycles of a spanning forest is enough.
    inline std::optional<OddCycle>
    odd_class_cycle(std::size_t                 n,
                    std::span<Endpoints const>  edges,
                    std::span<std::size_t const> class_of_edge) {
      SpanningForest const f = spanning_forest(n, edges);
      std::map<std::size_t, std::size_t> dense;
      for (std::size_t c : class_of_edge) {
        dense.emplace(c, dense.size());
      }
      std::size_t const k = dense.size();
      // colour[v * k + a]: parity of class-a edges on the root path of v.
      std::vector<char> colour(n * k, 0);
      std::vector<std::size_t> order;
      order.reserve(n);
      for (std::size_t v = 0; v < n; ++v) {
        if (f.parent[v] == npos) {
          order.push_back(v);
        }
      }
      auto const adj = incidence(n, edges);
      for (std::size_t i = 0; i < order.size(); ++i) {
        std::size_t const x = order[i];
        for (auto [y, e] : adj[x]) {
          if (f.parent_edge[y] == e && f.parent[y] == x) {
            std::copy_n(colour.begin() + x * k, k, colour.begin() + y * k);
            colour[y * k + dense[class_of_edge[e]]] ^= 1;
            order.push_back(y);
          }
        }
      }
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (f.tree_edge[e]) {
          continue;
        }
        std::size_t const u = edges[e].u, v = edges[e].v;
        std::size_t const own = dense[class_of_edge[e]];
        for (auto [key, a] : dense) {
          char const flip = colour[u * k + a] ^ colour[v * k + a]
                            ^ static_cast<char>(a == own);
          if (flip) {
            return OddCycle{fundamental_cycle(f, edges, e), key};
          }
        }
      }
      return std::nullopt;
    }

    // All simple cycles, each reported once. A cycle is rooted at its
    // smallest vertex and oriented so that its first edge index is smaller
    // than its last. Two parallel edges form a cycle of length 2.
    inline std::vector<Cycle>
    simple_cycles(std::size_t                n,
                  std::span<Endpoints const> edges,
                  std::optional<std::size_t> max_len,
                  std::size_t                cap) {
      auto const         adj = incidence(n, edges);
      std::vector<Cycle> out;
      std::vector<char>  on_path(n, 0);
      Cycle              path;
      std::size_t const  limit = max_len.value_or(npos);

      auto dfs = [&](auto&& self, std::size_t root, std::size_t x) -> void {
        for (auto [y, e] : adj[x]) {
          if (!path.edges.empty() && e == path.edges.back()) {
            continue;
          }
          if (y == root && !path.edges.empty()) {
            if (path.edges.front() < e && path.edges.size() + 1 <= limit) {
              Cycle c = path;
              c.edges.push_back(e);
              out.push_back(std::move(c));
              if (out.size() > cap) {
                throw cycle_overflow(cap);
              }
            }
            continue;
          }
          if (y <= root || on_path[y] || path.edges.size() + 1 >= limit) {
            continue;
          }
          on_path[y] = 1;
          path.vertices.push_back(y);
          path.edges.push_back(e);
          self(self, root, y);
          path.vertices.pop_back();
          path.edges.pop_back();
          on_path[y] = 0;
        }
      };
      for (std::size_t root = 0; root < n; ++root) {
        path.vertices = {root};
        path.edges.clear();
        on_path[root] = 1;
        dfs(dfs, root, root);
        on_path[root] = 0;
      }
      return out;
    }

  }  // namespace detail
}  // namespace lrb

#endif  // LRB_DETAIL_GRAPH_HPP_
