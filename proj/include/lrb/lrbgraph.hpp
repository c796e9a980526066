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

// Thin LRB graphs: simple connected graphs with distinct (a, b) edge labels
// in which every simple cycle has an even number of edges with each first
// component a. They correspond one-to-one with rank 2 thin MC left regular
// bands.

#ifndef LRB_LRBGRAPH_HPP_
#define LRB_LRBGRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "adjacency.hpp"
#include "detail/graph.hpp"
#include "error.hpp"
#include "isomorphism.hpp"
#include "poset.hpp"
#include "support.hpp"
#include "table.hpp"

namespace lrb {

  using Label = std::uint64_t;

  struct GraphEdge {
    std::size_t u;
    std::size_t v;
    Label       a;
    Label       b;

    bool operator==(GraphEdge const&) const = default;
  };

  struct ThinLrbGraph {
    std::size_t            vertex_count = 0;
    std::vector<GraphEdge> edges;

    std::vector<detail::Endpoints> endpoints() const {
      std::vector<detail::Endpoints> out;
      out.reserve(edges.size());
      for (auto const& e : edges) {
        out.push_back({e.u, e.v});
      }
      return out;
    }

    bool operator==(ThinLrbGraph const&) const = default;
  };

  struct GraphReport {
    bool has_vertices = true;
    //! Edge with an endpoint out of range, or a loop.
    std::optional<std::size_t>                         bad_edge;
    std::optional<std::pair<std::size_t, std::size_t>> parallel_edges;
    std::optional<std::pair<std::size_t, std::size_t>> duplicate_labels;
    //! A vertex not reachable from vertex 0.
    std::optional<std::size_t> unreachable_vertex;
    //! A cycle with an odd number of edges whose first component is odd_label.
    std::optional<Cycle> odd_cycle;
    std::optional<Label> odd_label;

    bool ok() const noexcept {
      return has_vertices && !bad_edge && !parallel_edges && !duplicate_labels
             && !unreachable_vertex && !odd_cycle;
    }

    std::string reason() const {
      if (!has_vertices) {
        return "graph has no vertices";
      }
      if (bad_edge) {
        return "edge " + std::to_string(*bad_edge)
               + " is a loop or has an endpoint out of range";
      }
      if (parallel_edges) {
        return "edges " + std::to_string(parallel_edges->first) + " and "
               + std::to_string(parallel_edges->second)
               + " join the same vertices";
      }
      if (duplicate_labels) {
        return "edges " + std::to_string(duplicate_labels->first) + " and "
               + std::to_string(duplicate_labels->second)
               + " carry the same label";
      }
      if (unreachable_vertex) {
        return "graph is not connected: vertex "
               + std::to_string(*unreachable_vertex) + " is unreachable";
      }
      if (odd_cycle) {
        return "a cycle of length " + std::to_string(odd_cycle->length())
               + " has an odd number of edges with first component "
               + std::to_string(*odd_label);
      }
      return "ok";
    }
  };

  inline GraphReport validate_graph(ThinLrbGraph const& g) {
    GraphReport r;
    if (g.vertex_count == 0) {
      r.has_vertices = false;
      return r;
    }
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      auto const& e = g.edges[i];
      if (e.u >= g.vertex_count || e.v >= g.vertex_count || e.u == e.v) {
        r.bad_edge = i;
        return r;
      }
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> ends;
    std::map<std::pair<Label, Label>, std::size_t>             labels;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      auto const& e = g.edges[i];
      auto [it, fresh] = ends.emplace(std::minmax(e.u, e.v), i);
      if (!fresh && !r.parallel_edges) {
        r.parallel_edges = std::make_pair(it->second, i);
      }
      auto [jt, fresh_label] = labels.emplace(std::make_pair(e.a, e.b), i);
      if (!fresh_label && !r.duplicate_labels) {
        r.duplicate_labels = std::make_pair(jt->second, i);
      }
    }
    auto const ends_list = g.endpoints();
    auto const forest    = detail::spanning_forest(g.vertex_count, ends_list);
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
      if (forest.component[v] != forest.component[0]) {
        r.unreachable_vertex = v;
        break;
      }
    }
    std::vector<std::size_t> first;
    first.reserve(g.edges.size());
    for (auto const& e : g.edges) {
      first.push_back(static_cast<std::size_t>(e.a));
    }
    if (auto odd = detail::odd_class_cycle(g.vertex_count, ends_list, first)) {
      r.odd_cycle = std::move(odd->cycle);
      r.odd_label = static_cast<Label>(odd->class_key);
    }
    return r;
  }

  enum class Parity : std::uint8_t { even = 0, odd = 1 };

  //! Per-label 2-colouring: crossing an edge flips the colour for its first
  //! component only. When every cycle is even in every label, the parity of
  //! any path from u to v is the colour difference.
  class LabelParity {
   public:
    //! Throws precondition_error if some cycle is odd in some label.
    explicit LabelParity(ThinLrbGraph const& g) : n_(g.vertex_count) {
      for (auto const& e : g.edges) {
        if (e.u >= n_ || e.v >= n_) {
          throw input_error("edge endpoint out of range");
        }
        colour_.try_emplace(e.a);
      }
      auto const ends   = g.endpoints();
      auto const forest = detail::spanning_forest(n_, ends);
      component_        = forest.component;
      auto const adj    = detail::incidence(n_, ends);
      for (auto& [label, colour] : colour_) {
        colour.assign(n_, 0);
        for (std::size_t root = 0; root < n_; ++root) {
          if (forest.parent[root] != detail::npos) {
            continue;
          }
          std::vector<std::size_t> queue{root};
          for (std::size_t i = 0; i < queue.size(); ++i) {
            std::size_t const x = queue[i];
            for (auto [y, e] : adj[x]) {
              if (forest.parent_edge[y] == e && forest.parent[y] == x) {
                colour[y] = colour[x] ^ static_cast<char>(g.edges[e].a == label);
                queue.push_back(y);
              }
            }
          }
        }
        for (auto const& e : g.edges) {
          if ((colour[e.u] ^ colour[e.v]) != static_cast<char>(e.a == label)) {
            throw precondition_error(
                "graph violates the even cycle condition for label "
                + std::to_string(label));
          }
        }
      }
    }

    Parity between(std::size_t u, std::size_t v, Label a) const {
      if (u >= n_ || v >= n_) {
        throw input_error("vertex index out of range");
      }
      if (component_[u] != component_[v]) {
        throw precondition_error("no path between vertices "
                                 + std::to_string(u) + " and "
                                 + std::to_string(v));
      }
      auto it = colour_.find(a);
      if (it == colour_.end()) {
        return Parity::even;
      }
      return (it->second[u] ^ it->second[v]) ? Parity::odd : Parity::even;
    }

   private:
    std::size_t                          n_;
    std::vector<std::size_t>             component_;
    std::map<Label, std::vector<char>>   colour_;
  };

  //! Parity of the number of edges with first component a on a shortest
  //! (equivalently, any) path from u to v.
  inline Parity path_label_parity(ThinLrbGraph const& g,
                                  std::size_t         u,
                                  std::size_t         v,
                                  Label               a) {
    return LabelParity(g).between(u, v, a);
  }

  //! The rank 2 thin MC LRB of a valid thin LRB graph.
  //!
  //! Elements: 0 (identity), then the vertices, then the edges, in input
  //! order. A vertex absorbs everything on its right. An edge e from A to B
  //! with first component a sends a vertex V to A if the path from B to V has
  //! an odd number of a-edges and to B otherwise; an edge with the same first
  //! component is absorbed; any other edge acts like either of its endpoints.
  inline LrbTable to_lrb(ThinLrbGraph const& g) {
    auto const report = validate_graph(g);
    if (!report.ok()) {
      throw precondition_error("not a thin LRB graph: " + report.reason());
    }
    LabelParity const parity(g);
    std::size_t const n = g.vertex_count, m = g.edges.size();
    std::size_t const size = 1 + n + m;
    auto vertex = [](std::size_t k) -> Element { return 1 + k; };
    auto edge   = [n](std::size_t e) -> Element { return 1 + n + e; };

    std::vector<std::vector<Element>> rows(size, std::vector<Element>(size));
    std::vector<std::string>          names(size);
    names[0] = "0";
    for (Element x = 0; x < size; ++x) {
      rows[0][x] = x;
    }
    for (std::size_t k = 0; k < n; ++k) {
      names[vertex(k)] = "A" + std::to_string(k + 1);
      std::fill(rows[vertex(k)].begin(), rows[vertex(k)].end(), vertex(k));
    }
    for (std::size_t i = 0; i < m; ++i) {
      GraphEdge const& e   = g.edges[i];
      auto&            row = rows[edge(i)];
      names[edge(i)] = "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
      row[0]         = edge(i);
      for (std::size_t k = 0; k < n; ++k) {
        row[vertex(k)] = parity.between(e.v, k, e.a) == Parity::odd
                             ? vertex(e.u)
                             : vertex(e.v);
      }
      for (std::size_t j = 0; j < m; ++j) {
        row[edge(j)] = g.edges[j].a == e.a ? edge(i) : row[vertex(g.edges[j].u)];
      }
    }
    return LrbTable(rows, std::move(names), Element{0});
  }

  //! The thin LRB graph of a thin MC LRB: chambers as vertices, one edge per
  //! facet labelled (support class, fiber index). Structure below the facets
  //! is forgotten.
  inline ThinLrbGraph from_lrb(LrbTable const& s) {
    if (!validate_lrb(s).ok()) {
      throw precondition_error("not a left regular band");
    }
    auto const p      = face_poset(s);
    auto const sup    = support_structure(s);
    auto const graph  = chamber_graph(p, fiber_labels(p, sup));
    auto const status = classify(p, graph);
    if (!status.is_meet) {
      throw precondition_error("not thin MC: face poset is not a meet-semilattice");
    }
    if (!status.is_connected) {
      throw precondition_error("not thin MC: chamber graph is not connected");
    }
    if (!status.is_thin) {
      throw precondition_error(
          "not thin MC: some facet is not covered by exactly two chambers");
    }
    ThinLrbGraph out;
    out.vertex_count = graph.vertex_count();
    for (auto const& e : graph.edges) {
      out.edges.push_back({e.u, e.v, e.label.class_id, e.label.index});
    }
    return out;
  }

  //! A vertex bijection together with a relabelling of first components that
  //! carries the edges of one graph onto the other.
  struct GraphIsomorphism {
    std::vector<std::size_t> vertex_map;
    std::map<Label, Label>   label_map;
  };

  namespace detail {
    class GraphIsoSearch {
     public:
      GraphIsoSearch(ThinLrbGraph const& g, ThinLrbGraph const& h)
          : g_(g), h_(h), gadj_(adjacency(g)), hadj_(adjacency(h)) {}

      std::optional<GraphIsomorphism> run() {
        if (g_.vertex_count != h_.vertex_count
            || g_.edges.size() != h_.edges.size()) {
          return std::nullopt;
        }
        std::multiset<std::size_t> dg, dh;
        for (std::size_t v = 0; v < g_.vertex_count; ++v) {
          dg.insert(gadj_[v].size());
          dh.insert(hadj_[v].size());
        }
        if (dg != dh) {
          return std::nullopt;
        }
        // BFS order, so each vertex after a root has an assigned neighbour.
        std::vector<char> seen(g_.vertex_count, 0);
        for (std::size_t root = 0; root < g_.vertex_count; ++root) {
          if (seen[root]) {
            continue;
          }
          seen[root] = 1;
          order_.push_back(root);
          for (std::size_t i = order_.size() - 1; i < order_.size(); ++i) {
            for (auto const& [w, a] : gadj_[order_[i]]) {
              if (!seen[w]) {
                seen[w] = 1;
                order_.push_back(w);
              }
            }
          }
        }
        pi_.assign(g_.vertex_count, npos);
        used_.assign(h_.vertex_count, 0);
        if (!search(0)) {
          return std::nullopt;
        }
        return GraphIsomorphism{pi_, alpha_};
      }

     private:
      using Adjacency = std::vector<std::map<std::size_t, Label>>;

      static Adjacency adjacency(ThinLrbGraph const& g) {
        Adjacency adj(g.vertex_count);
        for (auto const& e : g.edges) {
          adj[e.u][e.v] = e.a;
          adj[e.v][e.u] = e.a;
        }
        return adj;
      }

      bool bind(Label a, Label b, std::vector<Label>& added) {
        auto it = alpha_.find(a);
        if (it != alpha_.end()) {
          return it->second == b;
        }
        if (alpha_inv_.contains(b)) {
          return false;
        }
        alpha_[a]     = b;
        alpha_inv_[b] = a;
        added.push_back(a);
        return true;
      }

      void unbind(std::vector<Label> const& added) {
        for (Label a : added) {
          alpha_inv_.erase(alpha_[a]);
          alpha_.erase(a);
        }
      }

      bool search(std::size_t pos) {
        if (pos == order_.size()) {
          return true;
        }
        std::size_t const x = order_[pos];
        for (std::size_t y = 0; y < h_.vertex_count; ++y) {
          if (used_[y] || gadj_[x].size() != hadj_[y].size()) {
            continue;
          }
          std::vector<Label> added;
          bool               ok = true;
          for (auto const& [w, a] : gadj_[x]) {
            if (pi_[w] == npos) {
              continue;
            }
            auto it = hadj_[y].find(pi_[w]);
            if (it == hadj_[y].end() || !bind(a, it->second, added)) {
              ok = false;
              break;
            }
          }
          if (ok) {
            pi_[x]   = y;
            used_[y] = 1;
            if (search(pos + 1)) {
              return true;
            }
            pi_[x]   = npos;
            used_[y] = 0;
          }
          unbind(added);
        }
        return false;
      }

      ThinLrbGraph const&      g_;
      ThinLrbGraph const&      h_;
      Adjacency                gadj_, hadj_;
      std::vector<std::size_t> order_, pi_;
      std::vector<char>        used_;
      std::map<Label, Label>   alpha_, alpha_inv_;
    };
  }  // namespace detail

  //! Label-structure-preserving isomorphism between two simple graphs.
  inline std::optional<GraphIsomorphism>
  graphs_isomorphic(ThinLrbGraph const& g, ThinLrbGraph const& h) {
    return detail::GraphIsoSearch(g, h).run();
  }

  //! from_lrb(to_lrb(g)) is isomorphic to g, preserving label structure.
  inline bool roundtrip_check(ThinLrbGraph const& g) {
    return graphs_isomorphic(g, from_lrb(to_lrb(g))).has_value();
  }

  //! to_lrb(from_lrb(s)) is isomorphic to s. Only meaningful in rank 2.
  inline bool roundtrip_check(LrbTable const& s) {
    auto const graph = from_lrb(s);
    auto const rank  = face_poset(s).rank;
    if (rank != 2) {
      throw precondition_error("LRB roundtrip needs rank 2, got rank "
                               + std::to_string(rank));
    }
    return are_isomorphic(s, to_lrb(graph)).has_value();
  }

}  // namespace lrb

#endif  // LRB_LRBGRAPH_HPP_
