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

// The labelled chamber adjacency graph and the properties built on it.

#ifndef LRB_ADJACENCY_HPP_
#define LRB_ADJACENCY_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "detail/graph.hpp"
#include "poset.hpp"
#include "support.hpp"
#include "table.hpp"

namespace lrb {

  //! Edge between vertex positions u < v through a facet both chambers cover.
  struct ChamberEdge {
    std::size_t u;
    std::size_t v;
    Element     facet;
    FiberLabel  label;

    bool operator==(ChamberEdge const&) const = default;
  };

  //! Vertices are chambers (ascending); parallel edges are allowed.
  struct ChamberGraph {
    std::vector<Element>     vertices;
    std::vector<ChamberEdge> edges;

    std::size_t vertex_count() const noexcept {
      return vertices.size();
    }

    std::vector<detail::Endpoints> endpoints() const {
      std::vector<detail::Endpoints> out;
      out.reserve(edges.size());
      for (auto const& e : edges) {
        out.push_back({e.u, e.v});
      }
      return out;
    }

    bool operator==(ChamberGraph const&) const = default;
  };

  //! Edges ordered by facet, then by vertex pair.
  inline ChamberGraph chamber_graph(FacePoset const&                     p,
                                    std::map<Element, FiberLabel> const& labels) {
    ChamberGraph g;
    g.vertices = p.chambers;
    for (Element f : p.facets) {
      std::vector<std::size_t> above;
      for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (p.covered_by(f, g.vertices[i])) {
          above.push_back(i);
        }
      }
      for (std::size_t i = 0; i < above.size(); ++i) {
        for (std::size_t j = i + 1; j < above.size(); ++j) {
          g.edges.push_back({above[i], above[j], f, labels.at(f)});
        }
      }
    }
    return g;
  }

  inline ChamberGraph chamber_graph(LrbTable const& s) {
    auto const p = face_poset(s);
    return chamber_graph(p, fiber_labels(p, support_structure(s)));
  }

  inline bool is_connected(ChamberGraph const& g) {
    auto const ends = g.endpoints();
    return detail::spanning_forest(g.vertex_count(), ends).components <= 1;
  }

  //! Vertex positions of some triangle, if any.
  inline std::optional<std::array<std::size_t, 3>>
  find_triangle(ChamberGraph const& g) {
    std::size_t const n = g.vertex_count();
    std::vector<char> adj(n * n, 0);
    for (auto const& e : g.edges) {
      adj[e.u * n + e.v] = adj[e.v * n + e.u] = 1;
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!adj[a * n + b]) {
          continue;
        }
        for (std::size_t c = b + 1; c < n; ++c) {
          if (adj[a * n + c] && adj[b * n + c]) {
            return std::array<std::size_t, 3>{a, b, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  //! Two distinct edges with the same endpoints, if any.
  inline std::optional<std::pair<std::size_t, std::size_t>>
  find_parallel_edges(ChamberGraph const& g) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      auto key = std::minmax(g.edges[i].u, g.edges[i].v);
      auto [it, fresh] = seen.emplace(key, i);
      if (!fresh) {
        return std::make_pair(it->second, i);
      }
    }
    return std::nullopt;
  }

  struct LrbClassification {
    bool is_connected = false;
    bool is_meet      = false;
    bool is_mc        = false;
    bool is_thin      = false;
    //! Number of chambers covering each facet.
    std::map<Element, std::size_t> facet_cover_counts;
    //! Number of chambers weakly above each facet.
    std::map<Element, std::size_t> facet_above_counts;
    //! Facets where the two counts differ.
    std::vector<Element> cover_count_mismatches;

    bool every_facet_is_edge = false;
    bool has_triangle        = false;
    //! On MC instances: (every facet is an edge and no triangle) <=> thin.
    //! Vacuously true otherwise.
    bool thin_characterization_holds = true;
  };

  inline LrbClassification classify(FacePoset const& p, ChamberGraph const& g) {
    LrbClassification c;
    c.is_connected = is_connected(g);
    c.is_meet      = is_meet_semilattice(p);
    c.is_mc        = c.is_connected && c.is_meet;
    c.is_thin      = true;
    for (Element f : p.facets) {
      std::size_t covering = 0, above = 0;
      for (Element ch : p.chambers) {
        covering += p.covered_by(f, ch);
        above += p.leq(f, ch);
      }
      c.facet_cover_counts[f] = covering;
      c.facet_above_counts[f] = above;
      if (covering != above) {
        c.cover_count_mismatches.push_back(f);
      }
      c.is_thin = c.is_thin && covering == 2;
    }
    std::set<Element> on_edges;
    for (auto const& e : g.edges) {
      on_edges.insert(e.facet);
    }
    c.every_facet_is_edge = on_edges.size() == p.facets.size();
    c.has_triangle        = find_triangle(g).has_value();
    if (c.is_mc) {
      c.thin_characterization_holds
          = (c.every_facet_is_edge && !c.has_triangle) == c.is_thin;
    }
    return c;
  }

  inline LrbClassification classify(LrbTable const& s) {
    auto const p = face_poset(s);
    return classify(p, chamber_graph(p, fiber_labels(p, support_structure(s))));
  }

  //! Every simple cycle (optionally at most max_len edges long). Throws
  //! cycle_overflow once more than cap cycles are found.
  inline std::vector<Cycle> simple_cycles(ChamberGraph const&        g,
                                          std::optional<std::size_t> max_len = {},
                                          std::size_t cap = default_cycle_cap) {
    auto const ends = g.endpoints();
    return detail::simple_cycles(g.vertex_count(), ends, max_len, cap);
  }

  struct ParityReport {
    bool ok = true;
    //! Edges sharing one label, when some label occurs more than once.
    std::optional<std::vector<std::size_t>> repeated_label_edges;
    //! A cycle with an odd number of edges from odd_class.
    std::optional<Cycle>   witness;
    std::optional<ClassId> odd_class;
  };

  //! Each label on exactly one edge, and every simple cycle has an even
  //! number of edges from each support class (checked on a cycle basis).
  inline ParityReport support_parity_ok(ChamberGraph const& g) {
    ParityReport                                   r;
    std::map<FiberLabel, std::vector<std::size_t>> by_label;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      by_label[g.edges[i].label].push_back(i);
    }
    for (auto const& [label, es] : by_label) {
      if (es.size() > 1) {
        r.ok                   = false;
        r.repeated_label_edges = es;
        return r;
      }
    }
    auto const               ends = g.endpoints();
    std::vector<std::size_t> cls;
    cls.reserve(g.edges.size());
    for (auto const& e : g.edges) {
      cls.push_back(e.label.class_id);
    }
    if (auto odd = detail::odd_class_cycle(g.vertex_count(), ends, cls)) {
      r.ok        = false;
      r.witness   = std::move(odd->cycle);
      r.odd_class = odd->class_key;
    }
    return r;
  }

  //! Number of edges of a cycle whose label lies in support class c.
  inline std::size_t class_count_on(ChamberGraph const& g,
                                    Cycle const&        cycle,
                                    ClassId             c) {
    return static_cast<std::size_t>(
        std::count_if(cycle.edges.begin(), cycle.edges.end(), [&](std::size_t e) {
          return g.edges[e].label.class_id == c;
        }));
  }

}  // namespace lrb

#endif  // LRB_ADJACENCY_HPP_
