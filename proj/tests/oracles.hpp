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

// Independent brute-force reference implementations used by the tests.
// Deliberately naive: no shared code with the library beyond LrbTable.

#ifndef LRB_TESTS_ORACLES_HPP_
#define LRB_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include <lrb/table.hpp>

namespace oracle {

  using lrb::Element;
  using lrb::LrbTable;

  inline bool is_lrb(LrbTable const& s) {
    std::size_t const n = s.size();
    for (Element x = 0; x < n; ++x) {
      if (s(x, x) != x) {
        return false;
      }
      for (Element y = 0; y < n; ++y) {
        if (s(s(x, y), x) != s(x, y)) {
          return false;
        }
        for (Element z = 0; z < n; ++z) {
          if (s(s(x, y), z) != s(x, s(y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  //! x below y in the face order.
  inline bool below(LrbTable const& s, Element x, Element y) {
    return s(x, y) == y;
  }

  inline std::vector<Element> maximal_elements(LrbTable const& s) {
    std::vector<Element> out;
    for (Element c = 0; c < s.size(); ++c) {
      bool maximal = true;
      for (Element y = 0; y < s.size() && maximal; ++y) {
        maximal = y == c || !below(s, c, y);
      }
      if (maximal) {
        out.push_back(c);
      }
    }
    return out;
  }

  //! Every pair with a common lower bound has a greatest one, and some
  //! element lies below everything.
  inline bool is_meet_semilattice(LrbTable const& s) {
    std::size_t const n = s.size();
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        std::vector<Element> lower;
        for (Element z = 0; z < n; ++z) {
          if (below(s, z, x) && below(s, z, y)) {
            lower.push_back(z);
          }
        }
        bool found = false;
        for (Element g : lower) {
          found = found || std::all_of(lower.begin(), lower.end(), [&](Element z) {
                    return below(s, z, g);
                  });
        }
        if (!found) {
          return false;
        }
      }
    }
    return true;
  }

  //! Same support iff each absorbs the other on the right: xy = x and yx = y.
  inline std::vector<std::vector<Element>> support_classes(LrbTable const& s) {
    std::vector<std::vector<Element>> out;
    std::vector<char>                 seen(s.size(), 0);
    for (Element x = 0; x < s.size(); ++x) {
      if (seen[x]) {
        continue;
      }
      auto& cls = out.emplace_back();
      for (Element y = x; y < s.size(); ++y) {
        if (s(x, y) == x && s(y, x) == y) {
          cls.push_back(y);
          seen[y] = 1;
        }
      }
    }
    return out;
  }

  //! Words without repeated letters over k letters: sum of k!/(k-j)!.
  inline std::size_t repetition_free_words(std::size_t k) {
    std::size_t total = 0, term = 1;
    for (std::size_t j = 0; j <= k; ++j) {
      total += term;
      term *= k - j;
    }
    return total;
  }

  struct Edge {
    std::size_t u;
    std::size_t v;
    std::size_t cls;
  };

  //! Every simple cycle as a sorted edge-index set, found by testing every
  //! edge subset for being connected and 2-regular. Exponential in |E|.
  inline std::vector<std::vector<std::size_t>>
  cycles_by_subsets(std::size_t n, std::vector<Edge> const& edges) {
    std::vector<std::vector<std::size_t>> out;
    std::size_t const                     m = edges.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<std::size_t> degree(n, 0), chosen;
      for (std::size_t i = 0; i < m; ++i) {
        if (mask >> i & 1) {
          chosen.push_back(i);
          ++degree[edges[i].u];
          ++degree[edges[i].v];
        }
      }
      if (std::any_of(degree.begin(), degree.end(),
                      [](std::size_t d) { return d != 0 && d != 2; })) {
        continue;
      }
      // Connectivity via repeated relaxation.
      std::vector<char> reached(n, 0);
      reached[edges[chosen[0]].u] = 1;
      for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t i : chosen) {
          if (reached[edges[i].u] != reached[edges[i].v]) {
            reached[edges[i].u] = reached[edges[i].v] = 1;
            grew = true;
          }
        }
      }
      bool connected = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t i) {
        return reached[edges[i].u];
      });
      if (connected) {
        out.push_back(chosen);
      }
    }
    return out;
  }

  //! Whether every simple cycle holds an even number of edges of each class.
  inline bool all_cycles_even(std::size_t n, std::vector<Edge> const& edges) {
    for (auto const& c : cycles_by_subsets(n, edges)) {
      std::map<std::size_t, std::size_t> count;
      for (std::size_t i : c) {
        ++count[edges[i].cls];
      }
      for (auto const& [k, m] : count) {
        if (m % 2) {
          return false;
        }
      }
    }
    return true;
  }

  //! Parities (0, 1) of the number of class-a edges over every simple path
  //! from u to v, found by depth-first enumeration.
  inline std::set<int> path_parities(std::size_t              n,
                                     std::vector<Edge> const& edges,
                                     std::size_t              u,
                                     std::size_t              v,
                                     std::size_t              a) {
    std::set<int>     out;
    std::vector<char> on_path(n, 0);
    auto              walk = [&](auto& self, std::size_t x, int parity) -> void {
      if (x == v) {
        out.insert(parity);
        return;
      }
      on_path[x] = 1;
      for (auto const& e : edges) {
        std::size_t y;
        if (e.u == x) {
          y = e.v;
        } else if (e.v == x) {
          y = e.u;
        } else {
          continue;
        }
        if (!on_path[y]) {
          self(self, y, parity ^ static_cast<int>(e.cls == a));
        }
      }
      on_path[x] = 0;
    };
    walk(walk, u, 0);
    return out;
  }

}  // namespace oracle

#endif  // LRB_TESTS_ORACLES_HPP_
