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

// The face poset of a left regular band: x <= y iff xy = y. This is the
// dual of Green's R-order.

#ifndef LRB_POSET_HPP_
#define LRB_POSET_HPP_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "error.hpp"
#include "table.hpp"

namespace lrb {

  //! Length of the shortest upward cover chain from a minimal element to a
  //! chamber above it.
  struct ChainDistance {
    Element     minimal;
    Element     chamber;
    std::size_t length;

    bool operator==(ChainDistance const&) const = default;
  };

  class FacePoset {
   public:
    FacePoset() = default;

    std::size_t size() const noexcept {
      return n_;
    }

    bool leq(Element x, Element y) const noexcept {
      return leq_[x * n_ + y] != 0;
    }

    bool less(Element x, Element y) const noexcept {
      return x != y && leq(x, y);
    }

    //! x is covered by y.
    bool covered_by(Element x, Element y) const noexcept {
      return cover_[x * n_ + y] != 0;
    }

    std::vector<Element> upper_covers(Element x) const {
      std::vector<Element> out;
      for (Element y = 0; y < n_; ++y) {
        if (covered_by(x, y)) {
          out.push_back(y);
        }
      }
      return out;
    }

    std::vector<Element> lower_covers(Element y) const {
      std::vector<Element> out;
      for (Element x = 0; x < n_; ++x) {
        if (covered_by(x, y)) {
          out.push_back(x);
        }
      }
      return out;
    }

    bool is_chamber(Element x) const noexcept {
      return is_chamber_[x] != 0;
    }

    //! Cover pairs (lower, upper), sorted.
    std::vector<std::pair<Element, Element>> covers;
    std::vector<Element>                     minimals;
    std::vector<Element>                     chambers;
    std::vector<Element>                     facets;
    std::size_t                              rank = 0;
    //! Every (minimal, chamber) pair that is comparable, with its distance.
    std::vector<ChainDistance> rank_distances;

   private:
    friend FacePoset face_poset(LrbTable const&);

    std::size_t       n_ = 0;
    std::vector<char> leq_;
    std::vector<char> cover_;
    std::vector<char> is_chamber_;
  };

  //! x <= y in the face poset, i.e. xy = y.
  inline bool face_leq(LrbTable const& s, Element x, Element y) {
    return s.product(x, y) == y;
  }

  //! Builds the face poset. Throws precondition_error if the relation is not
  //! a partial order, which only happens for tables that are not LRBs.
  inline FacePoset face_poset(LrbTable const& s) {
    FacePoset         p;
    std::size_t const n = s.size();
    p.n_                = n;
    p.leq_.assign(n * n, 0);
    p.cover_.assign(n * n, 0);
    p.is_chamber_.assign(n, 0);

    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        p.leq_[x * n + y] = s(x, y) == y;
      }
    }
    for (Element x = 0; x < n; ++x) {
      if (!p.leq(x, x)) {
        throw precondition_error("face order not reflexive at "
                                 + std::to_string(x));
      }
      for (Element y = x + 1; y < n; ++y) {
        if (p.leq(x, y) && p.leq(y, x)) {
          throw precondition_error("face order not antisymmetric at ("
                                   + std::to_string(x) + ", "
                                   + std::to_string(y) + ")");
        }
      }
    }
    std::vector<std::vector<Element>> above(n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (p.less(x, y)) {
          above[x].push_back(y);
        }
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y : above[x]) {
        for (Element z : above[y]) {
          if (!p.leq(x, z)) {
            throw precondition_error(
                "face order not transitive at (" + std::to_string(x) + ", "
                + std::to_string(y) + ", " + std::to_string(z) + ")");
          }
        }
      }
    }

    // y covers x iff no z strictly between.
    for (Element x = 0; x < n; ++x) {
      for (Element y : above[x]) {
        bool between = false;
        for (Element z : above[x]) {
          if (z != y && p.less(z, y)) {
            between = true;
            break;
          }
        }
        if (!between) {
          p.cover_[x * n + y] = 1;
          p.covers.emplace_back(x, y);
        }
      }
    }

    for (Element x = 0; x < n; ++x) {
      bool minimal = true, maximal = above[x].empty();
      for (Element y = 0; y < n && minimal; ++y) {
        minimal = !p.less(y, x);
      }
      if (minimal) {
        p.minimals.push_back(x);
      }
      if (maximal) {
        p.chambers.push_back(x);
        p.is_chamber_[x] = 1;
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element c : p.chambers) {
        if (p.covered_by(x, c)) {
          p.facets.push_back(x);
          break;
        }
      }
    }

    // Upward BFS along covers from every minimal element.
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (Element m : p.minimals) {
      std::vector<std::size_t> dist(n, std::numeric_limits<std::size_t>::max());
      std::queue<Element>      todo;
      dist[m] = 0;
      todo.push(m);
      while (!todo.empty()) {
        Element x = todo.front();
        todo.pop();
        for (Element y : above[x]) {
          if (p.covered_by(x, y) && dist[y] > dist[x] + 1) {
            dist[y] = dist[x] + 1;
            todo.push(y);
          }
        }
      }
      for (Element c : p.chambers) {
        if (dist[c] != std::numeric_limits<std::size_t>::max()) {
          p.rank_distances.push_back({m, c, dist[c]});
          best = std::min(best, dist[c]);
        }
      }
    }
    p.rank = p.rank_distances.empty() ? 0 : best;
    return p;
  }

  //! Greatest lower bound of x and y, by scanning all common lower bounds.
  inline std::optional<Element> meet(FacePoset const& p, Element x, Element y) {
    std::vector<Element> lower;
    for (Element z = 0; z < p.size(); ++z) {
      if (p.leq(z, x) && p.leq(z, y)) {
        lower.push_back(z);
      }
    }
    for (Element g : lower) {
      if (std::all_of(lower.begin(), lower.end(), [&](Element z) {
            return p.leq(z, g);
          })) {
        return g;
      }
    }
    return std::nullopt;
  }

  inline std::optional<Element> meet(LrbTable const& s, Element x, Element y) {
    if (x >= s.size() || y >= s.size()) {
      throw input_error("element index out of range");
    }
    return meet(face_poset(s), x, y);
  }

  //! First pair (in lexicographic order) without a meet.
  inline std::optional<std::pair<Element, Element>>
  find_meetless_pair(FacePoset const& p) {
    for (Element x = 0; x < p.size(); ++x) {
      for (Element y = x + 1; y < p.size(); ++y) {
        if (!meet(p, x, y)) {
          return std::make_pair(x, y);
        }
      }
    }
    return std::nullopt;
  }

  inline bool is_meet_semilattice(FacePoset const& p) {
    return !find_meetless_pair(p);
  }

  inline bool is_meet_semilattice(LrbTable const& s) {
    return is_meet_semilattice(face_poset(s));
  }

}  // namespace lrb

#endif  // LRB_POSET_HPP_
