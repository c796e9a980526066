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

// The support map: elements grouped by the principal two-sided ideal
// S^1 x S^1 they generate. Supports form a join-semilattice with
// supp(xy) = supp(x) v supp(y), chambers on top.

#ifndef LRB_SUPPORT_HPP_
#define LRB_SUPPORT_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "poset.hpp"
#include "table.hpp"

namespace lrb {

  using ClassId = std::size_t;

  namespace detail {
    // Membership bitmap of S^1 x S^1.
    inline std::vector<char> ideal_bitmap(LrbTable const& s, Element x) {
      std::size_t const n = s.size();
      std::vector<char> in(n, 0);
      in[x] = 1;
      for (Element a = 0; a < n; ++a) {
        Element const ax = s(a, x);
        in[ax]           = 1;
        in[s(x, a)]      = 1;
        for (Element b = 0; b < n; ++b) {
          in[s(ax, b)] = 1;
        }
      }
      return in;
    }
  }  // namespace detail

  //! The principal ideal S^1 x S^1, as a sorted list of elements.
  inline std::vector<Element> principal_ideal(LrbTable const& s, Element x) {
    if (x >= s.size()) {
      throw input_error("element index out of range");
    }
    auto const           in = detail::ideal_bitmap(s, x);
    std::vector<Element> out;
    for (Element y = 0; y < s.size(); ++y) {
      if (in[y]) {
        out.push_back(y);
      }
    }
    return out;
  }

  //! Support classes and their lattice order.
  //!
  //! Class ids are dense, ordered by the smallest element of each class.
  //! leq(c, d) means supp c lies below supp d, i.e. for representatives x of d
  //! and y of c, xy = x. Chambers form the top class.
  class SupportStructure {
   public:
    std::vector<ClassId>              class_of;
    std::vector<std::vector<Element>> classes;

    std::size_t class_count() const noexcept {
      return classes.size();
    }

    Element representative(ClassId c) const {
      return classes.at(c).front();
    }

    bool leq(ClassId c, ClassId d) const noexcept {
      return leq_[c * classes.size() + d] != 0;
    }

    ClassId join(ClassId c, ClassId d) const noexcept {
      return join_[c * classes.size() + d];
    }

    //! The unique maximal class, when there is one.
    std::optional<ClassId> top() const {
      return extremum(true);
    }

    std::optional<ClassId> bottom() const {
      return extremum(false);
    }

    //! Greatest lower bound of a non-empty set of classes, if it exists.
    std::optional<ClassId> meet_of(std::span<ClassId const> cs) const {
      std::vector<ClassId> lower;
      for (ClassId c = 0; c < class_count(); ++c) {
        if (std::all_of(cs.begin(), cs.end(), [&](ClassId d) {
              return leq(c, d);
            })) {
          lower.push_back(c);
        }
      }
      for (ClassId g : lower) {
        if (std::all_of(lower.begin(), lower.end(), [&](ClassId c) {
              return leq(c, g);
            })) {
          return g;
        }
      }
      return std::nullopt;
    }

    //! Cover pairs of the class order, sorted.
    std::vector<std::pair<ClassId, ClassId>> covers() const {
      std::vector<std::pair<ClassId, ClassId>> out;
      std::size_t const                        k = class_count();
      for (ClassId c = 0; c < k; ++c) {
        for (ClassId d = 0; d < k; ++d) {
          if (c == d || !leq(c, d)) {
            continue;
          }
          bool between = false;
          for (ClassId e = 0; e < k && !between; ++e) {
            between = e != c && e != d && leq(c, e) && leq(e, d);
          }
          if (!between) {
            out.emplace_back(c, d);
          }
        }
      }
      return out;
    }

   private:
    friend SupportStructure support_structure(LrbTable const&);

    std::optional<ClassId> extremum(bool up) const {
      for (ClassId c = 0; c < class_count(); ++c) {
        bool ok = true;
        for (ClassId d = 0; d < class_count() && ok; ++d) {
          ok = up ? leq(d, c) : leq(c, d);
        }
        if (ok) {
          return c;
        }
      }
      return std::nullopt;
    }

    std::vector<char>    leq_;
    std::vector<ClassId> join_;
  };

  //! Partitions s by ideal equality and builds the class order and join.
  //!
  //! Both descriptions of the order (xy = x, and reverse inclusion of
  //! ideals) are computed and must agree; the join must be well defined on
  //! classes and be their least upper bound. Throws structure_error if not.
  inline SupportStructure support_structure(LrbTable const& s) {
    SupportStructure  sup;
    std::size_t const n = s.size();

    std::vector<std::vector<char>>        ideal(n);
    std::map<std::vector<char>, ClassId> seen;
    sup.class_of.resize(n);
    for (Element x = 0; x < n; ++x) {
      ideal[x]       = detail::ideal_bitmap(s, x);
      auto [it, new_] = seen.emplace(ideal[x], sup.classes.size());
      if (new_) {
        sup.classes.emplace_back();
      }
      sup.class_of[x] = it->second;
      sup.classes[it->second].push_back(x);
    }

    auto subset = [n](std::vector<char> const& a, std::vector<char> const& b) {
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] && !b[i]) {
          return false;
        }
      }
      return true;
    };
    // supp(y) <= supp(x)  <=>  xy = x  <=>  ideal(x) subset of ideal(y)
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if ((s(x, y) == x) != subset(ideal[x], ideal[y])) {
          throw structure_error("support order disagrees with ideal inclusion"
                                " at ("
                                + std::to_string(x) + ", " + std::to_string(y)
                                + ")");
        }
      }
    }

    std::size_t const k = sup.classes.size();
    sup.leq_.assign(k * k, 0);
    sup.join_.assign(k * k, 0);
    for (ClassId c = 0; c < k; ++c) {
      for (ClassId d = 0; d < k; ++d) {
        Element const y = sup.representative(c), x = sup.representative(d);
        sup.leq_[c * k + d]  = s(x, y) == x;
        sup.join_[c * k + d] = sup.class_of[s(y, x)];
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (sup.class_of[s(x, y)]
            != sup.join(sup.class_of[x], sup.class_of[y])) {
          throw structure_error("support join not well defined at ("
                                + std::to_string(x) + ", " + std::to_string(y)
                                + ")");
        }
      }
    }
    for (ClassId c = 0; c < k; ++c) {
      for (ClassId d = 0; d < k; ++d) {
        ClassId const j = sup.join(c, d);
        if (!sup.leq(c, j) || !sup.leq(d, j)) {
          throw structure_error("support join is not an upper bound");
        }
        for (ClassId e = 0; e < k; ++e) {
          if (sup.leq(c, e) && sup.leq(d, e) && !sup.leq(j, e)) {
            throw structure_error("support join is not least");
          }
        }
      }
    }
    return sup;
  }

  //! Edge label of a facet: its support class and 1-based position among
  //! the facets of that class, in ascending element order.
  struct FiberLabel {
    ClassId     class_id = 0;
    std::size_t index    = 0;

    auto operator<=>(FiberLabel const&) const = default;
  };

  inline std::map<Element, FiberLabel> fiber_labels(FacePoset const&        p,
                                                    SupportStructure const& sup) {
    std::map<Element, FiberLabel>  out;
    std::map<ClassId, std::size_t> next;
    for (Element f : p.facets) {
      ClassId const c = sup.class_of[f];
      out[f]          = FiberLabel{c, ++next[c]};
    }
    return out;
  }

  inline std::map<Element, FiberLabel> fiber_labels(LrbTable const& s) {
    return fiber_labels(face_poset(s), support_structure(s));
  }

}  // namespace lrb

#endif  // LRB_SUPPORT_HPP_
