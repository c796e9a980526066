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

// Isomorphism testing for small semigroup tables by backtracking.

#ifndef LRB_ISOMORPHISM_HPP_
#define LRB_ISOMORPHISM_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "table.hpp"

namespace lrb {

  namespace detail {
    // Isomorphism-invariant data about one element.
    using Fingerprint = std::array<std::size_t, 6>;

    inline std::vector<Fingerprint> fingerprints(LrbTable const& s) {
      std::size_t const        n = s.size();
      std::vector<Fingerprint> out(n);
      for (Element x = 0; x < n; ++x) {
        Fingerprint f{};
        f[0] = s(x, x) == x;
        for (Element y = 0; y < n; ++y) {
          f[1] += s(x, y) == y;                  // faces above x
          f[2] += s(y, x) == x;                  // faces below x
          f[3] += s(x, y) == x;                  // supports below supp(x)
          f[4] += s(x, y) == x && s(y, x) == y;  // same support class
          f[5] += s(x, y) == s(y, x);
        }
        out[x] = f;
      }
      return out;
    }

    class IsoSearch {
     public:
      IsoSearch(LrbTable const& s, LrbTable const& t)
          : s_(s), t_(t), fs_(fingerprints(s)), ft_(fingerprints(t)),
            phi_(s.size(), none), inv_(t.size(), none) {}

      std::optional<std::vector<Element>> run() {
        if (s_.size() != t_.size()) {
          return std::nullopt;
        }
        std::map<Fingerprint, std::size_t> count;
        for (auto const& f : fs_) {
          ++count[f];
        }
        for (auto const& f : ft_) {
          if (count[f]-- == 0) {
            return std::nullopt;
          }
        }
        order_.resize(s_.size());
        for (Element x = 0; x < s_.size(); ++x) {
          order_[x] = x;
        }
        std::stable_sort(order_.begin(), order_.end(), [&](Element a, Element b) {
          return count_of(fs_[a]) < count_of(fs_[b]);
        });
        if (search(0)) {
          return phi_;
        }
        return std::nullopt;
      }

     private:
      static constexpr Element none = std::numeric_limits<Element>::max();

      std::size_t count_of(Fingerprint const& f) const {
        return static_cast<std::size_t>(std::count(fs_.begin(), fs_.end(), f));
      }

      bool search(std::size_t pos) {
        while (pos < order_.size() && phi_[order_[pos]] != none) {
          ++pos;
        }
        if (pos == order_.size()) {
          return true;
        }
        Element const x = order_[pos];
        for (Element t = 0; t < t_.size(); ++t) {
          if (inv_[t] != none || ft_[t] != fs_[x]) {
            continue;
          }
          std::size_t const mark = trail_.size();
          if (assign(x, t) && search(pos + 1)) {
            return true;
          }
          undo(mark);
        }
        return false;
      }

      // Assigns x -> t and every product forced by it.
      bool assign(Element x, Element t) {
        std::vector<std::pair<Element, Element>> todo{{x, t}};
        while (!todo.empty()) {
          auto [a, b] = todo.back();
          todo.pop_back();
          if (phi_[a] == b) {
            continue;
          }
          if (phi_[a] != none || inv_[b] != none || fs_[a] != ft_[b]) {
            return false;
          }
          phi_[a] = b;
          inv_[b] = a;
          trail_.push_back(a);
          for (Element y : trail_) {
            todo.emplace_back(s_(a, y), t_(b, phi_[y]));
            todo.emplace_back(s_(y, a), t_(phi_[y], b));
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (trail_.size() > mark) {
          Element const a = trail_.back();
          trail_.pop_back();
          inv_[phi_[a]] = none;
          phi_[a]       = none;
        }
      }

      LrbTable const&          s_;
      LrbTable const&          t_;
      std::vector<Fingerprint> fs_, ft_;
      std::vector<Element>     phi_, inv_, order_, trail_;
    };
  }  // namespace detail

  //! A bijection phi with phi(xy) = phi(x) phi(y), or nothing if none exists.
  inline std::optional<std::vector<Element>> are_isomorphic(LrbTable const& s,
                                                            LrbTable const& t) {
    return detail::IsoSearch(s, t).run();
  }

  //! True iff phi is a bijective homomorphism from s to t.
  inline bool is_isomorphism(LrbTable const&             s,
                             LrbTable const&             t,
                             std::vector<Element> const& phi) {
    if (s.size() != t.size() || phi.size() != s.size()) {
      return false;
    }
    std::vector<char> hit(t.size(), 0);
    for (Element x : phi) {
      if (x >= t.size() || hit[x]) {
        return false;
      }
      hit[x] = 1;
    }
    for (Element x = 0; x < s.size(); ++x) {
      for (Element y = 0; y < s.size(); ++y) {
        if (phi[s(x, y)] != t(phi[x], phi[y])) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace lrb

#endif  // LRB_ISOMORPHISM_HPP_
