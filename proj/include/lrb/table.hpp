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

// Finite semigroups given by their multiplication table, and exhaustive
// checks of the left regular band axioms.

#ifndef LRB_TABLE_HPP_
#define LRB_TABLE_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace lrb {

  //! Elements are dense indices 0..n-1 into a table.
  using Element = std::size_t;

  //! A finite semigroup as an n x n table; entry (x, y) is the product xy.
  //!
  //! Construction checks shape, entry range and, when an identity is
  //! declared, the identity law. The band axioms are *not* checked here, use
  //! validate_lrb for that. Names are opaque display strings.
  class LrbTable {
   public:
    LrbTable() = default;

    explicit LrbTable(std::vector<std::vector<Element>> const& rows,
                      std::vector<std::string>               names    = {},
                      std::optional<Element>                 identity = {})
        : n_(rows.size()), names_(std::move(names)), identity_(identity) {
      cells_.reserve(n_ * n_);
      for (std::size_t x = 0; x < n_; ++x) {
        if (rows[x].size() != n_) {
          throw input_error("table row " + std::to_string(x) + " has "
                            + std::to_string(rows[x].size())
                            + " entries, expected " + std::to_string(n_));
        }
        for (std::size_t y = 0; y < n_; ++y) {
          if (rows[x][y] >= n_) {
            throw input_error("table entry [" + std::to_string(x) + "]["
                              + std::to_string(y) + "] = "
                              + std::to_string(rows[x][y]) + " out of range");
          }
          cells_.push_back(rows[x][y]);
        }
      }
      if (names_.empty()) {
        names_.reserve(n_);
        for (std::size_t x = 0; x < n_; ++x) {
          names_.push_back(std::to_string(x));
        }
      } else if (names_.size() != n_) {
        throw input_error("expected " + std::to_string(n_) + " names, got "
                          + std::to_string(names_.size()));
      }
      if (identity_) {
        Element e = *identity_;
        if (e >= n_) {
          throw input_error("identity index " + std::to_string(e)
                            + " out of range");
        }
        for (Element x = 0; x < n_; ++x) {
          if ((*this)(e, x) != x || (*this)(x, e) != x) {
            throw input_error("declared identity " + std::to_string(e)
                              + " fails the identity law at "
                              + std::to_string(x));
          }
        }
      }
    }

    std::size_t size() const noexcept {
      return n_;
    }

    //! Unchecked product.
    Element operator()(Element x, Element y) const noexcept {
      return cells_[x * n_ + y];
    }

    //! Checked product; throws input_error for indices out of range.
    Element product(Element x, Element y) const {
      if (x >= n_ || y >= n_) {
        throw input_error("element index out of range (size "
                          + std::to_string(n_) + ")");
      }
      return (*this)(x, y);
    }

    std::span<Element const> row(Element x) const {
      return std::span<Element const>(cells_).subspan(x * n_, n_);
    }

    std::vector<std::vector<Element>> rows() const {
      std::vector<std::vector<Element>> out(n_);
      for (Element x = 0; x < n_; ++x) {
        auto r = row(x);
        out[x].assign(r.begin(), r.end());
      }
      return out;
    }

    std::vector<std::string> const& names() const noexcept {
      return names_;
    }

    std::string const& name(Element x) const {
      return names_.at(x);
    }

    std::optional<Element> identity() const noexcept {
      return identity_;
    }

    bool operator==(LrbTable const&) const = default;

   private:
    std::size_t              n_ = 0;
    std::vector<Element>     cells_;
    std::vector<std::string> names_;
    std::optional<Element>   identity_;
  };

  inline Element product(LrbTable const& s, Element x, Element y) {
    return s.product(x, y);
  }

  //! Outcome of validate_lrb. Each axiom is encoded by an optional
  //! counterexample, so a flag is false exactly when a witness is present.
  struct ValidationReport {
    std::optional<std::array<Element, 3>>     associativity_failure;
    std::optional<Element>                    idempotency_failure;
    std::optional<std::pair<Element, Element>> left_regularity_failure;
    std::optional<Element>                    identity;

    bool is_associative() const noexcept {
      return !associativity_failure;
    }
    bool is_band() const noexcept {
      return !idempotency_failure;
    }
    bool is_left_regular() const noexcept {
      return !left_regularity_failure;
    }
    bool ok() const noexcept {
      return is_associative() && is_band() && is_left_regular();
    }
  };

  //! Smallest two-sided identity of s, if any.
  inline std::optional<Element> find_identity(LrbTable const& s) {
    for (Element e = 0; e < s.size(); ++e) {
      bool ok = true;
      for (Element x = 0; x < s.size() && ok; ++x) {
        ok = s(e, x) == x && s(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  //! Exhaustive check of associativity (all n^3 triples), idempotency and
  //! xyx = xy. The first counterexample in lexicographic order is recorded.
  inline ValidationReport validate_lrb(LrbTable const& s) {
    ValidationReport  report;
    std::size_t const n = s.size();
    for (Element x = 0; x < n && !report.associativity_failure; ++x) {
      for (Element y = 0; y < n && !report.associativity_failure; ++y) {
        Element const xy = s(x, y);
        for (Element z = 0; z < n; ++z) {
          if (s(xy, z) != s(x, s(y, z))) {
            report.associativity_failure = std::array<Element, 3>{x, y, z};
            break;
          }
        }
      }
    }
    for (Element x = 0; x < n; ++x) {
      if (s(x, x) != x) {
        report.idempotency_failure = x;
        break;
      }
    }
    for (Element x = 0; x < n && !report.left_regularity_failure; ++x) {
      for (Element y = 0; y < n; ++y) {
        Element const xy = s(x, y);
        if (s(xy, x) != xy) {
          report.left_regularity_failure = std::make_pair(x, y);
          break;
        }
      }
    }
    report.identity = s.identity() ? s.identity() : find_identity(s);
    return report;
  }

  //! Returns s with its identity recorded if it has one; otherwise S^1, with
  //! the new identity prepended as element 0 (existing indices shift by 1).
  inline LrbTable adjoin_identity(LrbTable const& s) {
    if (auto e = s.identity() ? s.identity() : find_identity(s)) {
      return LrbTable(s.rows(), s.names(), e);
    }
    std::size_t const n = s.size();
    std::vector<std::vector<Element>> rows(n + 1,
                                           std::vector<Element>(n + 1));
    for (Element x = 0; x <= n; ++x) {
      rows[0][x] = x;
      rows[x][0] = x;
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        rows[x + 1][y + 1] = s(x, y) + 1;
      }
    }
    auto taken = [&s](std::string const& candidate) {
      for (auto const& nm : s.names()) {
        if (nm == candidate) {
          return true;
        }
      }
      return false;
    };
    std::string name = "0";
    for (char const* candidate : {"0", "1", "id"}) {
      name = candidate;
      if (!taken(name)) {
        break;
      }
    }
    while (taken(name)) {
      name += "'";
    }
    std::vector<std::string> names;
    names.reserve(n + 1);
    names.push_back(name);
    names.insert(names.end(), s.names().begin(), s.names().end());
    return LrbTable(rows, std::move(names), Element{0});
  }

}  // namespace lrb

#endif  // LRB_TABLE_HPP_
