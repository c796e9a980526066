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

// Generators for standard families of left regular bands: covector
// semigroups of sign vectors, planar line arrangements, free LRBs and the
// path family.

#ifndef LRB_CONSTRUCTIONS_HPP_
#define LRB_CONSTRUCTIONS_HPP_

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "table.hpp"

namespace lrb {

  enum class Sign : std::int8_t { minus = -1, zero = 0, plus = 1 };

  //! One entry in {-, 0, +} per hyperplane.
  class SignVector {
   public:
    SignVector() = default;

    explicit SignVector(std::vector<Sign> entries)
        : entries_(std::move(entries)) {}

    //! Parses a string over "+-0", e.g. "+-0".
    static SignVector parse(std::string_view text) {
      std::vector<Sign> entries;
      entries.reserve(text.size());
      for (char ch : text) {
        switch (ch) {
          case '+':
            entries.push_back(Sign::plus);
            break;
          case '-':
            entries.push_back(Sign::minus);
            break;
          case '0':
            entries.push_back(Sign::zero);
            break;
          default:
            throw input_error("bad sign character '" + std::string(1, ch)
                              + "' in \"" + std::string(text) + "\"");
        }
      }
      return SignVector(std::move(entries));
    }

    std::size_t size() const noexcept {
      return entries_.size();
    }

    Sign operator[](std::size_t h) const {
      return entries_.at(h);
    }

    std::vector<Sign> const& entries() const noexcept {
      return entries_;
    }

    std::string to_string() const {
      std::string out;
      out.reserve(entries_.size());
      for (Sign s : entries_) {
        out.push_back(s == Sign::plus ? '+' : s == Sign::minus ? '-' : '0');
      }
      return out;
    }

    auto operator<=>(SignVector const&) const = default;

   private:
    std::vector<Sign> entries_;
  };

  //! Coordinatewise composition with left priority: x[h] unless it is 0.
  inline SignVector compose_signs(SignVector const& x, SignVector const& y) {
    if (x.size() != y.size()) {
      throw input_error("sign vectors of lengths " + std::to_string(x.size())
                        + " and " + std::to_string(y.size())
                        + " cannot be composed");
    }
    std::vector<Sign> out(x.size());
    for (std::size_t h = 0; h < x.size(); ++h) {
      out[h] = x[h] != Sign::zero ? x[h] : y[h];
    }
    return SignVector(std::move(out));
  }

  //! A set of sign vectors that is not closed under composition.
  class closure_error : public input_error {
   public:
    closure_error(std::size_t i, std::size_t j, std::string const& what)
        : input_error(what), witness_(i, j) {}

    //! Indices (into the input list) whose composition is missing.
    std::pair<std::size_t, std::size_t> witness() const noexcept {
      return witness_;
    }

   private:
    std::pair<std::size_t, std::size_t> witness_;
  };

  namespace detail {
    inline LrbTable covector_table(std::vector<SignVector> const& faces,
                                   std::vector<std::string>       names) {
      if (faces.empty()) {
        throw input_error("no sign vectors given");
      }
      std::map<SignVector, std::size_t> index;
      for (std::size_t i = 0; i < faces.size(); ++i) {
        if (faces[i].size() != faces[0].size()) {
          throw input_error("sign vector " + std::to_string(i)
                            + " has a different length");
        }
        auto [it, fresh] = index.emplace(faces[i], i);
        if (!fresh) {
          throw input_error("duplicate sign vector " + faces[i].to_string()
                            + " at " + std::to_string(it->second) + " and "
                            + std::to_string(i));
        }
      }
      std::vector<std::vector<Element>> rows(faces.size(),
                                             std::vector<Element>(faces.size()));
      std::optional<Element> identity;
      for (std::size_t i = 0; i < faces.size(); ++i) {
        bool all_zero = true;
        for (Sign s : faces[i].entries()) {
          all_zero = all_zero && s == Sign::zero;
        }
        if (all_zero) {
          identity = i;
        }
        for (std::size_t j = 0; j < faces.size(); ++j) {
          auto it = index.find(compose_signs(faces[i], faces[j]));
          if (it == index.end()) {
            throw closure_error(i, j,
                                "not closed under composition: "
                                    + faces[i].to_string() + " o "
                                    + faces[j].to_string() + " is missing");
          }
          rows[i][j] = it->second;
        }
      }
      return LrbTable(rows, std::move(names), identity);
    }
  }  // namespace detail

  //! The semigroup of a composition-closed, duplicate-free set of sign
  //! vectors, in input order. Names are the sign strings.
  inline LrbTable covector_lrb(std::vector<SignVector> const& faces) {
    std::vector<std::string> names;
    names.reserve(faces.size());
    for (auto const& f : faces) {
      names.push_back(f.to_string());
    }
    return detail::covector_table(faces, std::move(names));
  }

  //! m pairwise non-parallel lines through the origin of the plane, given by
  //! direction angles. The positive side of each line is the side its
  //! counterclockwise normal points to.
  class LineArrangement {
   public:
    explicit LineArrangement(std::vector<double> directions) {
      if (directions.empty()) {
        throw input_error("a line arrangement needs at least one line");
      }
      for (double& t : directions) {
        if (!std::isfinite(t)) {
          throw input_error("line direction must be finite");
        }
        t = std::fmod(t, std::numbers::pi);
        if (t < 0) {
          t += std::numbers::pi;
        }
      }
      for (std::size_t i = 0; i < directions.size(); ++i) {
        for (std::size_t j = i + 1; j < directions.size(); ++j) {
          if (std::abs(std::sin(directions[i] - directions[j])) < 1e-9) {
            throw input_error("lines " + std::to_string(i) + " and "
                              + std::to_string(j) + " are parallel");
          }
        }
      }
      directions_ = std::move(directions);
    }

    //! m lines at angles k*pi/m.
    static LineArrangement regular(std::size_t m) {
      if (m == 0) {
        throw input_error("a line arrangement needs at least one line");
      }
      std::vector<double> d;
      for (std::size_t k = 0; k < m; ++k) {
        d.push_back(static_cast<double>(k) * std::numbers::pi
                    / static_cast<double>(m));
      }
      return LineArrangement(std::move(d));
    }

    std::vector<double> const& directions() const noexcept {
      return directions_;
    }

    std::size_t size() const noexcept {
      return directions_.size();
    }

   private:
    std::vector<double> directions_;
  };

  struct ArrangementLrb {
    LrbTable                table;
    std::vector<SignVector> signs;
  };

  //! Face semigroup of a planar line arrangement.
  //!
  //! Elements are the center "0", then the rays F0..F(2m-1), then the sectors
  //! R0..R(2m-1), in counterclockwise order. R0 is the sector containing the
  //! negative y axis (or starting on it) and Fi separates Ri from R(i+1).
  //! That gives 4m + 1 faces for m >= 2. For a single line the rays are not
  //! faces of their own (they lie in the line, whose sign vector equals the
  //! center's), leaving 3 faces: 0, R0, R1.
  inline ArrangementLrb line_arrangement_lrb(LineArrangement const& arr) {
    constexpr double pi  = std::numbers::pi;
    constexpr double eps = 1e-9;
    auto const&      dir = arr.directions();
    std::size_t const m  = dir.size();

    auto sign_at = [&](double angle, std::optional<std::size_t> on_line) {
      std::vector<Sign> s(m);
      for (std::size_t j = 0; j < m; ++j) {
        if (on_line == j) {
          s[j] = Sign::zero;
        } else {
          s[j] = std::sin(angle - dir[j]) > 0 ? Sign::plus : Sign::minus;
        }
      }
      return SignVector(std::move(s));
    };

    struct Ray {
      double      angle;
      std::size_t line;
    };
    std::vector<Ray> rays;
    for (std::size_t k = 0; k < m; ++k) {
      rays.push_back({dir[k], k});
      rays.push_back({dir[k] + pi, k});
    }
    std::sort(rays.begin(), rays.end(), [](Ray const& a, Ray const& b) {
      return a.angle < b.angle;
    });

    // Sector i runs counterclockwise from rays[i] to rays[i + 1].
    std::size_t const sectors = rays.size();
    std::size_t       first   = 0;
    for (std::size_t i = 0; i < sectors; ++i) {
      double const start = rays[i].angle;
      double width = std::fmod(rays[(i + 1) % sectors].angle - start + 2 * pi,
                               2 * pi);
      double offset = std::fmod(1.5 * pi - start + 4 * pi, 2 * pi);
      if (offset > 2 * pi - eps) {
        offset = 0;
      }
      if (offset < width - eps) {
        first = i;
        break;
      }
    }

    std::vector<SignVector>  faces;
    std::vector<std::string> names;
    auto add = [&](SignVector v, std::string name) {
      if (std::find(faces.begin(), faces.end(), v) == faces.end()) {
        faces.push_back(std::move(v));
        names.push_back(std::move(name));
      }
    };
    add(SignVector(std::vector<Sign>(m, Sign::zero)), "0");
    for (std::size_t i = 0; i < sectors; ++i) {
      Ray const& r = rays[(first + i + 1) % sectors];
      add(sign_at(r.angle, r.line), "F" + std::to_string(i));
    }
    for (std::size_t i = 0; i < sectors; ++i) {
      std::size_t const s     = (first + i) % sectors;
      double const      start = rays[s].angle;
      double const      width = std::fmod(
          rays[(s + 1) % sectors].angle - start + 2 * pi, 2 * pi);
      add(sign_at(start + width / 2, std::nullopt), "R" + std::to_string(i));
    }
    LrbTable table = detail::covector_table(faces, names);
    return ArrangementLrb{std::move(table), std::move(faces)};
  }

  inline ArrangementLrb line_arrangement_lrb(std::size_t m) {
    return line_arrangement_lrb(LineArrangement::regular(m));
  }

  inline constexpr std::size_t max_free_letters = 6;

  //! Free LRB on k letters: repetition-free words, multiplied by
  //! concatenating and keeping the first occurrence of each letter. Words are
  //! ordered by length, then lexicographically; the empty word (named "1")
  //! is element 0 and the identity.
  inline LrbTable free_lrb(std::size_t k) {
    if (k < 1 || k > max_free_letters) {
      throw input_error("free LRB alphabet size must be in [1, "
                        + std::to_string(max_free_letters) + "], got "
                        + std::to_string(k));
    }
    std::vector<std::string> words{""};
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (words[i].size() == k) {
        continue;
      }
      for (std::size_t l = 0; l < k; ++l) {
        char const letter = static_cast<char>('a' + l);
        if (words[i].find(letter) == std::string::npos) {
          words.push_back(words[i] + letter);
        }
      }
    }
    std::map<std::string, Element> index;
    for (Element i = 0; i < words.size(); ++i) {
      index[words[i]] = i;
    }
    std::vector<std::vector<Element>> rows(words.size(),
                                           std::vector<Element>(words.size()));
    for (Element x = 0; x < words.size(); ++x) {
      for (Element y = 0; y < words.size(); ++y) {
        std::string w = words[x];
        for (char letter : words[y]) {
          if (w.find(letter) == std::string::npos) {
            w.push_back(letter);
          }
        }
        rows[x][y] = index.at(w);
      }
    }
    words[0] = "1";
    return LrbTable(rows, std::move(words), Element{0});
  }

  //! The 2n-element LRB whose chamber graph is a path C1 - ... - Cn.
  //!
  //! Elements: 0 (identity), F1..F(n-1), C1..Cn. Chambers absorb everything;
  //! Fi Cj = Ci for j <= i and C(i+1) otherwise; Fi Fj = Ci for j < i, Fi for
  //! j = i and C(i+1) for j > i.
  inline LrbTable path_example(std::size_t n) {
    if (n < 2) {
      throw input_error("path example needs at least 2 chambers, got "
                        + std::to_string(n));
    }
    std::size_t const size = 2 * n;
    auto facet   = [](std::size_t i) -> Element { return i; };
    auto chamber = [n](std::size_t j) -> Element { return n - 1 + j; };

    std::vector<std::vector<Element>> rows(size, std::vector<Element>(size));
    std::vector<std::string>          names(size);
    names[0] = "0";
    for (Element x = 0; x < size; ++x) {
      rows[0][x] = x;
    }
    for (std::size_t j = 1; j <= n; ++j) {
      names[chamber(j)] = "C" + std::to_string(j);
      for (Element x = 0; x < size; ++x) {
        rows[chamber(j)][x] = chamber(j);
      }
    }
    for (std::size_t i = 1; i < n; ++i) {
      Element const f = facet(i);
      names[f]        = "F" + std::to_string(i);
      rows[f][0]      = f;
      for (std::size_t j = 1; j < n; ++j) {
        rows[f][facet(j)] = j < i    ? chamber(i)
                            : j == i ? f
                                     : chamber(i + 1);
      }
      for (std::size_t j = 1; j <= n; ++j) {
        rows[f][chamber(j)] = j <= i ? chamber(i) : chamber(i + 1);
      }
    }
    return LrbTable(rows, std::move(names), Element{0});
  }

}  // namespace lrb

#endif  // LRB_CONSTRUCTIONS_HPP_
