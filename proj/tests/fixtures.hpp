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

// Named instances shared by the test binaries.

#ifndef LRB_TESTS_FIXTURES_HPP_
#define LRB_TESTS_FIXTURES_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <lrb/constructions.hpp>
#include <lrb/lrbgraph.hpp>

namespace fixture {

  //! Hexagon with labels (1,1),(2,1),(3,1),(1,2),(2,2),(3,2) in order.
  inline lrb::ThinLrbGraph six_cycle() {
    return {6,
            {{0, 1, 1, 1},
             {1, 2, 2, 1},
             {2, 3, 3, 1},
             {3, 4, 1, 2},
             {4, 5, 2, 2},
             {5, 0, 3, 2}}};
  }

  inline lrb::ThinLrbGraph single_edge() {
    return {2, {{0, 1, 1, 1}}};
  }

  inline lrb::ThinLrbGraph odd_triangle() {
    return {3, {{0, 1, 1, 1}, {1, 2, 1, 2}, {2, 0, 1, 3}}};
  }

  //! Path on n vertices whose edges all carry distinct first components.
  inline lrb::ThinLrbGraph path_graph(std::size_t n) {
    lrb::ThinLrbGraph g{n, {}};
    for (std::size_t i = 0; i + 1 < n; ++i) {
      g.edges.push_back({i, i + 1, i + 1, 1});
    }
    return g;
  }

  inline lrb::Element by_name(lrb::LrbTable const& s, std::string const& name) {
    for (lrb::Element x = 0; x < s.size(); ++x) {
      if (s.name(x) == name) {
        return x;
      }
    }
    throw std::out_of_range("no element named " + name);
  }

  //! Two incomparable same-support facets f1, f2 both below two chambers:
  //! no least element and two parallel chamber edges.
  inline lrb::LrbTable two_facets_two_chambers() {
    return lrb::LrbTable({{0, 0, 2, 3}, {1, 1, 2, 3}, {2, 2, 2, 2}, {3, 3, 3, 3}},
                         {"f1", "f2", "C1", "C2"});
  }

  //! An identity below three chambers: a triangle with one label.
  inline lrb::LrbTable three_chamber_fan() {
    return lrb::LrbTable({{0, 1, 2, 3}, {1, 1, 1, 1}, {2, 2, 2, 2}, {3, 3, 3, 3}},
                         {"0", "C1", "C2", "C3"}, lrb::Element{0});
  }

  //! The right-zero band xy = y: a band that is not left regular.
  inline lrb::LrbTable right_zero_band() {
    return lrb::LrbTable({{0, 1}, {0, 1}});
  }

  struct Named {
    std::string   name;
    lrb::LrbTable table;
  };

  //! Every built-in family at the sizes the tests sweep.
  inline std::vector<Named> builtins() {
    std::vector<Named> out;
    for (std::size_t m = 1; m <= 8; ++m) {
      out.push_back({"lines(" + std::to_string(m) + ")",
                     lrb::line_arrangement_lrb(m).table});
    }
    for (std::size_t k = 1; k <= 4; ++k) {
      out.push_back({"free(" + std::to_string(k) + ")", lrb::free_lrb(k)});
    }
    for (std::size_t n = 2; n <= 12; ++n) {
      out.push_back({"path(" + std::to_string(n) + ")", lrb::path_example(n)});
    }
    out.push_back({"to_lrb(six_cycle)", lrb::to_lrb(six_cycle())});
    out.push_back({"to_lrb(single_edge)", lrb::to_lrb(single_edge())});
    return out;
  }

}  // namespace fixture

#endif  // LRB_TESTS_FIXTURES_HPP_
