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

#include <gtest/gtest.h>

#include <map>
#include <set>

#include <lrb/constructions.hpp>
#include <lrb/isomorphism.hpp>
#include <lrb/lrbgraph.hpp>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using fixture::by_name;
using lrb::Parity;
using lrb::ThinLrbGraph;

namespace {

  std::vector<ThinLrbGraph> random_graphs(std::size_t count, std::uint64_t seed) {
    gen::Rng                  rng(seed);
    std::vector<ThinLrbGraph> out;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(gen::random_thin_graph(rng));
    }
    return out;
  }

  std::vector<oracle::Edge> oracle_edges(ThinLrbGraph const& g) {
    std::vector<oracle::Edge> out;
    for (auto const& e : g.edges) {
      out.push_back({e.u, e.v, e.a});
    }
    return out;
  }

}  // namespace

TEST(ValidateGraph, Examples) {
  EXPECT_TRUE(lrb::validate_graph(fixture::six_cycle()).ok());
  EXPECT_TRUE(lrb::validate_graph(fixture::single_edge()).ok());
  auto const tri = lrb::validate_graph(fixture::odd_triangle());
  EXPECT_FALSE(tri.ok());
  ASSERT_TRUE(tri.odd_cycle);
  EXPECT_EQ(tri.odd_label, lrb::Label{1});
  EXPECT_EQ(tri.odd_cycle->length(), 3u);
}

TEST(ValidateGraph, StructuralFailures) {
  EXPECT_FALSE(lrb::validate_graph({0, {}}).has_vertices);
  EXPECT_EQ(lrb::validate_graph({2, {{0, 0, 1, 1}}}).bad_edge, 0u);
  EXPECT_EQ(lrb::validate_graph({2, {{0, 2, 1, 1}}}).bad_edge, 0u);
  auto const par = lrb::validate_graph({2, {{0, 1, 1, 1}, {1, 0, 2, 1}}});
  EXPECT_TRUE(par.parallel_edges);
  auto const dup = lrb::validate_graph({3, {{0, 1, 1, 1}, {1, 2, 1, 1}}});
  EXPECT_TRUE(dup.duplicate_labels);
  auto const apart = lrb::validate_graph({3, {{0, 1, 1, 1}}});
  EXPECT_EQ(apart.unreachable_vertex, 2u);
  EXPECT_NE(apart.reason().find("not connected"), std::string::npos);
  EXPECT_EQ(lrb::validate_graph(fixture::six_cycle()).reason(), "ok");
}

TEST(ValidateGraph, RandomGraphsAreValid) {
  for (auto const& g : random_graphs(200, 51)) {
    EXPECT_TRUE(lrb::validate_graph(g).ok()) << lrb::validate_graph(g).reason();
  }
}

TEST(PathParity, Examples) {
  auto const hex = fixture::six_cycle();
  EXPECT_EQ(lrb::path_label_parity(hex, 0, 3, 1), Parity::odd);
  EXPECT_EQ(lrb::path_label_parity(hex, 3, 0, 1), Parity::odd);
  EXPECT_EQ(lrb::path_label_parity(hex, 0, 3, 2), Parity::odd);
  EXPECT_EQ(lrb::path_label_parity(hex, 0, 2, 3), Parity::even);
  EXPECT_EQ(lrb::path_label_parity(hex, 4, 4, 1), Parity::even);
  EXPECT_EQ(lrb::path_label_parity(hex, 0, 1, 99), Parity::even);
  EXPECT_EQ(lrb::path_label_parity(fixture::single_edge(), 0, 1, 1), Parity::odd);
  EXPECT_THROW(lrb::LabelParity{fixture::odd_triangle()}, lrb::precondition_error);
  EXPECT_THROW(lrb::path_label_parity(ThinLrbGraph{3, {{0, 1, 1, 1}}}, 0, 2, 1),
               lrb::precondition_error);
}

TEST(PathParity, MatchesAllPathEnumeration) {
  for (auto const& g : random_graphs(100, 52)) {
    lrb::LabelParity const parity(g);
    auto const             edges = oracle_edges(g);
    std::set<lrb::Label>   labels;
    for (auto const& e : g.edges) {
      labels.insert(e.a);
    }
    for (std::size_t u = 0; u < g.vertex_count; ++u) {
      for (std::size_t v = 0; v < g.vertex_count; ++v) {
        for (auto a : labels) {
          int const bit = parity.between(u, v, a) == Parity::odd;
          EXPECT_EQ(oracle::path_parities(g.vertex_count, edges, u, v, a),
                    std::set<int>{bit});
        }
      }
    }
  }
}

TEST(ToLrb, SingleEdge) {
  auto const s = lrb::to_lrb(fixture::single_edge());
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s.names(), (std::vector<std::string>{"0", "A1", "A2", "(1,1)"}));
  auto const e = by_name(s, "(1,1)"), a1 = by_name(s, "A1"), a2 = by_name(s, "A2");
  EXPECT_EQ(s(e, a1), a1);
  EXPECT_EQ(s(e, a2), a2);
  EXPECT_EQ(s(a1, e), a1);
  EXPECT_EQ(s(e, e), e);
  EXPECT_EQ(s.identity(), lrb::Element{0});
}

TEST(ToLrb, HexagonIsThreeLines) {
  auto const s = lrb::to_lrb(fixture::six_cycle());
  EXPECT_EQ(s.size(), 13u);
  EXPECT_TRUE(lrb::are_isomorphic(s, lrb::line_arrangement_lrb(3).table));
}

TEST(ToLrb, PathGraphIsPathExample) {
  EXPECT_TRUE(lrb::are_isomorphic(lrb::to_lrb(fixture::path_graph(6)),
                                  lrb::path_example(6)));
}

TEST(ToLrb, RejectsInvalidGraphs) {
  EXPECT_THROW(lrb::to_lrb(fixture::odd_triangle()), lrb::precondition_error);
  EXPECT_THROW(lrb::to_lrb({3, {{0, 1, 1, 1}}}), lrb::precondition_error);
}

TEST(ToLrb, RandomGraphsGiveRankTwoThinMcBands) {
  for (auto const& g : random_graphs(100, 53)) {
    auto const s   = lrb::to_lrb(g);
    auto const cls = lrb::classify(s);
    EXPECT_TRUE(oracle::is_lrb(s));
    EXPECT_TRUE(cls.is_mc && cls.is_thin);
    EXPECT_EQ(lrb::face_poset(s).rank, 2u);
    EXPECT_EQ(lrb::face_poset(s).chambers.size(), g.vertex_count);
  }
}

TEST(ToLrb, SameFirstComponentEdgesAbsorb) {
  for (auto const& g : random_graphs(60, 54)) {
    auto const        s = lrb::to_lrb(g);
    std::size_t const n = g.vertex_count;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      for (std::size_t j = 0; j < g.edges.size(); ++j) {
        if (g.edges[i].a == g.edges[j].a) {
          EXPECT_EQ(s(1 + n + i, 1 + n + j), 1 + n + i);
        }
      }
    }
  }
}

TEST(ToLrb, FacetSupportsAreFirstComponents) {
  for (auto const& g : random_graphs(60, 55)) {
    auto const        s   = lrb::to_lrb(g);
    auto const        sup = lrb::support_structure(s);
    std::size_t const n   = g.vertex_count;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      for (std::size_t j = 0; j < g.edges.size(); ++j) {
        EXPECT_EQ(sup.class_of[1 + n + i] == sup.class_of[1 + n + j],
                  g.edges[i].a == g.edges[j].a);
      }
    }
  }
}

TEST(ToLrb, OrientationInvariant) {
  for (auto const& g : random_graphs(60, 56)) {
    auto const s = lrb::to_lrb(g);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      auto flipped = g;
      std::swap(flipped.edges[e].u, flipped.edges[e].v);
      EXPECT_EQ(lrb::to_lrb(flipped), s);
    }
  }
}

TEST(FromLrb, Examples) {
  auto const hex = lrb::from_lrb(lrb::line_arrangement_lrb(3).table);
  EXPECT_TRUE(lrb::graphs_isomorphic(hex, fixture::six_cycle()));
  auto const path = lrb::from_lrb(lrb::path_example(6));
  EXPECT_EQ(path.vertex_count, 6u);
  ASSERT_EQ(path.edges.size(), 5u);
  std::set<lrb::Label> firsts;
  for (auto const& e : path.edges) {
    firsts.insert(e.a);
  }
  EXPECT_EQ(firsts.size(), 5u);
  auto const back = lrb::from_lrb(lrb::to_lrb(fixture::single_edge()));
  EXPECT_TRUE(lrb::graphs_isomorphic(back, fixture::single_edge()));
}

TEST(FromLrb, NamesFailingProperty) {
  auto message = [](lrb::LrbTable const& s) {
    try {
      lrb::from_lrb(s);
    } catch (lrb::precondition_error const& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(lrb::free_lrb(3)).find("connected"), std::string::npos);
  EXPECT_NE(message(fixture::two_facets_two_chambers()).find("meet"), std::string::npos);
  EXPECT_NE(message(fixture::three_chamber_fan()).find("two chambers"), std::string::npos);
  EXPECT_NE(message(fixture::right_zero_band()).find("left regular"), std::string::npos);
}

TEST(GraphIsomorphism, RespectsLabelStructure) {
  auto const hex = fixture::six_cycle();
  // Relabel first components 1->7, 2->5, 3->9 and rotate the vertices.
  ThinLrbGraph moved{6, {}};
  std::map<lrb::Label, lrb::Label> const rename{{1, 7}, {2, 5}, {3, 9}};
  for (auto const& e : hex.edges) {
    moved.edges.push_back({(e.u + 2) % 6, (e.v + 2) % 6, rename.at(e.a), e.b + 10});
  }
  auto const iso = lrb::graphs_isomorphic(hex, moved);
  ASSERT_TRUE(iso);
  for (auto const& e : hex.edges) {
    std::size_t const u = iso->vertex_map[e.u], v = iso->vertex_map[e.v];
    bool              found = false;
    for (auto const& f : moved.edges) {
      found = found
              || (((f.u == u && f.v == v) || (f.u == v && f.v == u))
                  && f.a == iso->label_map.at(e.a));
    }
    EXPECT_TRUE(found);
  }

  // Same shape, but opposite edges no longer share a first component.
  ThinLrbGraph broken = hex;
  broken.edges[3].a   = 4;
  broken.edges[0].a   = 5;
  EXPECT_FALSE(lrb::graphs_isomorphic(hex, broken));
  EXPECT_FALSE(lrb::graphs_isomorphic(hex, fixture::path_graph(6)));
}

TEST(Roundtrip, BothDirections) {
  EXPECT_TRUE(lrb::roundtrip_check(fixture::six_cycle()));
  EXPECT_TRUE(lrb::roundtrip_check(lrb::line_arrangement_lrb(3).table));
  for (std::size_t n = 2; n <= 12; ++n) {
    EXPECT_TRUE(lrb::roundtrip_check(lrb::path_example(n))) << n;
  }
  for (auto const& g : random_graphs(100, 57)) {
    EXPECT_TRUE(lrb::roundtrip_check(g));
  }
}

TEST(Roundtrip, LrbSideNeedsRankTwo) {
  // A single line: thin MC but rank 1.
  EXPECT_THROW(lrb::roundtrip_check(lrb::line_arrangement_lrb(1).table),
               lrb::precondition_error);
}
