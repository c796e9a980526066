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

#include <algorithm>
#include <map>
#include <set>

#include <lrb/adjacency.hpp>
#include <lrb/constructions.hpp>
#include <lrb/lrbgraph.hpp>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using fixture::by_name;
using lrb::Element;

namespace {

  std::set<std::vector<std::size_t>> edge_sets(std::vector<lrb::Cycle> const& cs) {
    std::set<std::vector<std::size_t>> out;
    for (auto c : cs) {
      std::sort(c.edges.begin(), c.edges.end());
      out.insert(c.edges);
    }
    return out;
  }

  std::vector<lrb::detail::Endpoints> ends_of(std::vector<oracle::Edge> const& es) {
    std::vector<lrb::detail::Endpoints> out;
    for (auto const& e : es) {
      out.push_back({e.u, e.v});
    }
    return out;
  }

}  // namespace

TEST(ChamberGraph, ArrangementIsLabelledHexagon) {
  auto const s = lrb::line_arrangement_lrb(3).table;
  auto const g = lrb::chamber_graph(s);
  EXPECT_EQ(g.vertex_count(), 6u);
  ASSERT_EQ(g.edges.size(), 6u);
  std::set<lrb::FiberLabel> labels;
  for (auto const& e : g.edges) {
    EXPECT_LT(e.u, e.v);
    labels.insert(e.label);
    auto const p = lrb::face_poset(s);
    EXPECT_TRUE(p.covered_by(e.facet, g.vertices[e.u]));
    EXPECT_TRUE(p.covered_by(e.facet, g.vertices[e.v]));
  }
  EXPECT_EQ(labels.size(), 6u);
  EXPECT_TRUE(lrb::is_connected(g));
  EXPECT_FALSE(lrb::find_triangle(g));
  EXPECT_FALSE(lrb::find_parallel_edges(g));
}

TEST(ChamberGraph, FreeBandsHaveNoEdges) {
  for (std::size_t k = 1; k <= 4; ++k) {
    auto const g = lrb::chamber_graph(lrb::free_lrb(k));
    EXPECT_TRUE(g.edges.empty()) << k;
  }
  auto const cls = lrb::classify(lrb::free_lrb(3));
  EXPECT_TRUE(cls.is_meet);
  EXPECT_FALSE(cls.is_connected);
  EXPECT_FALSE(cls.is_mc);
}

TEST(ChamberGraph, ParallelEdgesWithoutMeets) {
  auto const s = fixture::two_facets_two_chambers();
  ASSERT_TRUE(lrb::validate_lrb(s).ok());
  auto const g = lrb::chamber_graph(s);
  ASSERT_EQ(g.edges.size(), 2u);
  EXPECT_EQ(lrb::find_parallel_edges(g), (std::pair<std::size_t, std::size_t>{0, 1}));
  EXPECT_EQ(g.edges[0].label.class_id, g.edges[1].label.class_id);
  EXPECT_NE(g.edges[0].label.index, g.edges[1].label.index);
  auto const cls = lrb::classify(s);
  EXPECT_FALSE(cls.is_meet);
  EXPECT_TRUE(cls.is_connected);
  EXPECT_EQ(lrb::simple_cycles(g).size(), 1u);
}

TEST(ChamberGraph, FanGivesTriangle) {
  auto const s   = fixture::three_chamber_fan();
  auto const g   = lrb::chamber_graph(s);
  auto const cls = lrb::classify(s);
  EXPECT_EQ(g.edges.size(), 3u);
  EXPECT_TRUE(lrb::find_triangle(g));
  EXPECT_TRUE(cls.is_mc);
  EXPECT_FALSE(cls.is_thin);
  EXPECT_TRUE(cls.every_facet_is_edge);
  EXPECT_TRUE(cls.has_triangle);
  EXPECT_TRUE(cls.thin_characterization_holds);
  EXPECT_EQ(cls.facet_cover_counts.at(0), 3u);
  auto const parity = lrb::support_parity_ok(g);
  EXPECT_FALSE(parity.ok);
  ASSERT_TRUE(parity.repeated_label_edges);
  EXPECT_EQ(parity.repeated_label_edges->size(), 3u);
}

TEST(Classify, PathExamples) {
  for (std::size_t n = 2; n <= 12; ++n) {
    auto const s   = lrb::path_example(n);
    auto const g   = lrb::chamber_graph(s);
    auto const cls = lrb::classify(s);
    EXPECT_EQ(g.vertex_count(), n);
    EXPECT_EQ(g.edges.size(), n - 1);
    EXPECT_TRUE(cls.is_mc && cls.is_thin) << n;
    EXPECT_TRUE(cls.cover_count_mismatches.empty());
    EXPECT_TRUE(lrb::simple_cycles(g).empty());
  }
}

TEST(Classify, ThinCharacterizationOnMcInstances) {
  gen::Rng    rng(41);
  std::size_t mc = 0;
  for (int t = 0; t < 300; ++t) {
    auto faces = gen::random_covectors(rng);
    if (faces.empty()) {
      continue;
    }
    auto const cls = lrb::classify(lrb::covector_lrb(faces));
    EXPECT_TRUE(cls.thin_characterization_holds);
    mc += cls.is_mc;
  }
  EXPECT_GT(mc, 0u);
}

TEST(Parity, ArrangementEachClassTwiceOnCycle) {
  auto const s   = lrb::line_arrangement_lrb(3).table;
  auto const g   = lrb::chamber_graph(s);
  auto const sup = lrb::support_structure(s);
  EXPECT_TRUE(lrb::support_parity_ok(g).ok);
  auto const cycles = lrb::simple_cycles(g);
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(cycles[0].length(), 6u);
  for (Element f : {by_name(s, "F0"), by_name(s, "F1"), by_name(s, "F2")}) {
    EXPECT_EQ(lrb::class_count_on(g, cycles[0], sup.class_of[f]), 2u);
  }
}

TEST(Parity, OddClassProducesWitness) {
  // Hexagon with one label class changed so class 1 appears three times.
  lrb::ChamberGraph g;
  g.vertices = {0, 1, 2, 3, 4, 5};
  for (std::size_t i = 0; i < 6; ++i) {
    lrb::ClassId const c = i == 2 ? 1 : i % 3;
    g.edges.push_back({std::min(i, (i + 1) % 6), std::max(i, (i + 1) % 6), i,
                       {c, i + 1}});
  }
  auto const r = lrb::support_parity_ok(g);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.witness && r.odd_class);
  EXPECT_EQ(lrb::class_count_on(g, *r.witness, *r.odd_class) % 2, 1u);
}

TEST(SimpleCycles, CompleteGraphOnFour) {
  lrb::ChamberGraph g;
  g.vertices = {0, 1, 2, 3};
  std::size_t f = 0;
  for (std::size_t u = 0; u < 4; ++u) {
    for (std::size_t v = u + 1; v < 4; ++v) {
      g.edges.push_back({u, v, f, {0, ++f}});
    }
  }
  EXPECT_EQ(lrb::simple_cycles(g).size(), 7u);
  EXPECT_EQ(lrb::simple_cycles(g, 3).size(), 4u);
  EXPECT_THROW(lrb::simple_cycles(g, std::nullopt, 5), lrb::cycle_overflow);
  try {
    lrb::simple_cycles(g, std::nullopt, 5);
  } catch (lrb::cycle_overflow const& e) {
    EXPECT_EQ(e.cap(), 5u);
  }
}

TEST(SimpleCycles, MatchEdgeSubsetOracle) {
  gen::Rng rng(42);
  for (int t = 0; t < 200; ++t) {
    auto const lg   = gen::random_labelled_graph(rng);
    auto const ends = ends_of(lg.edges);
    auto const got  = lrb::detail::simple_cycles(lg.vertex_count, ends, std::nullopt,
                                                 lrb::default_cycle_cap);
    std::set<std::vector<std::size_t>> expected;
    for (auto const& c : oracle::cycles_by_subsets(lg.vertex_count, lg.edges)) {
      expected.insert(c);
    }
    EXPECT_EQ(got.size(), expected.size());
    EXPECT_EQ(edge_sets(got), expected);
    for (auto const& c : got) {
      ASSERT_EQ(c.vertices.size(), c.edges.size());
      for (std::size_t i = 0; i < c.edges.size(); ++i) {
        auto const& e = lg.edges[c.edges[i]];
        auto const  a = c.vertices[i], b = c.vertices[(i + 1) % c.vertices.size()];
        EXPECT_TRUE((e.u == a && e.v == b) || (e.u == b && e.v == a));
      }
    }
  }
}

TEST(SimpleCycles, BasisParityMatchesEnumeration) {
  gen::Rng    rng(43);
  std::size_t odd = 0;
  for (int t = 0; t < 200; ++t) {
    auto const               lg   = gen::random_labelled_graph(rng);
    auto const               ends = ends_of(lg.edges);
    std::vector<std::size_t> cls;
    for (auto const& e : lg.edges) {
      cls.push_back(e.cls);
    }
    auto const witness  = lrb::detail::odd_class_cycle(lg.vertex_count, ends, cls);
    bool const all_even = oracle::all_cycles_even(lg.vertex_count, lg.edges);
    EXPECT_EQ(!witness, all_even);
    if (witness) {
      ++odd;
      std::size_t count = 0;
      for (std::size_t e : witness->cycle.edges) {
        count += cls[e] == witness->class_key;
      }
      EXPECT_EQ(count % 2, 1u);
    }
  }
  EXPECT_GT(odd, 0u);
}
