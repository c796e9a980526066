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

// Exhaustive structural checks on a single LRB. Each property is checked on
// every pair or triple it quantifies over; properties whose hypotheses do
// not apply to the instance are reported as skipped.

#ifndef LRB_PROPERTIES_HPP_
#define LRB_PROPERTIES_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "adjacency.hpp"
#include "error.hpp"
#include "meet_criterion.hpp"
#include "poset.hpp"
#include "support.hpp"
#include "table.hpp"

namespace lrb {

  enum class Outcome { pass, fail, skipped };

  constexpr std::string_view to_string(Outcome o) noexcept {
    switch (o) {
      case Outcome::pass:
        return "pass";
      case Outcome::fail:
        return "fail";
      case Outcome::skipped:
        break;
    }
    return "skipped";
  }

  struct PropertyResult {
    std::string name;
    Outcome     outcome = Outcome::pass;
    //! Number of individual instances checked.
    std::size_t checks = 0;
    //! First counterexample, or the reason for skipping.
    std::string detail;
  };

  struct SuiteOptions {
    std::size_t cycle_cap = default_cycle_cap;
  };

  namespace detail {
    class Recorder {
     public:
      explicit Recorder(std::string name) {
        r_.name = std::move(name);
      }

      //! Counts one check; keeps the first failure message.
      template <typename Describe>
      void expect(bool ok, Describe&& describe) {
        ++r_.checks;
        if (!ok && r_.outcome != Outcome::fail) {
          r_.outcome = Outcome::fail;
          r_.detail  = describe();
        }
      }

      PropertyResult skip(std::string why) {
        r_.outcome = Outcome::skipped;
        r_.detail  = std::move(why);
        return std::move(r_);
      }

      PropertyResult done() {
        return std::move(r_);
      }

     private:
      PropertyResult r_;
    };

    template <typename... Ts>
    std::string describe(Ts const&... parts) {
      std::ostringstream out;
      (out << ... << parts);
      return out.str();
    }
  }  // namespace detail

  //! Runs every property. An instance that is not an LRB yields a single
  //! failing "lrb_axioms" result.
  inline std::vector<PropertyResult> property_suite(LrbTable const& s,
                                                    SuiteOptions    opts = {}) {
    using detail::describe;
    using detail::Recorder;
    std::vector<PropertyResult> out;
    std::size_t const           n = s.size();

    {
      Recorder   rec("lrb_axioms");
      auto const v = validate_lrb(s);
      rec.expect(v.ok(), [&] {
        if (v.idempotency_failure) {
          return describe("x*x != x at x=", *v.idempotency_failure);
        }
        if (v.associativity_failure) {
          auto const& t = *v.associativity_failure;
          return describe("(xy)z != x(yz) at ", t[0], ",", t[1], ",", t[2]);
        }
        auto const& p = *v.left_regularity_failure;
        return describe("xyx != xy at ", p.first, ",", p.second);
      });
      out.push_back(rec.done());
      if (!v.ok()) {
        return out;
      }
    }

    auto const p      = face_poset(s);
    auto const sup    = support_structure(s);
    auto const labels = fiber_labels(p, sup);
    auto const g      = chamber_graph(p, labels);
    auto const cls    = classify(p, g);

    {
      Recorder rec("r_order_antisymmetric");
      for (Element x = 0; x < n; ++x) {
        for (Element y = x + 1; y < n; ++y) {
          rec.expect(!(s(y, x) == x && s(x, y) == y),
                     [&] { return describe("x=yx and y=xy at ", x, ",", y); });
        }
      }
      out.push_back(rec.done());
    }

    {
      Recorder rec("face_order_product_laws");
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          Element const xy = s(x, y);
          rec.expect(p.leq(x, xy), [&] {
            return describe("x not below xy at ", x, ",", y);
          });
          rec.expect(!p.leq(xy, y) || p.leq(x, y), [&] {
            return describe("xy below y but x not below y at ", x, ",", y);
          });
          for (Element z = 0; z < n; ++z) {
            rec.expect(!(p.leq(x, z) && p.leq(y, z)) || p.leq(xy, z), [&] {
              return describe("x,y below z but xy not at ", x, ",", y, ",", z);
            });
          }
        }
      }
      out.push_back(rec.done());
    }

    {
      Recorder rec("chambers_absorb_everything");
      for (Element c = 0; c < n; ++c) {
        bool absorbs = true;
        for (Element x = 0; x < n && absorbs; ++x) {
          absorbs = s(c, x) == c;
        }
        rec.expect(absorbs == p.is_chamber(c), [&] {
          return describe("maximality and absorption disagree at ", c);
        });
      }
      out.push_back(rec.done());
    }

    {
      Recorder rec("support_order_matches_products");
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          ClassId const cx = sup.class_of[x], cy = sup.class_of[y];
          rec.expect(sup.leq(cy, cx) == (s(x, y) == x), [&] {
            return describe("supp(y) <= supp(x) disagrees with xy = x at ", x,
                            ",", y);
          });
          rec.expect(sup.class_of[s(x, y)] == sup.join(cx, cy), [&] {
            return describe("supp(xy) is not the join at ", x, ",", y);
          });
        }
      }
      for (Element c : p.chambers) {
        rec.expect(sup.top() && sup.class_of[c] == *sup.top(), [&] {
          return describe("chamber ", c, " is not in the top support class");
        });
      }
      out.push_back(rec.done());
    }

    {
      Recorder rec("facet_product_support");
      for (Element c : p.chambers) {
        auto const below = p.lower_covers(c);
        for (Element x : below) {
          for (Element y : below) {
            bool const distinct = sup.class_of[x] != sup.class_of[y];
            rec.expect((s(x, y) == c) == distinct, [&] {
              return describe("facets ", x, ",", y, " under chamber ", c,
                              ": xy = C disagrees with supp(x) != supp(y)");
            });
          }
        }
      }
      out.push_back(rec.done());
    }

    {
      Recorder   rec("meet_criterion_agrees");
      auto const mc = meet_criterion(s, p, sup);
      rec.expect(mc.holds == cls.is_meet, [&] {
        return describe("criterion says ", mc.holds, ", poset says ",
                        cls.is_meet);
      });
      out.push_back(rec.done());
    }

    {
      Recorder rec("single_edge_per_pair");
      if (!cls.is_meet) {
        out.push_back(rec.skip("face poset is not a meet-semilattice"));
      } else {
        auto const par = find_parallel_edges(g);
        rec.expect(!par, [&] {
          auto const& e = g.edges[par->first];
          return describe("parallel edges between chambers ", g.vertices[e.u],
                          ",", g.vertices[e.v]);
        });
        out.push_back(rec.done());
      }
    }

    {
      Recorder rec("thin_characterization");
      if (!cls.is_mc) {
        out.push_back(rec.skip("not connected meet-semilattice"));
      } else {
        rec.expect(cls.thin_characterization_holds, [&] {
          return describe("thin=", cls.is_thin,
                          " every_facet_is_edge=", cls.every_facet_is_edge,
                          " has_triangle=", cls.has_triangle);
        });
        out.push_back(rec.done());
      }
    }

    std::vector<Element> edge_facets;
    for (auto const& e : g.edges) {
      edge_facets.push_back(e.facet);
    }
    std::sort(edge_facets.begin(), edge_facets.end());
    edge_facets.erase(std::unique(edge_facets.begin(), edge_facets.end()),
                      edge_facets.end());

    auto chambers_above = [&](Element f) {
      std::vector<Element> cs;
      for (Element c : p.chambers) {
        if (p.leq(f, c)) {
          cs.push_back(c);
        }
      }
      return cs;
    };

    auto mc_only = [&](Recorder& rec, auto&& body) {
      if (!cls.is_mc) {
        out.push_back(rec.skip("not connected meet-semilattice"));
      } else {
        body();
        out.push_back(rec.done());
      }
    };

    {
      Recorder rec("distinct_support_absorption");
      mc_only(rec, [&] {
        for (Element a : edge_facets) {
          for (Element b : edge_facets) {
            if (a == b || sup.class_of[a] == sup.class_of[b]) {
              continue;
            }
            for (Element x : chambers_above(b)) {
              rec.expect(s(a, b) == s(a, x), [&] {
                return describe("ab != aX at a=", a, " b=", b, " X=", x);
              });
            }
          }
        }
      });
    }

    {
      Recorder rec("distinct_support_commute");
      mc_only(rec, [&] {
        for (auto const& e : g.edges) {
          for (auto const& f : g.edges) {
            if (sup.class_of[e.facet] == sup.class_of[f.facet]) {
              continue;
            }
            for (std::size_t y : {e.u, e.v}) {
              if (y != f.u && y != f.v) {
                continue;
              }
              Element const a = e.facet, b = f.facet;
              Element const yc = g.vertices[y];
              Element const x  = g.vertices[e.u == y ? e.v : e.u];
              Element const w  = g.vertices[f.u == y ? f.v : f.u];
              bool const    ok = s(a, b) == yc && s(b, a) == yc && s(a, w) == yc
                              && s(a, yc) == yc && s(b, yc) == yc
                              && s(b, x) == yc;
              rec.expect(ok, [&] {
                return describe("edges through facets ", a, ",", b,
                                " meeting at chamber ", yc, " do not commute to it");
              });
            }
          }
        }
      });
    }

    {
      Recorder rec("same_support_bijection");
      mc_only(rec, [&] {
        for (Element a1 : edge_facets) {
          for (Element a2 : edge_facets) {
            if (sup.class_of[a1] != sup.class_of[a2]) {
              continue;
            }
            auto const      from = chambers_above(a1);
            auto const      to   = chambers_above(a2);
            std::set<Element> image;
            bool            ok = from.size() == to.size();
            for (Element x : from) {
              Element const y = s(a2, x);
              ok = ok && std::binary_search(to.begin(), to.end(), y)
                && s(a1, y) == x;
              image.insert(y);
            }
            ok = ok && image.size() == to.size();
            rec.expect(ok, [&] {
              return describe("X -> a2 X is not a bijection for a1=", a1,
                              " a2=", a2);
            });
          }
        }
      });
    }

    {
      Recorder rec("same_support_pairing");
      if (!cls.is_mc || !cls.is_thin) {
        out.push_back(rec.skip("not a thin connected meet-semilattice"));
      } else {
        for (auto const& e1 : g.edges) {
          for (auto const& e2 : g.edges) {
            if (e1.facet == e2.facet
                || sup.class_of[e1.facet] != sup.class_of[e2.facet]) {
              continue;
            }
            Element const a1 = e1.facet, a2 = e2.facet;
            Element const z = g.vertices[e1.u], w = g.vertices[e1.v];
            Element const x = g.vertices[e2.u], y = g.vertices[e2.v];
            bool const    first = s(a1, x) == w && s(a1, y) == z && s(a2, w) == x
                             && s(a2, z) == y;
            bool const second = s(a1, x) == z && s(a1, y) == w && s(a2, w) == y
                              && s(a2, z) == x;
            rec.expect(first != second, [&] {
              return describe("facets ", a1, ",", a2, ": ",
                              first ? "both" : "neither", " pairings hold");
            });
          }
        }
        out.push_back(rec.done());
      }
    }

    {
      Recorder rec("label_once_without_triangle");
      mc_only(rec, [&] {
        std::size_t const nv = g.vertex_count();
        std::vector<char> adj(nv * nv, 0);
        for (auto const& e : g.edges) {
          adj[e.u * nv + e.v] = adj[e.v * nv + e.u] = 1;
        }
        std::map<Element, std::size_t> uses;
        std::set<Element>              in_triangle;
        for (auto const& e : g.edges) {
          ++uses[e.facet];
          for (std::size_t c = 0; c < nv; ++c) {
            if (c != e.u && c != e.v && adj[e.u * nv + c] && adj[e.v * nv + c]) {
              in_triangle.insert(e.facet);
            }
          }
        }
        for (auto const& use : uses) {
          if (!in_triangle.contains(use.first)) {
            rec.expect(use.second == 1, [&] {
              return describe("facet ", use.first, " labels ", use.second,
                              " edges but lies on no triangle");
            });
          }
        }
      });
    }

    {
      Recorder rec("support_parity");
      if (!cls.is_mc || !cls.is_thin) {
        out.push_back(rec.skip("not a thin connected meet-semilattice"));
      } else {
        auto const r = support_parity_ok(g);
        rec.expect(r.ok, [&] {
          if (r.repeated_label_edges) {
            return describe("a label occurs on ", r.repeated_label_edges->size(),
                            " edges");
          }
          return describe("a cycle of length ", r.witness->length(),
                          " has an odd number of edges from class ",
                          *r.odd_class);
        });
        out.push_back(rec.done());
      }
    }

    {
      Recorder rec("parity_basis_matches_enumeration");
      try {
        auto const cycles = simple_cycles(g, std::nullopt, opts.cycle_cap);
        std::vector<ClassId> edge_class;
        for (auto const& e : g.edges) {
          edge_class.push_back(e.label.class_id);
        }
        bool all_even = true;
        for (auto const& c : cycles) {
          std::map<ClassId, std::size_t> count;
          for (std::size_t e : c.edges) {
            ++count[edge_class[e]];
          }
          for (auto const& [k, m] : count) {
            all_even = all_even && m % 2 == 0;
          }
        }
        auto const ends  = g.endpoints();
        bool const basis = !detail::odd_class_cycle(g.vertex_count(), ends,
                                                    edge_class);
        rec.expect(basis == all_even, [&] {
          return describe("basis says ", basis, ", enumeration of ",
                          cycles.size(), " cycles says ", all_even);
        });
        out.push_back(rec.done());
      } catch (cycle_overflow const& e) {
        out.push_back(rec.skip(e.what()));
      }
    }

    return out;
  }

  inline bool suite_passed(std::vector<PropertyResult> const& rs) {
    return std::none_of(rs.begin(), rs.end(), [](PropertyResult const& r) {
      return r.outcome == Outcome::fail;
    });
  }

}  // namespace lrb

#endif  // LRB_PROPERTIES_HPP_
