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

// Command-line front end.
//
// Exit status: 0 success, 1 semantic failure (reason printed as JSON on
// stdout), 2 parse, usage or IO error (message on stderr).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <lrb/lrb.hpp>

namespace {

  using nlohmann::ordered_json;

  constexpr int exit_ok       = 0;
  constexpr int exit_semantic = 1;
  constexpr int exit_input    = 2;

  //! Semantic failure carrying a JSON report.
  struct semantic_failure {
    ordered_json report;
  };

  std::string read_input(std::string const& path) {
    if (path.empty() || path == "-") {
      return {std::istreambuf_iterator<char>(std::cin), {}};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw lrb::input_error("cannot read " + path);
    }
    return {std::istreambuf_iterator<char>(in), {}};
  }

  std::size_t cycle_cap() {
    char const* env = std::getenv("LRB_CYCLE_CAP");
    if (env == nullptr || *env == '\0') {
      return lrb::default_cycle_cap;
    }
    try {
      std::size_t used = 0;
      auto const  cap  = std::stoull(env, &used);
      if (used == std::string(env).size() && cap > 0) {
        return cap;
      }
    } catch (std::exception const&) {
    }
    throw lrb::input_error("LRB_CYCLE_CAP must be a positive integer");
  }

  //! Semigroup input, or the LRB of a thin LRB graph input.
  lrb::LrbTable load_table(std::string const& path) {
    auto const j = lrb::detail::parse_json(read_input(path));
    if (lrb::instance_kind(j) == lrb::InstanceKind::semigroup) {
      return lrb::table_from_json(j);
    }
    return lrb::to_lrb(lrb::graph_from_json(j));
  }

  void print(ordered_json const& j) {
    std::cout << j.dump(2) << "\n";
  }

  ordered_json validation_json(lrb::LrbTable const& s,
                               lrb::ValidationReport const& v) {
    ordered_json j;
    j["associative"]  = v.is_associative();
    j["band"]         = v.is_band();
    j["left_regular"] = v.is_left_regular();
    j["identity"]     = v.identity ? ordered_json(*v.identity) : ordered_json();
    if (v.idempotency_failure) {
      j["reason"] = "not a band: x*x != x";
      j["counterexample"] = {{"x", s.name(*v.idempotency_failure)}};
    } else if (v.associativity_failure) {
      auto const& t = *v.associativity_failure;
      j["reason"] = "not associative: (xy)z != x(yz)";
      j["counterexample"]
          = {{"x", s.name(t[0])}, {"y", s.name(t[1])}, {"z", s.name(t[2])}};
    } else if (v.left_regularity_failure) {
      auto const& p = *v.left_regularity_failure;
      j["reason"] = "not left regular: xyx != xy";
      j["counterexample"] = {{"x", s.name(p.first)}, {"y", s.name(p.second)}};
    }
    return j;
  }

  int analyze(std::string const& path, bool emit_instance) {
    auto const s = [&] {
      auto const j = lrb::detail::parse_json(read_input(path));
      if (lrb::instance_kind(j) != lrb::InstanceKind::semigroup) {
        throw lrb::input_error("analyze expects a semigroup instance");
      }
      return lrb::table_from_json(j);
    }();
    auto const v = lrb::validate_lrb(s);
    if (emit_instance) {
      std::cout << lrb::write_table(s);
      return v.ok() ? exit_ok : exit_semantic;
    }
    ordered_json report;
    report["elements"]   = s.size();
    report["valid"]      = v.ok();
    report["validation"] = validation_json(s, v);
    if (!v.ok()) {
      report["reason"] = report["validation"]["reason"];
      print(report);
      return exit_semantic;
    }

    auto const p      = lrb::face_poset(s);
    auto const sup    = lrb::support_structure(s);
    auto const g      = lrb::chamber_graph(p, lrb::fiber_labels(p, sup));
    auto const cls    = lrb::classify(p, g);
    auto const mc     = lrb::meet_criterion(s, p, sup);
    auto const parity = lrb::support_parity_ok(g);

    auto names = [&](auto const& xs) {
      ordered_json a = ordered_json::array();
      for (lrb::Element x : xs) {
        a.push_back(s.name(x));
      }
      return a;
    };
    report["poset"] = {{"chambers", p.chambers.size()},
                       {"facets", p.facets.size()},
                       {"rank", p.rank},
                       {"minimal", names(p.minimals)},
                       {"chamber_names", names(p.chambers)}};
    ordered_json distances = ordered_json::array();
    for (auto const& d : p.rank_distances) {
      distances.push_back({{"minimal", s.name(d.minimal)},
                           {"chamber", s.name(d.chamber)},
                           {"length", d.length}});
    }
    report["poset"]["rank_distances"] = distances;
    ordered_json classes = ordered_json::array();
    for (auto const& c : sup.classes) {
      classes.push_back(names(c));
    }
    report["supports"]  = {{"count", sup.class_count()}, {"classes", classes}};
    report["adjacency"] = {{"vertices", g.vertex_count()},
                           {"edges", g.edges.size()}};
    report["classification"] = {{"connected", cls.is_connected},
                                {"meet_semilattice", cls.is_meet},
                                {"meet_criterion", mc.holds},
                                {"mc", cls.is_mc},
                                {"thin", cls.is_thin},
                                {"thin_mc", cls.is_mc && cls.is_thin},
                                {"every_facet_is_edge", cls.every_facet_is_edge},
                                {"has_triangle", cls.has_triangle},
                                {"cover_count_mismatches",
                                 names(cls.cover_count_mismatches)}};
    ordered_json par = {{"ok", parity.ok}};
    if (parity.repeated_label_edges) {
      par["reason"] = "a label occurs on more than one edge";
    } else if (parity.witness) {
      par["reason"] = "odd number of edges from support class "
                      + std::to_string(*parity.odd_class)
                      + " on a cycle of length "
                      + std::to_string(parity.witness->length());
    }
    report["parity"] = par;
    print(report);
    return exit_ok;
  }

  int to_graph(std::string const& path) {
    auto const s = lrb::parse_table(read_input(path));
    std::cout << lrb::write_graph(lrb::from_lrb(s));
    return exit_ok;
  }

  int from_graph(std::string const& path) {
    auto const g = lrb::parse_graph(read_input(path));
    std::cout << lrb::write_table(lrb::to_lrb(g));
    return exit_ok;
  }

  int roundtrip(std::string const& path) {
    auto const j = lrb::detail::parse_json(read_input(path));
    bool       ok;
    char const* direction;
    if (lrb::instance_kind(j) == lrb::InstanceKind::semigroup) {
      ok        = lrb::roundtrip_check(lrb::table_from_json(j));
      direction = "semigroup->graph->semigroup";
    } else {
      ok        = lrb::roundtrip_check(lrb::graph_from_json(j));
      direction = "graph->semigroup->graph";
    }
    ordered_json report = {{"roundtrip", ok}, {"direction", direction}};
    if (!ok) {
      report["reason"] = "result is not isomorphic to the input";
    }
    print(report);
    return ok ? exit_ok : exit_semantic;
  }

  int export_instance(std::string const& path,
                      std::string const& format,
                      std::string const& what) {
    auto const j = lrb::detail::parse_json(read_input(path));
    if (what == "graph") {
      if (lrb::instance_kind(j) != lrb::InstanceKind::graph || format != "dot") {
        throw lrb::input_error("--what graph needs a graph input and dot format");
      }
      std::cout << lrb::graph_dot(lrb::graph_from_json(j));
      return exit_ok;
    }
    auto const s = lrb::instance_kind(j) == lrb::InstanceKind::semigroup
                       ? lrb::table_from_json(j)
                       : lrb::to_lrb(lrb::graph_from_json(j));
    if (!lrb::validate_lrb(s).ok()) {
      throw lrb::precondition_error("not a left regular band");
    }
    auto const p = lrb::face_poset(s);
    if (format == "json") {
      if (what != "adjacency") {
        throw lrb::input_error("json export is only available for adjacency");
      }
      auto const g = lrb::chamber_graph(p, lrb::fiber_labels(p, lrb::support_structure(s)));
      std::cout << lrb::chamber_graph_json(g).dump(2) << "\n";
      return exit_ok;
    }
    if (what == "faceposet") {
      std::cout << lrb::face_poset_dot(s, p);
    } else if (what == "supports") {
      std::cout << lrb::support_dot(s, lrb::support_structure(s));
    } else {
      auto const g = lrb::chamber_graph(p, lrb::fiber_labels(p, lrb::support_structure(s)));
      std::cout << lrb::chamber_graph_dot(s, g);
    }
    return exit_ok;
  }

  int check(std::string const& path) {
    auto const s       = load_table(path);
    auto const results = lrb::property_suite(s, {.cycle_cap = cycle_cap()});
    ordered_json props = ordered_json::array();
    for (auto const& r : results) {
      ordered_json item = {{"name", r.name},
                           {"outcome", lrb::to_string(r.outcome)},
                           {"checks", r.checks}};
      if (!r.detail.empty()) {
        item["detail"] = r.detail;
      }
      props.push_back(item);
    }
    bool const passed = lrb::suite_passed(results);
    ordered_json report = {{"passed", passed}, {"properties", props}};
    if (!passed) {
      for (auto const& r : results) {
        if (r.outcome == lrb::Outcome::fail) {
          report["reason"] = r.name + ": " + r.detail;
          break;
        }
      }
    }
    print(report);
    return passed ? exit_ok : exit_semantic;
  }

  std::vector<double> degrees_to_radians(std::vector<double> const& degrees) {
    std::vector<double> out;
    for (double d : degrees) {
      out.push_back(d * std::numbers::pi / 180.0);
    }
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Left regular band toolkit"};
  app.require_subcommand(1, 1);

  std::string path;
  auto        add_input = [&](CLI::App* sub) {
    sub->add_option("FILE", path, "input JSON (stdin when omitted or -)");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "validate and classify a semigroup");
  add_input(analyze_cmd);
  bool emit_instance = false;
  analyze_cmd->add_flag("--emit-instance", emit_instance,
                        "re-emit the parsed instance instead of a report");

  auto* construct_cmd = app.add_subcommand("construct", "emit a built-in instance");
  construct_cmd->require_subcommand(1, 1);
  std::size_t letters = 0, count = 0, path_n = 0;
  std::vector<double> angles;
  auto* free_cmd = construct_cmd->add_subcommand("free", "free LRB on K letters");
  free_cmd->add_option("--letters", letters, "number of generators")
      ->required()
      ->check(CLI::Range(1, 6));
  auto* lines_cmd = construct_cmd->add_subcommand("lines", "line arrangement in the plane");
  auto* count_opt = lines_cmd->add_option("--count", count, "number of lines, evenly spaced")
                        ->check(CLI::Range(1, 64));
  auto* angles_opt
      = lines_cmd->add_option("--angles", angles, "line directions in degrees")
            ->delimiter(',');
  count_opt->excludes(angles_opt);
  auto* path_cmd = construct_cmd->add_subcommand("path", "path-shaped chamber graph");
  path_cmd->add_option("--n", path_n, "number of chambers")
      ->required()
      ->check(CLI::Range(2, 64));

  auto* to_graph_cmd = app.add_subcommand("to-graph", "thin MC semigroup to graph");
  add_input(to_graph_cmd);
  auto* from_graph_cmd = app.add_subcommand("from-graph", "graph to semigroup");
  add_input(from_graph_cmd);
  auto* roundtrip_cmd = app.add_subcommand("roundtrip", "convert there and back");
  add_input(roundtrip_cmd);

  auto* export_cmd = app.add_subcommand("export", "DOT or JSON export");
  add_input(export_cmd);
  std::string format = "dot", what;
  export_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_option("--what", what)
      ->required()
      ->check(CLI::IsMember({"faceposet", "supports", "adjacency", "graph"}));

  auto* check_cmd = app.add_subcommand("check", "run the structural property suite");
  add_input(check_cmd);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*analyze_cmd) {
      return analyze(path, emit_instance);
    }
    if (*construct_cmd) {
      if (*free_cmd) {
        std::cout << lrb::write_table(lrb::free_lrb(letters));
      } else if (*lines_cmd) {
        if (angles.empty() && count == 0) {
          throw lrb::input_error("lines needs --count or --angles");
        }
        auto const arr = angles.empty()
                             ? lrb::line_arrangement_lrb(count)
                             : lrb::line_arrangement_lrb(
                                   lrb::LineArrangement(degrees_to_radians(angles)));
        std::cout << lrb::write_table(arr.table);
      } else {
        std::cout << lrb::write_table(lrb::path_example(path_n));
      }
      return exit_ok;
    }
    if (*to_graph_cmd) {
      return to_graph(path);
    }
    if (*from_graph_cmd) {
      return from_graph(path);
    }
    if (*roundtrip_cmd) {
      return roundtrip(path);
    }
    if (*export_cmd) {
      return export_instance(path, format, what);
    }
    return check(path);
  } catch (lrb::input_error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (std::logic_error const& e) {
    print(ordered_json{{"ok", false}, {"reason", e.what()}});
    return exit_semantic;
  } catch (std::runtime_error const& e) {
    print(ordered_json{{"ok", false}, {"reason", e.what()}});
    return exit_semantic;
  }
}
