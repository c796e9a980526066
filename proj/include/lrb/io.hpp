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

// JSON instance formats and DOT export.
//
//   semigroup: {"names": [...], "table": [[...], ...], "identity": 0}
//   thin graph: {"vertices": n, "edges": [[u, v, a, b], ...]}
//   chamber graph: {"vertices": [chambers], "edges": [[u, v, c, i], ...]}
//
// Writers use a fixed field order and layout so that output is stable
// byte for byte.

#ifndef LRB_IO_HPP_
#define LRB_IO_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "adjacency.hpp"
#include "error.hpp"
#include "lrbgraph.hpp"
#include "poset.hpp"
#include "support.hpp"
#include "table.hpp"

namespace lrb {

  enum class InstanceKind { semigroup, graph };

  namespace detail {
    inline nlohmann::json parse_json(std::string_view text) {
      try {
        return nlohmann::json::parse(text);
      } catch (nlohmann::json::parse_error const& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
      }
    }

    inline std::uint64_t as_index(nlohmann::json const& j, char const* what) {
      if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
        throw input_error(std::string(what) + " must be a non-negative integer");
      }
      return j.get<std::uint64_t>();
    }

    inline std::string quoted(std::string const& s) {
      return nlohmann::json(s).dump();
    }

    template <typename Range>
    std::string join_numbers(Range const& r) {
      std::string out;
      bool        first = true;
      for (auto x : r) {
        out += first ? "" : ", ";
        out += std::to_string(x);
        first = false;
      }
      return out;
    }
  }  // namespace detail

  inline InstanceKind instance_kind(nlohmann::json const& j) {
    if (j.is_object() && j.contains("table")) {
      return InstanceKind::semigroup;
    }
    if (j.is_object() && j.contains("edges") && j.contains("vertices")
        && j["vertices"].is_number_integer()) {
      return InstanceKind::graph;
    }
    throw input_error("input is neither a semigroup table nor a thin LRB graph");
  }

  inline InstanceKind parse_instance_kind(std::string_view text) {
    return instance_kind(detail::parse_json(text));
  }

  inline LrbTable table_from_json(nlohmann::json const& j) {
    if (!j.is_object() || !j.contains("table") || !j["table"].is_array()) {
      throw input_error("semigroup instance needs a \"table\" array");
    }
    std::vector<std::vector<Element>> rows;
    for (auto const& row : j["table"]) {
      if (!row.is_array()) {
        throw input_error("table rows must be arrays");
      }
      auto& out = rows.emplace_back();
      for (auto const& x : row) {
        out.push_back(detail::as_index(x, "table entry"));
      }
    }
    std::vector<std::string> names;
    if (j.contains("names")) {
      if (!j["names"].is_array()) {
        throw input_error("\"names\" must be an array of strings");
      }
      for (auto const& nm : j["names"]) {
        if (!nm.is_string()) {
          throw input_error("\"names\" must be an array of strings");
        }
        names.push_back(nm.get<std::string>());
      }
    }
    std::optional<Element> identity;
    if (j.contains("identity") && !j["identity"].is_null()) {
      identity = detail::as_index(j["identity"], "identity");
    }
    return LrbTable(rows, std::move(names), identity);
  }

  inline LrbTable parse_table(std::string_view text) {
    return table_from_json(detail::parse_json(text));
  }

  inline std::string write_table(LrbTable const& s) {
    std::ostringstream out;
    out << "{\n  \"names\": [";
    for (std::size_t x = 0; x < s.size(); ++x) {
      out << (x ? ", " : "") << detail::quoted(s.name(x));
    }
    out << "],\n  \"table\": [";
    for (Element x = 0; x < s.size(); ++x) {
      out << (x ? ",\n" : "\n") << "    [" << detail::join_numbers(s.row(x))
          << "]";
    }
    out << (s.size() ? "\n  ]" : "]");
    if (s.identity()) {
      out << ",\n  \"identity\": " << *s.identity();
    }
    out << "\n}\n";
    return out.str();
  }

  inline ThinLrbGraph graph_from_json(nlohmann::json const& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")
        || !j["edges"].is_array()) {
      throw input_error("graph needs \"vertices\" and an \"edges\" array");
    }
    ThinLrbGraph g;
    g.vertex_count = detail::as_index(j["vertices"], "vertices");
    for (auto const& e : j["edges"]) {
      if (!e.is_array() || e.size() != 4) {
        throw input_error("each edge must be [u, v, a, b]");
      }
      g.edges.push_back({detail::as_index(e[0], "edge endpoint"),
                         detail::as_index(e[1], "edge endpoint"),
                         detail::as_index(e[2], "edge label"),
                         detail::as_index(e[3], "edge label")});
    }
    return g;
  }

  inline ThinLrbGraph parse_graph(std::string_view text) {
    return graph_from_json(detail::parse_json(text));
  }

  inline std::string write_graph(ThinLrbGraph const& g) {
    std::ostringstream out;
    out << "{\n  \"vertices\": " << g.vertex_count << ",\n  \"edges\": [";
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      auto const& e = g.edges[i];
      out << (i ? ",\n" : "\n") << "    [" << e.u << ", " << e.v << ", " << e.a
          << ", " << e.b << "]";
    }
    out << (g.edges.empty() ? "]" : "\n  ]") << "\n}\n";
    return out.str();
  }

  inline nlohmann::ordered_json chamber_graph_json(ChamberGraph const& g) {
    nlohmann::ordered_json j;
    j["vertices"] = g.vertices;
    j["edges"]    = nlohmann::ordered_json::array();
    for (auto const& e : g.edges) {
      j["edges"].push_back({g.vertices[e.u], g.vertices[e.v], e.label.class_id,
                            e.label.index});
    }
    return j;
  }

  // DOT export. Nodes are listed by index and edges sorted.

  inline std::string face_poset_dot(LrbTable const& s, FacePoset const& p) {
    std::ostringstream out;
    out << "digraph face_poset {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (Element x = 0; x < s.size(); ++x) {
      out << "  " << x << " [label=" << detail::quoted(s.name(x)) << "];\n";
    }
    for (auto [lo, hi] : p.covers) {
      out << "  " << lo << " -> " << hi << ";\n";
    }
    out << "}\n";
    return out.str();
  }

  inline std::string support_dot(LrbTable const& s, SupportStructure const& sup) {
    std::ostringstream out;
    out << "digraph support_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (ClassId c = 0; c < sup.class_count(); ++c) {
      std::string label = "{";
      for (std::size_t i = 0; i < sup.classes[c].size(); ++i) {
        label += (i ? "," : "") + s.name(sup.classes[c][i]);
      }
      label += "}";
      out << "  " << c << " [label=" << detail::quoted(label) << "];\n";
    }
    for (auto [lo, hi] : sup.covers()) {
      out << "  " << lo << " -> " << hi << ";\n";
    }
    out << "}\n";
    return out.str();
  }

  //! Undirected; edge label "c.i" is (support class, fiber index).
  inline std::string chamber_graph_dot(LrbTable const& s, ChamberGraph const& g) {
    std::ostringstream out;
    out << "graph adjacency {\n  node [shape=circle];\n";
    for (Element c : g.vertices) {
      out << "  " << c << " [label=" << detail::quoted(s.name(c)) << "];\n";
    }
    std::vector<std::string> lines;
    for (auto const& e : g.edges) {
      std::ostringstream line;
      line << "  " << g.vertices[e.u] << " -- " << g.vertices[e.v]
           << " [label=\"" << e.label.class_id << "." << e.label.index << "\"];";
      lines.push_back(line.str());
    }
    std::sort(lines.begin(), lines.end());
    for (auto const& l : lines) {
      out << l << "\n";
    }
    out << "}\n";
    return out.str();
  }

  inline std::string graph_dot(ThinLrbGraph const& g) {
    std::ostringstream out;
    out << "graph thin_lrb_graph {\n  node [shape=circle];\n";
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
      out << "  " << v << " [label=\"A" << v + 1 << "\"];\n";
    }
    std::vector<std::string> lines;
    for (auto const& e : g.edges) {
      std::ostringstream line;
      line << "  " << e.u << " -- " << e.v << " [label=\"" << e.a << "," << e.b
           << "\"];";
      lines.push_back(line.str());
    }
    std::sort(lines.begin(), lines.end());
    for (auto const& l : lines) {
      out << l << "\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace lrb

#endif  // LRB_IO_HPP_
