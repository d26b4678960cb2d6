#pragma once

#include <json.hpp>

#include <sstream>
#include <string>

#include "pegraph/graph.hpp"
#include "pegraph/group.hpp"
#include "pegraph/group_ops.hpp"

namespace pegraph {

using Json = nlohmann::json;

// Canonical text: keys sorted (nlohmann's default object ordering), compact,
// one trailing LF.
inline std::string canonical_dump(const Json& j) { return j.dump() + "\n"; }

inline Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["provenance"] = g.provenance();
  j["table"] = g.table();
  return j;
}

inline FiniteGroup group_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorKind::io_error, "group JSON must be an object");
    const auto table = j.at("table").get<std::vector<std::vector<Element>>>();
    const int order = j.at("order").get<int>();
    if (order != static_cast<int>(table.size())) {
      throw Error(ErrorKind::io_error, "group JSON 'order' disagrees with the table size");
    }
    const std::string name = j.at("name").get<std::string>();
    const std::string provenance = j.value("provenance", std::string{});
    return FiniteGroup(name, table, provenance);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::io_error, std::string("malformed group JSON: ") + e.what());
  }
}

inline FiniteGroup group_from_json_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::io_error, std::string("invalid JSON: ") + e.what());
  }
  return group_from_json(j);
}

inline Json graph_to_json(const Graph& g, GraphKind kind) {
  Json adj = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v) adj.push_back(g.sorted_neighbours(v));
  Json j;
  j["kind"] = std::string(to_string(kind));
  j["n"] = g.vertex_count();
  j["adj"] = std::move(adj);
  return j;
}

inline Json digraph_to_json(const DiGraph& g) {
  Json adj = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> heads;
    for (auto u = g.out(v).find_first(); u != Bitset::npos; u = g.out(v).find_next(u)) heads.push_back(static_cast<int>(u));
    adj.push_back(std::move(heads));
  }
  Json j;
  j["kind"] = "dpower";
  j["n"] = g.vertex_count();
  j["adj"] = std::move(adj);
  return j;
}

inline Graph graph_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    const auto adj = j.at("adj").get<std::vector<std::vector<int>>>();
    if (n < 0 || static_cast<int>(adj.size()) != n) throw Error(ErrorKind::io_error, "graph JSON 'n' disagrees with 'adj'");
    std::vector<Bitset> rows(n, Bitset(n));
    for (int u = 0; u < n; ++u) {
      for (int v : adj[u]) {
        if (v < 0 || v >= n) throw Error(ErrorKind::io_error, "graph JSON adjacency out of range");
        rows[u].set(v);
      }
    }
    try {
      return Graph::from_rows(std::move(rows));
    } catch (const Error& e) {
      throw Error(ErrorKind::io_error, std::string("graph JSON: ") + e.what());
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::io_error, std::string("malformed graph JSON: ") + e.what());
  }
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace detail

// Vertices are named by position and labelled with their group element index.
inline std::string graph_to_dot(const Graph& g, GraphKind kind, const std::string& provenance) {
  std::ostringstream out;
  out << "graph " << detail::dot_quote(std::string(to_string(kind)) + ": " + provenance) << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << " [label=\"" << g.labels()[v] << "\"];\n";
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v : g.sorted_neighbours(u)) {
      if (u < v) out << "  " << u << " -- " << v << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

inline std::string digraph_to_dot(const DiGraph& g, const std::string& provenance) {
  std::ostringstream out;
  out << "digraph " << detail::dot_quote("dpower: " + provenance) << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << " [label=\"" << v << "\"];\n";
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (auto v = g.out(u).find_first(); v != Bitset::npos; v = g.out(u).find_next(v)) {
      out << "  " << u << " -> " << v << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

inline Json spectrum_to_json(const OrderSpectrum& s) {
  Json j = Json::object();
  for (auto [order, count] : s.counts) j[std::to_string(order)] = count;
  return j;
}

}  // namespace pegraph
