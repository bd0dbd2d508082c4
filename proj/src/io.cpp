#include "shiftgraph/io.hpp"

#include <algorithm>

#include <json.hpp>

#include "shiftgraph/coloring.hpp"

namespace shiftgraph {

namespace {

using nlohmann::json;

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

int as_int(const json &j, const char *what) {
  if (!j.is_number_integer())
    throw InputError(std::string(what) + " must be an integer");
  auto value = j.get<long long>();
  if (value < INT32_MIN || value > INT32_MAX)
    throw InputError(std::string(what) + " out of range");
  return static_cast<int>(value);
}

std::vector<Edge> read_pairs(const json &list) {
  if (!list.is_array())
    throw InputError("\"edges\" must be an array");
  std::vector<Edge> pairs;
  pairs.reserve(list.size());
  for (const auto &p : list) {
    if (!p.is_array() || p.size() != 2)
      throw InputError("each edge must be a pair [u, v]");
    pairs.push_back({as_int(p[0], "edge endpoint"), as_int(p[1], "edge endpoint")});
  }
  return pairs;
}

std::vector<std::string> read_labels(const json &doc, int n) {
  auto it = doc.find("labels");
  if (it == doc.end() || it->is_null())
    return {};
  if (!it->is_object())
    throw InputError("\"labels\" must be an object");
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    labels[v] = std::to_string(v);
  for (const auto &[key, value] : it->items()) {
    std::size_t used = 0;
    int id = -1;
    try {
      id = std::stoi(key, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != key.size() || id < 0 || id >= n)
      throw InputError("label key \"" + key + "\" is not a vertex id");
    if (!value.is_string())
      throw InputError("label values must be strings");
    labels[id] = value.get<std::string>();
  }
  return labels;
}

std::string quoted(const std::string &s) { return json(s).dump(); }

std::string pairs_text(std::span<const Edge> pairs) {
  std::string out = "[";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i)
      out += ", ";
    out += "[" + std::to_string(pairs[i].u) + ", " + std::to_string(pairs[i].v) + "]";
  }
  return out + "]";
}

std::string serialize(int n, bool directed, std::span<const Edge> pairs,
                      const std::vector<std::string> &labels) {
  std::string out = "{\"n\": " + std::to_string(n) +
                    ", \"directed\": " + (directed ? "true" : "false") +
                    ", \"edges\": " + pairs_text(pairs);
  if (!labels.empty()) {
    out += ", \"labels\": {";
    for (int v = 0; v < n; ++v) {
      if (v)
        out += ", ";
      out += "\"" + std::to_string(v) + "\": " + quoted(labels[v]);
    }
    out += "}";
  }
  return out + "}";
}

std::string dot_vertices(int n, bool labeled, auto label_of) {
  std::string out;
  for (Vertex v = 0; v < n; ++v) {
    out += "  " + std::to_string(v);
    if (labeled)
      out += " [label=" + quoted(label_of(v)) + "]";
    out += ";\n";
  }
  return out;
}

} // namespace

AnyGraph graph_from_json(std::string_view text) {
  json doc = parse(text);
  if (!doc.is_object())
    throw InputError("graph JSON must be an object");
  auto n_it = doc.find("n");
  if (n_it == doc.end())
    throw InputError("missing \"n\"");
  int n = as_int(*n_it, "\"n\"");
  if (n < 0)
    throw InputError("\"n\" must be non-negative");
  bool directed = false;
  if (auto it = doc.find("directed"); it != doc.end()) {
    if (!it->is_boolean())
      throw InputError("\"directed\" must be a boolean");
    directed = it->get<bool>();
  }
  auto e_it = doc.find("edges");
  std::vector<Edge> pairs =
      e_it == doc.end() ? std::vector<Edge>{} : read_pairs(*e_it);
  auto labels = read_labels(doc, n);
  if (directed)
    return AcyclicDigraph(n, std::move(pairs), std::move(labels));
  return UndirectedGraph(n, std::move(pairs), std::move(labels));
}

UndirectedGraph undirected_from_json(std::string_view text) {
  auto g = graph_from_json(text);
  if (auto *d = std::get_if<AcyclicDigraph>(&g))
    return d->underlying();
  return std::get<UndirectedGraph>(std::move(g));
}

AcyclicDigraph digraph_from_json(std::string_view text) {
  auto g = graph_from_json(text);
  if (auto *d = std::get_if<AcyclicDigraph>(&g))
    return std::move(*d);
  throw InputError("expected a directed graph (\"directed\": true)");
}

std::string to_json(const UndirectedGraph &g) {
  return serialize(g.order(), false, g.edges(), g.labels());
}

std::string to_json(const AcyclicDigraph &g) {
  return serialize(g.order(), true, g.arcs(), g.labels());
}

std::string to_json(const AnyGraph &g) {
  return std::visit([](const auto &x) { return to_json(x); }, g);
}

std::string orientation_to_json(const Orientation &o) {
  return "{\"edges\": " + pairs_text(o.arcs()) + "}";
}

Orientation orientation_from_json(const UndirectedGraph &base,
                                  std::string_view text) {
  json doc = parse(text);
  if (!doc.is_object() || !doc.contains("edges"))
    throw InputError("orientation JSON must be {\"edges\": [[u, v], ...]}");
  auto arcs = read_pairs(doc["edges"]);
  return Orientation::from_arcs(base, arcs);
}

std::string coloring_to_json(const Coloring &c) {
  std::string out = "{\"palette\": " + std::to_string(c.palette()) + ", \"colors\": {";
  auto colors = c.colors();
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (v)
      out += ", ";
    out += "\"" + std::to_string(v) + "\": " + std::to_string(colors[v]);
  }
  return out + "}}";
}

Coloring coloring_from_json(const UndirectedGraph &g, std::string_view text) {
  json doc = parse(text);
  if (!doc.is_object() || !doc.contains("colors") || !doc["colors"].is_object())
    throw InputError("coloring JSON must be {\"palette\": k, \"colors\": {...}}");
  std::vector<int> colors(static_cast<std::size_t>(g.order()), -1);
  for (const auto &[key, value] : doc["colors"].items()) {
    int v = -1;
    try {
      std::size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size())
        v = -1;
    } catch (const std::exception &) {
    }
    if (v < 0 || v >= g.order())
      throw InputError("coloring names unknown vertex \"" + key + "\"");
    colors[v] = as_int(value, "color");
  }
  if (std::find(colors.begin(), colors.end(), -1) != colors.end())
    throw InputError("coloring does not cover every vertex");
  if (doc.contains("palette"))
    return Coloring(g, std::move(colors), as_int(doc["palette"], "palette"));
  return Coloring(g, std::move(colors));
}

std::string to_dot(const UndirectedGraph &g) {
  std::string out = "graph G {\n";
  out += dot_vertices(g.order(), g.has_labels(), [&](Vertex v) { return g.label(v); });
  for (const auto &e : g.edges())
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  return out + "}\n";
}

std::string to_dot(const AcyclicDigraph &g) {
  std::string out = "digraph G {\n";
  out += dot_vertices(g.order(), g.has_labels(), [&](Vertex v) { return g.label(v); });
  for (const auto &a : g.arcs())
    out += "  " + std::to_string(a.u) + " -> " + std::to_string(a.v) + ";\n";
  return out + "}\n";
}

std::string to_dot(const Orientation &o) {
  const auto &g = o.base();
  std::string out = "digraph G {\n";
  out += dot_vertices(g.order(), g.has_labels(), [&](Vertex v) { return g.label(v); });
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    switch (o.direction(i)) {
    case Direction::Forward:
      out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
      break;
    case Direction::Backward:
      out += "  " + std::to_string(v) + " -> " + std::to_string(u) + ";\n";
      break;
    case Direction::Unset:
      out += "  " + std::to_string(u) + " -> " + std::to_string(v) + " [dir=none];\n";
      break;
    }
  }
  return out + "}\n";
}

} // namespace shiftgraph
