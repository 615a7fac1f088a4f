#pragma once

// JSON graph documents:
//
//   {"name": "gamma5",
//    "vertices": [{"id": "a", "group": {"cyclic": 3}}, ...],
//    "edges": [["a", "b"], ...]}
//
// A group is {"finite": n}, {"cyclic": n}, "two_ended", "one_ended" or
// "infinite_ended". String ids become dense vertex ids in declaration order.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gpends/errors.hpp"
#include "gpends/labels.hpp"

namespace gpends {

class ParseError : public InputError {
 public:
  ParseError(const std::string& where, const std::string& what) : InputError(where + ": " + what) {}
};

struct GraphDocument {
  std::string name;
  LabelledGraph graph;
  /// External vertex id for each dense vertex id.
  std::vector<std::string> ids;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

namespace detail {

inline GroupLabel parse_label(const nlohmann::json& j, const std::string& where) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "two_ended") return GroupLabel::two_ended();
    if (s == "one_ended") return GroupLabel::one_ended();
    if (s == "infinite_ended") return GroupLabel::infinite_ended();
    throw ParseError(where, "unknown label spec \"" + s + "\"");
  }
  if (!j.is_object() || j.size() != 1) throw ParseError(where, "label spec must be a string or a one-key object");
  const auto& [key, value] = *j.items().begin();
  if (key != "finite" && key != "cyclic") throw ParseError(where, "unknown label spec key \"" + key + "\"");
  if (!value.is_number_integer()) throw ParseError(where + "." + key, "order must be an integer");
  const auto order = value.get<std::int64_t>();
  if (order < 2) throw ParseError(where + "." + key, "vertex groups must be non-trivial (order >= 2)");
  return key == "finite" ? GroupLabel::finite(order) : GroupLabel::cyclic(order);
}

inline nlohmann::ordered_json label_json(const GroupLabel& l) {
  switch (l.kind()) {
    case GroupLabel::Kind::Finite:
      return nlohmann::ordered_json{{l.is_concrete_cyclic() ? "cyclic" : "finite", l.order()}};
    case GroupLabel::Kind::TwoEnded: return "two_ended";
    case GroupLabel::Kind::OneEnded: return "one_ended";
    case GroupLabel::Kind::InfiniteEnded: return "infinite_ended";
  }
  return nullptr;
}

}  // namespace detail

inline GraphDocument parse_graph_document(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("$", "document must be a JSON object");
  GraphDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("name", "must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw ParseError("vertices", "missing vertex array");
  std::unordered_map<std::string, Vertex> index;
  std::vector<GroupLabel> labels;
  const auto& vs = j["vertices"];
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    const auto& v = vs[i];
    if (!v.is_object() || !v.contains("id") || !v["id"].is_string())
      throw ParseError(where, "vertex needs a string \"id\"");
    if (!v.contains("group")) throw ParseError(where, "vertex needs a \"group\"");
    auto id = v["id"].get<std::string>();
    if (!index.emplace(id, static_cast<Vertex>(i)).second) throw ParseError(where + ".id", "duplicate id \"" + id + "\"");
    labels.push_back(detail::parse_label(v["group"], where + ".group"));
    doc.ids.push_back(std::move(id));
  }
  SimplicialGraph g(static_cast<int>(labels.size()));
  if (j.contains("edges")) {
    const auto& es = j["edges"];
    if (!es.is_array()) throw ParseError("edges", "must be an array");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      const auto& e = es[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw ParseError(where, "edge must be a pair of vertex ids");
      const auto a = e[0].get<std::string>(), b = e[1].get<std::string>();
      auto ia = index.find(a), ib = index.find(b);
      if (ia == index.end()) throw ParseError(where, "dangling edge endpoint \"" + a + "\"");
      if (ib == index.end()) throw ParseError(where, "dangling edge endpoint \"" + b + "\"");
      if (ia->second == ib->second) throw ParseError(where, "self-loop at \"" + a + "\"");
      g.add_edge(ia->second, ib->second);
    }
  }
  doc.graph = LabelledGraph(std::move(g), std::move(labels));
  return doc;
}

inline GraphDocument parse_graph_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  return parse_graph_document(j);
}

inline GraphDocument parse_graph_document(const char* text) { return parse_graph_document(std::string(text)); }

inline nlohmann::ordered_json to_json(const GraphDocument& doc) {
  nlohmann::ordered_json out;
  out["name"] = doc.name;
  out["vertices"] = nlohmann::ordered_json::array();
  for (Vertex v = 0; v < doc.graph.vertex_count(); ++v)
    out["vertices"].push_back({{"id", doc.ids.at(static_cast<std::size_t>(v))},
                               {"group", detail::label_json(doc.graph.label(v))}});
  out["edges"] = nlohmann::ordered_json::array();
  for (auto [u, w] : doc.graph.graph().edges())
    out["edges"].push_back({doc.ids.at(static_cast<std::size_t>(u)), doc.ids.at(static_cast<std::size_t>(w))});
  return out;
}

/// Wraps a labelled graph with default ids v0, v1, ...
inline GraphDocument make_document(std::string name, LabelledGraph lg) {
  GraphDocument doc{std::move(name), std::move(lg), {}};
  for (Vertex v = 0; v < doc.graph.vertex_count(); ++v) doc.ids.push_back("v" + std::to_string(v));
  return doc;
}

}  // namespace gpends
