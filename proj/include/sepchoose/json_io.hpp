#pragma once

#include <string>

#include <json.hpp>

#include "sepchoose/adversary.hpp"
#include "sepchoose/colorers.hpp"

namespace sepchoose {

using Json = nlohmann::json;

/// {"n", "edges", "cycle_order"?, "path_order"?, "faces"?}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// {"lists": [[...],...], "precolored": {"vertex": r} | {"vertices": [...]}?}
Json lists_to_json(const ListAssignment& L);
/// The list bound a is taken from `a` when given, else from the first list of a
/// non-precolored vertex.
ListAssignment lists_from_json(const Json& j, std::shared_ptr<const Graph> g, std::optional<int> a = std::nullopt);

/// {"graph", "a", "b", "c", "lists", "precolored"?, "claim", "family", "sigma"?}
Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json coloring_to_json(const BColoring& phi);
Json coloring_result_to_json(const ColoringResult& res);

/// Parses text, mapping syntax errors to Error(parse).
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sepchoose
