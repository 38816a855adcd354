#include "sepchoose/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "sepchoose/error.hpp"

namespace sepchoose {

namespace {

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::parse, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse, std::string("field '") + key + "' has the wrong type: " + e.what());
  }
}

std::vector<Vertex> precolored_from_json(const Json& j) {
  if (!j.contains("precolored") || j.at("precolored").is_null()) return {};
  const auto& p = j.at("precolored");
  if (p.contains("vertex")) return {get_field<int>(p, "vertex")};
  if (p.contains("vertices")) return get_field<std::vector<int>>(p, "vertices");
  fail(ErrorCode::parse, "precolored needs 'vertex' or 'vertices'");
}

Json precolored_to_json(const std::vector<Vertex>& pre) {
  if (pre.size() == 1) return Json{{"vertex", pre.front()}};
  return Json{{"vertices", pre}};
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.order();
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  if (g.cycle_order()) j["cycle_order"] = *g.cycle_order();
  if (g.path_order()) j["path_order"] = *g.path_order();
  if (g.faces()) j["faces"] = *g.faces();
  return j;
}

Graph graph_from_json(const Json& j) {
  int n = get_field<int>(j, "n");
  auto raw = get_field<std::vector<std::vector<int>>>(j, "edges");
  std::vector<Edge> edges;
  for (const auto& e : raw) {
    if (e.size() != 2) fail(ErrorCode::parse, "every edge needs exactly two endpoints");
    edges.push_back({e[0], e[1]});
  }
  try {
    Graph g(n, edges);
    if (j.contains("cycle_order")) g = g.with_cycle_order(get_field<std::vector<int>>(j, "cycle_order"));
    if (j.contains("path_order")) g = g.with_path_order(get_field<std::vector<int>>(j, "path_order"));
    if (j.contains("faces")) g = g.with_faces(get_field<std::vector<std::vector<int>>>(j, "faces"));
    return g;
  } catch (const Error& e) {
    fail(ErrorCode::parse, std::string("invalid graph: ") + e.what());
  }
}

Json lists_to_json(const ListAssignment& L) {
  Json j;
  Json lists = Json::array();
  for (const auto& l : L.lists()) lists.push_back(l.members());
  j["lists"] = lists;
  if (!L.precolored().empty()) j["precolored"] = precolored_to_json(L.precolored());
  return j;
}

ListAssignment lists_from_json(const Json& j, std::shared_ptr<const Graph> g, std::optional<int> a) {
  auto raw = get_field<std::vector<std::vector<int>>>(j, "lists");
  std::vector<ColorSet> lists;
  for (const auto& row : raw) {
    ColorSet s;
    for (int col : row) {
      if (col < 0) fail(ErrorCode::parse, "colors must be nonnegative");
      if (s.contains(col)) fail(ErrorCode::parse, "list repeats color " + std::to_string(col));
      s.insert(col);
    }
    lists.push_back(s);
  }
  auto pre = precolored_from_json(j);
  if (!a) {
    a = 0;
    for (std::size_t v = 0; v < lists.size(); ++v) {
      if (std::find(pre.begin(), pre.end(), static_cast<Vertex>(v)) == pre.end()) {
        a = static_cast<int>(lists[v].size());
        break;
      }
    }
  }
  try {
    return ListAssignment(std::move(g), std::move(lists), *a, std::move(pre));
  } catch (const Error& e) {
    fail(ErrorCode::parse, std::string("invalid lists: ") + e.what());
  }
}

Json certificate_to_json(const Certificate& cert) {
  Json j;
  j["family"] = cert.family;
  j["graph"] = graph_to_json(cert.graph());
  j["a"] = cert.a;
  j["b"] = cert.b;
  j["c"] = cert.c;
  Json lists = lists_to_json(cert.lists);
  j["lists"] = lists["lists"];
  if (lists.contains("precolored")) j["precolored"] = lists["precolored"];
  j["claim"] = to_string(cert.claim);
  if (cert.sigma_closed_form) j["sigma"] = *cert.sigma_closed_form;
  return j;
}

Certificate certificate_from_json(const Json& j) {
  auto g = std::make_shared<const Graph>(graph_from_json(j.contains("graph") ? j.at("graph") : Json()));
  int a = get_field<int>(j, "a");
  int b = get_field<int>(j, "b");
  int c = get_field<int>(j, "c");
  auto L = lists_from_json(j, g, a);
  Claim claim = claim_from_string(get_field<std::string>(j, "claim"));
  std::string family = j.contains("family") ? get_field<std::string>(j, "family") : std::string();
  std::optional<int> sigma;
  if (j.contains("sigma")) sigma = get_field<int>(j, "sigma");
  return Certificate{family, a, b, c, std::move(L), claim, sigma};
}

Json coloring_to_json(const BColoring& phi) {
  Json out = Json::array();
  for (const auto& s : phi) out.push_back(s.members());
  return out;
}

Json coloring_result_to_json(const ColoringResult& res) {
  return Json{{"strategy", res.plan.strategy}, {"coloring", coloring_to_json(res.coloring)}, {"trace", res.plan.trace}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::parse, std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::io, "cannot write " + path);
  out << text;
  if (!out) fail(ErrorCode::io, "failed writing " + path);
}

}  // namespace sepchoose
