#include <json.hpp>

#include "ym/graph.hpp"

namespace ym {

using nlohmann::json;

std::string graph_to_json(const EmbeddedGraph& g, const std::vector<double>* areas) {
  json j;
  j["vertices"] = json::array();
  for (int v = 0; v < g.vertex_count(); ++v)
    j["vertices"].push_back({{"id", v}, {"x", g.vertex(v).x}, {"y", g.vertex(v).y}});
  j["edges"] = json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& spec = g.edge(e);
    json poly = json::array();
    for (const auto& p : spec.polyline) poly.push_back({p.x, p.y});
    j["edges"].push_back(
        {{"id", e}, {"tail", spec.tail}, {"head", spec.head}, {"polyline", poly}});
  }
  if (areas) {
    json a = json::object();
    for (int f = 0; f < g.bounded_face_count(); ++f)
      a[canonical_face_key(g, f)] = (*areas)[f];
    j["areas"] = a;
  }
  return j.dump(2);
}

EmbeddedGraph graph_from_json(const std::string& text, std::vector<double>* areas_out) {
  json j = json::parse(text);
  std::vector<Point> vertices;
  for (const auto& v : j.at("vertices")) {
    int id = v.at("id").get<int>();
    if (id != int(vertices.size()))
      throw std::invalid_argument("graph json: vertex ids must be dense and ordered");
    vertices.push_back({v.at("x").get<double>(), v.at("y").get<double>()});
  }
  std::vector<EmbeddedGraph::EdgeSpec> edges;
  for (const auto& e : j.at("edges")) {
    int id = e.at("id").get<int>();
    if (id != int(edges.size()))
      throw std::invalid_argument("graph json: edge ids must be dense and ordered");
    EmbeddedGraph::EdgeSpec spec;
    spec.tail = e.at("tail").get<int>();
    spec.head = e.at("head").get<int>();
    if (e.contains("polyline"))
      for (const auto& p : e.at("polyline"))
        spec.polyline.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    edges.push_back(std::move(spec));
  }
  EmbeddedGraph g = EmbeddedGraph::build(std::move(vertices), std::move(edges));
  if (areas_out) {
    *areas_out = geometric_areas(g);
    if (j.contains("areas")) {
      for (int f = 0; f < g.bounded_face_count(); ++f) {
        auto key = canonical_face_key(g, f);
        if (j["areas"].contains(key)) {
          double a = j["areas"][key].get<double>();
          if (a <= 0) throw std::invalid_argument("graph json: areas must be positive");
          (*areas_out)[f] = a;
        }
      }
    }
  }
  return g;
}

}  // namespace ym
