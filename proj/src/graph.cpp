#include "rgmcg/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace rgmcg {

RibbonGraph::RibbonGraph(std::vector<Vertex> vertices, std::vector<Edge> edges,
                         std::map<EdgeId, std::string> edge_names)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      names_(std::move(edge_names)) {
  reindex();
}

void RibbonGraph::reindex() {
  std::sort(vertices_.begin(), vertices_.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  ends_.clear();
  vindex_.clear();
  eindex_.clear();

  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
    if (!vindex_.emplace(vertices_[i].id, i).second)
      throw std::invalid_argument("duplicate vertex id " +
                                  std::to_string(vertices_[i].id));
  }
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    const Edge& e = edges_[i];
    if (!eindex_.emplace(e.id, i).second)
      throw std::invalid_argument("duplicate edge id " + std::to_string(e.id));
    if (e.start == e.target)
      throw std::invalid_argument("edge " + std::to_string(e.id) +
                                  " has coinciding half-edges");
  }

  // Locate every half-edge.
  for (const Vertex& v : vertices_) {
    for (int pos = 0; pos < static_cast<int>(v.order.size()); ++pos) {
      HalfEdgeId h = v.order[pos];
      EndRef ref;
      ref.vertex = v.id;
      ref.position = pos;
      if (!ends_.emplace(h, ref).second)
        throw std::invalid_argument("half-edge " + std::to_string(h) +
                                    " occurs at more than one position");
    }
  }
  for (const Edge& e : edges_) {
    auto st = ends_.find(e.start);
    auto ta = ends_.find(e.target);
    if (st == ends_.end() || ta == ends_.end())
      throw std::invalid_argument("edge " + std::to_string(e.id) +
                                  " has an end not incident to any vertex");
    st->second.edge = e.id;
    st->second.is_target = false;
    ta->second.edge = e.id;
    ta->second.is_target = true;
  }
  for (const auto& [h, ref] : ends_) {
    if (ref.edge == -1)
      throw std::invalid_argument("half-edge " + std::to_string(h) +
                                  " belongs to no edge");
  }
  for (const auto& [id, name] : names_) {
    if (!has_edge(id))
      throw std::invalid_argument("name for unknown edge " + std::to_string(id));
  }
}

const Vertex& RibbonGraph::vertex(VertexId v) const {
  auto it = vindex_.find(v);
  if (it == vindex_.end())
    throw std::out_of_range("no vertex " + std::to_string(v));
  return vertices_[it->second];
}

const Edge& RibbonGraph::edge(EdgeId e) const {
  auto it = eindex_.find(e);
  if (it == eindex_.end())
    throw std::out_of_range("no edge " + std::to_string(e));
  return edges_[it->second];
}

bool RibbonGraph::has_edge(EdgeId e) const { return eindex_.count(e) != 0; }
bool RibbonGraph::has_vertex(VertexId v) const { return vindex_.count(v) != 0; }

const EndRef& RibbonGraph::end(HalfEdgeId h) const {
  auto it = ends_.find(h);
  if (it == ends_.end())
    throw std::out_of_range("no half-edge " + std::to_string(h));
  return it->second;
}

HalfEdgeId RibbonGraph::at(VertexId v, int position) const {
  const Vertex& vv = vertex(v);
  if (position < 0 || position >= static_cast<int>(vv.order.size()))
    throw std::out_of_range("position " + std::to_string(position) +
                            " out of range at vertex " + std::to_string(v));
  return vv.order[position];
}

std::string RibbonGraph::edge_name(EdgeId e) const {
  auto it = names_.find(e);
  if (it != names_.end()) return it->second;
  return "e" + std::to_string(e);
}

EdgeId RibbonGraph::edge_by_name(const std::string& name) const {
  for (const Edge& e : edges_)
    if (edge_name(e.id) == name) return e.id;
  throw std::out_of_range("no edge named '" + name + "'");
}

bool RibbonGraph::connected() const {
  if (vertices_.empty()) return true;
  std::set<VertexId> seen;
  std::vector<VertexId> stack{vertices_.front().id};
  seen.insert(stack.back());
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (HalfEdgeId h : vertex(v).order) {
      const Edge& e = edge(end(h).edge);
      HalfEdgeId other = end(h).is_target ? e.start : e.target;
      VertexId w = end(other).vertex;
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == vertices_.size();
}

bool RibbonGraph::operator==(const RibbonGraph& o) const {
  if (vertices_.size() != o.vertices_.size() ||
      edges_.size() != o.edges_.size())
    return false;
  for (size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id != o.vertices_[i].id ||
        vertices_[i].order != o.vertices_[i].order)
      return false;
  }
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].id != o.edges_[i].id ||
        edges_[i].start != o.edges_[i].start ||
        edges_[i].target != o.edges_[i].target)
      return false;
  }
  return true;
}

std::string RibbonGraph::to_json() const {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const Vertex& v : vertices_) {
    nlohmann::ordered_json jv;
    jv["id"] = v.id;
    jv["order"] = v.order;
    j["vertices"].push_back(jv);
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : edges_) {
    nlohmann::ordered_json je;
    je["id"] = e.id;
    je["start"] = e.start;
    je["target"] = e.target;
    auto it = names_.find(e.id);
    if (it != names_.end()) je["name"] = it->second;
    j["edges"].push_back(je);
  }
  return j.dump(2);
}

RibbonGraph RibbonGraph::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  std::map<EdgeId, std::string> names;
  for (const auto& jv : j.at("vertices")) {
    Vertex v;
    v.id = jv.at("id").get<int>();
    v.order = jv.at("order").get<std::vector<HalfEdgeId>>();
    vs.push_back(std::move(v));
  }
  for (const auto& je : j.at("edges")) {
    Edge e;
    e.id = je.at("id").get<int>();
    e.start = je.at("start").get<HalfEdgeId>();
    e.target = je.at("target").get<HalfEdgeId>();
    if (je.contains("name")) names[e.id] = je.at("name").get<std::string>();
    es.push_back(e);
  }
  return RibbonGraph(std::move(vs), std::move(es), std::move(names));
}

EdgeId RibbonGraph::fresh_edge_id() const {
  EdgeId m = 0;
  for (const Edge& e : edges_) m = std::max(m, e.id + 1);
  return m;
}

VertexId RibbonGraph::fresh_vertex_id() const {
  VertexId m = 0;
  for (const Vertex& v : vertices_) m = std::max(m, v.id + 1);
  return m;
}

HalfEdgeId RibbonGraph::fresh_half_edge_id() const {
  HalfEdgeId m = 0;
  for (const auto& [h, ref] : ends_) m = std::max(m, h + 1);
  return m;
}

RibbonGraph build_graph(
    const std::vector<std::vector<std::string>>& vertex_orders) {
  // First pass: collect edge names in order of first appearance.
  std::vector<std::string> edge_order;
  std::map<std::string, EdgeId> ids;
  for (const auto& vo : vertex_orders) {
    for (const std::string& s : vo) {
      if (s.size() < 2 || (s[0] != '+' && s[0] != '-'))
        throw std::invalid_argument("end must be '+name' or '-name', got '" +
                                    s + "'");
      std::string n = s.substr(1);
      if (!ids.count(n)) {
        ids[n] = static_cast<EdgeId>(edge_order.size());
        edge_order.push_back(n);
      }
    }
  }
  std::vector<Edge> edges;
  std::map<EdgeId, std::string> names;
  for (EdgeId i = 0; i < static_cast<EdgeId>(edge_order.size()); ++i) {
    Edge e;
    e.id = i;
    e.start = 2 * i;
    e.target = 2 * i + 1;
    edges.push_back(e);
    names[i] = edge_order[i];
  }
  std::vector<Vertex> vertices;
  std::set<HalfEdgeId> used;
  for (int vi = 0; vi < static_cast<int>(vertex_orders.size()); ++vi) {
    Vertex v;
    v.id = vi;
    for (const std::string& s : vertex_orders[vi]) {
      EdgeId e = ids.at(s.substr(1));
      HalfEdgeId h = (s[0] == '+') ? 2 * e : 2 * e + 1;
      if (!used.insert(h).second)
        throw std::invalid_argument("end '" + s + "' listed twice");
      v.order.push_back(h);
    }
    vertices.push_back(std::move(v));
  }
  if (used.size() != 2 * edge_order.size())
    throw std::invalid_argument("an edge end is missing from the vertex lists");
  return RibbonGraph(std::move(vertices), std::move(edges), std::move(names));
}

}  // namespace rgmcg
