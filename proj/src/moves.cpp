#include "rgmcg/moves.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rgmcg {

namespace {

Vertex& vertex_ref(std::vector<Vertex>& vs, VertexId id) {
  for (Vertex& v : vs)
    if (v.id == id) return v;
  throw std::logic_error("vertex vanished");
}

}  // namespace

AddedEdge add_loop(const RibbonGraph& g, VertexId v, int position,
                   const std::string& name) {
  const Vertex& vv = g.vertex(v);
  if (position < 0 || position > static_cast<int>(vv.order.size()))
    throw std::invalid_argument("loop position out of range");
  EdgeId id = g.fresh_edge_id();
  HalfEdgeId h = g.fresh_half_edge_id();
  Edge e;
  e.id = id;
  e.start = h;
  e.target = h + 1;
  std::vector<Vertex> vs = g.vertices();
  Vertex& target = vertex_ref(vs, v);
  target.order.insert(target.order.begin() + position, {e.target, e.start});
  std::vector<Edge> es = g.edges();
  es.push_back(e);
  auto names = g.edge_names();
  if (!name.empty()) names[id] = name;
  return {RibbonGraph(std::move(vs), std::move(es), std::move(names)), id};
}

AddedEdge add_pendant(const RibbonGraph& g, VertexId v, int position,
                      const std::string& name, bool target_at_base) {
  const Vertex& vv = g.vertex(v);
  if (position < 0 || position > static_cast<int>(vv.order.size()))
    throw std::invalid_argument("pendant position out of range");
  EdgeId id = g.fresh_edge_id();
  HalfEdgeId h = g.fresh_half_edge_id();
  VertexId w = g.fresh_vertex_id();
  Edge e;
  e.id = id;
  e.start = h;
  e.target = h + 1;
  HalfEdgeId at_base = target_at_base ? e.target : e.start;
  HalfEdgeId at_tip = target_at_base ? e.start : e.target;
  std::vector<Vertex> vs = g.vertices();
  vertex_ref(vs, v).order.insert(
      vertex_ref(vs, v).order.begin() + position, at_base);
  Vertex tip;
  tip.id = w;
  tip.order = {at_tip};
  vs.push_back(std::move(tip));
  std::vector<Edge> es = g.edges();
  es.push_back(e);
  auto names = g.edge_names();
  if (!name.empty()) names[id] = name;
  return {RibbonGraph(std::move(vs), std::move(es), std::move(names)), id};
}

RibbonGraph remove_edge(const RibbonGraph& g, EdgeId e) {
  const Edge& ee = g.edge(e);
  std::vector<Vertex> vs;
  for (const Vertex& v : g.vertices()) {
    Vertex copy = v;
    std::erase_if(copy.order, [&](HalfEdgeId h) {
      return h == ee.start || h == ee.target;
    });
    if (!copy.order.empty() || v.order.empty()) vs.push_back(std::move(copy));
  }
  std::vector<Edge> es;
  for (const Edge& other : g.edges())
    if (other.id != e) es.push_back(other);
  auto names = g.edge_names();
  names.erase(e);
  return RibbonGraph(std::move(vs), std::move(es), std::move(names));
}

RibbonGraph reverse_edge(const RibbonGraph& g, EdgeId e) {
  g.edge(e);  // throws on unknown edge
  std::vector<Edge> es = g.edges();
  for (Edge& ed : es)
    if (ed.id == e) std::swap(ed.start, ed.target);
  return RibbonGraph(g.vertices(), std::move(es), g.edge_names());
}

FacePathSlide slide_along_face_path(const RibbonGraph& g,
                                    const GraphPath& gamma, HalfEdgeId moved) {
  if (gamma.empty())
    throw std::invalid_argument("cannot slide along an empty path");
  if (!is_face_path(g, gamma))
    throw std::invalid_argument("slide path is not a face path");
  EdgeId moved_edge = g.end(moved).edge;
  for (const PathStep& s : gamma.steps())
    if (s.edge == moved_edge)
      throw std::invalid_argument("moved end belongs to an edge traversed by "
                                  "the slide path");
  FacePathSlide out{g, {}};
  for (const PathStep& s : gamma.steps()) {
    SlideDescriptor d;
    d.along = s.edge;
    d.variant = s.forward ? SlideVariant::L : SlideVariant::mR;
    d.moved = moved;
    out.graph = slide(out.graph, d);
    out.slides.push_back(d);
  }
  return out;
}

EdgeToFacePath add_edge_to_face_path(const RibbonGraph& g,
                                     const GraphPath& gamma,
                                     const std::string& name) {
  if (gamma.empty())
    throw std::invalid_argument("cannot add an edge to an empty path");
  if (!is_face_path(g, gamma))
    throw std::invalid_argument("not a face path");
  HalfEdgeId dep = step_departure_end(g, gamma.steps().front());
  int pos = g.end(dep).position;
  AddedEdge added = add_loop(g, gamma.start(), pos + 1, name);
  EdgeToFacePath out;
  out.inserted = added.graph;
  out.new_edge = added.edge;
  GraphPath gamma_in_inserted(added.graph, gamma.steps());
  FacePathSlide fps = slide_along_face_path(
      added.graph, gamma_in_inserted, added.graph.edge(added.edge).target);
  out.graph = std::move(fps.graph);
  out.slides = std::move(fps.slides);
  return out;
}

GraphPath translate_after_adding(const RibbonGraph& after, const GraphPath& p,
                                 const GraphPath& gamma, EdgeId new_edge) {
  if (gamma.empty()) throw std::invalid_argument("empty replacement path");
  const auto& pat = gamma.steps();
  std::vector<PathStep> inv;
  for (auto it = pat.rbegin(); it != pat.rend(); ++it)
    inv.push_back(PathStep{it->edge, !it->forward});
  const auto& src = p.steps();
  std::vector<PathStep> out;
  size_t i = 0;
  auto matches = [&](const std::vector<PathStep>& pattern) {
    if (i + pattern.size() > src.size()) return false;
    for (size_t k = 0; k < pattern.size(); ++k)
      if (!(src[i + k] == pattern[k])) return false;
    return true;
  };
  while (i < src.size()) {
    if (matches(pat)) {
      out.push_back(PathStep{new_edge, true});
      i += pat.size();
    } else if (matches(inv)) {
      out.push_back(PathStep{new_edge, false});
      i += inv.size();
    } else {
      out.push_back(src[i]);
      ++i;
    }
  }
  if (out.empty()) return GraphPath::trivial(after, p.start());
  return GraphPath(after, std::move(out));
}

}  // namespace rgmcg
