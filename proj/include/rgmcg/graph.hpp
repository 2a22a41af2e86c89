#pragma once

#include <map>
#include <string>
#include <vector>

namespace rgmcg {

using VertexId = int;
using EdgeId = int;
using HalfEdgeId = int;

// Each edge is directed and owns two half-edges: the outgoing "start" end and
// the incoming "target" end.  A vertex stores its incident half-edges in
// counterclockwise order beginning directly after the cilium, so order[0] sits
// at the minimal position and order.back() at the maximal one.  "Directly
// before / directly after" always refers to this linear order; the gap between
// order.back() and order[0] is the cilium, and no structural move is allowed
// to carry an end across it.
struct Edge {
  EdgeId id = -1;
  HalfEdgeId start = -1;
  HalfEdgeId target = -1;
};

struct Vertex {
  VertexId id = -1;
  std::vector<HalfEdgeId> order;
};

// Resolved location of a half-edge.
struct EndRef {
  VertexId vertex = -1;
  int position = -1;  // index into Vertex::order
  EdgeId edge = -1;
  bool is_target = false;  // true for the incoming end, false for the outgoing
};

class RibbonGraph {
 public:
  RibbonGraph() = default;
  // Validates: distinct ids, every half-edge incident to exactly one vertex,
  // both ends of every edge present.  Throws std::invalid_argument.
  RibbonGraph(std::vector<Vertex> vertices, std::vector<Edge> edges,
              std::map<EdgeId, std::string> edge_names = {});

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::map<EdgeId, std::string>& edge_names() const { return names_; }

  const Vertex& vertex(VertexId v) const;
  const Edge& edge(EdgeId e) const;
  bool has_edge(EdgeId e) const;
  bool has_vertex(VertexId v) const;

  const EndRef& end(HalfEdgeId h) const;  // throws std::out_of_range
  HalfEdgeId at(VertexId v, int position) const;
  int degree(VertexId v) const { return static_cast<int>(vertex(v).order.size()); }

  std::string edge_name(EdgeId e) const;         // falls back to "e<id>"
  EdgeId edge_by_name(const std::string&) const;  // throws if unknown

  int num_half_edges() const { return 2 * static_cast<int>(edges_.size()); }
  bool connected() const;

  // Structural equality: identical vertex/edge lists and cyclic orders.
  bool operator==(const RibbonGraph& o) const;
  bool operator!=(const RibbonGraph& o) const { return !(*this == o); }

  std::string to_json() const;  // deterministic (sorted by id)
  static RibbonGraph from_json(const std::string& text);

  EdgeId fresh_edge_id() const;
  VertexId fresh_vertex_id() const;
  HalfEdgeId fresh_half_edge_id() const;

 private:
  std::vector<Vertex> vertices_;  // sorted by id
  std::vector<Edge> edges_;       // sorted by id
  std::map<EdgeId, std::string> names_;
  std::map<HalfEdgeId, EndRef> ends_;
  std::map<VertexId, int> vindex_;
  std::map<EdgeId, int> eindex_;

  void reindex();
};

// Convenience builder used by tests and the CLI: vertex orders given as lists
// of signed edge names, "+name" for the start end and "-name" for the target
// end (a loop lists its name twice).
RibbonGraph build_graph(
    const std::vector<std::vector<std::string>>& vertex_orders);

}  // namespace rgmcg
