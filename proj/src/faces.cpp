#include "rgmcg/faces.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rgmcg {

PathStep face_successor(const RibbonGraph& g, const PathStep& s) {
  HalfEdgeId in = step_arrival_end(g, s);
  const EndRef& ref = g.end(in);
  const Vertex& v = g.vertex(ref.vertex);
  int deg = static_cast<int>(v.order.size());
  int pos = (ref.position + deg - 1) % deg;
  HalfEdgeId out = v.order[pos];
  const EndRef& oref = g.end(out);
  PathStep next;
  next.edge = oref.edge;
  next.forward = !oref.is_target;  // leaving through a start end goes forward
  return next;
}

bool face_successor_crosses_cilium(const RibbonGraph& g, const PathStep& s) {
  HalfEdgeId in = step_arrival_end(g, s);
  return g.end(in).position == 0;
}

std::vector<GraphPath> faces(const RibbonGraph& g) {
  std::set<PathStep> todo;
  for (const Edge& e : g.edges()) {
    todo.insert(PathStep{e.id, true});
    todo.insert(PathStep{e.id, false});
  }
  std::vector<GraphPath> out;
  while (!todo.empty()) {
    PathStep first = *todo.begin();
    std::vector<PathStep> walk;
    PathStep s = first;
    do {
      walk.push_back(s);
      if (todo.erase(s) == 0)
        throw std::logic_error("face walk revisited a directed edge");
      s = face_successor(g, s);
    } while (!(s == first));
    // Canonical rotation: lexicographically minimal step sequence.
    int n = static_cast<int>(walk.size());
    int best = 0;
    for (int k = 1; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        const PathStep& a = walk[(k + i) % n];
        const PathStep& b = walk[(best + i) % n];
        if (a < b) {
          best = k;
          break;
        }
        if (b < a) break;
      }
    }
    std::vector<PathStep> rot;
    rot.reserve(n);
    for (int i = 0; i < n; ++i) rot.push_back(walk[(best + i) % n]);
    out.emplace_back(g, std::move(rot));
  }
  std::sort(out.begin(), out.end(),
            [](const GraphPath& a, const GraphPath& b) {
              return a.steps() < b.steps();
            });
  return out;
}

bool is_face_path(const RibbonGraph& g, const GraphPath& p) {
  std::set<PathStep> seen;
  for (const PathStep& s : p.steps())
    if (!seen.insert(s).second) return false;
  for (int i = 0; i + 1 < p.size(); ++i)
    if (!(face_successor(g, p.steps()[i]) == p.steps()[i + 1])) return false;
  return true;
}

bool is_ciliated_face(const RibbonGraph& g, const GraphPath& p) {
  if (p.empty() || !p.closed() || !is_face_path(g, p)) return false;
  return face_successor(g, p.steps().back()) == p.steps().front();
}

int genus(const RibbonGraph& g) {
  if (!g.connected())
    throw std::invalid_argument("genus needs a connected graph");
  int V = static_cast<int>(g.vertices().size());
  int E = static_cast<int>(g.edges().size());
  int F = static_cast<int>(faces(g).size());
  int chi = V - E + F;
  if ((2 - chi) % 2 != 0)
    throw std::invalid_argument("odd Euler defect; graph is degenerate");
  return (2 - chi) / 2;
}

GraphPath ciliated_face_at(const RibbonGraph& g, VertexId v) {
  // Exactly one directed step arrives at position 0 of v, so each cilium is
  // crossed exactly once; the based walk starts with the step leaving it.
  const Vertex& vv = g.vertex(v);
  if (vv.order.empty())
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " has no incident ends");
  const EndRef& r = g.end(vv.order[0]);
  PathStep arriving{r.edge, r.is_target};
  PathStep first = face_successor(g, arriving);
  std::vector<PathStep> walk;
  PathStep s = first;
  do {
    walk.push_back(s);
    s = face_successor(g, s);
  } while (!(s == first));
  return GraphPath(g, std::move(walk));
}

std::vector<VertexId> cilia_crossed_by_face(const RibbonGraph& g,
                                            const GraphPath& face) {
  std::vector<VertexId> out;
  for (const PathStep& s : face.steps())
    if (face_successor_crosses_cilium(g, s)) out.push_back(step_sink(g, s));
  return out;
}

}  // namespace rgmcg
