#pragma once

#include <string>
#include <vector>

#include "rgmcg/graph.hpp"

namespace rgmcg {

// One traversal of an edge, forward (start -> target) or backward.
struct PathStep {
  EdgeId edge = -1;
  bool forward = true;
  bool operator==(const PathStep&) const = default;
  auto operator<=>(const PathStep&) const = default;
};

// A walk in a ribbon graph.  Steps are stored in traversal order: steps()[0]
// is traversed first.  The conventional composition p o q traverses q first,
// so in the written word the last-traversed edge appears leftmost.  Walks are
// stored verbatim (face walks may backtrack); free reduction is the separate
// operation reduced().
class GraphPath {
 public:
  GraphPath() = default;
  GraphPath(const RibbonGraph& g, std::vector<PathStep> steps);  // validates
  static GraphPath trivial(const RibbonGraph& g, VertexId at);

  const std::vector<PathStep>& steps() const { return steps_; }
  bool empty() const { return steps_.empty(); }
  int size() const { return static_cast<int>(steps_.size()); }

  VertexId start() const { return start_; }  // vertex where traversal begins
  VertexId end() const { return end_; }      // vertex where traversal finishes
  bool closed() const { return start_ == end_; }

  GraphPath inverse(const RibbonGraph& g) const;
  // p.after(q): traverse q first, then p; requires q.end() == p.start().
  GraphPath after(const RibbonGraph& g, const GraphPath& q) const;
  // Free reduction: cancels adjacent opposite traversals of the same edge.
  GraphPath reduced(const RibbonGraph& g) const;
  // Cyclic rotation: starts traversal at step index k of this closed walk.
  GraphPath rotated(const RibbonGraph& g, int k) const;

  bool operator==(const GraphPath& o) const {
    return steps_ == o.steps_ && start_ == o.start_;
  }

  // Written form, last-traversed leftmost, e.g. "a^-1 b a b^-1".
  std::string to_string(const RibbonGraph& g) const;
  // Parses the written form; edge names resolved through g.
  static GraphPath parse(const RibbonGraph& g, const std::string& word,
                         VertexId base_if_empty = -1);

 private:
  std::vector<PathStep> steps_;
  VertexId start_ = -1;
  VertexId end_ = -1;
};

// Vertex at which a step begins / finishes.
VertexId step_source(const RibbonGraph& g, const PathStep& s);
VertexId step_sink(const RibbonGraph& g, const PathStep& s);
// Half-edge through which a step leaves its source / enters its sink.
HalfEdgeId step_departure_end(const RibbonGraph& g, const PathStep& s);
HalfEdgeId step_arrival_end(const RibbonGraph& g, const PathStep& s);

}  // namespace rgmcg
