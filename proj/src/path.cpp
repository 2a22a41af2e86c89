#include "rgmcg/path.hpp"

#include <sstream>
#include <stdexcept>

namespace rgmcg {

VertexId step_source(const RibbonGraph& g, const PathStep& s) {
  const Edge& e = g.edge(s.edge);
  return g.end(s.forward ? e.start : e.target).vertex;
}

VertexId step_sink(const RibbonGraph& g, const PathStep& s) {
  const Edge& e = g.edge(s.edge);
  return g.end(s.forward ? e.target : e.start).vertex;
}

HalfEdgeId step_departure_end(const RibbonGraph& g, const PathStep& s) {
  const Edge& e = g.edge(s.edge);
  return s.forward ? e.start : e.target;
}

HalfEdgeId step_arrival_end(const RibbonGraph& g, const PathStep& s) {
  const Edge& e = g.edge(s.edge);
  return s.forward ? e.target : e.start;
}

GraphPath::GraphPath(const RibbonGraph& g, std::vector<PathStep> steps)
    : steps_(std::move(steps)) {
  if (steps_.empty())
    throw std::invalid_argument(
        "an empty path needs a base vertex; use GraphPath::trivial");
  start_ = step_source(g, steps_.front());
  VertexId at = start_;
  for (const PathStep& s : steps_) {
    if (step_source(g, s) != at)
      throw std::invalid_argument("path steps do not compose: edge " +
                                  g.edge_name(s.edge) + " does not begin at " +
                                  std::to_string(at));
    at = step_sink(g, s);
  }
  end_ = at;
}

GraphPath GraphPath::trivial(const RibbonGraph& g, VertexId at) {
  if (!g.has_vertex(at))
    throw std::invalid_argument("no vertex " + std::to_string(at));
  GraphPath p;
  p.start_ = p.end_ = at;
  return p;
}

GraphPath GraphPath::inverse(const RibbonGraph& g) const {
  if (empty()) return *this;
  std::vector<PathStep> rev(steps_.rbegin(), steps_.rend());
  for (PathStep& s : rev) s.forward = !s.forward;
  return GraphPath(g, std::move(rev));
}

GraphPath GraphPath::after(const RibbonGraph& g, const GraphPath& q) const {
  if (q.end() != start_)
    throw std::invalid_argument("paths do not compose: first ends at " +
                                std::to_string(q.end()) +
                                ", second starts at " + std::to_string(start_));
  if (q.empty()) return *this;
  if (empty()) return q;
  std::vector<PathStep> all = q.steps_;
  all.insert(all.end(), steps_.begin(), steps_.end());
  return GraphPath(g, std::move(all));
}

GraphPath GraphPath::reduced(const RibbonGraph& g) const {
  std::vector<PathStep> out;
  for (const PathStep& s : steps_) {
    if (!out.empty() && out.back().edge == s.edge &&
        out.back().forward != s.forward) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  if (out.empty()) return trivial(g, start_);
  return GraphPath(g, std::move(out));
}

GraphPath GraphPath::rotated(const RibbonGraph& g, int k) const {
  if (!closed())
    throw std::invalid_argument("only closed walks can be rotated");
  if (empty()) return *this;
  int n = size();
  k = ((k % n) + n) % n;
  std::vector<PathStep> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(steps_[(k + i) % n]);
  return GraphPath(g, std::move(out));
}

std::string GraphPath::to_string(const RibbonGraph& g) const {
  if (empty()) return "1";
  std::ostringstream os;
  for (int i = size() - 1; i >= 0; --i) {
    os << g.edge_name(steps_[i].edge);
    if (!steps_[i].forward) os << "^-1";
    if (i > 0) os << ' ';
  }
  return os.str();
}

GraphPath GraphPath::parse(const RibbonGraph& g, const std::string& word,
                           VertexId base_if_empty) {
  std::istringstream is(word);
  std::vector<PathStep> rev;
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;
    PathStep s;
    s.forward = true;
    auto caret = tok.find('^');
    std::string name = tok;
    if (caret != std::string::npos) {
      std::string exp = tok.substr(caret + 1);
      if (exp != "-1")
        throw std::invalid_argument("only exponent -1 allowed, got '" + tok +
                                    "'");
      s.forward = false;
      name = tok.substr(0, caret);
    }
    s.edge = g.edge_by_name(name);
    rev.push_back(s);
  }
  if (rev.empty()) {
    if (base_if_empty < 0)
      throw std::invalid_argument("empty word needs a base vertex");
    return trivial(g, base_if_empty);
  }
  std::vector<PathStep> steps(rev.rbegin(), rev.rend());
  return GraphPath(g, std::move(steps));
}

}  // namespace rgmcg
