#include "rgmcg/slide.hpp"

#include <algorithm>
#include <stdexcept>

namespace rgmcg {

SlideVariant inverse_variant(SlideVariant v) {
  switch (v) {
    case SlideVariant::L: return SlideVariant::mL;
    case SlideVariant::mL: return SlideVariant::L;
    case SlideVariant::R: return SlideVariant::mR;
    case SlideVariant::mR: return SlideVariant::R;
  }
  throw std::logic_error("bad variant");
}

std::string to_string(SlideVariant v) {
  switch (v) {
    case SlideVariant::L: return "L";
    case SlideVariant::mL: return "-L";
    case SlideVariant::R: return "R";
    case SlideVariant::mR: return "-R";
  }
  throw std::logic_error("bad variant");
}

SlideVariant parse_variant(const std::string& s) {
  if (s == "L") return SlideVariant::L;
  if (s == "-L" || s == "mL") return SlideVariant::mL;
  if (s == "R") return SlideVariant::R;
  if (s == "-R" || s == "mR") return SlideVariant::mR;
  throw std::invalid_argument("unknown slide variant '" + s + "'");
}

namespace {

struct SlideGeometry {
  HalfEdgeId depart_anchor;  // end of alpha next to which the move begins
  int depart_offset;         // required position of moved relative to anchor
  HalfEdgeId land_anchor;    // end of alpha next to which the move finishes
  int land_offset;           // 0: directly before anchor, +1: directly after
};

SlideGeometry geometry(const RibbonGraph& g, const SlideDescriptor& d) {
  const Edge& alpha = g.edge(d.along);
  switch (d.variant) {
    case SlideVariant::L:
      return {alpha.start, +1, alpha.target, 0};
    case SlideVariant::mL:
      return {alpha.target, -1, alpha.start, +1};
    case SlideVariant::R:
      return {alpha.start, -1, alpha.target, +1};
    case SlideVariant::mR:
      return {alpha.target, +1, alpha.start, 0};
  }
  throw std::logic_error("bad variant");
}

}  // namespace

RibbonGraph slide(const RibbonGraph& g, const SlideDescriptor& d) {
  const EndRef& mref = g.end(d.moved);
  if (mref.edge == d.along)
    throw std::invalid_argument("cannot slide an end of " +
                                g.edge_name(d.along) + " along itself");
  SlideGeometry geo = geometry(g, d);
  const EndRef& aref = g.end(geo.depart_anchor);
  if (mref.vertex != aref.vertex)
    throw std::invalid_argument(
        "slide " + to_string(d.variant) + " along " + g.edge_name(d.along) +
        ": moved end is not at the departure vertex");
  int deg = g.degree(aref.vertex);
  int want = aref.position + geo.depart_offset;
  if (mref.position != want) {
    if ((mref.position - aref.position - geo.depart_offset) % deg == 0)
      throw std::invalid_argument(
          "slide " + to_string(d.variant) + " along " + g.edge_name(d.along) +
          ": departure would cross the cilium of vertex " +
          std::to_string(aref.vertex));
    throw std::invalid_argument(
        "slide " + to_string(d.variant) + " along " + g.edge_name(d.along) +
        ": moved end is not directly " +
        (geo.depart_offset > 0 ? "after" : "before") + " the " +
        (g.end(geo.depart_anchor).is_target ? "target" : "start") + " end");
  }

  std::vector<Vertex> vs = g.vertices();
  auto vertex_of = [&](VertexId id) -> Vertex& {
    for (Vertex& v : vs)
      if (v.id == id) return v;
    throw std::logic_error("vertex vanished");
  };
  Vertex& src = vertex_of(mref.vertex);
  src.order.erase(src.order.begin() + mref.position);

  const EndRef& lref = g.end(geo.land_anchor);
  Vertex& dst = vertex_of(lref.vertex);
  auto it = std::find(dst.order.begin(), dst.order.end(), geo.land_anchor);
  if (it == dst.order.end()) throw std::logic_error("landing anchor vanished");
  dst.order.insert(it + geo.land_offset, d.moved);

  return RibbonGraph(std::move(vs), g.edges(), g.edge_names());
}

SlideDescriptor inverse_slide(const SlideDescriptor& d) {
  SlideDescriptor inv = d;
  inv.variant = inverse_variant(d.variant);
  return inv;
}

GraphPath transport(const RibbonGraph& before, const RibbonGraph& after,
                    const SlideDescriptor& d, const GraphPath& p) {
  const EndRef& mref = before.end(d.moved);
  EdgeId beta = mref.edge;
  bool plus_variant =
      d.variant == SlideVariant::L || d.variant == SlideVariant::R;
  std::vector<PathStep> out;
  for (const PathStep& s : p.steps()) {
    if (s.edge != beta) {
      out.push_back(s);
      continue;
    }
    PathStep alpha_step{d.along, !plus_variant};
    if (mref.is_target) {
      // beta -> alpha^{-/+1} o beta: beta first, then alpha.
      if (s.forward) {
        out.push_back(s);
        out.push_back(alpha_step);
      } else {
        out.push_back(PathStep{d.along, plus_variant});
        out.push_back(s);
      }
    } else {
      // beta -> beta o alpha^{+/-1}: alpha first, then beta.
      if (s.forward) {
        out.push_back(PathStep{d.along, plus_variant});
        out.push_back(s);
      } else {
        out.push_back(s);
        out.push_back(alpha_step);
      }
    }
  }
  if (out.empty()) return GraphPath::trivial(after, p.start());
  return GraphPath(after, std::move(out));
}

}  // namespace rgmcg
