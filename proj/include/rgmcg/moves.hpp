#pragma once

#include "rgmcg/faces.hpp"
#include "rgmcg/slide.hpp"

namespace rgmcg {

struct AddedEdge {
  RibbonGraph graph;
  EdgeId edge = -1;
};

// Insert a loop at v whose two ends are adjacent, target end directly before
// start end, with the target end placed at `position` in the linear order.
AddedEdge add_loop(const RibbonGraph& g, VertexId v, int position,
                   const std::string& name = "");

// Insert an edge from v to a fresh univalent vertex, with the end at v placed
// at `position`.  By default the edge points at the univalent vertex (its
// start end sits at v); pass target_at_base = true for the opposite direction.
AddedEdge add_pendant(const RibbonGraph& g, VertexId v, int position,
                      const std::string& name = "",
                      bool target_at_base = false);

// Remove an edge.  Endpoint vertices left without any ends are dropped.
RibbonGraph remove_edge(const RibbonGraph& g, EdgeId e);

// Swap the roles of the two ends of an edge; both ends keep their positions,
// so the underlying surface is unchanged.
RibbonGraph reverse_edge(const RibbonGraph& g, EdgeId e);

// Slide the end `moved` along the face path gamma: one elementary slide per
// step, in traversal order (forward steps are L slides, backward steps are -R
// slides).  `moved` must sit directly after the departure end of the first
// step and must not belong to an edge traversed by gamma.
struct FacePathSlide {
  RibbonGraph graph;                    // final graph
  std::vector<SlideDescriptor> slides;  // in application order
};
FacePathSlide slide_along_face_path(const RibbonGraph& g,
                                    const GraphPath& gamma, HalfEdgeId moved);

// Add a parallel edge gamma' to the face path gamma: insert a loop at the
// start of gamma directly after the departure end of its first step, then
// slide the target end of gamma' along gamma.  gamma'^-1 o gamma becomes a
// ciliated face of the result.
struct EdgeToFacePath {
  RibbonGraph inserted;                 // right after the loop insertion
  RibbonGraph graph;                    // after the slides
  EdgeId new_edge = -1;                 // gamma'
  std::vector<SlideDescriptor> slides;  // the slides, valid from `inserted` on
};
EdgeToFacePath add_edge_to_face_path(const RibbonGraph& g,
                                     const GraphPath& gamma,
                                     const std::string& name = "");

// Path translation for add_edge_to_face_path: every contiguous occurrence of
// gamma (or its inverse) in p is replaced by the single new edge; a path that
// does not traverse gamma is returned unchanged.
GraphPath translate_after_adding(const RibbonGraph& after, const GraphPath& p,
                                 const GraphPath& gamma, EdgeId new_edge);

}  // namespace rgmcg
