#pragma once

#include <optional>
#include <vector>

#include "rgmcg/path.hpp"

namespace rgmcg {

// The step that follows s on its face: enter the sink of s through the arrival
// end, leave through the end directly before it in the cyclic order.
PathStep face_successor(const RibbonGraph& g, const PathStep& s);
// True iff taking the face successor after s wraps past the cilium gap of the
// sink vertex (i.e. the arrival end sits at position 0).
bool face_successor_crosses_cilium(const RibbonGraph& g, const PathStep& s);

// All faces as closed walks, one per orbit of face_successor, each rotated so
// its step sequence is lexicographically minimal, sorted among themselves.
// Every edge is traversed exactly once in each direction across all faces.
std::vector<GraphPath> faces(const RibbonGraph& g);

// True iff consecutive steps follow face_successor and no edge is traversed
// more than once per direction.  Empty and single-step paths qualify.
bool is_face_path(const RibbonGraph& g, const GraphPath& p);

// True iff p is a closed face path whose wrap-around transition is also a
// left turn, i.e. every cyclic rotation of p is a face path (a full face with
// a chosen basepoint).
bool is_ciliated_face(const RibbonGraph& g, const GraphPath& p);

// Genus from the Euler characteristic of the thickened surface.  Requires a
// connected graph; throws std::invalid_argument otherwise.
int genus(const RibbonGraph& g);

// The face through the cilium of v, based directly after the crossing (the
// first step is the one departing across the cilium gap).  Throws if no face
// crosses the cilium of v or if it crosses it more than once.
GraphPath ciliated_face_at(const RibbonGraph& g, VertexId v);

// All cilium crossings of the face containing step s0, as base rotations.
std::vector<VertexId> cilia_crossed_by_face(const RibbonGraph& g,
                                            const GraphPath& face);

}  // namespace rgmcg
