#pragma once

#include "rgmcg/path.hpp"

namespace rgmcg {

// The four elementary slide variants along a directed edge alpha.  L and R
// carry the moved end to the target end of alpha (landing on its left /
// right); mL ("-L") and mR ("-R") are their inverses and carry it to the
// start end.  Departure positions, in the linear order:
//   L : directly after  st(alpha)   ->  lands directly before ta(alpha)
//   mL: directly before ta(alpha)   ->  lands directly after  st(alpha)
//   R : directly before st(alpha)   ->  lands directly after  ta(alpha)
//   mR: directly after  ta(alpha)   ->  lands directly before st(alpha)
enum class SlideVariant { L, mL, R, mR };

SlideVariant inverse_variant(SlideVariant v);
std::string to_string(SlideVariant v);
SlideVariant parse_variant(const std::string& s);

struct SlideDescriptor {
  EdgeId along = -1;   // alpha
  SlideVariant variant = SlideVariant::L;
  HalfEdgeId moved = -1;  // the sliding end, belonging to an edge beta != alpha
  bool operator==(const SlideDescriptor&) const = default;
};

// Validates the departure adjacency (throws std::invalid_argument; a move
// that would be adjacent only across the cilium reports the crossing) and
// returns the graph with the end moved to its landing position.
RibbonGraph slide(const RibbonGraph& g, const SlideDescriptor& d);

// The inverse slide descriptor, valid on slide(g, d).
SlideDescriptor inverse_slide(const SlideDescriptor& d);

// Image of a path under the groupoid map of the slide: the moved edge beta is
// rewritten (target-end slides: beta -> alpha^{-/+1} o beta; start-end slides:
// beta -> beta o alpha^{+/-1}, upper sign for L/R), all other edges are kept.
// The result lives in the slid graph and is not freely reduced.
GraphPath transport(const RibbonGraph& before, const RibbonGraph& after,
                    const SlideDescriptor& d, const GraphPath& p);

}  // namespace rgmcg
