#pragma once

#include "rgmcg/hopf.hpp"
#include "rgmcg/path.hpp"
#include "rgmcg/slide.hpp"

namespace rgmcg {

// Tensor power of an algebra over a graph's edge set.  Factors follow
// ascending edge id; the leftmost factor is the most significant digit in
// basis indexing.  Auxiliary algebra legs sit to the left of the edge legs
// (most significant) unless stated otherwise.
class HopfStateSpace {
 public:
  HopfStateSpace(const FinHopf& h, const RibbonGraph& g,
                 long long max_dim = 4096);

  const FinHopf& hopf() const { return h_; }
  const std::vector<EdgeId>& edges() const { return edges_; }
  long long dim() const { return dim_; }
  int slot(EdgeId e) const;

  std::vector<int> decode(long long index) const;
  long long encode(const std::vector<int>& legs) const;

 private:
  FinHopf h_;  // held by value so the space owns its algebra
  std::vector<EdgeId> edges_;
  long long dim_ = 1;
};

// Per-edge module and comodule structure maps.
struct EdgeOps {
  Matrix act_in;          // H(x)M -> M: left multiplication on the leg
  Matrix act_out;         // H(x)M -> M: right multiplication by S(h)
  Matrix coact_along;     // M -> H(x)M: emit first factor, keep second
  Matrix coact_against;   // M -> H(x)M: emit T(second), keep first
};
EdgeOps edge_module_ops(const HopfStateSpace& sp, EdgeId e);

// Action of the algebra at a ciliated vertex: the argument is split by
// iterated comultiplication, the leftmost factor feeding the end closest to
// the cilium; incoming ends multiply from the left, outgoing ends from the
// right through the antipode.
Matrix vertex_action(const HopfStateSpace& sp, const RibbonGraph& g,
                     VertexId v);

// Coaction collecting the walk's emission on a new left leg; reversed steps
// contribute through the orientation involution T.
Matrix face_coaction(const HopfStateSpace& sp, const GraphPath& face);

// Right-handed variant tau o (T (x) 1) o face_coaction, with the emission leg
// on the right (least significant).
Matrix right_face_coaction(const HopfStateSpace& sp, const GraphPath& face);

// Leg bookkeeping between spaces differing by one edge, and on the auxiliary
// left leg.
Matrix insert_edge_leg(const HopfStateSpace& from, const HopfStateSpace& to,
                       EdgeId e);  // unit into the new slot
Matrix remove_edge_leg(const HopfStateSpace& from, const HopfStateSpace& to,
                       EdgeId e);  // counit on the dropped slot
Matrix counit_first_leg(const HopfStateSpace& sp);  // H(x)M -> M
Matrix unit_first_leg(const HopfStateSpace& sp);    // M -> H(x)M

// Linear realization of one elementary slide on the space of the domain
// graph: a factor split off the slid-along edge relabels the moved end's
// edge, from the left at a target end and from the right through S at a
// start end.
Matrix slide_matrix(const HopfStateSpace& sp, const RibbonGraph& g,
                    const SlideDescriptor& d);

}  // namespace rgmcg
