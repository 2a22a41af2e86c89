#pragma once

#include <map>
#include <optional>
#include <string>

#include "rgmcg/graph.hpp"
#include "rgmcg/hopf.hpp"
#include "rgmcg/linear_ops.hpp"
#include "rgmcg/matrix.hpp"
#include "rgmcg/moves.hpp"
#include "rgmcg/path.hpp"
#include "rgmcg/relabel.hpp"
#include "rgmcg/slide.hpp"

namespace rgmcg {

enum class Backend { symbolic, linear };

std::string to_string(Backend b);

// A holonomy-transforming map between the label spaces of two ribbon graphs.
// Symbolic operators carry a Relabeling: each edge label of the codomain
// graph written as a word in the domain labels, valid over any group (or any
// pivotal Hopf algebra in which the labels are grouplike).  Linear operators
// carry an exact matrix between tensor-power state spaces of a fixed
// finite-dimensional algebra.  Operators remember an inverse whenever their
// construction provides one, so composites stay invertible without symbolic
// solving or matrix inversion.
class Operator {
 public:
  Backend backend() const { return backend_; }
  const RibbonGraph& dom() const { return dom_; }
  const RibbonGraph& cod() const { return cod_; }

  const Relabeling& sym() const;  // throws std::logic_error on linear backend
  const Matrix& lin() const;      // throws std::logic_error on symbolic backend

  bool invertible() const;
  Operator inverse() const;  // throws std::logic_error when not recorded

  // Composition in diagram order: (*this) first, then `next`.  Requires
  // matching backends and cod() == next.dom().
  Operator then(const Operator& next) const;
  // Iterated composition; requires dom() == cod().  Negative powers use the
  // recorded inverse, pow(0) is the identity.
  Operator pow(int k) const;

  // Same backend, same endpoint graphs, same forward payload.  For the
  // symbolic backend this is free-word equality edge by edge, which separates
  // exactly the operators that act differently on some group-valued labeling.
  bool same_map(const Operator& o) const;

  std::string to_string() const;
  std::string to_json() const;

  static Operator symbolic_op(RibbonGraph dom, RibbonGraph cod, Relabeling fwd,
                              std::optional<Relabeling> bwd = std::nullopt);
  static Operator linear_op(RibbonGraph dom, RibbonGraph cod, Matrix fwd,
                            std::optional<Matrix> bwd = std::nullopt);
  // Returns a copy of *this that records `bwd` as its inverse (and *this as
  // the inverse of the copy's inverse).  Checks endpoint graphs only; the
  // cancellation itself is the caller's claim.
  Operator with_inverse(const Operator& bwd) const;

 private:
  Operator() = default;
  Backend backend_ = Backend::symbolic;
  RibbonGraph dom_, cod_;
  std::optional<Relabeling> sym_, sym_inv_;
  std::optional<Matrix> lin_, lin_inv_;
};

// Builds operators for one backend.  The symbolic compiler needs no further
// data; the linear compiler fixes the algebra whose tensor powers label the
// graphs, and refuses state spaces larger than max_dim.
class Compiler {
 public:
  static Compiler symbolic();
  static Compiler linear(FinHopf algebra, long long max_dim = 4096);

  Backend backend() const { return backend_; }
  const FinHopf& algebra() const;  // throws std::logic_error on symbolic

  Operator identity(const RibbonGraph& g) const;

  // --- elementary moves ---------------------------------------------------

  // Single edge slide; the inverse is the inverse slide on the slid graph.
  Operator slide_op(const RibbonGraph& g, const SlideDescriptor& d) const;
  // Slides one end along a face path, one slide per step.
  Operator face_slide_op(const RibbonGraph& g, const GraphPath& gamma,
                         HalfEdgeId moved) const;
  // Swaps the roles of the two ends of an edge; the label is rewritten
  // through the pivot-twisted inverse.  Self-inverse up to the codomain
  // graph's own reversal.
  Operator reverse_op(const RibbonGraph& g, EdgeId e) const;

  // Unit: a new loop (or pendant edge) labeled trivially.  Not invertible.
  Operator insert_loop_op(const RibbonGraph& g, VertexId v, int position,
                          const std::string& name = "") const;
  Operator insert_pendant_op(const RibbonGraph& g, VertexId v, int position,
                             const std::string& name = "",
                             bool target_at_base = false) const;
  // Counit: forgets one edge label.  Not invertible.
  Operator remove_edge_op(const RibbonGraph& g, EdgeId e) const;

  // Adds an edge parallel to the face path gamma: a trivial loop at the
  // start of gamma whose target end then slides along the whole path.  The
  // new edge's label ends up carrying gamma's holonomy.
  Operator add_edge_op(const RibbonGraph& g, const GraphPath& gamma,
                       const std::string& name = "") const;

  // Transport along a renaming isomorphism from -> to.  edge_map sends each
  // edge of `from` to the matching edge of `to`; the map must preserve
  // vertices, end roles, and cyclic order with cilia.
  Operator identify_op(const RibbonGraph& from, const RibbonGraph& to,
                       const std::map<EdgeId, EdgeId>& edge_map) const;

  // --- Dehn twists --------------------------------------------------------

  // Twist along a loop whose two ends cut out an arc of the vertex order:
  // every end strictly between them slides once around the loop.
  Operator twist_loop_op(const RibbonGraph& g, EdgeId beta) const;
  // Same map, built by first bundling the enclosed ends onto a pendant edge,
  // twisting that single strand, and unbundling.
  Operator bundled_twist_loop_op(const RibbonGraph& g, EdgeId beta) const;

  // Twist along a closed face path phi: add a parallel edge, twist along it,
  // forget it.
  Operator twist_facepath_op(const RibbonGraph& g, const GraphPath& phi) const;

  // Twist along the curve gamma_{i,j} (1 <= i < j) of the genus-g, n-face
  // standard graph, which is not a face path there: both defining paths
  // delta_i, delta_j get parallel edges, a slide sequence makes the curve a
  // face path, and the twist transports back.  The two slide routes give the
  // same operator; `alternative_route` picks the second for cross-checking.
  Operator twist_gamma_op(int genus, int faces, int i, int j,
                          bool alternative_route = false) const;

  // One generating twist of the standard graph by name: "D_alpha_i" for the
  // handle loops, "D_delta_k" and "D_gamma_k_l" for the curve family indexed
  // by 0..n+2g-2, and for the closed torus the aliases "D_a", "D_b".
  Operator named_twist(int genus, int faces, const std::string& name) const;
  // All generating twists, keyed by the names named_twist accepts.
  std::map<std::string, Operator> generating_twists(int genus, int faces) const;

  // Parses a composite like "D_b D_a D_b" or "(D_delta_0^3 D_alpha_2)^3"
  // over the generating twists; juxtaposition composes right to left.
  Operator mcg_word_op(int genus, int faces, const std::string& word) const;

  // Conjugation of all labels at v by the (pivot-twisted inverse of the)
  // holonomy of the given face: act after extracting the face value on an
  // auxiliary strand.  Dom and cod are both g.
  Operator holonomy_conjugation(const RibbonGraph& g, VertexId v,
                                const GraphPath& face) const;

 private:
  Compiler() = default;
  Operator unit_edge_op(const RibbonGraph& before, const RibbonGraph& after,
                        EdgeId e) const;
  Operator counit_edge_op(const RibbonGraph& before, const RibbonGraph& after,
                          EdgeId e) const;
  Operator add_edge_op_from(const RibbonGraph& g, const EdgeToFacePath& r) const;
  HopfStateSpace space(const RibbonGraph& g) const;

  Backend backend_ = Backend::symbolic;
  std::optional<FinHopf> algebra_;
  long long max_dim_ = 4096;
};

}  // namespace rgmcg
