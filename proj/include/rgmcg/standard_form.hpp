#pragma once

#include <optional>

#include "rgmcg/moves.hpp"

namespace rgmcg {

// Swap the roles of the two ends of an edge; vertex orders are untouched.
RibbonGraph reverse_edge(const RibbonGraph& g, EdgeId e);

struct GraphMove {
  enum class Kind { Slide, Reverse };
  Kind kind = Kind::Slide;
  SlideDescriptor slide;
  EdgeId reversed = -1;
};

struct StandardForm {
  RibbonGraph graph;
  std::vector<GraphMove> log;  // legal moves, none crossing a cilium
  int genus = 0;
  int boundaries = 0;
};

// If g is shaped like a reference surface graph (one core vertex carrying
// boundary triples [st m, ta n, ta m] followed by handle quadruples
// [st a, st b, ta a, ta b], plus one univalent tip per boundary), returns its
// (genus, boundaries).
std::optional<std::pair<int, int>> standard_shape(const RibbonGraph& g);

// Reduce a connected graph with one cilium per face (counted: faces ==
// vertices) to the reference shape by slides and edge reversals only.
// Throws std::invalid_argument when the graph cannot be reduced.
StandardForm standard_form(const RibbonGraph& g);

}  // namespace rgmcg
