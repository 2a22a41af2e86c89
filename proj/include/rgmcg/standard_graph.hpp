#pragma once

#include <map>

#include "rgmcg/path.hpp"

namespace rgmcg {

// The reference graph for a genus-g surface with n boundary components: one
// baseline vertex (id 0) carrying, in linear order, a block
// [st m_i, ta n_i, ta m_i] per boundary i = 1..n followed by a block
// [st a_j, st b_j, ta a_j, ta b_j] per handle j = 1..g, plus one univalent
// vertex (id i) per boundary holding st n_i.  Edge names: "m1","n1",...,
// "a1","b1",...  It has n+1 faces and genus g.
RibbonGraph standard_graph(int g, int n);

// The distinguished closed paths at the baseline vertex, freely reduced:
//   alpha_j           core of handle j                  (1 <= j <= g)
//   delta_k           k = 0 .. n+2g-2
//   gamma_{k,l}       written "gamma_k_l", k != l, both in 0 .. n+2g-2
// For 1 <= k < l <= n+2g-2 the path gamma_{k,l} is not a face path; every
// other entry is.
std::map<std::string, GraphPath> generator_paths(int g, int n);

// Individual accessors (same names as the map keys).
GraphPath generator_path(const RibbonGraph& gr, int g, int n,
                         const std::string& name);

}  // namespace rgmcg
