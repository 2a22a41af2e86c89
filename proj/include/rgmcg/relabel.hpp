#pragma once

#include "rgmcg/path.hpp"
#include "rgmcg/word.hpp"

namespace rgmcg {

// A substitution operator on edge labelings: each codomain edge carries a
// word in the domain edges' labels (edge atoms >= 0) and possibly auxiliary
// atoms.  This is the group-valued ("symbolic") payload of graph operators:
// slides, twists, unit/counit moves and their composites all take this form.
class Relabeling {
 public:
  Relabeling() = default;
  static Relabeling identity_on(const RibbonGraph& g);
  static Relabeling identity_on(const std::vector<EdgeId>& edges);

  const std::map<EdgeId, PivotWord>& words() const { return words_; }
  const PivotWord& word_for(EdgeId e) const;  // throws std::out_of_range
  bool has(EdgeId e) const { return words_.count(e) != 0; }
  void set(EdgeId e, PivotWord w) { words_[e] = std::move(w); }
  void drop(EdgeId e) { words_.erase(e); }

  // next o *this: apply *this first.  Codomain edges of `next` are kept and
  // their words rewritten through *this; auxiliary atoms pass through.
  Relabeling then(const Relabeling& next) const;

  bool operator==(const Relabeling&) const = default;

  // One line per edge, sorted by edge id: "b1 -> b1 a1^-1".
  std::string to_string(const RibbonGraph& g) const;

 private:
  std::map<EdgeId, PivotWord> words_;
};

// Emission factor of a single traversal: the label itself for a forward step,
// its pivot-twisted inverse for a backward step.
PivotWord step_emission(const PathStep& s,
                        const std::map<EdgeId, PivotWord>& labels);

// Total emitted word of a walk, last-traversed factor leftmost.  With empty
// `labels` every edge stands for its own atom.
PivotWord symbolic_emission(const GraphPath& path,
                            const std::map<EdgeId, PivotWord>& labels = {});

// Simultaneous action at the cilium of v by a formal group element carried by
// the auxiliary atom h_atom (< 0): every label gains a left factor h per
// incoming end at v and a right factor h^-1 per outgoing end at v.
Relabeling symbolic_vertex_action(const RibbonGraph& g, VertexId v,
                                  int h_atom);

}  // namespace rgmcg
