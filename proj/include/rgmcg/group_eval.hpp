#pragma once

#include <optional>

#include "rgmcg/faces.hpp"
#include "rgmcg/finite_group.hpp"
#include "rgmcg/relabel.hpp"

namespace rgmcg {

// The labelings of a graph's edges by elements of a finite group, enumerable
// within a state budget.
class GroupStateSpace {
 public:
  GroupStateSpace(const FiniteGroup& G, const RibbonGraph& g,
                  long long max_states = 10'000'000);

  const FiniteGroup& group() const { return G_; }
  const std::vector<EdgeId>& edges() const { return edges_; }
  long long size() const { return size_; }
  int slot(EdgeId e) const;  // position of e in edges()

  std::vector<int> decode(long long index) const;
  long long encode(const std::vector<int>& state) const;

  std::string state_to_json(const RibbonGraph& g,
                            const std::vector<int>& state) const;
  std::vector<int> state_from_json(const RibbonGraph& g,
                                   const std::string& text) const;

 private:
  FiniteGroup G_;  // held by value so the space owns its group
  std::vector<EdgeId> edges_;
  long long size_ = 1;
};

// Word evaluation on a labeling; auxiliary atoms resolved through aux.
int evaluate_word(const GroupStateSpace& sp, const PivotWord& w,
                  const std::vector<int>& state, int pivot,
                  const std::map<int, int>& aux = {});

// Apply a substitution operator; the result is laid out in `cod` slots.
std::vector<int> apply_relabeling(const GroupStateSpace& dom,
                                  const GroupStateSpace& cod,
                                  const Relabeling& r,
                                  const std::vector<int>& state, int pivot,
                                  const std::map<int, int>& aux = {});

// Emitted element of a walk on a labeling (reversed traversals contribute the
// pivot-twisted inverse of the label).
int face_holonomy(const GroupStateSpace& sp, const GraphPath& face,
                  const std::vector<int>& state, int pivot);

// States whose emission at the cilium of v is the identity, sorted.
std::vector<long long> coinvariant_states(const GroupStateSpace& sp,
                                          const RibbonGraph& g, VertexId v,
                                          int pivot);

// Orbit decomposition of the coinvariant states under the simultaneous
// conjugation action at the cilium of v.
struct GroupBiinvariants {
  std::vector<long long> coinv;  // sorted state indices
  std::vector<int> orbit_of;     // orbit id per coinv position
  std::vector<long long> reps;   // minimal member per orbit, by orbit id
  int orbit_index_of_state(long long state_index) const;  // -1 if absent
};
GroupBiinvariants biinvariants(const GroupStateSpace& sp, const RibbonGraph& g,
                               VertexId v, int pivot);

// Induced permutation of orbits; throws std::runtime_error if the operator
// does not descend (an equivariance bug).
std::vector<int> induced_action(const GroupStateSpace& sp,
                                const GroupBiinvariants& bi,
                                const Relabeling& op, int pivot);

// First labeling on which two operators disagree, if any.
std::optional<std::vector<int>> find_witness(const GroupStateSpace& sp,
                                             const Relabeling& a,
                                             const Relabeling& b, int pivot);

}  // namespace rgmcg
