#include "rgmcg/group_eval.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace rgmcg {

GroupStateSpace::GroupStateSpace(const FiniteGroup& G, const RibbonGraph& g,
                                 long long max_states)
    : G_(G) {
  for (const Edge& e : g.edges()) edges_.push_back(e.id);
  std::sort(edges_.begin(), edges_.end());
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (size_ > max_states / G.order())
      throw std::runtime_error("state budget exceeded: " +
                               std::to_string(G.order()) + "^" +
                               std::to_string(edges_.size()) + " labelings");
    size_ *= G.order();
  }
}

int GroupStateSpace::slot(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e)
    throw std::out_of_range("edge " + std::to_string(e) +
                            " not in state space");
  return static_cast<int>(it - edges_.begin());
}

std::vector<int> GroupStateSpace::decode(long long index) const {
  std::vector<int> out(edges_.size());
  for (size_t i = 0; i < edges_.size(); ++i) {
    out[i] = static_cast<int>(index % G_.order());
    index /= G_.order();
  }
  return out;
}

long long GroupStateSpace::encode(const std::vector<int>& state) const {
  if (state.size() != edges_.size())
    throw std::invalid_argument("state has wrong arity");
  long long idx = 0;
  for (size_t i = edges_.size(); i-- > 0;)
    idx = idx * G_.order() + state[i];
  return idx;
}

std::string GroupStateSpace::state_to_json(const RibbonGraph& g,
                                           const std::vector<int>& state) const {
  nlohmann::ordered_json j;
  for (size_t i = 0; i < edges_.size(); ++i)
    j[g.edge_name(edges_[i])] = G_.name(state[i]);
  return j.dump();
}

std::vector<int> GroupStateSpace::state_from_json(const RibbonGraph& g,
                                                  const std::string& text) const {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<int> out(edges_.size(), G_.identity());
  for (auto& [key, val] : j.items()) {
    int s = slot(g.edge_by_name(key));
    out[s] = G_.element_by_name(val.get<std::string>());
  }
  return out;
}

// Words carry the pivot as a single hoisted power, which is only sound when
// the pivot commutes with everything; for group labels the pivotal axiom
// admits exactly the central elements, so reject anything else up front.
static void require_central(const FiniteGroup& G, int pivot) {
  if (pivot != G.identity() && !G.is_central(pivot))
    throw std::invalid_argument("pivot " + G.name(pivot) + " is not central in " +
                                G.group_name());
}

int evaluate_word(const GroupStateSpace& sp, const PivotWord& w,
                  const std::vector<int>& state, int pivot,
                  const std::map<int, int>& aux) {
  const FiniteGroup& G = sp.group();
  require_central(G, pivot);
  int acc = G.pow(pivot, w.pivot());
  for (const Letter& l : w.letters()) {
    int x;
    if (l.atom >= 0) {
      x = state[sp.slot(l.atom)];
    } else {
      auto it = aux.find(l.atom);
      if (it == aux.end())
        throw std::invalid_argument("unbound auxiliary atom");
      x = it->second;
    }
    if (l.inv) x = G.inv(x);
    acc = G.mul(acc, x);
  }
  return acc;
}

std::vector<int> apply_relabeling(const GroupStateSpace& dom,
                                  const GroupStateSpace& cod,
                                  const Relabeling& r,
                                  const std::vector<int>& state, int pivot,
                                  const std::map<int, int>& aux) {
  std::vector<int> out(cod.edges().size(), cod.group().identity());
  for (EdgeId e : cod.edges())
    out[cod.slot(e)] = evaluate_word(dom, r.word_for(e), state, pivot, aux);
  return out;
}

int face_holonomy(const GroupStateSpace& sp, const GraphPath& face,
                  const std::vector<int>& state, int pivot) {
  const FiniteGroup& G = sp.group();
  require_central(G, pivot);
  int acc = G.identity();
  for (const PathStep& s : face.steps()) {
    int x = state[sp.slot(s.edge)];
    // Emission accumulates with the first-traversed factor rightmost.
    int factor = s.forward ? x : G.mul(pivot, G.inv(x));
    acc = G.mul(factor, acc);
  }
  return acc;
}

std::vector<long long> coinvariant_states(const GroupStateSpace& sp,
                                          const RibbonGraph& g, VertexId v,
                                          int pivot) {
  GraphPath face = ciliated_face_at(g, v);
  std::vector<long long> out;
  for (long long i = 0; i < sp.size(); ++i) {
    std::vector<int> st = sp.decode(i);
    if (face_holonomy(sp, face, st, pivot) == sp.group().identity())
      out.push_back(i);
  }
  return out;
}

int GroupBiinvariants::orbit_index_of_state(long long state_index) const {
  auto it = std::lower_bound(coinv.begin(), coinv.end(), state_index);
  if (it == coinv.end() || *it != state_index) return -1;
  return orbit_of[it - coinv.begin()];
}

GroupBiinvariants biinvariants(const GroupStateSpace& sp, const RibbonGraph& g,
                               VertexId v, int pivot) {
  GroupBiinvariants bi;
  bi.coinv = coinvariant_states(sp, g, v, pivot);
  const FiniteGroup& G = sp.group();

  // Union-find over coinvariant positions.
  std::vector<int> parent(bi.coinv.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto pos_of = [&](long long idx) {
    auto it = std::lower_bound(bi.coinv.begin(), bi.coinv.end(), idx);
    if (it == bi.coinv.end() || *it != idx)
      throw std::runtime_error(
          "conjugation left the coinvariant set (coaction bug)");
    return static_cast<int>(it - bi.coinv.begin());
  };

  Relabeling act = symbolic_vertex_action(g, v, -1);
  for (size_t i = 0; i < bi.coinv.size(); ++i) {
    std::vector<int> st = sp.decode(bi.coinv[i]);
    for (int h = 0; h < G.order(); ++h) {
      std::vector<int> img =
          apply_relabeling(sp, sp, act, st, pivot, {{-1, h}});
      int j = pos_of(sp.encode(img));
      int ra = find(static_cast<int>(i)), rb = find(j);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  bi.orbit_of.assign(bi.coinv.size(), -1);
  for (size_t i = 0; i < bi.coinv.size(); ++i) {
    int root = find(static_cast<int>(i));
    if (bi.orbit_of[root] < 0) {
      bi.orbit_of[root] = static_cast<int>(bi.reps.size());
      bi.reps.push_back(bi.coinv[root]);
    }
    bi.orbit_of[i] = bi.orbit_of[root];
  }
  return bi;
}

std::vector<int> induced_action(const GroupStateSpace& sp,
                                const GroupBiinvariants& bi,
                                const Relabeling& op, int pivot) {
  std::vector<int> image(bi.reps.size(), -1);
  for (size_t i = 0; i < bi.coinv.size(); ++i) {
    std::vector<int> st = sp.decode(bi.coinv[i]);
    std::vector<int> img = apply_relabeling(sp, sp, op, st, pivot);
    int target = bi.orbit_index_of_state(sp.encode(img));
    if (target < 0)
      throw std::runtime_error(
          "operator image left the coinvariant set (equivariance bug)");
    int orbit = bi.orbit_of[i];
    if (image[orbit] < 0) {
      image[orbit] = target;
    } else if (image[orbit] != target) {
      throw std::runtime_error(
          "operator is not well-defined on orbits (equivariance bug)");
    }
  }
  return image;
}

std::optional<std::vector<int>> find_witness(const GroupStateSpace& sp,
                                             const Relabeling& a,
                                             const Relabeling& b, int pivot) {
  for (long long i = 0; i < sp.size(); ++i) {
    std::vector<int> st = sp.decode(i);
    if (apply_relabeling(sp, sp, a, st, pivot) !=
        apply_relabeling(sp, sp, b, st, pivot))
      return st;
  }
  return std::nullopt;
}

}  // namespace rgmcg
