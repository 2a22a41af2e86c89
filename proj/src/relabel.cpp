#include "rgmcg/relabel.hpp"

#include <sstream>
#include <stdexcept>

namespace rgmcg {

Relabeling Relabeling::identity_on(const RibbonGraph& g) {
  Relabeling r;
  for (const Edge& e : g.edges()) r.words_[e.id] = PivotWord::atom(e.id);
  return r;
}

Relabeling Relabeling::identity_on(const std::vector<EdgeId>& edges) {
  Relabeling r;
  for (EdgeId e : edges) r.words_[e] = PivotWord::atom(e);
  return r;
}

const PivotWord& Relabeling::word_for(EdgeId e) const {
  auto it = words_.find(e);
  if (it == words_.end())
    throw std::out_of_range("relabeling has no word for edge " +
                            std::to_string(e));
  return it->second;
}

Relabeling Relabeling::then(const Relabeling& next) const {
  Relabeling out;
  for (const auto& [e, w] : next.words_) out.words_[e] = w.substituted(words_);
  return out;
}

std::string Relabeling::to_string(const RibbonGraph& g) const {
  auto name = [&](int atom) {
    if (atom >= 0) return g.edge_name(atom);
    return std::string("h") + (atom == -1 ? "" : std::to_string(-atom));
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, w] : words_) {
    if (!first) os << '\n';
    first = false;
    os << name(e) << " -> " << w.to_string(name);
  }
  return os.str();
}

PivotWord step_emission(const PathStep& s,
                        const std::map<EdgeId, PivotWord>& labels) {
  auto it = labels.find(s.edge);
  PivotWord label =
      (it != labels.end()) ? it->second : PivotWord::atom(s.edge);
  return s.forward ? label : label.twisted_inverse();
}

PivotWord symbolic_emission(const GraphPath& path,
                            const std::map<EdgeId, PivotWord>& labels) {
  PivotWord acc;
  for (const PathStep& s : path.steps()) acc = step_emission(s, labels) * acc;
  return acc;
}

Relabeling symbolic_vertex_action(const RibbonGraph& g, VertexId v,
                                  int h_atom) {
  if (h_atom >= 0)
    throw std::invalid_argument("auxiliary atom must be negative");
  Relabeling r = Relabeling::identity_on(g);
  for (HalfEdgeId h : g.vertex(v).order) {
    const EndRef& ref = g.end(h);
    PivotWord w = r.word_for(ref.edge);
    if (ref.is_target) {
      r.set(ref.edge, PivotWord::atom(h_atom) * w);
    } else {
      r.set(ref.edge, w * PivotWord::atom(h_atom, true));
    }
  }
  return r;
}

}  // namespace rgmcg
