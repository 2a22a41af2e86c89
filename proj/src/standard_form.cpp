#include "rgmcg/standard_form.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rgmcg/faces.hpp"

namespace rgmcg {

RibbonGraph reverse_edge(const RibbonGraph& g, EdgeId e) {
  if (!g.has_edge(e)) throw std::invalid_argument("reverse_edge: unknown edge");
  std::vector<Edge> edges = g.edges();
  for (Edge& ed : edges)
    if (ed.id == e) std::swap(ed.start, ed.target);
  return RibbonGraph(g.vertices(), edges, g.edge_names());
}

std::optional<std::pair<int, int>> standard_shape(const RibbonGraph& g) {
  VertexId core = -1;
  int tips = 0;
  for (const Vertex& v : g.vertices()) {
    if (v.order.size() == 1) {
      ++tips;
    } else {
      if (core >= 0) return std::nullopt;  // at most one multivalent vertex
      core = v.id;
    }
  }
  if (core < 0) return std::nullopt;
  const Vertex& x = g.vertex(core);
  const int deg = static_cast<int>(x.order.size());
  auto loop_at_core = [&](EdgeId e) {
    const Edge& ed = g.edge(e);
    return g.end(ed.start).vertex == core && g.end(ed.target).vertex == core;
  };

  int i = 0, boundaries = 0, genus = 0;
  std::set<VertexId> used_tips;
  // boundary triples [st m, ta n, ta m] with n reaching a univalent tip
  while (i + 3 <= deg) {
    const EndRef& r0 = g.end(x.order[i]);
    const EndRef& r1 = g.end(x.order[i + 1]);
    if (r0.is_target || !loop_at_core(r0.edge)) break;
    if (g.end(g.edge(r0.edge).target).position != i + 2) break;
    if (!r1.is_target || loop_at_core(r1.edge)) break;
    const EndRef& tip = g.end(g.edge(r1.edge).start);
    if (tip.vertex == core || g.degree(tip.vertex) != 1) break;
    if (!used_tips.insert(tip.vertex).second) break;
    i += 3;
    ++boundaries;
  }
  // handle quadruples [st a, st b, ta a, ta b]
  while (i < deg) {
    if (i + 4 > deg) return std::nullopt;
    const EndRef& ra = g.end(x.order[i]);
    const EndRef& rb = g.end(x.order[i + 1]);
    if (ra.is_target || rb.is_target) return std::nullopt;
    if (!loop_at_core(ra.edge) || !loop_at_core(rb.edge)) return std::nullopt;
    if (g.end(g.edge(ra.edge).target).position != i + 2) return std::nullopt;
    if (g.end(g.edge(rb.edge).target).position != i + 3) return std::nullopt;
    i += 4;
    ++genus;
  }
  if (boundaries == 0 && genus == 0) return std::nullopt;
  if (static_cast<int>(used_tips.size()) != tips) return std::nullopt;
  return std::make_pair(genus, boundaries);
}

namespace {

class Reducer {
 public:
  explicit Reducer(const RibbonGraph& g) : g_(g) {}

  StandardForm run() {
    if (g_.edges().empty())
      throw std::invalid_argument("standard_form: graph has no edges");
    if (!g_.connected())
      throw std::invalid_argument("standard_form: graph must be connected");
    if (faces(g_).size() != g_.vertices().size())
      throw std::invalid_argument(
          "standard_form: face count must equal vertex count");
    pick_core();
    collapse();
    orient_edges();
    pair_crossings();
    match_tips();
    arrange_units();
    order_tips();
    auto shape = standard_shape(g_);
    if (!shape)
      throw std::logic_error("standard_form: reduction missed the target shape");
    StandardForm out;
    out.graph = std::move(g_);
    out.log = std::move(log_);
    out.genus = shape->first;
    out.boundaries = shape->second;
    return out;
  }

 private:
  RibbonGraph g_;
  std::vector<GraphMove> log_;
  VertexId x_ = -1;
  std::vector<std::pair<EdgeId, EdgeId>> blocks_;   // crossing pairs (a, b)
  std::vector<std::pair<EdgeId, EdgeId>> triples_;  // boundary pairs (m, n)

  void do_slide(EdgeId along, SlideVariant variant, HalfEdgeId moved) {
    SlideDescriptor d{along, variant, moved};
    g_ = slide(g_, d);
    GraphMove m;
    m.kind = GraphMove::Kind::Slide;
    m.slide = d;
    log_.push_back(m);
  }

  void do_reverse(EdgeId e) {
    g_ = reverse_edge(g_, e);
    GraphMove m;
    m.kind = GraphMove::Kind::Reverse;
    m.reversed = e;
    log_.push_back(m);
  }

  int pos(HalfEdgeId h) const { return g_.end(h).position; }
  HalfEdgeId at(int p) const { return g_.at(x_, p); }

  bool is_core_loop(EdgeId e) const {
    const Edge& ed = g_.edge(e);
    return g_.end(ed.start).vertex == x_ && g_.end(ed.target).vertex == x_;
  }

  void pick_core() {
    int best = -1;
    for (const Vertex& v : g_.vertices()) {
      int d = static_cast<int>(v.order.size());
      if (d > best) {
        best = d;
        x_ = v.id;
      }
    }
  }

  // Phase 1: pull every end onto the core vertex.  Each round picks the
  // smallest multivalent vertex w joined to the core, orients the connecting
  // edge toward the core and slides all other ends at w along it; no slide
  // departs across the cilium at w because only linear neighbours of the
  // connecting end move.
  void collapse() {
    for (;;) {
      VertexId w = -1;
      EdgeId nu = -1;
      for (const Vertex& v : g_.vertices()) {
        if (v.id == x_ || v.order.size() <= 1) continue;
        EdgeId best = -1;
        for (HalfEdgeId h : v.order) {
          const EndRef& r = g_.end(h);
          const Edge& ed = g_.edge(r.edge);
          HalfEdgeId other = r.is_target ? ed.start : ed.target;
          if (g_.end(other).vertex == x_ && (best < 0 || r.edge < best))
            best = r.edge;
        }
        if (best >= 0) {
          w = v.id;
          nu = best;
          break;
        }
      }
      if (w < 0) break;
      if (g_.end(g_.edge(nu).target).vertex != x_) do_reverse(nu);
      for (;;) {
        int s = g_.end(g_.edge(nu).start).position;
        if (s + 1 < g_.degree(w)) {
          do_slide(nu, SlideVariant::L, g_.vertex(w).order[s + 1]);
        } else if (s > 0) {
          do_slide(nu, SlideVariant::R, g_.vertex(w).order[s - 1]);
        } else {
          break;
        }
      }
    }
    for (const Vertex& v : g_.vertices())
      if (v.id != x_ && v.order.size() != 1)
        throw std::logic_error("standard_form: collapse left a stray vertex");
  }

  // Loops run left to right (st before ta); tip edges point at the core.
  void orient_edges() {
    std::vector<EdgeId> ids;
    for (const Edge& ed : g_.edges()) ids.push_back(ed.id);
    for (EdgeId e : ids) {
      const Edge& ed = g_.edge(e);
      const EndRef& s = g_.end(ed.start);
      const EndRef& t = g_.end(ed.target);
      if (s.vertex == x_ && t.vertex == x_) {
        if (t.position < s.position) do_reverse(e);
      } else if (s.vertex == x_) {
        do_reverse(e);
      }
    }
  }

  // Phase 2: as long as two unpaired loops interleave (st a < st b < ta a <
  // ta b), register them as a handle pair and expel every other end from
  // their span.  Ends leave rightward past ta b or leftward past st a, one
  // slide each, so contiguous runs stay contiguous.
  void pair_crossings() {
    for (;;) {
      std::set<EdgeId> used;
      for (auto& [a, b] : blocks_) {
        used.insert(a);
        used.insert(b);
      }
      std::vector<EdgeId> chords;
      for (const Edge& ed : g_.edges())
        if (is_core_loop(ed.id) && !used.count(ed.id)) chords.push_back(ed.id);
      EdgeId alpha = -1, beta = -1;
      int best_sa = -1, best_sb = -1;
      for (EdgeId c : chords) {
        for (EdgeId d : chords) {
          if (c == d) continue;
          int sc = pos(g_.edge(c).start), tc = pos(g_.edge(c).target);
          int sd = pos(g_.edge(d).start), td = pos(g_.edge(d).target);
          if (!(sc < sd && sd < tc && tc < td)) continue;
          if (alpha < 0 || sc < best_sa || (sc == best_sa && sd < best_sb)) {
            alpha = c;
            beta = d;
            best_sa = sc;
            best_sb = sd;
          }
        }
      }
      if (alpha < 0) break;
      for (;;) {
        int sa = pos(g_.edge(alpha).start), ta = pos(g_.edge(alpha).target);
        int sb = pos(g_.edge(beta).start), tb = pos(g_.edge(beta).target);
        if (sb - sa > 1) {
          do_slide(beta, SlideVariant::R, at(sb - 1));
        } else if (tb - ta > 1) {
          do_slide(alpha, SlideVariant::mR, at(ta + 1));
        } else if (ta - sb > 1) {
          do_slide(beta, SlideVariant::L, at(sb + 1));
        } else {
          break;
        }
      }
      blocks_.push_back({alpha, beta});
      // Expelling a chord's two ends from the span can park them on opposite
      // sides, leaving the chord end-reversed; re-normalise so the next
      // round's interleaving test sees the true geometry.
      orient_edges();
    }
  }

  const std::pair<EdgeId, EdgeId>* block_of(EdgeId e) const {
    for (auto& b : blocks_)
      if (b.first == e || b.second == e) return &b;
    return nullptr;
  }

  const std::pair<EdgeId, EdgeId>* triple_of(EdgeId e) const {
    for (auto& t : triples_)
      if (t.first == e || t.second == e) return &t;
    return nullptr;
  }

  // Carry `moved` rightward past the unit whose leftmost end is `e`.
  void hop_right(HalfEdgeId moved, HalfEdgeId e) {
    const EndRef& r = g_.end(e);
    EdgeId c = r.edge;
    if (const auto* blk = block_of(c)) {
      auto [a, b] = *blk;
      if (e != g_.edge(a).start)
        throw std::logic_error("standard_form: broken handle pair");
      do_slide(a, SlideVariant::R, moved);
      do_slide(b, SlideVariant::mL, moved);
      do_slide(a, SlideVariant::mL, moved);
      do_slide(b, SlideVariant::R, moved);
    } else if (const auto* tr = triple_of(c)) {
      if (e != g_.edge(tr->first).start)
        throw std::logic_error("standard_form: broken boundary triple");
      do_slide(tr->first, SlideVariant::R, moved);
    } else if (is_core_loop(c)) {
      if (r.is_target)
        throw std::logic_error("standard_form: loop still crosses an enclosure");
      do_slide(c, SlideVariant::R, moved);
    } else {
      throw std::invalid_argument(
          "standard_form: two tips compete for one enclosing loop");
    }
  }

  // Carry `moved` leftward past the unit whose rightmost end is `e`.
  void hop_left(HalfEdgeId moved, HalfEdgeId e) {
    const EndRef& r = g_.end(e);
    EdgeId c = r.edge;
    if (const auto* blk = block_of(c)) {
      auto [a, b] = *blk;
      if (e != g_.edge(b).target)
        throw std::logic_error("standard_form: broken handle pair");
      do_slide(b, SlideVariant::mR, moved);
      do_slide(a, SlideVariant::L, moved);
      do_slide(b, SlideVariant::L, moved);
      do_slide(a, SlideVariant::mR, moved);
    } else if (const auto* tr = triple_of(c)) {
      if (e != g_.edge(tr->first).target)
        throw std::logic_error("standard_form: broken boundary triple");
      do_slide(tr->first, SlideVariant::mR, moved);
    } else if (is_core_loop(c)) {
      if (!r.is_target)
        throw std::logic_error("standard_form: loop still crosses an enclosure");
      do_slide(c, SlideVariant::mR, moved);
    } else {
      throw std::invalid_argument(
          "standard_form: two tips compete for one enclosing loop");
    }
  }

  // Phase 3: give every tip edge an enclosing loop hugging its target end.
  // Deepest-nested tips go first; the enclosing loop's ends hop inward over
  // whole units until the triple [st m, ta n, ta m] is contiguous.
  void match_tips() {
    std::set<EdgeId> matched;
    std::vector<EdgeId> chords;
    for (const Edge& ed : g_.edges())
      if (is_core_loop(ed.id) && !block_of(ed.id)) chords.push_back(ed.id);
    std::set<EdgeId> pending;
    for (const Vertex& v : g_.vertices())
      if (v.id != x_) pending.insert(g_.end(v.order[0]).edge);

    while (!pending.empty()) {
      EdgeId nu = -1, mu = -1;
      int best_depth = -1, best_pos = -1;
      for (EdgeId t : pending) {
        int p = pos(g_.edge(t).target);
        int depth = 0, inner_s = -1;
        EdgeId inner = -1;
        for (EdgeId c : chords) {
          if (matched.count(c)) continue;
          int s = pos(g_.edge(c).start), tt = pos(g_.edge(c).target);
          if (s < p && p < tt) {
            ++depth;
            if (s > inner_s) {
              inner_s = s;
              inner = c;
            }
          }
        }
        if (inner < 0)
          throw std::invalid_argument(
              "standard_form: tip edge has no enclosing loop");
        if (depth > best_depth || (depth == best_depth && p < best_pos)) {
          best_depth = depth;
          best_pos = p;
          nu = t;
          mu = inner;
        }
      }
      HalfEdgeId target = g_.edge(nu).target;
      for (;;) {
        HalfEdgeId e = at(pos(g_.edge(mu).start) + 1);
        if (e == target) break;
        hop_right(g_.edge(mu).start, e);
      }
      for (;;) {
        HalfEdgeId e = at(pos(g_.edge(mu).target) - 1);
        if (e == target) break;
        hop_left(g_.edge(mu).target, e);
      }
      matched.insert(mu);
      triples_.push_back({mu, nu});
      pending.erase(nu);
    }
    for (EdgeId c : chords)
      if (!matched.count(c))
        throw std::invalid_argument(
            "standard_form: leftover loop enclosing no tip");
  }

  // Phase 5: sort the boundary triples so their tip vertices appear in
  // vertex order left to right; adjacent triples swap by three unit hops.
  void order_tips() {
    const int nt = static_cast<int>(triples_.size());
    if (nt < 2) return;
    auto tip_vertex = [&](EdgeId nu) {
      return g_.end(g_.edge(nu).start).vertex;
    };
    for (;;) {
      std::vector<std::pair<int, int>> by_pos;  // (position of st(m), index)
      for (int i = 0; i < nt; ++i)
        by_pos.push_back({pos(g_.edge(triples_[i].first).start), i});
      std::sort(by_pos.begin(), by_pos.end());
      bool swapped = false;
      for (int k = 0; k + 1 < nt && !swapped; ++k) {
        const auto& left = triples_[by_pos[k].second];
        const auto& right = triples_[by_pos[k + 1].second];
        if (tip_vertex(left.second) <= tip_vertex(right.second)) continue;
        // Carry the right triple leftward past the left one, end by end.
        for (int r = 0; r < 3; ++r)
          do_slide(left.first, SlideVariant::mR,
                   at(pos(g_.edge(left.first).target) + 1));
        swapped = true;
      }
      if (!swapped) break;
    }
  }

  // Phase 4: bubble handle pairs rightward past boundary triples so all
  // triples sit first in the linear order.
  void arrange_units() {
    for (;;) {
      bool moved_any = false;
      for (auto& [m, n] : triples_) {
        int p = pos(g_.edge(m).start);
        if (p == 0) continue;
        const EndRef& left = g_.end(at(p - 1));
        if (block_of(left.edge)) {
          for (int k = 0; k < 4; ++k)
            do_slide(m, SlideVariant::R, at(pos(g_.edge(m).start) - 1));
          moved_any = true;
          break;
        }
      }
      if (!moved_any) break;
    }
  }
};

}  // namespace

StandardForm standard_form(const RibbonGraph& g) { return Reducer(g).run(); }

}  // namespace rgmcg
