#include "rgmcg/standard_graph.hpp"

#include <stdexcept>

namespace rgmcg {

namespace {

// Written-order step list (leftmost factor first); reversed on construction.
using Written = std::vector<PathStep>;

GraphPath make_path(const RibbonGraph& gr, Written w) {
  if (w.empty()) return GraphPath::trivial(gr, 0);
  std::vector<PathStep> steps(w.rbegin(), w.rend());
  return GraphPath(gr, std::move(steps)).reduced(gr);
}

Written inverse_written(const Written& w) {
  Written out;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(PathStep{it->edge, !it->forward});
  return out;
}

void append(Written& w, const Written& tail) {
  w.insert(w.end(), tail.begin(), tail.end());
}

struct Layout {
  int g = 0, n = 0;
  EdgeId m(int i) const { return 2 * (i - 1); }
  EdgeId nu(int i) const { return 2 * (i - 1) + 1; }
  EdgeId a(int j) const { return 2 * n + 2 * (j - 1); }
  EdgeId b(int j) const { return 2 * n + 2 * (j - 1) + 1; }

  // a_j^-1 b_j a_j b_j^-1 in written order.
  Written handle_commutator(int j) const {
    return {{a(j), false}, {b(j), true}, {a(j), true}, {b(j), false}};
  }
  // a_g^-1 b_g a_g in written order.
  Written tail() const {
    return {{a(g), false}, {b(g), true}, {a(g), true}};
  }

  Written delta(int k) const {
    if (k == 0) return {{b(g), false}};
    Written w;
    if (k <= n) {
      for (int i = k; i <= n; ++i) w.push_back({m(i), false});
      for (int j = 1; j <= g - 1; ++j) append(w, handle_commutator(j));
      append(w, tail());
      return w;
    }
    int r = k - n;  // 1 .. 2g-2
    int j = (r + 1) / 2;
    if (r % 2 == 1) {  // k = n + 2j - 1
      for (int l = j; l <= g - 1; ++l) append(w, handle_commutator(l));
      append(w, tail());
    } else {  // k = n + 2j
      w.push_back({b(j), false});
      for (int l = j + 1; l <= g - 1; ++l) append(w, handle_commutator(l));
      append(w, tail());
    }
    return w;
  }

  Written gamma(int k, int l) const {
    if (k == l) return {};
    if (l == 0) {
      Written w = delta(k);
      w.push_back({b(g), false});
      return w;
    }
    if (k == 0) {
      Written w = delta(l);
      append(w, {{a(g), false}, {b(g), false}, {a(g), true}});
      return w;
    }
    if (l < k) {
      Written w = delta(l);
      append(w, inverse_written(delta(k)));
      return w;
    }
    Written w = delta(k);  // k < l
    w.push_back({a(g), true});
    append(w, inverse_written(delta(l)));
    w.push_back({a(g), false});
    return w;
  }
};

}  // namespace

RibbonGraph standard_graph(int g, int n) {
  if (g < 0 || n < 0 || (g == 0 && n == 0))
    throw std::invalid_argument("standard graph needs g >= 0, n >= 0, not both 0");
  Layout ly{g, n};
  std::vector<Edge> edges;
  std::map<EdgeId, std::string> names;
  auto add_edge = [&](EdgeId id, const std::string& name) {
    Edge e;
    e.id = id;
    e.start = 2 * id;
    e.target = 2 * id + 1;
    edges.push_back(e);
    names[id] = name;
  };
  for (int i = 1; i <= n; ++i) {
    add_edge(ly.m(i), "m" + std::to_string(i));
    add_edge(ly.nu(i), "n" + std::to_string(i));
  }
  for (int j = 1; j <= g; ++j) {
    add_edge(ly.a(j), "a" + std::to_string(j));
    add_edge(ly.b(j), "b" + std::to_string(j));
  }
  auto st = [&](EdgeId e) { return 2 * e; };
  auto ta = [&](EdgeId e) { return 2 * e + 1; };
  Vertex base;
  base.id = 0;
  for (int i = 1; i <= n; ++i) {
    base.order.push_back(st(ly.m(i)));
    base.order.push_back(ta(ly.nu(i)));
    base.order.push_back(ta(ly.m(i)));
  }
  for (int j = 1; j <= g; ++j) {
    base.order.push_back(st(ly.a(j)));
    base.order.push_back(st(ly.b(j)));
    base.order.push_back(ta(ly.a(j)));
    base.order.push_back(ta(ly.b(j)));
  }
  std::vector<Vertex> vs{base};
  for (int i = 1; i <= n; ++i) {
    Vertex tip;
    tip.id = i;
    tip.order = {st(ly.nu(i))};
    vs.push_back(std::move(tip));
  }
  return RibbonGraph(std::move(vs), std::move(edges), std::move(names));
}

std::map<std::string, GraphPath> generator_paths(int g, int n) {
  if (g < 1)
    throw std::invalid_argument("generator paths are defined for genus >= 1");
  RibbonGraph gr = standard_graph(g, n);
  Layout ly{g, n};
  std::map<std::string, GraphPath> out;
  for (int j = 1; j <= g; ++j)
    out["alpha_" + std::to_string(j)] =
        make_path(gr, Written{{ly.a(j), true}});
  int top = n + 2 * g - 2;
  for (int k = 0; k <= top; ++k)
    out["delta_" + std::to_string(k)] = make_path(gr, ly.delta(k));
  for (int k = 0; k <= top; ++k)
    for (int l = 0; l <= top; ++l)
      if (k != l)
        out["gamma_" + std::to_string(k) + "_" + std::to_string(l)] =
            make_path(gr, ly.gamma(k, l));
  return out;
}

GraphPath generator_path(const RibbonGraph& gr, int g, int n,
                         const std::string& name) {
  auto all = generator_paths(g, n);
  auto it = all.find(name);
  if (it == all.end())
    throw std::invalid_argument("unknown generator path '" + name + "'");
  // Re-anchor on the caller's graph object (validates it is the same shape).
  if (it->second.empty()) return GraphPath::trivial(gr, 0);
  return GraphPath(gr, it->second.steps());
}

}  // namespace rgmcg
