#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rgmcg/graph.hpp"

using namespace rgmcg;

TEST_CASE("one-vertex genus-1 graph builds with the expected layout") {
  RibbonGraph g = build_graph({{"+a", "+b", "-a", "-b"}});
  CHECK(g.vertices().size() == 1);
  CHECK(g.edges().size() == 2);
  EdgeId a = g.edge_by_name("a"), b = g.edge_by_name("b");
  const Vertex& v = g.vertex(0);
  CHECK(v.order == std::vector<HalfEdgeId>{g.edge(a).start, g.edge(b).start,
                                           g.edge(a).target, g.edge(b).target});
  CHECK(g.end(g.edge(a).start).position == 0);
  CHECK(g.end(g.edge(b).start).position == 1);
  CHECK(g.end(g.edge(a).target).position == 2);
  CHECK(g.end(g.edge(b).target).position == 3);
  CHECK(g.end(g.edge(a).target).is_target);
  CHECK_FALSE(g.end(g.edge(b).start).is_target);
  CHECK(g.connected());
}

TEST_CASE("two-vertex graph resolves ends across vertices") {
  RibbonGraph g = build_graph({{"+a", "-b"}, {"-a", "+b"}});
  EdgeId a = g.edge_by_name("a");
  CHECK(g.end(g.edge(a).start).vertex == 0);
  CHECK(g.end(g.edge(a).target).vertex == 1);
  CHECK(g.degree(0) == 2);
}

TEST_CASE("json round-trip preserves the graph") {
  RibbonGraph g = build_graph({{"+a", "+b", "-a", "-b"}});
  RibbonGraph h = RibbonGraph::from_json(g.to_json());
  CHECK(g == h);
  CHECK(h.edge_name(h.edge_by_name("b")) == "b");
}

TEST_CASE("invalid structures are rejected") {
  CHECK_THROWS_AS(build_graph({{"+a"}}), std::invalid_argument);  // missing -a
  CHECK_THROWS_AS(build_graph({{"+a", "+a", "-a"}}), std::invalid_argument);
  // an edge end listed at two vertices
  std::vector<Vertex> vs(2);
  vs[0].id = 0;
  vs[0].order = {0, 1};
  vs[1].id = 1;
  vs[1].order = {1};
  std::vector<Edge> es{{0, 0, 1}};
  CHECK_THROWS_AS(RibbonGraph(vs, es), std::invalid_argument);
}

TEST_CASE("disconnected graphs are detected") {
  RibbonGraph g = build_graph({{"+a", "-a"}, {"+b", "-b"}});
  CHECK_FALSE(g.connected());
}
