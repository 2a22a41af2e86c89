#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rgmcg/faces.hpp"
#include "rgmcg/standard_graph.hpp"

using namespace rgmcg;

namespace {
RibbonGraph torus() { return build_graph({{"+a", "+b", "-a", "-b"}}); }
}  // namespace

TEST_CASE("torus has a single face with the expected based word") {
  RibbonGraph g = torus();
  auto fs = faces(g);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].size() == 4);
  GraphPath f = ciliated_face_at(g, 0);
  CHECK(f.to_string(g) == "a^-1 b a b^-1");
  CHECK(genus(g) == 1);
}

TEST_CASE("a single loop bounds two faces on the sphere") {
  RibbonGraph g = build_graph({{"-a", "+a"}});
  CHECK(faces(g).size() == 2);
  CHECK(genus(g) == 0);
}

TEST_CASE("face walks cover every directed edge exactly once") {
  for (const RibbonGraph& g :
       {torus(), standard_graph(1, 1), standard_graph(2, 0),
        standard_graph(1, 2), standard_graph(3, 0), standard_graph(0, 2)}) {
    auto fs = faces(g);
    int total = 0;
    for (const auto& f : fs) total += f.size();
    CHECK(total == g.num_half_edges());
    for (const auto& f : fs) CHECK(is_face_path(g, f));
  }
}

TEST_CASE("standard graphs have n+1 faces and the stated genus") {
  struct Case {
    int g, n, faces_expected;
  };
  for (Case c : {Case{1, 0, 1}, Case{1, 1, 2}, Case{2, 0, 1}, Case{1, 2, 3},
                 Case{3, 0, 1}, Case{2, 1, 2}}) {
    RibbonGraph gr = standard_graph(c.g, c.n);
    CHECK(static_cast<int>(faces(gr).size()) == c.faces_expected);
    CHECK(genus(gr) == c.g);
    CHECK(static_cast<int>(gr.edges().size()) == 2 * (c.g + c.n));
  }
}

TEST_CASE("boundary faces of the standard graph pass through the pendant") {
  RibbonGraph g = standard_graph(1, 1);
  GraphPath tip_face = ciliated_face_at(g, 1);
  CHECK(tip_face.to_string(g) == "n1^-1 m1 n1");
  GraphPath base_face = ciliated_face_at(g, 0);
  CHECK(base_face.to_string(g) == "m1^-1 a1^-1 b1 a1 b1^-1");
}

TEST_CASE("is_face_path accepts left-turn subwalks and rejects others") {
  RibbonGraph g = torus();
  EdgeId a = g.edge_by_name("a"), b = g.edge_by_name("b");
  CHECK(is_face_path(g, GraphPath::trivial(g, 0)));
  CHECK(is_face_path(g, GraphPath(g, {{a, true}})));
  CHECK(is_face_path(g, GraphPath(g, {{a, true}, {b, true}})));
  CHECK(is_face_path(g, GraphPath(g, {{b, true}, {a, false}})));
  CHECK_FALSE(is_face_path(g, GraphPath(g, {{b, true}, {a, true}})));
  CHECK_FALSE(is_face_path(g, GraphPath(g, {{a, true}, {a, false}})));
  // a full turn plus a repeated directed edge violates the traversal bound
  GraphPath f = ciliated_face_at(g, 0);
  auto steps = f.steps();
  steps.push_back(steps.front());
  CHECK_FALSE(is_face_path(g, GraphPath(g, steps)));
}

TEST_CASE("genus demands connectivity") {
  RibbonGraph g = build_graph({{"+a", "-a"}, {"+b", "-b"}});
  CHECK_THROWS_AS(genus(g), std::invalid_argument);
}
