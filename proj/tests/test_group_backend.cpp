#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "rgmcg/group_eval.hpp"
#include "rgmcg/standard_graph.hpp"

using namespace rgmcg;

namespace {
RibbonGraph torus() { return build_graph({{"+a", "+b", "-a", "-b"}}); }
}  // namespace

TEST_CASE("multiplication tables are validated") {
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}, {}, "bad"),
                  std::invalid_argument);  // 1 has no inverse
  CHECK_THROWS_AS(FiniteGroup({{0, 1}}, {}, "bad"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup({{1, 0}, {0, 0}}, {"x"}, "bad"),
                  std::invalid_argument);  // name count
  FiniteGroup z2({{0, 1}, {1, 0}}, {"e", "t"}, "Z2");
  CHECK(z2.identity() == 0);
  CHECK(z2.inv(1) == 1);
}

TEST_CASE("builtin families") {
  FiniteGroup z6 = FiniteGroup::cyclic(6);
  CHECK(z6.order() == 6);
  CHECK(z6.mul(4, 5) == 3);
  CHECK(z6.pow(1, -7) == 5);
  CHECK(z6.center().size() == 6);

  FiniteGroup d3 = FiniteGroup::dihedral(3);
  CHECK(d3.order() == 6);
  int r = d3.element_by_name("r"), s = d3.element_by_name("s");
  CHECK(d3.name(d3.mul(s, r)) == "s r");
  CHECK(d3.name(d3.mul(r, s)) == "s r^2");
  CHECK(d3.center() == std::vector<int>{d3.identity()});
  CHECK(FiniteGroup::dihedral(2).center().size() == 4);

  FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  int t12 = s3.element_by_name("(1 2)"), t13 = s3.element_by_name("(1 3)");
  CHECK(s3.name(s3.mul(t12, t13)) == "(1 3 2)");  // left factor acts last
  CHECK(s3.name(s3.identity()) == "e");
  CHECK(FiniteGroup::symmetric(4).order() == 24);

  CHECK(FiniteGroup::by_name("trivial").order() == 1);
  CHECK(FiniteGroup::by_name("Z8").order() == 8);
  CHECK(FiniteGroup::by_name("D4").order() == 8);
  CHECK(FiniteGroup::by_name("S3").group_name() == "S3");
  CHECK_THROWS_AS(FiniteGroup::by_name("E8"), std::invalid_argument);

  FiniteGroup j = FiniteGroup::from_json(
      R"({"name":"K","elements":["e","x"],"table":[[0,1],[1,0]]})");
  CHECK(j.order() == 2);
  CHECK(j.element_by_name("x") == 1);
}

TEST_CASE("state spaces enumerate labelings within budget") {
  RibbonGraph g = torus();
  GroupStateSpace sp(FiniteGroup::symmetric(3), g, 1000);
  CHECK(sp.size() == 36);
  for (long long i = 0; i < sp.size(); ++i)
    CHECK(sp.encode(sp.decode(i)) == i);
  CHECK(sp.slot(g.edge_by_name("a")) + sp.slot(g.edge_by_name("b")) == 1);
  CHECK_THROWS_AS(GroupStateSpace(FiniteGroup::symmetric(3), g, 35),
                  std::runtime_error);

  std::vector<int> st = {2, 5};
  std::string js = sp.state_to_json(g, st);
  CHECK(sp.state_from_json(g, js) == st);
}

TEST_CASE("word evaluation against hand-multiplied elements") {
  RibbonGraph g = torus();
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  GroupStateSpace sp(s3, g);
  EdgeId a = g.edge_by_name("a"), b = g.edge_by_name("b");
  std::vector<int> st(2);
  st[sp.slot(a)] = s3.element_by_name("(1 2)");
  st[sp.slot(b)] = s3.element_by_name("(1 2 3)");
  PivotWord w = PivotWord::atom(a) * PivotWord::atom(b, true);
  int expect = s3.mul(s3.element_by_name("(1 2)"),
                      s3.inv(s3.element_by_name("(1 2 3)")));
  CHECK(evaluate_word(sp, w, st, s3.identity()) == expect);
  // pivot power multiplies in front (admissible pivots are central)
  FiniteGroup z6 = FiniteGroup::cyclic(6);
  GroupStateSpace spz(z6, g);
  std::vector<int> stz = {2, 5};
  PivotWord pw = PivotWord::pivot_power(2) * PivotWord::atom(a);
  CHECK(evaluate_word(spz, pw, stz, 4) ==
        z6.mul(z6.mul(4, 4), stz[spz.slot(a)]));
  // auxiliary atoms need a binding
  PivotWord haux = PivotWord::atom(-1) * PivotWord::atom(a);
  CHECK_THROWS_AS(evaluate_word(sp, haux, st, s3.identity()),
                  std::invalid_argument);
  int h = s3.element_by_name("(1 2 3)");
  CHECK(evaluate_word(sp, haux, st, s3.identity(), {{-1, h}}) ==
        s3.mul(h, st[sp.slot(a)]));
}

TEST_CASE("holonomy of the based face walk matches the symbolic emission") {
  RibbonGraph g = torus();
  GraphPath f = ciliated_face_at(g, 0);
  PivotWord emission = symbolic_emission(f);
  // Only central pivots are admissible, so cover the trivial pivot on a
  // nonabelian group and every pivot on an abelian one.
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  GroupStateSpace sp3(s3, g);
  for (long long i = 0; i < sp3.size(); ++i) {
    std::vector<int> st = sp3.decode(i);
    CHECK(face_holonomy(sp3, f, st, s3.identity()) ==
          evaluate_word(sp3, emission, st, s3.identity()));
  }
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  GroupStateSpace sp4(z4, g);
  for (int p = 0; p < z4.order(); ++p)
    for (long long i = 0; i < sp4.size(); ++i) {
      std::vector<int> st = sp4.decode(i);
      CHECK(face_holonomy(sp4, f, st, p) == evaluate_word(sp4, emission, st, p));
    }
}

TEST_CASE("a pivot outside the center is rejected") {
  RibbonGraph g = torus();
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  GroupStateSpace sp(s3, g);
  GraphPath f = ciliated_face_at(g, 0);
  std::vector<int> st(2, s3.identity());
  CHECK_THROWS_AS(face_holonomy(sp, f, st, s3.element_by_name("(1 2)")),
                  std::invalid_argument);
}

TEST_CASE("one-vertex surface coinvariants count commuting pairs") {
  RibbonGraph g = torus();
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  GroupStateSpace sp(s3, g);
  auto coinv = coinvariant_states(sp, g, 0, s3.identity());
  // Independent count: pairs (x, y) with xy = yx, summed over centralizers.
  int expect = 0;
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      if (s3.mul(x, y) == s3.mul(y, x)) ++expect;
  CHECK(expect == 18);
  CHECK(static_cast<int>(coinv.size()) == expect);
}

TEST_CASE("orbit decomposition agrees with the averaging count") {
  RibbonGraph g = torus();
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  GroupStateSpace sp(s3, g);
  GroupBiinvariants bi = biinvariants(sp, g, 0, s3.identity());
  CHECK(bi.coinv.size() == 18);
  // Burnside: (18 + 3*4 + 2*9) / 6 = 8 simultaneous-conjugation orbits.
  CHECK(bi.reps.size() == 8);
  for (long long rep : bi.reps) CHECK(bi.orbit_index_of_state(rep) >= 0);
  CHECK(bi.orbit_index_of_state(bi.coinv.empty() ? 0 : -7) == -1);
}

TEST_CASE("a twist-like relabeling descends to orbits, a broken one throws") {
  RibbonGraph g = torus();
  EdgeId a = g.edge_by_name("a"), b = g.edge_by_name("b");
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  GroupStateSpace sp(s3, g);
  GroupBiinvariants bi = biinvariants(sp, g, 0, s3.identity());

  Relabeling tw = Relabeling::identity_on(g);
  tw.set(b, PivotWord::atom(a) * PivotWord::atom(b));  // b -> a b
  std::vector<int> perm = induced_action(sp, bi, tw, s3.identity());
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expect(bi.reps.size());
  std::iota(expect.begin(), expect.end(), 0);
  CHECK(sorted == expect);  // a permutation of the orbit space

  // With a boundary and a nontrivial pivot the emission constraint pins the
  // boundary label, so a substitution feeding another edge into it walks out
  // of the coinvariant set and cannot descend.
  RibbonGraph gb = standard_graph(0, 1);
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  GroupStateSpace spb(z4, gb);
  int p = 1;
  GroupBiinvariants bib = biinvariants(spb, gb, 0, p);
  CHECK(bib.coinv.size() == 4);  // boundary label pinned to p, tip label free
  Relabeling broken = Relabeling::identity_on(gb);
  broken.set(gb.edge_by_name("m1"), PivotWord::atom(gb.edge_by_name("m1")) *
                                        PivotWord::atom(gb.edge_by_name("n1")));
  CHECK_THROWS_AS(induced_action(spb, bib, broken, p), std::runtime_error);
}

TEST_CASE("witness search distinguishes unequal substitutions") {
  RibbonGraph g = torus();
  EdgeId b = g.edge_by_name("b");
  FiniteGroup z3 = FiniteGroup::cyclic(3);
  GroupStateSpace sp(z3, g);
  Relabeling id = Relabeling::identity_on(g);
  Relabeling tw = id;
  tw.set(b, PivotWord::atom(g.edge_by_name("a")) * PivotWord::atom(b));
  CHECK(!find_witness(sp, id, id, z3.identity()).has_value());
  auto w = find_witness(sp, id, tw, z3.identity());
  REQUIRE(w.has_value());
  CHECK(apply_relabeling(sp, sp, id, *w, z3.identity()) !=
        apply_relabeling(sp, sp, tw, *w, z3.identity()));
}

TEST_CASE("round trip through a relabeling and its inverse substitution") {
  RibbonGraph g = torus();
  EdgeId a = g.edge_by_name("a"), b = g.edge_by_name("b");
  FiniteGroup d4 = FiniteGroup::dihedral(4);
  GroupStateSpace sp(d4, g);
  Relabeling fwd = Relabeling::identity_on(g);
  fwd.set(b, PivotWord::atom(a) * PivotWord::atom(b));
  Relabeling bwd = Relabeling::identity_on(g);
  bwd.set(b, PivotWord::atom(a, true) * PivotWord::atom(b));
  CHECK(bwd.then(fwd).word_for(b) == PivotWord::atom(b));
  for (long long i = 0; i < sp.size(); i += 7) {
    std::vector<int> st = sp.decode(i);
    std::vector<int> mid = apply_relabeling(sp, sp, fwd, st, d4.identity());
    CHECK(apply_relabeling(sp, sp, bwd, mid, d4.identity()) == st);
  }
}
