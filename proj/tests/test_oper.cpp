#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "rgmcg/faces.hpp"
#include "rgmcg/oper.hpp"
#include "rgmcg/standard_graph.hpp"

using namespace rgmcg;

namespace {

RibbonGraph torus() { return build_graph({{"+a", "+b", "-a", "-b"}}); }

// Word literal: space-separated factors "b1 a1^-1 p^2", "1" for the identity.
PivotWord pw(const RibbonGraph& g, const std::string& text) {
  PivotWord out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;
    std::string base = tok;
    long long k = 1;
    if (auto c = tok.find('^'); c != std::string::npos) {
      base = tok.substr(0, c);
      k = std::stoll(tok.substr(c + 1));
    }
    PivotWord f = base == "p" ? PivotWord::pivot_power(1)
                              : PivotWord::atom(g.edge_by_name(base));
    PivotWord step = k >= 0 ? f : f.inverse();
    for (long long i = 0; i < (k >= 0 ? k : -k); ++i) out = out * step;
  }
  return out;
}

const PivotWord& word_of(const Operator& op, const RibbonGraph& g,
                         const std::string& edge) {
  return op.sym().word_for(g.edge_by_name(edge));
}

// The one edge of op.cod() that is not in op.dom().
EdgeId fresh_edge(const Operator& op) {
  for (const Edge& e : op.cod().edges())
    if (!op.dom().has_edge(e.id)) return e.id;
  throw std::logic_error("no fresh edge");
}

}  // namespace

TEST_CASE("slide operators carry the expected label rewrites") {
  RibbonGraph g = torus();
  EdgeId a = g.edge_by_name("a"), b = g.edge_by_name("b");
  Compiler c = Compiler::symbolic();

  // L slide along a of st(b) (a start end): b picks up a^-1 on the right.
  Operator l = c.slide_op(g, {a, SlideVariant::L, g.edge(b).start});
  CHECK(l.sym().word_for(b) == pw(g, "b a^-1"));
  CHECK(l.sym().word_for(a) == pw(g, "a"));
  CHECK(l.then(l.inverse()).same_map(c.identity(g)));
  CHECK(l.inverse().then(l).same_map(c.identity(l.cod())));

  // -L slide along b of ta(a) (a target end): a picks up b^-1 on the left.
  Operator ml = c.slide_op(g, {b, SlideVariant::mL, g.edge(a).target});
  CHECK(ml.sym().word_for(a) == pw(g, "b^-1 a"));

  // R slide along b of st(a): right factor through the twisted inverse.
  Operator r = c.slide_op(g, {b, SlideVariant::R, g.edge(a).start});
  CHECK(r.sym().word_for(a) == pw(g, "p a b^-1"));

  // -R slide along a of ta(b): left factor p a^-1.
  Operator mr = c.slide_op(g, {a, SlideVariant::mR, g.edge(b).target});
  CHECK(mr.sym().word_for(b) == pw(g, "p a^-1 b"));
}

TEST_CASE("loop twists of the torus act on the transverse label only") {
  RibbonGraph g = torus();
  EdgeId a = g.edge_by_name("a"), b = g.edge_by_name("b");
  Compiler c = Compiler::symbolic();

  Operator da = c.twist_loop_op(g, a);
  CHECK(da.sym().word_for(b) == pw(g, "b a^-1"));
  CHECK(da.sym().word_for(a) == pw(g, "a"));

  Operator db = c.twist_loop_op(g, b);
  CHECK(db.sym().word_for(a) == pw(g, "b a"));
  CHECK(db.sym().word_for(b) == pw(g, "b"));

  // The twist along the loop as a one-step closed face path is the same map.
  Operator db_path = c.twist_facepath_op(g, GraphPath::parse(g, "b"));
  CHECK(db_path.same_map(db));
  Operator da_path = c.twist_facepath_op(g, GraphPath::parse(g, "a"));
  CHECK(da_path.same_map(da));
}

TEST_CASE("a loop enclosing no ends twists trivially") {
  RibbonGraph g = build_graph({{"+c", "-c", "+d", "-d"}});
  Compiler c = Compiler::symbolic();
  CHECK(c.twist_loop_op(g, g.edge_by_name("c"))
            .same_map(c.identity(g)));
}

TEST_CASE("a loop fully enclosing another conjugates its label") {
  RibbonGraph g = build_graph({{"+c", "+u", "-u", "-c"}});
  Compiler cc = Compiler::symbolic();
  Operator d = cc.twist_loop_op(g, g.edge_by_name("c"));
  CHECK(word_of(d, g, "u") == pw(g, "c u c^-1"));
  CHECK(word_of(d, g, "c") == pw(g, "c"));
  // Bundling the enclosed ends onto a pendant strand gives the same operator.
  CHECK(cc.bundled_twist_loop_op(g, g.edge_by_name("c")).same_map(d));
}

TEST_CASE("bundled and direct twists agree on the torus") {
  RibbonGraph g = torus();
  Compiler c = Compiler::symbolic();
  for (const char* e : {"a", "b"})
    CHECK(c.bundled_twist_loop_op(g, g.edge_by_name(e))
              .same_map(c.twist_loop_op(g, g.edge_by_name(e))));
}

TEST_CASE("twist words parse with powers and parentheses") {
  Compiler c = Compiler::symbolic();
  RibbonGraph g0 = standard_graph(1, 0);
  Operator da = c.named_twist(1, 0, "D_a");
  Operator db = c.named_twist(1, 0, "D_b");
  CHECK(c.mcg_word_op(1, 0, "D_a").same_map(da));
  CHECK(c.mcg_word_op(1, 0, "D_a D_a^-1").same_map(c.identity(g0)));
  CHECK(c.mcg_word_op(1, 0, "D_a^0").same_map(c.identity(g0)));
  CHECK(c.mcg_word_op(1, 0, "(D_b D_a)^2")
            .same_map(c.mcg_word_op(1, 0, "D_b D_a D_b D_a")));
  CHECK(c.mcg_word_op(1, 0, "(D_b D_a)^-1")
            .same_map(c.mcg_word_op(1, 0, "D_a^-1 D_b^-1")));
  // Rightmost factor acts first.
  Operator w = c.mcg_word_op(1, 0, "D_b D_a");
  CHECK(w.same_map(da.then(db)));
  CHECK_THROWS_AS(c.mcg_word_op(1, 0, "D_zeta"), std::invalid_argument);
  CHECK_THROWS_AS(c.mcg_word_op(1, 0, "D_a^"), std::invalid_argument);
  CHECK_THROWS_AS(c.mcg_word_op(2, 0, "D_gamma_1_1"), std::invalid_argument);
}

TEST_CASE("the braid relation holds on the closed torus") {
  Compiler c = Compiler::symbolic();
  Operator lhs = c.mcg_word_op(1, 0, "D_b D_a D_b");
  Operator rhs = c.mcg_word_op(1, 0, "D_a D_b D_a");
  CHECK(lhs.same_map(rhs));
  RibbonGraph g0 = standard_graph(1, 0);
  CHECK(word_of(lhs, g0, "a1") == pw(g0, "b1"));
  CHECK(word_of(lhs, g0, "b1") == pw(g0, "b1 a1^-1 b1^-1"));

  Compiler cl = Compiler::linear(FinHopf::sweedler4());
  CHECK(cl.mcg_word_op(1, 0, "D_b D_a D_b")
            .same_map(cl.mcg_word_op(1, 0, "D_a D_b D_a")));
}

TEST_CASE("the fourth power of the half-twist is holonomy conjugation") {
  RibbonGraph g0 = standard_graph(1, 0);
  GraphPath face = ciliated_face_at(g0, 0);
  CHECK(face.to_string(g0) == "a1^-1 b1 a1 b1^-1");

  Compiler c = Compiler::symbolic();
  Operator m4 = c.mcg_word_op(1, 0, "(D_b D_a D_b)^4");
  Operator conj = c.holonomy_conjugation(g0, 0, face);
  CHECK(m4.same_map(conj));
  PivotWord h = pw(g0, "b1 a1^-1 b1^-1 a1");  // twisted inverse of the emission
  CHECK(word_of(m4, g0, "a1") ==
        h * PivotWord::atom(g0.edge_by_name("a1")) * h.inverse());
  CHECK(word_of(m4, g0, "b1") ==
        h * PivotWord::atom(g0.edge_by_name("b1")) * h.inverse());

  Compiler cl = Compiler::linear(FinHopf::sweedler4());
  CHECK(cl.mcg_word_op(1, 0, "(D_b D_a D_b)^4")
            .same_map(cl.holonomy_conjugation(g0, 0, face)));
}

TEST_CASE("reversing a loop conjugates its twist through the involution") {
  RibbonGraph g = torus();
  EdgeId b = g.edge_by_name("b");
  Compiler c = Compiler::symbolic();
  Operator rev = c.reverse_op(g, b);
  Operator back = c.reverse_op(rev.cod(), b);
  CHECK(back.cod() == g);
  Operator conj = rev.then(c.twist_loop_op(rev.cod(), b)).then(back);
  CHECK(conj.same_map(c.twist_loop_op(g, b)));

  Compiler cl = Compiler::linear(FinHopf::sweedler4());
  Operator rl = cl.reverse_op(g, b);
  CHECK(rl.then(cl.twist_loop_op(rl.cod(), b))
            .then(cl.reverse_op(rl.cod(), b))
            .same_map(cl.twist_loop_op(g, b)));
}

TEST_CASE("a parallel edge is cancelled exactly by forgetting it") {
  RibbonGraph g = torus();
  Compiler c = Compiler::symbolic();
  for (const char* path : {"b", "a^-1 b"}) {
    Operator add = c.add_edge_op(g, GraphPath::parse(g, path));
    EdgeId ne = fresh_edge(add);
    CHECK(add.then(c.remove_edge_op(add.cod(), ne)).same_map(c.identity(g)));
  }
  Compiler cl = Compiler::linear(FinHopf::sweedler4());
  Operator addl = cl.add_edge_op(g, GraphPath::parse(g, "b"));
  CHECK(addl.then(cl.remove_edge_op(addl.cod(), fresh_edge(addl)))
            .same_map(cl.identity(g)));
}

TEST_CASE("forgetting the original edge instead leaves a renamed copy") {
  RibbonGraph g = torus();
  EdgeId a = g.edge_by_name("a"), b = g.edge_by_name("b");
  Compiler c = Compiler::symbolic();

  // Copy parallel to a, then drop a: the copy sits exactly where a was.
  Operator add = c.add_edge_op(g, GraphPath::parse(g, "a"));
  EdgeId ne = fresh_edge(add);
  Operator drop = c.remove_edge_op(add.cod(), a);
  Operator ident = c.identify_op(drop.cod(), g, {{ne, a}, {b, b}});
  CHECK(add.then(drop).then(ident).same_map(c.identity(g)));

  // Copy parallel to a^-1, then drop a: the copy realizes the reversed edge.
  Operator add_r = c.add_edge_op(g, GraphPath::parse(g, "a^-1"));
  EdgeId nr = fresh_edge(add_r);
  Operator drop_r = c.remove_edge_op(add_r.cod(), a);
  RibbonGraph rg = reverse_edge(g, a);
  Operator ident_r = c.identify_op(drop_r.cod(), rg, {{nr, a}, {b, b}});
  CHECK(add_r.then(drop_r).then(ident_r).same_map(c.reverse_op(g, a)));
}

TEST_CASE("identify operators demand a genuine order-preserving renaming") {
  RibbonGraph g = torus();
  EdgeId a = g.edge_by_name("a"), b = g.edge_by_name("b");
  Compiler c = Compiler::symbolic();
  CHECK(c.identify_op(g, g, {{a, a}, {b, b}}).same_map(c.identity(g)));
  // Swapping a and b does not preserve the vertex order.
  CHECK_THROWS_AS(c.identify_op(g, g, {{a, b}, {b, a}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(c.identify_op(g, g, {{a, a}}), std::invalid_argument);
}

TEST_CASE("curve-pair twists verify their inverses and route independence") {
  Compiler c = Compiler::symbolic();
  Operator tg = c.twist_gamma_op(2, 0, 1, 2);
  RibbonGraph g0 = standard_graph(2, 0);
  CHECK(tg.dom() == g0);
  CHECK(tg.cod() == g0);
  CHECK(tg.then(tg.inverse()).same_map(c.identity(g0)));
  CHECK(c.twist_gamma_op(2, 0, 1, 2, true).same_map(tg));
  CHECK_THROWS_AS(c.twist_gamma_op(2, 0, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(c.twist_gamma_op(2, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("generating twists of the closed genus-2 surface: recorded forms") {
  Compiler c = Compiler::symbolic();
  RibbonGraph g = standard_graph(2, 0);
  auto gens = c.generating_twists(2, 0);
  CHECK(gens.size() == 11);
  for (const auto& [name, op] : gens) {
    CAPTURE(name);
    CHECK(op.dom() == g);
    CHECK(op.cod() == g);
    CHECK(op.invertible());
  }
  PivotWord a1 = pw(g, "a1"), b1 = pw(g, "b1"), a2 = pw(g, "a2"),
            b2 = pw(g, "b2");
  PivotWord c1 = pw(g, "b1 a1^-1 b1^-1 a1");  // commutator of b1, a1^-1
  PivotWord c2 = pw(g, "b2 a2^-1 b2^-1 a2");
  PivotWord A = pw(g, "a2^-1 b2 a2");
  auto expect = [&](const std::string& name, const std::string& edge,
                    const PivotWord& w) {
    CAPTURE(name);
    CAPTURE(edge);
    CHECK(word_of(gens.at(name), g, edge) == w);
  };

  expect("D_alpha_1", "a1", a1);
  expect("D_alpha_1", "b1", pw(g, "b1 a1^-1"));
  expect("D_alpha_1", "a2", a2);
  expect("D_alpha_1", "b2", b2);

  expect("D_alpha_2", "b2", pw(g, "b2 a2^-1"));
  expect("D_alpha_2", "a1", a1);
  expect("D_alpha_2", "b1", b1);
  expect("D_alpha_2", "a2", a2);

  expect("D_delta_0", "a2", pw(g, "b2 a2"));
  expect("D_delta_0", "a1", a1);
  expect("D_delta_0", "b1", b1);
  expect("D_delta_0", "b2", b2);

  {
    PivotWord u = A.inverse() * c1;
    expect("D_delta_1", "a1", u * a1 * u.inverse());
    expect("D_delta_1", "b1", u * b1 * u.inverse());
    expect("D_delta_1", "a2",
           PivotWord::pivot_power(2) * a2 * c1.inverse() * A);
    expect("D_delta_1", "b2", b2);
  }
  {
    expect("D_delta_2", "a1",
           PivotWord::pivot_power(-1) * A.inverse() * b1 * a1);
    expect("D_delta_2", "b1", A.inverse() * b1 * A);
    expect("D_delta_2", "a2",
           PivotWord::pivot_power(1) * a2 * b1.inverse() * A);
    expect("D_delta_2", "b2", b2);
  }

  expect("D_gamma_0_1", "a1", c1 * a1 * c1.inverse());
  expect("D_gamma_0_1", "b1", c1 * b1 * c1.inverse());
  expect("D_gamma_0_1", "a2", a2);
  expect("D_gamma_0_1", "b2", b2);

  expect("D_gamma_0_2", "a1", pw(g, "b1 a1"));
  expect("D_gamma_0_2", "b1", b1);
  expect("D_gamma_0_2", "a2", a2);
  expect("D_gamma_0_2", "b2", b2);

  {
    PivotWord k = c2 * c1;
    for (const char* e : {"a1", "b1", "a2", "b2"})
      expect("D_gamma_1_0", e, k * pw(g, e) * k.inverse());
  }
  {
    expect("D_gamma_2_0", "a1",
           PivotWord::pivot_power(-2) * c2 * b1 * a1);
    for (const char* e : {"b1", "a2", "b2"})
      expect("D_gamma_2_0", e,
             c2 * b1 * pw(g, e) * b1.inverse() * c2.inverse());
  }

  expect("D_gamma_2_1", "a1", pw(g, "b1 a1"));
  expect("D_gamma_2_1", "b1", b1);
  expect("D_gamma_2_1", "a2", a2);
  expect("D_gamma_2_1", "b2", b2);

  {
    PivotWord w = a2 * b1.inverse() * a2.inverse() * c2 * c1;
    PivotWord u = A.inverse() * c1;
    PivotWord wa = w * a2.inverse() * w.inverse() * a2;  // commutator of w, a2^-1
    expect("D_gamma_1_2", "a1",
           PivotWord::pivot_power(2) * wa * a1 * w.inverse());
    expect("D_gamma_1_2", "b1", wa * b1 * wa.inverse());
    expect("D_gamma_1_2", "a2", w * a2 * w.inverse());
    expect("D_gamma_1_2", "b2",
           b2 * u * w * u.inverse() * w.inverse());
  }
}
