#include "rgmcg/oper.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rgmcg/standard_graph.hpp"

namespace rgmcg {

std::string to_string(Backend b) {
  return b == Backend::symbolic ? "symbolic" : "linear";
}

// ------------------------------------------------------------------ Operator

const Relabeling& Operator::sym() const {
  if (!sym_) throw std::logic_error("operator has no symbolic payload");
  return *sym_;
}

const Matrix& Operator::lin() const {
  if (!lin_) throw std::logic_error("operator has no linear payload");
  return *lin_;
}

bool Operator::invertible() const {
  return backend_ == Backend::symbolic ? sym_inv_.has_value()
                                       : lin_inv_.has_value();
}

Operator Operator::inverse() const {
  if (!invertible()) throw std::logic_error("operator records no inverse");
  Operator out;
  out.backend_ = backend_;
  out.dom_ = cod_;
  out.cod_ = dom_;
  out.sym_ = sym_inv_;
  out.sym_inv_ = sym_;
  out.lin_ = lin_inv_;
  out.lin_inv_ = lin_;
  return out;
}

Operator Operator::then(const Operator& next) const {
  if (backend_ != next.backend_)
    throw std::invalid_argument("cannot compose operators of different backends");
  if (!(cod_ == next.dom_))
    throw std::invalid_argument(
        "operator composition: codomain does not match the next domain");
  Operator out;
  out.backend_ = backend_;
  out.dom_ = dom_;
  out.cod_ = next.cod_;
  if (backend_ == Backend::symbolic) {
    out.sym_ = sym_->then(next.sym());
    if (sym_inv_ && next.sym_inv_)
      out.sym_inv_ = next.sym_inv_->then(*sym_inv_);
  } else {
    out.lin_ = next.lin() * (*lin_);
    if (lin_inv_ && next.lin_inv_) out.lin_inv_ = (*lin_inv_) * (*next.lin_inv_);
  }
  return out;
}

Operator Operator::pow(int k) const {
  if (!(dom_ == cod_))
    throw std::invalid_argument("pow needs equal domain and codomain");
  if (k < 0) return inverse().pow(-k);
  Operator out;
  out.backend_ = backend_;
  out.dom_ = dom_;
  out.cod_ = dom_;
  if (backend_ == Backend::symbolic) {
    out.sym_ = Relabeling::identity_on(dom_);
    out.sym_inv_ = out.sym_;
  } else {
    out.lin_ = Matrix::identity(lin_->cols());
    out.lin_inv_ = out.lin_;
  }
  for (int i = 0; i < k; ++i) out = out.then(*this);
  return out;
}

bool Operator::same_map(const Operator& o) const {
  if (backend_ != o.backend_) return false;
  if (!(dom_ == o.dom_) || !(cod_ == o.cod_)) return false;
  return backend_ == Backend::symbolic ? sym() == o.sym() : lin() == o.lin();
}

std::string Operator::to_string() const {
  std::ostringstream os;
  if (backend_ == Backend::symbolic) {
    auto atom_name = [this](int a) -> std::string {
      if (a >= 0) return dom_.edge_name(a);
      return a == -1 ? "h" : "h" + std::to_string(-a);
    };
    for (const auto& [e, w] : sym_->words())
      os << cod_.edge_name(e) << " -> " << w.to_string(atom_name) << "\n";
  } else {
    os << "linear " << lin_->rows() << "x" << lin_->cols() << " matrix\n";
  }
  return os.str();
}

std::string Operator::to_json() const {
  nlohmann::json j;
  j["backend"] = rgmcg::to_string(backend_);
  j["dom"] = nlohmann::json::parse(dom_.to_json());
  j["cod"] = nlohmann::json::parse(cod_.to_json());
  j["invertible"] = invertible();
  if (backend_ == Backend::symbolic) {
    auto atom_name = [this](int a) -> std::string {
      if (a >= 0) return dom_.edge_name(a);
      return a == -1 ? "h" : "h" + std::to_string(-a);
    };
    nlohmann::json words = nlohmann::json::object();
    for (const auto& [e, w] : sym_->words())
      words[cod_.edge_name(e)] = w.to_string(atom_name);
    j["words"] = std::move(words);
  } else {
    j["matrix"] = nlohmann::json::parse(lin_->to_json());
  }
  return j.dump();
}

Operator Operator::symbolic_op(RibbonGraph dom, RibbonGraph cod, Relabeling fwd,
                               std::optional<Relabeling> bwd) {
  if (fwd.words().size() != cod.edges().size())
    throw std::invalid_argument("relabeling must cover the codomain edges");
  for (const Edge& e : cod.edges())
    if (!fwd.has(e.id))
      throw std::invalid_argument("relabeling misses a codomain edge");
  if (bwd) {
    if (!(fwd.then(*bwd) == Relabeling::identity_on(dom)) ||
        !(bwd->then(fwd) == Relabeling::identity_on(cod)))
      throw std::logic_error("claimed symbolic inverse does not cancel");
  }
  Operator out;
  out.backend_ = Backend::symbolic;
  out.dom_ = std::move(dom);
  out.cod_ = std::move(cod);
  out.sym_ = std::move(fwd);
  out.sym_inv_ = std::move(bwd);
  return out;
}

Operator Operator::linear_op(RibbonGraph dom, RibbonGraph cod, Matrix fwd,
                             std::optional<Matrix> bwd) {
  if (bwd && (bwd->rows() != fwd.cols() || bwd->cols() != fwd.rows()))
    throw std::invalid_argument("claimed linear inverse has mismatched shape");
  Operator out;
  out.backend_ = Backend::linear;
  out.dom_ = std::move(dom);
  out.cod_ = std::move(cod);
  out.lin_ = std::move(fwd);
  out.lin_inv_ = std::move(bwd);
  return out;
}

Operator Operator::with_inverse(const Operator& bwd) const {
  if (bwd.backend_ != backend_)
    throw std::invalid_argument("inverse candidate has a different backend");
  if (!(bwd.dom_ == cod_) || !(bwd.cod_ == dom_))
    throw std::invalid_argument("inverse candidate has mismatched endpoints");
  if (backend_ == Backend::symbolic) {
    if (!(sym_->then(bwd.sym()) == Relabeling::identity_on(dom_)) ||
        !(bwd.sym().then(*sym_) == Relabeling::identity_on(cod_)))
      throw std::logic_error("claimed symbolic inverse does not cancel");
  }
  Operator out = *this;
  out.sym_inv_ = bwd.sym_;
  out.lin_inv_ = bwd.lin_;
  return out;
}

// ------------------------------------------------------------------ Compiler

namespace {

// Label factor emitted by one slide, as a word in the slid-along edge.
PivotWord slide_emission(const SlideDescriptor& d) {
  PivotWord a = PivotWord::atom(d.along);
  switch (d.variant) {
    case SlideVariant::L:
      return a;
    case SlideVariant::mL:
      return a.inverse();
    case SlideVariant::R:
      return a * PivotWord::pivot_power(-1);
    case SlideVariant::mR:
      return PivotWord::pivot_power(1) * a.inverse();
  }
  throw std::logic_error("unknown slide variant");
}

Relabeling slide_relabeling(const RibbonGraph& g, const SlideDescriptor& d) {
  Relabeling r = Relabeling::identity_on(g);
  const EndRef& m = g.end(d.moved);
  PivotWord e = slide_emission(d);
  PivotWord b = PivotWord::atom(m.edge);
  r.set(m.edge, m.is_target ? e * b : b * e.inverse());
  return r;
}

}  // namespace

Compiler Compiler::symbolic() {
  Compiler c;
  c.backend_ = Backend::symbolic;
  return c;
}

Compiler Compiler::linear(FinHopf algebra, long long max_dim) {
  Compiler c;
  c.backend_ = Backend::linear;
  c.algebra_ = std::move(algebra);
  c.max_dim_ = max_dim;
  return c;
}

const FinHopf& Compiler::algebra() const {
  if (!algebra_) throw std::logic_error("symbolic compiler carries no algebra");
  return *algebra_;
}

HopfStateSpace Compiler::space(const RibbonGraph& g) const {
  return HopfStateSpace(algebra(), g, max_dim_);
}

Operator Compiler::identity(const RibbonGraph& g) const {
  if (backend_ == Backend::symbolic) {
    Relabeling r = Relabeling::identity_on(g);
    return Operator::symbolic_op(g, g, r, r);
  }
  Matrix m = Matrix::identity(static_cast<int>(space(g).dim()));
  return Operator::linear_op(g, g, m, m);
}

Operator Compiler::slide_op(const RibbonGraph& g,
                            const SlideDescriptor& d) const {
  RibbonGraph after = slide(g, d);
  SlideDescriptor back = inverse_slide(d);
  if (backend_ == Backend::symbolic)
    return Operator::symbolic_op(g, after, slide_relabeling(g, d),
                                 slide_relabeling(after, back));
  HopfStateSpace sp = space(g);  // same edge set on both sides
  return Operator::linear_op(g, after, slide_matrix(sp, g, d),
                             slide_matrix(sp, after, back));
}

Operator Compiler::face_slide_op(const RibbonGraph& g, const GraphPath& gamma,
                                 HalfEdgeId moved) const {
  FacePathSlide fps = slide_along_face_path(g, gamma, moved);
  Operator acc = identity(g);
  RibbonGraph cur = g;
  for (const SlideDescriptor& d : fps.slides) {
    acc = acc.then(slide_op(cur, d));
    cur = slide(cur, d);
  }
  return acc;
}

Operator Compiler::reverse_op(const RibbonGraph& g, EdgeId e) const {
  RibbonGraph rev = reverse_edge(g, e);
  if (backend_ == Backend::symbolic) {
    Relabeling r = Relabeling::identity_on(g);
    r.set(e, PivotWord::atom(e).twisted_inverse());
    return Operator::symbolic_op(g, rev, r, r);
  }
  Matrix m = Matrix::identity(1);
  HopfStateSpace sp = space(g);
  for (EdgeId ed : sp.edges())
    m = Matrix::kron(m, ed == e ? algebra().t_map()
                                : Matrix::identity(algebra().dim));
  return Operator::linear_op(g, rev, m, m);
}

Operator Compiler::unit_edge_op(const RibbonGraph& before,
                                const RibbonGraph& after, EdgeId e) const {
  if (backend_ == Backend::symbolic) {
    Relabeling r = Relabeling::identity_on(before);
    r.set(e, PivotWord::identity());
    return Operator::symbolic_op(before, after, std::move(r), std::nullopt);
  }
  return Operator::linear_op(before, after,
                             insert_edge_leg(space(before), space(after), e),
                             std::nullopt);
}

Operator Compiler::counit_edge_op(const RibbonGraph& before,
                                  const RibbonGraph& after, EdgeId e) const {
  if (backend_ == Backend::symbolic)
    return Operator::symbolic_op(before, after, Relabeling::identity_on(after),
                                 std::nullopt);
  return Operator::linear_op(before, after,
                             remove_edge_leg(space(before), space(after), e),
                             std::nullopt);
}

Operator Compiler::insert_loop_op(const RibbonGraph& g, VertexId v,
                                  int position, const std::string& name) const {
  AddedEdge a = add_loop(g, v, position, name);
  return unit_edge_op(g, a.graph, a.edge);
}

Operator Compiler::insert_pendant_op(const RibbonGraph& g, VertexId v,
                                     int position, const std::string& name,
                                     bool target_at_base) const {
  AddedEdge a = add_pendant(g, v, position, name, target_at_base);
  return unit_edge_op(g, a.graph, a.edge);
}

Operator Compiler::remove_edge_op(const RibbonGraph& g, EdgeId e) const {
  return counit_edge_op(g, remove_edge(g, e), e);
}

Operator Compiler::add_edge_op_from(const RibbonGraph& g,
                                    const EdgeToFacePath& r) const {
  Operator acc = unit_edge_op(g, r.inserted, r.new_edge);
  RibbonGraph cur = r.inserted;
  for (const SlideDescriptor& d : r.slides) {
    acc = acc.then(slide_op(cur, d));
    cur = slide(cur, d);
  }
  return acc;
}

Operator Compiler::add_edge_op(const RibbonGraph& g, const GraphPath& gamma,
                               const std::string& name) const {
  return add_edge_op_from(g, add_edge_to_face_path(g, gamma, name));
}

Operator Compiler::identify_op(const RibbonGraph& from, const RibbonGraph& to,
                               const std::map<EdgeId, EdgeId>& edge_map) const {
  if (edge_map.size() != from.edges().size())
    throw std::invalid_argument("edge map must cover every source edge");
  std::set<EdgeId> image;
  for (const auto& [a, b] : edge_map) {
    from.edge(a);
    to.edge(b);
    image.insert(b);
  }
  if (image.size() != to.edges().size())
    throw std::invalid_argument("edge map is not a bijection onto the target");
  auto map_half = [&](HalfEdgeId h) {
    const EndRef& r = from.end(h);
    const Edge& te = to.edge(edge_map.at(r.edge));
    return r.is_target ? te.target : te.start;
  };
  if (from.vertices().size() != to.vertices().size())
    throw std::invalid_argument("vertex sets differ");
  for (const Vertex& v : from.vertices()) {
    const Vertex& w = to.vertex(v.id);
    if (v.order.size() != w.order.size())
      throw std::invalid_argument("vertex degrees differ");
    for (size_t i = 0; i < v.order.size(); ++i)
      if (map_half(v.order[i]) != w.order[i])
        throw std::invalid_argument(
            "edge map does not preserve the ciliated vertex orders");
  }
  if (backend_ == Backend::symbolic) {
    Relabeling fwd, bwd;
    for (const auto& [a, b] : edge_map) {
      fwd.set(b, PivotWord::atom(a));
      bwd.set(a, PivotWord::atom(b));
    }
    return Operator::symbolic_op(from, to, std::move(fwd), std::move(bwd));
  }
  HopfStateSpace sf = space(from), st = space(to);
  Matrix m(static_cast<int>(st.dim()), static_cast<int>(sf.dim()));
  Matrix mi(static_cast<int>(sf.dim()), static_cast<int>(st.dim()));
  for (long long idx = 0; idx < sf.dim(); ++idx) {
    std::vector<int> legs = sf.decode(idx);
    std::vector<int> out_legs(legs.size());
    for (EdgeId e : sf.edges())
      out_legs[st.slot(edge_map.at(e))] = legs[sf.slot(e)];
    long long out = st.encode(out_legs);
    m.at(static_cast<int>(out), static_cast<int>(idx)) = 1;
    mi.at(static_cast<int>(idx), static_cast<int>(out)) = 1;
  }
  return Operator::linear_op(from, to, std::move(m), std::move(mi));
}

Operator Compiler::twist_loop_op(const RibbonGraph& g, EdgeId beta) const {
  const Edge& be = g.edge(beta);
  EndRef s = g.end(be.start), t = g.end(be.target);
  if (s.vertex != t.vertex)
    throw std::invalid_argument("twists run along loops; edge " +
                                g.edge_name(beta) + " is not a loop");
  VertexId v = s.vertex;
  int n = std::abs(s.position - t.position) - 1;
  Operator acc = identity(g);
  RibbonGraph cur = g;
  for (int k = 0; k < n; ++k) {
    EndRef cs = cur.end(cur.edge(beta).start);
    EndRef ct = cur.end(cur.edge(beta).target);
    SlideDescriptor d;
    d.along = beta;
    if (cs.position < ct.position) {
      d.variant = SlideVariant::L;
      d.moved = cur.at(v, cs.position + 1);
    } else {
      d.variant = SlideVariant::mR;
      d.moved = cur.at(v, ct.position + 1);
    }
    acc = acc.then(slide_op(cur, d));
    cur = slide(cur, d);
  }
  if (!(cur == g)) throw std::logic_error("loop twist failed to close up");
  return acc;
}

Operator Compiler::bundled_twist_loop_op(const RibbonGraph& g,
                                         EdgeId beta) const {
  const Edge& be = g.edge(beta);
  EndRef s = g.end(be.start), t = g.end(be.target);
  if (s.vertex != t.vertex)
    throw std::invalid_argument("twists run along loops; edge " +
                                g.edge_name(beta) + " is not a loop");
  VertexId v = s.vertex;
  int lo = std::min(s.position, t.position);
  int n = std::abs(s.position - t.position) - 1;
  AddedEdge ap = add_pendant(g, v, lo + 1, "");
  EdgeId strand = ap.edge;
  Operator eta = unit_edge_op(g, ap.graph, strand);
  RibbonGraph cur = ap.graph;
  Operator bundle = identity(cur);
  for (int k = 0; k < n; ++k) {
    int ps = cur.end(cur.edge(strand).start).position;
    SlideDescriptor d{strand, SlideVariant::L, cur.at(v, ps + 1)};
    bundle = bundle.then(slide_op(cur, d));
    cur = slide(cur, d);
  }
  Operator core = twist_loop_op(cur, beta);
  RibbonGraph stripped = remove_edge(ap.graph, strand);
  if (!(stripped == g))
    throw std::logic_error("bundling failed to restore its graph");
  Operator eps = counit_edge_op(ap.graph, stripped, strand);
  Operator wrap = eta.then(bundle);
  Operator unwrap = bundle.inverse().then(eps);
  Operator fwd = wrap.then(core).then(unwrap);
  Operator bwd = wrap.then(core.inverse()).then(unwrap);
  return fwd.with_inverse(bwd);
}

Operator Compiler::twist_facepath_op(const RibbonGraph& g,
                                     const GraphPath& phi) const {
  if (phi.empty() || !phi.closed())
    throw std::invalid_argument("twists need nonempty closed paths");
  EdgeToFacePath r = add_edge_to_face_path(g, phi, "");
  Operator c = add_edge_op_from(g, r);
  Operator d = twist_loop_op(r.graph, r.new_edge);
  RibbonGraph stripped = remove_edge(r.graph, r.new_edge);
  if (!(stripped == g))
    throw std::logic_error("parallel edge removal failed to restore the graph");
  Operator e = counit_edge_op(r.graph, stripped, r.new_edge);
  Operator fwd = c.then(d).then(e);
  Operator bwd = c.then(d.inverse()).then(e);
  return fwd.with_inverse(bwd);
}

Operator Compiler::twist_gamma_op(int genus, int faces, int i, int j,
                                  bool alternative_route) const {
  int top = faces + 2 * genus - 2;
  if (!(1 <= i && i < j && j <= top))
    throw std::invalid_argument("twist_gamma_op needs 1 <= i < j <= n+2g-2");
  RibbonGraph g0 = standard_graph(genus, faces);
  GraphPath di = generator_path(g0, genus, faces, "delta_" + std::to_string(i));
  GraphPath dj = generator_path(g0, genus, faces, "delta_" + std::to_string(j));
  EdgeToFacePath r1 = add_edge_to_face_path(g0, di, "");
  Operator a1 = add_edge_op_from(g0, r1);
  EdgeToFacePath r2 =
      add_edge_to_face_path(r1.graph, GraphPath(r1.graph, dj.steps()), "");
  Operator a2 = add_edge_op_from(r1.graph, r2);
  EdgeId dpi = r1.new_edge, dpj = r2.new_edge;
  EdgeId ag = g0.edge_by_name("a" + std::to_string(genus));
  VertexId base = 0;
  RibbonGraph cur = r2.graph;
  Operator sl = identity(cur);
  auto do_slide = [&](EdgeId along, SlideVariant var, HalfEdgeId moved) {
    SlideDescriptor d{along, var, moved};
    sl = sl.then(slide_op(cur, d));
    cur = slide(cur, d);
  };
  auto pos_of = [&](HalfEdgeId h) { return cur.end(h).position; };
  int nb = pos_of(cur.edge(ag).start) - pos_of(cur.edge(dpj).target) - 1;
  if (nb < 0) throw std::logic_error("unexpected end layout before gamma twist");
  if (!alternative_route) {
    // clear the arc between the two curves by parking its ends past the
    // handle loop, then move the one remaining blocker along the first copy
    for (int k = 0; k < nb; ++k)
      do_slide(ag, SlideVariant::R, cur.at(base, pos_of(cur.edge(ag).start) - 1));
    do_slide(dpi, SlideVariant::L, cur.at(base, pos_of(cur.edge(dpi).start) + 1));
  } else {
    // same clearing done end by end around the second copy instead
    for (int k = 0; k < nb; ++k) {
      HalfEdgeId moved = cur.at(base, pos_of(cur.edge(dpj).target) + 1);
      do_slide(dpj, SlideVariant::mR, moved);
      do_slide(ag, SlideVariant::L, moved);
    }
    for (int k = 0; k < nb + 1; ++k)
      do_slide(dpi, SlideVariant::L,
               cur.at(base, pos_of(cur.edge(dpi).start) + 1));
  }
  GraphPath gstar(cur, {PathStep{ag, false}, PathStep{dpj, false},
                        PathStep{ag, true}, PathStep{dpi, true}});
  Operator tw = twist_facepath_op(cur, gstar);
  Operator undo = sl.inverse();
  RibbonGraph strip1 = remove_edge(r2.graph, dpj);
  if (!(strip1 == r1.graph))
    throw std::logic_error("gamma twist failed to shed its second copy");
  Operator e2 = counit_edge_op(r2.graph, strip1, dpj);
  RibbonGraph strip2 = remove_edge(strip1, dpi);
  if (!(strip2 == g0))
    throw std::logic_error("gamma twist failed to shed its first copy");
  Operator e1 = counit_edge_op(strip1, strip2, dpi);
  Operator head = a1.then(a2).then(sl);
  Operator tail = undo.then(e2).then(e1);
  Operator fwd = head.then(tw).then(tail);
  Operator bwd = head.then(tw.inverse()).then(tail);
  return fwd.with_inverse(bwd);
}

Operator Compiler::named_twist(int genus, int faces,
                               const std::string& name) const {
  if (genus < 1) throw std::invalid_argument("standard graphs need genus >= 1");
  int top = faces + 2 * genus - 2;
  RibbonGraph g0 = standard_graph(genus, faces);
  auto fail = [&]() -> Operator {
    throw std::invalid_argument("unknown twist name: " + name);
  };
  if (genus == 1 && faces == 0) {
    if (name == "D_a") return twist_loop_op(g0, g0.edge_by_name("a1"));
    if (name == "D_b") return twist_loop_op(g0, g0.edge_by_name("b1"));
  }
  if (name.rfind("D_alpha_", 0) == 0) {
    int k = std::stoi(name.substr(8));
    if (k < 1 || k > genus) return fail();
    return twist_loop_op(g0, g0.edge_by_name("a" + std::to_string(k)));
  }
  if (name.rfind("D_delta_", 0) == 0) {
    int k = std::stoi(name.substr(8));
    if (k < 0 || k > top) return fail();
    return twist_facepath_op(
        g0, generator_path(g0, genus, faces, name.substr(2)));
  }
  if (name.rfind("D_gamma_", 0) == 0) {
    std::string rest = name.substr(8);
    size_t us = rest.find('_');
    if (us == std::string::npos) return fail();
    int k = std::stoi(rest.substr(0, us));
    int l = std::stoi(rest.substr(us + 1));
    if (k < 0 || l < 0 || k > top || l > top || k == l) return fail();
    if (1 <= k && k < l) return twist_gamma_op(genus, faces, k, l);
    return twist_facepath_op(g0,
                             generator_path(g0, genus, faces, name.substr(2)));
  }
  return fail();
}

std::map<std::string, Operator> Compiler::generating_twists(int genus,
                                                            int faces) const {
  if (genus < 1) throw std::invalid_argument("standard graphs need genus >= 1");
  std::map<std::string, Operator> out;
  int top = faces + 2 * genus - 2;
  for (int k = 1; k <= genus; ++k) {
    std::string nm = "D_alpha_" + std::to_string(k);
    out.emplace(nm, named_twist(genus, faces, nm));
  }
  for (int k = 0; k <= top; ++k) {
    std::string nm = "D_delta_" + std::to_string(k);
    out.emplace(nm, named_twist(genus, faces, nm));
  }
  for (int k = 0; k <= top; ++k)
    for (int l = 0; l <= top; ++l) {
      if (k == l) continue;
      std::string nm =
          "D_gamma_" + std::to_string(k) + "_" + std::to_string(l);
      out.emplace(nm, named_twist(genus, faces, nm));
    }
  if (genus == 1 && faces == 0) {
    out.emplace("D_a", named_twist(1, 0, "D_a"));
    out.emplace("D_b", named_twist(1, 0, "D_b"));
  }
  return out;
}

namespace {

struct McgTok {
  enum Kind { name, lparen, rparen, caret, number, stop } kind = stop;
  std::string text;
  int value = 0;
};

std::vector<McgTok> lex_mcg(const std::string& s) {
  std::vector<McgTok> out;
  size_t i = 0;
  auto isword = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(') {
      out.push_back({McgTok::lparen, "(", 0});
      ++i;
    } else if (c == ')') {
      out.push_back({McgTok::rparen, ")", 0});
      ++i;
    } else if (c == '^') {
      out.push_back({McgTok::caret, "^", 0});
      ++i;
    } else if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      if (j == i + 1 && c == '-')
        throw std::invalid_argument("stray '-' in twist word");
      out.push_back({McgTok::number, s.substr(i, j - i),
                     std::stoi(s.substr(i, j - i))});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() && isword(s[j])) ++j;
      out.push_back({McgTok::name, s.substr(i, j - i), 0});
      i = j;
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + c +
                                  "' in twist word");
    }
  }
  out.push_back({McgTok::stop, "", 0});
  return out;
}

struct McgParser {
  const std::vector<McgTok>& toks;
  const std::map<std::string, Operator>& gens;
  const Operator& ident;
  size_t pos = 0;

  Operator parse_seq(McgTok::Kind stop_kind) {
    std::vector<Operator> items;
    while (toks[pos].kind != stop_kind) items.push_back(parse_item());
    if (items.empty()) return ident;
    Operator r = items.back();
    for (int k = static_cast<int>(items.size()) - 2; k >= 0; --k)
      r = r.then(items[k]);
    return r;
  }

  Operator parse_item() {
    Operator base = parse_primary();
    while (toks[pos].kind == McgTok::caret) {
      ++pos;
      if (toks[pos].kind != McgTok::number)
        throw std::invalid_argument("'^' must be followed by an integer");
      base = base.pow(toks[pos].value);
      ++pos;
    }
    return base;
  }

  Operator parse_primary() {
    if (toks[pos].kind == McgTok::lparen) {
      ++pos;
      Operator r = parse_seq(McgTok::rparen);
      ++pos;  // past ')'
      return r;
    }
    if (toks[pos].kind == McgTok::name) {
      auto it = gens.find(toks[pos].text);
      if (it == gens.end())
        throw std::invalid_argument("unknown twist name: " + toks[pos].text);
      ++pos;
      return it->second;
    }
    throw std::invalid_argument("expected a twist name or '('");
  }
};

}  // namespace

Operator Compiler::mcg_word_op(int genus, int faces,
                               const std::string& word) const {
  std::vector<McgTok> toks = lex_mcg(word);
  std::set<std::string> used;
  for (const McgTok& t : toks)
    if (t.kind == McgTok::name) used.insert(t.text);
  std::map<std::string, Operator> gens;
  for (const std::string& nm : used)
    gens.emplace(nm, named_twist(genus, faces, nm));
  Operator ident = identity(standard_graph(genus, faces));
  McgParser p{toks, gens, ident};
  Operator out = p.parse_seq(McgTok::stop);
  if (p.toks[p.pos].kind != McgTok::stop)
    throw std::invalid_argument("trailing input in twist word");
  return out;
}

Operator Compiler::holonomy_conjugation(const RibbonGraph& g, VertexId v,
                                        const GraphPath& face) const {
  if (backend_ == Backend::symbolic) {
    PivotWord h = symbolic_emission(face).twisted_inverse();
    Relabeling act = symbolic_vertex_action(g, v, -1);
    std::map<int, PivotWord> sub{{-1, h}};
    Relabeling out;
    for (const auto& [e, w] : act.words()) out.set(e, w.substituted(sub));
    return Operator::symbolic_op(g, g, std::move(out), std::nullopt);
  }
  HopfStateSpace sp = space(g);
  Matrix m = vertex_action(sp, g, v) *
             Matrix::kron(algebra().t_map(),
                          Matrix::identity(static_cast<int>(sp.dim()))) *
             face_coaction(sp, face);
  return Operator::linear_op(g, g, std::move(m), std::nullopt);
}

}  // namespace rgmcg
