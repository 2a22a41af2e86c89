#include "rgmcg/linear_ops.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rgmcg {

namespace {

// Sparse superposition of leg tuples; auxiliary legs are prepended to the
// tuple when present.
using Term = std::map<std::vector<int>, Rational>;

void add_term(Term& t, std::vector<int> key, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = t.emplace(std::move(key), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

// Left-multiply leg `leg` by basis vector u.
Term mult_left(const FinHopf& h, const Term& t, int leg, int u) {
  Term out;
  for (const auto& [key, c] : t) {
    int x = key[leg];
    for (int y = 0; y < h.dim(); ++y) {
      const Rational& m = h.mult[u][x][y];
      if (m == 0) continue;
      std::vector<int> k2 = key;
      k2[leg] = y;
      add_term(out, std::move(k2), c * m);
    }
  }
  return out;
}

// Right-multiply leg `leg` by the image of basis vector u under `map`.
Term mult_right_mapped(const FinHopf& h, const Matrix& map, const Term& t,
                       int leg, int u) {
  Term out;
  for (const auto& [key, c] : t) {
    int x = key[leg];
    for (int w = 0; w < h.dim(); ++w) {
      const Rational& mw = map.at(w, u);
      if (mw == 0) continue;
      for (int y = 0; y < h.dim(); ++y) {
        const Rational& m = h.mult[x][w][y];
        if (m == 0) continue;
        std::vector<int> k2 = key;
        k2[leg] = y;
        add_term(out, std::move(k2), c * mw * m);
      }
    }
  }
  return out;
}

// Iterated comultiplication of a basis vector into n Sweedler factors.
std::vector<std::pair<std::vector<int>, Rational>> expand_comult(
    const FinHopf& h, int basis, int n) {
  std::vector<std::pair<std::vector<int>, Rational>> terms = {
      {{basis}, Rational(1)}};
  for (int round = 1; round < n; ++round) {
    std::vector<std::pair<std::vector<int>, Rational>> next;
    for (const auto& [parts, c] : terms) {
      int p0 = parts[0];
      for (int j = 0; j < h.dim(); ++j)
        for (int k = 0; k < h.dim(); ++k) {
          const Rational& cw = h.comult[p0][j][k];
          if (cw == 0) continue;
          std::vector<int> np;
          np.reserve(parts.size() + 1);
          np.push_back(j);
          np.push_back(k);
          np.insert(np.end(), parts.begin() + 1, parts.end());
          next.push_back({std::move(np), c * cw});
        }
    }
    terms = std::move(next);
  }
  return terms;
}

// Shared walk-coaction builder: the accumulator leg is key[0], edge legs are
// shifted by one.
Matrix walk_coaction(const HopfStateSpace& sp,
                     const std::vector<std::pair<EdgeId, bool>>& steps) {
  const FinHopf& h = sp.hopf();
  const int d = h.dim();
  bool reversed_step = false;
  for (const auto& s : steps) reversed_step = reversed_step || !s.second;
  Matrix t_mat = reversed_step ? h.t_map() : Matrix();

  Matrix out(d * sp.dim(), sp.dim());
  for (long long m = 0; m < sp.dim(); ++m) {
    std::vector<int> tuple = sp.decode(m);
    Term cur;
    for (int u = 0; u < d; ++u) {
      if (h.unit[u] == 0) continue;
      std::vector<int> key;
      key.push_back(u);
      key.insert(key.end(), tuple.begin(), tuple.end());
      add_term(cur, std::move(key), h.unit[u]);
    }
    for (const auto& [edge, forward] : steps) {
      const int leg = 1 + sp.slot(edge);
      Term next;
      for (const auto& [key, c] : cur) {
        int x = key[leg];
        for (int j = 0; j < d; ++j)
          for (int k = 0; k < d; ++k) {
            const Rational& cw = h.comult[x][j][k];
            if (cw == 0) continue;
            if (forward) {
              // emit the first factor, keep the second
              for (int z = 0; z < d; ++z) {
                const Rational& mz = h.mult[j][key[0]][z];
                if (mz == 0) continue;
                std::vector<int> k2 = key;
                k2[leg] = k;
                k2[0] = z;
                add_term(next, std::move(k2), c * cw * mz);
              }
            } else {
              // emit T(second factor), keep the first
              for (int u = 0; u < d; ++u) {
                const Rational& tu = t_mat.at(u, k);
                if (tu == 0) continue;
                for (int z = 0; z < d; ++z) {
                  const Rational& mz = h.mult[u][key[0]][z];
                  if (mz == 0) continue;
                  std::vector<int> k2 = key;
                  k2[leg] = j;
                  k2[0] = z;
                  add_term(next, std::move(k2), c * cw * tu * mz);
                }
              }
            }
          }
      }
      cur = std::move(next);
    }
    for (const auto& [key, c] : cur) {
      std::vector<int> rest(key.begin() + 1, key.end());
      out.at(key[0] * sp.dim() + sp.encode(rest), m) += c;
    }
  }
  return out;
}

}  // namespace

HopfStateSpace::HopfStateSpace(const FinHopf& h, const RibbonGraph& g,
                               long long max_dim)
    : h_(h) {
  for (const Edge& e : g.edges()) edges_.push_back(e.id);
  std::sort(edges_.begin(), edges_.end());
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (dim_ > max_dim / h_.dim())
      throw std::runtime_error(
          "state dimension exceeds budget: " + std::to_string(h_.dim()) + "^" +
          std::to_string(edges_.size()));
    dim_ *= h_.dim();
  }
}

int HopfStateSpace::slot(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e)
    throw std::out_of_range("edge " + std::to_string(e) +
                            " not in state space");
  return static_cast<int>(it - edges_.begin());
}

std::vector<int> HopfStateSpace::decode(long long index) const {
  std::vector<int> out(edges_.size());
  for (size_t i = edges_.size(); i-- > 0;) {
    out[i] = static_cast<int>(index % h_.dim());
    index /= h_.dim();
  }
  return out;
}

long long HopfStateSpace::encode(const std::vector<int>& legs) const {
  if (legs.size() != edges_.size())
    throw std::invalid_argument("leg tuple has wrong arity");
  long long idx = 0;
  for (int v : legs) idx = idx * h_.dim() + v;
  return idx;
}

EdgeOps edge_module_ops(const HopfStateSpace& sp, EdgeId e) {
  const FinHopf& h = sp.hopf();
  const int d = h.dim();
  const int leg = sp.slot(e);
  EdgeOps ops;

  ops.act_in = Matrix(sp.dim(), d * sp.dim());
  ops.act_out = Matrix(sp.dim(), d * sp.dim());
  for (long long m = 0; m < sp.dim(); ++m) {
    std::vector<int> tuple = sp.decode(m);
    for (int u = 0; u < d; ++u) {
      Term t;
      add_term(t, tuple, 1);
      for (const auto& [key, c] : mult_left(h, t, leg, u))
        ops.act_in.at(sp.encode(key), u * sp.dim() + m) += c;
      for (const auto& [key, c] : mult_right_mapped(h, h.antipode, t, leg, u))
        ops.act_out.at(sp.encode(key), u * sp.dim() + m) += c;
    }
  }
  ops.coact_along = walk_coaction(sp, {{e, true}});
  ops.coact_against = walk_coaction(sp, {{e, false}});
  return ops;
}

Matrix vertex_action(const HopfStateSpace& sp, const RibbonGraph& g,
                     VertexId v) {
  const FinHopf& h = sp.hopf();
  const int d = h.dim();
  const auto& order = g.vertex(v).order;
  const int n = static_cast<int>(order.size());
  Matrix out(sp.dim(), d * sp.dim());
  for (int hb = 0; hb < d; ++hb) {
    if (n == 0) {
      // no incident ends: the argument acts through its counit
      for (long long m = 0; m < sp.dim(); ++m)
        out.at(m, hb * sp.dim() + m) += h.counit[hb];
      continue;
    }
    auto terms = expand_comult(h, hb, n);
    for (long long m = 0; m < sp.dim(); ++m) {
      std::vector<int> tuple = sp.decode(m);
      for (const auto& [parts, c0] : terms) {
        Term t;
        add_term(t, tuple, c0);
        for (int i = 0; i < n && !t.empty(); ++i) {
          const EndRef& r = g.end(order[i]);
          const int leg = sp.slot(r.edge);
          t = r.is_target ? mult_left(h, t, leg, parts[i])
                          : mult_right_mapped(h, h.antipode, t, leg, parts[i]);
        }
        for (const auto& [key, c] : t)
          out.at(sp.encode(key), hb * sp.dim() + m) += c;
      }
    }
  }
  return out;
}

Matrix face_coaction(const HopfStateSpace& sp, const GraphPath& face) {
  std::vector<std::pair<EdgeId, bool>> steps;
  for (const PathStep& s : face.steps()) steps.push_back({s.edge, s.forward});
  return walk_coaction(sp, steps);
}

Matrix right_face_coaction(const HopfStateSpace& sp, const GraphPath& face) {
  const FinHopf& h = sp.hopf();
  const int d = h.dim();
  Matrix delta = face_coaction(sp, face);
  Matrix t = h.t_map();
  Matrix out(sp.dim() * d, sp.dim());
  for (int a = 0; a < d; ++a)
    for (long long m = 0; m < sp.dim(); ++m)
      for (long long col = 0; col < sp.dim(); ++col) {
        const Rational& x = delta.at(a * sp.dim() + m, col);
        if (x == 0) continue;
        for (int u = 0; u < d; ++u)
          if (t.at(u, a) != 0) out.at(m * d + u, col) += t.at(u, a) * x;
      }
  return out;
}

Matrix insert_edge_leg(const HopfStateSpace& from, const HopfStateSpace& to,
                       EdgeId e) {
  const FinHopf& h = to.hopf();
  if (from.edges().size() + 1 != to.edges().size())
    throw std::invalid_argument("insert_edge_leg: spaces differ by one edge");
  Matrix out(to.dim(), from.dim());
  const int tslot = to.slot(e);
  for (long long m = 0; m < from.dim(); ++m) {
    std::vector<int> src = from.decode(m);
    std::vector<int> dst(to.edges().size());
    for (size_t i = 0; i < to.edges().size(); ++i)
      if (static_cast<int>(i) != tslot) dst[i] = src[from.slot(to.edges()[i])];
    for (int u = 0; u < h.dim(); ++u) {
      if (h.unit[u] == 0) continue;
      dst[tslot] = u;
      out.at(to.encode(dst), m) += h.unit[u];
    }
  }
  return out;
}

Matrix remove_edge_leg(const HopfStateSpace& from, const HopfStateSpace& to,
                       EdgeId e) {
  const FinHopf& h = from.hopf();
  if (from.edges().size() != to.edges().size() + 1)
    throw std::invalid_argument("remove_edge_leg: spaces differ by one edge");
  Matrix out(to.dim(), from.dim());
  const int fslot = from.slot(e);
  for (long long m = 0; m < from.dim(); ++m) {
    std::vector<int> src = from.decode(m);
    std::vector<int> dst(to.edges().size());
    for (size_t i = 0; i < to.edges().size(); ++i)
      dst[i] = src[from.slot(to.edges()[i])];
    out.at(to.encode(dst), m) += h.counit[src[fslot]];
  }
  return out;
}

Matrix counit_first_leg(const HopfStateSpace& sp) {
  const FinHopf& h = sp.hopf();
  Matrix out(sp.dim(), h.dim() * sp.dim());
  for (int u = 0; u < h.dim(); ++u)
    for (long long m = 0; m < sp.dim(); ++m)
      out.at(m, u * sp.dim() + m) = h.counit[u];
  return out;
}

Matrix unit_first_leg(const HopfStateSpace& sp) {
  const FinHopf& h = sp.hopf();
  Matrix out(h.dim() * sp.dim(), sp.dim());
  for (int u = 0; u < h.dim(); ++u) {
    if (h.unit[u] == 0) continue;
    for (long long m = 0; m < sp.dim(); ++m)
      out.at(u * sp.dim() + m, m) = h.unit[u];
  }
  return out;
}

Matrix slide_matrix(const HopfStateSpace& sp, const RibbonGraph& g,
                    const SlideDescriptor& d) {
  const FinHopf& h = sp.hopf();
  const int dim = h.dim();
  const EndRef& mv = g.end(d.moved);
  if (mv.edge == d.along)
    throw std::invalid_argument("slide_matrix: moved end belongs to the slid edge");
  const int leg_a = sp.slot(d.along);
  const int leg_b = sp.slot(mv.edge);

  // Transformation applied to the split-off factor before it relabels the
  // moved edge.
  Matrix w;
  bool emit_first = d.variant == SlideVariant::L || d.variant == SlideVariant::mL;
  switch (d.variant) {
    case SlideVariant::L:
      w = Matrix::identity(dim);
      break;
    case SlideVariant::mL:
      w = h.antipode_inverse();
      break;
    case SlideVariant::R:
      w = h.antipode_inverse() * h.t_map();
      break;
    case SlideVariant::mR:
      w = h.t_map();
      break;
  }
  if (!mv.is_target) w = h.antipode * w;  // start ends multiply through S

  Matrix out(sp.dim(), sp.dim());
  for (long long m = 0; m < sp.dim(); ++m) {
    std::vector<int> tuple = sp.decode(m);
    int x = tuple[leg_a];
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        const Rational& cw = h.comult[x][j][k];
        if (cw == 0) continue;
        int piece = emit_first ? j : k;
        int kept = emit_first ? k : j;
        std::vector<int> t2 = tuple;
        t2[leg_a] = kept;
        for (int u = 0; u < dim; ++u) {
          const Rational& wu = w.at(u, piece);
          if (wu == 0) continue;
          Term t;
          add_term(t, t2, cw * wu);
          Term res = mv.is_target ? mult_left(h, t, leg_b, u)
                                  : [&] {  // w already contains S
                                      Term r;
                                      for (const auto& [key, c] : t) {
                                        int b = key[leg_b];
                                        for (int y = 0; y < dim; ++y) {
                                          const Rational& mm = h.mult[b][u][y];
                                          if (mm == 0) continue;
                                          std::vector<int> k2 = key;
                                          k2[leg_b] = y;
                                          add_term(r, std::move(k2), c * mm);
                                        }
                                      }
                                      return r;
                                    }();
          for (const auto& [key, c] : res) out.at(sp.encode(key), m) += c;
        }
      }
  }
  return out;
}

}  // namespace rgmcg
