#include "rgmcg/hopf.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace rgmcg {

namespace {

// Swap map H (x) H -> H (x) H.
Matrix swap_matrix(int d) {
  Matrix t(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) t.at(j * d + i, i * d + j) = 1;
  return t;
}

Rational parse_scalar(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      return Rational(s);
    } catch (...) {
      throw std::invalid_argument("bad scalar literal: " + s);
    }
  }
  throw std::invalid_argument("scalars must be integers or rational strings");
}

}  // namespace

FinHopf::FinHopf(int dim, std::vector<std::string> basis_names)
    : dim_(dim), names_(std::move(basis_names)) {
  if (dim <= 0) throw std::invalid_argument("algebra dimension must be positive");
  if (int(names_.size()) != dim) throw std::invalid_argument("basis name count must match dimension");
  unit.assign(dim, 0);
  counit.assign(dim, 0);
  mult.assign(dim, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim, 0)));
  comult = mult;
  antipode = Matrix(dim, dim);
}

FinHopf::Element FinHopf::multiply(const Element& a, const Element& b) const {
  Element r(dim_, 0);
  for (int i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      for (int k = 0; k < dim_; ++k)
        if (mult[i][j][k] != 0) r[k] += a[i] * b[j] * mult[i][j][k];
    }
  }
  return r;
}

Rational FinHopf::counit_of(const Element& a) const {
  Rational r = 0;
  for (int i = 0; i < dim_; ++i) r += a[i] * counit[i];
  return r;
}

Matrix FinHopf::left_mult(const Element& a) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int i = 0; i < dim_; ++i) {
      if (a[i] == 0) continue;
      for (int k = 0; k < dim_; ++k)
        if (mult[i][j][k] != 0) m.at(k, j) += a[i] * mult[i][j][k];
    }
  return m;
}

Matrix FinHopf::right_mult(const Element& a) const {
  Matrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      if (a[j] == 0) continue;
      for (int k = 0; k < dim_; ++k)
        if (mult[i][j][k] != 0) m.at(k, i) += a[j] * mult[i][j][k];
    }
  return m;
}

Matrix FinHopf::antipode_inverse() const { return antipode.inverse(); }

Matrix FinHopf::t_map() const {
  if (!has_pivot()) throw std::logic_error("t_map requires a pivot");
  return left_mult(pivot) * antipode;
}

Matrix FinHopf::mult_matrix() const {
  Matrix m(dim_, dim_ * dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) m.at(k, i * dim_ + j) = mult[i][j][k];
  return m;
}

Matrix FinHopf::comult_matrix() const {
  Matrix m(dim_ * dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) m.at(j * dim_ + k, i) = comult[i][j][k];
  return m;
}

Matrix FinHopf::unit_matrix() const {
  Matrix m(dim_, 1);
  for (int i = 0; i < dim_; ++i) m.at(i, 0) = unit[i];
  return m;
}

Matrix FinHopf::counit_matrix() const {
  Matrix m(1, dim_);
  for (int i = 0; i < dim_; ++i) m.at(0, i) = counit[i];
  return m;
}

std::vector<std::string> FinHopf::check_axioms() const {
  std::vector<std::string> failed;
  const int d = dim_;
  const Matrix id = Matrix::identity(d);
  const Matrix m = mult_matrix(), dl = comult_matrix();
  const Matrix eta = unit_matrix(), eps = counit_matrix();
  const Matrix tau = swap_matrix(d);

  if (!(m * Matrix::kron(m, id) == m * Matrix::kron(id, m))) failed.push_back("associativity");
  if (!(m * Matrix::kron(eta, id) == id && m * Matrix::kron(id, eta) == id)) failed.push_back("unit");
  if (!(Matrix::kron(dl, id) * dl == Matrix::kron(id, dl) * dl)) failed.push_back("coassociativity");
  if (!(Matrix::kron(eps, id) * dl == id && Matrix::kron(id, eps) * dl == id)) failed.push_back("counit");
  {
    const Matrix lhs = dl * m;
    const Matrix mid = Matrix::kron(Matrix::kron(id, tau), id);
    const Matrix rhs = Matrix::kron(m, m) * mid * Matrix::kron(dl, dl);
    if (!(lhs == rhs)) failed.push_back("comultiplication is multiplicative");
  }
  if (!(dl * eta == Matrix::kron(eta, eta))) failed.push_back("comultiplication preserves unit");
  if (!(eps * m == Matrix::kron(eps, eps))) failed.push_back("counit is multiplicative");
  if (!(eps * eta == Matrix::identity(1))) failed.push_back("counit of unit");
  {
    const Matrix he = eta * eps;
    if (!(m * Matrix::kron(antipode, id) * dl == he && m * Matrix::kron(id, antipode) * dl == he))
      failed.push_back("antipode");
  }
  if (antipode.rank() != d) failed.push_back("antipode invertible");

  if (has_pivot()) {
    Matrix pv(d, 1);
    for (int i = 0; i < d; ++i) pv.at(i, 0) = pivot[i];
    if (!(dl * pv == Matrix::kron(pv, pv)) || counit_of(pivot) != 1)
      failed.push_back("pivot grouplike");
    Element p_inv(d, 0);
    bool invertible = false;
    if (antipode.rank() == d) {
      Matrix iv = antipode * pv;  // S(p) is the inverse of a grouplike p
      for (int i = 0; i < d; ++i) p_inv[i] = iv.at(i, 0);
      invertible = multiply(pivot, p_inv) == unit;
    }
    if (!invertible)
      failed.push_back("pivot invertible");
    else if (!(antipode * antipode == left_mult(pivot) * right_mult(p_inv)))
      failed.push_back("pivotal identity");
    if (invertible && has_pivot() && antipode.rank() == d) {
      const Matrix t = t_map();
      if (!(t * t == id)) failed.push_back("t involution");
    }
  }
  return failed;
}

std::vector<FinHopf::Element> FinHopf::grouplikes() const {
  std::vector<Element> out;
  auto is_grouplike = [&](const Element& c) {
    if (counit_of(c) != 1) return false;
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        Rational lhs = 0;
        for (int i = 0; i < dim_; ++i) lhs += c[i] * comult[i][j][k];
        if (lhs != c[j] * c[k]) return false;
      }
    return true;
  };
  for (int i = 0; i < dim_; ++i) {
    Element e(dim_, 0);
    e[i] = 1;
    if (is_grouplike(e)) out.push_back(e);
  }
  if (is_grouplike(unit)) {
    bool seen = false;
    for (const auto& g : out) seen = seen || g == unit;
    if (!seen) out.push_back(unit);
  }
  return out;
}

std::vector<FinHopf::Element> FinHopf::find_pivots() const {
  std::vector<Element> out;
  const Matrix s2 = antipode * antipode;
  for (const Element& g : grouplikes()) {
    Matrix gv(dim_, 1);
    for (int i = 0; i < dim_; ++i) gv.at(i, 0) = g[i];
    Matrix iv = antipode * gv;
    Element g_inv(dim_, 0);
    for (int i = 0; i < dim_; ++i) g_inv[i] = iv.at(i, 0);
    if (!(multiply(g, g_inv) == unit)) continue;
    if (s2 == left_mult(g) * right_mult(g_inv)) out.push_back(g);
  }
  return out;
}

void FinHopf::set_pivot(Element p) {
  if (int(p.size()) != dim_) throw std::invalid_argument("pivot has wrong dimension");
  Element saved = std::move(pivot);
  pivot = std::move(p);
  std::vector<std::string> failed = check_axioms();
  bool pivot_bad = false;
  for (const auto& f : failed)
    pivot_bad = pivot_bad || f == "pivot grouplike" || f == "pivot invertible" ||
                f == "pivotal identity" || f == "t involution";
  if (pivot_bad) {
    std::string msg = "element is not a valid pivot:";
    for (const auto& f : failed) msg += " [" + f + "]";
    pivot = std::move(saved);
    throw std::invalid_argument(msg);
  }
}

std::string FinHopf::element_to_string(const Element& a) const {
  std::string s;
  for (int i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += " + ";
    std::ostringstream os;
    if (a[i] != 1) os << "(" << a[i] << ")*";
    os << names_[i];
    s += os.str();
  }
  return s.empty() ? "0" : s;
}

FinHopf FinHopf::group_algebra(const FiniteGroup& g, int pivot_element) {
  const int n = g.order();
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(g.name(i));
  FinHopf h(n, std::move(names));
  h.unit[g.identity()] = 1;
  for (int i = 0; i < n; ++i) {
    h.counit[i] = 1;
    h.comult[i][i][i] = 1;
    h.antipode.at(g.inv(i), i) = 1;
    for (int j = 0; j < n; ++j) h.mult[i][j][g.mul(i, j)] = 1;
  }
  Element p(n, 0);
  p[pivot_element < 0 ? g.identity() : pivot_element] = 1;
  h.set_pivot(std::move(p));
  return h;
}

FinHopf FinHopf::sweedler4() {
  FinHopf h(4, {"1", "g", "x", "gx"});
  auto set = [&](int i, int j, int k, int v) { h.mult[i][j][k] = v; };
  for (int i = 0; i < 4; ++i) {
    set(0, i, i, 1);
    if (i) set(i, 0, i, 1);
  }
  set(1, 1, 0, 1);   // g g = 1
  set(1, 2, 3, 1);   // g x = gx
  set(1, 3, 2, 1);   // g gx = x
  set(2, 1, 3, -1);  // x g = -gx
  set(3, 1, 2, -1);  // gx g = -x
  // x x, x gx, gx x, gx gx all vanish.
  h.comult[0][0][0] = 1;
  h.comult[1][1][1] = 1;
  h.comult[2][2][0] = 1;  // x (x) 1
  h.comult[2][1][2] = 1;  // g (x) x
  h.comult[3][3][1] = 1;  // gx (x) g
  h.comult[3][0][3] = 1;  // 1 (x) gx
  h.counit = {1, 1, 0, 0};
  h.unit = {1, 0, 0, 0};
  h.antipode.at(0, 0) = 1;
  h.antipode.at(1, 1) = 1;
  h.antipode.at(3, 2) = -1;  // S(x) = -gx
  h.antipode.at(2, 3) = 1;   // S(gx) = x
  h.set_pivot({0, 1, 0, 0});
  return h;
}

FinHopf FinHopf::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("bad algebra JSON: ") + e.what());
  }
  auto need = [&](const char* key) -> const nlohmann::json& {
    if (!j.contains(key))
      throw std::invalid_argument(std::string("algebra JSON needs a ") + key +
                                  " field");
    return j.at(key);
  };
  const int d = need("dim").get<int>();
  std::vector<std::string> names;
  if (j.contains("names"))
    names = j.at("names").get<std::vector<std::string>>();
  else
    for (int i = 0; i < d; ++i) names.push_back("e" + std::to_string(i));
  FinHopf h(d, std::move(names));

  auto read_vec = [&](const char* key, std::vector<Rational>& out) {
    const auto& a = need(key);
    if (!a.is_array() || int(a.size()) != d) throw std::invalid_argument(std::string(key) + " must be an array of length dim");
    for (int i = 0; i < d; ++i) out[i] = parse_scalar(a[i]);
  };
  read_vec("unit", h.unit);
  read_vec("counit", h.counit);

  auto read_cube = [&](const char* key, std::vector<std::vector<std::vector<Rational>>>& out) {
    const auto& a = need(key);
    if (!a.is_array() || int(a.size()) != d) throw std::invalid_argument(std::string(key) + " must be a dim^3 array");
    for (int i = 0; i < d; ++i) {
      if (!a[i].is_array() || int(a[i].size()) != d) throw std::invalid_argument(std::string(key) + " must be a dim^3 array");
      for (int jj = 0; jj < d; ++jj) {
        if (!a[i][jj].is_array() || int(a[i][jj].size()) != d) throw std::invalid_argument(std::string(key) + " must be a dim^3 array");
        for (int k = 0; k < d; ++k) out[i][jj][k] = parse_scalar(a[i][jj][k]);
      }
    }
  };
  read_cube("mult", h.mult);
  read_cube("comult", h.comult);

  const auto& s = need("antipode");
  if (!s.is_array() || int(s.size()) != d) throw std::invalid_argument("antipode must be a dim x dim array");
  for (int r = 0; r < d; ++r) {
    if (!s[r].is_array() || int(s[r].size()) != d) throw std::invalid_argument("antipode must be a dim x dim array");
    for (int c = 0; c < d; ++c) h.antipode.at(r, c) = parse_scalar(s[r][c]);
  }
  if (j.contains("pivot")) {
    Element p(d, 0);
    read_vec("pivot", p);
    h.set_pivot(std::move(p));
  }
  return h;
}

}  // namespace rgmcg
