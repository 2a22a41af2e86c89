#include "rgmcg/subspace.hpp"

#include <stdexcept>

namespace rgmcg {

Matrix echelon_column_basis(const Matrix& m) {
  Matrix r = m.transpose();
  r.rref_in_place();
  int nonzero = 0;
  for (int i = 0; i < r.rows(); ++i) {
    bool z = true;
    for (int j = 0; j < r.cols(); ++j) z = z && r.at(i, j) == 0;
    if (!z) ++nonzero;
  }
  Matrix out(m.rows(), nonzero);
  for (int i = 0; i < nonzero; ++i)
    for (int j = 0; j < m.rows(); ++j) out.at(j, i) = r.at(i, j);
  return out;
}

namespace {

Matrix unit_tensor_id(const FinHopf& h, long long n) {
  Matrix m(h.dim() * n, n);
  for (int u = 0; u < h.dim(); ++u) {
    if (h.unit[u] == 0) continue;
    for (long long i = 0; i < n; ++i) m.at(u * n + i, i) = h.unit[u];
  }
  return m;
}

Matrix counit_tensor_id(const FinHopf& h, long long n) {
  Matrix m(n, h.dim() * n);
  for (int u = 0; u < h.dim(); ++u) {
    if (h.counit[u] == 0) continue;
    for (long long i = 0; i < n; ++i) m.at(i, u * n + i) = h.counit[u];
  }
  return m;
}

}  // namespace

SubspaceData subspaces(const FinHopf& h, const Matrix& action,
                       const Matrix& coaction) {
  const int d = h.dim();
  const long long n = action.rows();
  if (action.cols() != d * n || coaction.rows() != d * n || coaction.cols() != n)
    throw std::invalid_argument("subspaces: operator shapes inconsistent");

  SubspaceData s;
  s.space_dim = n;
  s.coinv_basis = (coaction - unit_tensor_id(h, n)).kernel();
  s.inv_proj = (action - counit_tensor_id(h, n)).left_null();

  Matrix pi_iota = s.inv_proj * s.coinv_basis;
  s.incl = echelon_column_basis(pi_iota);
  s.proj = s.incl.cols() == 0 ? Matrix(0, s.coinv_basis.cols())
                              : s.incl.solve(pi_iota);
  if (!(s.incl * s.proj == pi_iota))
    throw std::logic_error("subspaces: factorization failed");
  return s;
}

Matrix induced_on_biinv(const FinHopf& h, const SubspaceData& s,
                        const Matrix& action, const Matrix& coaction,
                        const Matrix& op) {
  const int d = h.dim();
  const long long n = s.space_dim;
  if (op.rows() != n || op.cols() != n)
    throw std::invalid_argument("induced_on_biinv: operator shape mismatch");
  if (!(op * action == action * Matrix::kron(Matrix::identity(d), op)))
    throw std::runtime_error("operator is not a module morphism");
  if (!(coaction * op == Matrix::kron(Matrix::identity(d), op) * coaction))
    throw std::runtime_error("operator is not a comodule morphism");

  // I * phi * P = inv_proj * op * coinv_basis has a unique solution phi:
  // solve through I first, then peel the surjection P on the right.
  Matrix a = s.inv_proj * op * s.coinv_basis;
  Matrix y = s.incl.solve(a);  // biinv_dim x coinv_dim
  if (!(s.incl * y == a))
    throw std::runtime_error("operator does not preserve the biinvariants");
  Matrix phi_t = s.proj.transpose().solve(y.transpose());
  Matrix phi = phi_t.transpose();
  if (!(s.incl * phi * s.proj == a))
    throw std::runtime_error("induced map is not well-defined");
  return phi;
}

}  // namespace rgmcg
