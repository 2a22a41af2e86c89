#pragma once

#include "rgmcg/hopf.hpp"
#include "rgmcg/matrix.hpp"

namespace rgmcg {

// Echelon-form column basis of the column space (deterministic reporting).
Matrix echelon_column_basis(const Matrix& m);

// Subspaces cut out by an action H(x)M -> M and a coaction M -> H(x)M on the
// same space M, with the algebra leg most significant.
struct SubspaceData {
  Matrix coinv_basis;  // columns: kernel of (coaction - unit (x) id)
  Matrix inv_proj;     // rows: projection onto the cokernel of (action - counit (x) id)
  Matrix incl;         // I: biinvariants -> invariants, echelon columns
  Matrix proj;         // P: coinvariant coords -> biinvariant coords, surjective
  long long space_dim = 0;

  int coinv_dim() const { return coinv_basis.cols(); }
  int inv_dim() const { return inv_proj.rows(); }
  int biinv_dim() const { return incl.cols(); }
};

// Computes all three subspaces; the factorization incl * proj ==
// inv_proj * coinv_basis holds exactly by construction.
SubspaceData subspaces(const FinHopf& h, const Matrix& action,
                       const Matrix& coaction);

// Checks exactly that op commutes with the action and coaction, then returns
// the unique induced map on biinvariants; throws std::runtime_error when op
// is not a module or comodule morphism.
Matrix induced_on_biinv(const FinHopf& h, const SubspaceData& s,
                        const Matrix& action, const Matrix& coaction,
                        const Matrix& op);

}  // namespace rgmcg
