#pragma once

#include <string>
#include <vector>

#include "rgmcg/finite_group.hpp"
#include "rgmcg/matrix.hpp"

namespace rgmcg {

// A finite-dimensional Hopf algebra presented by structure constants on a
// fixed basis, optionally equipped with a pivot element.  All data is exact.
class FinHopf {
 public:
  using Element = std::vector<Rational>;  // coordinates on the basis

  FinHopf(int dim, std::vector<std::string> basis_names);

  int dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  bool has_pivot() const { return !pivot.empty(); }

  // Structure data, filled in by the builders or from_json.
  Element unit;                  // coordinates of 1
  std::vector<Rational> counit;  // counit on basis vectors
  // mult[i][j][k] = coefficient of e_k in e_i * e_j
  std::vector<std::vector<std::vector<Rational>>> mult;
  // comult[i][j][k] = coefficient of e_j (x) e_k in Delta(e_i)
  std::vector<std::vector<std::vector<Rational>>> comult;
  Matrix antipode;  // column c = coordinates of S(e_c)
  Element pivot;    // empty when unset

  Element multiply(const Element& a, const Element& b) const;
  Rational counit_of(const Element& a) const;
  Matrix left_mult(const Element& a) const;   // x -> a x
  Matrix right_mult(const Element& a) const;  // x -> x a
  Matrix antipode_inverse() const;
  // x -> pivot * S(x); an involution for a valid pivot.  Requires a pivot.
  Matrix t_map() const;

  // Matrix forms of the structure maps (basis order big-endian: the index of
  // e_i (x) e_j in H (x) H is i*dim + j).
  Matrix mult_matrix() const;    // dim x dim^2
  Matrix comult_matrix() const;  // dim^2 x dim
  Matrix unit_matrix() const;    // dim x 1
  Matrix counit_matrix() const;  // 1 x dim

  // Names of failed axioms; empty means the structure is a pivotal Hopf
  // algebra (pivot axioms are checked only when a pivot is set).
  std::vector<std::string> check_axioms() const;
  // Grouplike elements supported on the basis, plus the unit.
  std::vector<Element> grouplikes() const;
  // Grouplikes that are invertible and whose conjugation realises S^2.
  std::vector<Element> find_pivots() const;
  // Sets the pivot after validating it; throws std::invalid_argument.
  void set_pivot(Element p);

  std::string element_to_string(const Element& a) const;

  // k[G] with basis the group elements; the pivot must be central (default:
  // the group identity).
  static FinHopf group_algebra(const FiniteGroup& g, int pivot_element = -1);
  // The 4-dimensional algebra <g, x | g^2=1, x^2=0, xg=-gx> with
  // Delta(g)=g(x)g, Delta(x)=x(x)1+g(x)x and pivot g.
  static FinHopf sweedler4();
  static FinHopf from_json(const std::string& text);

 private:
  int dim_;
  std::vector<std::string> names_;
};

}  // namespace rgmcg
