#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace rgmcg {

// Exact scalars; no floating point anywhere in the linear backend.
using Rational = boost::multiprecision::cpp_rational;

// Dense exact matrix.  Linear maps act on column coordinate vectors, so
// at(r, c) is the coefficient of output basis vector r in the image of input
// basis vector c, and composition is plain multiplication.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Rational& s) const;
  bool operator==(const Matrix&) const = default;

  bool is_zero() const;
  Matrix transpose() const;
  static Matrix kron(const Matrix& a, const Matrix& b);

  // Gauss-Jordan to reduced row echelon form; returns the pivot columns.
  std::vector<int> rref_in_place();
  int rank() const;
  // Columns form a reduced-echelon basis of the null space.
  Matrix kernel() const;
  // Columns form a basis of the column space (the pivot columns).
  Matrix column_basis() const;
  // Rows form a basis of {x : x A = 0} (annihilator of the column space).
  Matrix left_null() const;
  // Exact solution X of (*this) X = B; throws std::runtime_error when
  // inconsistent.  Free variables are set to zero.
  Matrix solve(const Matrix& b) const;
  // Inverse; throws std::runtime_error when singular.
  Matrix inverse() const;

  std::string to_string() const;  // rows separated by newlines, "a/b" entries
  std::string to_json() const;    // [[...]] with integer-or-"a/b" entries

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

}  // namespace rgmcg
