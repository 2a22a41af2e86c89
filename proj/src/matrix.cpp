#include "rgmcg/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace rgmcg {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (o.at(k, j) != 0) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Matrix Matrix::operator*(const Rational& s) const {
  Matrix r = *this;
  for (auto& x : r.a_) x *= s;
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) {
      if (a.at(i, j) == 0) continue;
      for (int k = 0; k < b.rows_; ++k)
        for (int l = 0; l < b.cols_; ++l)
          r.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

std::vector<int> Matrix::rref_in_place() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int sel = -1;
    for (int i = row; i < rows_; ++i)
      if (at(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
    Rational inv = Rational(1) / at(row, col);
    for (int j = col; j < cols_; ++j) at(row, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == row || at(i, col) == 0) continue;
      Rational f = at(i, col);
      for (int j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int Matrix::rank() const {
  Matrix m = *this;
  return int(m.rref_in_place().size());
}

Matrix Matrix::kernel() const {
  Matrix m = *this;
  std::vector<int> pivots = m.rref_in_place();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  Matrix k(cols_, cols_ - int(pivots.size()));
  int out = 0;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    k.at(free, out) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) k.at(pivots[r], out) = -m.at(int(r), free);
    ++out;
  }
  return k;
}

Matrix Matrix::column_basis() const {
  Matrix m = *this;
  std::vector<int> pivots = m.rref_in_place();
  Matrix b(rows_, int(pivots.size()));
  for (size_t j = 0; j < pivots.size(); ++j)
    for (int i = 0; i < rows_; ++i) b.at(i, int(j)) = at(i, pivots[j]);
  return b;
}

Matrix Matrix::left_null() const { return transpose().kernel().transpose(); }

Matrix Matrix::solve(const Matrix& b) const {
  if (b.rows_ != rows_) throw std::invalid_argument("solve: right-hand side shape mismatch");
  Matrix aug(rows_, cols_ + b.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    for (int j = 0; j < b.cols_; ++j) aug.at(i, cols_ + j) = b.at(i, j);
  }
  std::vector<int> pivots = aug.rref_in_place();
  Matrix x(cols_, b.cols_);
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= cols_) throw std::runtime_error("solve: inconsistent system");
    for (int j = 0; j < b.cols_; ++j) x.at(pivots[r], j) = aug.at(int(r), cols_ + j);
  }
  return x;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse: matrix not square");
  Matrix x = solve(identity(rows_));
  if (!(*this * x == identity(rows_))) throw std::runtime_error("inverse: matrix singular");
  return x;
}

static std::string rational_str(const Rational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string Matrix::to_string() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) s += ' ';
      s += rational_str(at(i, j));
    }
    s += '\n';
  }
  return s;
}

std::string Matrix::to_json() const {
  std::string s = "[";
  for (int i = 0; i < rows_; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) s += ',';
      const Rational& x = at(i, j);
      if (denominator(x) == 1)
        s += rational_str(x);
      else
        s += '"' + rational_str(x) + '"';
    }
    s += ']';
  }
  return s + ']';
}

}  // namespace rgmcg
