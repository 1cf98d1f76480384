#pragma once

// Dense linear algebra over F_p.

#include <optional>
#include <vector>

#include "taucat/field.hpp"

namespace taucat {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  Scalar operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const std::vector<Scalar>& data() const { return data_; }

  std::vector<Scalar> column(int c) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& x, const Matrix& y) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b);
std::vector<Scalar> apply(const PrimeField& f, const Matrix& a, const std::vector<Scalar>& v);
Matrix scale(const PrimeField& f, const Matrix& a, Scalar s);
Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(const PrimeField& f, Matrix a);
int rank(const PrimeField& f, const Matrix& a);
// Basis of {x : a x = 0}, as vectors.
std::vector<std::vector<Scalar>> nullspace(const PrimeField& f, const Matrix& a);
// Some x with a x = b.
std::optional<std::vector<Scalar>> solve(const PrimeField& f, const Matrix& a,
                                         const std::vector<Scalar>& b);
std::optional<Matrix> inverse(const PrimeField& f, const Matrix& a);

// Projective points of F_p^r in lexicographic order of their normalized
// representative (first nonzero coordinate 1). Visits until fn returns true.
template <class Fn>
bool for_each_projective(int p, int r, Fn&& fn) {
  for (int lead = 0; lead < r; ++lead) {
    std::vector<Scalar> v(r, 0);
    v[lead] = 1;
    for (;;) {
      if (fn(v)) return true;
      int j = r - 1;
      while (j > lead && ++v[j] == static_cast<Scalar>(p)) v[j--] = 0;
      if (j == lead) break;
    }
  }
  return false;
}

}  // namespace taucat
