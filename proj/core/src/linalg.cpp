#include "taucat/linalg.hpp"

#include <utility>

#include "taucat/error.hpp"

namespace taucat {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Scalar> Matrix::column(int c) const {
  std::vector<Scalar> v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  for (Scalar s : data_)
    if (s != 0) return false;
  return true;
}

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) fail("matrix shapes do not compose");
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Scalar x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
    }
  return c;
}

std::vector<Scalar> apply(const PrimeField& f, const Matrix& a, const std::vector<Scalar>& v) {
  if (static_cast<int>(v.size()) != a.cols()) fail("vector length does not match matrix");
  std::vector<Scalar> out(a.rows(), 0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out[i] = f.add(out[i], f.mul(a(i, j), v[j]));
  return out;
}

Matrix scale(const PrimeField& f, const Matrix& a, Scalar s) {
  Matrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = f.mul(a(i, j), s);
  return out;
}

Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail("matrix shapes differ");
  Matrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = f.add(a(i, j), b(i, j));
  return out;
}

RowEchelon rref(const PrimeField& f, Matrix a) {
  RowEchelon out;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < a.rows(); ++r)
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
    const Scalar s = f.inv(a(row, col));
    for (int c = 0; c < a.cols(); ++c) a(row, c) = f.mul(a(row, c), s);
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Scalar m = a(r, col);
      for (int c = 0; c < a.cols(); ++c) a(r, c) = f.sub(a(r, c), f.mul(m, a(row, c)));
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

int rank(const PrimeField& f, const Matrix& a) {
  return static_cast<int>(rref(f, a).pivots.size());
}

std::vector<std::vector<Scalar>> nullspace(const PrimeField& f, const Matrix& a) {
  const RowEchelon e = rref(f, a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(a.cols(), 0);
    v[free] = 1;
    for (size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = f.neg(e.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const PrimeField& f, const Matrix& a,
                                         const std::vector<Scalar>& b) {
  if (static_cast<int>(b.size()) != a.rows()) fail("right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i] % f.p();
  }
  const RowEchelon e = rref(f, aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  std::vector<Scalar> x(a.cols(), 0);
  for (size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

std::optional<Matrix> inverse(const PrimeField& f, const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const int n = a.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon e = rref(f, aug);
  if (static_cast<int>(e.pivots.size()) < n || (n > 0 && e.pivots[n - 1] != n - 1))
    return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

}  // namespace taucat
