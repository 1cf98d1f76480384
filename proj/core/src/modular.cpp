#include "taucat/modular.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "taucat/error.hpp"

namespace taucat {

std::int64_t mod_reduce(std::int64_t v, std::int64_t n) {
  const std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

Gcdex gcdex(std::int64_t a, std::int64_t b) {
  std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 < 0) return {-r0, -s0, -t0};
  return {r0, s0, t0};
}

namespace {

// rows i, j <- [s t; u v] * [row i; row j] with determinant 1, clearing
// entry (j, col). Pivot entry becomes gcd.
void combine(std::vector<ModVector>& m, int i, int j, int col, std::int64_t n,
             ModVector* rhs = nullptr) {
  const std::int64_t a = m[i][col], c = m[j][col];
  if (c == 0) return;
  auto apply = [&](ModVector& x, ModVector& y, std::int64_t s, std::int64_t t, std::int64_t u,
                   std::int64_t v) {
    for (size_t k = 0; k < x.size(); ++k) {
      const std::int64_t xi = x[k], yi = y[k];
      x[k] = mod_reduce(s * xi + t * yi, n);
      y[k] = mod_reduce(u * xi + v * yi, n);
    }
  };
  std::int64_t s, t, u, v;
  if (a != 0 && c % a == 0) {
    s = 1, t = 0, u = -(c / a), v = 1;
  } else {
    const Gcdex e = gcdex(a, c);
    s = e.s, t = e.t, u = -(c / e.g), v = a / e.g;
  }
  apply(m[i], m[j], s, t, u, v);
  if (rhs) {
    ModVector x{(*rhs)[i]}, y{(*rhs)[j]};
    apply(x, y, s, t, u, v);
    (*rhs)[i] = x[0];
    (*rhs)[j] = y[0];
  }
}

// Inverse of a modulo m, assuming gcd(a, m) = 1.
std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  const Gcdex e = gcdex(mod_reduce(a, m), m);
  return mod_reduce(e.s, m);
}

}  // namespace

std::optional<ModularSolution> unit_solve_linear(const ModularSystem& sys) {
  const std::int64_t n = sys.modulus;
  if (n < 1) fail("modulus must be positive");
  const int m = static_cast<int>(sys.rows.size());
  const int k = sys.vars;
  if (static_cast<int>(sys.rhs.size()) != m) fail("right-hand side length mismatch");
  std::vector<ModVector> a(m);
  ModVector b(m);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(sys.rows[i].size()) != k) fail("equation length mismatch");
    a[i].resize(k);
    for (int j = 0; j < k; ++j) a[i][j] = mod_reduce(sys.rows[i][j], n);
    b[i] = mod_reduce(sys.rhs[i], n);
  }
  // Column operations are tracked in vt, the transpose of V, so that they
  // become row operations.
  std::vector<ModVector> vt(k, ModVector(k, 0));
  for (int j = 0; j < k; ++j) vt[j][j] = mod_reduce(1, n);

  int r = 0;
  for (; r < std::min(m, k); ++r) {
    int pi = -1, pj = -1;
    for (int i = r; i < m && pi < 0; ++i)
      for (int j = r; j < k; ++j)
        if (a[i][j] != 0) {
          pi = i, pj = j;
          break;
        }
    if (pi < 0) break;
    std::swap(a[r], a[pi]);
    std::swap(b[r], b[pi]);
    if (pj != r) {
      for (int i = 0; i < m; ++i) std::swap(a[i][r], a[i][pj]);
      std::swap(vt[r], vt[pj]);
    }
    for (;;) {
      for (int i = r + 1; i < m; ++i) combine(a, r, i, r, n, &b);
      for (int j = r + 1; j < k; ++j) {
        if (a[r][j] == 0) continue;
        // Column pair r, j stacked with the matching rows of V^T so both
        // receive the same unimodular operation.
        std::vector<ModVector> pair(2, ModVector(m + k));
        for (int i = 0; i < m; ++i) {
          pair[0][i] = a[i][r];
          pair[1][i] = a[i][j];
        }
        for (int i = 0; i < k; ++i) {
          pair[0][m + i] = vt[r][i];
          pair[1][m + i] = vt[j][i];
        }
        combine(pair, 0, 1, r, n);
        for (int i = 0; i < m; ++i) {
          a[i][r] = pair[0][i];
          a[i][j] = pair[1][i];
        }
        for (int i = 0; i < k; ++i) {
          vt[r][i] = pair[0][m + i];
          vt[j][i] = pair[1][m + i];
        }
      }
      bool clean = true;
      for (int i = r + 1; i < m; ++i)
        if (a[i][r] != 0) clean = false;
      if (clean) break;
    }
  }


  // Now U A V = diag(a[0][0], ..., a[r-1][r-1]) and b holds U b.
  for (int i = r; i < m; ++i)
    if (b[i] != 0) return std::nullopt;
  ModVector y(k, 0);
  ModularSolution sol;
  sol.modulus = n;
  std::vector<ModVector> kernel_y;
  for (int t = 0; t < r; ++t) {
    const std::int64_t d = a[t][t];
    const std::int64_t g = std::gcd(d, n);
    if (b[t] % g != 0) return std::nullopt;
    const std::int64_t m2 = n / g;
    y[t] = mod_reduce((b[t] / g) * inv_mod(d / g, m2), m2);
    if (m2 % n != 0) {
      ModVector e(k, 0);
      e[t] = m2;
      kernel_y.push_back(std::move(e));
    }
  }
  for (int t = r; t < k; ++t) {
    ModVector e(k, 0);
    e[t] = 1;
    kernel_y.push_back(std::move(e));
  }
  auto times_v = [&](const ModVector& z) {
    ModVector x(k, 0);
    for (int j = 0; j < k; ++j) {
      if (z[j] == 0) continue;
      for (int i = 0; i < k; ++i) x[i] = mod_reduce(x[i] + vt[j][i] * z[j], n);
    }
    return x;
  };
  sol.particular = times_v(y);
  for (const ModVector& z : kernel_y) {
    ModVector x = times_v(z);
    if (std::any_of(x.begin(), x.end(), [](std::int64_t v) { return v != 0; }))
      sol.kernel.push_back(std::move(x));
  }
  return sol;
}

// ---------------------------------------------------------------------------

HowellBasis::HowellBasis(std::int64_t modulus, int dim, const std::vector<ModVector>& generators)
    : n_(modulus), dim_(dim) {
  if (n_ < 1) fail("modulus must be positive");
  std::vector<ModVector> work;
  for (const ModVector& g : generators) {
    if (static_cast<int>(g.size()) != dim) fail("generator length mismatch");
    ModVector v(dim);
    for (int j = 0; j < dim; ++j) v[j] = mod_reduce(g[j], n_);
    if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; }))
      work.push_back(std::move(v));
  }
  for (int c = 0; c < dim; ++c) {
    std::vector<ModVector> hit, rest;
    for (ModVector& v : work) (v[c] != 0 ? hit : rest).push_back(std::move(v));
    if (hit.empty()) {
      work = std::move(rest);
      continue;
    }
    for (size_t j = 1; j < hit.size(); ++j) combine(hit, 0, static_cast<int>(j), c, n_);
    ModVector piv = hit[0];
    for (size_t j = 1; j < hit.size(); ++j)
      if (std::any_of(hit[j].begin(), hit[j].end(), [](std::int64_t x) { return x != 0; }))
        rest.push_back(std::move(hit[j]));
    const std::int64_t g = std::gcd(piv[c], n_);
    if (piv[c] != g) {
      std::int64_t w = 1;
      for (; w < n_; ++w)
        if (std::gcd(w, n_) == 1 && mod_reduce(w * piv[c], n_) == g) break;
      for (auto& x : piv) x = mod_reduce(w * x, n_);
    }
    ModVector ann(dim);
    for (int j = 0; j < dim; ++j) ann[j] = mod_reduce((n_ / g) * piv[j], n_);
    if (std::any_of(ann.begin(), ann.end(), [](std::int64_t x) { return x != 0; }))
      rest.push_back(std::move(ann));
    rows_.push_back(std::move(piv));
    pivots_.push_back(c);
    work = std::move(rest);
  }
  // Reduce entries above each pivot.
  for (size_t i = 0; i < rows_.size(); ++i) {
    const int c = pivots_[i];
    const std::int64_t d = rows_[i][c];
    for (size_t j = 0; j < i; ++j) {
      const std::int64_t q = rows_[j][c] / d;
      if (q == 0) continue;
      for (int k = 0; k < dim; ++k) rows_[j][k] = mod_reduce(rows_[j][k] - q * rows_[i][k], n_);
    }
  }
}

ModVector HowellBasis::reduce(ModVector v) const {
  if (static_cast<int>(v.size()) != dim_) fail("vector length mismatch");
  for (auto& x : v) x = mod_reduce(x, n_);
  for (size_t i = 0; i < rows_.size(); ++i) {
    const int c = pivots_[i];
    const std::int64_t q = v[c] / rows_[i][c];
    if (q == 0) continue;
    for (int k = 0; k < dim_; ++k) v[k] = mod_reduce(v[k] - q * rows_[i][k], n_);
  }
  return v;
}

bool HowellBasis::contains(const ModVector& v) const {
  const ModVector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
}

std::uint64_t HowellBasis::span_size() const {
  std::uint64_t s = 1;
  for (size_t i = 0; i < rows_.size(); ++i)
    s *= static_cast<std::uint64_t>(n_ / rows_[i][pivots_[i]]);
  return s;
}

std::vector<ModVector> enumerate_span(std::int64_t modulus, int dim,
                                      const std::vector<ModVector>& generators,
                                      std::uint64_t cap) {
  const HowellBasis zero(modulus, dim, {});
  return enumerate_classes(ModVector(dim, 0), generators, zero, cap);
}

std::vector<ModVector> enumerate_classes(const ModVector& base,
                                         const std::vector<ModVector>& generators,
                                         const HowellBasis& quotient, std::uint64_t cap) {
  const std::int64_t n = quotient.modulus();
  std::set<ModVector> seen;
  std::vector<ModVector> frontier{quotient.reduce(base)};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<ModVector> next;
    for (const ModVector& v : frontier)
      for (const ModVector& g : generators) {
        ModVector w(v.size());
        for (size_t k = 0; k < v.size(); ++k) w[k] = mod_reduce(v[k] + g[k], n);
        w = quotient.reduce(std::move(w));
        if (seen.insert(w).second) {
          if (seen.size() > cap) fail("span enumeration exceeds cap");
          next.push_back(std::move(w));
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace taucat
