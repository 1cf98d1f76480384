#pragma once

// Linear algebra over the ring Z/n (n composite in general): diagonalizing
// solver and Howell normal form for canonical coset representatives.

#include <cstdint>
#include <optional>
#include <vector>

namespace taucat {

using ModVector = std::vector<std::int64_t>;

// Equations sum_j rows[i][j] * x_j = rhs[i] (mod modulus).
struct ModularSystem {
  std::int64_t modulus = 1;
  int vars = 0;
  std::vector<ModVector> rows;
  ModVector rhs;
};

// Every solution is particular + a Z/n-combination of kernel vectors.
struct ModularSolution {
  std::int64_t modulus = 1;
  ModVector particular;
  std::vector<ModVector> kernel;
};

std::optional<ModularSolution> unit_solve_linear(const ModularSystem& system);

// g = gcd(a, b) >= 0 with s*a + t*b = g.
struct Gcdex {
  std::int64_t g, s, t;
};
Gcdex gcdex(std::int64_t a, std::int64_t b);

std::int64_t mod_reduce(std::int64_t v, std::int64_t n);

// Howell form of the submodule of (Z/n)^k spanned by the given rows. reduce()
// returns the lexicographically smallest element of v + span, so two vectors
// are congruent iff their reductions agree.
class HowellBasis {
 public:
  HowellBasis(std::int64_t modulus, int dim, const std::vector<ModVector>& generators);

  std::int64_t modulus() const { return n_; }
  int dim() const { return dim_; }
  const std::vector<ModVector>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  ModVector reduce(ModVector v) const;
  bool contains(const ModVector& v) const;
  // Number of elements of the span.
  std::uint64_t span_size() const;

 private:
  std::int64_t n_;
  int dim_;
  std::vector<ModVector> rows_;
  std::vector<int> pivots_;
};

// All elements of the span of generators (mod n), sorted. Throws if there are
// more than cap of them.
std::vector<ModVector> enumerate_span(std::int64_t modulus, int dim,
                                      const std::vector<ModVector>& generators,
                                      std::uint64_t cap = 1u << 20);

// Canonical representatives (reductions modulo `quotient`) of base + span of
// generators, one per class, sorted. Throws if there are more than cap classes.
std::vector<ModVector> enumerate_classes(const ModVector& base,
                                         const std::vector<ModVector>& generators,
                                         const HowellBasis& quotient,
                                         std::uint64_t cap = 1u << 20);

}  // namespace taucat
