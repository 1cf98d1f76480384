#pragma once

// Normalized n-cochains (n = 0, 1, 2) on H with values in unit-valued
// functions on H/L, their differentials, translation along t, and solvers for
// d(gamma) = target and d(eta) = target.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "taucat/field.hpp"
#include "taucat/group.hpp"
#include "taucat/modular.hpp"

namespace taucat {

// A function H/L -> F_p^x, one unit per coset index.
using UnitFunction = std::vector<Scalar>;

// (f <| h)(kL) = f(hkL)
UnitFunction act(const CosetSpace& space, const UnitFunction& f, int h);

template <int N>
class Cochain {
 public:
  using Args = std::array<int, N>;

  // The constant cochain 1.
  Cochain(CosetSpace space, PrimeField field);
  // Dense values indexed by (args in row-major order, coset). Throws on a
  // size mismatch or a non-unit value.
  Cochain(CosetSpace space, PrimeField field, std::vector<Scalar> values);

  const CosetSpace& space() const { return space_; }
  const PrimeField& field() const { return field_; }
  const FiniteGroup& group() const { return space_.parent(); }
  int cosets() const { return space_.size(); }
  const std::vector<Scalar>& values() const { return values_; }

  Scalar value(const Args& args, int coset) const { return values_[index(args, coset)]; }
  UnitFunction at(const Args& args) const;
  void set(const Args& args, int coset, Scalar v);
  void set(const Args& args, const UnitFunction& f);

  // Value 1 whenever some argument is the identity (vacuous for N = 0).
  bool is_normalized() const;

  Cochain operator*(const Cochain& other) const;
  Cochain inverse() const;

  friend bool operator==(const Cochain& x, const Cochain& y) {
    return x.space_ == y.space_ && x.field_ == y.field_ && x.values_ == y.values_;
  }

 private:
  size_t index(const Args& args, int coset) const;
  CosetSpace space_;
  PrimeField field_;
  std::vector<Scalar> values_;
};

using Cochain0 = Cochain<0>;
using Cochain1 = Cochain<1>;
using Cochain2 = Cochain<2>;

extern template class Cochain<0>;
extern template class Cochain<1>;
extern template class Cochain<2>;

// Seeded random normalized cochains (Cochain0 has no normalization).
Cochain0 random_cochain0(const CosetSpace& space, const PrimeField& field, std::uint64_t seed);
Cochain1 random_cochain1(const CosetSpace& space, const PrimeField& field, std::uint64_t seed);
Cochain2 random_cochain2(const CosetSpace& space, const PrimeField& field, std::uint64_t seed);

// d(eta)(a)(hL) = eta(hL) eta(ahL)^{-1}
UnitFunction d0(const Cochain0& eta, int a);
Cochain1 d0(const Cochain0& eta);
// d(gamma)(a,b)(hL) = gamma(ab)(hL) gamma(a)(bhL)^{-1} gamma(b)(hL)^{-1}
UnitFunction d1(const Cochain1& gamma, int a, int b);
Cochain2 d1(const Cochain1& gamma);
// d(psi)(a,b,c) = psi(b,c) psi(ab,c)^{-1} psi(a,bc) (psi(a,b) <| c)^{-1}
UnitFunction d2(const Cochain2& psi, int a, int b, int c);

struct CocycleViolation {
  int a, b, c, coset;
};
// First (a, b, c, coset) in lexicographic order with d2 != 1.
std::optional<CocycleViolation> cocycle_violation(const Cochain2& psi);
bool is_cocycle(const Cochain2& psi);

// Cochain on H/(t L' t^{-1}) with value at (args, hL) equal to the input's
// value at (args, h t L').
template <int N>
Cochain<N> translate(const Cochain<N>& c, int t);

// Exponent coordinates (discrete logs) of a cochain. Cochain1 uses one
// variable per (a != 1, coset), a ascending then coset; Cochain0 one per
// coset.
ModVector exponents(const Cochain0& eta);
ModVector exponents(const Cochain1& gamma);
Cochain0 cochain0_from_exponents(const CosetSpace& space, const PrimeField& field,
                                 const ModVector& x);
Cochain1 cochain1_from_exponents(const CosetSpace& space, const PrimeField& field,
                                 const ModVector& x);

// Solution set particular * exp(span of kernel), in exponent coordinates.
template <int N>
class CochainSolutions {
 public:
  CochainSolutions(Cochain<N> particular, std::vector<ModVector> kernel);

  const Cochain<N>& particular() const { return particular_; }
  // Generators of the homogeneous solutions (cocycles of degree N).
  const std::vector<ModVector>& kernel() const { return kernel_; }
  const HowellBasis& kernel_basis() const { return basis_; }
  bool contains(const Cochain<N>& c) const;
  // Every solution, in sorted exponent order. Throws beyond cap.
  std::vector<Cochain<N>> enumerate(std::uint64_t cap = 1u << 16) const;

 private:
  Cochain<N> particular_;
  std::vector<ModVector> kernel_;
  HowellBasis basis_;
};

using D1Solutions = CochainSolutions<1>;
using D0Solutions = CochainSolutions<0>;

extern template class CochainSolutions<0>;
extern template class CochainSolutions<1>;

// All normalized gamma with d1(gamma) = target. Throws unless target is a
// normalized 2-cocycle.
std::optional<D1Solutions> solve_d1(const Cochain2& target);
// All eta with d0(eta) = target. Throws unless target is normalized.
std::optional<D0Solutions> solve_d0(const Cochain1& target);

}  // namespace taucat
