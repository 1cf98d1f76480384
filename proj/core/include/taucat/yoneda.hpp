#pragma once

// Half-enriched Yoneda functors yo^a_X Y = (+)_h Hom^{ha}(X, Y), degree
// preserving natural transformations into direct sums of representables, and
// the Yoneda map Phi with its inverse.

#include <optional>
#include <vector>

#include "taucat/category.hpp"

namespace taucat {

// yo^shift_object
struct Representable {
  int object = 0;
  int shift = 0;
  friend bool operator==(const Representable&, const Representable&) = default;
};

// A finite direct sum of representables; the component at (Y, h) is the
// concatenation of Hom^{h b_j}(Z_j, Y) over the summands.
using GradedFunctor = std::vector<Representable>;

// Dimension of each component h of a graded module.
struct GradedModule {
  std::vector<int> dims;
};

GradedModule evaluate(const GradedCategory& cat, const GradedFunctor& F, int y);
GradedModule evaluate_yoneda(const GradedCategory& cat, int x, int a, int y);

// F y on the component h of F Y, as a matrix into component k h of F Y'
// (y: Y -> Y' of degree k).
Matrix functor_action(const GradedCategory& cat, const GradedFunctor& F, const Morphism& y, int h);

// Degree-preserving transformation yo^a_X => F: one block per (Y, h) at
// Y * |H| + h, mapping (yo^a_X Y)_h to (F Y)_h.
struct GradedNatTrans {
  std::vector<Matrix> blocks;
  friend bool operator==(const GradedNatTrans&, const GradedNatTrans&) = default;
};

class YonedaProblem {
 public:
  YonedaProblem(CategoryPtr cat, int x, int a, GradedFunctor F);

  const GradedCategory& category() const { return *cat_; }
  int x() const { return x_; }
  int a() const { return a_; }
  const GradedFunctor& functor() const { return F_; }

  // Basis of Nat^H(yo^a_X, F), from the full naturality system.
  const std::vector<GradedNatTrans>& nat_space() const { return basis_; }
  Verdict verify(const GradedNatTrans& eta) const;
  // eta_X(id_X) in (F X)_{a^{-1}}. Throws if eta is not natural.
  std::vector<Scalar> phi(const GradedNatTrans& eta) const;
  // f -> (F f)(v).
  GradedNatTrans phi_inv(const std::vector<Scalar>& v) const;
  int fiber_dim() const;  // dim (F X)_{a^{-1}}

  GradedNatTrans zero() const;
  GradedNatTrans combine(const std::vector<Scalar>& coeffs) const;

 private:
  std::vector<Scalar> flatten(const GradedNatTrans& eta) const;
  GradedNatTrans unflatten(const std::vector<Scalar>& v) const;

  CategoryPtr cat_;
  int x_;
  int a_;
  GradedFunctor F_;
  std::vector<int> offsets_;  // unknown offset per block
  int unknowns_ = 0;
  std::vector<GradedNatTrans> basis_;
};

// eta o yo^a_x: yo^a_{X'} => F for x: X -> X' of degree 1.
GradedNatTrans precompose(const YonedaProblem& source, const YonedaProblem& target,
                          const GradedNatTrans& eta, const Morphism& x);

// Every block square and invertible.
bool is_invertible(const GradedCategory& cat, const GradedNatTrans& eta);

// An invertible element of the nat space: basis elements first, then an
// exhaustive projective scan when p^dim <= limit.
std::optional<GradedNatTrans> find_invertible_nat(const YonedaProblem& prob, std::uint64_t limit = 4096);

}  // namespace taucat
