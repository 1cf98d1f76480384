#pragma once

// Builders: the skeletal categories S_tau(L, psi)<g>, additive completions,
// the group groupoid RG_tau and the C8 -> C2 table categories.

#include <optional>
#include <vector>

#include "taucat/category.hpp"
#include "taucat/cochain.hpp"

namespace taucat {

struct MtauSpec {
  GroupHom tau;
  PrimeField field;
  Subgroup L;
  Cochain2 psi;
  int g;

  // Throws unless L <= ker(tau), psi is a normalized 2-cocycle on H/L over
  // the same field, and g is an element of G.
  static MtauSpec make(GroupHom tau, PrimeField field, Subgroup L, Cochain2 psi, int g);
  static MtauSpec trivial(GroupHom tau, PrimeField field, Subgroup L, int g);

  const CosetSpace& space() const { return psi.space(); }
};

// Objects R_{h_i L} (one per coset, in coset order) of degree tau(h_i) g,
// Hom^a(R_{hL}, R_{h'L}) spanned by e^a_{hL} when ahL = h'L, and
// e^a_{bhL} o e^b_{hL} = psi(a,b)(hL)^{-1} e^{ab}_{hL}.
GradedCategory build_skeleton(const MtauSpec& spec);

// psi(a^{-1}, a)(hL) e^{a^{-1}}_{ahL}, the inverse of e^a_{hL}.
Morphism basis_inverse(const MtauSpec& spec, int coset, int a);

// Matrix category over a base. Objects 0..n-1 are the base objects as
// singletons, followed by the given formal lists. Each list must consist of
// base objects of one degree; the empty list is a zero object of degree 1.
// The basis of Hom^h(A, B) runs over blocks (i in A, j in B) with i outer,
// then the base basis of Hom^h(A_i, B_j).
class AdditiveCompletion {
 public:
  AdditiveCompletion(CategoryPtr base, std::vector<std::vector<int>> extra);

  const CategoryPtr& base() const { return base_; }
  const CategoryPtr& category() const { return cat_; }
  const std::vector<int>& summands(int obj) const { return objects_.at(obj); }
  // Index of the object with exactly this list of summands, or -1.
  int find(const std::vector<int>& summands) const;

  // The base morphism f: A_i -> B_j placed in block (i, j) of Hom(A, B).
  Morphism block(int src, int dst, int i, int j, const Morphism& f) const;
  // Block (i, j) of a morphism A -> B, as a base morphism.
  Morphism entry(const Morphism& f, int i, int j) const;
  // iota_i: A_i -> A and pi_i: A -> A_i of degree 1.
  Morphism inclusion(int obj, int i) const;
  Morphism projection(int obj, int i) const;

 private:
  int offset(int src, int dst, int h, int i, int j) const;
  CategoryPtr base_;
  CategoryPtr cat_;
  std::vector<std::vector<int>> objects_;
};

// pi_i o iota_j = delta_ij id and sum_i iota_i o pi_i = id_Y, where the
// iota_i have degree h and the pi_i degree h^{-1}.
bool is_h_direct_sum(const GradedCategory& cat, int y, const std::vector<Morphism>& iota,
                     const std::vector<Morphism>& pi);

// Objects G, Hom^h(g, tau(h) g) spanned by (h, g), composition by the group
// law with all structure constants 1.
GradedCategory build_group_groupoid(const GroupHom& tau, const PrimeField& field);

// tau: C8 -> C2, x -> y.
GroupHom c8_to_c2();

// The table category C_k (k in {1, 2, 4, 8}): objects 0..8/k - 1 of degree
// y^a, Hom^{x^n}(a, b) = F_p when a + n = b mod 8/k, composition 1.
GradedCategory c8_table_category(int k, const PrimeField& field);

}  // namespace taucat
