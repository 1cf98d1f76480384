#pragma once

// Finite presentations of tau-graded categories over F_p: objects with
// G-degrees, H-graded hom spaces given by bases, and composition structure
// constants. Also homogeneous morphisms, functor and natural transformation
// data, and the searches for invertible morphisms and shifts.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "taucat/field.hpp"
#include "taucat/group.hpp"
#include "taucat/linalg.hpp"

namespace taucat {

class GradedCategory {
 public:
  GradedCategory(GroupHom tau, PrimeField field);

  const GroupHom& tau() const { return tau_; }
  const FiniteGroup& H() const { return tau_.source(); }
  const FiniteGroup& G() const { return tau_.target(); }
  const PrimeField& field() const { return field_; }

  int add_object(int degree);
  int object_count() const { return static_cast<int>(degrees_.size()); }
  int degree(int x) const { return degrees_.at(x); }
  const std::vector<int>& degrees() const { return degrees_; }

  // Rank of Hom^h(src, dst); 0 when never set. Setting a rank discards
  // compositions touching that space and resets an identity living there.
  void set_rank(int src, int dst, int h, int rank);
  int rank(int src, int dst, int h) const { return ranks_[slot(src, dst, h)]; }

  // Structure constants for Hom^{h2}(mid, dst) x Hom^{h}(src, mid) ->
  // Hom^{h2 h}(src, dst): tensor[(k * r2 + j) * r1 + i] is the coefficient of
  // basis k in (basis j) o (basis i). An all-zero tensor is not stored.
  // Throws if the tensor size does not match the ranks.
  void set_composition(int src, int mid, int dst, int h, int h2, std::vector<Scalar> tensor);
  // nullptr when the composite is zero.
  const std::vector<Scalar>* composition(int src, int mid, int dst, int h, int h2) const;
  const std::map<std::array<int, 5>, std::vector<Scalar>>& compositions() const {
    return compose_;
  }

  // Coordinates of id_X in Hom^1(X, X).
  void set_identity(int x, std::vector<Scalar> coords);
  const std::vector<Scalar>& identity_coords(int x) const { return identities_.at(x); }

  struct HomKey {
    int dst;
    int h;
  };
  // Nonzero hom spaces out of src, ordered by (dst, h).
  std::vector<HomKey> out_homs(int src) const;

  friend bool operator==(const GradedCategory& x, const GradedCategory& y);

 private:
  size_t slot(int src, int dst, int h) const;
  GroupHom tau_;
  PrimeField field_;
  std::vector<int> degrees_;
  std::vector<int> ranks_;  // [src][dst][h]
  std::map<std::array<int, 5>, std::vector<Scalar>> compose_;
  std::vector<std::vector<Scalar>> identities_;
};

using CategoryPtr = std::shared_ptr<const GradedCategory>;

struct Morphism {
  int src = 0;
  int dst = 0;
  int degree = 0;
  std::vector<Scalar> coords;

  bool is_zero() const;
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

Morphism identity_morphism(const GradedCategory& cat, int x);
Morphism zero_morphism(const GradedCategory& cat, int src, int dst, int h);
Morphism basis_morphism(const GradedCategory& cat, int src, int dst, int h, int k);
Morphism scale(const GradedCategory& cat, const Morphism& f, Scalar s);
Morphism add(const GradedCategory& cat, const Morphism& f, const Morphism& g);
// outer o inner; throws unless inner.dst == outer.src.
Morphism compose(const GradedCategory& cat, const Morphism& outer, const Morphism& inner);
// Two-sided inverse, by solving both linear systems.
std::optional<Morphism> invert(const GradedCategory& cat, const Morphism& f);

struct SearchOptions {
  std::uint64_t seed = 0;
  int random_samples = 64;
  std::uint64_t exhaustive_limit = 4096;
};

// An invertible element of Hom^a(X, Y). Rank 1: the basis element is tested.
// Otherwise basis elements first, then seeded random samples, then an
// exhaustive scan over projective points when p^rank <= exhaustive_limit
// (rank <= 2 is always scanned exhaustively).
std::optional<Morphism> find_invertible(const GradedCategory& cat, int x, int y, int a,
                                        const SearchOptions& opts = {});

struct Shift {
  int object;
  Morphism iso;  // degree a, X -> X<a>
};

// a = 1 gives (X, id). Otherwise the first object Y (ascending) with
// |Y| = tau(a)|X| and an invertible element of Hom^a(X, Y).
std::optional<Shift> find_shift(const GradedCategory& cat, int x, int a,
                                const SearchOptions& opts = {});

// A choice of shift for every (X, a).
class ShiftSystem {
 public:
  ShiftSystem(int objects, int group_order, std::vector<Shift> shifts);
  const Shift& at(int x, int a) const { return shifts_.at(static_cast<size_t>(x) * order_ + a); }
  int objects() const { return objects_; }
  int group_order() const { return order_; }

 private:
  int objects_;
  int order_;
  std::vector<Shift> shifts_;
};

// nullopt if some shift is missing.
std::optional<ShiftSystem> find_shifts(const GradedCategory& cat, const SearchOptions& opts = {});

bool is_simple(const GradedCategory& cat, int x);
bool are_disjoint_deg1(const GradedCategory& cat, int x, int y);

struct Violation {
  std::string kind;
  std::vector<int> where;
  std::string detail;
};

struct Verdict {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Exhaustive check over all basis elements: grading condition, identity
// coordinates, unit laws and associativity.
Verdict verify_axioms(const GradedCategory& cat);

struct FunctorData {
  CategoryPtr source;
  CategoryPtr target;
  std::vector<int> object_map;
  // (src, dst, h) -> matrix from source basis to target coordinates. A
  // missing entry is the zero map.
  std::map<std::array<int, 3>, Matrix> hom_maps;

  Morphism apply(const Morphism& f) const;
  // Matrix for (src, dst, h), zero if not stored.
  Matrix hom_map(int src, int dst, int h) const;
};

struct FunctorCheckOptions {
  bool check_object_degrees = true;
};

Verdict verify_functor(const FunctorData& f, const FunctorCheckOptions& opts = {});
FunctorData identity_functor(const CategoryPtr& cat);
// outer o inner
FunctorData compose_functors(const FunctorData& outer, const FunctorData& inner);
// Every hom map is bijective (including between zero spaces).
Verdict verify_fully_faithful(const FunctorData& f);
// Every target object is degree-1 isomorphic to some F X.
Verdict verify_essentially_surjective(const FunctorData& f, const SearchOptions& opts = {});

struct NatTransData {
  FunctorData source;
  FunctorData target;
  std::vector<Morphism> components;  // degree 1, source(X) -> target(X)
};

Verdict verify_nat(const NatTransData& eta);

// Disjoint union; cross homs are zero. Throws on mismatched tau or field.
GradedCategory direct_sum_cat(const std::vector<CategoryPtr>& cats);
// Same objects, only the degree-1 homs.
GradedCategory degree_one_part(const GradedCategory& cat);

}  // namespace taucat
