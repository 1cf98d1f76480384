#pragma once

// Finite groups as Cayley tables, subgroups, homomorphisms and left coset
// spaces with canonical representatives.

#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace taucat {

class FiniteGroup {
 public:
  // The trivial group.
  FiniteGroup();

  // Validates the table exhaustively: Latin square, two-sided identity and
  // associativity over all triples.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table);
  static FiniteGroup cyclic(int n);
  // Symmetric group on n <= 5 letters, elements in lexicographic order of
  // their one-line notation (so the identity is element 0).
  static FiniteGroup symmetric(int n);

  int order() const { return d_->order; }
  int identity() const { return d_->identity; }
  int mul(int a, int b) const { return d_->table[a * d_->order + b]; }
  int inv(int a) const { return d_->inverse[a]; }
  bool contains(int a) const { return a >= 0 && a < d_->order; }
  // a^k for k >= 0
  int pow(int a, int k) const;
  int conjugate(int t, int a) const { return mul(mul(t, a), inv(t)); }

  std::vector<std::vector<int>> table() const;
  bool is_abelian() const;

  friend bool operator==(const FiniteGroup& x, const FiniteGroup& y);

 private:
  struct Data {
    int order = 1;
    int identity = 0;
    std::vector<int> table;
    std::vector<int> inverse;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

class Subgroup {
 public:
  // Throws unless the set contains the identity and is closed under
  // products and inverses.
  static Subgroup from_elements(FiniteGroup parent, std::vector<int> elements);
  // Closure of a generating set.
  static Subgroup generated(FiniteGroup parent, std::span<const int> gens);
  static Subgroup trivial(FiniteGroup parent);
  static Subgroup whole(FiniteGroup parent);

  const FiniteGroup& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool contains(int a) const { return parent_.contains(a) && member_[a]; }
  bool is_subset_of(const Subgroup& other) const;
  // t L t^{-1}
  Subgroup conjugate(int t) const;
  bool is_normal() const;

  friend bool operator==(const Subgroup& x, const Subgroup& y) {
    return x.parent_ == y.parent_ && x.elements_ == y.elements_;
  }

 private:
  Subgroup(FiniteGroup parent, std::vector<int> sorted);
  FiniteGroup parent_;
  std::vector<int> elements_;
  std::vector<bool> member_;
};

struct HomViolation {
  int a;
  int b;
};

// First pair (a, b), in row-major order, with map[a*b] != map[a]*map[b].
// Throws on a size mismatch or out-of-range image.
std::optional<HomViolation> verify_hom(const FiniteGroup& source, const FiniteGroup& target,
                                       std::span<const int> map);

class GroupHom {
 public:
  // Throws unless the map is a homomorphism.
  GroupHom(FiniteGroup source, FiniteGroup target, std::vector<int> map);
  static GroupHom identity(const FiniteGroup& g);
  static GroupHom trivial(const FiniteGroup& source, const FiniteGroup& target);

  const FiniteGroup& source() const { return source_; }
  const FiniteGroup& target() const { return target_; }
  const std::vector<int>& map() const { return map_; }
  int operator()(int a) const { return map_[a]; }

  friend bool operator==(const GroupHom& x, const GroupHom& y) {
    return x.source_ == y.source_ && x.target_ == y.target_ && x.map_ == y.map_;
  }

 private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<int> map_;
};

Subgroup kernel(const GroupHom& hom);
Subgroup image(const GroupHom& hom);
// All a with hom(a) == g, ascending.
std::vector<int> preimage(const GroupHom& hom, int g);

// Left cosets hL. Coset 0 is L itself with representative the identity; the
// remaining cosets are ordered by their smallest element, which is also their
// representative.
class CosetSpace {
 public:
  explicit CosetSpace(Subgroup subgroup);

  const Subgroup& subgroup() const { return d_->subgroup; }
  const FiniteGroup& parent() const { return d_->subgroup.parent(); }
  int size() const { return static_cast<int>(d_->reps.size()); }
  int rep(int i) const { return d_->reps[i]; }
  const std::vector<int>& reps() const { return d_->reps; }
  int coset_of(int h) const { return d_->coset_of[h]; }
  // Index of a * h_i L.
  int act(int a, int i) const { return d_->coset_of[parent().mul(a, d_->reps[i])]; }
  // The permutation i -> a h_i L.
  std::vector<int> left_action(int a) const;

  friend bool operator==(const CosetSpace& x, const CosetSpace& y) {
    return x.d_ == y.d_ || x.d_->subgroup == y.d_->subgroup;
  }

 private:
  struct Data {
    Subgroup subgroup;
    std::vector<int> reps;
    std::vector<int> coset_of;
  };
  std::shared_ptr<const Data> d_;
};

}  // namespace taucat
