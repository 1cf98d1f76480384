#pragma once

// Semisimple structure: extraction of (L_S, psi_S) from a simple object,
// decomposition into skeletal summands, and the cohomological classification
// of equivalences between skeletons and of natural isomorphisms between them.

#include <cstdint>
#include <optional>
#include <vector>

#include "taucat/category.hpp"
#include "taucat/cochain.hpp"
#include "taucat/mtau.hpp"

namespace taucat {

struct SimpleOrbit {
  int representative = 0;
  MtauSpec spec;  // (L_S, psi_S, |S|)
  // S_i realizing S<h_i> for each coset rep h_i of L_S.
  std::vector<int> objects;
  // f^a_i: S_i -> S_{a h_i}, stored at i * |H| + a. f^1_i = id.
  std::vector<Morphism> spanning;

  const Morphism& f(int i, int a) const;
};

// Throws if S is not simple, some shift of S is missing, a hom space the
// construction needs is not one-dimensional, or the extracted psi fails to be
// a normalized 2-cocycle.
SimpleOrbit analyze_simple(const GradedCategory& cat, int s, const SearchOptions& opts = {});

// Simple objects grouped by degree-1 isomorphism, and whether every object is
// a degree-1 direct sum of them with distinct classes disjoint.
struct LinearCensus {
  bool semisimple = true;
  std::optional<Violation> obstruction;
  std::vector<std::vector<int>> classes;
};

LinearCensus linear_semisimple_check(const GradedCategory& cat, const SearchOptions& opts = {});

struct DecompositionReport {
  std::vector<SimpleOrbit> orbits;
  // All simple objects in each orbit, ascending.
  std::vector<std::vector<int>> members;
  // From the direct sum of the orbit skeletons into the input. Absent when
  // there are no orbits or some orbit could not be analyzed.
  std::optional<FunctorData> witness;
  bool semisimple = false;
  std::optional<Violation> obstruction;

  std::vector<MtauSpec> summands() const;
};

DecompositionReport decompose(const GradedCategory& cat, const SearchOptions& opts = {});

struct EquivalenceDatum {
  int t = 0;
  Cochain1 gamma;
};

// Throws unless tau(t) = g g'^{-1}, L = t L' t^{-1} and psi = psi'^t d(gamma).
EquivalenceDatum make_datum(const MtauSpec& a, const MtauSpec& b, int t, Cochain1 gamma);
bool is_valid_datum(const MtauSpec& a, const MtauSpec& b, const EquivalenceDatum& d);

// One datum per (coset t L', class of gamma modulo d(eta)), with gamma the
// lexicographically smallest exponent vector in its class. Ordered by t, then
// gamma. Empty when the skeletons are not equivalent.
std::vector<EquivalenceDatum> classify_equivalences(const MtauSpec& a, const MtauSpec& b,
                                                    std::uint64_t cap = 1u << 16);

// F_{t,gamma}: R_{hL} -> R'_{htL'}, e^a_{hL} -> gamma(a)(hL) e'^a_{htL'}.
// Skeletons are built when not supplied.
FunctorData realize_functor(const MtauSpec& a, const MtauSpec& b, const EquivalenceDatum& d,
                            CategoryPtr source = nullptr, CategoryPtr target = nullptr);

// Datum of F_{bc} o F_{ab}: (t s, gamma * delta^t).
EquivalenceDatum compose_data(const MtauSpec& a, const MtauSpec& b, const MtauSpec& c,
                              const EquivalenceDatum& ab, const EquivalenceDatum& bc);

struct NatIso {
  Cochain0 eta;
  NatTransData nat;
};

// Every natural isomorphism F_{t,gamma} => F_{s,delta}, with components
// eta(hL) id. Empty when t L' != s L' or gamma delta^{-1} is not d(eta).
// Each returned transformation has passed verify_nat.
std::vector<NatIso> classify_nat_isos(const MtauSpec& a, const MtauSpec& b,
                                      const EquivalenceDatum& f, const EquivalenceDatum& g,
                                      std::uint64_t cap = 1u << 16);

}  // namespace taucat
