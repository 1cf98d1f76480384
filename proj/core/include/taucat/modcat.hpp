#pragma once

// H-module categories with explicit coherence data, the shift action of a
// graded category with shifts, the (-)* construction back to graded
// categories, and the two round-trip equivalences.

#include <vector>

#include "taucat/category.hpp"

namespace taucat {

// base carries only degree-1 homs; action[h] is alpha^h on base.
struct ModuleCat {
  CategoryPtr base;
  std::vector<FunctorData> action;
  std::vector<Morphism> epsilon;  // X -> alpha^1 X
  // alpha^a alpha^b X -> alpha^{ab} X at (a * |H| + b) * n + X.
  std::vector<Morphism> mu;

  int order() const { return base->H().order(); }
  int objects() const { return base->object_count(); }
  int act(int h, int x) const { return action.at(h).object_map.at(x); }
  const Morphism& mu_at(int a, int b, int x) const;
  NatTransData epsilon_nat() const;
  NatTransData mu_nat(int a, int b) const;
};

// Each alpha^h is a linear autoequivalence, epsilon and mu are natural
// isomorphisms, and the unit and associativity diagrams commute.
Verdict verify_module(const ModuleCat& m);
// |alpha^h X| = tau(h) |X| for all h and X.
Verdict check_tau_module(const ModuleCat& m);

// phi^h X = X<h>, phi^h f = r_{Y,h} f r_{X,h}^{-1}, epsilon = r_{X,1},
// mu = r_{X,ab} r_{X,b}^{-1} r_{X<b>,a}^{-1}.
ModuleCat extract_action(const GradedCategory& cat, const ShiftSystem& shifts);

// Hom^h(X, Y) = Hom(alpha^h X, Y), f' o f = f' alpha^{h'}(f) mu_{h',h,X}^{-1},
// id_X = epsilon_X^{-1}.
GradedCategory bullet(const ModuleCat& m);
// X<a> = alpha^a X with r_{X,a} = id.
ShiftSystem bullet_shifts(const ModuleCat& m, const GradedCategory& bulleted);

struct ModuleFunctor {
  FunctorData F;
  // s^h_X: beta^h F X -> F alpha^h X at h * n + X.
  std::vector<Morphism> s;
};

Verdict verify_module_functor(const ModuleCat& src, const ModuleCat& dst, const ModuleFunctor& mf);
ModuleFunctor identity_module_functor(const ModuleCat& m);
// (E, r) o (F, s) = (E F, E s^h_X o r^h_{FX}).
ModuleFunctor compose_module_functors(const ModuleFunctor& outer, const ModuleFunctor& inner);

// Degree-1 part of a graded functor with s^h_X = F(r_{X,h}) r_{FX,h}^{-1}.
ModuleFunctor extract_functor(const FunctorData& F, const ShiftSystem& src_shifts,
                              const ShiftSystem& dst_shifts, const ModuleCat& src, const ModuleCat& dst);

// (F, s)* f = F f o s^h_X.
FunctorData bullet_functor(const ModuleCat& src, const ModuleCat& dst, const ModuleFunctor& mf,
                           CategoryPtr bsrc, CategoryPtr bdst);

// eta: (E, r) => (F, s) with components EX -> FX.
Verdict verify_module_nat(const ModuleCat& src, const ModuleCat& dst, const ModuleFunctor& E,
                          const ModuleFunctor& F, const std::vector<Morphism>& eta);
// eta*_X = eta_X o epsilon^beta_{EX}^{-1}.
NatTransData bullet_nat(const ModuleCat& src, const ModuleCat& dst, const ModuleFunctor& E,
                        const ModuleFunctor& F, const std::vector<Morphism>& eta, CategoryPtr bsrc,
                        CategoryPtr bdst);

// Whether g o f and f o g are both identity functors, hom map by hom map.
Verdict verify_strict_inverse(const FunctorData& f, const FunctorData& g);

struct NuRoundTrip {
  CategoryPtr bulleted;
  ModuleCat restricted;  // ((C, alpha)*)^1 with the canonical shifts
  ModuleFunctor nu;      // f -> f o epsilon_X, s = id
  FunctorData inverse;   // f -> f o epsilon_X^{-1}
  Verdict verdict;
};

NuRoundTrip roundtrip_nu(const ModuleCat& m);

struct EtaRoundTrip {
  ModuleCat restricted;  // C^1
  CategoryPtr bulleted;  // (C^1)*
  FunctorData eta;       // f -> f o r_{X,h}
  FunctorData inverse;   // f -> f o r_{X,h}^{-1}
  Verdict verdict;
};

EtaRoundTrip roundtrip_eta(const CategoryPtr& cat, const ShiftSystem& shifts);

}  // namespace taucat
