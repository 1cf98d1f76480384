#include <gtest/gtest.h>

#include <memory>
#include <numeric>

#include "oracles.hpp"
#include "taucat/error.hpp"
#include "taucat/structure.hpp"

using namespace taucat;

namespace {

const FiniteGroup& c8() {
  static const FiniteGroup g = FiniteGroup::cyclic(8);
  return g;
}

Subgroup gen(int x) {
  const int gs[] = {x};
  return Subgroup::generated(c8(), gs);
}

CategoryPtr ptr(GradedCategory c) { return std::make_shared<const GradedCategory>(std::move(c)); }

// trivial, a random coboundary, and (when H^2 != 0) a noncoboundary.
std::vector<Cochain2> test_psis(const CosetSpace& s, const PrimeField& f) {
  std::vector<Cochain2> out{Cochain2(s, f), d1(random_cochain1(s, f, 17))};
  if (auto nc = oracle::noncoboundary(s, f)) out.push_back(*nc);
  return out;
}

// One object, End^1 = F_p[t]/t^2.
GradedCategory dual_numbers() {
  GradedCategory c(GroupHom::identity(FiniteGroup()), PrimeField(5));
  c.add_object(0);
  c.set_rank(0, 0, 0, 2);
  // basis 0 = id, basis 1 = t
  c.set_composition(0, 0, 0, 0, 0, {1, 0, 0, 0, 0, 1, 1, 0});
  c.set_identity(0, {1, 0});
  return c;
}

}  // namespace

TEST(Oracle, CohomologyOfC8) {
  const PrimeField f(5);
  // Shapiro: H^2 is H^2(L, F_5^x), nonzero exactly for L != 1.
  EXPECT_FALSE(oracle::noncoboundary(CosetSpace(gen(0)), f).has_value());
  EXPECT_TRUE(oracle::noncoboundary(CosetSpace(gen(4)), f).has_value());
  EXPECT_TRUE(oracle::noncoboundary(CosetSpace(gen(2)), f).has_value());
  for (const auto& psi : oracle::cocycle_generators(CosetSpace(gen(2)), f)) {
    EXPECT_TRUE(psi.is_normalized());
    EXPECT_TRUE(is_cocycle(psi));
  }
}

TEST(AnalyzeSimple, RecoversSkeletonData) {
  const PrimeField f(5);
  for (int l : {0, 4, 2}) {
    const Subgroup L = gen(l);
    const CosetSpace s(L);
    for (const auto& psi : test_psis(s, f))
      for (int g = 0; g < 2; ++g) {
        const MtauSpec spec = MtauSpec::make(c8_to_c2(), f, L, psi, g);
        const GradedCategory c = build_skeleton(spec);
        for (int x = 0; x < c.object_count(); ++x) {
          const SimpleOrbit o = analyze_simple(c, x);
          EXPECT_EQ(o.spec.L, L);
          EXPECT_EQ(o.spec.g, c.degree(x));
          EXPECT_EQ(static_cast<int>(o.objects.size()), s.size());
          for (int i = 0; i < s.size(); ++i) EXPECT_EQ(o.f(i, 0), identity_morphism(c, o.objects[i]));
          if (x == 0) {
            // The spanning morphisms are the e's, so psi comes back verbatim.
            EXPECT_EQ(o.spec.psi, psi);
            for (int i = 0; i < s.size(); ++i) EXPECT_EQ(o.objects[i], i);
          }
          EXPECT_FALSE(classify_equivalences(o.spec, spec).empty());
        }
      }
  }
}

TEST(AnalyzeSimple, TableCategory) {
  const GradedCategory c = c8_table_category(2, PrimeField(5));
  for (int x = 0; x < 4; ++x) {
    const SimpleOrbit o = analyze_simple(c, x);
    EXPECT_EQ(o.spec.L, gen(4));
    EXPECT_EQ(o.spec.psi, Cochain2(CosetSpace(gen(4)), PrimeField(5)));
  }
}

TEST(AnalyzeSimple, TrivialGroup) {
  const FiniteGroup one;
  const GradedCategory c = build_skeleton(MtauSpec::trivial(GroupHom::identity(one), PrimeField(3),
                                                            Subgroup::trivial(one), 0));
  const SimpleOrbit o = analyze_simple(c, 0);
  EXPECT_EQ(o.spec.L.order(), 1);
  EXPECT_EQ(o.spec.psi.values(), std::vector<Scalar>{1});
}

TEST(AnalyzeSimple, Errors) {
  EXPECT_THROW(analyze_simple(dual_numbers(), 0), Error);
  // The C_8 table has no object of odd degree, so no shifts by x.
  EXPECT_THROW(analyze_simple(c8_table_category(8, PrimeField(5)), 0), Error);
  const AdditiveCompletion comp(ptr(c8_table_category(2, PrimeField(5))), {{0, 0}});
  EXPECT_THROW(analyze_simple(*comp.category(), 4), Error);
}

TEST(LinearCheck, Examples) {
  const PrimeField f(5);
  for (int l : {0, 4, 2}) {
    const GradedCategory c = build_skeleton(MtauSpec::trivial(c8_to_c2(), f, gen(l), 0));
    const LinearCensus lc = linear_semisimple_check(c);
    EXPECT_TRUE(lc.semisimple);
    EXPECT_EQ(static_cast<int>(lc.classes.size()), 8 / gen(l).order());
  }
  const LinearCensus dn = linear_semisimple_check(dual_numbers());
  EXPECT_FALSE(dn.semisimple);
  ASSERT_TRUE(dn.obstruction);
  EXPECT_EQ(dn.obstruction->where, std::vector<int>{0});

  const GradedCategory empty(c8_to_c2(), f);
  const LinearCensus le = linear_semisimple_check(empty);
  EXPECT_TRUE(le.semisimple);
  EXPECT_TRUE(le.classes.empty());

  const AdditiveCompletion comp(ptr(c8_table_category(2, f)), {{}, {0, 0}, {0, 2}, {1, 1, 3}});
  const LinearCensus lc = linear_semisimple_check(*comp.category());
  EXPECT_TRUE(lc.semisimple);
  EXPECT_EQ(lc.classes, (std::vector<std::vector<int>>{{0}, {1}, {2}, {3}}));
}

TEST(Decompose, SkeletonsGiveOneEquivalentSummand) {
  const PrimeField f(5);
  for (int l : {0, 4, 2}) {
    const Subgroup L = gen(l);
    for (const auto& psi : test_psis(CosetSpace(L), f))
      for (int g = 0; g < 2; ++g) {
        const MtauSpec spec = MtauSpec::make(c8_to_c2(), f, L, psi, g);
        const DecompositionReport r = decompose(build_skeleton(spec));
        EXPECT_TRUE(r.semisimple);
        ASSERT_EQ(r.orbits.size(), 1u);
        ASSERT_TRUE(r.witness);
        EXPECT_TRUE(verify_functor(*r.witness).ok());
        EXPECT_TRUE(verify_fully_faithful(*r.witness).ok());
        EXPECT_TRUE(verify_essentially_surjective(*r.witness).ok());
        EXPECT_FALSE(classify_equivalences(spec, r.orbits[0].spec).empty());
      }
  }
}

TEST(Decompose, TableSum) {
  const PrimeField f(5);
  const GradedCategory c = direct_sum_cat({ptr(c8_table_category(2, f)), ptr(c8_table_category(4, f))});
  const DecompositionReport r = decompose(c);
  EXPECT_TRUE(r.semisimple);
  ASSERT_EQ(r.orbits.size(), 2u);
  EXPECT_EQ(r.orbits[0].spec.space().size(), 4);
  EXPECT_EQ(r.orbits[1].spec.space().size(), 2);
  EXPECT_EQ(r.members, (std::vector<std::vector<int>>{{0, 1, 2, 3}, {4, 5}}));
  // Decomposing the direct sum of the summand skeletons gives equivalent specs.
  std::vector<CategoryPtr> parts;
  for (const auto& s : r.summands()) parts.push_back(ptr(build_skeleton(s)));
  const DecompositionReport r2 = decompose(direct_sum_cat(parts));
  ASSERT_EQ(r2.orbits.size(), 2u);
  for (int k = 0; k < 2; ++k) EXPECT_FALSE(classify_equivalences(r.orbits[k].spec, r2.orbits[k].spec).empty());
}

TEST(Decompose, GroupGroupoid) {
  const PrimeField f(5);
  const DecompositionReport r = decompose(build_group_groupoid(c8_to_c2(), f));
  EXPECT_TRUE(r.semisimple);
  ASSERT_EQ(r.orbits.size(), 1u);
  EXPECT_EQ(r.orbits[0].spec.L, kernel(c8_to_c2()));
  EXPECT_FALSE(classify_equivalences(r.orbits[0].spec, MtauSpec::trivial(c8_to_c2(), f, gen(2), 0)).empty());
}

TEST(Decompose, CompletionAndFailures) {
  const PrimeField f(5);
  const AdditiveCompletion comp(ptr(c8_table_category(2, f)), {{}, {0, 0}, {1, 3}});
  const DecompositionReport r = decompose(*comp.category());
  EXPECT_TRUE(r.semisimple);
  EXPECT_EQ(r.orbits.size(), 1u);

  const DecompositionReport dn = decompose(dual_numbers());
  EXPECT_FALSE(dn.semisimple);
  ASSERT_TRUE(dn.obstruction);
  EXPECT_EQ(dn.obstruction->kind, "not_a_sum");

  const DecompositionReport c8 = decompose(c8_table_category(8, f));
  EXPECT_FALSE(c8.semisimple);
  EXPECT_EQ(c8.obstruction->kind, "orbit");

  const DecompositionReport empty = decompose(GradedCategory(c8_to_c2(), f));
  EXPECT_TRUE(empty.semisimple);
  EXPECT_TRUE(empty.orbits.empty());
}

TEST(Equivalences, IdentityIsListed) {
  const PrimeField f(5);
  const MtauSpec a = MtauSpec::trivial(c8_to_c2(), f, gen(4), 1);
  const auto list = classify_equivalences(a, a);
  ASSERT_FALSE(list.empty());
  EXPECT_EQ(list[0].t, 0);
  EXPECT_EQ(list[0].gamma, Cochain1(a.space(), f));
  const FunctorData fd = realize_functor(a, a, list[0]);
  EXPECT_EQ(fd.object_map, (std::vector<int>{0, 1, 2, 3}));
  for (const auto& [key, m] : fd.hom_maps) EXPECT_EQ(m, Matrix::identity(1));
}

TEST(Equivalences, CountMatchesShapiro) {
  // Between trivial-psi skeletons the data are (cosets t L' over tau^{-1}(g g'))
  // x Hom(L, F_p^x).
  for (int p : {3, 5, 7}) {
    const PrimeField f(p);
    for (int l : {0, 4, 2})
      for (int g = 0; g < 2; ++g)
        for (int g2 = 0; g2 < 2; ++g2) {
          const MtauSpec a = MtauSpec::trivial(c8_to_c2(), f, gen(l), g);
          const MtauSpec b = MtauSpec::trivial(c8_to_c2(), f, gen(l), g2);
          const int order = gen(l).order();
          const size_t want = (4 / order) * std::gcd(order, p - 1);
          EXPECT_EQ(classify_equivalences(a, b).size(), want) << "p=" << p << " L=<" << l << ">";
        }
  }
}

TEST(Equivalences, OrderMismatchIsEmpty) {
  const PrimeField f(5);
  const MtauSpec a = MtauSpec::trivial(c8_to_c2(), f, gen(4), 1);
  const MtauSpec b = MtauSpec::trivial(c8_to_c2(), f, gen(2), 1);
  EXPECT_TRUE(classify_equivalences(a, b).empty());
  EXPECT_TRUE(classify_equivalences(b, a).empty());
}

TEST(Equivalences, NoncoboundaryIsNotTrivial) {
  const PrimeField f(5);
  for (int l : {4, 2}) {
    const CosetSpace s(gen(l));
    const auto nc = oracle::noncoboundary(s, f);
    ASSERT_TRUE(nc);
    const MtauSpec a = MtauSpec::make(c8_to_c2(), f, gen(l), *nc, 0);
    const MtauSpec b = MtauSpec::trivial(c8_to_c2(), f, gen(l), 0);
    EXPECT_TRUE(classify_equivalences(a, b).empty());
    EXPECT_TRUE(classify_equivalences(b, a).empty());
    EXPECT_FALSE(classify_equivalences(a, a).empty());
  }
}

TEST(Equivalences, RealizedFunctorsAreEquivalences) {
  const PrimeField f(5);
  for (int l : {0, 4, 2}) {
    const CosetSpace s(gen(l));
    for (const auto& psi : test_psis(s, f))
      for (std::uint64_t seed : {1u, 2u, 3u}) {
        const MtauSpec a = MtauSpec::make(c8_to_c2(), f, gen(l), psi, 0);
        const Cochain1 g0 = random_cochain1(s, f, seed);
        const MtauSpec b = MtauSpec::make(c8_to_c2(), f, gen(l), psi * d1(g0), 1);
        const auto list = classify_equivalences(a, b);
        ASSERT_FALSE(list.empty());
        for (const auto& d : list) {
          const FunctorData fd = realize_functor(a, b, d);
          EXPECT_TRUE(verify_functor(fd).ok());
          EXPECT_TRUE(verify_fully_faithful(fd).ok());
          EXPECT_TRUE(verify_essentially_surjective(fd).ok());
        }
        // Symmetry, and an inverse up to natural isomorphism.
        const auto back = classify_equivalences(b, a);
        ASSERT_FALSE(back.empty());
        const EquivalenceDatum id{0, Cochain1(s, f)};
        bool inverse_found = false;
        for (const auto& d2 : back)
          if (!classify_nat_isos(a, a, compose_data(a, b, a, list[0], d2), id).empty()) inverse_found = true;
        EXPECT_TRUE(inverse_found);
      }
  }
}

TEST(Equivalences, PerturbedGammaBreaksFunctoriality) {
  const PrimeField f(5);
  const MtauSpec a = MtauSpec::trivial(c8_to_c2(), f, gen(4), 0);
  const auto list = classify_equivalences(a, a);
  FunctorData fd = realize_functor(a, a, list[0]);
  fd.hom_maps[{0, 3, 3}](0, 0) = 2;
  const Verdict v = verify_functor(fd);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violations[0].kind, "composition");
  // A datum whose gamma is off at one point is rejected outright.
  Cochain1 bad = list[0].gamma;
  bad.set({3}, 0, 2);
  EXPECT_THROW(make_datum(a, a, 0, bad), Error);
  EXPECT_THROW(realize_functor(a, a, EquivalenceDatum{0, bad}), Error);
}

TEST(Equivalences, CompositionMatchesFunctorComposition) {
  const PrimeField f(7);
  const CosetSpace s(gen(4));
  const MtauSpec a = MtauSpec::make(c8_to_c2(), f, gen(4), d1(random_cochain1(s, f, 3)), 0);
  const MtauSpec b = MtauSpec::make(c8_to_c2(), f, gen(4), d1(random_cochain1(s, f, 4)), 1);
  const MtauSpec c = MtauSpec::make(c8_to_c2(), f, gen(4), d1(random_cochain1(s, f, 5)), 0);
  const auto ab = classify_equivalences(a, b);
  const auto bc = classify_equivalences(b, c);
  ASSERT_FALSE(ab.empty());
  ASSERT_FALSE(bc.empty());
  const auto sa = ptr(build_skeleton(a)), sb = ptr(build_skeleton(b)), sc = ptr(build_skeleton(c));
  for (const auto& d1_ : ab)
    for (const auto& d2_ : bc) {
      const FunctorData composite = compose_functors(realize_functor(b, c, d2_, sb, sc), realize_functor(a, b, d1_, sa, sb));
      const FunctorData direct = realize_functor(a, c, compose_data(a, b, c, d1_, d2_), sa, sc);
      EXPECT_EQ(composite.object_map, direct.object_map);
      EXPECT_EQ(composite.hom_maps, direct.hom_maps);
    }
}

TEST(NatIsos, IdentityAndPlanted) {
  const PrimeField f(5);
  const CosetSpace s(gen(2));
  const MtauSpec a = MtauSpec::make(c8_to_c2(), f, gen(2), d1(random_cochain1(s, f, 8)), 0);
  const auto list = classify_equivalences(a, a);
  ASSERT_FALSE(list.empty());
  const auto self = classify_nat_isos(a, a, list[0], list[0]);
  bool has_one = false;
  for (const auto& n : self) has_one = has_one || n.eta == Cochain0(s, f);
  EXPECT_TRUE(has_one);
  // Transitive action: the solutions are the constants.
  EXPECT_EQ(self.size(), 4u);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Cochain0 eta0 = random_cochain0(s, f, seed);
    const EquivalenceDatum g{list[0].t, list[0].gamma * d0(eta0)};
    ASSERT_TRUE(is_valid_datum(a, a, g));
    bool found = false;
    for (const auto& n : classify_nat_isos(a, a, g, list[0])) found = found || n.eta == eta0;
    EXPECT_TRUE(found) << seed;
  }
}

TEST(NatIsos, DifferentCosetsGiveNothing) {
  const PrimeField f(5);
  const MtauSpec a = MtauSpec::trivial(c8_to_c2(), f, gen(4), 0);
  const auto list = classify_equivalences(a, a);
  // t = 0 and t = 2 lie in different cosets of <x^4>.
  ASSERT_EQ(list.size(), 4u);
  EXPECT_EQ(list[0].t, 0);
  EXPECT_EQ(list[2].t, 2);
  EXPECT_TRUE(classify_nat_isos(a, a, list[0], list[2]).empty());
  // Same t, inequivalent gamma classes.
  EXPECT_TRUE(classify_nat_isos(a, a, list[0], list[1]).empty());
}
