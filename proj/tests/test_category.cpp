#include <gtest/gtest.h>

#include <memory>

#include "oracles.hpp"
#include "taucat/category.hpp"
#include "taucat/error.hpp"
#include "taucat/mtau.hpp"

using namespace taucat;

namespace {

CategoryPtr table(int k, int p = 5) {
  return std::make_shared<const GradedCategory>(c8_table_category(k, PrimeField(p)));
}

int total_dim(const GradedCategory& c, int x, int y) {
  int d = 0;
  for (int h = 0; h < c.H().order(); ++h) d += c.rank(x, y, h);
  return d;
}

}  // namespace

TEST(VerifyAxioms, TableCategories) {
  const int dims[] = {1, 2, 4};
  const int ks[] = {1, 2, 4};
  for (int t = 0; t < 3; ++t) {
    const auto c = table(ks[t]);
    EXPECT_TRUE(verify_axioms(*c).ok()) << "C_" << ks[t];
    EXPECT_EQ(oracle::associativity_defects(*c), 0);
    for (int x = 0; x < c->object_count(); ++x)
      for (int y = 0; y < c->object_count(); ++y) EXPECT_EQ(total_dim(*c, x, y), dims[t]);
  }
}

TEST(VerifyAxioms, C8TableViolatesGrading) {
  const auto c = table(8);
  const Verdict v = verify_axioms(*c);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violations[0].kind, "grading");
  EXPECT_EQ(v.violations[0].where, (std::vector<int>{0, 0, 1}));
  // Only the odd degrees violate, and nothing else is wrong.
  EXPECT_EQ(v.violations.size(), 4u);
  for (const auto& viol : v.violations) {
    EXPECT_EQ(viol.kind, "grading");
    EXPECT_EQ(viol.where[2] % 2, 1);
  }
  EXPECT_EQ(total_dim(*c, 0, 0), 8);
}

TEST(VerifyAxioms, TerminalCategory) {
  GradedCategory c(GroupHom::identity(FiniteGroup()), PrimeField(5));
  c.add_object(0);
  c.set_rank(0, 0, 0, 1);
  c.set_identity(0, {1});
  c.set_composition(0, 0, 0, 0, 0, {1});
  EXPECT_TRUE(verify_axioms(c).ok());
}

TEST(VerifyAxioms, DetectsPerturbations) {
  GradedCategory c = c8_table_category(2, PrimeField(5));
  c.set_composition(0, 1, 3, 1, 2, {2});
  const Verdict v = verify_axioms(c);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violations[0].kind, "associativity");
  EXPECT_GT(oracle::associativity_defects(c), 0);

  GradedCategory d = c8_table_category(2, PrimeField(5));
  d.set_identity(2, {3});
  const Verdict vd = verify_axioms(d);
  ASSERT_FALSE(vd.ok());
  bool unit = false;
  for (const auto& x : vd.violations) unit = unit || x.kind == "left_unit" || x.kind == "right_unit";
  EXPECT_TRUE(unit);
}

TEST(VerifyAxioms, RaggedTensorRejected) {
  GradedCategory c = c8_table_category(2, PrimeField(5));
  EXPECT_THROW(c.set_composition(0, 1, 2, 1, 1, {1, 1}), Error);
  EXPECT_THROW(c.set_identity(0, {1, 0}), Error);
}

TEST(Compose, Examples) {
  const PrimeField f(5);
  const MtauSpec spec = MtauSpec::trivial(c8_to_c2(), f, Subgroup::from_elements(FiniteGroup::cyclic(8), {0, 4}), 0);
  const GradedCategory c = build_skeleton(spec);
  // e^2 o e^3 at coset 0.
  const Morphism e3 = basis_morphism(c, 0, 3, 3, 0);
  const Morphism e2 = basis_morphism(c, 3, 1, 2, 0);
  const Morphism e5 = compose(c, e2, e3);
  EXPECT_EQ(e5, (Morphism{0, 1, 5, {1}}));
  EXPECT_EQ(compose(c, identity_morphism(c, 3), e3), e3);
  EXPECT_TRUE(compose(c, e2, zero_morphism(c, 0, 3, 3)).is_zero());
  EXPECT_THROW(compose(c, e3, e3), Error);
}

TEST(Invert, Examples) {
  const auto c = table(2);
  EXPECT_EQ(invert(*c, identity_morphism(*c, 1)), identity_morphism(*c, 1));
  EXPECT_FALSE(invert(*c, zero_morphism(*c, 0, 1, 1)).has_value());
  const auto inv = invert(*c, Morphism{0, 3, 3, {2}});
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv, (Morphism{3, 0, 5, {3}}));
}

TEST(FindShift, Examples) {
  const auto c = table(2);
  for (int x = 0; x < 4; ++x) {
    const auto s = find_shift(*c, x, 0);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->object, x);
    EXPECT_EQ(s->iso, identity_morphism(*c, x));
  }
  const auto s = find_shift(*c, 0, 1);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->object, 1);
  EXPECT_EQ(s->iso.coords.size(), 1u);
  EXPECT_NE(s->iso.coords[0], 0u);
  for (int x = 0; x < 4; ++x)
    for (int n = 0; n < 8; ++n) {
      const auto sh = find_shift(*c, x, n);
      ASSERT_TRUE(sh);
      EXPECT_EQ(sh->object, (x + n) % 4);
      EXPECT_EQ(c->degree(sh->object), (c->degree(x) + n) % 2);
    }
  EXPECT_FALSE(find_invertible(*c, 0, 2, 1).has_value());
}

TEST(FindInvertible, HigherRank) {
  const PrimeField f(5);
  const auto base = table(2);
  const AdditiveCompletion comp(base, {{0, 0}, {0, 0, 0}, {0, 2}});
  const GradedCategory& c = *comp.category();
  const int xx = comp.find({0, 0}), xxx = comp.find({0, 0, 0}), x2 = comp.find({0, 2});
  // rank 4 and rank 9 degree-1 endomorphism spaces.
  const auto m4 = find_invertible(c, xx, xx, 0);
  ASSERT_TRUE(m4);
  EXPECT_TRUE(invert(c, *m4).has_value());
  const auto m9 = find_invertible(c, xxx, xxx, 0);
  ASSERT_TRUE(m9);
  EXPECT_TRUE(invert(c, *m9).has_value());
  // Rank-2 space with no invertible element: Hom^1(X, X + X).
  EXPECT_FALSE(find_invertible(c, 0, xx, 0).has_value());
  // X + Y is not X + X.
  EXPECT_FALSE(find_invertible(c, xx, x2, 0).has_value());
  // Same seed, same answer.
  EXPECT_EQ(find_invertible(c, xxx, xxx, 0), m9);
}

TEST(Simplicity, Examples) {
  const auto c = table(2);
  for (int x = 0; x < 4; ++x) EXPECT_TRUE(is_simple(*c, x));
  EXPECT_TRUE(are_disjoint_deg1(*c, 0, 1));
  EXPECT_FALSE(are_disjoint_deg1(*c, 0, 0));
  const AdditiveCompletion comp(c, {{0, 0}});
  EXPECT_FALSE(is_simple(*comp.category(), comp.find({0, 0})));
  EXPECT_EQ(comp.category()->rank(4, 4, 0), 4);
}

TEST(Functors, IdentityAndPerturbation) {
  const auto c = table(2);
  const FunctorData id = identity_functor(c);
  EXPECT_TRUE(verify_functor(id).ok());
  EXPECT_TRUE(verify_fully_faithful(id).ok());
  EXPECT_TRUE(verify_essentially_surjective(id).ok());

  // Rescale one hom space by a unit: composition breaks somewhere.
  FunctorData bad = id;
  bad.hom_maps[{0, 1, 1}] = Matrix::identity(1);
  bad.hom_maps[{0, 1, 1}](0, 0) = 2;
  const Verdict v = verify_functor(bad);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violations[0].kind, "composition");

  FunctorData wrong_deg = id;
  wrong_deg.object_map = {1, 2, 3, 0};
  EXPECT_FALSE(verify_functor(wrong_deg).ok());
}

TEST(Functors, ShiftAutomorphismAndComposition) {
  // X -> X + 2 on C_2 is a strict automorphism preserving degrees.
  const auto c = table(2);
  FunctorData s{c, c, {2, 3, 0, 1}, {}};
  for (int x = 0; x < 4; ++x)
    for (const auto& [y, h] : c->out_homs(x)) s.hom_maps[{x, y, h}] = Matrix::identity(1);
  EXPECT_TRUE(verify_functor(s).ok());
  const FunctorData ss = compose_functors(s, s);
  EXPECT_TRUE(verify_functor(ss).ok());
  EXPECT_EQ(ss.object_map, (std::vector<int>{0, 1, 2, 3}));
  const FunctorData si = compose_functors(s, identity_functor(c));
  EXPECT_TRUE(verify_functor(si).ok());
}

TEST(NatTrans, IdentityAndScalars) {
  const auto c = table(2);
  const FunctorData id = identity_functor(c);
  NatTransData eta{id, id, {}};
  for (int x = 0; x < 4; ++x) eta.components.push_back(identity_morphism(*c, x));
  EXPECT_TRUE(verify_nat(eta).ok());
  // A constant nonzero scalar is natural, a nonconstant one is not.
  for (auto& m : eta.components) m.coords[0] = 3;
  EXPECT_TRUE(verify_nat(eta).ok());
  eta.components[2].coords[0] = 4;
  const Verdict v = verify_nat(eta);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violations[0].kind, "naturality");
}

TEST(DirectSum, Examples) {
  const auto c = table(2);
  EXPECT_EQ(direct_sum_cat({c}), *c);
  const GradedCategory cc = direct_sum_cat({c, c});
  EXPECT_EQ(cc.object_count(), 8);
  for (int x = 0; x < 4; ++x)
    for (int y = 4; y < 8; ++y) EXPECT_EQ(total_dim(cc, x, y), 0);
  EXPECT_TRUE(verify_axioms(cc).ok());
  const auto c4 = table(4);
  const GradedCategory mixed = direct_sum_cat({c, c4});
  int simples = 0;
  for (int x = 0; x < mixed.object_count(); ++x) simples += is_simple(mixed, x);
  EXPECT_EQ(simples, 6);
  const auto other = std::make_shared<const GradedCategory>(build_group_groupoid(
      GroupHom::identity(FiniteGroup::cyclic(2)), PrimeField(5)));
  EXPECT_THROW(direct_sum_cat({c, other}), Error);
}

TEST(DegreeOnePart, KeepsOnlyTrivialDegree) {
  const auto c = table(2);
  const GradedCategory d = degree_one_part(*c);
  EXPECT_TRUE(verify_axioms(d).ok());
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      EXPECT_EQ(d.rank(x, y, 0), c->rank(x, y, 0));
      for (int h = 1; h < 8; ++h) EXPECT_EQ(d.rank(x, y, h), 0);
    }
}
