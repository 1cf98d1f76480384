#include <gtest/gtest.h>

#include <memory>

#include "taucat/error.hpp"
#include "taucat/mtau.hpp"
#include "taucat/yoneda.hpp"

using namespace taucat;

namespace {

CategoryPtr ptr(GradedCategory c) { return std::make_shared<const GradedCategory>(std::move(c)); }

CategoryPtr c2() {
  static const CategoryPtr c = ptr(c8_table_category(2, PrimeField(5)));
  return c;
}

CategoryPtr skeleton_x4() {
  static const CategoryPtr c = [] {
    const PrimeField f(5);
    const int gs[] = {4};
    const Subgroup L = Subgroup::generated(FiniteGroup::cyclic(8), gs);
    return ptr(build_skeleton(MtauSpec::make(c8_to_c2(), f, L, d1(random_cochain1(CosetSpace(L), f, 9)), 0)));
  }();
  return c;
}

}  // namespace

TEST(Evaluate, Examples) {
  const auto c = c2();
  EXPECT_EQ(evaluate_yoneda(*c, 0, 0, 0).dims[0], 1);
  EXPECT_EQ(evaluate_yoneda(*c, 0, 1, 1).dims[0], 1);
  for (int h = 0; h < 8; ++h) EXPECT_EQ(evaluate_yoneda(*c, 0, 1, 1).dims[h], h % 4 == 0 ? 1 : 0);
  const GradedCategory sum = direct_sum_cat({c, c});
  for (int a = 0; a < 8; ++a)
    for (int h = 0; h < 8; ++h) EXPECT_EQ(evaluate_yoneda(sum, 0, a, 5).dims[h], 0);
  GradedFunctor two{{0, 0}, {1, 3}};
  for (int h = 0; h < 8; ++h)
    EXPECT_EQ(evaluate(*c, two, 2).dims[h], c->rank(0, 2, h) + c->rank(1, 2, (h + 3) % 8));
}

TEST(NatSpace, RepresentableDimensions) {
  for (const CategoryPtr& c : {c2(), skeleton_x4()}) {
    const int n = c->object_count();
    for (int x = 0; x < n; ++x)
      for (int a = 0; a < 8; ++a)
        for (int y = 0; y < n; ++y) {
          const YonedaProblem prob(c, x, a, {{y, a}});
          EXPECT_EQ(static_cast<int>(prob.nat_space().size()), c->rank(y, x, 0));
          EXPECT_EQ(prob.fiber_dim(), c->rank(y, x, 0));
        }
  }
}

TEST(NatSpace, PhiIsAnIsomorphism) {
  const auto c = c2();
  for (int x = 0; x < 4; ++x)
    for (int a : {0, 1, 5})
      for (int z = 0; z < 4; ++z)
        for (int b : {0, 3, 6}) {
          const YonedaProblem prob(c, x, a, {{z, b}});
          // dim Nat = dim (F X)_{a^{-1}} = rank Hom^{a^{-1} b}(Z, X).
          EXPECT_EQ(static_cast<int>(prob.nat_space().size()), c->rank(z, x, ((8 - a) + b) % 8));
          EXPECT_EQ(prob.fiber_dim(), static_cast<int>(prob.nat_space().size()));
          for (const auto& eta : prob.nat_space()) {
            EXPECT_TRUE(prob.verify(eta).ok());
            EXPECT_EQ(prob.phi_inv(prob.phi(eta)), eta);
          }
          for (int k = 0; k < prob.fiber_dim(); ++k) {
            std::vector<Scalar> v(prob.fiber_dim(), 0);
            v[k] = 1;
            const GradedNatTrans eta = prob.phi_inv(v);
            EXPECT_TRUE(prob.verify(eta).ok());
            EXPECT_EQ(prob.phi(eta), v);
          }
        }
}

TEST(NatSpace, IdentityAndZero) {
  const auto c = skeleton_x4();
  const YonedaProblem prob(c, 2, 3, {{2, 3}});
  const GradedNatTrans id = prob.phi_inv(c->identity_coords(2));
  for (const Matrix& m : id.blocks)
    if (m.rows() > 0) EXPECT_EQ(m, Matrix::identity(m.rows()));
  EXPECT_EQ(prob.phi(id), c->identity_coords(2));
  EXPECT_EQ(prob.phi_inv({0}), prob.zero());
  EXPECT_TRUE(is_invertible(*c, id));
}

TEST(NatSpace, SumsOfRepresentables) {
  const auto base = c2();
  const AdditiveCompletion comp(base, {{0, 2}, {0, 0}});
  const CategoryPtr c = comp.category();
  const GradedFunctor F{{0, 0}, {4, 1}, {5, 2}};
  for (int x = 0; x < c->object_count(); ++x)
    for (int a : {0, 1, 2}) {
      const YonedaProblem prob(c, x, a, F);
      EXPECT_EQ(static_cast<int>(prob.nat_space().size()), prob.fiber_dim());
      for (const auto& eta : prob.nat_space()) EXPECT_EQ(prob.phi_inv(prob.phi(eta)), eta);
    }
}

TEST(NatSpace, DisjointSummands) {
  const GradedCategory sum = direct_sum_cat({c2(), c2()});
  const CategoryPtr c = ptr(sum);
  for (int a = 0; a < 8; ++a) EXPECT_TRUE(YonedaProblem(c, 0, a, {{5, a}}).nat_space().empty());
}

TEST(NatSpace, PerturbationIsCaught) {
  const auto c = c2();
  const YonedaProblem prob(c, 0, 0, {{0, 0}});
  ASSERT_EQ(prob.nat_space().size(), 1u);
  GradedNatTrans eta = prob.nat_space()[0];
  // Blocks of (Y = 1, h = 1): change one scalar.
  Matrix& m = eta.blocks[1 * 8 + 1];
  ASSERT_EQ(m.rows(), 1);
  m(0, 0) = c->field().add(m(0, 0), 1);
  EXPECT_FALSE(prob.verify(eta).ok());
  EXPECT_THROW(prob.phi(eta), Error);
}

TEST(PhiNaturality, InX) {
  const auto base = c2();
  const AdditiveCompletion comp(base, {{0, 0}, {0, 2}});
  const CategoryPtr c = comp.category();
  const PrimeField& f = c->field();
  const GradedFunctor F{{4, 0}, {2, 5}};
  // Degree-1 maps X -> X' between objects of degree 0.
  const int xs[] = {0, 2, 4, 5};
  for (int x : xs)
    for (int x2 : xs)
      for (int a : {0, 4}) {
        const YonedaProblem src(c, x, a, F);
        const YonedaProblem dst(c, x2, a, F);
        for (int k = 0; k < c->rank(x, x2, 0); ++k) {
          const Morphism m = basis_morphism(*c, x, x2, 0, k);
          for (const auto& eta : src.nat_space()) {
            const GradedNatTrans moved = precompose(src, dst, eta, m);
            EXPECT_TRUE(dst.verify(moved).ok());
            const auto lhs = dst.phi(moved);
            const auto rhs = apply(f, functor_action(*c, F, m, (8 - a) % 8), src.phi(eta));
            EXPECT_EQ(lhs, rhs);
          }
        }
      }
}

TEST(ShiftRepresentability, C2) {
  const auto c = c2();
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int a = 0; a < 8; ++a)
        for (int b : {0, 3}) {
          const bool iso = find_invertible(*c, x, y, a).has_value();
          const YonedaProblem prob(c, y, b, {{x, (b + a) % 8}});
          const bool rep = find_invertible_nat(prob).has_value();
          EXPECT_EQ(iso, rep) << x << " " << y << " " << a;
        }
}
