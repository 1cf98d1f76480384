#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "taucat/modular.hpp"

using namespace taucat;

namespace {

bool satisfies(const ModularSystem& s, const ModVector& x) {
  for (size_t i = 0; i < s.rows.size(); ++i) {
    std::int64_t v = 0;
    for (int j = 0; j < s.vars; ++j) v += s.rows[i][j] * x[j];
    if (mod_reduce(v - s.rhs[i], s.modulus) != 0) return false;
  }
  return true;
}

// Solution set described by a ModularSolution, expanded.
std::set<ModVector> expand(const ModularSolution& sol, int vars) {
  std::set<ModVector> out;
  for (const ModVector& k : enumerate_span(sol.modulus, vars, sol.kernel)) {
    ModVector x(vars);
    for (int j = 0; j < vars; ++j) x[j] = mod_reduce(sol.particular[j] + k[j], sol.modulus);
    out.insert(x);
  }
  return out;
}

}  // namespace

TEST(UnitSolveLinear, Examples) {
  ModularSystem zero{4, 1, {{0}}, {0}};
  auto s0 = unit_solve_linear(zero);
  ASSERT_TRUE(s0);
  EXPECT_EQ(expand(*s0, 1).size(), 4u);

  ModularSystem parity{4, 1, {{2}}, {1}};
  EXPECT_FALSE(unit_solve_linear(parity));

  ModularSystem pair{4, 2, {{1, 1}, {1, -1}}, {3, 1}};
  auto s2 = unit_solve_linear(pair);
  ASSERT_TRUE(s2);
  const auto all = expand(*s2, 2);
  EXPECT_TRUE(all.count(ModVector{2, 1}));
  EXPECT_EQ(all, oracle::brute_force_solutions(pair));
}

TEST(UnitSolveLinear, AgreesWithEnumeration) {
  std::mt19937_64 rng(7);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::int64_t n = std::vector<std::int64_t>{2, 4, 6, 8, 10, 12}[rng() % 6];
    const int vars = 1 + static_cast<int>(rng() % 4);
    const int eqs = static_cast<int>(rng() % 5);
    ModularSystem s{n, vars, {}, {}};
    for (int i = 0; i < eqs; ++i) {
      ModVector row(vars);
      for (auto& c : row) c = static_cast<std::int64_t>(rng() % n);
      s.rows.push_back(row);
      s.rhs.push_back(static_cast<std::int64_t>(rng() % n));
    }
    // Half the time force feasibility by planting a solution.
    if (trial % 2 == 0) {
      ModVector x(vars);
      for (auto& v : x) v = static_cast<std::int64_t>(rng() % n);
      for (int i = 0; i < eqs; ++i) {
        std::int64_t v = 0;
        for (int j = 0; j < vars; ++j) v += s.rows[i][j] * x[j];
        s.rhs[i] = mod_reduce(v, n);
      }
    }
    const auto truth = oracle::brute_force_solutions(s);
    const auto sol = unit_solve_linear(s);
    if (truth.empty()) {
      EXPECT_FALSE(sol) << "trial " << trial;
      ++infeasible;
      continue;
    }
    ++feasible;
    ASSERT_TRUE(sol) << "trial " << trial;
    EXPECT_TRUE(satisfies(s, sol->particular));
    EXPECT_EQ(expand(*sol, vars), truth) << "trial " << trial;
  }
  EXPECT_GT(feasible, 100);
  EXPECT_GT(infeasible, 10);
}

TEST(UnitSolveLinear, SixVariables) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::int64_t n = std::vector<std::int64_t>{4, 6}[trial % 2];
    ModularSystem s{n, 6, {}, {}};
    for (int i = 0; i < 4; ++i) {
      ModVector row(6);
      for (auto& c : row) c = static_cast<std::int64_t>(rng() % n);
      s.rows.push_back(row);
      s.rhs.push_back(static_cast<std::int64_t>(rng() % n));
    }
    const auto truth = oracle::brute_force_solutions(s);
    const auto sol = unit_solve_linear(s);
    ASSERT_EQ(sol.has_value(), !truth.empty());
    if (sol) EXPECT_EQ(expand(*sol, 6), truth);
  }
}

TEST(HowellBasis, ReductionIsLexMinimal) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t n = std::vector<std::int64_t>{2, 4, 6, 12}[rng() % 4];
    const int dim = 1 + static_cast<int>(rng() % 3);
    std::vector<ModVector> gens(rng() % 4, ModVector(dim));
    for (auto& g : gens)
      for (auto& c : g) c = static_cast<std::int64_t>(rng() % n);
    const HowellBasis basis(n, dim, gens);
    const auto span = enumerate_span(n, dim, gens);
    EXPECT_EQ(basis.span_size(), span.size());
    std::set<ModVector> span_set(span.begin(), span.end());
    ModVector v(dim);
    for (auto& c : v) c = static_cast<std::int64_t>(rng() % n);
    // Oracle: minimum of v + span.
    ModVector best;
    for (const ModVector& s : span) {
      ModVector w(dim);
      for (int j = 0; j < dim; ++j) w[j] = mod_reduce(v[j] + s[j], n);
      if (best.empty() || w < best) best = w;
    }
    EXPECT_EQ(basis.reduce(v), best);
    for (const ModVector& s : span) EXPECT_TRUE(basis.contains(s));
    EXPECT_EQ(basis.contains(v), span_set.count(v) == 1);
  }
}

TEST(HowellBasis, EnumerateClasses) {
  // Z/4 x Z/4 modulo <(2,0)>: span of (1,0),(0,1) has 8 classes.
  const HowellBasis q(4, 2, {{2, 0}});
  const auto classes = enumerate_classes({0, 0}, {{1, 0}, {0, 1}}, q);
  EXPECT_EQ(classes.size(), 8u);
  for (const auto& c : classes) EXPECT_LT(c[0], 2);
}
