#include "taucat/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "taucat/error.hpp"

namespace taucat {

namespace {

std::string num(int v) { return std::to_string(v); }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
};

// Groups `items` by the relation, each group ascending, groups ordered by
// their first element.
template <typename Rel>
std::vector<std::vector<int>> group_by(const std::vector<int>& items, Rel related) {
  UnionFind uf(static_cast<int>(items.size()));
  for (size_t i = 0; i < items.size(); ++i)
    for (size_t j = i + 1; j < items.size(); ++j)
      if (uf.find(static_cast<int>(i)) != uf.find(static_cast<int>(j)) && related(items[i], items[j]))
        uf.unite(static_cast<int>(i), static_cast<int>(j));
  std::vector<std::vector<int>> out;
  std::vector<int> slot(items.size(), -1);
  for (size_t i = 0; i < items.size(); ++i) {
    const int r = uf.find(static_cast<int>(i));
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(items[i]);
  }
  return out;
}

// Whether X is a degree-1 direct sum of copies of the given pairwise disjoint
// simple objects: the composition pairing Hom(X,S) x Hom(S,X) -> End(S) is
// used to build dual projections, and the resulting idempotents must sum to
// id_X.
bool decomposes(const GradedCategory& cat, int x, const std::vector<int>& simples) {
  const PrimeField& f = cat.field();
  const int e = cat.H().identity();
  Morphism sum = zero_morphism(cat, x, x, e);
  for (int s : simples) {
    const int m = cat.rank(s, x, e);
    const int n = cat.rank(x, s, e);
    if (m != n) return false;
    if (m == 0) continue;
    const Scalar ids = cat.identity_coords(s)[0];
    Matrix pairing(m, m);
    for (int k = 0; k < m; ++k)
      for (int l = 0; l < m; ++l) {
        const Morphism c = compose(cat, basis_morphism(cat, x, s, e, k), basis_morphism(cat, s, x, e, l));
        pairing(k, l) = f.div(c.coords[0], ids);
      }
    const auto pinv = inverse(f, pairing);
    if (!pinv) return false;
    for (int l = 0; l < m; ++l) {
      Morphism dual = zero_morphism(cat, x, s, e);
      for (int j = 0; j < m; ++j)
        dual = add(cat, dual, scale(cat, basis_morphism(cat, x, s, e, j), (*pinv)(l, j)));
      sum = add(cat, sum, compose(cat, basis_morphism(cat, s, x, e, l), dual));
    }
  }
  return sum == identity_morphism(cat, x);
}

}  // namespace

const Morphism& SimpleOrbit::f(int i, int a) const {
  return spanning.at(static_cast<size_t>(i) * spec.tau.source().order() + a);
}

SimpleOrbit analyze_simple(const GradedCategory& cat, int s, const SearchOptions& opts) {
  if (s < 0 || s >= cat.object_count()) fail("object index out of range");
  if (!is_simple(cat, s)) fail("object " + num(s) + " is not simple");
  const FiniteGroup& H = cat.H();
  const PrimeField& fld = cat.field();
  const int e = H.identity();

  std::vector<int> shift_of(H.order());
  std::vector<int> stab;
  for (int a = 0; a < H.order(); ++a) {
    const auto sh = find_shift(cat, s, a, opts);
    if (!sh) fail("object " + num(s) + " has no shift by " + num(a));
    shift_of[a] = sh->object;
    if (sh->object == s || find_invertible(cat, sh->object, s, e, opts)) stab.push_back(a);
  }
  Subgroup L = Subgroup::from_elements(H, stab);
  const CosetSpace sp(L);
  const int n = sp.size();

  SimpleOrbit orbit{s, MtauSpec::trivial(cat.tau(), fld, Subgroup::trivial(H), cat.degree(s)), {}, {}};
  for (int i = 0; i < n; ++i) orbit.objects.push_back(shift_of[sp.rep(i)]);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < H.order(); ++a) {
      const int x = orbit.objects[i];
      const int y = orbit.objects[sp.act(a, i)];
      if (a == e) {
        orbit.spanning.push_back(identity_morphism(cat, x));
        continue;
      }
      if (cat.rank(x, y, a) != 1)
        fail("Hom^" + num(a) + "(" + num(x) + "," + num(y) + ") is not one-dimensional");
      Morphism b = basis_morphism(cat, x, y, a, 0);
      if (!invert(cat, b))
        fail("Hom^" + num(a) + "(" + num(x) + "," + num(y) + ") has no isomorphism");
      orbit.spanning.push_back(std::move(b));
    }

  Cochain2 psi(sp, fld);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < H.order(); ++a)
      for (int b = 0; b < H.order(); ++b) {
        const Morphism c = compose(cat, orbit.f(sp.act(b, i), a), orbit.f(i, b));
        const Morphism& target = orbit.f(i, H.mul(a, b));
        const Scalar lambda = fld.div(c.coords[0], target.coords[0]);
        if (lambda == 0) fail("f^a o f^b vanishes at a=" + num(a) + " b=" + num(b));
        psi.set({a, b}, i, fld.inv(lambda));
      }
  orbit.spec = MtauSpec::make(cat.tau(), fld, std::move(L), std::move(psi), cat.degree(s));
  return orbit;
}

LinearCensus linear_semisimple_check(const GradedCategory& cat, const SearchOptions& opts) {
  LinearCensus out;
  const int e = cat.H().identity();
  std::vector<int> simples;
  for (int x = 0; x < cat.object_count(); ++x)
    if (is_simple(cat, x)) simples.push_back(x);
  out.classes = group_by(simples, [&](int x, int y) {
    return cat.degree(x) == cat.degree(y) && find_invertible(cat, x, y, e, opts).has_value();
  });
  std::vector<int> reps;
  for (const auto& c : out.classes) reps.push_back(c.front());
  for (size_t i = 0; i < reps.size() && out.semisimple; ++i)
    for (size_t j = i + 1; j < reps.size(); ++j)
      if (!are_disjoint_deg1(cat, reps[i], reps[j])) {
        out.semisimple = false;
        out.obstruction = Violation{"not_disjoint", {reps[i], reps[j]},
                                    "non-isomorphic simples with a nonzero degree-1 hom"};
        break;
      }
  if (!out.semisimple) return out;
  for (int x = 0; x < cat.object_count(); ++x) {
    if (is_simple(cat, x)) continue;
    if (!decomposes(cat, x, reps)) {
      out.semisimple = false;
      out.obstruction = Violation{"not_a_sum", {x}, "object is not a direct sum of simples"};
      break;
    }
  }
  return out;
}

std::vector<MtauSpec> DecompositionReport::summands() const {
  std::vector<MtauSpec> out;
  for (const auto& o : orbits) out.push_back(o.spec);
  return out;
}

DecompositionReport decompose(const GradedCategory& cat, const SearchOptions& opts) {
  DecompositionReport rep;
  const FiniteGroup& H = cat.H();
  std::vector<int> simples;
  for (int x = 0; x < cat.object_count(); ++x)
    if (is_simple(cat, x)) simples.push_back(x);
  rep.members = group_by(simples, [&](int x, int y) {
    for (int a = 0; a < H.order(); ++a)
      if (cat.rank(x, y, a) > 0 && find_invertible(cat, x, y, a, opts)) return true;
    return false;
  });

  auto reject = [&](Violation v) {
    if (!rep.obstruction) rep.obstruction = std::move(v);
  };
  for (const auto& m : rep.members) {
    try {
      rep.orbits.push_back(analyze_simple(cat, m.front(), opts));
    } catch (const Error& err) {
      reject({"orbit", {m.front()}, err.what()});
    }
  }
  if (rep.obstruction) {
    rep.orbits.clear();
    return rep;
  }

  // Every member is isomorphic in degree 1 to one of the orbit's S_i.
  const int e = H.identity();
  std::vector<int> classes;
  for (size_t k = 0; k < rep.orbits.size(); ++k) {
    const auto& o = rep.orbits[k];
    for (int x : rep.members[k]) {
      bool found = false;
      for (int si : o.objects)
        if (si == x || (cat.degree(si) == cat.degree(x) && find_invertible(cat, si, x, e, opts))) {
          found = true;
          break;
        }
      if (!found) reject({"orbit_member", {x}, "simple not isomorphic to any shift of its orbit"});
    }
    classes.insert(classes.end(), o.objects.begin(), o.objects.end());
  }
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = i + 1; j < classes.size(); ++j)
      if (!are_disjoint_deg1(cat, classes[i], classes[j]))
        reject({"not_disjoint", {classes[i], classes[j]}, "non-isomorphic simples with a nonzero degree-1 hom"});
  if (!rep.obstruction)
    for (int x = 0; x < cat.object_count(); ++x)
      if (!is_simple(cat, x) && !decomposes(cat, x, classes)) {
        reject({"not_a_sum", {x}, "object is not a direct sum of simples"});
        break;
      }

  if (!rep.orbits.empty()) {
    std::vector<CategoryPtr> parts;
    for (const auto& o : rep.orbits) parts.push_back(std::make_shared<const GradedCategory>(build_skeleton(o.spec)));
    auto source = std::make_shared<const GradedCategory>(direct_sum_cat(parts));
    auto target = std::make_shared<const GradedCategory>(cat);
    FunctorData w{source, target, {}, {}};
    for (const auto& o : rep.orbits) {
      const int off = static_cast<int>(w.object_map.size());
      const CosetSpace& sp = o.spec.space();
      for (int i = 0; i < sp.size(); ++i) w.object_map.push_back(o.objects[i]);
      for (int i = 0; i < sp.size(); ++i)
        for (int a = 0; a < H.order(); ++a) {
          const Morphism& fm = o.f(i, a);
          Matrix m(static_cast<int>(fm.coords.size()), 1);
          for (size_t k = 0; k < fm.coords.size(); ++k) m(static_cast<int>(k), 0) = fm.coords[k];
          w.hom_maps[{off + i, off + sp.act(a, i), a}] = std::move(m);
        }
    }
    const Verdict vf = verify_functor(w);
    if (!vf.ok()) reject(vf.violations.front());
    const Verdict vff = verify_fully_faithful(w);
    if (!vff.ok()) reject(vff.violations.front());
    rep.witness = std::move(w);
  }
  rep.semisimple = !rep.obstruction.has_value();
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<std::string> datum_problem(const MtauSpec& a, const MtauSpec& b, const EquivalenceDatum& d) {
  const FiniteGroup& H = a.tau.source();
  const FiniteGroup& G = a.tau.target();
  if (!(a.tau == b.tau) || !(a.field == b.field)) return "specs differ in tau or field";
  if (!H.contains(d.t)) return "t is not an element of H";
  if (a.tau(d.t) != G.mul(a.g, G.inv(b.g))) return "tau(t) != g g'^{-1}";
  if (!(a.L == b.L.conjugate(d.t))) return "L != t L' t^{-1}";
  if (!(d.gamma.space() == a.space()) || !(d.gamma.field() == a.field)) return "gamma lives on the wrong cosets";
  if (!d.gamma.is_normalized()) return "gamma is not normalized";
  if (!(a.psi == translate(b.psi, d.t) * d1(d.gamma))) return "psi != psi'^t d(gamma)";
  return std::nullopt;
}

}  // namespace

bool is_valid_datum(const MtauSpec& a, const MtauSpec& b, const EquivalenceDatum& d) {
  return !datum_problem(a, b, d);
}

EquivalenceDatum make_datum(const MtauSpec& a, const MtauSpec& b, int t, Cochain1 gamma) {
  EquivalenceDatum d{t, std::move(gamma)};
  if (auto p = datum_problem(a, b, d)) fail("invalid equivalence datum: " + *p);
  return d;
}

std::vector<EquivalenceDatum> classify_equivalences(const MtauSpec& a, const MtauSpec& b,
                                                    std::uint64_t cap) {
  std::vector<EquivalenceDatum> out;
  if (!(a.tau == b.tau) || !(a.field == b.field)) return out;
  const FiniteGroup& G = a.tau.target();
  const CosetSpace& sa = a.space();
  const CosetSpace& sb = b.space();
  const PrimeField& f = a.field;

  // Exponent images of d(e_j) generate the coboundaries B^1.
  std::vector<ModVector> bgens;
  for (int j = 0; j < sa.size(); ++j) {
    ModVector ej(sa.size(), 0);
    ej[j] = 1;
    bgens.push_back(exponents(d0(cochain0_from_exponents(sa, f, ej))));
  }
  const int dim = (a.tau.source().order() - 1) * sa.size();
  const HowellBasis coboundaries(f.unit_order(), dim, bgens);

  std::set<int> seen;
  for (int t : preimage(a.tau, G.mul(a.g, G.inv(b.g)))) {
    if (!seen.insert(sb.coset_of(t)).second) continue;
    if (!(a.L == b.L.conjugate(t))) continue;
    const Cochain2 target = a.psi * translate(b.psi, t).inverse();
    const auto sol = solve_d1(target);
    if (!sol) continue;
    for (const ModVector& r : enumerate_classes(exponents(sol->particular()), sol->kernel(), coboundaries, cap))
      out.push_back(make_datum(a, b, t, cochain1_from_exponents(sa, f, r)));
  }
  return out;
}

FunctorData realize_functor(const MtauSpec& a, const MtauSpec& b, const EquivalenceDatum& d,
                            CategoryPtr source, CategoryPtr target) {
  if (auto p = datum_problem(a, b, d)) fail("invalid equivalence datum: " + *p);
  if (!source) source = std::make_shared<const GradedCategory>(build_skeleton(a));
  if (!target) target = std::make_shared<const GradedCategory>(build_skeleton(b));
  const CosetSpace& sa = a.space();
  const CosetSpace& sb = b.space();
  const FiniteGroup& H = a.tau.source();
  FunctorData out{source, target, {}, {}};
  for (int i = 0; i < sa.size(); ++i) out.object_map.push_back(sb.coset_of(H.mul(sa.rep(i), d.t)));
  for (int i = 0; i < sa.size(); ++i)
    for (int x = 0; x < H.order(); ++x) {
      Matrix m(1, 1);
      m(0, 0) = d.gamma.value({x}, i);
      out.hom_maps[{i, sa.act(x, i), x}] = m;
    }
  return out;
}

EquivalenceDatum compose_data(const MtauSpec& a, const MtauSpec& b, const MtauSpec& c,
                              const EquivalenceDatum& ab, const EquivalenceDatum& bc) {
  if (auto p = datum_problem(a, b, ab)) fail("invalid equivalence datum: " + *p);
  if (auto p = datum_problem(b, c, bc)) fail("invalid equivalence datum: " + *p);
  return make_datum(a, c, a.tau.source().mul(ab.t, bc.t), ab.gamma * translate(bc.gamma, ab.t));
}

std::vector<NatIso> classify_nat_isos(const MtauSpec& a, const MtauSpec& b, const EquivalenceDatum& f,
                                      const EquivalenceDatum& g, std::uint64_t cap) {
  std::vector<NatIso> out;
  if (auto p = datum_problem(a, b, f)) fail("invalid equivalence datum: " + *p);
  if (auto p = datum_problem(a, b, g)) fail("invalid equivalence datum: " + *p);
  if (b.space().coset_of(f.t) != b.space().coset_of(g.t)) return out;
  const auto sol = solve_d0(f.gamma * g.gamma.inverse());
  if (!sol) return out;
  auto src = std::make_shared<const GradedCategory>(build_skeleton(a));
  auto dst = std::make_shared<const GradedCategory>(build_skeleton(b));
  const FunctorData ff = realize_functor(a, b, f, src, dst);
  const FunctorData gf = realize_functor(a, b, g, src, dst);
  for (Cochain0& eta : sol->enumerate(cap)) {
    NatTransData nat{ff, gf, {}};
    for (int i = 0; i < a.space().size(); ++i) {
      Morphism c = identity_morphism(*dst, ff.object_map[i]);
      c.coords[0] = a.field.mul(c.coords[0], eta.value({}, i));
      nat.components.push_back(std::move(c));
    }
    const Verdict v = verify_nat(nat);
    if (!v.ok()) fail("solved natural isomorphism fails naturality: " + v.violations.front().detail);
    out.push_back({std::move(eta), std::move(nat)});
  }
  return out;
}

}  // namespace taucat
