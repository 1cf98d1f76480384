#include "taucat/modcat.hpp"

#include <memory>
#include <string>

#include "taucat/error.hpp"

namespace taucat {

namespace {

Morphism must_invert(const GradedCategory& cat, const Morphism& f, const char* what) {
  auto inv = invert(cat, f);
  if (!inv) fail(std::string(what) + " is not invertible");
  return std::move(*inv);
}

Matrix column_matrix(int rows, const std::vector<std::vector<Scalar>>& cols) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < rows; ++r) m(r, static_cast<int>(c)) = cols[c][r];
  return m;
}

void append(Verdict& into, const Verdict& from, const std::string& prefix) {
  for (const auto& v : from.violations) into.violations.push_back({prefix + v.kind, v.where, v.detail});
}

}  // namespace

const Morphism& ModuleCat::mu_at(int a, int b, int x) const {
  return mu.at((static_cast<size_t>(a) * order() + b) * objects() + x);
}

NatTransData ModuleCat::epsilon_nat() const {
  return {identity_functor(base), action.at(base->H().identity()), epsilon};
}

NatTransData ModuleCat::mu_nat(int a, int b) const {
  NatTransData n{compose_functors(action.at(a), action.at(b)), action.at(base->H().mul(a, b)), {}};
  for (int x = 0; x < objects(); ++x) n.components.push_back(mu_at(a, b, x));
  return n;
}

Verdict verify_module(const ModuleCat& m) {
  Verdict v;
  const GradedCategory& c = *m.base;
  const FiniteGroup& H = c.H();
  const int n = m.objects();
  const int e = H.identity();
  if (static_cast<int>(m.action.size()) != H.order() || static_cast<int>(m.epsilon.size()) != n ||
      m.mu.size() != static_cast<size_t>(H.order()) * H.order() * n) {
    v.violations.push_back({"shape", {}, "action, epsilon or mu has the wrong size"});
    return v;
  }
  for (int h = 0; h < H.order(); ++h) {
    const FunctorData& a = m.action[h];
    if (a.source != m.base || a.target != m.base) {
      v.violations.push_back({"action", {h}, "alpha^h is not an endofunctor of the base"});
      continue;
    }
    append(v, verify_functor(a, {.check_object_degrees = false}), "action_");
    append(v, verify_fully_faithful(a), "action_");
    append(v, verify_essentially_surjective(a), "action_");
  }
  if (!v.ok()) return v;

  append(v, verify_nat(m.epsilon_nat()), "epsilon_");
  for (int x = 0; x < n; ++x)
    if (!invert(c, m.epsilon[x])) v.violations.push_back({"epsilon_invertible", {x}, "epsilon_X is not invertible"});
  for (int a = 0; a < H.order(); ++a)
    for (int b = 0; b < H.order(); ++b) {
      append(v, verify_nat(m.mu_nat(a, b)), "mu_");
      for (int x = 0; x < n; ++x)
        if (!invert(c, m.mu_at(a, b, x)))
          v.violations.push_back({"mu_invertible", {a, b, x}, "mu_{a,b,X} is not invertible"});
    }
  if (!v.ok()) return v;

  for (int h = 0; h < H.order(); ++h)
    for (int x = 0; x < n; ++x) {
      const int hx = m.act(h, x);
      const Morphism id = identity_morphism(c, hx);
      if (!(compose(c, m.mu_at(e, h, x), m.epsilon[hx]) == id))
        v.violations.push_back({"left_unit", {h, x}, "mu_{1,h} o epsilon alpha^h != id"});
      if (!(compose(c, m.mu_at(h, e, x), m.action[h].apply(m.epsilon[x])) == id))
        v.violations.push_back({"right_unit", {h, x}, "mu_{h,1} o alpha^h epsilon != id"});
    }
  for (int a = 0; a < H.order(); ++a)
    for (int b = 0; b < H.order(); ++b)
      for (int cc = 0; cc < H.order(); ++cc)
        for (int x = 0; x < n; ++x) {
          const Morphism lhs = compose(c, m.mu_at(H.mul(a, b), cc, x), m.mu_at(a, b, m.act(cc, x)));
          const Morphism rhs = compose(c, m.mu_at(a, H.mul(b, cc), x), m.action[a].apply(m.mu_at(b, cc, x)));
          if (!(lhs == rhs)) v.violations.push_back({"associativity", {a, b, cc, x}, "mu coherence square fails"});
        }
  return v;
}

Verdict check_tau_module(const ModuleCat& m) {
  Verdict v;
  const GradedCategory& c = *m.base;
  for (int h = 0; h < m.order(); ++h)
    for (int x = 0; x < m.objects(); ++x)
      if (c.degree(m.act(h, x)) != c.G().mul(c.tau()(h), c.degree(x)))
        v.violations.push_back({"degree", {h, x}, "|alpha^h X| != tau(h)|X|"});
  return v;
}

ModuleCat extract_action(const GradedCategory& cat, const ShiftSystem& shifts) {
  const FiniteGroup& H = cat.H();
  const int n = cat.object_count();
  const int e = H.identity();
  if (shifts.objects() != n || shifts.group_order() != H.order()) fail("shift system does not fit the category");
  ModuleCat m;
  m.base = std::make_shared<const GradedCategory>(degree_one_part(cat));
  std::vector<Morphism> rinv;
  for (int x = 0; x < n; ++x)
    for (int h = 0; h < H.order(); ++h) {
      const Shift& s = shifts.at(x, h);
      if (s.iso.src != x || s.iso.dst != s.object || s.iso.degree != h) fail("shift iso has the wrong type");
      rinv.push_back(must_invert(cat, s.iso, "shift iso"));
    }
  auto r = [&](int x, int h) -> const Morphism& { return shifts.at(x, h).iso; };
  auto ri = [&](int x, int h) -> const Morphism& { return rinv[static_cast<size_t>(x) * H.order() + h]; };

  for (int h = 0; h < H.order(); ++h) {
    FunctorData a{m.base, m.base, {}, {}};
    for (int x = 0; x < n; ++x) a.object_map.push_back(shifts.at(x, h).object);
    for (int x = 0; x < n; ++x)
      for (const auto& [y, d] : m.base->out_homs(x)) {
        std::vector<std::vector<Scalar>> cols;
        for (int k = 0; k < m.base->rank(x, y, d); ++k)
          cols.push_back(compose(cat, r(y, h), compose(cat, basis_morphism(cat, x, y, d, k), ri(x, h))).coords);
        a.hom_maps[{x, y, d}] = column_matrix(cat.rank(a.object_map[x], a.object_map[y], e), cols);
      }
    m.action.push_back(std::move(a));
  }
  for (int x = 0; x < n; ++x) m.epsilon.push_back(r(x, e));
  for (int a = 0; a < H.order(); ++a)
    for (int b = 0; b < H.order(); ++b)
      for (int x = 0; x < n; ++x) {
        const int xb = shifts.at(x, b).object;
        m.mu.push_back(compose(cat, r(x, H.mul(a, b)), compose(cat, ri(x, b), ri(xb, a))));
      }
  return m;
}

GradedCategory bullet(const ModuleCat& m) {
  const GradedCategory& c = *m.base;
  const FiniteGroup& H = c.H();
  const int n = m.objects();
  const int e = H.identity();
  GradedCategory out(c.tau(), c.field());
  for (int x = 0; x < n; ++x) out.add_object(c.degree(x));
  for (int x = 0; x < n; ++x)
    for (int h = 0; h < H.order(); ++h)
      for (int y = 0; y < n; ++y) {
        const int r = c.rank(m.act(h, x), y, e);
        if (r) out.set_rank(x, y, h, r);
      }
  std::vector<Morphism> mu_inv;
  for (const Morphism& mu : m.mu) mu_inv.push_back(must_invert(c, mu, "mu component"));
  for (int x = 0; x < n; ++x)
    for (int h = 0; h < H.order(); ++h)
      for (int y = 0; y < n; ++y) {
        const int r1 = out.rank(x, y, h);
        if (!r1) continue;
        for (int h2 = 0; h2 < H.order(); ++h2)
          for (int z = 0; z < n; ++z) {
            const int r2 = out.rank(y, z, h2);
            const int h3 = H.mul(h2, h);
            const int r3 = out.rank(x, z, h3);
            if (!r2 || !r3) continue;
            const Morphism& mi = mu_inv[(static_cast<size_t>(h2) * H.order() + h) * n + x];
            std::vector<Scalar> t(static_cast<size_t>(r1) * r2 * r3, 0);
            for (int i = 0; i < r1; ++i) {
              const Morphism moved = compose(c, m.action[h2].apply(basis_morphism(c, m.act(h, x), y, e, i)), mi);
              for (int j = 0; j < r2; ++j) {
                const Morphism w = compose(c, basis_morphism(c, m.act(h2, y), z, e, j), moved);
                for (int k = 0; k < r3; ++k) t[(static_cast<size_t>(k) * r2 + j) * r1 + i] = w.coords[k];
              }
            }
            out.set_composition(x, y, z, h, h2, std::move(t));
          }
      }
  for (int x = 0; x < n; ++x) out.set_identity(x, must_invert(c, m.epsilon[x], "epsilon component").coords);
  return out;
}

ShiftSystem bullet_shifts(const ModuleCat& m, const GradedCategory& bulleted) {
  std::vector<Shift> all;
  for (int x = 0; x < m.objects(); ++x)
    for (int a = 0; a < m.order(); ++a) {
      const int ax = m.act(a, x);
      all.push_back({ax, Morphism{x, ax, a, m.base->identity_coords(ax)}});
      if (static_cast<int>(all.back().iso.coords.size()) != bulleted.rank(x, ax, a))
        fail("bulleted category does not match the module category");
    }
  return ShiftSystem(m.objects(), m.order(), std::move(all));
}

// ---------------------------------------------------------------------------

Verdict verify_module_functor(const ModuleCat& src, const ModuleCat& dst, const ModuleFunctor& mf) {
  Verdict v;
  const FunctorData& F = mf.F;
  const GradedCategory& d = *dst.base;
  const FiniteGroup& H = d.H();
  const int n = src.objects();
  const int e = H.identity();
  if (F.source != src.base || F.target != dst.base) {
    v.violations.push_back({"endpoints", {}, "functor does not run between the module bases"});
    return v;
  }
  append(v, verify_functor(F), "functor_");
  if (mf.s.size() != static_cast<size_t>(H.order()) * n) {
    v.violations.push_back({"shape", {}, "s has the wrong number of components"});
    return v;
  }
  if (!v.ok()) return v;
  auto s = [&](int h, int x) -> const Morphism& { return mf.s[static_cast<size_t>(h) * n + x]; };
  for (int h = 0; h < H.order(); ++h) {
    NatTransData nt{compose_functors(dst.action[h], F), compose_functors(F, src.action[h]), {}};
    for (int x = 0; x < n; ++x) nt.components.push_back(s(h, x));
    append(v, verify_nat(nt), "s_");
    for (int x = 0; x < n; ++x)
      if (!invert(d, s(h, x))) v.violations.push_back({"s_invertible", {h, x}, "s^h_X is not invertible"});
  }
  if (!v.ok()) return v;
  for (int x = 0; x < n; ++x) {
    const int fx = F.object_map[x];
    if (!(compose(d, s(e, x), dst.epsilon[fx]) == F.apply(src.epsilon[x])))
      v.violations.push_back({"unit", {x}, "s^1 o epsilon^beta F != F epsilon^alpha"});
  }
  for (int a = 0; a < H.order(); ++a)
    for (int b = 0; b < H.order(); ++b)
      for (int x = 0; x < n; ++x) {
        const int fx = F.object_map[x];
        const Morphism lhs =
            compose(d, F.apply(src.mu_at(a, b, x)), compose(d, s(a, src.act(b, x)), dst.action[a].apply(s(b, x))));
        const Morphism rhs = compose(d, s(H.mul(a, b), x), dst.mu_at(a, b, fx));
        if (!(lhs == rhs)) v.violations.push_back({"hexagon", {a, b, x}, "module functor hexagon fails"});
      }
  return v;
}

ModuleFunctor identity_module_functor(const ModuleCat& m) {
  ModuleFunctor out{identity_functor(m.base), {}};
  for (int h = 0; h < m.order(); ++h)
    for (int x = 0; x < m.objects(); ++x) out.s.push_back(identity_morphism(*m.base, m.act(h, x)));
  return out;
}

ModuleFunctor compose_module_functors(const ModuleFunctor& outer, const ModuleFunctor& inner) {
  const GradedCategory& t = *outer.F.target;
  const int n = inner.F.source->object_count();
  const int order = t.H().order();
  const int mid = inner.F.target->object_count();
  ModuleFunctor out{compose_functors(outer.F, inner.F), {}};
  for (int h = 0; h < order; ++h)
    for (int x = 0; x < n; ++x) {
      const Morphism& s = inner.s.at(static_cast<size_t>(h) * n + x);
      const Morphism& r = outer.s.at(static_cast<size_t>(h) * mid + inner.F.object_map[x]);
      out.s.push_back(compose(t, outer.F.apply(s), r));
    }
  return out;
}

ModuleFunctor extract_functor(const FunctorData& F, const ShiftSystem& src_shifts, const ShiftSystem& dst_shifts,
                              const ModuleCat& src, const ModuleCat& dst) {
  const GradedCategory& d = *F.target;
  const int e = d.H().identity();
  ModuleFunctor out{FunctorData{src.base, dst.base, F.object_map, {}}, {}};
  for (const auto& [key, mat] : F.hom_maps)
    if (key[2] == e) out.F.hom_maps[key] = mat;
  for (int h = 0; h < src.order(); ++h)
    for (int x = 0; x < src.objects(); ++x) {
      const Morphism rinv = must_invert(d, dst_shifts.at(F.object_map[x], h).iso, "shift iso");
      out.s.push_back(compose(d, F.apply(src_shifts.at(x, h).iso), rinv));
    }
  return out;
}

FunctorData bullet_functor(const ModuleCat& src, const ModuleCat& dst, const ModuleFunctor& mf, CategoryPtr bsrc,
                           CategoryPtr bdst) {
  const GradedCategory& c = *src.base;
  const GradedCategory& d = *dst.base;
  const int n = src.objects();
  const int e = c.H().identity();
  FunctorData out{bsrc, bdst, mf.F.object_map, {}};
  for (int x = 0; x < n; ++x)
    for (const auto& [y, h] : bsrc->out_homs(x)) {
      const Morphism& s = mf.s.at(static_cast<size_t>(h) * n + x);
      std::vector<std::vector<Scalar>> cols;
      for (int k = 0; k < bsrc->rank(x, y, h); ++k)
        cols.push_back(compose(d, mf.F.apply(basis_morphism(c, src.act(h, x), y, e, k)), s).coords);
      out.hom_maps[{x, y, h}] = column_matrix(bdst->rank(out.object_map[x], out.object_map[y], h), cols);
    }
  return out;
}

Verdict verify_module_nat(const ModuleCat& src, const ModuleCat& dst, const ModuleFunctor& E,
                          const ModuleFunctor& F, const std::vector<Morphism>& eta) {
  Verdict v;
  const GradedCategory& d = *dst.base;
  const int n = src.objects();
  append(v, verify_nat({E.F, F.F, eta}), "nat_");
  if (!v.ok()) return v;
  for (int h = 0; h < src.order(); ++h)
    for (int x = 0; x < n; ++x) {
      const Morphism lhs = compose(d, eta[src.act(h, x)], E.s.at(static_cast<size_t>(h) * n + x));
      const Morphism rhs = compose(d, F.s.at(static_cast<size_t>(h) * n + x), dst.action[h].apply(eta[x]));
      if (!(lhs == rhs)) v.violations.push_back({"module_square", {h, x}, "eta alpha^h o r^h != s^h o beta^h eta"});
    }
  return v;
}

NatTransData bullet_nat(const ModuleCat& src, const ModuleCat& dst, const ModuleFunctor& E, const ModuleFunctor& F,
                        const std::vector<Morphism>& eta, CategoryPtr bsrc, CategoryPtr bdst) {
  const GradedCategory& d = *dst.base;
  NatTransData out{bullet_functor(src, dst, E, bsrc, bdst), bullet_functor(src, dst, F, bsrc, bdst), {}};
  for (int x = 0; x < src.objects(); ++x) {
    const int ex = E.F.object_map[x];
    const Morphism c = compose(d, eta.at(x), must_invert(d, dst.epsilon[ex], "epsilon component"));
    out.components.push_back(Morphism{ex, F.F.object_map[x], c.degree, c.coords});
  }
  return out;
}

Verdict verify_strict_inverse(const FunctorData& f, const FunctorData& g) {
  Verdict v;
  auto check = [&](const FunctorData& first, const FunctorData& second, const char* name) {
    const FunctorData c = compose_functors(second, first);
    const GradedCategory& s = *first.source;
    for (int x = 0; x < s.object_count(); ++x)
      if (c.object_map[x] != x) v.violations.push_back({name, {x}, "object is not fixed"});
    for (int x = 0; x < s.object_count(); ++x)
      for (const auto& [y, h] : s.out_homs(x))
        if (!(c.hom_map(x, y, h) == Matrix::identity(s.rank(x, y, h))))
          v.violations.push_back({name, {x, y, h}, "hom map is not the identity"});
  };
  check(f, g, "inverse_after");
  check(g, f, "inverse_before");
  return v;
}

NuRoundTrip roundtrip_nu(const ModuleCat& m) {
  const GradedCategory& c = *m.base;
  const int n = m.objects();
  const int e = c.H().identity();
  auto b = std::make_shared<const GradedCategory>(bullet(m));
  const ShiftSystem shifts = bullet_shifts(m, *b);
  NuRoundTrip out{b, extract_action(*b, shifts), {}, {}, {}};
  const CategoryPtr& rb = out.restricted.base;
  std::vector<int> ids(n);
  for (int x = 0; x < n; ++x) ids[x] = x;
  FunctorData nu{rb, m.base, ids, {}};
  FunctorData inv{m.base, rb, ids, {}};
  std::vector<Morphism> eps_inv;
  for (int x = 0; x < n; ++x) eps_inv.push_back(must_invert(c, m.epsilon[x], "epsilon component"));
  for (int x = 0; x < n; ++x) {
    for (const auto& [y, h] : rb->out_homs(x)) {
      std::vector<std::vector<Scalar>> cols;
      for (int k = 0; k < rb->rank(x, y, h); ++k)
        cols.push_back(compose(c, basis_morphism(c, m.act(e, x), y, e, k), m.epsilon[x]).coords);
      nu.hom_maps[{x, y, h}] = column_matrix(c.rank(x, y, e), cols);
    }
    for (const auto& [y, h] : c.out_homs(x)) {
      std::vector<std::vector<Scalar>> cols;
      for (int k = 0; k < c.rank(x, y, h); ++k)
        cols.push_back(compose(c, basis_morphism(c, x, y, e, k), eps_inv[x]).coords);
      inv.hom_maps[{x, y, h}] = column_matrix(rb->rank(x, y, e), cols);
    }
  }
  out.nu.F = std::move(nu);
  for (int h = 0; h < m.order(); ++h)
    for (int x = 0; x < n; ++x) out.nu.s.push_back(identity_morphism(c, m.act(h, x)));
  out.inverse = std::move(inv);
  append(out.verdict, verify_module(out.restricted), "restricted_");
  append(out.verdict, verify_module_functor(out.restricted, m, out.nu), "nu_");
  append(out.verdict, verify_functor(out.inverse), "inverse_");
  append(out.verdict, verify_strict_inverse(out.nu.F, out.inverse), "");
  return out;
}

EtaRoundTrip roundtrip_eta(const CategoryPtr& cat, const ShiftSystem& shifts) {
  const GradedCategory& c = *cat;
  const int n = c.object_count();
  const int e = c.H().identity();
  EtaRoundTrip out{extract_action(c, shifts), nullptr, {}, {}, {}};
  out.bulleted = std::make_shared<const GradedCategory>(bullet(out.restricted));
  const GradedCategory& b = *out.bulleted;
  std::vector<int> ids(n);
  for (int x = 0; x < n; ++x) ids[x] = x;
  FunctorData eta{out.bulleted, cat, ids, {}};
  FunctorData inv{cat, out.bulleted, ids, {}};
  for (int x = 0; x < n; ++x) {
    for (const auto& [y, h] : b.out_homs(x)) {
      const Shift& s = shifts.at(x, h);
      std::vector<std::vector<Scalar>> cols;
      for (int k = 0; k < b.rank(x, y, h); ++k)
        cols.push_back(compose(c, basis_morphism(c, s.object, y, e, k), s.iso).coords);
      eta.hom_maps[{x, y, h}] = column_matrix(c.rank(x, y, h), cols);
    }
    for (const auto& [y, h] : c.out_homs(x)) {
      const Shift& s = shifts.at(x, h);
      const Morphism rinv = must_invert(c, s.iso, "shift iso");
      std::vector<std::vector<Scalar>> cols;
      for (int k = 0; k < c.rank(x, y, h); ++k) cols.push_back(compose(c, basis_morphism(c, x, y, h, k), rinv).coords);
      inv.hom_maps[{x, y, h}] = column_matrix(b.rank(x, y, h), cols);
    }
  }
  out.eta = std::move(eta);
  out.inverse = std::move(inv);
  append(out.verdict, verify_module(out.restricted), "restricted_");
  append(out.verdict, verify_axioms(b), "bulleted_");
  append(out.verdict, verify_functor(out.eta), "eta_");
  append(out.verdict, verify_functor(out.inverse), "inverse_");
  append(out.verdict, verify_strict_inverse(out.eta, out.inverse), "");
  return out;
}

}  // namespace taucat
