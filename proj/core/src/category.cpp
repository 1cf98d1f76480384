#include "taucat/category.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "taucat/error.hpp"

namespace taucat {

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

GradedCategory::GradedCategory(GroupHom tau, PrimeField field)
    : tau_(std::move(tau)), field_(std::move(field)) {}

size_t GradedCategory::slot(int src, int dst, int h) const {
  const int n = object_count();
  if (src < 0 || src >= n || dst < 0 || dst >= n) fail("object index out of range");
  if (!H().contains(h)) fail("degree out of range");
  return (static_cast<size_t>(src) * n + dst) * H().order() + h;
}

int GradedCategory::add_object(int degree) {
  if (!G().contains(degree)) fail("object degree out of range");
  const int n = object_count();
  const int order = H().order();
  std::vector<int> ranks(static_cast<size_t>(n + 1) * (n + 1) * order, 0);
  for (int s = 0; s < n; ++s)
    for (int d = 0; d < n; ++d)
      for (int h = 0; h < order; ++h)
        ranks[(static_cast<size_t>(s) * (n + 1) + d) * order + h] =
            ranks_[(static_cast<size_t>(s) * n + d) * order + h];
  ranks_ = std::move(ranks);
  degrees_.push_back(degree);
  identities_.emplace_back();
  return n;
}

void GradedCategory::set_rank(int src, int dst, int h, int r) {
  if (r < 0) fail("negative hom rank");
  ranks_[slot(src, dst, h)] = r;
  for (auto it = compose_.begin(); it != compose_.end();) {
    const auto& [s, m, d, h1, h2] = it->first;
    const bool touches = (s == src && m == dst && h1 == h) || (m == src && d == dst && h2 == h) ||
                         (s == src && d == dst && tau_.source().mul(h2, h1) == h);
    it = touches ? compose_.erase(it) : std::next(it);
  }
  if (src == dst && h == H().identity()) identities_[src].clear();
}

void GradedCategory::set_composition(int src, int mid, int dst, int h, int h2,
                                     std::vector<Scalar> tensor) {
  const int r1 = rank(src, mid, h), r2 = rank(mid, dst, h2);
  const int r3 = rank(src, dst, H().mul(h2, h));
  const size_t expect = static_cast<size_t>(r1) * r2 * r3;
  if (tensor.size() != expect)
    fail("composition tensor for src=" + std::to_string(src) + " mid=" + std::to_string(mid) +
         " dst=" + std::to_string(dst) + " h=" + std::to_string(h) + " h2=" + std::to_string(h2) +
         " has " + std::to_string(tensor.size()) + " entries, expected " + std::to_string(expect));
  bool zero = true;
  for (Scalar& v : tensor) {
    v %= field_.p();
    zero = zero && v == 0;
  }
  const std::array<int, 5> key{src, mid, dst, h, h2};
  if (zero)
    compose_.erase(key);
  else
    compose_[key] = std::move(tensor);
}

const std::vector<Scalar>* GradedCategory::composition(int src, int mid, int dst, int h,
                                                       int h2) const {
  const auto it = compose_.find({src, mid, dst, h, h2});
  return it == compose_.end() ? nullptr : &it->second;
}

void GradedCategory::set_identity(int x, std::vector<Scalar> coords) {
  if (static_cast<int>(coords.size()) != rank(x, x, H().identity()))
    fail("identity of object " + std::to_string(x) + " has wrong length");
  for (Scalar& v : coords) v %= field_.p();
  identities_.at(x) = std::move(coords);
}

std::vector<GradedCategory::HomKey> GradedCategory::out_homs(int src) const {
  std::vector<HomKey> out;
  for (int d = 0; d < object_count(); ++d)
    for (int h = 0; h < H().order(); ++h)
      if (rank(src, d, h) > 0) out.push_back({d, h});
  return out;
}

bool operator==(const GradedCategory& x, const GradedCategory& y) {
  return x.tau_ == y.tau_ && x.field_ == y.field_ && x.degrees_ == y.degrees_ &&
         x.ranks_ == y.ranks_ && x.compose_ == y.compose_ && x.identities_ == y.identities_;
}

// ---------------------------------------------------------------------------

bool Morphism::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](Scalar v) { return v == 0; });
}

Morphism identity_morphism(const GradedCategory& cat, int x) {
  return {x, x, cat.H().identity(), cat.identity_coords(x)};
}

Morphism zero_morphism(const GradedCategory& cat, int src, int dst, int h) {
  return {src, dst, h, std::vector<Scalar>(cat.rank(src, dst, h), 0)};
}

Morphism basis_morphism(const GradedCategory& cat, int src, int dst, int h, int k) {
  Morphism m = zero_morphism(cat, src, dst, h);
  m.coords.at(k) = 1;
  return m;
}

Morphism scale(const GradedCategory& cat, const Morphism& f, Scalar s) {
  Morphism out = f;
  for (Scalar& v : out.coords) v = cat.field().mul(v, s);
  return out;
}

Morphism add(const GradedCategory& cat, const Morphism& f, const Morphism& g) {
  if (f.src != g.src || f.dst != g.dst || f.degree != g.degree)
    fail("adding morphisms from different hom spaces");
  Morphism out = f;
  for (size_t k = 0; k < out.coords.size(); ++k)
    out.coords[k] = cat.field().add(f.coords[k], g.coords[k]);
  return out;
}

Morphism compose(const GradedCategory& cat, const Morphism& outer, const Morphism& inner) {
  if (inner.dst != outer.src)
    fail("morphisms are not composable: " + std::to_string(inner.dst) +
         " != " + std::to_string(outer.src));
  const int h = inner.degree, h2 = outer.degree;
  const int r1 = cat.rank(inner.src, inner.dst, h);
  const int r2 = cat.rank(outer.src, outer.dst, h2);
  if (static_cast<int>(inner.coords.size()) != r1 || static_cast<int>(outer.coords.size()) != r2)
    fail("morphism coordinates do not match hom rank");
  const int deg = cat.H().mul(h2, h);
  Morphism out = zero_morphism(cat, inner.src, outer.dst, deg);
  const auto* t = cat.composition(inner.src, inner.dst, outer.dst, h, h2);
  if (!t) return out;
  const PrimeField& f = cat.field();
  const int r3 = static_cast<int>(out.coords.size());
  for (int j = 0; j < r2; ++j) {
    if (outer.coords[j] == 0) continue;
    for (int i = 0; i < r1; ++i) {
      if (inner.coords[i] == 0) continue;
      const Scalar w = f.mul(outer.coords[j], inner.coords[i]);
      for (int k = 0; k < r3; ++k) {
        const Scalar c = (*t)[(static_cast<size_t>(k) * r2 + j) * r1 + i];
        if (c) out.coords[k] = f.add(out.coords[k], f.mul(c, w));
      }
    }
  }
  return out;
}

std::optional<Morphism> invert(const GradedCategory& cat, const Morphism& f) {
  const int x = f.src, y = f.dst;
  const int ainv = cat.H().inv(f.degree);
  const int s = cat.rank(y, x, ainv);
  const int rx = cat.rank(x, x, cat.H().identity());
  const int ry = cat.rank(y, y, cat.H().identity());
  Matrix a(rx + ry, s);
  std::vector<Scalar> rhs(rx + ry);
  for (int k = 0; k < s; ++k) {
    const Morphism b = basis_morphism(cat, y, x, ainv, k);
    const Morphism left = compose(cat, b, f);   // X -> X
    const Morphism right = compose(cat, f, b);  // Y -> Y
    for (int i = 0; i < rx; ++i) a(i, k) = left.coords[i];
    for (int i = 0; i < ry; ++i) a(rx + i, k) = right.coords[i];
  }
  const auto& idx = cat.identity_coords(x);
  const auto& idy = cat.identity_coords(y);
  if (static_cast<int>(idx.size()) != rx || static_cast<int>(idy.size()) != ry)
    fail("identity coordinates missing");
  for (int i = 0; i < rx; ++i) rhs[i] = idx[i];
  for (int i = 0; i < ry; ++i) rhs[rx + i] = idy[i];
  const auto sol = solve(cat.field(), a, rhs);
  if (!sol) return std::nullopt;
  return Morphism{y, x, ainv, *sol};
}

// ---------------------------------------------------------------------------

std::optional<Morphism> find_invertible(const GradedCategory& cat, int x, int y, int a,
                                        const SearchOptions& opts) {
  const int r = cat.rank(x, y, a);
  if (r == 0) return std::nullopt;
  Morphism m{x, y, a, std::vector<Scalar>(r, 0)};
  auto test = [&](const std::vector<Scalar>& v) {
    m.coords = v;
    return invert(cat, m).has_value();
  };
  for (int k = 0; k < r; ++k) {
    std::vector<Scalar> e(r, 0);
    e[k] = 1;
    if (test(e)) return m;
  }
  if (r == 1) return std::nullopt;
  const int p = cat.field().p();
  double total = 1;
  for (int k = 0; k < r; ++k) total *= p;
  const bool exhaustive = r <= 2 || total <= static_cast<double>(opts.exhaustive_limit);
  if (r > 2) {
    std::seed_seq seq{static_cast<std::uint32_t>(opts.seed),
                      static_cast<std::uint32_t>(opts.seed >> 32), static_cast<std::uint32_t>(x),
                      static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(a)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<Scalar> coord(0, static_cast<Scalar>(p - 1));
    std::vector<Scalar> v(r);
    for (int s = 0; s < opts.random_samples; ++s) {
      for (Scalar& c : v) c = coord(rng);
      if (test(v)) return m;
    }
  }
  if (exhaustive && for_each_projective(p, r, test)) return m;
  return std::nullopt;
}

std::optional<Shift> find_shift(const GradedCategory& cat, int x, int a,
                                const SearchOptions& opts) {
  if (a == cat.H().identity()) return Shift{x, identity_morphism(cat, x)};
  const int want = cat.G().mul(cat.tau()(a), cat.degree(x));
  for (int y = 0; y < cat.object_count(); ++y) {
    if (cat.degree(y) != want) continue;
    if (auto iso = find_invertible(cat, x, y, a, opts)) return Shift{y, std::move(*iso)};
  }
  return std::nullopt;
}

ShiftSystem::ShiftSystem(int objects, int group_order, std::vector<Shift> shifts)
    : objects_(objects), order_(group_order), shifts_(std::move(shifts)) {
  if (shifts_.size() != static_cast<size_t>(objects) * group_order)
    fail("shift system has the wrong number of entries");
}

std::optional<ShiftSystem> find_shifts(const GradedCategory& cat, const SearchOptions& opts) {
  std::vector<Shift> all;
  for (int x = 0; x < cat.object_count(); ++x)
    for (int a = 0; a < cat.H().order(); ++a) {
      auto s = find_shift(cat, x, a, opts);
      if (!s) return std::nullopt;
      all.push_back(std::move(*s));
    }
  return ShiftSystem(cat.object_count(), cat.H().order(), std::move(all));
}

bool is_simple(const GradedCategory& cat, int x) {
  const int e = cat.H().identity();
  return cat.rank(x, x, e) == 1 && cat.identity_coords(x).size() == 1 &&
         cat.identity_coords(x)[0] != 0;
}

bool are_disjoint_deg1(const GradedCategory& cat, int x, int y) {
  const int e = cat.H().identity();
  return cat.rank(x, y, e) == 0 && cat.rank(y, x, e) == 0;
}

// ---------------------------------------------------------------------------

Verdict verify_axioms(const GradedCategory& cat) {
  Verdict v;
  const int n = cat.object_count();
  const int e = cat.H().identity();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int h = 0; h < cat.H().order(); ++h)
        if (cat.rank(x, y, h) > 0 && cat.degree(y) != cat.G().mul(cat.tau()(h), cat.degree(x)))
          v.violations.push_back({"grading", {x, y, h},
                                  "Hom^h" + triple(x, y, h) + " is nonzero but |Y| != tau(h)|X|"});
  bool ids_ok = true;
  for (int x = 0; x < n; ++x)
    if (static_cast<int>(cat.identity_coords(x).size()) != cat.rank(x, x, e)) {
      v.violations.push_back({"identity", {x}, "identity coordinates do not match End^1 rank"});
      ids_ok = false;
    }
  if (!ids_ok) return v;

  for (int x = 0; x < n; ++x)
    for (const auto& [y, h] : cat.out_homs(x))
      for (int k = 0; k < cat.rank(x, y, h); ++k) {
        const Morphism f = basis_morphism(cat, x, y, h, k);
        if (!(compose(cat, identity_morphism(cat, y), f) == f))
          v.violations.push_back({"left_unit", {x, y, h, k}, "id o f != f"});
        if (!(compose(cat, f, identity_morphism(cat, x)) == f))
          v.violations.push_back({"right_unit", {x, y, h, k}, "f o id != f"});
      }

  for (int x = 0; x < n; ++x)
    for (const auto& [y, h1] : cat.out_homs(x))
      for (const auto& [z, h2] : cat.out_homs(y))
        for (const auto& [w, h3] : cat.out_homs(z)) {
          const int r1 = cat.rank(x, y, h1), r2 = cat.rank(y, z, h2), r3 = cat.rank(z, w, h3);
          for (int i = 0; i < r1; ++i) {
            const Morphism a = basis_morphism(cat, x, y, h1, i);
            for (int j = 0; j < r2; ++j) {
              const Morphism b = basis_morphism(cat, y, z, h2, j);
              const Morphism ba = compose(cat, b, a);
              for (int k = 0; k < r3; ++k) {
                const Morphism c = basis_morphism(cat, z, w, h3, k);
                if (!(compose(cat, c, ba) == compose(cat, compose(cat, c, b), a)))
                  v.violations.push_back({"associativity",
                                          {x, y, z, w, h1, h2, h3, i, j, k},
                                          "(c o b) o a != c o (b o a)"});
              }
            }
          }
        }
  return v;
}

// ---------------------------------------------------------------------------

Matrix FunctorData::hom_map(int src, int dst, int h) const {
  const auto it = hom_maps.find({src, dst, h});
  if (it != hom_maps.end()) return it->second;
  return Matrix(target->rank(object_map.at(src), object_map.at(dst), h), source->rank(src, dst, h));
}

Morphism FunctorData::apply(const Morphism& f) const {
  const Matrix m = hom_map(f.src, f.dst, f.degree);
  return {object_map.at(f.src), object_map.at(f.dst), f.degree, taucat::apply(target->field(), m, f.coords)};
}

Verdict verify_functor(const FunctorData& fd, const FunctorCheckOptions& opts) {
  Verdict v;
  const GradedCategory& s = *fd.source;
  const GradedCategory& t = *fd.target;
  if (!(s.tau() == t.tau()) || !(s.field() == t.field())) {
    v.violations.push_back({"endpoints", {}, "source and target differ in tau or field"});
    return v;
  }
  if (static_cast<int>(fd.object_map.size()) != s.object_count()) {
    v.violations.push_back({"object_map", {}, "object map has the wrong length"});
    return v;
  }
  for (int x = 0; x < s.object_count(); ++x) {
    const int fx = fd.object_map[x];
    if (fx < 0 || fx >= t.object_count()) {
      v.violations.push_back({"object_map", {x}, "image object out of range"});
      return v;
    }
    if (opts.check_object_degrees && t.degree(fx) != s.degree(x))
      v.violations.push_back({"object_degree", {x}, "|FX| != |X|"});
  }
  for (const auto& [key, m] : fd.hom_maps) {
    const auto& [x, y, h] = key;
    if (x < 0 || x >= s.object_count() || y < 0 || y >= s.object_count() || !s.H().contains(h)) {
      v.violations.push_back({"shape", {x, y, h}, "hom map for a nonexistent space"});
      continue;
    }
    if (m.cols() != s.rank(x, y, h) || m.rows() != t.rank(fd.object_map[x], fd.object_map[y], h))
      v.violations.push_back({"shape", {x, y, h}, "hom map has the wrong shape"});
  }
  if (!v.ok()) return v;
  for (int x = 0; x < s.object_count(); ++x)
    if (!(fd.apply(identity_morphism(s, x)) == identity_morphism(t, fd.object_map[x])))
      v.violations.push_back({"identity", {x}, "F(id_X) != id_FX"});
  for (int x = 0; x < s.object_count(); ++x)
    for (const auto& [y, h] : s.out_homs(x))
      for (const auto& [z, h2] : s.out_homs(y))
        for (int i = 0; i < s.rank(x, y, h); ++i) {
          const Morphism a = basis_morphism(s, x, y, h, i);
          const Morphism fa = fd.apply(a);
          for (int j = 0; j < s.rank(y, z, h2); ++j) {
            const Morphism b = basis_morphism(s, y, z, h2, j);
            if (!(fd.apply(compose(s, b, a)) == compose(t, fd.apply(b), fa)))
              v.violations.push_back({"composition", {x, y, z, h, h2, i, j}, "F(b o a) != Fb o Fa"});
          }
        }
  return v;
}

FunctorData identity_functor(const CategoryPtr& cat) {
  FunctorData f{cat, cat, {}, {}};
  for (int x = 0; x < cat->object_count(); ++x) f.object_map.push_back(x);
  for (int x = 0; x < cat->object_count(); ++x)
    for (const auto& [y, h] : cat->out_homs(x)) f.hom_maps[{x, y, h}] = Matrix::identity(cat->rank(x, y, h));
  return f;
}

FunctorData compose_functors(const FunctorData& outer, const FunctorData& inner) {
  if (inner.target != outer.source && !(*inner.target == *outer.source))
    fail("functors are not composable");
  FunctorData f{inner.source, outer.target, {}, {}};
  for (int fx : inner.object_map) f.object_map.push_back(outer.object_map.at(fx));
  const GradedCategory& s = *inner.source;
  for (int x = 0; x < s.object_count(); ++x)
    for (const auto& [y, h] : s.out_homs(x)) {
      const Matrix m = multiply(s.field(),
                                outer.hom_map(inner.object_map[x], inner.object_map[y], h),
                                inner.hom_map(x, y, h));
      f.hom_maps[{x, y, h}] = m;
    }
  return f;
}

Verdict verify_fully_faithful(const FunctorData& fd) {
  Verdict v;
  const GradedCategory& s = *fd.source;
  const GradedCategory& t = *fd.target;
  for (int x = 0; x < s.object_count(); ++x)
    for (int y = 0; y < s.object_count(); ++y)
      for (int h = 0; h < s.H().order(); ++h) {
        const int rs = s.rank(x, y, h);
        const int rt = t.rank(fd.object_map[x], fd.object_map[y], h);
        if (rs != rt) {
          v.violations.push_back({"rank", {x, y, h}, "hom ranks differ"});
          continue;
        }
        if (rs == 0) continue;
        if (!inverse(s.field(), fd.hom_map(x, y, h)))
          v.violations.push_back({"bijective", {x, y, h}, "hom map is not invertible"});
      }
  return v;
}

Verdict verify_essentially_surjective(const FunctorData& fd, const SearchOptions& opts) {
  Verdict v;
  const GradedCategory& t = *fd.target;
  const int e = t.H().identity();
  for (int z = 0; z < t.object_count(); ++z) {
    bool hit = false;
    for (int fx : fd.object_map) {
      if (fx == z || find_invertible(t, fx, z, e, opts)) {
        hit = true;
        break;
      }
    }
    // A zero object is isomorphic to the image of any zero object; the
    // search above covers it since the empty identity inverts trivially.
    if (!hit) v.violations.push_back({"essential_image", {z}, "object not in the essential image"});
  }
  return v;
}

Verdict verify_nat(const NatTransData& eta) {
  Verdict v;
  const FunctorData& f = eta.source;
  const FunctorData& g = eta.target;
  if ((f.source != g.source && !(*f.source == *g.source)) ||
      (f.target != g.target && !(*f.target == *g.target))) {
    v.violations.push_back({"endpoints", {}, "functors have different endpoints"});
    return v;
  }
  const GradedCategory& s = *f.source;
  const GradedCategory& t = *f.target;
  const int e = s.H().identity();
  if (static_cast<int>(eta.components.size()) != s.object_count()) {
    v.violations.push_back({"components", {}, "wrong number of components"});
    return v;
  }
  for (int x = 0; x < s.object_count(); ++x) {
    const Morphism& c = eta.components[x];
    if (c.src != f.object_map[x] || c.dst != g.object_map[x] || c.degree != e ||
        static_cast<int>(c.coords.size()) != t.rank(c.src, c.dst, e))
      v.violations.push_back({"component", {x}, "component is not a degree-1 map FX -> GX"});
  }
  if (!v.ok()) return v;
  for (int x = 0; x < s.object_count(); ++x)
    for (const auto& [y, h] : s.out_homs(x))
      for (int k = 0; k < s.rank(x, y, h); ++k) {
        const Morphism b = basis_morphism(s, x, y, h, k);
        const Morphism lhs = compose(t, g.apply(b), eta.components[x]);
        const Morphism rhs = compose(t, eta.components[y], f.apply(b));
        if (!(lhs == rhs)) v.violations.push_back({"naturality", {x, y, h, k}, "Gf o eta_X != eta_Y o Ff"});
      }
  return v;
}

// ---------------------------------------------------------------------------

GradedCategory direct_sum_cat(const std::vector<CategoryPtr>& cats) {
  if (cats.empty()) fail("direct sum of no categories");
  GradedCategory out(cats[0]->tau(), cats[0]->field());
  for (const auto& c : cats) {
    if (!(c->tau() == out.tau()) || !(c->field() == out.field()))
      fail("direct sum of categories with different tau or field");
  }
  for (const auto& c : cats) {
    const int off = out.object_count();
    for (int x = 0; x < c->object_count(); ++x) out.add_object(c->degree(x));
    for (int x = 0; x < c->object_count(); ++x)
      for (const auto& [y, h] : c->out_homs(x)) out.set_rank(off + x, off + y, h, c->rank(x, y, h));
    for (const auto& [key, t] : c->compositions()) {
      const auto& [s, m, d, h, h2] = key;
      out.set_composition(off + s, off + m, off + d, h, h2, t);
    }
    for (int x = 0; x < c->object_count(); ++x) out.set_identity(off + x, c->identity_coords(x));
  }
  return out;
}

GradedCategory degree_one_part(const GradedCategory& cat) {
  GradedCategory out(cat.tau(), cat.field());
  const int e = cat.H().identity();
  for (int x = 0; x < cat.object_count(); ++x) out.add_object(cat.degree(x));
  for (int x = 0; x < cat.object_count(); ++x)
    for (int y = 0; y < cat.object_count(); ++y)
      if (cat.rank(x, y, e) > 0) out.set_rank(x, y, e, cat.rank(x, y, e));
  for (const auto& [key, t] : cat.compositions()) {
    const auto& [s, m, d, h, h2] = key;
    if (h == e && h2 == e) out.set_composition(s, m, d, h, h2, t);
  }
  for (int x = 0; x < cat.object_count(); ++x) out.set_identity(x, cat.identity_coords(x));
  return out;
}

}  // namespace taucat
