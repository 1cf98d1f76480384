#include "taucat/mtau.hpp"

#include <string>

#include "taucat/error.hpp"

namespace taucat {

MtauSpec MtauSpec::make(GroupHom tau, PrimeField field, Subgroup L, Cochain2 psi, int g) {
  if (!(L.parent() == tau.source())) fail("L is not a subgroup of the source of tau");
  if (!L.is_subset_of(kernel(tau))) fail("L is not contained in ker(tau)");
  if (!(psi.space().subgroup() == L)) fail("psi is not defined on H/L");
  if (!(psi.field() == field)) fail("psi takes values in a different field");
  if (!psi.is_normalized()) fail("psi is not normalized");
  if (auto v = cocycle_violation(psi))
    fail("psi is not a 2-cocycle: d2 != 1 at (" + std::to_string(v->a) + "," +
         std::to_string(v->b) + "," + std::to_string(v->c) + ")");
  if (!tau.target().contains(g)) fail("g is not an element of G");
  return MtauSpec{std::move(tau), std::move(field), std::move(L), std::move(psi), g};
}

MtauSpec MtauSpec::trivial(GroupHom tau, PrimeField field, Subgroup L, int g) {
  Cochain2 psi(CosetSpace(L), field);
  return make(std::move(tau), std::move(field), std::move(L), std::move(psi), g);
}

GradedCategory build_skeleton(const MtauSpec& spec) {
  const CosetSpace& s = spec.space();
  const FiniteGroup& h = spec.tau.source();
  const PrimeField& f = spec.field;
  GradedCategory cat(spec.tau, f);
  for (int i = 0; i < s.size(); ++i) cat.add_object(spec.tau.target().mul(spec.tau(s.rep(i)), spec.g));
  for (int i = 0; i < s.size(); ++i)
    for (int a = 0; a < h.order(); ++a) cat.set_rank(i, s.act(a, i), a, 1);
  for (int i = 0; i < s.size(); ++i)
    for (int b = 0; b < h.order(); ++b)
      for (int a = 0; a < h.order(); ++a) {
        const int mid = s.act(b, i);
        const int dst = s.act(a, mid);
        cat.set_composition(i, mid, dst, b, a, {f.inv(spec.psi.value({a, b}, i))});
      }
  for (int i = 0; i < s.size(); ++i) cat.set_identity(i, {1});
  return cat;
}

Morphism basis_inverse(const MtauSpec& spec, int coset, int a) {
  const FiniteGroup& h = spec.tau.source();
  const int ainv = h.inv(a);
  return Morphism{spec.space().act(a, coset), coset, ainv, {spec.psi.value({ainv, a}, coset)}};
}

// ---------------------------------------------------------------------------

AdditiveCompletion::AdditiveCompletion(CategoryPtr base, std::vector<std::vector<int>> extra)
    : base_(std::move(base)) {
  const GradedCategory& b = *base_;
  for (int x = 0; x < b.object_count(); ++x) objects_.push_back({x});
  for (auto& list : extra) {
    for (int x : list)
      if (x < 0 || x >= b.object_count()) fail("summand index out of range");
    objects_.push_back(std::move(list));
  }
  auto cat = std::make_shared<GradedCategory>(b.tau(), b.field());
  for (const auto& list : objects_) {
    int deg = b.G().identity();
    if (!list.empty()) deg = b.degree(list[0]);
    for (int x : list)
      if (b.degree(x) != deg) fail("formal direct sum mixes object degrees");
    cat->add_object(deg);
  }
  const int n = static_cast<int>(objects_.size());
  const int order = b.H().order();
  std::vector<int> rk(static_cast<size_t>(n) * n * order, 0);
  auto rank_of = [&](int s, int d, int h) -> int& { return rk[(static_cast<size_t>(s) * n + d) * order + h]; };
  for (int s = 0; s < n; ++s)
    for (int d = 0; d < n; ++d)
      for (int h = 0; h < order; ++h) {
        int r = 0;
        for (int x : objects_[s])
          for (int y : objects_[d]) r += b.rank(x, y, h);
        rank_of(s, d, h) = r;
        if (r) cat->set_rank(s, d, h, r);
      }
  cat_ = cat;
  for (int s = 0; s < n; ++s)
    for (int m = 0; m < n; ++m)
      for (int h = 0; h < order; ++h) {
        const int r1 = rank_of(s, m, h);
        if (!r1) continue;
        for (int d = 0; d < n; ++d)
          for (int h2 = 0; h2 < order; ++h2) {
            const int r2 = rank_of(m, d, h2);
            if (!r2) continue;
            const int h3 = b.H().mul(h2, h);
            const int r3 = rank_of(s, d, h3);
            if (!r3) continue;
            std::vector<Scalar> t(static_cast<size_t>(r1) * r2 * r3, 0);
            const auto& A = objects_[s];
            const auto& B = objects_[m];
            const auto& C = objects_[d];
            for (size_t i = 0; i < A.size(); ++i)
              for (size_t j = 0; j < B.size(); ++j) {
                const int rb1 = b.rank(A[i], B[j], h);
                if (!rb1) continue;
                const int o1 = offset(s, m, h, static_cast<int>(i), static_cast<int>(j));
                for (size_t l = 0; l < C.size(); ++l) {
                  const int rb2 = b.rank(B[j], C[l], h2);
                  const int rb3 = b.rank(A[i], C[l], h3);
                  if (!rb2 || !rb3) continue;
                  const auto* bt = b.composition(A[i], B[j], C[l], h, h2);
                  if (!bt) continue;
                  const int o2 = offset(m, d, h2, static_cast<int>(j), static_cast<int>(l));
                  const int o3 = offset(s, d, h3, static_cast<int>(i), static_cast<int>(l));
                  for (int q = 0; q < rb3; ++q)
                    for (int kk = 0; kk < rb2; ++kk)
                      for (int k = 0; k < rb1; ++k)
                        t[(static_cast<size_t>(o3 + q) * r2 + o2 + kk) * r1 + o1 + k] =
                            (*bt)[(static_cast<size_t>(q) * rb2 + kk) * rb1 + k];
                }
              }
            cat->set_composition(s, m, d, h, h2, std::move(t));
          }
      }
  const int e = b.H().identity();
  for (int s = 0; s < n; ++s) {
    std::vector<Scalar> id(rank_of(s, s, e), 0);
    const auto& A = objects_[s];
    for (size_t i = 0; i < A.size(); ++i) {
      const int o = offset(s, s, e, static_cast<int>(i), static_cast<int>(i));
      const auto& bid = b.identity_coords(A[i]);
      for (size_t k = 0; k < bid.size(); ++k) id[o + k] = bid[k];
    }
    cat->set_identity(s, std::move(id));
  }
}

int AdditiveCompletion::find(const std::vector<int>& summands) const {
  for (size_t k = 0; k < objects_.size(); ++k)
    if (objects_[k] == summands) return static_cast<int>(k);
  return -1;
}

int AdditiveCompletion::offset(int src, int dst, int h, int i, int j) const {
  const auto& A = objects_.at(src);
  const auto& B = objects_.at(dst);
  int o = 0;
  for (int ii = 0; ii < static_cast<int>(A.size()); ++ii)
    for (int jj = 0; jj < static_cast<int>(B.size()); ++jj) {
      if (ii == i && jj == j) return o;
      o += base_->rank(A[ii], B[jj], h);
    }
  fail("block index out of range");
}

Morphism AdditiveCompletion::block(int src, int dst, int i, int j, const Morphism& f) const {
  if (f.src != objects_.at(src).at(i) || f.dst != objects_.at(dst).at(j))
    fail("base morphism does not match the block");
  Morphism out = zero_morphism(*cat_, src, dst, f.degree);
  const int o = offset(src, dst, f.degree, i, j);
  for (size_t k = 0; k < f.coords.size(); ++k) out.coords[o + k] = f.coords[k];
  return out;
}

Morphism AdditiveCompletion::entry(const Morphism& f, int i, int j) const {
  const int x = objects_.at(f.src).at(i), y = objects_.at(f.dst).at(j);
  Morphism out = zero_morphism(*base_, x, y, f.degree);
  const int o = offset(f.src, f.dst, f.degree, i, j);
  for (size_t k = 0; k < out.coords.size(); ++k) out.coords[k] = f.coords[o + k];
  return out;
}

Morphism AdditiveCompletion::inclusion(int obj, int i) const {
  const int x = objects_.at(obj).at(i);
  return block(x, obj, 0, i, identity_morphism(*base_, x));
}

Morphism AdditiveCompletion::projection(int obj, int i) const {
  const int x = objects_.at(obj).at(i);
  return block(obj, x, i, 0, identity_morphism(*base_, x));
}

bool is_h_direct_sum(const GradedCategory& cat, int y, const std::vector<Morphism>& iota,
                     const std::vector<Morphism>& pi) {
  if (iota.size() != pi.size()) return false;
  const int e = cat.H().identity();
  if (iota.empty()) return identity_morphism(cat, y).is_zero();
  const int h = iota[0].degree;
  for (size_t i = 0; i < iota.size(); ++i) {
    if (iota[i].dst != y || pi[i].src != y || iota[i].src != pi[i].dst) return false;
    if (iota[i].degree != h || pi[i].degree != cat.H().inv(h)) return false;
  }
  for (size_t i = 0; i < pi.size(); ++i)
    for (size_t j = 0; j < iota.size(); ++j) {
      const Morphism c = compose(cat, pi[i], iota[j]);
      if (i == j) {
        if (!(c == identity_morphism(cat, iota[i].src))) return false;
      } else if (!c.is_zero()) {
        return false;
      }
    }
  Morphism sum = zero_morphism(cat, y, y, e);
  for (size_t i = 0; i < iota.size(); ++i) sum = add(cat, sum, compose(cat, iota[i], pi[i]));
  return sum == identity_morphism(cat, y);
}

// ---------------------------------------------------------------------------

GradedCategory build_group_groupoid(const GroupHom& tau, const PrimeField& field) {
  const FiniteGroup& H = tau.source();
  const FiniteGroup& G = tau.target();
  GradedCategory cat(tau, field);
  for (int g = 0; g < G.order(); ++g) cat.add_object(g);
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < H.order(); ++h) cat.set_rank(g, G.mul(tau(h), g), h, 1);
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < H.order(); ++h)
      for (int h2 = 0; h2 < H.order(); ++h2) {
        const int mid = G.mul(tau(h), g);
        cat.set_composition(g, mid, G.mul(tau(h2), mid), h, h2, {1});
      }
  for (int g = 0; g < G.order(); ++g) cat.set_identity(g, {1});
  return cat;
}

GroupHom c8_to_c2() {
  std::vector<int> map(8);
  for (int n = 0; n < 8; ++n) map[n] = n % 2;
  return GroupHom(FiniteGroup::cyclic(8), FiniteGroup::cyclic(2), std::move(map));
}

GradedCategory c8_table_category(int k, const PrimeField& field) {
  if (k != 1 && k != 2 && k != 4 && k != 8) fail("table category index must be 1, 2, 4 or 8");
  const int m = 8 / k;
  GradedCategory cat(c8_to_c2(), field);
  for (int a = 0; a < m; ++a) cat.add_object(a % 2);
  for (int a = 0; a < m; ++a)
    for (int n = 0; n < 8; ++n) cat.set_rank(a, (a + n) % m, n, 1);
  for (int a = 0; a < m; ++a)
    for (int n = 0; n < 8; ++n)
      for (int n2 = 0; n2 < 8; ++n2) {
        const int b = (a + n) % m;
        cat.set_composition(a, b, (b + n2) % m, n, n2, {1});
      }
  for (int a = 0; a < m; ++a) cat.set_identity(a, {1});
  return cat;
}

}  // namespace taucat
