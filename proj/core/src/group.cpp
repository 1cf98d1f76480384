#include "taucat/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "taucat/error.hpp"

namespace taucat {

FiniteGroup::FiniteGroup() {
  auto d = std::make_shared<Data>();
  d->table = {0};
  d->inverse = {0};
  d_ = std::move(d);
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail("group table is empty");
  auto d = std::make_shared<Data>();
  d->order = n;
  d->table.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) fail("group table is not square");
    for (int b = 0; b < n; ++b) {
      const int v = table[a][b];
      if (v < 0 || v >= n) fail("group table entry out of range");
      d->table[a * n + b] = v;
    }
  }
  // Latin square
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(n), col(n);
    for (int b = 0; b < n; ++b) {
      const int r = d->table[a * n + b];
      const int c = d->table[b * n + a];
      if (row[r] || col[c]) fail("group table is not a Latin square");
      row[r] = col[c] = true;
    }
  }
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b)
      ok = d->table[a * n + b] == b && d->table[b * n + a] == b;
    if (ok) e = a;
  }
  if (e < 0) fail("group table has no identity");
  d->identity = e;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (d->table[d->table[a * n + b] * n + c] != d->table[a * n + d->table[b * n + c]])
          fail("group table is not associative at (" + std::to_string(a) + "," +
               std::to_string(b) + "," + std::to_string(c) + ")");
  d->inverse.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (d->table[a * n + b] == e) d->inverse[a] = b;
  return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) fail("cyclic group order must be positive");
  auto d = std::make_shared<Data>();
  d->order = n;
  d->identity = 0;
  d->table.resize(static_cast<size_t>(n) * n);
  d->inverse.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) d->table[a * n + b] = (a + b) % n;
    d->inverse[a] = (n - a) % n;
  }
  return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 5) fail("symmetric group supported for 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  auto index = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  std::vector<int> q(n);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      // (a*b)(x) = a(b(x))
      for (int x = 0; x < n; ++x) q[x] = perms[a][perms[b][x]];
      table[a][b] = index(q);
    }
  return from_table(table);
}

int FiniteGroup::pow(int a, int k) const {
  int r = identity();
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  const int n = order();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = mul(a, b);
  return t;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool operator==(const FiniteGroup& x, const FiniteGroup& y) {
  return x.d_ == y.d_ || (x.d_->order == y.d_->order && x.d_->table == y.d_->table);
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(FiniteGroup parent, std::vector<int> sorted)
    : parent_(std::move(parent)), elements_(std::move(sorted)), member_(parent_.order(), false) {
  for (int a : elements_) member_[a] = true;
}

Subgroup Subgroup::from_elements(FiniteGroup parent, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (int a : elements)
    if (!parent.contains(a)) fail("subgroup element out of range");
  Subgroup s(std::move(parent), std::move(elements));
  const FiniteGroup& g = s.parent_;
  if (!s.contains(g.identity())) fail("subgroup does not contain the identity");
  for (int a : s.elements_) {
    if (!s.contains(g.inv(a))) fail("subgroup is not closed under inverses");
    for (int b : s.elements_)
      if (!s.contains(g.mul(a, b))) fail("subgroup is not closed under products");
  }
  return s;
}

Subgroup Subgroup::generated(FiniteGroup parent, std::span<const int> gens) {
  std::vector<bool> seen(parent.order(), false);
  std::vector<int> frontier{parent.identity()};
  seen[parent.identity()] = true;
  std::vector<int> all = frontier;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int g : gens) {
        if (!parent.contains(g)) fail("generator out of range");
        const int b = parent.mul(a, g);
        if (!seen[b]) {
          seen[b] = true;
          next.push_back(b);
          all.push_back(b);
        }
      }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(FiniteGroup parent) {
  const int e = parent.identity();
  return Subgroup(std::move(parent), {e});
}

Subgroup Subgroup::whole(FiniteGroup parent) {
  std::vector<int> all(parent.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(parent), std::move(all));
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](int a) { return other.contains(a); });
}

Subgroup Subgroup::conjugate(int t) const {
  std::vector<int> conj;
  conj.reserve(elements_.size());
  for (int a : elements_) conj.push_back(parent_.conjugate(t, a));
  std::sort(conj.begin(), conj.end());
  return Subgroup(parent_, std::move(conj));
}

bool Subgroup::is_normal() const {
  for (int h = 0; h < parent_.order(); ++h)
    for (int k : elements_)
      if (!contains(parent_.conjugate(h, k))) return false;
  return true;
}

// ---------------------------------------------------------------------------

std::optional<HomViolation> verify_hom(const FiniteGroup& source, const FiniteGroup& target,
                                       std::span<const int> map) {
  if (static_cast<int>(map.size()) != source.order())
    fail("homomorphism map has " + std::to_string(map.size()) + " entries, source order is " +
         std::to_string(source.order()));
  for (int v : map)
    if (!target.contains(v)) fail("homomorphism image out of range");
  for (int a = 0; a < source.order(); ++a)
    for (int b = 0; b < source.order(); ++b)
      if (map[source.mul(a, b)] != target.mul(map[a], map[b])) return HomViolation{a, b};
  return std::nullopt;
}

GroupHom::GroupHom(FiniteGroup source, FiniteGroup target, std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (auto v = verify_hom(source_, target_, map_))
    fail("map is not a homomorphism: fails at (" + std::to_string(v->a) + "," +
         std::to_string(v->b) + ")");
}

GroupHom GroupHom::identity(const FiniteGroup& g) {
  std::vector<int> map(g.order());
  std::iota(map.begin(), map.end(), 0);
  return GroupHom(g, g, std::move(map));
}

GroupHom GroupHom::trivial(const FiniteGroup& source, const FiniteGroup& target) {
  return GroupHom(source, target, std::vector<int>(source.order(), target.identity()));
}

Subgroup kernel(const GroupHom& hom) {
  return Subgroup::from_elements(hom.source(), preimage(hom, hom.target().identity()));
}

Subgroup image(const GroupHom& hom) {
  return Subgroup::from_elements(hom.target(), hom.map());
}

std::vector<int> preimage(const GroupHom& hom, int g) {
  std::vector<int> out;
  for (int a = 0; a < hom.source().order(); ++a)
    if (hom(a) == g) out.push_back(a);
  return out;
}

// ---------------------------------------------------------------------------

CosetSpace::CosetSpace(Subgroup subgroup) {
  const FiniteGroup& g = subgroup.parent();
  std::vector<int> coset_of(g.order(), -1);
  std::vector<int> reps;
  auto mark = [&](int rep) {
    const int idx = static_cast<int>(reps.size());
    reps.push_back(rep);
    for (int l : subgroup.elements()) coset_of[g.mul(rep, l)] = idx;
  };
  mark(g.identity());
  for (int h = 0; h < g.order(); ++h)
    if (coset_of[h] < 0) mark(h);
  d_ = std::make_shared<const Data>(Data{std::move(subgroup), std::move(reps), std::move(coset_of)});
}

std::vector<int> CosetSpace::left_action(int a) const {
  std::vector<int> perm(size());
  for (int i = 0; i < size(); ++i) perm[i] = act(a, i);
  return perm;
}

}  // namespace taucat
