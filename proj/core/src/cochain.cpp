#include "taucat/cochain.hpp"

#include <random>
#include <string>

#include "taucat/error.hpp"

namespace taucat {

UnitFunction act(const CosetSpace& space, const UnitFunction& f, int h) {
  if (static_cast<int>(f.size()) != space.size()) fail("unit function size mismatch");
  UnitFunction out(f.size());
  for (int i = 0; i < space.size(); ++i) out[i] = f[space.act(h, i)];
  return out;
}

namespace {

size_t power(int base, int n) {
  size_t r = 1;
  for (int i = 0; i < n; ++i) r *= static_cast<size_t>(base);
  return r;
}

}  // namespace

template <int N>
Cochain<N>::Cochain(CosetSpace space, PrimeField field)
    : space_(std::move(space)),
      field_(std::move(field)),
      values_(power(space_.parent().order(), N) * space_.size(), 1) {}

template <int N>
Cochain<N>::Cochain(CosetSpace space, PrimeField field, std::vector<Scalar> values)
    : space_(std::move(space)), field_(std::move(field)), values_(std::move(values)) {
  if (values_.size() != power(space_.parent().order(), N) * space_.size())
    fail(std::to_string(N) + "-cochain has " + std::to_string(values_.size()) +
         " values, expected " + std::to_string(power(space_.parent().order(), N) * space_.size()));
  for (Scalar& v : values_) {
    v %= field_.p();
    if (v == 0) fail("cochain value is not a unit");
  }
}

template <int N>
size_t Cochain<N>::index(const Args& args, int coset) const {
  size_t idx = 0;
  for (int a : args) {
    if (!group().contains(a)) fail("cochain argument out of range");
    idx = idx * group().order() + a;
  }
  if (coset < 0 || coset >= cosets()) fail("coset index out of range");
  return idx * cosets() + coset;
}

template <int N>
UnitFunction Cochain<N>::at(const Args& args) const {
  const size_t base = index(args, 0);
  return UnitFunction(values_.begin() + base, values_.begin() + base + cosets());
}

template <int N>
void Cochain<N>::set(const Args& args, int coset, Scalar v) {
  v %= field_.p();
  if (v == 0) fail("cochain value is not a unit");
  values_[index(args, coset)] = v;
}

template <int N>
void Cochain<N>::set(const Args& args, const UnitFunction& f) {
  if (static_cast<int>(f.size()) != cosets()) fail("unit function size mismatch");
  for (int i = 0; i < cosets(); ++i) set(args, i, f[i]);
}

template <int N>
bool Cochain<N>::is_normalized() const {
  if constexpr (N == 0) {
    return true;
  } else {
    const int n = group().order();
    const int e = group().identity();
    const size_t total = power(n, N);
    for (size_t flat = 0; flat < total; ++flat) {
      Args args{};
      size_t rest = flat;
      bool has_identity = false;
      for (int k = N - 1; k >= 0; --k) {
        args[k] = static_cast<int>(rest % n);
        rest /= n;
        has_identity = has_identity || args[k] == e;
      }
      if (!has_identity) continue;
      for (int i = 0; i < cosets(); ++i)
        if (value(args, i) != 1) return false;
    }
    return true;
  }
}

template <int N>
Cochain<N> Cochain<N>::operator*(const Cochain& other) const {
  if (!(space_ == other.space_) || !(field_ == other.field_))
    fail("cochains live on different coset spaces or fields");
  Cochain out = *this;
  for (size_t k = 0; k < values_.size(); ++k) out.values_[k] = field_.mul(values_[k], other.values_[k]);
  return out;
}

template <int N>
Cochain<N> Cochain<N>::inverse() const {
  Cochain out = *this;
  for (Scalar& v : out.values_) v = field_.inv(v);
  return out;
}

template class Cochain<0>;
template class Cochain<1>;
template class Cochain<2>;

// ---------------------------------------------------------------------------

Cochain0 random_cochain0(const CosetSpace& space, const PrimeField& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> unit(0, field.unit_order() - 1);
  Cochain0 c(space, field);
  for (int i = 0; i < space.size(); ++i) c.set({}, i, field.exp(unit(rng)));
  return c;
}

Cochain1 random_cochain1(const CosetSpace& space, const PrimeField& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> unit(0, field.unit_order() - 1);
  const FiniteGroup& h = space.parent();
  Cochain1 c(space, field);
  for (int a = 0; a < h.order(); ++a) {
    if (a == h.identity()) continue;
    for (int i = 0; i < space.size(); ++i) c.set({a}, i, field.exp(unit(rng)));
  }
  return c;
}

Cochain2 random_cochain2(const CosetSpace& space, const PrimeField& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> unit(0, field.unit_order() - 1);
  const FiniteGroup& h = space.parent();
  Cochain2 c(space, field);
  for (int a = 0; a < h.order(); ++a)
    for (int b = 0; b < h.order(); ++b) {
      if (a == h.identity() || b == h.identity()) continue;
      for (int i = 0; i < space.size(); ++i) c.set({a, b}, i, field.exp(unit(rng)));
    }
  return c;
}

// ---------------------------------------------------------------------------

UnitFunction d0(const Cochain0& eta, int a) {
  const CosetSpace& s = eta.space();
  const PrimeField& f = eta.field();
  UnitFunction out(s.size());
  for (int i = 0; i < s.size(); ++i) out[i] = f.div(eta.value({}, i), eta.value({}, s.act(a, i)));
  return out;
}

Cochain1 d0(const Cochain0& eta) {
  Cochain1 out(eta.space(), eta.field());
  for (int a = 0; a < eta.group().order(); ++a) out.set({a}, d0(eta, a));
  return out;
}

UnitFunction d1(const Cochain1& gamma, int a, int b) {
  const CosetSpace& s = gamma.space();
  const PrimeField& f = gamma.field();
  const int ab = gamma.group().mul(a, b);
  UnitFunction out(s.size());
  for (int i = 0; i < s.size(); ++i) {
    const Scalar den = f.mul(gamma.value({a}, s.act(b, i)), gamma.value({b}, i));
    out[i] = f.div(gamma.value({ab}, i), den);
  }
  return out;
}

Cochain2 d1(const Cochain1& gamma) {
  Cochain2 out(gamma.space(), gamma.field());
  const int n = gamma.group().order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out.set({a, b}, d1(gamma, a, b));
  return out;
}

UnitFunction d2(const Cochain2& psi, int a, int b, int c) {
  const CosetSpace& s = psi.space();
  const PrimeField& f = psi.field();
  const FiniteGroup& h = psi.group();
  const int ab = h.mul(a, b), bc = h.mul(b, c);
  UnitFunction out(s.size());
  for (int i = 0; i < s.size(); ++i) {
    const Scalar num = f.mul(psi.value({b, c}, i), psi.value({a, bc}, i));
    const Scalar den = f.mul(psi.value({ab, c}, i), psi.value({a, b}, s.act(c, i)));
    out[i] = f.div(num, den);
  }
  return out;
}

std::optional<CocycleViolation> cocycle_violation(const Cochain2& psi) {
  const int n = psi.group().order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const UnitFunction v = d2(psi, a, b, c);
        for (int i = 0; i < psi.cosets(); ++i)
          if (v[i] != 1) return CocycleViolation{a, b, c, i};
      }
  return std::nullopt;
}

bool is_cocycle(const Cochain2& psi) { return !cocycle_violation(psi).has_value(); }

template <int N>
Cochain<N> translate(const Cochain<N>& c, int t) {
  const FiniteGroup& h = c.group();
  if (!h.contains(t)) fail("translation element out of range");
  const CosetSpace& old = c.space();
  CosetSpace target(old.subgroup().conjugate(t));
  std::vector<Scalar> values(c.values().size());
  const size_t blocks = values.size() / old.size();
  for (size_t blk = 0; blk < blocks; ++blk)
    for (int i = 0; i < target.size(); ++i) {
      const int j = old.coset_of(h.mul(target.rep(i), t));
      values[blk * target.size() + i] = c.values()[blk * old.size() + j];
    }
  return Cochain<N>(std::move(target), c.field(), std::move(values));
}

template Cochain<0> translate(const Cochain<0>&, int);
template Cochain<1> translate(const Cochain<1>&, int);
template Cochain<2> translate(const Cochain<2>&, int);

// ---------------------------------------------------------------------------

ModVector exponents(const Cochain0& eta) {
  ModVector x(eta.cosets());
  for (int i = 0; i < eta.cosets(); ++i) x[i] = eta.field().dlog(eta.value({}, i));
  return x;
}

ModVector exponents(const Cochain1& gamma) {
  const FiniteGroup& h = gamma.group();
  ModVector x;
  x.reserve(static_cast<size_t>(h.order() - 1) * gamma.cosets());
  for (int a = 0; a < h.order(); ++a) {
    if (a == h.identity()) continue;
    for (int i = 0; i < gamma.cosets(); ++i) x.push_back(gamma.field().dlog(gamma.value({a}, i)));
  }
  return x;
}

Cochain0 cochain0_from_exponents(const CosetSpace& space, const PrimeField& field,
                                 const ModVector& x) {
  if (static_cast<int>(x.size()) != space.size()) fail("exponent vector length mismatch");
  Cochain0 c(space, field);
  for (int i = 0; i < space.size(); ++i) c.set({}, i, field.exp(x[i]));
  return c;
}

Cochain1 cochain1_from_exponents(const CosetSpace& space, const PrimeField& field,
                                 const ModVector& x) {
  const FiniteGroup& h = space.parent();
  if (x.size() != static_cast<size_t>(h.order() - 1) * space.size())
    fail("exponent vector length mismatch");
  Cochain1 c(space, field);
  size_t k = 0;
  for (int a = 0; a < h.order(); ++a) {
    if (a == h.identity()) continue;
    for (int i = 0; i < space.size(); ++i) c.set({a}, i, field.exp(x[k++]));
  }
  return c;
}

namespace {

template <int N>
ModVector to_exp(const Cochain<N>& c) {
  return exponents(c);
}

template <int N>
Cochain<N> from_exp(const Cochain<N>& like, const ModVector& x) {
  if constexpr (N == 0)
    return cochain0_from_exponents(like.space(), like.field(), x);
  else
    return cochain1_from_exponents(like.space(), like.field(), x);
}

}  // namespace

template <int N>
CochainSolutions<N>::CochainSolutions(Cochain<N> particular, std::vector<ModVector> kernel)
    : particular_(std::move(particular)),
      kernel_(std::move(kernel)),
      basis_(particular_.field().unit_order(), static_cast<int>(to_exp(particular_).size()),
             kernel_) {}

template <int N>
bool CochainSolutions<N>::contains(const Cochain<N>& c) const {
  if (!(c.space() == particular_.space()) || !(c.field() == particular_.field())) return false;
  if constexpr (N == 1)
    if (!c.is_normalized()) return false;
  ModVector x = to_exp(c);
  const ModVector p = to_exp(particular_);
  for (size_t k = 0; k < x.size(); ++k) x[k] -= p[k];
  return basis_.contains(x);
}

template <int N>
std::vector<Cochain<N>> CochainSolutions<N>::enumerate(std::uint64_t cap) const {
  const ModVector base = to_exp(particular_);
  const HowellBasis none(basis_.modulus(), basis_.dim(), {});
  std::vector<Cochain<N>> out;
  for (const ModVector& x : enumerate_classes(base, kernel_, none, cap))
    out.push_back(from_exp(particular_, x));
  return out;
}

template class CochainSolutions<0>;
template class CochainSolutions<1>;

std::optional<D1Solutions> solve_d1(const Cochain2& target) {
  if (!target.is_normalized()) fail("target 2-cochain is not normalized");
  if (auto v = cocycle_violation(target))
    fail("target is not a 2-cocycle: d2 != 1 at (" + std::to_string(v->a) + "," +
         std::to_string(v->b) + "," + std::to_string(v->c) + ") coset " +
         std::to_string(v->coset));
  const FiniteGroup& h = target.group();
  const PrimeField& f = target.field();
  const int n = h.order(), m = target.cosets(), e = h.identity();
  auto var = [&](int a, int i) { return (a < e ? a : a - 1) * m + i; };
  ModularSystem sys;
  sys.modulus = f.unit_order();
  sys.vars = (n - 1) * m;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == e || b == e) continue;
      const int ab = h.mul(a, b);
      for (int i = 0; i < m; ++i) {
        ModVector row(sys.vars, 0);
        if (ab != e) row[var(ab, i)] += 1;
        row[var(a, target.space().act(b, i))] -= 1;
        row[var(b, i)] -= 1;
        sys.rows.push_back(std::move(row));
        sys.rhs.push_back(f.dlog(target.value({a, b}, i)));
      }
    }
  auto sol = unit_solve_linear(sys);
  if (!sol) return std::nullopt;
  D1Solutions out(cochain1_from_exponents(target.space(), f, sol->particular),
                  std::move(sol->kernel));
  if (!(d1(out.particular()) == target)) fail("internal error: d1 solver round trip failed");
  return out;
}

std::optional<D0Solutions> solve_d0(const Cochain1& target) {
  if (!target.is_normalized()) fail("target 1-cochain is not normalized");
  const FiniteGroup& h = target.group();
  const PrimeField& f = target.field();
  const int n = h.order(), m = target.cosets(), e = h.identity();
  ModularSystem sys;
  sys.modulus = f.unit_order();
  sys.vars = m;
  for (int a = 0; a < n; ++a) {
    if (a == e) continue;
    for (int i = 0; i < m; ++i) {
      ModVector row(m, 0);
      row[i] += 1;
      row[target.space().act(a, i)] -= 1;
      sys.rows.push_back(std::move(row));
      sys.rhs.push_back(f.dlog(target.value({a}, i)));
    }
  }
  auto sol = unit_solve_linear(sys);
  if (!sol) return std::nullopt;
  D0Solutions out(cochain0_from_exponents(target.space(), f, sol->particular),
                  std::move(sol->kernel));
  if (!(d0(out.particular()) == target)) fail("internal error: d0 solver round trip failed");
  return out;
}

}  // namespace taucat
