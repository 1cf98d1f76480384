#include "taucat/field.hpp"

#include <string>

#include "taucat/error.hpp"

namespace taucat {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(int p, bool allow_two) : p_(p), generator_(1) {
  if (!is_prime(p)) fail("modulus " + std::to_string(p) + " is not prime");
  if (p == 2 && !allow_two) fail("p = 2 has a trivial unit group; pass allow_two to use it");
  const int n = p - 1;
  for (Scalar g = 1; g < static_cast<Scalar>(p); ++g) {
    // order of g
    Scalar x = g;
    int ord = 1;
    while (x != 1) {
      x = mul(x, g);
      ++ord;
    }
    if (ord == n) {
      generator_ = g;
      break;
    }
  }
  dlog_.assign(p, -1);
  exp_.resize(n);
  Scalar x = 1;
  for (int k = 0; k < n; ++k) {
    exp_[k] = x;
    dlog_[x] = k;
    x = mul(x, generator_);
  }
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) fail("inverse of zero in F_" + std::to_string(p_));
  return exp((unit_order() - dlog(a)) % unit_order());
}

Scalar PrimeField::pow(Scalar a, std::uint64_t k) const {
  Scalar result = 1 % p_;
  Scalar base = a % p_;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int PrimeField::dlog(Scalar u) const {
  if (u % p_ == 0) fail("discrete log of zero");
  return dlog_[u % p_];
}

Scalar PrimeField::exp(std::int64_t k) const {
  const std::int64_t n = unit_order();
  std::int64_t r = k % n;
  if (r < 0) r += n;
  return exp_[static_cast<size_t>(r)];
}

}  // namespace taucat
