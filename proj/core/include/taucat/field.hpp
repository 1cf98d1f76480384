#pragma once

// Prime fields F_p with discrete-log tables for the cyclic unit group.

#include <cstdint>
#include <vector>

namespace taucat {

using Scalar = std::uint32_t;

class PrimeField {
 public:
  // p must be prime; p = 2 is only accepted with allow_two (its unit group is
  // trivial).
  explicit PrimeField(int p = 5, bool allow_two = false);

  int p() const { return p_; }
  // Order of the unit group, p - 1.
  int unit_order() const { return p_ - 1; }
  Scalar generator() const { return generator_; }

  Scalar reduce(std::int64_t v) const {
    const std::int64_t r = v % p_;
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const { return (a + b) % p_; }
  Scalar sub(Scalar a, Scalar b) const { return (a + p_ - b) % p_; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  // Throws on zero.
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  Scalar pow(Scalar a, std::uint64_t k) const;
  bool is_unit(Scalar a) const { return a % p_ != 0; }

  // Exponent of a unit with respect to the generator, in [0, p-1).
  int dlog(Scalar u) const;
  // generator^k for any integer k.
  Scalar exp(std::int64_t k) const;

  friend bool operator==(const PrimeField& x, const PrimeField& y) { return x.p_ == y.p_; }

 private:
  int p_;
  Scalar generator_;
  std::vector<int> dlog_;
  std::vector<Scalar> exp_;
};

bool is_prime(int n);

}  // namespace taucat
