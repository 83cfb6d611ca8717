#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hjac {

/// Coefficients are GMP rationals. Over a prime field they are kept as
/// integers in [0, p).
using Scalar = mpq_class;

/// Thrown for violated preconditions (bad characteristic, mixed rings, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The ground field: the rationals (characteristic 0) or F_p for a prime
/// p < 2^31. All arithmetic is exact.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws DomainError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  /// 0 -> rationals, otherwise prime(characteristic).
  static Field of_characteristic(std::uint64_t characteristic);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  /// Maps an arbitrary rational into the field. Throws DomainError when the
  /// denominator vanishes mod p.
  Scalar normalize(const Scalar& value) const;
  Scalar from_int(long value) const { return normalize(Scalar(value)); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws DomainError on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }
  bool is_one(const Scalar& a) const { return a == 1; }

  std::string to_string(const Scalar& a) const { return a.get_str(); }
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}

  std::uint64_t residue(const Scalar& a) const { return a.get_num().get_ui(); }

  std::uint32_t p_ = 0;
};

/// Deterministic primality test for 64-bit inputs (trial division suffices
/// below 2^31).
bool is_prime(std::uint64_t n);

/// Exact binomial coefficient C(n, k) as a big integer; zero when k > n.
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace hjac
