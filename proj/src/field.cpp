#include "hjac/field.hpp"

namespace hjac {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw DomainError("characteristic must be 0 or a prime below 2^31, got " +
                      std::to_string(p));
  }
  return Field(static_cast<std::uint32_t>(p));
}

Field Field::of_characteristic(std::uint64_t characteristic) {
  return characteristic == 0 ? rationals() : prime(characteristic);
}

std::string Field::name() const {
  return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

Scalar Field::normalize(const Scalar& value) const {
  if (p_ == 0) {
    Scalar out(value);
    out.canonicalize();
    return out;
  }
  mpz_class modulus(static_cast<unsigned long>(p_));
  mpz_class num = value.get_num() % modulus;
  if (num < 0) num += modulus;
  mpz_class den = value.get_den() % modulus;
  if (den == 0) {
    throw DomainError("denominator " + value.get_den().get_str() +
                      " is not invertible in " + name());
  }
  if (den != 1) {
    mpz_class den_inv;
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
    num = (num * den_inv) % modulus;
  }
  return Scalar(num);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  std::uint64_t s = residue(a) + residue(b);
  if (s >= p_) s -= p_;
  return Scalar(static_cast<unsigned long>(s));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  std::uint64_t s = residue(a) + p_ - residue(b);
  if (s >= p_) s -= p_;
  return Scalar(static_cast<unsigned long>(s));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  return Scalar(static_cast<unsigned long>(residue(a) * residue(b) % p_));
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  std::uint64_t r = residue(a);
  return Scalar(static_cast<unsigned long>(r == 0 ? 0 : p_ - r));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw DomainError("division by zero in " + name());
  if (p_ == 0) return 1 / a;
  // Fermat: a^(p-2).
  std::uint64_t base = residue(a), result = 1, e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return Scalar(static_cast<unsigned long>(result));
}

}  // namespace hjac
