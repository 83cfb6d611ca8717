#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace hjac {

/// Exponent vector alpha = (alpha_1, ..., alpha_d) with inline storage.
/// Doubles as the monomial x^alpha. Supports up to kMaxVars variables and
/// exponents below 2^16.
class MultiIndex {
 public:
  static constexpr std::size_t kMaxVars = 10;
  using Exponent = std::uint16_t;

  MultiIndex() = default;
  /// The zero index in d variables.
  explicit MultiIndex(std::size_t d);
  MultiIndex(std::initializer_list<unsigned> exponents);
  explicit MultiIndex(const std::vector<unsigned>& exponents);

  static MultiIndex unit(std::size_t d, std::size_t i, unsigned power = 1);

  std::size_t size() const { return size_; }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned value);
  std::vector<unsigned> to_vector() const;

  bool is_zero() const { return degree_ == 0; }

  /// this | other, i.e. every exponent here is <= the one in other.
  bool divides(const MultiIndex& other) const;
  /// Componentwise >= (the non-strict form of the partial order).
  bool dominates(const MultiIndex& other) const { return other.divides(*this); }
  /// alpha > beta in the strict partial order: alpha != beta and alpha_i >= beta_i.
  bool strictly_dominates(const MultiIndex& other) const {
    return *this != other && dominates(other);
  }
  bool coprime(const MultiIndex& other) const;

  MultiIndex operator+(const MultiIndex& other) const;
  /// Requires other.divides(*this).
  MultiIndex operator-(const MultiIndex& other) const;
  MultiIndex lcm(const MultiIndex& other) const;
  MultiIndex gcd(const MultiIndex& other) const;

  /// Lexicographic comparison with x_1 most significant; returns <0, 0, >0.
  int lex_compare(const MultiIndex& other) const;
  /// Degree first, then lex.
  int grlex_compare(const MultiIndex& other) const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.size_ == b.size_ && a.exps_ == b.exps_;
  }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> exps_{};
  std::uint8_t size_ = 0;
  std::uint32_t degree_ = 0;
};

/// All alpha in d variables with lo <= |alpha| <= hi, ordered by degree
/// ascending and, within a degree, lex descending (x_1 highest).
std::vector<MultiIndex> multi_indices_in_range(std::size_t d, unsigned lo, unsigned hi);

/// All exponent vectors of total degree exactly k, lex descending.
std::vector<MultiIndex> multi_indices_of_degree(std::size_t d, unsigned k);

}  // namespace hjac

template <>
struct std::hash<hjac::MultiIndex> {
  std::size_t operator()(const hjac::MultiIndex& m) const noexcept { return m.hash(); }
};
