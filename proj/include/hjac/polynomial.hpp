#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hjac/field.hpp"
#include "hjac/multi_index.hpp"
#include "hjac/ring.hpp"

namespace hjac {

struct Term {
  MultiIndex mono;
  Scalar coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.mono == b.mono && a.coeff == b.coeff;
  }
};

/// Sparse polynomial over a RingContext.
///
/// Canonical form: no zero coefficients, terms sorted by graded-lex order
/// descending. Two polynomials over the same ring are equal iff their term
/// lists are equal. Values are immutable through the public interface.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial monomial(RingPtr ring, const MultiIndex& mono, const Scalar& c = 1);
  /// Combines like terms, reduces coefficients into the field and sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  std::size_t nvars() const { return ring_->nvars(); }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_zero()); }
  /// The value at the origin.
  Scalar constant_term() const;
  Scalar coefficient(const MultiIndex& mono) const;

  /// Requires a nonzero polynomial.
  unsigned total_degree() const;
  unsigned lowest_degree() const;

  /// Leading term for the given order; requires a nonzero polynomial.
  const Term& leading_term(MonomialOrder order) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  Polynomial scaled(const Scalar& c) const;
  Polynomial shifted(const MultiIndex& mono) const;
  /// Throws DomainError for a negative exponent.
  Polynomial pow(long exponent) const;

  /// Divides by the leading coefficient for `order`. Zero stays zero.
  Polynomial monic(MonomialOrder order) const;
  /// Drops every term of total degree >= bound.
  Polynomial truncated(unsigned bound) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Hasse (divided-power) derivative: D^gamma(x^beta) = prod_i C(beta_i, gamma_i) x^(beta - gamma).
/// Equals the classical d^gamma f / gamma! in characteristic 0.
Polynomial hasse_derivative(const Polynomial& f, const MultiIndex& gamma);

/// Iterated classical partial derivative d^gamma f.
Polynomial classical_derivative(const Polynomial& f, const MultiIndex& gamma);

/// First partial d f / d x_i.
Polynomial partial(const Polynomial& f, std::size_t i);

/// f(images[0], ..., images[d-1]), computed exactly.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

/// Lowest total degree of a term: the largest k with f in m^k.
/// Throws DomainError for the zero polynomial.
unsigned multiplicity(const Polynomial& f);

}  // namespace hjac
