#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hjac/polynomial.hpp"

namespace hjac {

/// dim_k of a quotient algebra: a finite count or infinity.
class QuotientDimension {
 public:
  static QuotientDimension finite(std::uint64_t n) { return QuotientDimension(n); }
  static QuotientDimension infinite() { return QuotientDimension(); }

  bool is_finite() const { return value_.has_value(); }
  /// Requires is_finite().
  std::uint64_t value() const { return value_.value(); }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend bool operator==(const QuotientDimension&, const QuotientDimension&) = default;

 private:
  QuotientDimension() = default;
  explicit QuotientDimension(std::uint64_t n) : value_(n) {}
  std::optional<std::uint64_t> value_;
};

/// Knobs for the completion procedure. The defaults are what every public
/// entry point uses; the switches exist so tests can cross-check routes.
struct BasisOptions {
  bool use_criteria = true;  ///< product and chain criteria
  bool use_corner = true;    ///< highest-corner truncation for m-primary ideals
};

/// Standard basis of an ideal for a monomial order.
///
/// Elements are monic, minimal (no leading monomial divides another) and
/// sorted by leading monomial ascending. For a global order the basis is the
/// reduced Groebner basis. For the local order it is fully tail-reduced
/// whenever the ideal is m-primary (the tails then live among finitely many
/// standard monomials); otherwise it is minimal and monic but tails are left
/// as computed, and `is_canonical()` is false.
class StandardBasis {
 public:
  StandardBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> elements,
                bool canonical, std::optional<unsigned> corner_bound);

  const RingPtr& ring() const { return ring_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::vector<MultiIndex> leading_monomials() const;

  /// Two canonical bases of the same order are equal iff their ideals are.
  bool is_canonical() const { return canonical_; }
  /// N with m^N contained in the ideal (local order, m-primary ideals only).
  std::optional<unsigned> corner_bound() const { return corner_; }

  bool is_zero_ideal() const { return elements_.empty(); }
  bool is_unit_ideal() const;

  /// Weak normal form (Mora) for the local order, full reduction for a
  /// global one. Zero iff f lies in the ideal.
  Polynomial normal_form(const Polynomial& f) const;
  bool reduces_to_zero(const Polynomial& f) const { return normal_form(f).is_zero(); }

  /// Number of standard monomials; infinite unless every variable has a pure
  /// power among the leading monomials. Local order only.
  QuotientDimension quotient_dimension() const;

  friend bool operator==(const StandardBasis& a, const StandardBasis& b) {
    return a.order_ == b.order_ && a.elements_ == b.elements_;
  }

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
  bool canonical_;
  std::optional<unsigned> corner_;
};

/// Computes the standard basis of the ideal generated by `generators`.
/// Deterministic for fixed input and order; zero input gives the empty basis.
StandardBasis compute_standard_basis(const RingPtr& ring, std::span<const Polynomial> generators,
                                     MonomialOrder order, const BasisOptions& options = {});

/// Finitely generated ideal of the local ring k[x]_(x). All predicates
/// (membership, equality, containment, dimension) refer to the local ring.
/// Copies share the lazily computed local standard basis.
class Ideal {
 public:
  /// Drops zero generators.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  /// Standard basis for the local order, computed once and cached.
  const StandardBasis& basis() const;
  StandardBasis basis(MonomialOrder order) const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  QuotientDimension dimension() const { return basis().quotient_dimension(); }

  /// "(g1, g2, ...)" in the polynomial grammar.
  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::shared_ptr<const StandardBasis> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Makes each generator monic (graded-lex) and drops repeats. Leaves the
/// ideal unchanged.
std::vector<Polynomial> dedupe_generators(std::vector<Polynomial> generators);

StandardBasis standard_basis(const Ideal& ideal, MonomialOrder order = MonomialOrder::local());
Polynomial normal_form(const Polynomial& f, const StandardBasis& basis);
bool ideal_membership(const Polynomial& f, const Ideal& ideal);
bool ideal_equal(const Ideal& a, const Ideal& b);
/// True iff `inner` is contained in `outer`.
bool ideal_contains(const Ideal& outer, const Ideal& inner);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// ideal_power(I, 0) is the unit ideal.
Ideal ideal_power(const Ideal& ideal, unsigned k);
/// m^k: all monomials of degree exactly k (unit ideal for k = 0).
Ideal maximal_ideal_power(const RingPtr& ring, unsigned k);
QuotientDimension quotient_dimension(const Ideal& ideal);
/// Monomial ideal spanned by the leading monomials of the standard basis.
Ideal leading_ideal(const Ideal& ideal, MonomialOrder order = MonomialOrder::local());

}  // namespace hjac
