#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hjac/algebras.hpp"
#include "hjac/ideal.hpp"
#include "hjac/polynomial.hpp"

namespace hjac {

/// Polynomial substitution x_i -> phi_i. It is an automorphism of the local
/// ring (and of its completion) when every phi_i vanishes at the origin and
/// the linear parts form an invertible matrix.
class LocalAutomorphism {
 public:
  /// Throws DomainError on a wrong image count or mixed rings; validity is
  /// checked separately by `is_valid()`.
  LocalAutomorphism(RingPtr ring, std::vector<Polynomial> images);
  static LocalAutomorphism identity(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& images() const { return images_; }

  bool is_valid() const;
  Polynomial apply(const Polynomial& f) const { return substitute(f, images_); }
  /// (this o other)(f) = this(other(f)), i.e. x_i -> other_i(phi).
  LocalAutomorphism compose(const LocalAutomorphism& other) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> images_;
};

/// u with u(0) != 0. Throws DomainError otherwise.
class UnitElement {
 public:
  explicit UnitElement(Polynomial u);
  const Polynomial& value() const { return u_; }

 private:
  Polynomial u_;
};

/// g = u * phi(f).
struct ContactTransform {
  LocalAutomorphism phi;
  UnitElement unit;
};

bool validate_automorphism(const LocalAutomorphism& phi);

/// Ideal generated by phi(g) for the generators g of I. Throws DomainError
/// for an invalid automorphism.
Ideal apply_to_ideal(const LocalAutomorphism& phi, const Ideal& ideal);

Polynomial apply_contact(const Polynomial& f, const ContactTransform& t);

/// phi(J_n(f)) == J_n(phi(f)).
bool check_right_covariance(const Polynomial& f, const LocalAutomorphism& phi, unsigned n);
/// (f) + J_n(f) == (uf) + J_n(uf).
bool check_unit_stability(const Polynomial& f, const UnitElement& u, unsigned n);
/// phi((f) + J_n(f)) == (g) + J_n(g) for g = u phi(f).
bool check_contact_invariance(const Polynomial& f, const ContactTransform& t, unsigned n);

/// g - f in m j(f)^2. Throws DomainError when j(f) is the unit ideal.
bool samuel_hypothesis(const Polynomial& f, const Polynomial& g);

/// Parameters of the random generators: coefficients drawn from
/// [-coeff_bound, coeff_bound], tails of degree <= max_degree.
struct RandomConfig {
  int coeff_bound = 2;
  unsigned max_degree = 3;
  unsigned max_tail_terms = 3;
};

/// Deterministic for a fixed seed. Linear part is rejection-sampled until
/// invertible; max_degree = 1 gives a purely linear automorphism.
LocalAutomorphism random_automorphism(const RingPtr& ring, std::uint64_t seed,
                                      const RandomConfig& config = {});
/// Nonzero constant plus a random tail of degree 1..max_degree.
UnitElement random_unit(const RingPtr& ring, std::uint64_t seed, const RandomConfig& config = {});

/// One randomized verification: kind is "right-covariance", "unit-stability"
/// or "contact-invariance".
struct HarnessCheck {
  std::string kind;
  std::uint64_t seed;
  Polynomial f;
  unsigned n;
  bool pass;
};

struct HarnessReport {
  std::vector<HarnessCheck> checks;

  bool all_pass() const;
  std::vector<HarnessCheck> failures() const;
};

struct HarnessConfig {
  unsigned covariance_trials = 50;
  unsigned unit_trials = 50;
  unsigned contact_trials = 25;
  unsigned max_n = 2;
  RandomConfig random;
};

/// Runs the three invariance checks on seeded random transforms. Trial t of
/// each kind uses seed `seed + t`, the germ germs[(seed + t) % size] and
/// n = 1 + t % max_n. Contact checks also compare dim T_n(f) and dim T_n(g).
HarnessReport run_invariance_harness(const std::vector<Polynomial>& germs, std::uint64_t seed,
                                     const HarnessConfig& config = {});

}  // namespace hjac
