#pragma once

#include <map>
#include <optional>
#include <string>

#include "hjac/ideal.hpp"
#include "hjac/jacobian.hpp"

namespace hjac {

/// R / I for an ideal of the local ring, with its k-dimension.
class LocalAlgebra {
 public:
  explicit LocalAlgebra(Ideal defining_ideal) : ideal_(std::move(defining_ideal)) {}

  const Ideal& defining_ideal() const { return ideal_; }
  QuotientDimension dimension() const { return ideal_.dimension(); }

 private:
  Ideal ideal_;
};

/// J_n(f), the defining ideal of the Nash blowup algebra M_n(f).
Ideal nash_ideal_m(const Polynomial& f, unsigned n);
/// (f) + J_n(f), the defining ideal of T_n(f) (calligraphic T).
Ideal nash_ideal_t(const Polynomial& f, unsigned n);
/// (f) + m^k j(f), the defining ideal of the k-th Tjurina algebra T_k(f).
Ideal tjurina_ideal(const Polynomial& f, unsigned k);

LocalAlgebra nash_algebra_m(const Polynomial& f, unsigned n);
LocalAlgebra nash_algebra_t(const Polynomial& f, unsigned n);
LocalAlgebra tjurina_algebra(const Polynomial& f, unsigned k);

/// tau(f) = dim R/((f) + j(f)).
QuotientDimension tjurina_number(const Polynomial& f);

/// The contact-determinacy threshold: 2 tau - 2 mt + 4 in positive
/// characteristic, 1 in characteristic 0, and 0 in characteristic 0 when the
/// caller asserts the field is algebraically closed. Throws DomainError for
/// infinite tau or mt < 2.
unsigned gp_bound(const QuotientDimension& tau, unsigned mt, unsigned characteristic,
                  bool assert_algebraically_closed = false);

/// Inclusion verdicts for J_n(f), n >= 2, mt(f) >= 2:
///   (i)   J_n(f) in J_{n-1}(f)
///   (ii)  J_n(f) in m J_1(f)^2, expected when d >= 3 or n >= 3 or mt >= 3
///   (iii) (f) + J_n(f) in (f) + m J_1(f)^2
///   (iv)  J_n(f) in J_1(f)^C(d-2+n, d-1)
struct InclusionReport {
  bool step_down;       // (i)
  bool into_m_j1_sq;    // (ii)
  bool ii_expected;     // hypotheses of (ii) hold
  bool with_f;          // (iii)
  bool power_of_j1;     // (iv)
  unsigned power_exponent;

  /// All inclusions that are asserted under the hypotheses hold.
  bool all_expected_hold() const { return step_down && with_f && power_of_j1 && (!ii_expected || into_m_j1_sq); }
};

/// Throws DomainError when mt(f) < 2 or n < 2.
InclusionReport check_inclusions(const Polynomial& f, unsigned n);

struct InvariantReport {
  Polynomial f;
  unsigned characteristic;
  unsigned mt;
  QuotientDimension tau;
  std::map<unsigned, QuotientDimension> dim_nash_t;  // n -> dim T_n
  std::map<unsigned, QuotientDimension> dim_tjurina;  // k -> dim T_k
  std::optional<unsigned> gp_bound;
};

/// mt, tau, dim T_n for 1 <= n <= n_max, dim T_k for 0 <= k <= k_max, and
/// the determinacy bound when tau is finite and mt >= 2.
InvariantReport invariant_report(const Polynomial& f, unsigned n_max, unsigned k_max);

}  // namespace hjac
