#include "hjac/algebras.hpp"

namespace hjac {

namespace {

void require_nonzero(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("f must be nonzero");
}

Ideal principal(const Polynomial& f) { return Ideal(f.ring(), {f}); }

}  // namespace

Ideal nash_ideal_m(const Polynomial& f, unsigned n) { return higher_jacobian_ideal(f, n); }

Ideal nash_ideal_t(const Polynomial& f, unsigned n) {
  return ideal_sum(principal(f), higher_jacobian_ideal(f, n));
}

Ideal tjurina_ideal(const Polynomial& f, unsigned k) {
  require_nonzero(f);
  return ideal_sum(principal(f), ideal_product(maximal_ideal_power(f.ring(), k), jacobian_ideal(f)));
}

LocalAlgebra nash_algebra_m(const Polynomial& f, unsigned n) { return LocalAlgebra(nash_ideal_m(f, n)); }
LocalAlgebra nash_algebra_t(const Polynomial& f, unsigned n) { return LocalAlgebra(nash_ideal_t(f, n)); }
LocalAlgebra tjurina_algebra(const Polynomial& f, unsigned k) { return LocalAlgebra(tjurina_ideal(f, k)); }

QuotientDimension tjurina_number(const Polynomial& f) { return tjurina_ideal(f, 0).dimension(); }

unsigned gp_bound(const QuotientDimension& tau, unsigned mt, unsigned characteristic,
                  bool assert_algebraically_closed) {
  if (!tau.is_finite()) throw DomainError("the determinacy bound needs a finite Tjurina number");
  if (mt < 2) throw DomainError("the determinacy bound needs mt(f) >= 2");
  if (characteristic == 0) return assert_algebraically_closed ? 0 : 1;
  if (2 * tau.value() + 4 < 2 * std::uint64_t{mt}) throw DomainError("tau is too small for mt(f); not a singularity germ");
  return static_cast<unsigned>(2 * tau.value() + 4 - 2 * mt);
}

InclusionReport check_inclusions(const Polynomial& f, unsigned n) {
  require_nonzero(f);
  if (n < 2) throw DomainError("the inclusion checks need n >= 2");
  const unsigned mt = multiplicity(f);
  if (mt < 2) throw DomainError("the inclusion checks need mt(f) >= 2");
  const std::size_t d = f.nvars();
  const RingPtr& ring = f.ring();

  const Ideal jn = higher_jacobian_ideal(f, n);
  const Ideal jn_prev = higher_jacobian_ideal(f, n - 1);
  const Ideal j1 = jacobian_ideal(f);
  const Ideal m_j1_sq = ideal_product(maximal_ideal_power(ring, 1), ideal_power(j1, 2));
  const Ideal fp = principal(f);

  InclusionReport r{};
  r.power_exponent = static_cast<unsigned>(binomial(d - 2 + n, d - 1).get_ui());
  r.step_down = ideal_contains(jn_prev, jn);
  r.into_m_j1_sq = ideal_contains(m_j1_sq, jn);
  r.ii_expected = d >= 3 || n >= 3 || mt >= 3;
  r.with_f = ideal_contains(ideal_sum(fp, m_j1_sq), ideal_sum(fp, jn));
  r.power_of_j1 = ideal_contains(ideal_power(j1, r.power_exponent), jn);
  return r;
}

InvariantReport invariant_report(const Polynomial& f, unsigned n_max, unsigned k_max) {
  require_nonzero(f);
  InvariantReport r{f, f.field().characteristic(), multiplicity(f), tjurina_number(f), {}, {}, std::nullopt};
  for (unsigned n = 1; n <= n_max; ++n) r.dim_nash_t.emplace(n, nash_ideal_t(f, n).dimension());
  for (unsigned k = 0; k <= k_max; ++k) r.dim_tjurina.emplace(k, tjurina_ideal(f, k).dimension());
  if (r.tau.is_finite() && r.mt >= 2) r.gp_bound = gp_bound(r.tau, r.mt, r.characteristic);
  return r;
}

}  // namespace hjac
