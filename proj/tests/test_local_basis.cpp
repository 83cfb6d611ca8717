#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hjac/jacobian.hpp"
#include "hjac/polynomial_io.hpp"
#include "oracles.hpp"

using namespace hjac;

namespace {

RingPtr ring(std::size_t d, unsigned p = 0) {
  static const std::vector<std::string> names{"x", "y", "z", "w"};
  return RingContext::make(std::vector<std::string>(names.begin(), names.begin() + d), Field::of_characteristic(p));
}

Ideal I(const char* text, const RingPtr& r) { return Ideal(r, parse_polynomial_list(text, r)); }
Polynomial P(const char* text, const RingPtr& r) { return parse_polynomial(text, r); }

std::vector<Polynomial> texts(const StandardBasis& b) { return b.elements(); }

}  // namespace

TEST(StandardBasis, Examples) {
  auto r2 = ring(2);
  auto b = standard_basis(I("(x)", r2));
  ASSERT_EQ(b.elements().size(), 1u);
  EXPECT_EQ(b.elements()[0], P("x", r2));

  EXPECT_TRUE(ideal_equal(I("(x^2+y^2, x^3, x^2*y, x*y^2, y^3)", r2), I("(x^2+y^2, x^3, y^3)", r2)));
  EXPECT_EQ(standard_basis(I("(x^2+y^2, x^3, x^2*y, x*y^2, y^3)", r2)),
            standard_basis(I("(x^2+y^2, x^3, y^3)", r2)));

  auto r1 = ring(1);
  auto b1 = standard_basis(I("(x - x^2)", r1));
  ASSERT_EQ(b1.elements().size(), 1u);
  EXPECT_EQ(b1.elements()[0], P("x", r1));
  EXPECT_TRUE(b1.is_canonical());
}

TEST(StandardBasis, EdgeIdeals) {
  auto r2 = ring(2);
  EXPECT_TRUE(standard_basis(Ideal::zero(r2)).is_zero_ideal());
  auto unit = standard_basis(I("(1 + x, x*y)", r2));
  EXPECT_TRUE(unit.is_unit_ideal());
  EXPECT_EQ(unit.elements(), std::vector<Polynomial>{Polynomial::constant(r2, 1)});
  EXPECT_EQ(quotient_dimension(I("(1+x)", r2)).value(), 0u);
  EXPECT_FALSE(quotient_dimension(Ideal::zero(r2)).is_finite());
  // Not a unit in the polynomial ring, but a unit locally.
  EXPECT_TRUE(ideal_equal(I("(x + 1)", r2), Ideal::unit(r2)));
  EXPECT_TRUE(I("(x, x+1)", r2).basis(MonomialOrder::global()).is_unit_ideal());
  EXPECT_FALSE(I("(x*y + 1)", r2).basis(MonomialOrder::global()).is_unit_ideal());
}

TEST(StandardBasis, GlobalOrderReducedGroebnerBasis) {
  auto r2 = ring(2);
  auto b = I("(x^2, x*y + y^2)", r2).basis(MonomialOrder::global());
  EXPECT_EQ(texts(b), (std::vector<Polynomial>{P("x*y + y^2", r2), P("x^2", r2), P("y^3", r2)}));
  EXPECT_TRUE(b.is_canonical());
  EXPECT_TRUE(b.reduces_to_zero(P("x^2*y^5 - 3*y^4", r2)));
  EXPECT_FALSE(b.reduces_to_zero(P("y^2", r2)));
}

TEST(NormalForm, Examples) {
  auto r2 = ring(2);
  Ideal j = I("(x^2+y^2, x^3, y^3)", r2);
  // Cofactor witness: x^2 y = y (x^2 + y^2) - y^3.
  EXPECT_EQ(P("y", r2) * P("x^2+y^2", r2) - P("y^3", r2), P("x^2*y", r2));
  EXPECT_TRUE(normal_form(P("x^2*y", r2), j.basis()).is_zero());
  for (const auto& g : j.basis().elements()) EXPECT_TRUE(normal_form(g, j.basis()).is_zero());
  EXPECT_EQ(normal_form(Polynomial::constant(r2, 1), I("(x, y)", r2).basis()), Polynomial::constant(r2, 1));
  EXPECT_FALSE(normal_form(P("x*y", r2), j.basis()).is_zero());
}

TEST(Membership, Examples) {
  auto r2 = ring(2);
  EXPECT_TRUE(ideal_membership(P("x^3", r2), I("(x^2)", r2)));
  EXPECT_TRUE(ideal_membership(Polynomial(r2), I("(x^2)", r2)));

  auto f3 = ring(2, 3);
  auto gens = parse_polynomial_list("(x^4+y^4, x^9, x^6*y^3, x^3*y^6, y^9)", f3);
  auto oracle_verdict = oracle::local_member(P("x^3", f3), gens);
  ASSERT_TRUE(oracle_verdict.has_value());
  EXPECT_FALSE(*oracle_verdict);
  EXPECT_FALSE(ideal_membership(P("x^3", f3), Ideal(f3, gens)));
}

TEST(Equality, Examples) {
  auto r2 = ring(2);
  EXPECT_TRUE(ideal_equal(I("(x, y)", r2), I("(x+y, y)", r2)));
  EXPECT_TRUE(ideal_equal(I("(x^2+y^2, 2*x, 2*y)", r2), I("(x, y)", r2)));
  EXPECT_FALSE(ideal_equal(I("(x^2)", r2), I("(x^3)", r2)));
  EXPECT_FALSE(ideal_equal(I("(x^2)", r2), I("(x^2, y^5)", r2)));
}

TEST(Containment, Examples) {
  auto r2 = ring(2);
  EXPECT_TRUE(ideal_contains(I("(x)", r2), I("(x^2, x*y)", r2)));
  EXPECT_FALSE(ideal_contains(I("(x^2)", r2), I("(x)", r2)));
  Polynomial f = P("x^3+y^3", r2);
  EXPECT_TRUE(ideal_contains(ideal_power(jacobian_ideal(f), 2), higher_jacobian_ideal(f, 2)));
}

TEST(IdealOps, Examples) {
  auto r2 = ring(2);
  EXPECT_EQ(ideal_sum(I("(x)", r2), I("(y)", r2)).generators(), parse_polynomial_list("x, y", r2));
  EXPECT_TRUE(ideal_equal(ideal_product(I("(x, y)", r2), I("(x, y)", r2)), I("(x^2, x*y, y^2)", r2)));
  EXPECT_EQ(ideal_product(I("(x, y)", r2), I("(x, y)", r2)).generators().size(), 3u);
  EXPECT_EQ(ideal_power(I("(x, y)", r2), 0).generators(), std::vector<Polynomial>{Polynomial::constant(r2, 1)});
  EXPECT_EQ(maximal_ideal_power(r2, 2).generators(), parse_polynomial_list("x^2, x*y, y^2", r2));
  EXPECT_EQ(maximal_ideal_power(ring(1), 3).generators(), parse_polynomial_list("x^3", ring(1)));
  auto r3 = ring(3);
  EXPECT_EQ(maximal_ideal_power(r3, 1).generators(), parse_polynomial_list("x, y, z", r3));
  EXPECT_TRUE(maximal_ideal_power(r3, 0).basis().is_unit_ideal());
}

TEST(Dimension, Examples) {
  auto r2 = ring(2);
  EXPECT_EQ(quotient_dimension(I("(x^2, x*y, y^2)", r2)), QuotientDimension::finite(3));
  EXPECT_EQ(quotient_dimension(I("(x, y)", r2)), QuotientDimension::finite(1));
  EXPECT_EQ(quotient_dimension(I("(x^2)", r2)), QuotientDimension::infinite());
  EXPECT_EQ(quotient_dimension(I("(x^2)", r2)).to_string(), "inf");
}

TEST(LeadingIdeal, Examples) {
  auto r2 = ring(2);
  EXPECT_EQ(leading_ideal(I("(x^2+y^3)", r2)).generators(), parse_polynomial_list("x^2", r2));
  EXPECT_EQ(leading_ideal(I("(x+x^2)", r2)).generators(), parse_polynomial_list("x", r2));
  EXPECT_TRUE(leading_ideal(Ideal::zero(r2)).generators().empty());
}

TEST(Properties, MembershipSoundness) {
  std::mt19937_64 gen(101);
  for (int trial = 0; trial < 60; ++trial) {
    // Even trials are m-primary in up to three variables. Mora's weak normal
    // form can be very slow on ideals of positive dimension, so odd trials
    // stay small.
    const bool primary = trial % 2 == 0;
    const std::size_t d = primary ? 1 + (trial / 2) % 3 : 1 + (trial / 2) % 2;
    const unsigned p = std::vector<unsigned>{0, 3, 5}[(trial / 6) % 3];
    auto r = ring(d, p);
    const unsigned ngens = 1 + gen() % 3;
    std::vector<Polynomial> gens;
    for (unsigned i = 0; i < ngens; ++i) gens.push_back(oracle::random_polynomial(r, gen, primary ? 3 : 2, 1, primary ? 5 : 3));
    if (primary) {
      const Ideal power = maximal_ideal_power(r, 5);
      for (const auto& m : power.generators()) gens.push_back(m);
    }
    Ideal ideal(r, gens);
    Polynomial combo(r);
    for (const auto& g : gens) combo += oracle::random_polynomial(r, gen, 3, 0, 3) * g;
    EXPECT_TRUE(ideal_membership(combo, ideal)) << ideal.to_string() << " " << combo.to_string();
  }
}

TEST(Properties, Canonicality) {
  std::mt19937_64 gen(202);
  for (int trial = 0; trial < 30; ++trial) {
    // Half the trials are made m-primary so that bases are canonical.
    const bool primary = trial % 2 == 0;
    const std::size_t d = primary ? 2 + (trial / 2) % 2 : 2;
    auto r = ring(d, (trial / 2) % 2 ? 5 : 0);
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(oracle::random_polynomial(r, gen, primary ? 3 : 2, 1, primary ? 4 : 3));
    if (primary) {
      const Ideal power = maximal_ideal_power(r, 4);
      for (const auto& m : power.generators()) gens.push_back(m);
    }
    Ideal a(r, gens);
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    shuffled.push_back(gens.front().scaled(3));
    shuffled.push_back(gens.back() + gens.front());
    Ideal b(r, shuffled);
    Ideal c(r, {gens.front() + gens.back(), gens.back()});
    for (std::size_t i = 1; i + 1 < gens.size(); ++i) c = ideal_sum(c, Ideal(r, {gens[i]}));

    EXPECT_TRUE(ideal_equal(a, a));
    EXPECT_TRUE(ideal_equal(a, b));
    EXPECT_TRUE(ideal_equal(b, a));
    EXPECT_TRUE(ideal_equal(b, c));
    EXPECT_TRUE(ideal_equal(a, c));
    if (a.basis().is_canonical()) {
      EXPECT_EQ(a.basis(), b.basis());
      EXPECT_EQ(a.basis(), c.basis());
    }
  }
}

TEST(Properties, UnitAbsorption) {
  std::mt19937_64 gen(303);
  for (int trial = 0; trial < 40; ++trial) {
    auto r = ring(2 + trial % 2, trial % 3 == 0 ? 3 : 0);
    Polynomial f = oracle::random_polynomial(r, gen, 4, 1, 5);
    if (f.is_zero()) continue;
    Polynomial u = Polynomial::constant(r, 1 + static_cast<long>(gen() % 2)) + oracle::random_polynomial(r, gen, 3, 1, 3);
    EXPECT_TRUE(ideal_equal(Ideal(r, {u * f}), Ideal(r, {f}))) << f.to_string() << " " << u.to_string();
  }
}

TEST(Properties, MonomialDimensionOracle) {
  std::mt19937_64 gen(404);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 1 + trial % 3;
    auto r = ring(d);
    std::vector<MultiIndex> monos;
    for (std::size_t i = 0; i < d; ++i) monos.push_back(MultiIndex::unit(d, i, 1 + gen() % 6));
    const unsigned extra = gen() % 5;
    for (unsigned k = 0; k < extra; ++k) {
      MultiIndex m(d);
      for (std::size_t i = 0; i < d; ++i) m.set(i, gen() % 4);
      if (!m.is_zero()) monos.push_back(m);
    }
    std::vector<Polynomial> gens;
    for (const auto& m : monos) gens.push_back(Polynomial::monomial(r, m));
    EXPECT_EQ(quotient_dimension(Ideal(r, gens)).value(), oracle::count_standard_monomials(d, monos));
  }
}

TEST(Properties, LinearAlgebraDimensionOracle) {
  std::mt19937_64 gen(505);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 2 + trial % 2;
    auto r = ring(d, trial % 4 == 1 ? 3 : 0);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < d; ++i) {
      gens.push_back(Polynomial::monomial(r, MultiIndex::unit(d, i, 2 + gen() % 3)) +
                     oracle::random_polynomial(r, gen, 2, 2, 4));
    }
    gens.push_back(oracle::random_polynomial(r, gen, 3, 2, 3));
    Ideal ideal(r, gens);
    auto expected = oracle::local_dimension(r, gens, 14);
    if (!expected) continue;
    ++checked;
    EXPECT_EQ(quotient_dimension(ideal), QuotientDimension::finite(*expected)) << ideal.to_string();
    // Membership agrees with the oracle on random low-degree probes.
    for (int k = 0; k < 4; ++k) {
      Polynomial probe = oracle::random_polynomial(r, gen, 2, 1, 3);
      auto oracle_member = oracle::local_member(probe, gens, 14);
      ASSERT_TRUE(oracle_member.has_value());
      EXPECT_EQ(ideal_membership(probe, ideal), *oracle_member) << probe.to_string() << " in " << ideal.to_string();
    }
  }
  EXPECT_GE(checked, 30);
}

TEST(Properties, CriteriaAndCornerDoNotChangeTheBasis) {
  std::mt19937_64 gen(606);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 2 + trial % 2;
    auto r = ring(d, trial % 3 == 2 ? 5 : 0);
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(oracle::random_polynomial(r, gen, 3, 1, 4));
    const Ideal power = maximal_ideal_power(r, 5);
    for (const auto& m : power.generators()) gens.push_back(m);
    for (auto order : {MonomialOrder::local(), MonomialOrder::global()}) {
      auto fast = compute_standard_basis(r, gens, order);
      auto no_criteria = compute_standard_basis(r, gens, order, BasisOptions{false, true});
      EXPECT_EQ(fast, no_criteria) << order.name();
      // Without truncation tails are not reduced, but the leading ideal and
      // the ideal itself must agree.
      auto no_corner = compute_standard_basis(r, gens, order, BasisOptions{true, false});
      EXPECT_EQ(fast.leading_monomials(), no_corner.leading_monomials()) << order.name();
      for (const auto& g : fast.elements()) EXPECT_TRUE(no_corner.reduces_to_zero(g));
      for (const auto& g : no_corner.elements()) EXPECT_TRUE(fast.reduces_to_zero(g));
    }
  }
}
