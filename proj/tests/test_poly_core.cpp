#include <gtest/gtest.h>

#include <random>

#include "hjac/polynomial_io.hpp"
#include "oracles.hpp"

using namespace hjac;

namespace {

RingPtr ring2(unsigned p = 0) { return RingContext::make({"x", "y"}, Field::of_characteristic(p)); }

Polynomial P(const char* text, const RingPtr& r) { return parse_polynomial(text, r); }

}  // namespace

TEST(Field, RejectsNonPrimeCharacteristic) {
  EXPECT_THROW(Field::prime(4), DomainError);
  EXPECT_THROW(Field::prime(1), DomainError);
  EXPECT_THROW(Field::prime(2147483659ull), DomainError);  // prime, but >= 2^31
  EXPECT_EQ(Field::prime(2147483647ull).characteristic(), 2147483647u);
}

TEST(Field, PrimeFieldArithmetic) {
  Field f = Field::prime(7);
  EXPECT_EQ(f.normalize(Scalar(-1)), 6);
  EXPECT_EQ(f.normalize(Scalar(1, 3)), 5);  // 3 * 5 = 15 = 1 mod 7
  EXPECT_EQ(f.mul(f.inv(3), 3), 1);
  EXPECT_THROW(f.normalize(Scalar(1, 7)), DomainError);
  EXPECT_THROW(f.inv(0), DomainError);
}

TEST(Parse, Examples) {
  auto q = ring2();
  Polynomial f = P("x^3 + y^2", q);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.coefficient({3, 0}), 1);
  EXPECT_EQ(f.coefficient({0, 2}), 1);

  EXPECT_TRUE(P("3*x^2", ring2(3)).is_zero());
  EXPECT_EQ(P("x^4+y^4+x^3", ring2(3)).size(), 3u);
  EXPECT_EQ(P(" 1/2 * x*y - 2/4*y*x ", q), Polynomial(q));
  EXPECT_EQ(P("-x", q), -Polynomial::variable(q, 0));
}

TEST(Parse, Errors) {
  auto q = ring2();
  try {
    P("x + z", q);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
    EXPECT_NE(std::string(e.what()).find("unknown variable"), std::string::npos);
  }
  EXPECT_THROW(P("x / y", q), ParseError);
  EXPECT_THROW(P("1/2*x", ring2(5)), ParseError);
  EXPECT_THROW(P("x^", q), ParseError);
  EXPECT_THROW(P("2x", q), ParseError);
  EXPECT_THROW(P("", q), ParseError);
  EXPECT_THROW(P("x +", q), ParseError);
  EXPECT_THROW(P("1/0", q), ParseError);
}

TEST(Parse, FormatRoundTripProperty) {
  std::mt19937_64 gen(7);
  for (unsigned p : {0u, 2u, 3u, 5u}) {
    auto r = RingContext::make({"x", "y", "z"}, Field::of_characteristic(p));
    for (int trial = 0; trial < 50; ++trial) {
      Polynomial f = oracle::random_polynomial(r, gen, 6, 0, 6);
      if (p == 0 && trial % 3 == 0) f = f.scaled(Scalar(1, 3));
      EXPECT_EQ(parse_polynomial(format_polynomial(f), r), f) << format_polynomial(f);
    }
  }
  EXPECT_EQ(format_polynomial(P("x^2 - 3*y + 1/2", ring2())), "x^2 - 3*y + 1/2");
  EXPECT_EQ(format_polynomial(Polynomial(ring2())), "0");
}

TEST(Arithmetic, Examples) {
  auto q = ring2();
  EXPECT_EQ(P("x+y", q) * P("x-y", q), P("x^2-y^2", q));
  auto f2 = ring2(2);
  EXPECT_EQ(P("x+y", f2).pow(2), P("x^2+y^2", f2));
  EXPECT_EQ(P("x^3+x*y", q) + Polynomial(q), P("x^3+x*y", q));
  EXPECT_THROW(P("x", q).pow(-1), DomainError);
  EXPECT_THROW(P("x", q) + P("x", ring2(3)), DomainError);
  EXPECT_EQ(P("x", q).pow(0), Polynomial::constant(q, 1));
}

TEST(Hasse, Examples) {
  auto q = ring2();
  EXPECT_EQ(hasse_derivative(P("x^3*y", q), {1, 0}), P("3*x^2*y", q));
  EXPECT_TRUE(hasse_derivative(P("x^4", ring2(3)), {2, 0}).is_zero());
  auto f2 = RingContext::make({"x"}, Field::prime(2));
  EXPECT_EQ(hasse_derivative(parse_polynomial("x^2", f2), MultiIndex{2}), Polynomial::constant(f2, 1));
  EXPECT_TRUE(hasse_derivative(P("x*y^2", q), {2, 0}).is_zero());
}

TEST(Hasse, CoefficientMatchesLucasOracle) {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    auto r = RingContext::make({"x"}, Field::prime(p));
    for (unsigned n = 0; n <= 20; ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        Polynomial d = hasse_derivative(Polynomial::monomial(r, MultiIndex{n}), MultiIndex{k});
        EXPECT_EQ(d.coefficient(MultiIndex{n - k}), oracle::lucas_binomial(n, k, p)) << n << " " << k << " " << p;
      }
    }
  }
}

TEST(Hasse, LeibnizRuleProperty) {
  std::mt19937_64 gen(11);
  for (unsigned p : {0u, 2u, 3u, 5u}) {
    auto r = ring2(p);
    for (int trial = 0; trial < 20; ++trial) {
      Polynomial f = oracle::random_polynomial(r, gen, 6, 0, 6);
      Polynomial g = oracle::random_polynomial(r, gen, 6, 0, 6);
      for (const auto& gamma : multi_indices_in_range(2, 0, 3)) {
        Polynomial rhs(r);
        for (const auto& a : multi_indices_in_range(2, 0, gamma.degree())) {
          if (!a.divides(gamma)) continue;
          rhs += hasse_derivative(f, a) * hasse_derivative(g, gamma - a);
        }
        EXPECT_EQ(hasse_derivative(f * g, gamma), rhs);
      }
    }
  }
}

TEST(Hasse, CompositionProperty) {
  std::mt19937_64 gen(12);
  for (unsigned p : {0u, 2u, 3u}) {
    auto r = ring2(p);
    for (int trial = 0; trial < 10; ++trial) {
      Polynomial f = oracle::random_polynomial(r, gen, 6, 0, 8);
      for (const auto& a : multi_indices_in_range(2, 0, 3)) {
        for (const auto& b : multi_indices_in_range(2, 0, 3)) {
          mpz_class c = binomial(a[0] + b[0], a[0]) * binomial(a[1] + b[1], a[1]);
          EXPECT_EQ(hasse_derivative(hasse_derivative(f, b), a), hasse_derivative(f, a + b).scaled(Scalar(c)));
        }
      }
    }
  }
}

TEST(Hasse, AgreesWithClassicalInCharacteristicZero) {
  std::mt19937_64 gen(13);
  auto r = RingContext::make({"x", "y", "z"}, Field::rationals());
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial f = oracle::random_polynomial(r, gen, 6, 0, 6);
    for (const auto& gamma : multi_indices_in_range(3, 0, 3)) {
      mpz_class fact = 1;
      for (std::size_t i = 0; i < 3; ++i) {
        for (unsigned k = 2; k <= gamma[i]; ++k) fact *= k;
      }
      // Classical derivative as iterated first partials.
      Polynomial iter = f;
      for (std::size_t i = 0; i < 3; ++i) {
        for (unsigned k = 0; k < gamma[i]; ++k) iter = partial(iter, i);
      }
      EXPECT_EQ(hasse_derivative(f, gamma).scaled(Scalar(fact)), iter);
      EXPECT_EQ(classical_derivative(f, gamma), iter);
    }
  }
}

TEST(Substitute, Examples) {
  auto q = ring2();
  std::vector<Polynomial> imgs{P("x+y", q), P("y", q)};
  EXPECT_EQ(substitute(P("x^2", q), imgs), P("x^2+2*x*y+y^2", q));
  std::vector<Polynomial> id{P("x", q), P("y", q)};
  EXPECT_EQ(substitute(P("x^3*y - 7*y^2 + 4", q), id), P("x^3*y - 7*y^2 + 4", q));
  std::vector<Polynomial> shear{P("x", q), P("y+x^2", q)};
  EXPECT_EQ(substitute(P("x*y", q), shear), P("x*y+x^3", q));
  std::vector<Polynomial> one{P("x", q)};
  EXPECT_THROW(substitute(P("x", q), one), DomainError);
}

TEST(Multiplicity, Examples) {
  auto q = ring2();
  EXPECT_EQ(multiplicity(P("x^3+x*y", q)), 2u);
  EXPECT_EQ(multiplicity(P("x^2+y^2", q)), 2u);
  EXPECT_EQ(multiplicity(P("1+x", q)), 0u);
  try {
    multiplicity(Polynomial(q));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "multiplicity of zero is undefined");
  }
}

TEST(Multiplicity, AdditiveProperty) {
  std::mt19937_64 gen(14);
  for (unsigned p : {0u, 3u}) {
    auto r = ring2(p);
    for (int trial = 0; trial < 100; ++trial) {
      Polynomial f = oracle::random_polynomial(r, gen, 4, 0, 5);
      Polynomial g = oracle::random_polynomial(r, gen, 4, 0, 5);
      if (f.is_zero() || g.is_zero()) continue;
      EXPECT_EQ(multiplicity(f * g), multiplicity(f) + multiplicity(g));
    }
  }
}

TEST(MultiIndices, Range) {
  auto v = multi_indices_in_range(2, 0, 1);
  EXPECT_EQ(v, (std::vector<MultiIndex>{{0, 0}, {1, 0}, {0, 1}}));
  v = multi_indices_in_range(2, 1, 2);
  EXPECT_EQ(v, (std::vector<MultiIndex>{{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}));
  v = multi_indices_in_range(1, 1, 3);
  EXPECT_EQ(v, (std::vector<MultiIndex>{MultiIndex{1}, MultiIndex{2}, MultiIndex{3}}));
  for (std::size_t d = 1; d <= 4; ++d) {
    for (unsigned lo = 0; lo <= 3; ++lo) {
      for (unsigned hi = lo; hi <= 4; ++hi) {
        mpz_class expect = binomial(d + hi, d) - (lo == 0 ? mpz_class(0) : binomial(d + lo - 1, d));
        EXPECT_EQ(multi_indices_in_range(d, lo, hi).size(), expect.get_ui());
      }
    }
  }
}

TEST(MultiIndices, PartialOrder) {
  MultiIndex a{2, 1}, b{1, 1};
  EXPECT_TRUE(a.strictly_dominates(b));
  EXPECT_FALSE(a.strictly_dominates(a));
  EXPECT_FALSE(MultiIndex({2, 0}).strictly_dominates(MultiIndex{0, 1}));
}

TEST(Orders, LeadingTerms) {
  auto q = ring2();
  Polynomial f = P("x^2 + y^3 + x*y^5", q);
  EXPECT_EQ(f.leading_term(MonomialOrder::local()).mono, (MultiIndex{2, 0}));
  EXPECT_EQ(f.leading_term(MonomialOrder::global()).mono, (MultiIndex{1, 5}));
  Polynomial g = P("y^2 + x*y + 1", q);
  EXPECT_EQ(g.leading_term(MonomialOrder::local()).mono, (MultiIndex{0, 0}));
  EXPECT_EQ(P("x*y + y^2", q).leading_term(MonomialOrder::local()).mono, (MultiIndex{1, 1}));
}

TEST(Ring, Validation) {
  EXPECT_THROW(RingContext::make({}, Field()), DomainError);
  EXPECT_THROW(RingContext::make({"x", "x"}, Field()), DomainError);
  EXPECT_THROW(RingContext::make({"1x"}, Field()), DomainError);
}
