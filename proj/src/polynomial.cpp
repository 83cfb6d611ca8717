#include "hjac/polynomial.hpp"

#include <algorithm>
#include <map>

#include "hjac/polynomial_io.hpp"

namespace hjac {

namespace {

bool grlex_desc(const Term& a, const Term& b) { return a.mono.grlex_compare(b.mono) > 0; }

// Sorts by grlex descending and merges equal monomials in place.
void canonicalize(const Field& field, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), grlex_desc);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Scalar sum = terms[i].coeff;
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].mono == terms[i].mono; ++j) {
      sum = field.add(sum, terms[j].coeff);
    }
    if (!Field::is_zero(sum)) {
      terms[out].mono = terms[i].mono;
      terms[out].coeff = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  return monomial(std::move(ring), MultiIndex(0), c);
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  return constant(ring, Scalar(c));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  const std::size_t d = ring->nvars();
  if (i >= d) throw DomainError("variable index out of range");
  return monomial(std::move(ring), MultiIndex::unit(d, i));
}

Polynomial Polynomial::monomial(RingPtr ring, const MultiIndex& mono, const Scalar& c) {
  MultiIndex m = mono;
  if (m.size() == 0) m = MultiIndex(ring->nvars());
  if (m.size() != ring->nvars()) throw DomainError("monomial has wrong number of variables");
  Scalar value = ring->field().normalize(c);
  std::vector<Term> terms;
  if (!Field::is_zero(value)) terms.push_back({m, std::move(value)});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const Field& field = ring->field();
  for (auto& t : terms) {
    if (t.mono.size() != ring->nvars()) throw DomainError("term has wrong number of variables");
    t.coeff = field.normalize(t.coeff);
  }
  canonicalize(field, terms);
  return Polynomial(std::move(ring), std::move(terms));
}

Scalar Polynomial::constant_term() const {
  if (terms_.empty() || !terms_.back().mono.is_zero()) return 0;
  return terms_.back().coeff;
}

Scalar Polynomial::coefficient(const MultiIndex& mono) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{mono, 0}, grlex_desc);
  if (it != terms_.end() && it->mono == mono) return it->coeff;
  return 0;
}

unsigned Polynomial::total_degree() const {
  if (terms_.empty()) throw DomainError("degree of the zero polynomial is undefined");
  return terms_.front().mono.degree();
}

unsigned Polynomial::lowest_degree() const {
  if (terms_.empty()) throw DomainError("degree of the zero polynomial is undefined");
  return terms_.back().mono.degree();
}

const Term& Polynomial::leading_term(MonomialOrder order) const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  if (!order.is_local()) return terms_.front();
  // Lowest-degree block sits at the tail; its first entry is lex-largest.
  const unsigned low = terms_.back().mono.degree();
  std::size_t i = terms_.size() - 1;
  while (i > 0 && terms_[i - 1].mono.degree() == low) --i;
  return terms_[i];
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = field().neg(t.coeff);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_, "add");
  const Field& fld = field();
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    int c;
    if (i == terms_.size()) c = -1;
    else if (j == other.terms_.size()) c = 1;
    else c = terms_[i].mono.grlex_compare(other.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(other.terms_[j++]);
    } else {
      Scalar s = fld.add(terms_[i].coeff, other.terms_[j].coeff);
      if (!Field::is_zero(s)) out.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_, "sub");
  return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_, "mul");
  if (is_zero() || other.is_zero()) return Polynomial(ring_);
  const Field& fld = field();
  std::vector<Term> out;
  out.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) out.push_back({a.mono + b.mono, fld.mul(a.coeff, b.coeff)});
  }
  canonicalize(fld, out);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  const Field& fld = field();
  Scalar k = fld.normalize(c);
  if (Field::is_zero(k)) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = fld.mul(t.coeff, k);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::shifted(const MultiIndex& mono) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.mono = t.mono + mono;
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(long exponent) const {
  if (exponent < 0) throw DomainError("negative power");
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic(MonomialOrder order) const {
  if (is_zero()) return *this;
  const Scalar& lc = leading_term(order).coeff;
  if (field().is_one(lc)) return *this;
  return scaled(field().inv(lc));
}

Polynomial Polynomial::truncated(unsigned bound) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.degree() < bound) out.push_back(t);
  }
  return Polynomial(ring_, std::move(out));
}

std::string Polynomial::to_string() const { return format_polynomial(*this); }

Polynomial hasse_derivative(const Polynomial& f, const MultiIndex& gamma) {
  if (gamma.size() != f.nvars()) throw DomainError("derivative index has wrong length");
  const Field& fld = f.field();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (!gamma.divides(t.mono)) continue;
    mpz_class c = 1;
    for (std::size_t i = 0; i < gamma.size(); ++i) c *= binomial(t.mono[i], gamma[i]);
    Scalar k = fld.mul(t.coeff, fld.normalize(Scalar(c)));
    if (!Field::is_zero(k)) out.push_back({t.mono - gamma, std::move(k)});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial classical_derivative(const Polynomial& f, const MultiIndex& gamma) {
  if (gamma.size() != f.nvars()) throw DomainError("derivative index has wrong length");
  const Field& fld = f.field();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (!gamma.divides(t.mono)) continue;
    // Falling factorial beta_i (beta_i - 1) ... (beta_i - gamma_i + 1).
    mpz_class c = 1;
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      for (unsigned k = 0; k < gamma[i]; ++k) c *= t.mono[i] - k;
    }
    Scalar k = fld.mul(t.coeff, fld.normalize(Scalar(c)));
    if (!Field::is_zero(k)) out.push_back({t.mono - gamma, std::move(k)});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial partial(const Polynomial& f, std::size_t i) {
  return hasse_derivative(f, MultiIndex::unit(f.nvars(), i));
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  const std::size_t d = f.nvars();
  if (images.size() != d) {
    throw DomainError("substitution needs " + std::to_string(d) + " images, got " +
                      std::to_string(images.size()));
  }
  RingPtr ring = f.ring();
  for (const auto& g : images) require_same_ring(ring, g.ring(), "substitute");
  if (f.is_zero()) return f;

  std::vector<unsigned> max_exp(d, 0);
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < d; ++i) max_exp[i] = std::max(max_exp[i], t.mono[i]);
  }
  std::vector<std::vector<Polynomial>> powers(d);
  for (std::size_t i = 0; i < d; ++i) {
    powers[i].push_back(Polynomial::constant(ring, 1));
    for (unsigned e = 1; e <= max_exp[i]; ++e) powers[i].push_back(powers[i].back() * images[i]);
  }
  Polynomial result(ring);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(ring, t.coeff);
    for (std::size_t i = 0; i < d; ++i) {
      if (t.mono[i]) term *= powers[i][t.mono[i]];
    }
    result += term;
  }
  return result;
}

unsigned multiplicity(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("multiplicity of zero is undefined");
  return f.lowest_degree();
}

}  // namespace hjac
