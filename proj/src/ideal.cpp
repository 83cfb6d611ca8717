#include "hjac/ideal.hpp"

#include <algorithm>
#include <unordered_set>

#include "hjac/polynomial_io.hpp"

namespace hjac {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring(), "ideal");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

const StandardBasis& Ideal::basis() const {
  std::call_once(cache_->once, [this] {
    cache_->basis = std::make_shared<const StandardBasis>(
        compute_standard_basis(ring_, generators_, MonomialOrder::local()));
  });
  return *cache_->basis;
}

StandardBasis Ideal::basis(MonomialOrder order) const {
  if (order.is_local()) return basis();
  return compute_standard_basis(ring_, generators_, order);
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(ring_, f.ring(), "membership");
  if (f.is_zero()) return true;
  return basis().reduces_to_zero(f);
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(ring_, other.ring_, "containment");
  const StandardBasis& b = basis();
  if (b.is_unit_ideal()) return true;
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Polynomial& g) { return b.reduces_to_zero(g); });
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += format_polynomial(generators_[i]);
  }
  return out + ")";
}

std::vector<Polynomial> dedupe_generators(std::vector<Polynomial> generators) {
  struct Hash {
    std::size_t operator()(const Polynomial& p) const {
      std::size_t h = p.size();
      for (const auto& t : p.terms()) h = h * 31 + t.mono.hash();
      return h;
    }
  };
  std::unordered_set<Polynomial, Hash> seen;
  std::vector<Polynomial> out;
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    Polynomial m = g.monic(MonomialOrder::global());
    if (seen.insert(m).second) out.push_back(std::move(m));
  }
  return out;
}

StandardBasis standard_basis(const Ideal& ideal, MonomialOrder order) { return ideal.basis(order); }

Polynomial normal_form(const Polynomial& f, const StandardBasis& basis) { return basis.normal_form(f); }

bool ideal_membership(const Polynomial& f, const Ideal& ideal) { return ideal.contains(f); }

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal equality");
  const StandardBasis& ba = a.basis();
  const StandardBasis& bb = b.basis();
  if (ba.is_canonical() && bb.is_canonical()) return ba == bb;
  if (ba.is_canonical() != bb.is_canonical()) return false;  // m-primary vs not
  if (ba.leading_monomials() != bb.leading_monomials()) return false;
  return a.contains(b) && b.contains(a);
}

bool ideal_contains(const Ideal& outer, const Ideal& inner) { return outer.contains(inner); }

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal sum");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal product");
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), dedupe_generators(std::move(gens)));
}

Ideal ideal_power(const Ideal& ideal, unsigned k) {
  Ideal out = Ideal::unit(ideal.ring());
  for (unsigned i = 0; i < k; ++i) out = ideal_product(out, ideal);
  return out;
}

Ideal maximal_ideal_power(const RingPtr& ring, unsigned k) {
  std::vector<Polynomial> gens;
  for (const auto& m : multi_indices_of_degree(ring->nvars(), k)) gens.push_back(Polynomial::monomial(ring, m));
  return Ideal(ring, std::move(gens));
}

QuotientDimension quotient_dimension(const Ideal& ideal) { return ideal.dimension(); }

Ideal leading_ideal(const Ideal& ideal, MonomialOrder order) {
  StandardBasis b = ideal.basis(order);
  std::vector<Polynomial> gens;
  for (const auto& m : b.leading_monomials()) gens.push_back(Polynomial::monomial(ideal.ring(), m));
  return Ideal(ideal.ring(), std::move(gens));
}

}  // namespace hjac
