#include "hjac/equivalence.hpp"

#include <algorithm>
#include <random>

namespace hjac {

namespace {

// Rank of a square scalar matrix by Gaussian elimination over the field.
bool invertible(std::vector<std::vector<Scalar>> a, const Field& field) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && Field::is_zero(a[pivot][col])) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[col]);
    const Scalar inv = field.inv(a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (Field::is_zero(a[r][col])) continue;
      const Scalar factor = field.mul(a[r][col], inv);
      for (std::size_t c = col; c < n; ++c) a[r][c] = field.sub(a[r][c], field.mul(factor, a[col][c]));
    }
  }
  return true;
}

// Small portable integer draws; std distributions are implementation-defined.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : gen_(seed) {}
  long in_range(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(gen_() % span);
  }

 private:
  std::mt19937_64 gen_;
};

Polynomial random_tail(const RingPtr& ring, Draw& draw, const RandomConfig& cfg, unsigned min_degree) {
  Polynomial out(ring);
  if (cfg.max_degree < min_degree) return out;
  const long terms = draw.in_range(0, cfg.max_tail_terms);
  const auto monos = multi_indices_in_range(ring->nvars(), min_degree, cfg.max_degree);
  for (long t = 0; t < terms; ++t) {
    const auto& m = monos[static_cast<std::size_t>(draw.in_range(0, static_cast<long>(monos.size()) - 1))];
    out += Polynomial::monomial(ring, m, draw.in_range(-cfg.coeff_bound, cfg.coeff_bound));
  }
  return out;
}

}  // namespace

LocalAutomorphism::LocalAutomorphism(RingPtr ring, std::vector<Polynomial> images)
    : ring_(std::move(ring)), images_(std::move(images)) {
  if (images_.size() != ring_->nvars()) {
    throw DomainError("an automorphism needs " + std::to_string(ring_->nvars()) + " images, got " +
                      std::to_string(images_.size()));
  }
  for (const auto& g : images_) require_same_ring(ring_, g.ring(), "automorphism");
}

LocalAutomorphism LocalAutomorphism::identity(const RingPtr& ring) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring->nvars(); ++i) images.push_back(Polynomial::variable(ring, i));
  return LocalAutomorphism(ring, std::move(images));
}

bool LocalAutomorphism::is_valid() const {
  const std::size_t d = ring_->nvars();
  std::vector<std::vector<Scalar>> linear(d, std::vector<Scalar>(d));
  for (std::size_t i = 0; i < d; ++i) {
    if (!Field::is_zero(images_[i].constant_term())) return false;
    for (std::size_t j = 0; j < d; ++j) linear[i][j] = images_[i].coefficient(MultiIndex::unit(d, j));
  }
  return invertible(std::move(linear), ring_->field());
}

LocalAutomorphism LocalAutomorphism::compose(const LocalAutomorphism& other) const {
  require_same_ring(ring_, other.ring_, "compose");
  std::vector<Polynomial> images;
  for (const auto& g : other.images_) images.push_back(apply(g));
  return LocalAutomorphism(ring_, std::move(images));
}

UnitElement::UnitElement(Polynomial u) : u_(std::move(u)) {
  if (Field::is_zero(u_.constant_term())) throw DomainError("a unit must not vanish at the origin");
}

bool validate_automorphism(const LocalAutomorphism& phi) { return phi.is_valid(); }

Ideal apply_to_ideal(const LocalAutomorphism& phi, const Ideal& ideal) {
  if (!phi.is_valid()) throw DomainError("not a local automorphism");
  require_same_ring(phi.ring(), ideal.ring(), "apply to ideal");
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(phi.apply(g));
  return Ideal(ideal.ring(), std::move(gens));
}

Polynomial apply_contact(const Polynomial& f, const ContactTransform& t) {
  if (!t.phi.is_valid()) throw DomainError("not a local automorphism");
  return t.unit.value() * t.phi.apply(f);
}

bool check_right_covariance(const Polynomial& f, const LocalAutomorphism& phi, unsigned n) {
  const Ideal lhs = apply_to_ideal(phi, higher_jacobian_ideal(f, n));
  const Ideal rhs = higher_jacobian_ideal(phi.apply(f), n);
  return ideal_equal(lhs, rhs);
}

bool check_unit_stability(const Polynomial& f, const UnitElement& u, unsigned n) {
  return ideal_equal(nash_ideal_t(f, n), nash_ideal_t(u.value() * f, n));
}

bool check_contact_invariance(const Polynomial& f, const ContactTransform& t, unsigned n) {
  const Polynomial g = apply_contact(f, t);
  return ideal_equal(apply_to_ideal(t.phi, nash_ideal_t(f, n)), nash_ideal_t(g, n));
}

bool samuel_hypothesis(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring(), "samuel");
  if (f.is_zero()) throw DomainError("f must be nonzero");
  const Ideal j = jacobian_ideal(f);
  if (j.basis().is_unit_ideal()) throw DomainError("j(f) is the unit ideal; the hypothesis needs j(f) != R");
  const Ideal target = ideal_product(maximal_ideal_power(f.ring(), 1), ideal_power(j, 2));
  return target.contains(g - f);
}

LocalAutomorphism random_automorphism(const RingPtr& ring, std::uint64_t seed, const RandomConfig& config) {
  if (config.max_degree < 1) throw DomainError("max_degree must be >= 1");
  Draw draw(seed);
  const std::size_t d = ring->nvars();
  while (true) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < d; ++i) {
      Polynomial linear(ring);
      for (std::size_t j = 0; j < d; ++j) {
        linear += Polynomial::monomial(ring, MultiIndex::unit(d, j), draw.in_range(-config.coeff_bound, config.coeff_bound));
      }
      images.push_back(linear + random_tail(ring, draw, config, 2));
    }
    LocalAutomorphism phi(ring, std::move(images));
    if (phi.is_valid()) return phi;
  }
}

UnitElement random_unit(const RingPtr& ring, std::uint64_t seed, const RandomConfig& config) {
  if (config.max_degree < 1) throw DomainError("max_degree must be >= 1");
  Draw draw(seed ^ 0x9e3779b97f4a7c15ull);
  while (true) {
    const long c = draw.in_range(-config.coeff_bound, config.coeff_bound);
    Polynomial u = Polynomial::constant(ring, c);
    if (Field::is_zero(u.constant_term())) continue;
    return UnitElement(u + random_tail(ring, draw, config, 1));
  }
}

bool HarnessReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const HarnessCheck& c) { return c.pass; });
}

std::vector<HarnessCheck> HarnessReport::failures() const {
  std::vector<HarnessCheck> out;
  for (const auto& c : checks) {
    if (!c.pass) out.push_back(c);
  }
  return out;
}

HarnessReport run_invariance_harness(const std::vector<Polynomial>& germs, std::uint64_t seed,
                                     const HarnessConfig& config) {
  if (germs.empty()) throw DomainError("the harness needs at least one germ");
  if (config.max_n < 1) throw DomainError("n must be >= 1");
  HarnessReport report;
  auto pick = [&](std::uint64_t s) -> const Polynomial& { return germs[s % germs.size()]; };
  auto order_of = [&](unsigned t) { return 1 + t % config.max_n; };

  for (unsigned t = 0; t < config.covariance_trials; ++t) {
    const std::uint64_t s = seed + t;
    const Polynomial& f = pick(s);
    const unsigned n = order_of(t);
    const bool pass = check_right_covariance(f, random_automorphism(f.ring(), s, config.random), n);
    report.checks.push_back({"right-covariance", s, f, n, pass});
  }
  for (unsigned t = 0; t < config.unit_trials; ++t) {
    const std::uint64_t s = seed + t;
    const Polynomial& f = pick(s);
    const unsigned n = order_of(t);
    const bool pass = check_unit_stability(f, random_unit(f.ring(), s, config.random), n);
    report.checks.push_back({"unit-stability", s, f, n, pass});
  }
  for (unsigned t = 0; t < config.contact_trials; ++t) {
    const std::uint64_t s = seed + t;
    const Polynomial& f = pick(s);
    const unsigned n = order_of(t);
    ContactTransform tr{random_automorphism(f.ring(), s, config.random), random_unit(f.ring(), s, config.random)};
    bool pass = check_contact_invariance(f, tr, n);
    if (pass) {
      const QuotientDimension a = nash_ideal_t(f, n).dimension();
      const QuotientDimension b = nash_ideal_t(apply_contact(f, tr), n).dimension();
      pass = a == b;
    }
    report.checks.push_back({"contact-invariance", s, f, n, pass});
  }
  return report;
}

}  // namespace hjac
