#include <algorithm>
#include <limits>
#include <set>
#include <utility>

#include "hjac/ideal.hpp"

namespace hjac {

namespace {

// Term list sorted descending for the working order; front() leads.
using Terms = std::vector<Term>;

struct Element {
  Terms terms;
  unsigned max_degree = 0;

  const MultiIndex& lead() const { return terms.front().mono; }
  int ecart() const { return static_cast<int>(max_degree) - static_cast<int>(lead().degree()); }
};

unsigned max_degree_of(const Terms& t) {
  unsigned m = 0;
  for (const auto& term : t) m = std::max(m, term.mono.degree());
  return m;
}

class Engine {
 public:
  Engine(const RingPtr& ring, MonomialOrder order)
      : ring_(ring), field_(ring->field()), order_(order), d_(ring->nvars()) {}

  Terms to_terms(const Polynomial& f) const {
    Terms t = f.terms();
    if (order_.is_local()) {
      std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) {
        return order_.compare(a.mono, b.mono) > 0;
      });
    }
    return t;
  }

  Polynomial to_polynomial(Terms t) const { return Polynomial::from_terms(ring_, std::move(t)); }

  Element make_element(Terms t) const {
    make_monic(t);
    Element e{std::move(t), 0};
    e.max_degree = max_degree_of(e.terms);
    return e;
  }

  void make_monic(Terms& t) const {
    if (t.empty() || field_.is_one(t.front().coeff)) return;
    Scalar inv = field_.inv(t.front().coeff);
    for (auto& term : t) term.coeff = field_.mul(term.coeff, inv);
  }

  // h - c * x^shift * g, merged in order.
  Terms axpy(const Terms& h, const Scalar& c, const MultiIndex& shift, const Terms& g) const {
    Terms out;
    out.reserve(h.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < h.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(h[i++]);
        continue;
      }
      MultiIndex m = g[j].mono + shift;
      int cmp = i == h.size() ? -1 : order_.compare(h[i].mono, m);
      if (cmp > 0) {
        out.push_back(h[i++]);
      } else if (cmp < 0) {
        out.push_back({m, field_.neg(field_.mul(c, g[j].coeff))});
        ++j;
      } else {
        Scalar s = field_.sub(h[i].coeff, field_.mul(c, g[j].coeff));
        if (!Field::is_zero(s)) out.push_back({m, std::move(s)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Cancels the leading term of h against g.
  Terms reduce_lead(const Terms& h, const Terms& g) const {
    Scalar c = field_.div(h.front().coeff, g.front().coeff);
    return axpy(h, c, h.front().mono - g.front().mono, g);
  }

  // Drops terms of degree >= bound; only meaningful for the local order,
  // where degrees are nondecreasing along the list.
  static void truncate(Terms& t, std::optional<unsigned> bound) {
    if (!bound) return;
    auto it = std::find_if(t.begin(), t.end(), [&](const Term& x) { return x.mono.degree() >= *bound; });
    t.erase(it, t.end());
  }

  // Same, but the leading term is kept: a minimal lead may itself be a pure
  // power of degree >= bound.
  static void truncate_tail(Terms& t, std::optional<unsigned> bound) {
    if (!bound || t.empty()) return;
    auto it = std::find_if(t.begin() + 1, t.end(), [&](const Term& x) { return x.mono.degree() >= *bound; });
    t.erase(it, t.end());
  }

  // Mora's weak normal form: reducers of minimal ecart; h is added to the
  // reducer set whenever the chosen reducer has larger ecart.
  Terms mora_normal_form(Terms h, const std::vector<Element>& basis, std::optional<unsigned> corner) const {
    std::vector<Element> extra;
    while (true) {
      truncate(h, corner);
      if (h.empty()) return h;
      const MultiIndex& lead = h.front().mono;
      const Element* best = nullptr;
      auto consider = [&](const Element& g) {
        if (g.lead().divides(lead) && (!best || g.ecart() < best->ecart())) best = &g;
      };
      for (const auto& g : basis) consider(g);
      for (const auto& g : extra) consider(g);
      if (!best) return h;
      const int h_ecart = static_cast<int>(max_degree_of(h)) - static_cast<int>(lead.degree());
      if (best->ecart() > h_ecart) {
        // `best` may point into `extra`; reduce before growing it.
        Terms next = reduce_lead(h, best->terms);
        extra.push_back(make_element(std::move(h)));
        h = std::move(next);
      } else {
        h = reduce_lead(h, best->terms);
      }
    }
  }

  // Top reduction for a global (well-)order.
  Terms global_normal_form(Terms h, const std::vector<Element>& basis) const {
    Terms rest;
    while (!h.empty()) {
      const Element* red = nullptr;
      for (const auto& g : basis) {
        if (g.lead().divides(h.front().mono)) {
          red = &g;
          break;
        }
      }
      if (red) {
        h = reduce_lead(h, red->terms);
      } else {
        rest.push_back(std::move(h.front()));
        h.erase(h.begin());
      }
    }
    return rest;
  }

  Terms normal_form(Terms h, const std::vector<Element>& basis, std::optional<unsigned> corner) const {
    return order_.is_local() ? mora_normal_form(std::move(h), basis, corner)
                             : global_normal_form(std::move(h), basis);
  }

  // Reduces every non-leading term by the given basis. For the local order
  // this terminates only together with truncation at `corner`.
  Terms tail_reduce(Terms h, const std::vector<Element>& basis, std::optional<unsigned> corner) const {
    truncate_tail(h, corner);
    std::size_t p = 1;
    while (p < h.size()) {
      const Element* red = nullptr;
      for (const auto& g : basis) {
        if (g.lead().divides(h[p].mono)) {
          red = &g;
          break;
        }
      }
      if (!red) {
        ++p;
        continue;
      }
      Scalar c = field_.div(h[p].coeff, red->terms.front().coeff);
      h = axpy(h, c, h[p].mono - red->lead(), red->terms);
      truncate_tail(h, corner);
    }
    return h;
  }

  const RingPtr& ring() const { return ring_; }
  MonomialOrder order() const { return order_; }
  std::size_t nvars() const { return d_; }

 private:
  RingPtr ring_;
  const Field& field_;
  MonomialOrder order_;
  std::size_t d_;
};

// Tracks the smallest pure powers among leading monomials.
class CornerTracker {
 public:
  explicit CornerTracker(std::size_t d) : pure_(d, kNone) {}

  void add(const MultiIndex& lead) {
    std::size_t var = pure_.size();
    for (std::size_t i = 0; i < lead.size(); ++i) {
      if (lead[i] == 0) continue;
      if (var != pure_.size()) return;  // mixed monomial
      var = i;
    }
    if (var == pure_.size()) return;  // constant handled by the caller
    pure_[var] = std::min(pure_[var], lead[var]);
  }

  // N = sum (a_i - 1) + 1: every monomial of degree >= N is divisible by
  // some x_i^{a_i}.
  std::optional<unsigned> bound() const {
    unsigned n = 1;
    for (unsigned a : pure_) {
      if (a == kNone) return std::nullopt;
      n += a - 1;
    }
    return n;
  }

  const std::vector<unsigned>& pure_powers() const { return pure_; }

 private:
  static constexpr unsigned kNone = std::numeric_limits<unsigned>::max();
  std::vector<unsigned> pure_;
};

struct Pair {
  std::size_t i, j;
  MultiIndex lcm;
};

}  // namespace

StandardBasis compute_standard_basis(const RingPtr& ring, std::span<const Polynomial> generators,
                                     MonomialOrder order, const BasisOptions& options) {
  Engine eng(ring, order);
  const bool local = order.is_local();
  auto unit_basis = [&] {
    return StandardBasis(ring, order, {Polynomial::constant(ring, 1)}, true, local ? std::optional<unsigned>(1) : std::nullopt);
  };

  std::vector<Element> basis;
  CornerTracker corner_tracker(ring->nvars());
  std::optional<unsigned> corner;

  // Work queue: input generators (i == kInput, j indexes `inputs`) first,
  // then s-pairs (i < j, indices into `basis`), smallest lcm degree first.
  // Each input is reduced against the elements inserted before it, so large
  // redundant generator lists cost one normal form each instead of a
  // quadratic number of pairs.
  constexpr std::size_t kInput = std::numeric_limits<std::size_t>::max();
  auto item_less = [&](const Pair& a, const Pair& b) {
    const bool ai = a.i == kInput, bi = b.i == kInput;
    if (ai != bi) return ai;
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    if (int c = order.compare(a.lcm, b.lcm); c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };
  std::set<Pair, decltype(item_less)> queue(item_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::vector<Terms> inputs;

  auto insert = [&](Terms t) -> bool {
    Element e = eng.make_element(std::move(t));
    if (e.lead().is_zero()) return false;  // unit
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      queue.insert({i, k, basis[i].lead().lcm(e.lead())});
      pending.insert({i, k});
    }
    basis.push_back(std::move(e));
    if (local && options.use_corner) {
      corner_tracker.add(basis.back().lead());
      corner = corner_tracker.bound();
    }
    return true;
  };

  for (const auto& g : generators) {
    require_same_ring(ring, g.ring(), "standard basis");
    if (g.is_zero()) continue;
    Terms t = eng.to_terms(g);
    if (t.front().mono.is_zero()) return unit_basis();
    queue.insert({kInput, inputs.size(), t.front().mono});
    inputs.push_back(std::move(t));
  }

  while (!queue.empty()) {
    Pair pr = *queue.begin();
    queue.erase(queue.begin());
    const bool is_input = pr.i == kInput;
    if (!is_input) pending.erase({pr.i, pr.j});

    if (corner && pr.lcm.degree() >= *corner) continue;
    Terms s;
    if (is_input) {
      s = std::move(inputs[pr.j]);
    } else {
      if (options.use_criteria) {
        if (basis[pr.i].lead().coprime(basis[pr.j].lead())) continue;
        bool chain = false;
        for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
          if (k == pr.i || k == pr.j || !basis[k].lead().divides(pr.lcm)) continue;
          auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
          chain = !pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k));
        }
        if (chain) continue;
      }
      const Element& gi = basis[pr.i];
      const Element& gj = basis[pr.j];
      // Both elements are monic: s = x^(l - lead_i) g_i - x^(l - lead_j) g_j.
      s = eng.axpy(Terms{}, -1, pr.lcm - gi.lead(), gi.terms);
      s = eng.axpy(s, 1, pr.lcm - gj.lead(), gj.terms);
    }
    Terms h = eng.normal_form(std::move(s), basis, corner);
    if (h.empty()) continue;
    if (!insert(std::move(h))) return unit_basis();
  }

  // Minimalize: keep elements whose lead is not divisible by another lead
  // (first one wins among equal leads).
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !basis[j].lead().divides(basis[i].lead())) continue;
      redundant = basis[j].lead() != basis[i].lead() || j < i;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<Element> minimal;
  for (std::size_t i : keep) minimal.push_back(std::move(basis[i]));
  std::sort(minimal.begin(), minimal.end(), [&](const Element& a, const Element& b) {
    return order.less(a.lead(), b.lead());
  });

  if (local && options.use_corner) {
    // Recompute from the minimal leads; equals the running value.
    CornerTracker final_tracker(ring->nvars());
    for (const auto& e : minimal) final_tracker.add(e.lead());
    corner = final_tracker.bound();
  }
  const bool canonical = !local || corner.has_value();

  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (const auto& e : minimal) {
    Terms t = canonical ? eng.tail_reduce(e.terms, minimal, corner) : e.terms;
    out.push_back(eng.to_polynomial(std::move(t)));
  }
  return StandardBasis(ring, order, std::move(out), canonical, local ? corner : std::nullopt);
}

StandardBasis::StandardBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> elements,
                             bool canonical, std::optional<unsigned> corner_bound)
    : ring_(std::move(ring)),
      order_(order),
      elements_(std::move(elements)),
      canonical_(canonical),
      corner_(corner_bound) {}

std::vector<MultiIndex> StandardBasis::leading_monomials() const {
  std::vector<MultiIndex> out;
  for (const auto& g : elements_) out.push_back(g.leading_term(order_).mono);
  return out;
}

bool StandardBasis::is_unit_ideal() const {
  return elements_.size() == 1 && elements_.front().is_constant();
}

Polynomial StandardBasis::normal_form(const Polynomial& f) const {
  require_same_ring(ring_, f.ring(), "normal form");
  if (f.is_zero() || elements_.empty()) return f;
  if (is_unit_ideal()) return Polynomial(ring_);
  Engine eng(ring_, order_);
  std::vector<Element> reducers;
  for (const auto& g : elements_) reducers.push_back(eng.make_element(eng.to_terms(g)));
  return eng.to_polynomial(eng.normal_form(eng.to_terms(f), reducers, corner_));
}

QuotientDimension StandardBasis::quotient_dimension() const {
  if (!order_.is_local()) throw DomainError("quotient dimension needs the local order");
  if (is_unit_ideal()) return QuotientDimension::finite(0);
  const std::size_t d = ring_->nvars();
  CornerTracker tracker(d);
  const auto leads = leading_monomials();
  for (const auto& m : leads) tracker.add(m);
  if (!tracker.bound()) return QuotientDimension::infinite();
  const auto& box = tracker.pure_powers();
  // Count monomials inside the box prod [0, a_i) not divisible by a lead.
  std::uint64_t count = 0;
  MultiIndex cur(d);
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (i == d) {
      for (const auto& m : leads) {
        if (m.divides(cur)) return;
      }
      ++count;
      return;
    }
    for (unsigned e = 0; e < box[i]; ++e) {
      cur.set(i, e);
      self(self, i + 1);
    }
    cur.set(i, 0);
  };
  walk(walk, 0);
  return QuotientDimension::finite(count);
}

}  // namespace hjac
