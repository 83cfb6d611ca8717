#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "hjac/algebras.hpp"
#include "hjac/corpus.hpp"
#include "hjac/fixtures.hpp"
#include "hjac/polynomial_io.hpp"
#include "oracles.hpp"

using namespace hjac;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::map<std::string, Fixture> fixtures_by_name() {
  std::map<std::string, Fixture> out;
  for (auto& f : corpus_fixtures(1)) out.emplace(f.name, std::move(f));
  return out;
}

const std::map<std::string, Fixture>& fixtures() {
  static const auto all = fixtures_by_name();
  return all;
}

// Runs the named fixtures; each one must finish within `each_limit` seconds.
Outcome run_fixtures(const std::vector<std::string>& names, double each_limit) {
  bool pass = true;
  std::ostringstream detail;
  for (const auto& name : names) {
    const auto t0 = std::chrono::steady_clock::now();
    const FixtureOutcome o = fixtures().at(name).run();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = o.pass && s < each_limit;
    pass = pass && ok;
    detail << (detail.tellp() ? " | " : "") << name << ": " << o.detail;
    if (s >= each_limit) detail << " (over " << each_limit << " s)";
  }
  return {pass, detail.str()};
}

Polynomial oracle_partial(const Polynomial& f, std::size_t i) {
  Polynomial out(f.ring());
  for (const auto& t : f.terms()) {
    if (t.mono[i] == 0) continue;
    MultiIndex m = t.mono;
    m.set(i, t.mono[i] - 1);
    out += Polynomial::monomial(f.ring(), m, t.coeff * t.mono[i]);
  }
  return out;
}

// tau by standard bases and by linear algebra on the monomial basis, against
// the classical values.
Outcome tjurina_oracle() {
  std::vector<std::pair<CorpusEntry, std::uint64_t>> rows;
  for (unsigned k = 1; k <= 6; ++k) rows.emplace_back(a_k(k), k);
  for (const auto& e : singularity_corpus()) {
    if (e.name == "E6") rows.emplace_back(e, 6);
    if (e.name == "E7") rows.emplace_back(e, 7);
    if (e.name == "E8") rows.emplace_back(e, 8);
  }
  std::ostringstream detail;
  bool pass = true;
  for (const auto& [e, expected] : rows) {
    const Polynomial f = corpus_polynomial(e, 0);
    std::vector<Polynomial> gens{f};
    for (std::size_t i = 0; i < f.nvars(); ++i) gens.push_back(oracle_partial(f, i));
    const auto brute = oracle::local_dimension(f.ring(), gens);
    const QuotientDimension tau = tjurina_number(f);
    const bool ok = brute && *brute == expected && tau == QuotientDimension::finite(expected);
    pass = pass && ok;
    detail << (detail.tellp() ? ", " : "") << e.name << "=" << tau.to_string() << (ok ? "" : " MISMATCH");
  }
  return {pass, detail.str()};
}

// Random ideals whose generators x_i^a_i + (higher terms) make them m-primary
// with colength at most prod a_i <= 50.
Outcome random_dimensions() {
  static const std::vector<std::string> names{"x", "y", "z"};
  std::mt19937_64 gen(20261016);
  bool pass = true;
  unsigned checked = 0;
  std::uint64_t largest = 0;
  std::ostringstream bad;
  for (unsigned trial = 0; trial < 25; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const unsigned p = std::vector<unsigned>{0, 5, 7}[(trial / 3) % 3];
    auto r = RingContext::make(std::vector<std::string>(names.begin(), names.begin() + d), Field::of_characteristic(p));
    const unsigned cap = d == 1 ? 50 : d == 2 ? 7 : 3;
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < d; ++i) {
      const unsigned a = 1 + static_cast<unsigned>(gen() % cap);
      gens.push_back(Polynomial::monomial(r, MultiIndex::unit(d, i, a)) + oracle::random_polynomial(r, gen, 2, a + 1, a + 3));
    }
    for (unsigned extra = gen() % 3; extra > 0; --extra) gens.push_back(oracle::random_polynomial(r, gen, 3, 2, 4));
    const auto expected = oracle::local_dimension(r, gens, 60);
    const QuotientDimension got = quotient_dimension(Ideal(r, gens));
    const bool ok = expected && *expected <= 50 && got == QuotientDimension::finite(*expected);
    ++checked;
    if (expected) largest = std::max(largest, *expected);
    if (!ok) {
      pass = false;
      bad << " trial " << trial << ": " << Ideal(r, gens).to_string() << " got " << got.to_string();
    }
  }
  return {pass, std::to_string(checked) + " ideals, largest colength " + std::to_string(largest) + bad.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "explicit (f) + J_2(f) ideals over QQ and GF(5)", 4.0,
       [] {
         return run_fixtures({"explicit-ideals/x^2", "explicit-ideals/ax^2+y^2", "explicit-ideals/ax^2+y^k",
                              "explicit-ideals/xy"},
                             1.0);
       }},
      {2, "matrix shape law and J_1 = ideal of partials", 1.0,
       [] { return run_fixtures({"shape-law", "first-partials"}, 1.0); }},
      {3, "J_n in J_1^C(d-2+n, d-1) on the corpus", 60.0, [] { return run_fixtures({"power-inclusion"}, 60.0); }},
      {4, "J_n in J_(n-1) and (f) + J_2 in (f) + m J_1^2", 60.0, [] { return run_fixtures({"step-down"}, 60.0); }},
      {5, "randomized right, unit and contact invariance", 300.0,
       [] { return run_fixtures({"invariance-harness"}, 300.0); }},
      {6, "x^4 + y^4 vs x^4 + y^4 + x^3 over GF(3)", 5.0, [] { return run_fixtures({"first-blowup-a"}, 5.0); }},
      {7, "x^2 + y^2 vs x^2 - y^2 over QQ", 5.0, [] { return run_fixtures({"first-blowup-b"}, 5.0); }},
      {8, "Tjurina numbers by standard bases and linear algebra", 30.0, tjurina_oracle},
      {9, "closed form for J_2 in the plane", 30.0, [] { return run_fixtures({"closed-form"}, 30.0); }},
      {10, "quotient dimension against linear algebra", 60.0, random_dimensions},
      {11, "determinacy bound on corpus rows", 1.0, [] { return run_fixtures({"gp-bound"}, 1.0); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.pass && s < c.limit;
    if (!pass) ++failures;
    std::ostringstream secs;
    secs.precision(3);
    secs << std::fixed << s;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << secs.str()
              << " s, limit " << c.limit << " s] " << o.detail << "\n";
  }
  std::cout << (11 - failures) << " of 11 criteria passed\n";
  return failures == 0 ? 0 : 1;
}
