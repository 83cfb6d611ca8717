#include "hjac/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <optional>

#include "hjac/algebras.hpp"
#include "hjac/corpus.hpp"
#include "hjac/equivalence.hpp"
#include "hjac/fixtures.hpp"
#include "hjac/polynomial_io.hpp"

namespace hjac::cli {

namespace {

using nlohmann::json;

constexpr const char* kBugSuspected = "implementation bug suspected";

struct Config {
  std::string vars;
  int nvars = 0;
  long long characteristic = 0;
  bool json = false;
  std::uint64_t seed = 1;
};

// Signals an exit code together with a message for stderr.
struct Exit {
  int code;
  std::string message;
};

std::vector<std::string> split_vars(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  return out;
}

// Variables from --vars, else the first --nvars of x, y, z, w, else the
// shortest such prefix covering every letter used in the inputs.
RingPtr make_ring(const Config& c, const std::vector<std::string>& inputs) {
  if (c.characteristic < 0) throw DomainError("characteristic must be 0 or a prime");
  const Field field = Field::of_characteristic(static_cast<std::uint64_t>(c.characteristic));
  static const std::string defaults = "xyzw";
  std::vector<std::string> vars;
  if (!c.vars.empty()) {
    vars = split_vars(c.vars);
  } else {
    std::size_t d = static_cast<std::size_t>(c.nvars);
    if (c.nvars < 0 || c.nvars > 4) throw DomainError("--nvars must be between 1 and 4; use --vars for more");
    if (d == 0) {
      d = 1;
      for (const auto& text : inputs) {
        for (char ch : text) {
          const auto pos = defaults.find(ch);
          if (pos != std::string::npos) d = std::max(d, pos + 1);
        }
      }
    }
    for (std::size_t i = 0; i < d; ++i) vars.emplace_back(1, defaults[i]);
  }
  return RingContext::make(vars, field);
}

unsigned require_order(long long n, const char* name = "n") {
  if (n < 1) throw DomainError(std::string(name) + " must be >= 1");
  return static_cast<unsigned>(n);
}

json dim_json(const QuotientDimension& d) { return d.is_finite() ? json(d.value()) : json("inf"); }
std::string dim_text(const QuotientDimension& d) { return d.is_finite() ? std::to_string(d.value()) : "infinite"; }

std::string ideal_text(const std::vector<Polynomial>& gens) {
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + format_polynomial(gens[i]);
  return out + ")";
}

json poly_list_json(const std::vector<Polynomial>& gens) {
  json out = json::array();
  for (const auto& g : gens) out.push_back(format_polynomial(g));
  return out;
}

json check_json(const std::string& kind, std::uint64_t seed, const Polynomial& f, unsigned n, bool pass) {
  return {{"kind", kind}, {"seed", seed}, {"f", format_polynomial(f)}, {"n", n}, {"pass", pass}};
}

void emit_checks(std::ostream& out, bool as_json, const json& checks) {
  if (as_json) {
    json failures = json::array();
    for (const auto& c : checks) {
      if (!c["pass"].get<bool>()) failures.push_back(c);
    }
    out << json{{"checks", checks}, {"failures", failures}}.dump(2) << "\n";
    return;
  }
  for (const auto& c : checks) {
    out << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["kind"].get<std::string>() << " seed=" << c["seed"]
        << " n=" << c["n"] << " f=" << c["f"].get<std::string>() << "\n";
  }
}

std::size_t count_failures(const json& checks) {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const json& c) { return !c["pass"].get<bool>(); }));
}

// ---- matrix

struct MatrixArgs {
  std::string f;
  long long n = 1;
};

int cmd_matrix(const Config& c, const MatrixArgs& a, std::ostream& out) {
  const unsigned n = require_order(a.n);
  const RingPtr ring = make_ring(c, {a.f});
  const JacobianMatrix jac = jac_matrix(parse_polynomial(a.f, ring), n);
  if (!c.json) {
    out << render_matrix(jac);
    return kOk;
  }
  json rows = json::array(), cols = json::array(), entries = json::array();
  for (const auto& b : jac.row_indices) rows.push_back(b.to_vector());
  for (const auto& al : jac.col_indices) cols.push_back(al.to_vector());
  for (std::size_t i = 0; i < jac.entries.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < jac.entries.cols(); ++j) row.push_back(format_polynomial(jac.entries.at(i, j)));
    entries.push_back(row);
  }
  out << json{{"f", format_polynomial(jac.f)},
              {"n", n},
              {"shape", {jac.entries.rows(), jac.entries.cols()}},
              {"rows", rows},
              {"cols", cols},
              {"entries", entries}}
             .dump(2)
      << "\n";
  return kOk;
}

// ---- ideal

struct IdealArgs {
  std::string kind;
  std::string f;
  long long n = 1;
  long long k = 0;
  bool reduced = false;
  bool dim = false;
};

int cmd_ideal(const Config& c, const IdealArgs& a, std::ostream& out) {
  const RingPtr ring = make_ring(c, {a.f});
  const Polynomial f = parse_polynomial(a.f, ring);
  Ideal ideal = Ideal::zero(ring);
  long long param = a.n;
  if (a.kind == "tjurina") {
    if (a.k < 0) throw DomainError("k must be >= 0");
    param = a.k;
    ideal = tjurina_ideal(f, static_cast<unsigned>(a.k));
  } else {
    const unsigned n = require_order(a.n);
    ideal = a.kind == "tn" ? nash_ideal_t(f, n) : nash_ideal_m(f, n);
  }

  if (c.json) {
    json j{{"kind", a.kind}, {"f", format_polynomial(f)}, {a.kind == "tjurina" ? "k" : "n", param},
           {"generators", poly_list_json(ideal.generators())}};
    if (a.reduced) {
      j["basis"] = poly_list_json(ideal.basis().elements());
      j["canonical"] = ideal.basis().is_canonical();
    }
    if (a.dim) j["dimension"] = dim_json(ideal.dimension());
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "generators: " << ideal_text(ideal.generators()) << "\n";
  if (a.reduced) {
    out << "basis: " << ideal_text(ideal.basis().elements()) << "\n";
    if (!ideal.basis().is_canonical()) out << "note: not m-primary; basis is minimal but tails are not reduced\n";
  }
  if (a.dim) out << "dimension: " << dim_text(ideal.dimension()) << "\n";
  return kOk;
}

// ---- invariants

struct InvariantArgs {
  std::string f;
  long long n_max = 2;
  long long k_max = 2;
  bool assume_closed = false;
};

int cmd_invariants(const Config& c, const InvariantArgs& a, std::ostream& out) {
  if (a.n_max < 0 || a.k_max < 0) throw DomainError("--n-max and --k-max must be >= 0");
  const RingPtr ring = make_ring(c, {a.f});
  const Polynomial f = parse_polynomial(a.f, ring);
  InvariantReport r = invariant_report(f, static_cast<unsigned>(a.n_max), static_cast<unsigned>(a.k_max));
  if (a.assume_closed && r.gp_bound) r.gp_bound = gp_bound(r.tau, r.mt, r.characteristic, true);

  if (c.json) {
    json tn = json::object(), tk = json::object();
    for (const auto& [n, d] : r.dim_nash_t) tn[std::to_string(n)] = dim_json(d);
    for (const auto& [k, d] : r.dim_tjurina) tk[std::to_string(k)] = dim_json(d);
    out << json{{"f", format_polynomial(f)}, {"char", r.characteristic}, {"mt", r.mt}, {"tau", dim_json(r.tau)},
                {"dimTn", tn}, {"dimTk", tk}, {"gpBound", r.gp_bound ? json(*r.gp_bound) : json(nullptr)}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << "f: " << format_polynomial(f) << "\n";
  out << "char: " << r.characteristic << "\n";
  out << "mt: " << r.mt << "\n";
  out << "tau: " << dim_text(r.tau) << "\n";
  for (const auto& [n, d] : r.dim_nash_t) out << "dim Nash T_" << n << ": " << dim_text(d) << "\n";
  for (const auto& [k, d] : r.dim_tjurina) out << "dim Tjurina T_" << k << ": " << dim_text(d) << "\n";
  out << "gp bound: " << (r.gp_bound ? std::to_string(*r.gp_bound) : "none") << "\n";
  return kOk;
}

// ---- check

struct CheckArgs {
  std::string kind;
  std::string f;
  std::string g;
  std::string automorphism;
  std::string unit;
  long long n = 2;
  long long trials = 50;
};

int check_invariance(const Config& c, const CheckArgs& a, std::ostream& out, std::ostream& err) {
  const unsigned n = require_order(a.n);
  json checks = json::array();
  if (!a.automorphism.empty() || !a.unit.empty()) {
    if (a.f.empty()) throw DomainError("explicit invariance checks need a polynomial f");
    const RingPtr ring = make_ring(c, {a.f, a.automorphism, a.unit});
    const Polynomial f = parse_polynomial(a.f, ring);
    const LocalAutomorphism phi = a.automorphism.empty() ? LocalAutomorphism::identity(ring)
                                                         : LocalAutomorphism(ring, parse_image_list(a.automorphism, ring));
    if (!phi.is_valid()) throw DomainError("not a local automorphism (needs phi(0) = 0 and an invertible linear part)");
    const UnitElement u(a.unit.empty() ? Polynomial::constant(ring, 1) : parse_polynomial(a.unit, ring));
    checks.push_back(check_json("right-covariance", c.seed, f, n, check_right_covariance(f, phi, n)));
    checks.push_back(check_json("unit-stability", c.seed, f, n, check_unit_stability(f, u, n)));
    checks.push_back(check_json("contact-invariance", c.seed, f, n, check_contact_invariance(f, {phi, u}, n)));
  } else {
    if (a.trials < 1) throw DomainError("--trials must be >= 1");
    std::vector<Polynomial> germs;
    if (!a.f.empty()) {
      germs.push_back(parse_polynomial(a.f, make_ring(c, {a.f})));
    } else {
      if (c.characteristic < 0) throw DomainError("characteristic must be 0 or a prime");
      for (const auto& e : singularity_corpus()) {
        if (e.vars.size() == 2) germs.push_back(corpus_polynomial(e, static_cast<unsigned>(c.characteristic)));
      }
    }
    HarnessConfig cfg;
    cfg.covariance_trials = cfg.unit_trials = static_cast<unsigned>(a.trials);
    cfg.contact_trials = static_cast<unsigned>((a.trials + 1) / 2);
    cfg.max_n = n;
    const HarnessReport report = run_invariance_harness(germs, c.seed, cfg);
    for (const auto& chk : report.checks) checks.push_back(check_json(chk.kind, chk.seed, chk.f, chk.n, chk.pass));
  }
  emit_checks(out, c.json, checks);
  const std::size_t failed = count_failures(checks);
  if (failed == 0) {
    if (!c.json) out << "all " << checks.size() << " checks passed (seed " << c.seed << ")\n";
    return kOk;
  }
  err << failed << " of " << checks.size() << " checks failed (seed " << c.seed << "): " << kBugSuspected << "\n";
  return kCheckFailed;
}

int check_inclusions_cmd(const Config& c, const CheckArgs& a, std::ostream& out, std::ostream& err) {
  if (a.f.empty()) throw DomainError("inclusions needs a polynomial f");
  const unsigned n = require_order(a.n);
  const Polynomial f = parse_polynomial(a.f, make_ring(c, {a.f}));
  const InclusionReport r = check_inclusions(f, n);
  struct Row {
    const char* kind;
    const char* text;
    bool pass;
    bool asserted;
  };
  const std::string e = std::to_string(r.power_exponent);
  const std::vector<Row> rows{
      {"step-down", "J_n(f) in J_(n-1)(f)", r.step_down, true},
      {"m-j1-squared", "J_n(f) in m J_1(f)^2", r.into_m_j1_sq, r.ii_expected},
      {"with-f", "(f) + J_n(f) in (f) + m J_1(f)^2", r.with_f, true},
      {"j1-power", "J_n(f) in J_1(f)^e", r.power_of_j1, true},
  };
  bool ok = true;
  if (c.json) {
    json checks = json::array(), failures = json::array();
    for (const auto& row : rows) {
      json j = check_json(row.kind, c.seed, f, n, row.pass);
      j["asserted"] = row.asserted;
      if (row.kind == std::string("j1-power")) j["exponent"] = r.power_exponent;
      if (row.asserted && !row.pass) {
        failures.push_back(j);
        ok = false;
      }
      checks.push_back(j);
    }
    out << json{{"checks", checks}, {"failures", failures}}.dump(2) << "\n";
  } else {
    for (const auto& row : rows) {
      out << (row.pass ? "PASS " : "FAIL ") << row.kind << ": " << row.text;
      if (row.kind == std::string("j1-power")) out << " with e = " << e;
      if (!row.asserted) out << " (not asserted: needs d >= 3, n >= 3 or mt >= 3)";
      out << "\n";
      ok = ok && (row.pass || !row.asserted);
    }
  }
  if (ok) return kOk;
  err << "an asserted inclusion failed: " << kBugSuspected << "\n";
  return kCheckFailed;
}

int check_samuel(const Config& c, const CheckArgs& a, std::ostream& out, std::ostream& err) {
  if (a.f.empty() || a.g.empty()) throw DomainError("samuel needs f and --g");
  const RingPtr ring = make_ring(c, {a.f, a.g});
  const Polynomial f = parse_polynomial(a.f, ring), g = parse_polynomial(a.g, ring);
  const bool pass = samuel_hypothesis(f, g);
  if (c.json) {
    json checks = json::array({check_json("samuel", c.seed, f, 1, pass)});
    checks[0]["g"] = format_polynomial(g);
    emit_checks(out, true, checks);
  } else {
    out << (pass ? "PASS" : "FAIL") << " samuel: g - f " << (pass ? "is" : "is not") << " in m j(f)^2\n";
  }
  if (pass) return kOk;
  err << "g is not congruent to f modulo m j(f)^2\n";
  return kCheckFailed;
}

int cmd_check(const Config& c, const CheckArgs& a, std::ostream& out, std::ostream& err) {
  if (a.kind == "invariance") return check_invariance(c, a, out, err);
  if (a.kind == "inclusions") return check_inclusions_cmd(c, a, out, err);
  return check_samuel(c, a, out, err);
}

// ---- corpus

struct CorpusArgs {
  std::string filter;
};

int cmd_corpus(const Config& c, const CorpusArgs& a, std::ostream& out, std::ostream& err) {
  const auto fixtures = select_fixtures(corpus_fixtures(c.seed), a.filter);
  if (fixtures.empty()) throw DomainError("no fixture matches '" + a.filter + "'");
  json results = json::array();
  std::vector<std::string> failed;
  for (const auto& fx : fixtures) {
    const auto t0 = std::chrono::steady_clock::now();
    FixtureOutcome o;
    try {
      o = fx.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) failed.push_back(fx.name);
    if (c.json) {
      results.push_back({{"name", fx.name}, {"summary", fx.summary}, {"pass", o.pass}, {"detail", o.detail}});
    } else {
      out << (o.pass ? "PASS " : "FAIL ") << fx.name << ": " << o.detail << " [" << ms << " ms]\n";
    }
  }
  if (c.json) {
    out << json{{"seed", c.seed}, {"fixtures", results}, {"failures", failed}}.dump(2) << "\n";
  } else {
    out << (fixtures.size() - failed.size()) << " of " << fixtures.size() << " fixtures passed\n";
  }
  if (failed.empty()) return kOk;
  err << failed.size() << " fixture(s) failed: " << kBugSuspected << "\n";
  return kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Higher Jacobian matrices, Nash blowup and Tjurina algebras of hypersurface germs", "hjac"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--vars", cfg.vars, "Comma-separated variable names, highest precedence first");
  app.add_option("-d,--nvars", cfg.nvars, "Use the first d of x, y, z, w (default: inferred from the input)");
  app.add_option("--char", cfg.characteristic, "Field characteristic: 0 for QQ or a prime p for GF(p)");
  app.add_flag("--json", cfg.json, "Emit JSON");
  app.add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();

  MatrixArgs ma;
  auto* matrix = app.add_subcommand("matrix", "Print the n-th Jacobian matrix of f");
  matrix->add_option("f", ma.f, "Polynomial")->required();
  matrix->add_option("-n,--n", ma.n, "Order n >= 1")->capture_default_str();

  IdealArgs ia;
  auto* ideal = app.add_subcommand("ideal", "Print J_n(f), (f) + J_n(f) or (f) + m^k j(f)");
  ideal->add_option("kind", ia.kind, "jn | mn | tn | tjurina")->required()->check(CLI::IsMember({"jn", "mn", "tn", "tjurina"}));
  ideal->add_option("f", ia.f, "Polynomial")->required();
  ideal->add_option("-n,--n", ia.n, "Order n >= 1 (jn, mn, tn)")->capture_default_str();
  ideal->add_option("-k,--k", ia.k, "Power of m (tjurina)")->capture_default_str();
  ideal->add_flag("--reduced", ia.reduced, "Also print the reduced standard basis");
  ideal->add_flag("--dim", ia.dim, "Also print the quotient dimension");

  InvariantArgs va;
  auto* invariants = app.add_subcommand("invariants", "mt, tau, dim T_n, dim T_k and the determinacy bound");
  invariants->add_option("f", va.f, "Polynomial")->required();
  invariants->add_option("--n-max", va.n_max, "Largest n for dim T_n")->capture_default_str();
  invariants->add_option("--k-max", va.k_max, "Largest k for dim T_k")->capture_default_str();
  invariants->add_flag("--assume-closed", va.assume_closed, "Assert the field is algebraically closed (char 0 bound 0)");

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Verify invariance, inclusions or the Samuel congruence");
  check->add_option("kind", ca.kind, "invariance | inclusions | samuel")->required()->check(CLI::IsMember({"invariance", "inclusions", "samuel"}));
  check->add_option("f", ca.f, "Polynomial (invariance: defaults to the plane corpus)");
  check->add_option("--g", ca.g, "Second polynomial (samuel)");
  check->add_option("--auto", ca.automorphism, "Automorphism images separated by ';' (invariance)");
  check->add_option("--unit", ca.unit, "Unit u with u(0) != 0 (invariance)");
  check->add_option("-n,--n", ca.n, "Order n >= 1")->capture_default_str();
  check->add_option("--trials", ca.trials, "Randomized trials per kind (invariance)")->capture_default_str();

  CorpusArgs oa;
  auto* corpus = app.add_subcommand("corpus", "Run the worked-example fixtures");
  corpus->add_option("--filter", oa.filter, "Only fixtures whose name contains this text");

  for (auto* sub : {matrix, ideal, invariants, check, corpus}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (matrix->parsed()) return cmd_matrix(cfg, ma, out);
    if (ideal->parsed()) return cmd_ideal(cfg, ia, out);
    if (invariants->parsed()) return cmd_invariants(cfg, va, out);
    if (check->parsed()) return cmd_check(cfg, ca, out, err);
    return cmd_corpus(cfg, oa, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << ": " << kBugSuspected << "\n";
    return kCheckFailed;
  }
}

}  // namespace hjac::cli
