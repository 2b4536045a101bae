#include "commands.hpp"

#include "amitsur/coverage.hpp"
#include "amitsur/errors.hpp"
#include "amitsur/monomial.hpp"
#include "suites.hpp"

namespace amitsur::cli {

namespace {

void require_pair(std::int64_t n, std::int64_t r) {
  if (n < 2) throw UsageError("--n must be at least 2");
  if (r < 1 || r >= n) throw UsageError("--r must lie in [1, n-1]");
  if (gcd_u64(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r)) != 1)
    throw UsageError("gcd(r, n) must be 1");
}

Json residues(const std::vector<std::uint64_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(num(x));
  return out;
}


void coverage_impl(Report& rep, std::int64_t n, std::int64_t r, unsigned depth, std::optional<unsigned> exhaustive) {
  rep.command = "coverage";
  rep.inputs = Json{{"n", num(n)}, {"r", num(r)}, {"depth", num(std::uint64_t{depth})}};
  if (exhaustive) rep.inputs["exhaustive"] = num(std::uint64_t{*exhaustive});
  require_pair(n, r);
  if (depth < 1) throw UsageError("--depth must be positive");

  const auto nn = static_cast<std::size_t>(n);
  const auto rr = static_cast<std::uint64_t>(r);
  const CoverageReport cov = coverage_subgroup(nn, rr, depth);
  const TauData t = TauData::make(nn, rr);

  Json gens = Json::array();
  bool all_units = true, all_fixed = true;
  for (const auto& [g, e] : cov.generators) {
    gens.push_back(Json{{"element", g.to_string()}, {"eps_bar", num(e)}});
    all_units = all_units && is_unit(g);
    all_fixed = all_fixed && is_tau_fixed(g, t);
  }
  std::vector<CheckResult> checks{{"generators pass the resultant unit test", all_units, {}},
                                  {"generators are tau-fixed", all_fixed, {}}};

  rep.results = Json{{"m", num(cov.m)},
                     {"strategy", cov.strategy},
                     {"generators", gens},
                     {"subgroup", residues(cov.subgroup)},
                     {"units", residues(units_mod(nn))},
                     {"full", cov.is_full}};

  if (exhaustive) {
    CoverageReport oracle;
    try {
      oracle = exhaustive_coverage(nn, rr, *exhaustive);
    } catch (const SearchSpaceTooLarge& e) {
      throw UsageError(e.what());
    }
    const bool agree = oracle.subgroup == cov.subgroup;
    rep.results["oracle"] = Json{{"strategy", oracle.strategy},
                                 {"fixed_units", num(std::uint64_t{oracle.generators.size()})},
                                 {"subgroup", residues(oracle.subgroup)},
                                 {"agrees", agree}};
    checks.push_back({"oracle subgroup equals generator subgroup", agree, {}});
  }
  rep.results["checks"] = checks_json(checks);
  rep.status = all_passed(checks) ? Status::ok : Status::check_failure;
}

void certificate_impl(Report& rep, std::int64_t n, std::int64_t r, std::int64_t l, unsigned depth) {
  rep.command = "certificate";
  rep.inputs = Json{{"n", num(n)}, {"r", num(r)}, {"l", num(l)}, {"depth", num(std::uint64_t{depth})}};
  require_pair(n, r);
  if (depth < 1) throw UsageError("--depth must be positive");
  const auto nn = static_cast<std::uint64_t>(n);
  if (gcd_u64(nn, static_cast<std::uint64_t>(mod_floor(l, n))) != 1) throw UsageError("gcd(l, n) must be 1");

  Certificate c;
  try {
    c = make_certificate(static_cast<std::size_t>(n), static_cast<std::uint64_t>(r), Integer(static_cast<long>(l)),
                         depth);
  } catch (const NotCovered& e) {
    rep.results["message"] = e.what();
    rep.status = Status::not_covered;
    return;
  }
  const VerificationRecord v = verify_certificate(c);
  rep.results["certificate"] = Json{{"alpha_tilde", c.alpha_tilde.to_string()},
                                    {"beta_tilde", c.beta_tilde.to_string()},
                                    {"eps_alpha_tilde", num(augmentation(c.alpha_tilde))},
                                    {"eps_beta_tilde", num(augmentation(c.beta_tilde))},
                                    {"k", num(c.k)},
                                    {"s", num(c.s)}};
  rep.results["verification"] = Json{{"checks", checks_json(v.checks)},
                                     {"r_prime", num(v.r_prime)},
                                     {"final_shift", num(v.final_shift)},
                                     {"passed", v.passed()}};
  rep.status = v.passed() ? Status::ok : Status::check_failure;
}

void verify_impl(Report& rep, const std::string& suite, std::uint64_t seed,
                 const std::optional<std::string>& tower_fixture) {
  rep.command = "verify";
  rep.inputs = Json{{"suite", suite}, {"seed", num(seed)}};
  if (tower_fixture) rep.inputs["fixture"] = *tower_fixture;

  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    bool known = false;
    for (const auto& s : suite_names()) known = known || s == suite;
    if (!known) throw UsageError("unknown suite '" + suite + "'");
    names = {suite};
  }

  SuiteOptions opts;
  opts.tower_fixture = tower_fixture;
  std::size_t passed = 0, failed = 0;
  Json suites = Json::object();
  for (const auto& name : names) {
    std::vector<CheckResult> checks;
    try {
      checks = run_suite(name, seed, opts);
    } catch (const FixtureError& e) {
      throw UsageError(e.what());
    } catch (const Error& e) {
      checks.push_back({"suite completed", false, e.what()});
    }
    for (const auto& c : checks) (c.passed ? passed : failed)++;
    suites[name] = Json{{"checks", checks_json(checks)}, {"passed", all_passed(checks)}};
  }
  rep.results = Json{{"suites", suites}, {"passed", num(std::uint64_t{passed})}, {"failed", num(std::uint64_t{failed})}};
  rep.status = failed == 0 ? Status::ok : Status::check_failure;
}

template <class F>
Report guarded(F&& body) {
  Report rep;
  try {
    body(rep);
  } catch (const UsageError& e) {
    rep.results = Json{{"error", e.what()}};
    rep.status = Status::usage_error;
  }
  return rep;
}

}  // namespace

Report cmd_coverage(std::int64_t n, std::int64_t r, unsigned depth, std::optional<unsigned> exhaustive) {
  return guarded([&](Report& rep) { coverage_impl(rep, n, r, depth, exhaustive); });
}

Report cmd_certificate(std::int64_t n, std::int64_t r, std::int64_t l, unsigned depth) {
  return guarded([&](Report& rep) { certificate_impl(rep, n, r, l, depth); });
}

Report cmd_verify(const std::string& suite, std::uint64_t seed, const std::optional<std::string>& tower_fixture) {
  return guarded([&](Report& rep) { verify_impl(rep, suite, seed, tower_fixture); });
}

Report usage_report(const std::string& command, const std::string& message) {
  Report rep;
  rep.command = command;
  rep.results["error"] = message;
  rep.status = Status::usage_error;
  return rep;
}

}  // namespace amitsur::cli
