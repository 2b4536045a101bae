#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "amitsur/errors.hpp"
#include "commands.hpp"
#include "amitsur/coverage.hpp"

using namespace amitsur::cli;

int main(int argc, char** argv) {
  CLI::App app{"Coverage reports, certificates and verification suites for norm-set monomial maps"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output rendering")->check(CLI::IsMember({"json", "text"}));

  std::int64_t n = 0, r = 0, l = 0;
  unsigned depth = amitsur::kDefaultDepth;
  std::optional<unsigned> exhaustive;
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::optional<std::string> fixture;

  auto* cov = app.add_subcommand("coverage", "Subgroup of (Z/nZ)* reached by tau-fixed units of S");
  cov->add_option("--n", n, "Order of sigma")->required();
  cov->add_option("--r", r, "tau sigma tau^-1 = sigma^r")->required();
  cov->add_option("--depth", depth, "Product depth for generator search");
  cov->add_option("--exhaustive", exhaustive, "Also enumerate coefficient box [-B, B] as an oracle");

  auto* cert = app.add_subcommand("certificate", "Build and verify a certificate for one exponent");
  cert->add_option("--n", n, "Order of sigma")->required();
  cert->add_option("--r", r, "tau sigma tau^-1 = sigma^r")->required();
  cert->add_option("--l", l, "Exponent, coprime to n")->required();
  cert->add_option("--depth", depth, "Product depth for generator search");

  auto* ver = app.add_subcommand("verify", "Run property suites");
  ver->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"group-ring", "quotient", "monomial", "tower", "crossed", "all"}));
  ver->add_option("--seed", seed, "Seed for every random choice");
  ver->add_option("--fixture", fixture, "Tower fixture file for the tower suite");

  for (auto* sub : {cov, cert, ver}) sub->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_code(Status::usage_error);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Report rep;
  try {
    if (command == "coverage") {
      rep = cmd_coverage(n, r, depth, exhaustive);
    } else if (command == "certificate") {
      rep = cmd_certificate(n, r, l, depth);
    } else {
      rep = cmd_verify(suite, seed, fixture);
    }
  } catch (const amitsur::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    rep = usage_report(command, e.what());
    rep.status = Status::check_failure;
  }
  if (rep.status == Status::usage_error) std::cerr << "error: " << rep.results.value("error", "") << "\n";
  std::cout << (format == "json" ? render_json(rep) : render_text(rep));
  return exit_code(rep.status);
}
