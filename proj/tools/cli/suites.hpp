#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amitsur/check.hpp"

namespace amitsur::cli {

struct SuiteOptions {
  std::optional<std::string> tower_fixture;  // replaces the built-in S3 model in the tower suite
  std::size_t group_ring_cases = 1000;
  std::size_t crossed_instances = 100;
};

const std::vector<std::string>& suite_names();

std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed, const SuiteOptions& opts = {});

std::vector<CheckResult> group_ring_suite(std::uint64_t seed, std::size_t cases);
std::vector<CheckResult> quotient_suite(std::uint64_t seed);
std::vector<CheckResult> monomial_suite(std::uint64_t seed);
std::vector<CheckResult> tower_suite(std::uint64_t seed, const std::optional<std::string>& fixture);
std::vector<CheckResult> crossed_suite(std::uint64_t seed, std::size_t instances);

}  // namespace amitsur::cli
