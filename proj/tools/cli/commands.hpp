#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "report.hpp"

namespace amitsur::cli {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Report cmd_coverage(std::int64_t n, std::int64_t r, unsigned depth, std::optional<unsigned> exhaustive);
Report cmd_certificate(std::int64_t n, std::int64_t r, std::int64_t l, unsigned depth);
Report cmd_verify(const std::string& suite, std::uint64_t seed,
                  const std::optional<std::string>& tower_fixture = std::nullopt);

Report usage_report(const std::string& command, const std::string& message);

}  // namespace amitsur::cli
