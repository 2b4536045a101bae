#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "amitsur/check.hpp"
#include "amitsur/numbers.hpp"

namespace amitsur::cli {

using Json = nlohmann::json;

enum class Status { ok = 0, check_failure = 1, usage_error = 2, not_covered = 3 };

int exit_code(Status s);
std::string status_label(Status s);

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Status status = Status::ok;
};

// Integers are emitted as canonical decimal strings so that big values survive any JSON reader.
inline std::string num(const Integer& v) { return v.get_str(); }
inline std::string num(std::uint64_t v) { return std::to_string(v); }
inline std::string num(std::int64_t v) { return std::to_string(v); }

Json checks_json(const std::vector<CheckResult>& checks);

Json to_json(const Report& r);
std::string render_json(const Report& r);
std::string render_text(const Report& r);

}  // namespace amitsur::cli
