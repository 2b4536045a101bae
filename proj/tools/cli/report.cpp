#include "report.hpp"

#include <sstream>

namespace amitsur::cli {

int exit_code(Status s) { return static_cast<int>(s); }

std::string status_label(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::check_failure: return "check-failure";
    case Status::usage_error: return "usage-error";
    case Status::not_covered: return "not-covered";
  }
  return "unknown";
}

Json checks_json(const std::vector<CheckResult>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json item{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    out.push_back(std::move(item));
  }
  return out;
}

Json to_json(const Report& r) {
  return Json{{"command", r.command},
              {"inputs", r.inputs},
              {"results", r.results},
              {"status", status_label(r.status)}};
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "null";
  return v.dump();
}

bool is_check(const Json& v) {
  return v.is_object() && v.contains("name") && v.contains("passed") && v.size() <= 3;
}

void emit(std::ostringstream& out, const Json& v, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (v.is_object()) {
    for (const auto& [key, child] : v.items()) {
      if (child.is_object() || (child.is_array() && !child.empty())) {
        out << pad << key << ":\n";
        emit(out, child, depth + 1);
      } else if (child.is_array()) {
        out << pad << key << ": []\n";
      } else {
        out << pad << key << ": " << scalar(child) << "\n";
      }
    }
    return;
  }
  if (v.is_array()) {
    bool flat = true;
    for (const auto& e : v)
      if (e.is_object() || e.is_array()) flat = false;
    if (flat) {
      out << pad;
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
      out << "\n";
      return;
    }
    for (const auto& e : v) {
      if (is_check(e)) {
        out << pad << e["name"].get<std::string>() << ": " << (e["passed"].get<bool>() ? "pass" : "FAIL");
        if (e.contains("detail")) out << " (" << e["detail"].get<std::string>() << ")";
        out << "\n";
      } else {
        out << pad << "-\n";
        emit(out, e, depth + 1);
      }
    }
    return;
  }
  out << pad << scalar(v) << "\n";
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  emit(out, to_json(r), 0);
  return out.str();
}

}  // namespace amitsur::cli
