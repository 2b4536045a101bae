#include <gtest/gtest.h>

#include "commands.hpp"
#include "report.hpp"
#include "suites.hpp"

using namespace amitsur::cli;

TEST(Cli, CoverageDihedral) {
  const Report r = cmd_coverage(5, 4, 3, std::nullopt);
  EXPECT_EQ(r.status, Status::ok);
  EXPECT_EQ(r.results["subgroup"], Json({"1", "2", "3", "4"}));
  EXPECT_TRUE(r.results["full"].get<bool>());
}

TEST(Cli, CoverageWithOracle) {
  const Report r = cmd_coverage(5, 1, 3, 2u);
  EXPECT_EQ(r.status, Status::ok);
  EXPECT_TRUE(r.results["oracle"]["agrees"].get<bool>());
  EXPECT_EQ(r.results["oracle"]["fixed_units"], "58");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cmd_coverage(4, 2, 3, std::nullopt).status, Status::usage_error);
  EXPECT_EQ(cmd_coverage(5, 4, 0, std::nullopt).status, Status::usage_error);
  EXPECT_EQ(cmd_coverage(23, 1, 3, 3u).status, Status::usage_error);
  EXPECT_EQ(cmd_certificate(9, 8, 3, 3).status, Status::usage_error);
  EXPECT_EQ(cmd_verify("nope", 0).status, Status::usage_error);
  EXPECT_EQ(cmd_verify("tower", 0, std::string("/nonexistent")).status, Status::usage_error);
  // inputs are still echoed
  EXPECT_EQ(cmd_coverage(4, 2, 3, std::nullopt).inputs["n"], "4");
}

TEST(Cli, Certificates) {
  const Report ok = cmd_certificate(3, 2, 2, 3);
  EXPECT_EQ(ok.status, Status::ok);
  EXPECT_EQ(ok.results["certificate"]["alpha_tilde"], "sigma + sigma^2");
  EXPECT_EQ(ok.results["certificate"]["k"], "0");
  EXPECT_EQ(ok.results["certificate"]["s"], "1");
  EXPECT_EQ(ok.results["verification"]["final_shift"], "0");

  const Report id = cmd_certificate(3, 2, 1, 3);
  EXPECT_EQ(id.results["certificate"]["alpha_tilde"], "1");

  const Report nc = cmd_certificate(7, 2, 3, 3);
  EXPECT_EQ(nc.status, Status::not_covered);
  EXPECT_EQ(exit_code(nc.status), 3);
}

TEST(Cli, RenderingIsSortedAndStable) {
  const Report r = cmd_certificate(3, 2, 2, 3);
  const std::string json = render_json(r);
  EXPECT_LT(json.find("\"command\""), json.find("\"inputs\""));
  EXPECT_LT(json.find("\"inputs\""), json.find("\"results\""));
  EXPECT_EQ(json, render_json(cmd_certificate(3, 2, 2, 3)));
  const std::string text = render_text(r);
  EXPECT_NE(text.find("status: ok"), std::string::npos);
  EXPECT_NE(text.find("r' - s - eps(beta~) k = 0: pass"), std::string::npos);
}

TEST(Cli, VerifyTowerSuite) {
  const Report r = cmd_verify("tower", 0);
  EXPECT_EQ(r.status, Status::ok);
  EXPECT_NE(render_text(r).find("tau-hat commutes with fixed monomials: pass"), std::string::npos);
}

TEST(Cli, VerifyIsSeededAndDeterministic) {
  const Report a = cmd_verify("crossed", 7);
  EXPECT_EQ(a.status, Status::ok);
  EXPECT_EQ(render_json(a), render_json(cmd_verify("crossed", 7)));
}

TEST(Cli, VerifyAll) {
  const Report r = cmd_verify("all", 0);
  EXPECT_EQ(r.status, Status::ok);
  EXPECT_EQ(r.results["suites"].size(), suite_names().size());
  EXPECT_EQ(r.results["failed"], "0");
}
