#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "coxeter/cli.hpp"

using namespace coxeter;
using namespace coxeter::cli;
using Json = nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(COXETER_SYSTEMS_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(RunConfig cfg, const std::string& input) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(cfg, input, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(Command c, bool json = true) {
  RunConfig cfg;
  cfg.command = c;
  cfg.json = json;
  return cfg;
}

}  // namespace

TEST(Cli, ParseCommand) {
  EXPECT_EQ(parse_command("classify"), Command::Classify);
  EXPECT_EQ(parse_command("verify-paper"), Command::VerifyPaper);
  EXPECT_FALSE(parse_command("frobnicate").has_value());
}

TEST(Cli, ClassifyJson) {
  const auto r = invoke(config(Command::Classify), slurp("right_angled_rank3.cox"));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  for (const char* key : {"system", "irreducible", "field_level", "tits_form", "signature", "classification"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["classification"], "HyperbolicType");
  EXPECT_EQ(j["signature"]["p"], 2);
  EXPECT_EQ(j["signature"]["q"], 1);
  EXPECT_EQ(j["system"]["orders"][0][1], "inf");
  EXPECT_EQ(j["tits_form"][0][1]["coeffs"][0], "-1");
  const FieldElement entry = json::parse_element(j["tits_form"][0][1]);
  EXPECT_EQ(entry, FieldElement(-1));
}

TEST(Cli, ClassifyH3Text) {
  const auto r = invoke(config(Command::Classify, false), slurp("h3.cox"));
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("PositiveDefinite"), std::string::npos);
  EXPECT_NE(r.out.find("field level: 15"), std::string::npos);
}

TEST(Cli, ReprWithBasis) {
  RunConfig cfg = config(Command::Repr);
  cfg.basis = parse_int_matrix(slurp("basis_right_angled.txt"));
  const auto r = invoke(cfg, slurp("right_angled_rank3.cox"));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["generators"].size(), 3U);
  EXPECT_EQ(j["generators_in_basis"].size(), 3U);
  EXPECT_EQ(j["form_in_basis"][0][2]["coeffs"][0], "-1");
  EXPECT_EQ(j["form_in_basis"][1][1]["coeffs"][0], "1");

  cfg.basis = IntMatrix{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(invoke(cfg, slurp("right_angled_rank3.cox")).code, kExitUsage);
  cfg.basis = IntMatrix::identity(2);
  EXPECT_EQ(invoke(cfg, slurp("right_angled_rank3.cox")).code, kExitUsage);
}

TEST(Cli, EnumerateJsonLines) {
  RunConfig cfg = config(Command::Enumerate);
  cfg.max_length = 2;
  const auto r = invoke(cfg, slurp("right_angled_rank3.cox"));
  ASSERT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<Json> records;
  while (std::getline(lines, line)) records.push_back(Json::parse(line));
  ASSERT_EQ(records.size(), 10U);
  EXPECT_EQ(records[0]["len"], 0);
  EXPECT_EQ(records[1]["word"], Json::array({1}));
  EXPECT_EQ(records.back()["elements"], 9);
  EXPECT_EQ(records.back()["stop"], "max-length");
}

TEST(Cli, EnumerateWorkerCountDoesNotChangeOutput) {
  RunConfig cfg = config(Command::Enumerate);
  cfg.max_length = 6;
  const auto one = invoke(cfg, slurp("infinite_triangle.cox"));
  cfg.workers = 4;
  const auto four = invoke(cfg, slurp("infinite_triangle.cox"));
  EXPECT_EQ(one.out, four.out);
}

TEST(Cli, ChamberReport) {
  RunConfig cfg = config(Command::Chamber);
  cfg.samples = 20;
  const auto r = invoke(cfg, slurp("right_angled_rank3.cox"));
  ASSERT_EQ(r.code, kExitOk) << r.out;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["chamber"]["samples_negative"], 20);
  EXPECT_EQ(j["chamber"]["canonical_value"]["coeffs"][0], "-7");
  EXPECT_TRUE(j["checks"]["overall"].get<bool>());

  // Finite type: the preconditions fail, which is reported as a failed check.
  EXPECT_EQ(invoke(cfg, slurp("a3.cox")).code, kExitCheckFailed);
}

TEST(Cli, VerifyPaper) {
  const auto r = invoke(config(Command::VerifyPaper), "");
  ASSERT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["checks"]["overall"].get<bool>());
  EXPECT_GE(j["checks"]["checks"].size(), 12U);
}

TEST(Cli, Errors) {
  EXPECT_EQ(invoke(config(Command::Classify), "rank 2\nm 1 2 1").code, kExitUsage);
  EXPECT_EQ(invoke(config(Command::Classify), "nonsense").code, kExitUsage);
  RunConfig cfg = config(Command::Classify);
  cfg.precision = 0;
  EXPECT_EQ(invoke(cfg, "rank 1").code, kExitUsage);
  EXPECT_THROW(parse_int_matrix("1 2\n3"), ParseError);
  EXPECT_THROW(parse_int_matrix("1 x"), ParseError);
}
