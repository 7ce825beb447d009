#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "pdnf/report.hpp"
#include "support.hpp"

using namespace pdnf;
using namespace pdnf::testing;
using pdnf::io::json;

namespace {

const std::string kSamples = PDNF_SAMPLES_DIR;
const std::string kBinary = PDNF_BINARY;

std::string sample(const std::string& name) { return kSamples + "/" + name; }

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

std::filesystem::path scratch() {
  static const auto dir = [] {
    auto d = std::filesystem::temp_directory_path() / ("pdnf_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  const auto out = scratch() / "stdout.txt", err = scratch() / "stderr.txt";
  const std::string cmd = kBinary + " " + args + " > " + out.string() + " 2> " + err.string();
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = io::read_file(out.string());
  r.err = io::read_file(err.string());
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto p = scratch() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

const char* kMinimalMap = R"({
  "kind": "map", "n": 2, "scalars": "rational",
  "eigen": {"form": "mult-rational", "values": [[1, 2], [2, 1]]},
  "terms": [{"component": 1, "exponent": [0, 2], "coeff": COEFF}],
  "degree_D": 10, "order_N": 6
})";

std::string minimal_map(const std::string& coeff) {
  std::string s = kMinimalMap;
  s.replace(s.find("COEFF"), 5, coeff);
  return s;
}

}  // namespace

TEST(Parse, HalfDoubleSample) {
  const auto sys = io::load_system(sample("halfdouble.json"));
  EXPECT_EQ(sys.kind, SystemKind::Map);
  EXPECT_EQ(sys.spec.values(), (std::vector<Scalar>{Scalar(q(1, 2)), Scalar(2)}));
  EXPECT_EQ(sys.degree_D, 12);
  EXPECT_EQ(sys.f[0].coeff(Exponent{0, 2}), Scalar(q(7, 2)));
}

TEST(Parse, MinimalMap) {
  const auto sys = io::decode_system(io::parse_text(minimal_map("[3, 4]")));
  EXPECT_EQ(sys.f, vpoly(2, 2, {"3/4*y^2", ""}));
  EXPECT_EQ(sys.order_N, 6);
}

TEST(Parse, DecimalRejectedWithHint) {
  try {
    io::parse_text(minimal_map("0.5"));
    FAIL() << "decimal accepted";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("0.5"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("[1, 2]"), std::string::npos);
  }
  EXPECT_THROW(io::parse_text(minimal_map("[1e3, 1]")), ParseError);
}

TEST(Parse, BigIntegersStayExact) {
  const auto a = io::decode_system(io::parse_text(minimal_map("[123456789012345678901234567890, 7]")));
  const auto b = io::decode_system(io::parse_text(minimal_map("[\"123456789012345678901234567890\", 7]")));
  Rational expected(Integer("123456789012345678901234567890"), Integer(7));
  expected.canonicalize();
  EXPECT_EQ(a.f[0].coeff(Exponent{0, 2}), Scalar(expected));
  EXPECT_EQ(a.f, b.f);
  EXPECT_EQ(io::encode(expected)[0], json("17636684144620811271604938270"));
}

TEST(Parse, ValidationErrorsNameTheField) {
  auto message = [](const std::string& text) {
    try {
      io::decode_system(io::parse_text(text));
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  std::string linear = minimal_map("[1, 1]");
  linear.replace(linear.find("[0, 2]"), 6, "[1, 0]");
  EXPECT_NE(message(linear).find("degree 1"), std::string::npos);
  std::string comp = minimal_map("[1, 1]");
  comp.replace(comp.find("\"component\": 1"), 14, "\"component\": 3");
  EXPECT_NE(message(comp).find("terms[0].component"), std::string::npos);
  EXPECT_NE(message(minimal_map("[1, 0]")).find("zero denominator"), std::string::npos);
  EXPECT_NE(message(minimal_map("[0, 1, 1, 1]")).find("complex"), std::string::npos);
  EXPECT_NE(message("{\"kind\": \"map\", \"n\": 2,").find("byte"), std::string::npos);
  std::string field = minimal_map("[1, 1]");
  field.replace(field.find("\"map\""), 5, "\"field\"");
  EXPECT_NE(message(field).find("additive"), std::string::npos);
}

TEST(Parse, EncodeDecodeRoundTrip) {
  for (const char* name : {"halfdouble.json", "base2_3d.json", "base2_3d_symbolic.json", "center.json", "gaussian.json"}) {
    const auto sys = io::load_system(sample(name));
    const auto again = io::decode_system(io::parse_text(io::dump(io::encode(sys))));
    EXPECT_EQ(io::encode(again), io::encode(sys)) << name;
    EXPECT_EQ(again.f, sys.f) << name;
  }
}

TEST(Reports, ResonanceHalfDouble) {
  io::RunOptions o;
  o.degree_D = 12;
  const auto rep = io::run_resonance(io::load_system(sample("halfdouble.json")), o);
  EXPECT_EQ(rep["lattice"]["generators"], json::parse("[[1, 1]]"));
  EXPECT_EQ(rep["bounds"]["value"], json::parse("[1, 4]"));
  EXPECT_EQ(rep["bounds"]["verification"]["min_gap"], json::parse("[1, 4]"));
  EXPECT_EQ(rep["bounds"]["verification"]["witness"]["exponent"], json::parse("[2, 0]"));
  EXPECT_EQ(rep["bounds"]["verification"]["witness"]["component"], 1);
}

TEST(Reports, ClassifyThreeDimensional) {
  io::RunOptions o;
  o.degree_D = 8;
  o.order_N = 8;
  const auto rep = io::run_classify(io::load_system(sample("base2_3d.json")), o);
  EXPECT_EQ(rep["classification"]["verdict"], "integrable-consistent");
  EXPECT_EQ(rep["classification"]["rank"], 2);
  EXPECT_EQ(rep["classification"]["reduction"]["iota"], 2);
  EXPECT_EQ(rep["classification"]["reduction"]["r"], json::parse("[[-5, 2], [1, 1], [1, 2]]"));
  EXPECT_TRUE(io::verify_report(rep).ok);
}

TEST(Reports, IntegralsAreVerified) {
  for (const char* name : {"center.json", "halfdouble.json", "base2_3d_symbolic.json"}) {
    io::RunOptions o;
    o.order_N = 4;
    const auto rep = io::run_integrals(io::load_system(sample(name)), o);
    for (const auto& e : rep["integrals"]["search"]) EXPECT_TRUE(e["residual_zero"].get<bool>()) << name;
    for (const auto& e : rep["integrals"]["pullback"]) EXPECT_TRUE(e["residual_zero"].get<bool>()) << name;
    EXPECT_TRUE(io::verify_report(rep).ok) << name;
  }
}

TEST(Reports, EmbedFlagsOpenQuestion) {
  const auto rep = io::run_embed(io::load_system(sample("linear_halfdouble.json")), {});
  EXPECT_TRUE(rep["embedding"]["equivariance_residual_zero"].get<bool>());
  EXPECT_FALSE(rep["embedding"]["time_one"]["equals_F"].get<bool>());
  ASSERT_EQ(rep["embedding"]["flags"].size(), 1u);
  EXPECT_NE(rep["embedding"]["flags"][0].get<std::string>().find("time-one-map-differs"), std::string::npos);
  EXPECT_TRUE(io::verify_report(rep).ok);
}

TEST(Reports, TamperedNormalizationDetected) {
  auto rep = io::run_normalize(io::load_system(sample("halfdouble.json")), {});
  ASSERT_TRUE(io::verify_report(rep).ok);
  rep["normalization"]["phi"][0]["coeff"] = json::parse("[2, 1]");
  const auto outcome = io::verify_report(rep);
  EXPECT_FALSE(outcome.ok);
  bool named = false;
  for (const auto& c : outcome.report["checks"])
    if (c["check"] == "conjugacy" && !c["ok"].get<bool>())
      named = c["witness"].get<std::string>().find("component") != std::string::npos;
  EXPECT_TRUE(named);
}

TEST(Reports, TamperedIntegralDetected) {
  io::RunOptions o;
  o.order_N = 4;
  auto rep = io::run_integrals(io::load_system(sample("center.json")), o);
  rep["integrals"]["search"][0]["series"][0]["coeff"] = json::parse("[1, 1]");
  rep["integrals"]["search"][0]["series"].push_back(json::parse(R"({"exponent": [2, 0], "coeff": [1, 1]})"));
  EXPECT_FALSE(io::verify_report(rep).ok);
}

TEST(Binary, ClassifyAndDeterminism) {
  const auto a = run("classify --input " + sample("base2_3d.json") + " --degree 8 --order 8");
  const auto b = run("classify --input " + sample("base2_3d.json") + " --degree 8 --order 8");
  ASSERT_EQ(a.status, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto rep = io::parse_text(a.out);
  EXPECT_EQ(rep["classification"]["verdict"], "integrable-consistent");
  EXPECT_EQ(rep["lattice"]["rank"], 2);
}

TEST(Binary, TextFormat) {
  const auto r = run("classify --input " + sample("base2_3d.json") + " --format text");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("verdict: integrable-consistent"), std::string::npos);
  EXPECT_NE(r.out.find("iota = 2, r = -5/2 1 1/2"), std::string::npos);
}

TEST(Binary, VerifyRoundTripAndTamper) {
  const std::string report = (scratch() / "normalize.json").string();
  ASSERT_EQ(run("normalize --input " + sample("halfdouble.json") + " --output " + report).status, 0);
  EXPECT_EQ(run("verify --input " + report).status, 0);
  auto rep = io::parse_file(report);
  rep["normalization"]["g"][0]["coeff"] = json::parse("[3, 7]");
  const std::string tampered = write_temp("tampered.json", io::dump(rep));
  const auto r = run("verify --input " + tampered + " --format text");
  EXPECT_EQ(r.status, 4);
  EXPECT_NE(r.out.find("FAIL  conjugacy"), std::string::npos);
  EXPECT_NE(r.out.find("component"), std::string::npos);
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run("classify --input /nonexistent/file.json").status, 2);
  EXPECT_EQ(run("classify --input " + write_temp("decimal.json", minimal_map("0.5"))).status, 2);
  EXPECT_EQ(run("frobnicate --input x").status, 2);
  EXPECT_EQ(run("classify").status, 2);
  EXPECT_EQ(run("normalize --input " + sample("base2_3d_symbolic.json")).status, 3);
  EXPECT_EQ(run("embed --input " + sample("center.json")).status, 3);
  EXPECT_EQ(run("embed --input " + sample("poincare_12.json")).status, 3);
  EXPECT_EQ(run("resonance --input " + sample("center.json")).status, 0);
}

TEST(Binary, EveryCommandOnEverySample) {
  for (const char* name : {"halfdouble.json", "square_2d.json", "base2_3d.json", "base2_3d_symbolic.json",
                           "linear_halfdouble.json", "center.json", "poincare_12.json", "shape_fail.json",
                           "gaussian.json"}) {
    for (const char* cmd : {"resonance", "normalize", "classify", "integrals", "embed"}) {
      const std::string out = (scratch() / "report.json").string();
      const auto r = run(std::string(cmd) + " --input " + sample(name) + " --order 5 --output " + out);
      ASSERT_TRUE(r.status == 0 || r.status == 3) << cmd << " " << name << ": " << r.err;
      if (r.status == 0) {
        EXPECT_EQ(run("verify --input " + out).status, 0) << cmd << " " << name;
      }
    }
  }
}
