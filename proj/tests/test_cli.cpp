#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "unrep/cli.hpp"
#include "unrep/spec_file.hpp"

using namespace unrep;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "unrep");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string spec(const std::string& file) {
  return (fs::path(UNREP_SPEC_DIR) / file).string();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("unrep_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST(Cli, NoCommandIsUsageError) { EXPECT_EQ(run({}).code, kExitUsage); }

TEST(Cli, UnknownFlag) { EXPECT_EQ(run({"sample", "--bogus"}).code, kExitUsage); }

TEST(Cli, VerifyCatalogPassesAndIsDeterministic) {
  const Invocation a = run({"verify-catalog"});
  const Invocation b = run({"verify-catalog"});
  EXPECT_EQ(a.code, kExitPass) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"tool_version\""), std::string::npos);
}

TEST(Cli, VerifyCatalogOnlyUnknown) {
  EXPECT_EQ(run({"verify-catalog", "--only", "nosuch"}).code, kExitUsage);
}

TEST(Cli, VerifyCatalogOnlyOneCsv) {
  const fs::path csv = scratch("verify.csv");
  const Invocation r = run({"verify-catalog", "--only", "u3u4", "--csv", csv.string()});
  EXPECT_EQ(r.code, kExitPass);
  const std::string text = slurp(csv);
  EXPECT_EQ(text.rfind("instance,kind,description,pass,residual,tolerance,detail\n", 0), 0u);
  EXPECT_EQ(text.find("example1"), std::string::npos);
  EXPECT_NE(text.find("u3u4,implication-equality"), std::string::npos);
}

TEST(Cli, AxiomsDrasticBand) {
  EXPECT_EQ(run({"axioms", spec("drastic_band.ini")}).code, kExitPass);
}

TEST(Cli, AxiomsImplication) {
  EXPECT_EQ(run({"axioms", spec("ex1_i1.ini")}).code, kExitPass);
}

TEST(Cli, AxiomsWrongNeutralFails) {
  const fs::path p = scratch("bad_neutral.ini");
  std::ofstream(p) << "[operator]\nbuilder = drastic-band\ne = 0.5\nneutral = 0.4\n";
  const Invocation r = run({"axioms", p.string()});
  EXPECT_EQ(r.code, kExitNegative);
  EXPECT_NE(r.err.find("FAIL"), std::string::npos);
}

TEST(Cli, AxiomsMissingKey) {
  const fs::path p = scratch("missing_e.ini");
  std::ofstream(p) << "[operator]\nbuilder = drastic-band\n";
  const Invocation r = run({"axioms", p.string()});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("missing key 'e'"), std::string::npos) << r.err;
}

TEST(Cli, AxiomsUnknownKey) {
  const fs::path p = scratch("unknown_key.ini");
  std::ofstream(p) << "[operator]\nbuilder = drastic-band\ne = 0.5\ncolour = red\n";
  EXPECT_EQ(run({"axioms", p.string()}).code, kExitUsage);
}

TEST(Cli, MissingFile) {
  EXPECT_EQ(run({"axioms", "/nonexistent/x.ini"}).code, kExitUsage);
}

std::string cuts_csv(const std::string& name, std::vector<std::string> extra, int& code) {
  const fs::path csv = scratch(name);
  std::vector<std::string> args = {"cuts", spec(name + ".ini"), "--csv", csv.string()};
  args.insert(args.end(), extra.begin(), extra.end());
  code = run(args).code;
  return slurp(csv);
}

TEST(Cli, CutsDrasticBandOneValid) {
  int code = -1;
  const std::string text = cuts_csv("drastic_band", {}, code);
  EXPECT_EQ(code, kExitPass);
  EXPECT_EQ(lines(text), 101u);
  EXPECT_NE(text.find("\n0.5,true,true,0,1,true\n"), std::string::npos);
  EXPECT_NE(text.find("# valid 1 of 99"), std::string::npos) << text;
}

TEST(Cli, CutsExampleAllValid) {
  int code = -1;
  const std::string text = cuts_csv("ex1_u1", {}, code);
  EXPECT_NE(text.find("# valid 99 of 99"), std::string::npos) << text;
}

TEST(Cli, CutsEqUfList) {
  int code = -1;
  const std::string text = cuts_csv("equf", {"--alphas", "0.375,0.5,0.6"}, code);
  EXPECT_EQ(code, kExitPass);
  EXPECT_EQ(text,
            "alpha,monotone,continuous,f0,f1,valid\n"
            "0.375,true,true,0,1,true\n"
            "0.5,true,true,0,1,true\n"
            "0.59999999999999998,true,false,0,1,false\n"
            "# valid 2 of 3\n");
}

TEST(Cli, CutsReportIsJson) {
  const Invocation r = run({"cuts", spec("equf.ini"), "--alphas", "0.375"});
  EXPECT_NE(r.out.find("\"valid_count\": 1"), std::string::npos) << r.out;
}

TEST(Cli, ExtractExampleQuarter) {
  const fs::path dir = scratch("extract");
  const Invocation r = run({"extract", "--catalog", "example1", "--alpha", "0.25", "--out",
                     dir.string()});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_TRUE(fs::exists(dir / "n_star.csv"));
  EXPECT_TRUE(fs::exists(dir / "u_star.csv"));
  EXPECT_TRUE(fs::exists(dir / "record.json"));
}

TEST(Cli, ExtractStepFails) {
  EXPECT_EQ(run({"extract", spec("step_i.ini"), "--alpha", "0.3"}).code, kExitNegative);
}

TEST(Cli, ExtractNeedsAlpha) {
  EXPECT_EQ(run({"extract", "--catalog", "example1"}).code, kExitUsage);
}

TEST(Cli, EqualExampleImplications) {
  const Invocation r = run({"equal", spec("ex1_i1.ini"), spec("ex1_i2.ini"), "--exclude",
                     "0,0;1,1"});
  EXPECT_EQ(r.code, kExitPass) << r.out << r.err;
}

TEST(Cli, EqualU3U4Differ) {
  EXPECT_EQ(run({"equal", spec("u3.ini"), spec("u4.ini")}).code, kExitNegative);
}

TEST(Cli, EqualBadExclusion) {
  EXPECT_EQ(run({"equal", spec("u3.ini"), spec("u4.ini"), "--exclude", "0.5"}).code,
            kExitUsage);
}

TEST(Cli, SampleRowCount) {
  const Invocation r = run({"sample", spec("drastic_band.ini"), "--grid", "4"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out.rfind("x,y,value\n", 0), 0u);
  EXPECT_EQ(lines(r.out), 26u);
}

TEST(Cli, SampledOperatorRoundTrips) {
  const fs::path csv = scratch("sampled.csv");
  const fs::path ini = scratch("sampled.ini");
  ASSERT_EQ(run({"sample", spec("ex1_u2.ini"), "--grid", "16", "--out", csv.string()}).code,
            kExitPass);
  std::ofstream(ini) << "[operator]\nbuilder = sampled\nfile = " << csv.string() << "\n";
  const Invocation again = run({"sample", ini.string(), "--grid", "16"});
  EXPECT_EQ(again.code, kExitPass) << again.err;
  EXPECT_EQ(again.out, slurp(csv));
}

TEST(Cli, SeedParsesHex) {
  EXPECT_EQ(run({"axioms", spec("drastic_band.ini"), "--seed", "0x1234"}).code, kExitPass);
  EXPECT_EQ(run({"axioms", spec("drastic_band.ini"), "--seed", "zz"}).code, kExitUsage);
}

TEST(Render, SeventeenDigits) {
  EXPECT_EQ(render(0.1), "0.10000000000000001");
  EXPECT_EQ(render(0.5), "0.5");
  EXPECT_EQ(std::stod(render(1.0 / 3.0)), 1.0 / 3.0);
}
