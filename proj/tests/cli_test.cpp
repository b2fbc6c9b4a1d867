#include <gtest/gtest.h>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "pdm/cli.hpp"
#include "pdm/error.hpp"
#include "pdm/sweep.hpp"

namespace pdm::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path temp_path(const std::string& name) {
  return fs::temp_directory_path() / ("pdm_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

std::vector<double> split_numbers(const std::string& line) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= line.size()) {
    auto end = line.find(',', start);
    if (end == std::string::npos) end = line.size();
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(line.data() + start, line.data() + end, v);
    EXPECT_EQ(ec, std::errc()) << line;
    EXPECT_EQ(ptr, line.data() + end) << line;
    values.push_back(v);
    start = end + 1;
  }
  return values;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

TEST(ParseConfig, Example) {
  const auto c = parse_config("mu = 1.5  # comment\n");
  ASSERT_EQ(c.values.size(), 1u);
  EXPECT_EQ(c.values.at("mu"), "1.5");
  EXPECT_TRUE(c.warnings.empty());
}

TEST(ParseConfig, SpecExample) {
  const auto c = parse_config("mu = 1.0\n# note\nk = 2.0");
  EXPECT_EQ(c.values.at("mu"), "1.0");
  EXPECT_EQ(c.values.at("k"), "2.0");
  try {
    parse_config("bogus = 3");
    FAIL();
  } catch (const ConfigSyntaxError& e) {
    EXPECT_EQ(e.line(), 1);
  }
}

TEST(ParseConfig, BlankAndCommentLines) {
  const auto c = parse_config("\n# only a comment\n   \n steps=3\r\nfrom = 0\n");
  EXPECT_EQ(c.values.at("steps"), "3");
  EXPECT_EQ(c.values.at("from"), "0");
}

TEST(ParseConfig, MissingEqualsReportsLine) {
  try {
    parse_config("mu = 1\nmu 1.5\n");
    FAIL();
  } catch (const ConfigSyntaxError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.code(), Errc::ConfigSyntax);
  }
}

TEST(ParseConfig, UnknownKeyAndEmptyParts) {
  EXPECT_THROW(parse_config("bogus = 1\n"), ConfigSyntaxError);
  EXPECT_THROW(parse_config(" = 1\n"), ConfigSyntaxError);
  EXPECT_THROW(parse_config("mu =\n"), ConfigSyntaxError);
}

TEST(ParseConfig, DuplicateKeepsLastAndWarns) {
  const auto c = parse_config("mu = 1\nmu = 2\n");
  EXPECT_EQ(c.values.at("mu"), "2");
  ASSERT_EQ(c.warnings.size(), 1u);
  EXPECT_NE(c.warnings[0].find("mu"), std::string::npos);
}

TEST(ParseConfig, RoundTrip) {
  std::mt19937_64 rng(12);
  const auto keys = known_keys();
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  std::uniform_int_distribution<int> count(0, 12);
  std::uniform_real_distribution<double> value(-100.0, 100.0);
  for (int i = 0; i < 500; ++i) {
    ConfigFragment f;
    const int n = count(rng);
    for (int j = 0; j < n; ++j) {
      f.values[std::string(keys[pick(rng)])] = format_number(value(rng));
    }
    const auto back = parse_config(render_config(f));
    ASSERT_EQ(back.values, f.values);
    ASSERT_TRUE(back.warnings.empty());
  }
}

TEST(Run, AnalyticReferenceValue) {
  const auto r = invoke({"scatter", "analytic", "--mu", "1"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_NE(r.out.find("u0 = 0.44444444444444442"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("R = -0.42352941176470588"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("T = 0.90588235294117647"), std::string::npos) << r.out;
  EXPECT_TRUE(r.err.empty());
}

TEST(Run, AnalyticCsvAndGlobalFlagPlacement) {
  const auto before = invoke({"--format", "csv", "scatter", "analytic", "--mu", "1"});
  const auto after = invoke({"scatter", "analytic", "--mu", "1", "--format", "csv"});
  ASSERT_EQ(before.code, kSuccess) << before.err;
  EXPECT_EQ(before.out, after.out);
  const auto lines = lines_of(before.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], sweep_csv_header(SweepAxis::Mu));
  const auto v = split_numbers(lines[1]);
  ASSERT_EQ(v.size(), 9u);
  EXPECT_EQ(v[0], 1.0);
  EXPECT_NEAR(v[6], v[2] * v[2] + v[3] * v[3], 1e-15);
}

TEST(Run, WarnsOutsideRange) {
  const auto r = invoke({"scatter", "analytic", "--mu", "-0.5"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Run, ObstructedOrderingIsDomainError) {
  const auto r = invoke({"scatter", "analytic", "--mu", "1", "--ordering", "ZhuKroemer"});
  EXPECT_EQ(r.code, kDomainError);
  EXPECT_NE(r.err.find("DeltaSquaredObstruction"), std::string::npos) << r.err;
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Run, PipelineModeUsesDerivedCoupling) {
  const auto r = invoke({"--format", "csv", "scatter", "analytic", "--mu", "1", "--mode", "pipeline"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto v = split_numbers(lines_of(r.out)[1]);
  const auto expected = amplitudes_pure_dprime(-2.0 / 9.0);
  EXPECT_NEAR(v[2], expected.r.real(), 1e-15);
}

TEST(Run, DomainAndUsageErrors) {
  EXPECT_EQ(invoke({"scatter", "analytic", "--mu", "-2"}).code, kDomainError);
  EXPECT_EQ(invoke({"scatter", "analytic"}).code, kUsageError);
  EXPECT_EQ(invoke({"scatter", "analytic", "--mu", "abc"}).code, kUsageError);
  EXPECT_EQ(invoke({"scatter", "analytic", "--bogus", "1"}).code, kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"--format", "xml", "ordering", "list"}).code, kUsageError);
  EXPECT_EQ(invoke({"scatter", "oracle", "--u0", "2", "--a", "1", "--k", "1"}).code, kDomainError);
  EXPECT_EQ(invoke({"scatter", "oracle", "--u0", "1", "--a", "1", "--k", "0"}).code, kDomainError);
}

TEST(Run, HelpSucceeds) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("sweep"), std::string::npos);
}

TEST(Run, OrderingCommands) {
  const auto list = invoke({"--format", "csv", "ordering", "list"});
  ASSERT_EQ(list.code, kSuccess);
  EXPECT_EQ(lines_of(list.out).size(), 8u);
  const auto eval = invoke({"ordering", "eval", "--alpha", "-0.25", "--beta", "-0.5"});
  ASSERT_EQ(eval.code, kSuccess);
  EXPECT_NE(eval.out.find("G1=0 G2=0"), std::string::npos) << eval.out;
  const auto solve = invoke({"ordering", "solve", "--constraint", "delta2-free"});
  ASSERT_EQ(solve.code, kSuccess);
  EXPECT_NE(solve.out.find("alpha=-0.25"), std::string::npos);
  EXPECT_NE(solve.out.find("alpha=0.25"), std::string::npos);
  EXPECT_NE(solve.out.find("fails constraint: 2G1-G2 = 0.25"), std::string::npos) << solve.out;
  EXPECT_EQ(invoke({"ordering", "solve", "--constraint", "other"}).code, kUsageError);
}

TEST(Run, OracleReportsClosedFormAgreement) {
  const auto r = invoke({"--format", "csv", "scatter", "oracle", "--u0", "0.4", "--a", "1", "--k", "2"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto v = split_numbers(lines_of(r.out)[1]);
  ASSERT_EQ(v.size(), 11u);
  EXPECT_LT(v[10], 1e-14);
}

TEST(Run, NumericSolver) {
  const auto r = invoke({"--format", "csv", "scatter", "numeric", "--mu", "1", "--epsilon", "10",
                         "--energy", "1"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto v = split_numbers(lines_of(r.out)[1]);
  EXPECT_GE(v[7], 0.999);
  EXPECT_EQ(invoke({"scatter", "numeric", "--mu", "1", "--epsilon", "0", "--energy", "1"}).code,
            kDomainError);
  EXPECT_EQ(invoke({"scatter", "numeric", "--mu", "1", "--epsilon", "1", "--energy", "-1"}).code,
            kDomainError);
}

TEST(Run, ConfigFileAndOverride) {
  const auto cfg = temp_path("cfg.txt");
  {
    std::ofstream f(cfg);
    f << "mu = 1\nformat = csv\n";
  }
  const auto from_file = invoke({"--config", cfg.string(), "scatter", "analytic"});
  ASSERT_EQ(from_file.code, kSuccess) << from_file.err;
  EXPECT_EQ(split_numbers(lines_of(from_file.out)[1])[0], 1.0);
  const auto overridden = invoke({"--config", cfg.string(), "scatter", "analytic", "--mu", "2"});
  EXPECT_EQ(split_numbers(lines_of(overridden.out)[1])[0], 2.0);
  {
    std::ofstream f(cfg);
    f << "mu = 1\nnonsense\n";
  }
  const auto bad = invoke({"--config", cfg.string(), "scatter", "analytic"});
  EXPECT_EQ(bad.code, kUsageError);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos) << bad.err;
  fs::remove(cfg);
  EXPECT_EQ(invoke({"--config", cfg.string(), "scatter", "analytic", "--mu", "1"}).code, kIoError);
}

TEST(Run, SweepMuDeterministicAndSelfConsistent) {
  const auto a = temp_path("a.csv");
  const auto b = temp_path("b.csv");
  const std::vector<std::string> base{"sweep", "mu", "--from", "0", "--to", "2", "--steps", "101", "--out"};
  auto args_a = base;
  args_a.push_back(a.string());
  auto args_b = base;
  args_b.push_back(b.string());
  ASSERT_EQ(invoke(args_a).code, kSuccess);
  ASSERT_EQ(invoke(args_b).code, kSuccess);
  const auto text = slurp(a);
  EXPECT_EQ(text, slurp(b));
  const auto lines = lines_of(text);
  ASSERT_EQ(lines.size(), 102u);
  EXPECT_EQ(lines[0], "mu,u0,re_r,im_r,re_t,im_t,prob_r,prob_t,unitarity_defect");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto v = split_numbers(lines[i]);
    ASSERT_EQ(v.size(), 9u);
    ASSERT_NEAR(v[6], v[2] * v[2] + v[3] * v[3], 1e-15);
    ASSERT_NEAR(v[7], v[4] * v[4] + v[5] * v[5], 1e-15);
    ASSERT_NEAR(v[8], v[6] + v[7] - 1.0, 1e-15);
    ASSERT_LE(std::abs(v[8]), 1e-12);
  }
  fs::remove(a);
  fs::remove(b);
}

TEST(Run, SweepNeedsOutAndValidatesGrid) {
  EXPECT_EQ(invoke({"sweep", "mu", "--from", "0", "--to", "1", "--steps", "3"}).code, kUsageError);
  const auto out = temp_path("bad.csv");
  EXPECT_EQ(invoke({"sweep", "mu", "--from", "-2", "--to", "1", "--steps", "3", "--out",
                    out.string()})
                .code,
            kDomainError);
  EXPECT_FALSE(fs::exists(out));
  EXPECT_EQ(invoke({"sweep", "mu", "--from", "0", "--to", "1", "--steps", "3", "--out",
                    "/nonexistent-dir/x.csv"})
                .code,
            kIoError);
}

TEST(Run, SweepEpsilonBothSolvers) {
  const auto out = temp_path("eps.csv");
  for (const char* solver : {"xspace", "qspace"}) {
    const auto r = invoke({"sweep", "epsilon", "--mu", "1", "--from", "2", "--to", "1", "--steps",
                           "2", "--energy", "1", "--solver", solver, "--out", out.string()});
    ASSERT_EQ(r.code, kSuccess) << r.err;
    const auto lines = lines_of(slurp(out));
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines[0], sweep_csv_header(SweepAxis::Epsilon));
    for (std::size_t i = 1; i < lines.size(); ++i) {
      EXPECT_LT(std::abs(split_numbers(lines[i])[8]), 1e-8);
    }
  }
  fs::remove(out);
}

TEST(Sweep, CsvExamples) {
  const auto rows = sweep_mu(std::vector<double>{0.0, 0.5, 1.0}, AnalyticOptions{});
  const auto lines = lines_of(format_sweep_csv(SweepAxis::Mu, rows));
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(split_numbers(lines[1])[7], 1.0);
  EXPECT_EQ(lines[3].substr(0, 22), "1,0.44444444444444442,");
  EXPECT_EQ(format_sweep_csv(SweepAxis::K, {}), "k,u0,re_r,im_r,re_t,im_t,prob_r,prob_t,unitarity_defect\n");
  const auto out = temp_path("empty.csv");
  ASSERT_EQ(invoke({"sweep", "mu", "--from", "0", "--to", "1", "--steps", "0", "--out", out.string()}).code,
            kSuccess);
  EXPECT_EQ(slurp(out), "mu,u0,re_r,im_r,re_t,im_t,prob_r,prob_t,unitarity_defect\n");
  fs::remove(out);
}

TEST(Sweep, LinearGrid) {
  EXPECT_TRUE(linear_grid(0, 1, 0).empty());
  EXPECT_EQ(linear_grid(3, 5, 1), std::vector<double>{3.0});
  const auto g = linear_grid(0, 2, 101);
  ASSERT_EQ(g.size(), 101u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 2.0);
  EXPECT_EQ(g[50], 1.0);
}

TEST(Sweep, FormatNumberRoundTrips) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int i = 0; i < 10000; ++i) {
    const double v = dist(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
    const auto text = format_number(v);
    double back = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), back);
    ASSERT_EQ(back, v) << text;
  }
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(0.25), "0.25");
}

TEST(Sweep, KAxis) {
  const std::vector<double> ks{0.5, 1.0, 2.0};
  const auto rows = sweep_k(0.4, 1.0, ks);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1].parameter, 1.0);
  EXPECT_THROW(sweep_k(0.4, 1.0, std::vector<double>{1.0, -1.0}), Error);
}

}  // namespace
}  // namespace pdm::cli
