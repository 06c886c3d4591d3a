#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "morsewp_cli/commands.hpp"
#include "morsewp_cli/config.hpp"

namespace fs = std::filesystem;
using namespace morsewp::cli;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("morsewp_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "morsewp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str() + err.str();
  return code;
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string("\"") + MORSEWP_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::vector<std::string>> read_csv(const fs::path& path) {
  std::ifstream in(path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(CliConfig, DefaultsMatchTheReferenceSetup) {
  const RunConfig c;
  EXPECT_EQ(c.alphas, (std::vector<double>{1.4, 2.5}));
  EXPECT_EQ(c.grid_points, 4096u);
  EXPECT_DOUBLE_EQ(c.x_min, -0.8);
  EXPECT_DOUBLE_EQ(c.x_max, 4.0);
  EXPECT_NO_THROW(c.validate());
}

TEST(CliConfig, FileParsesKeysCommentsAndLists) {
  const auto dir = scratch("file");
  const auto path = dir / "run.cfg";
  std::ofstream(path) << "# comment\n\nD = 0.2   # trailing\nalpha = 1, 2.5,3\ntime = 1/8, 120.5\n"
                         "grid_points = 256\neigenfunctions = yes\nout = results\n";
  RunConfig c;
  load_config_file(path, c);
  EXPECT_DOUBLE_EQ(c.molecule.D, 0.2);
  EXPECT_EQ(c.alphas, (std::vector<double>{1.0, 2.5, 3.0}));
  ASSERT_EQ(c.times.size(), 2u);
  EXPECT_TRUE(c.times[0].fractional);
  EXPECT_FALSE(c.times[1].fractional);
  EXPECT_DOUBLE_EQ(c.times[1].value, 120.5);
  EXPECT_EQ(c.grid_points, 256u);
  EXPECT_TRUE(c.eigenfunctions);
  EXPECT_EQ(c.out_dir, fs::path("results"));
}

TEST(CliConfig, UnknownKeyAndBadValuesAreRejectedWithLineNumbers) {
  const auto dir = scratch("badfile");
  const auto path = dir / "bad.cfg";
  std::ofstream(path) << "alpha = 1.4\ncolour = blue\n";
  RunConfig c;
  try {
    load_config_file(path, c);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find(":2: unknown configuration key 'colour'"), std::string::npos);
  }
  EXPECT_THROW(apply_setting(c, "grid_points", "12x"), ConfigError);
  EXPECT_THROW(apply_setting(c, "alpha", "nan"), ConfigError);
  EXPECT_THROW(apply_setting(c, "eigenfunctions", "maybe"), ConfigError);
  EXPECT_THROW(load_config_file(dir / "missing.cfg", c), IoError);
}

TEST(CliConfig, TimeParsingRequiresLowestTerms) {
  const auto t = parse_time("3/8");
  EXPECT_TRUE(t.fractional);
  EXPECT_EQ(t.r, 3);
  EXPECT_EQ(t.q, 8);
  EXPECT_EQ(t.tag(), "3-8");
  EXPECT_THROW(parse_time("2/8"), ConfigError);
  EXPECT_THROW(parse_time("1/0"), ConfigError);
  EXPECT_THROW(parse_time("-1/8"), ConfigError);
  EXPECT_THROW(parse_time("-5"), ConfigError);
  EXPECT_THROW(parse_time("abc"), ConfigError);
  const morsewp::Timescales ts{840.0, 48000.0};
  EXPECT_DOUBLE_EQ(t.resolve(ts), 18000.0);
  EXPECT_DOUBLE_EQ(parse_time("100").resolve(ts), 100.0);
}

TEST(CliConfig, ValidationRejectsInconsistentSettings) {
  RunConfig c;
  c.x_min = 5.0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = RunConfig{};
  c.molecule.D = -1.0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = RunConfig{};
  c.precision = 0;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(CliRun, CommandLineOverridesFileOverridesDefaults) {
  const auto dir = scratch("precedence");
  const auto cfg = dir / "run.cfg";
  std::ofstream(cfg) << "alpha = 3\nprecision = 4\n";
  ASSERT_EQ(run({"coefficients", "--config", cfg.string(), "--alpha", "1.4", "--out", dir.string()}), 0);
  const auto rows = read_csv(dir / "dm.csv");
  ASSERT_EQ(rows.size(), 31u);
  EXPECT_EQ(rows[1][0], "1.4000e+00");  // alpha from the command line, precision from the file
}

TEST(CliRun, ExitCodes) {
  const auto dir = scratch("exit");
  EXPECT_EQ(run_binary("--help"), 0);
  EXPECT_EQ(run_binary(""), 1);
  EXPECT_EQ(run_binary("spectrum --grid-points nope"), 1);
  EXPECT_EQ(run_binary("spectrum --grid-points 3 --out " + dir.string()), 1);
  EXPECT_EQ(run_binary("spectrum --config " + (dir / "missing.cfg").string()), 3);
  std::ofstream(dir / "blocker") << "x";
  EXPECT_EQ(run_binary("spectrum --out " + (dir / "blocker" / "sub").string()), 3);
  EXPECT_EQ(run_binary("spectrum --out " + dir.string()), 0);
}

TEST(CliRun, SpectrumWritesThirtyLevels) {
  const auto dir = scratch("spectrum");
  std::string text;
  ASSERT_EQ(run({"spectrum", "--out", dir.string(), "--eigenfunctions", "--grid-points", "1025"}, &text), 0);
  EXPECT_NE(text.find("n_max = 29"), std::string::npos);
  const auto rows = read_csv(dir / "levels.csv");
  ASSERT_EQ(rows.size(), 31u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"n", "E_n", "s_n"}));
  EXPECT_EQ(rows[1][0], "0");
  EXPECT_NEAR(std::stod(rows[1][1]), -0.108731539822687063, 1e-12);
  for (std::size_t i = 2; i < rows.size(); ++i) EXPECT_GT(std::stod(rows[i][1]), std::stod(rows[i - 1][1]));
  const auto eig = read_csv(dir / "eigenfunctions.csv");
  ASSERT_EQ(eig.size(), 1026u);
  EXPECT_EQ(eig[0].size(), 31u);
  // The default window cuts off the highest levels.
  EXPECT_NE(text.find("warning: level 29"), std::string::npos);
}

TEST(CliRun, CoefficientsAreNormalizedWithDecreasingArgmax) {
  const auto dir = scratch("dm");
  ASSERT_EQ(run({"coefficients", "--out", dir.string(), "--alpha", "0", "--alpha", "1.4", "--alpha", "2.5"}),
            0);
  const auto rows = read_csv(dir / "dm.csv");
  ASSERT_EQ(rows.size(), 1u + 3u * 30u);
  std::map<double, double> sums;
  std::map<double, std::pair<int, double>> argmax;
  std::map<double, int> nonzero;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double alpha = std::stod(rows[i][0]);
    const double p = std::stod(rows[i][4]);
    sums[alpha] += p;
    if (p > 0.0) ++nonzero[alpha];
    if (p > argmax[alpha].second) argmax[alpha] = {std::stoi(rows[i][1]), p};
  }
  for (const auto& [alpha, s] : sums) EXPECT_NEAR(s, 1.0, 1e-10) << alpha;
  EXPECT_EQ(nonzero[0.0], 1);
  EXPECT_EQ(argmax[0.0].first, 29);
  EXPECT_GT(argmax[1.4].first, argmax[2.5].first);
}

TEST(CliRun, EvolveWritesNormalizedDensities) {
  const auto dir = scratch("evolve");
  ASSERT_EQ(run({"evolve", "--out", dir.string(), "--alpha", "1.4", "--time", "1/4", "--time", "840.5",
                 "--grid-points", "2049"}),
            0);
  for (const auto* name : {"density_alpha1.4_t1-4.csv", "density_alpha1.4_t840.5.csv"}) {
    const auto rows = read_csv(dir / name);
    ASSERT_EQ(rows.size(), 2050u) << name;
    double h = std::stod(rows[2][0]) - std::stod(rows[1][0]);
    double total = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double w = (i == 1 || i == rows.size() - 1) ? 0.5 : 1.0;
      total += w * h * std::stod(rows[i][1]);
    }
    EXPECT_NEAR(total, 1.0, 1e-6) << name;
  }
}

TEST(CliRun, DefaultTimesCoverTheRevivalFractions) {
  const auto dir = scratch("evolve_defaults");
  ASSERT_EQ(run({"evolve", "--out", dir.string(), "--alpha", "2.5", "--grid-points", "513"}), 0);
  for (const auto* tag : {"0-1", "1-8", "1-4", "1-2"}) {
    EXPECT_TRUE(fs::exists(dir / (std::string("density_alpha2.5_t") + tag + ".csv"))) << tag;
  }
}

TEST(CliRun, WignerPartsSumToTotal) {
  const auto dir = scratch("wigner");
  ASSERT_EQ(run({"wigner", "--out", dir.string(), "--alpha", "1.4", "--grid-points", "1024", "--p-points",
                 "128", "--matrix-stride", "4"}),
            0);
  const auto load = [&](const std::string& part) { return read_csv(dir / ("wigner_" + part + "_alpha1.4.csv")); };
  const auto even = load("even"), odd = load("odd"), inter = load("int"), total = load("total");
  ASSERT_EQ(total.size(), 1u + 256u);
  ASSERT_EQ(total[0].size(), 1u + 32u);
  EXPECT_EQ(total[0][0], "x\\p");
  double worst = 0.0;
  for (std::size_t i = 1; i < total.size(); ++i) {
    for (std::size_t j = 1; j < total[i].size(); ++j) {
      const double sum = std::stod(even[i][j]) + std::stod(odd[i][j]) + std::stod(inter[i][j]);
      worst = std::max(worst, std::abs(std::stod(total[i][j]) - sum));
    }
  }
  EXPECT_LT(worst, 1e-10);
  const auto m = read_csv(dir / "moments.csv");
  ASSERT_EQ(m.size(), 2u);
  EXPECT_NEAR(std::stod(m[1][5]), 5.5914, 0.02 * 5.5914);
}

TEST(CliRun, OutputIsByteIdenticalAcrossRuns) {
  const auto a = scratch("det_a"), b = scratch("det_b");
  for (const auto& dir : {a, b}) {
    ASSERT_EQ(run({"wigner", "--out", dir.string(), "--alpha", "2.5", "--grid-points", "512", "--p-points",
                   "64"}),
              0);
    ASSERT_EQ(run({"evolve", "--out", dir.string(), "--alpha", "2.5", "--grid-points", "512"}), 0);
  }
  std::size_t compared = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    EXPECT_EQ(slurp(entry.path()), slurp(b / entry.path().filename())) << entry.path();
    ++compared;
  }
  EXPECT_EQ(compared, 9u);
}

TEST(CliRun, CoarseGridReportFlagsMarginalFidelity) {
  const auto dir = scratch("report_coarse");
  std::string text;
  EXPECT_EQ(run({"report", "--out", dir.string(), "--grid-points", "128"}, &text), 2);
  const auto report = slurp(dir / "report.txt");
  EXPECT_NE(report.find("FAIL Wigner marginal fidelity"), std::string::npos);
  EXPECT_NE(report.find("PASS spectrum"), std::string::npos);
  EXPECT_NE(report.find("summary:"), std::string::npos);
}
