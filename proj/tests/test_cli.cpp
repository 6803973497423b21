#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name)
{
  const fs::path p = fs::temp_directory_path() / ("expander_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int run(const std::string& args)
{
  const std::string line = std::string(EXPANDER_LAB_PATH) + " " + args + " 2>/dev/null >/dev/null";
  const int rc = std::system(line.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p)
{
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path write_config(const fs::path& dir, const std::string& text)
{
  const fs::path p = dir / "config.json";
  std::ofstream(p) << text;
  return p;
}

} // namespace

TEST(Cli, CertifyEnvelope)
{
  const fs::path dir = scratch("certify");
  ASSERT_EQ(run("certify --out " + dir.string()), 0);
  const auto j = nlohmann::json::parse(slurp(dir / "certify.json"));
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["command"], "certify");
  EXPECT_EQ(j["result"]["order_formula"], "49!/2");
  EXPECT_EQ(j["config"]["d"], 2);
  EXPECT_TRUE(fs::exists(dir / "run.log"));
}

TEST(Cli, ExitCodes)
{
  const fs::path dir = scratch("codes");
  EXPECT_EQ(run("certify --config " + write_config(dir, R"({"bogus": 1})").string()), 2);
  EXPECT_EQ(run("certify --config " + write_config(dir, R"({"d": 2.5})").string()), 2);
  EXPECT_EQ(run("certify --config " + write_config(dir, R"({"d": "two"})").string()), 2);
  EXPECT_EQ(run("nonsense"), 2);
  EXPECT_EQ(run("certify --config " + write_config(dir, R"({"drop_until_intransitive": true})").string() +
                " --out " + dir.string()),
            4);
  EXPECT_EQ(run("spectrum --config " +
                write_config(dir, R"({"max_vertices": 10, "probes": 0})").string()),
            3);
  EXPECT_EQ(run("spectrum --config " +
                write_config(dir, R"({"solver": "power", "max_iterations": 5, "probes": 0})").string()),
            5);
  EXPECT_EQ(run("kazhdan --config " +
                write_config(dir, R"j({"generators": ["(0 1)", "(0 1 2 3 4)"], "degree": 5})j").string()),
            2);
}

TEST(Cli, RerunsAreByteIdentical)
{
  const fs::path a = scratch("rerun_a"), b = scratch("rerun_b");
  const fs::path cfg = write_config(a, R"({"samples": 300, "steps": 50, "pairs": 40})");
  ASSERT_EQ(run("walk --config " + cfg.string() + " --out " + a.string() + " --seed 3"), 0);
  ASSERT_EQ(run("walk --config " + cfg.string() + " --out " + b.string() + " --seed 3"), 0);
  EXPECT_EQ(slurp(a / "walk.json"), slurp(b / "walk.json"));
  const fs::path c = scratch("rerun_c");
  ASSERT_EQ(run("walk --config " + cfg.string() + " --out " + c.string() + " --seed 4"), 0);
  EXPECT_NE(slurp(a / "walk.json"), slurp(c / "walk.json"));
}

TEST(Cli, DotAndCsv)
{
  const fs::path dir = scratch("formats");
  const fs::path cfg = write_config(dir, R"({"family": "C", "c_samples": 12, "chars_n": 5})");
  ASSERT_EQ(run("spectrum --format dot --config " + cfg.string() + " --out " + dir.string()), 0);
  const std::string dot = slurp(dir / "graph.dot");
  std::size_t nodes = 0;
  std::istringstream lines(dot);
  for (std::string line; std::getline(lines, line);)
    if (line.back() == ';' && line.find("--") == std::string::npos)
      ++nodes;
  EXPECT_EQ(dot.rfind("graph", 0), 0u);
  EXPECT_EQ(nodes, 49u);
  ASSERT_EQ(run("chars --format csv --config " + cfg.string() + " --out " + dir.string()), 0);
  const std::string csv = slurp(dir / "chars.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 8);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "partition,5,4+1,3+2,3+1+1,2+2+1,2+1+1+1,1+1+1+1+1");
}
