#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "signet/cli.hpp"
#include "signet/graph_io.hpp"
#include "support/fixtures.hpp"

using namespace signet;
using namespace signet::testing;

namespace {

struct TempGraphFile {
  std::filesystem::path path;

  explicit TempGraphFile(const Fixture& f) {
    path = std::filesystem::temp_directory_path() /
           ("signet_test_" + f.name + "_" + std::to_string(::getpid()) + ".txt");
    std::ofstream out(path);
    out << format_graph(make_graph(f));
  }
  ~TempGraphFile() { std::filesystem::remove(path); }
};

struct CliResult {
  int status = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string value_of(const std::string& output, const std::string& key) {
  std::istringstream lines(output);
  std::string line;
  while (std::getline(lines, line))
    if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
  return {};
}

}  // namespace

TEST_CASE("analyze reports the digon as balanced") {
  TempGraphFile file(fixture("neg_digon"));
  const auto res = run_cli({"analyze", file.path.string()});
  CHECK(res.status == 0);
  CHECK(contains(res.out, "nodes: 2"));
  CHECK(contains(res.out, "strongly connected: yes"));
  CHECK(contains(res.out, "balanced, gauge [+1, -1]"));
  CHECK(contains(res.out, "mirror eigenvalues: [0, 2]"));
  CHECK(contains(res.out, "signed-average consensus"));
}

TEST_CASE("analyze reports the frustrated 3-cycle as unbalanced") {
  TempGraphFile file(fixture("neg_3cycle"));
  const auto res = run_cli({"analyze", file.path.string()});
  CHECK(res.status == 0);
  CHECK(contains(res.out, "unbalanced, witness cycle"));
  CHECK(contains(res.out, "state stability"));
}

TEST_CASE("analyze surfaces weight imbalance and the cofactor vector") {
  TempGraphFile file(fixture("wu_3cycle"));
  const auto res = run_cli({"analyze", file.path.string()});
  CHECK(res.status == 0);
  CHECK(contains(res.out, "weight balanced: no"));
  CHECK(contains(res.out, "cofactor weights w: [2, 1, 2]"));
}

TEST_CASE("simulate mirror protocol on the digon") {
  TempGraphFile file(fixture("neg_digon"));
  const auto res = run_cli({"simulate", file.path.string(), "--protocol", "mirror",
                            "--x0", "1,2", "--t-end", "20"});
  CHECK(res.status == 0);
  CHECK(value_of(res.out, "outcome") == "signed_average_consensus");
  CHECK(contains(res.out, "limit estimate: [-0.5, 0.5]"));
}

TEST_CASE("simulate cofactor protocol polarizes the six-node fixture") {
  TempGraphFile file(fixture("six_balanced"));
  const auto res = run_cli({"simulate", file.path.string(), "--protocol", "cofactor",
                            "--x0", "1,2,3,4,5,6"});
  CHECK(res.status == 0);
  CHECK(value_of(res.out, "outcome") == "signed_average_consensus");
  CHECK(contains(res.out, "-1.5, -1.5, -1.5, 1.5, 1.5, 1.5"));
}

TEST_CASE("simulate reports state stability on the unbalanced fixture") {
  TempGraphFile file(fixture("neg_3cycle"));
  const auto res = run_cli({"simulate", file.path.string(), "--protocol", "mirror",
                            "--x0", "1,2,3", "--t-end", "40"});
  CHECK(res.status == 0);
  CHECK(value_of(res.out, "outcome") == "state_stability");
}

TEST_CASE("simulate classic protocol lands on the bipartite value") {
  TempGraphFile file(fixture("wu_3cycle"));
  const auto res = run_cli({"simulate", file.path.string(), "--protocol", "classic",
                            "--x0", "1,0,2"});
  CHECK(res.status == 0);
  CHECK(value_of(res.out, "outcome") == "bipartite_consensus");
  CHECK(std::stod(value_of(res.out, "consensus_value")) == doctest::Approx(1.2).epsilon(1e-3));
}

TEST_CASE("simulate fixed-time prints the a priori bound next to the measurement") {
  TempGraphFile file(fixture("neg_digon"));
  const auto res = run_cli({"simulate", file.path.string(), "--protocol", "fixed-time",
                            "--x0", "1,2", "--t-end", "5", "--tol", "1e-3"});
  CHECK(res.status == 0);
  CHECK(contains(res.out, "settling bound (a priori)"));
  CHECK(contains(res.out, "settling time (measured)"));
}

TEST_CASE("simulate finite-time protocol with an explicit alpha") {
  TempGraphFile file(fixture("neg_digon"));
  const auto res = run_cli({"simulate", file.path.string(), "--protocol", "finite-time",
                            "--alpha", "0.5", "--x0", "1,2", "--t-end", "8",
                            "--tol", "1e-3"});
  CHECK(res.status == 0);
  CHECK(value_of(res.out, "outcome") == "signed_average_consensus");
}

TEST_CASE("simulate writes byte-identical CSV across runs") {
  TempGraphFile file(fixture("neg_digon"));
  const auto csv1 = std::filesystem::temp_directory_path() / "signet_traj_1.csv";
  const auto csv2 = std::filesystem::temp_directory_path() / "signet_traj_2.csv";
  for (const auto& p : {csv1, csv2}) {
    const auto res = run_cli({"simulate", file.path.string(), "--protocol", "mirror",
                              "--x0", "1,2", "--t-end", "10", "--out", p.string()});
    REQUIRE(res.status == 0);
  }
  std::ifstream f1(csv1), f2(csv2);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  CHECK(s1.str() == s2.str());
  CHECK(s1.str().rfind("t,x1,x2\n", 0) == 0);
  std::filesystem::remove(csv1);
  std::filesystem::remove(csv2);
}

TEST_CASE("bound uses lambda_2 on balanced graphs") {
  TempGraphFile file(fixture("wu_3cycle"));  // lambda_2 = 3
  const auto res = run_cli({"bound", file.path.string()});
  CHECK(res.status == 0);
  CHECK(contains(res.out, "using lambda_2 = 3"));
  CHECK(std::stod(value_of(res.out, "bound")) ==
        doctest::Approx(2.198252614885135).epsilon(1e-9));
}

TEST_CASE("bound uses lambda_1 on unbalanced graphs") {
  TempGraphFile file(fixture("neg_3cycle"));
  const auto res = run_cli({"bound", file.path.string()});
  CHECK(res.status == 0);
  CHECK(contains(res.out, "using lambda_1"));
}

TEST_CASE("bound on the digon with the default parameters") {
  TempGraphFile file(fixture("neg_digon"));
  const auto res = run_cli({"bound", file.path.string()});
  CHECK(res.status == 0);
  CHECK(std::stod(value_of(res.out, "bound")) ==
        doctest::Approx(3.1821566489291717).epsilon(1e-9));
}

TEST_CASE("missing files and bad flags give nonzero exits with one-line errors") {
  CHECK(run_cli({"analyze", "/nonexistent/graph.txt"}).status == 1);

  TempGraphFile file(fixture("neg_digon"));
  const auto bad_x0 = run_cli({"simulate", file.path.string(), "--protocol", "mirror",
                               "--x0", "1,zebra"});
  CHECK(bad_x0.status == 2);
  CHECK(contains(bad_x0.err, "x0"));

  const auto bad_protocol = run_cli({"simulate", file.path.string(), "--protocol",
                                     "warp", "--x0", "1,2"});
  CHECK(bad_protocol.status == 2);

  const auto even_exponent = run_cli({"simulate", file.path.string(), "--protocol",
                                      "fixed-time", "--x0", "1,2", "--m", "8"});
  CHECK(even_exponent.status == 1);
  CHECK(contains(even_exponent.err, "odd"));

  const auto missing_alpha = run_cli({"simulate", file.path.string(), "--protocol",
                                      "finite-time", "--x0", "1,2"});
  CHECK(missing_alpha.status == 2);
  CHECK(contains(missing_alpha.err, "--alpha"));

  const auto no_args = run_cli({});
  CHECK(no_args.status == 2);
}

TEST_CASE("analyze degrades gracefully without strong connectivity") {
  const auto path = std::filesystem::temp_directory_path() / "signet_one_way.txt";
  {
    std::ofstream out(path);
    out << "n 2\n2 1 1\n";  // no return path
  }
  const auto res = run_cli({"analyze", path.string()});
  CHECK(res.status == 0);
  CHECK(contains(res.out, "strongly connected: no"));
  CHECK(contains(res.out, "skipped"));

  const auto sim = run_cli({"simulate", path.string(), "--protocol", "mirror",
                            "--x0", "1,2"});
  CHECK(sim.status == 1);
  CHECK(contains(sim.err, "strongly connected"));
  std::filesystem::remove(path);
}

TEST_CASE("parse errors carry line numbers") {
  const auto path = std::filesystem::temp_directory_path() / "signet_bad_graph.txt";
  {
    std::ofstream out(path);
    out << "n 2\n1 2 -1\n2 1 1\n";  // digon sign violation
  }
  const auto res = run_cli({"analyze", path.string()});
  CHECK(res.status == 1);
  CHECK(contains(res.err, "digon"));
  std::filesystem::remove(path);

  {
    std::ofstream out(path);
    out << "n 2\n1 2 oops\n";
  }
  const auto res2 = run_cli({"analyze", path.string()});
  CHECK(res2.status == 1);
  CHECK(contains(res2.err, ":2"));
  std::filesystem::remove(path);
}
