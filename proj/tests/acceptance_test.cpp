// End-to-end acceptance run. Each test covers one numbered acceptance
// criterion, drives the real CLI binary where the criterion is about the
// command-line surface, and prints a single [criterion N] PASS/FAIL line
// so the whole contract can be read off the log at a glance.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "eulerian/io.hpp"
#include "eulerian/oracle.hpp"
#include "eulerian/orbit.hpp"
#include "eulerian/triangle.hpp"
#include "golden_rows.h"
#include "gtest/gtest.h"

namespace eulerian {
namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI built alongside this test, capturing stdout and the exit
// code; stderr is dropped so usage errors stay quiet in the log.
CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + EULERIAN_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed for: " + cmd);
  CliResult result;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.output.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::chrono::steady_clock::time_point now() { return std::chrono::steady_clock::now(); }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(now() - start).count();
}

// Prints the criterion verdict when the test body finishes, whether it
// returned normally or bailed out on a fatal assertion.
class Announcer {
 public:
  Announcer(int criterion, std::string summary) : criterion_(criterion), summary_(std::move(summary)) {}
  ~Announcer() {
    const bool ok = !::testing::Test::HasFailure();
    std::cout << "[criterion " << criterion_ << "] " << (ok ? "PASS" : "FAIL") << ": " << summary_ << std::endl;
  }

 private:
  int criterion_;
  std::string summary_;
};

void expect_no_failures(const CheckReport& report, const std::string& label) {
  EXPECT_FALSE(report.empty()) << label;
  const CheckReport bad = failures(report);
  EXPECT_TRUE(bad.empty()) << label << ": " << bad.size() << " violations, first: "
                           << (bad.empty() ? std::string() : bad[0].name + " [" + bad[0].detail + "]");
}

TEST(Acceptance, GoldenTables) {
  Announcer announce(1, "CLI paper-range tables for B, C and D match the frozen reference rows in under 1 s");
  const auto start = now();
  const struct {
    const char* kind;
    const testing::Rows& rows;
  } cases[] = {{"B", testing::golden_b()}, {"C", testing::golden_c()}, {"D", testing::golden_d()}};
  for (const auto& c : cases) {
    const CliResult r = run_cli(std::string("table --kind ") + c.kind + " --paper-range --format csv");
    ASSERT_EQ(r.exit_code, 0) << c.kind;
    const Triangle t = triangle_from_csv(r.output);
    ASSERT_EQ(t.n_max(), 10) << c.kind;
    for (size_t i = 0; i < c.rows.size(); ++i) {
      const int n = static_cast<int>(i) + 2;
      ASSERT_EQ(t.row(n).size(), c.rows[i].size()) << c.kind << " n=" << n;
      for (size_t k = 0; k < c.rows[i].size(); ++k)
        ASSERT_EQ(t.at(n, static_cast<int>(k)), BigInt(c.rows[i][k])) << c.kind << " n=" << n << " k=" << k;
    }
  }
  const CliResult pretty = run_cli("table --kind D --paper-range --format pretty");
  EXPECT_EQ(pretty.exit_code, 0);
  EXPECT_NE(pretty.output.find("n = 10"), std::string::npos);
  EXPECT_NE(pretty.output.find("-276"), std::string::npos);
  EXPECT_LT(seconds_since(start), 1.0);
}

TEST(Acceptance, OracleEquivalence) {
  Announcer announce(2, "enumerated B/C/D equal the recurrence triangles for every n = 2..10 within budget");
  const TriangleBundle t = compute_bundle(10);
  const auto start_single = now();
  for (int n = 2; n <= 10; ++n) {
    const auto counts = enumerate_counts(n, 1);
    for (int k = 0; k < n; ++k) {
      const auto& cell = counts[static_cast<size_t>(k)];
      ASSERT_EQ(BigInt(cell.even_total()), t.b.at(n, k)) << "B " << n << "," << k;
      ASSERT_EQ(BigInt(cell.odd_total()), t.c.at(n, k)) << "C " << n << "," << k;
      ASSERT_EQ(BigInt(cell.signed_diff()), t.d.at(n, k)) << "D " << n << "," << k;
    }
  }
  EXPECT_LT(seconds_since(start_single), 120.0);

  const auto start_wide = now();
  const auto wide = enumerate_counts(10, 8);
  EXPECT_LT(seconds_since(start_wide), 30.0);
  for (int k = 0; k < 10; ++k) {
    EXPECT_EQ(BigInt(wide[static_cast<size_t>(k)].even_total()), t.b.at(10, k)) << k;
    EXPECT_EQ(BigInt(wide[static_cast<size_t>(k)].odd_total()), t.c.at(10, k)) << k;
  }
}

TEST(Acceptance, OrbitSumIdentities) {
  Announcer announce(3, "divisor-weighted orbit sums rebuild previous and current rows for n = 5, 7, 9");
  for (int n : {5, 7, 9}) expect_no_failures(check_orbit_sums(n), "orbit sums n=" + std::to_string(n));
}

TEST(Acceptance, ClassCardinalitiesAndDifferences) {
  Announcer announce(4, "signed-class cardinalities (odd n <= 9) and class differences (n <= 10) match enumeration");
  for (int n = 3; n <= 9; n += 2)
    expect_no_failures(check_class_cardinalities(n), "cardinalities n=" + std::to_string(n));
  for (int n = 2; n <= 10; ++n) expect_no_failures(check_class_differences(n), "differences n=" + std::to_string(n));
}

TEST(Acceptance, SymmetryLaws) {
  Announcer announce(5, "mirror symmetries hold on all rows to n = 50 and a corrupted cell is detected");
  expect_no_failures(check_symmetry(compute_bundle(50)), "symmetry n<=50");
  const CliResult faulted = run_cli("verify --suite symmetry --n-max 10 --inject-fault 6,1 --format pretty");
  EXPECT_EQ(faulted.exit_code, 1);
  EXPECT_NE(faulted.output.find("FAIL"), std::string::npos);
  EXPECT_NE(faulted.output.find("B(6,1)"), std::string::npos);
}

TEST(Acceptance, EvenCrossRelations) {
  Announcer announce(6, "even-row cross-recurrences over the previous split row hold exactly to n = 50");
  expect_no_failures(even_n_cross_check(50), "even cross n<=50");
}

TEST(Acceptance, ParityCounterexample) {
  Announcer announce(7, "C(10,4) = 655315 is odd while every interior entry of row 9 is even");
  const TriangleBundle t = compute_bundle(10);
  EXPECT_EQ(t.c.at(10, 4), BigInt(655315));
  EXPECT_EQ(t.c.at(10, 4) % 2, BigInt(1));
  for (int k = 1; k <= 7; ++k) {
    EXPECT_EQ(t.b.at(9, k) % 2, BigInt(0)) << "B(9," << k << ")";
    EXPECT_EQ(t.c.at(9, k) % 2, BigInt(0)) << "C(9," << k << ")";
  }
  expect_no_failures(odd_n_recurrence_check(11), "odd-row recurrence with counterexample guard");
}

TEST(Acceptance, ProgressionOrbitCounts) {
  Announcer announce(8, "unit-divisor orbit counts follow the progression-permutation parity for n = 5, 7, 9");
  for (int n : {5, 7, 9}) expect_no_failures(check_progression_orbit_counts(n), "progression n=" + std::to_string(n));
}

TEST(Acceptance, PrimePowerDivisibility) {
  Announcer announce(9, "prime-power valuation bounds hold for all eight (n, p) pairs");
  const std::pair<int, int> pairs[] = {{9, 3}, {15, 3}, {15, 5}, {25, 5}, {27, 3}, {45, 3}, {45, 5}, {49, 7}};
  for (const auto& [n, p] : pairs)
    expect_no_failures(divisibility_report(n, p), std::to_string(n) + "," + std::to_string(p));
  const CliResult cli = run_cli("verify --suite divisibility --format json");
  EXPECT_EQ(cli.exit_code, 0);
  EXPECT_NE(cli.output.find("\"violations\": []"), std::string::npos);
}

TEST(Acceptance, LargeTrianglePerformance) {
  Announcer announce(10, "kind-D table to n = 200 renders in under 10 s with exact row-sum and mirror laws");
  const std::string path = ::testing::TempDir() + "acceptance_d200.csv";
  const auto start = now();
  const CliResult r = run_cli("table --kind D --n-max 200 --format csv --out " + path);
  const double elapsed = seconds_since(start);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_LT(elapsed, 10.0);

  std::ifstream in(path);
  ASSERT_TRUE(in.good()) << path;
  std::stringstream buf;
  buf << in.rdbuf();
  const Triangle d = triangle_from_csv(buf.str());
  ASSERT_EQ(d.kind(), TriangleKind::D);
  ASSERT_EQ(d.n_max(), 200);
  BigInt sum = 0;
  bool beyond_64_bit = false;
  const BigInt limit("18446744073709551615");
  for (int k = 0; k < 200; ++k) {
    const BigInt& v = d.at(200, k);
    sum += v;
    if (v > limit || v < -limit) beyond_64_bit = true;
    ASSERT_EQ(v, d.at(200, 199 - k)) << k;  // row 200 is self-mirrored
  }
  EXPECT_EQ(sum, BigInt(0));
  EXPECT_TRUE(beyond_64_bit);
  std::remove(path.c_str());
}

TEST(Acceptance, OracleDeterminism) {
  Announcer announce(11, "enumeration-backed verification output is byte-identical for 1, 4 and 8 workers");
  const std::string base = "verify --suite cor4.3 --format json";
  const CliResult one = run_cli(base + " --threads 1");
  ASSERT_EQ(one.exit_code, 0);
  ASSERT_FALSE(one.output.empty());
  for (int threads : {4, 8}) {
    const CliResult many = run_cli(base + " --threads " + std::to_string(threads));
    EXPECT_EQ(many.exit_code, 0) << threads;
    EXPECT_EQ(many.output, one.output) << threads << " workers diverged";
  }
}

}  // namespace
}  // namespace eulerian
