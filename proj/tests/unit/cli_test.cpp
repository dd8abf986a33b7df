#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <sys/wait.h>

#include "oracles.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(COSETCHAR_CLI) + " " + args + " 2>&1";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& f) { return cosetchar::testing::data_path(f); }

TEST(Cli, AnalyzeFrobenius) {
  const auto r = run("analyze " + data("f5.grp"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("coset N: #C = 2, #R = 2"), std::string::npos);
  EXPECT_NE(r.out.find("[0.4472135955, 0.894427191]"), std::string::npos);
}

TEST(Cli, AnalyzeQuaternionCenterAllCosets) {
  const auto r = run("analyze --json " + data("q8_center.grp"));
  EXPECT_EQ(r.code, 0) << r.out;
  std::size_t count = 0, pos = 0;
  while ((pos = r.out.find("\"gram_exact\": true", pos)) != std::string::npos) ++count, ++pos;
  EXPECT_EQ(count, 4u);
}

TEST(Cli, AnalyzeSingleCoset) {
  const auto r = run("analyze " + data("f5.grp") + " --coset q^2");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("coset q^2"), std::string::npos);
  EXPECT_EQ(r.out.find("coset N:"), std::string::npos);
  EXPECT_EQ(run("analyze " + data("f5.grp") + " --coset q^x").code, 2);
  EXPECT_EQ(run("analyze " + data("f5.grp") + " --coset q^5").code, 0);
}

TEST(Cli, MatrixGroup) {
  const auto r = run("analyze " + data("gl2_f3.grp"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("#G = 48, #N = 24"), std::string::npos);
  EXPECT_NE(r.out.find("extendable characters of N       3"), std::string::npos);
}

TEST(Cli, LargerMatrixGroup) {
  const auto r = run("analyze " + data("gl2_f5.grp"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("#G = 480, #N = 120"), std::string::npos);
  EXPECT_NE(r.out.find("extendable characters of N       5"), std::string::npos);
}

TEST(Cli, Table) {
  const auto r = run("table " + data("f5.json"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("order 20"), std::string::npos);
}

TEST(Cli, Invert) {
  const auto r = run("invert " + data("f5.grp") + " " + data("f5_theta.txt"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("reconstruction sum equals Theta exactly: yes"), std::string::npos);
  const auto v = run("invert " + data("f5.grp") + " " + data("f5_regular.txt"));
  EXPECT_EQ(v.code, 0) << v.out;
}

TEST(Cli, Selftest) {
  const auto r = run("selftest --samples 2");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  const auto nn = run("analyze " + data("s3_non_normal.grp"));
  EXPECT_EQ(nn.code, 3);
  EXPECT_NE(nn.out.find("normal"), std::string::npos);
  const auto na = run("analyze " + data("s3_non_abelian_quotient.grp"));
  EXPECT_EQ(na.code, 3);
  EXPECT_NE(na.out.find("abelian"), std::string::npos);
  EXPECT_EQ(run("analyze " + data("bad_syntax.grp")).code, 2);
  EXPECT_EQ(run("analyze /nonexistent/file.grp").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("analyze " + data("gl2_f3.grp") + " --order-limit 10").code, 3);
  EXPECT_EQ(run("invert " + data("q8_center.grp") + " " + data("f5_theta.txt")).code, 3);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, DeterministicOutput) {
  const auto a = run("analyze --json " + data("gl2_f3.grp"));
  const auto b = run("analyze --json " + data("gl2_f3.grp"));
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
