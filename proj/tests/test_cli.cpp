#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GWSPEC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (const auto n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, SpectrumFormats) {
  const auto json = run("spectrum --a 1 --m 1 --n 5 --matrix dl --format json");
  EXPECT_EQ(json.code, 0);
  EXPECT_NE(json.out.find(R"({"kind":"surd","multiplicity":2,"sign":1,"t":5,"u":17})"), std::string::npos);
  const auto both = run("spectrum --a 2 --m 1 --n 7 --mode both --format json");
  EXPECT_EQ(both.code, 0);
  EXPECT_NE(both.out.find("\"max_deviation\""), std::string::npos);
  EXPECT_EQ(run("spectrum --a 2 --m 2 --n 4 --matrix adj").code, 0);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run("spectrum --a 0 --m 1 --n 3").code, 1);
  EXPECT_EQ(run("classify --a 1 --m 1 --n 2").code, 1);
  EXPECT_EQ(run("spectrum --a 1 --m 1 --n 3 --matrix lap").code, 1);
  EXPECT_EQ(run("enumerate --which dl --method alpha").code, 1);
  EXPECT_EQ(run("verify --suite nope").code, 1);
  EXPECT_EQ(run("verify --suite gw-dq --max-order 2").code, 1);
  EXPECT_EQ(run("").code, 1);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run("verify --suite parity").code, 0);
  EXPECT_EQ(run("verify --suite alpha-equiv --format csv").code, 0);
  // The printed sporadic list lacks (3,9,6) and (6,1,4).
  const auto cls = run("verify --suite classification");
  EXPECT_EQ(cls.code, 2);
  EXPECT_NE(cls.out.find("unexpected (3,9,6)"), std::string::npos);
}

TEST(Cli, EnumerateExample) {
  const auto r = run("enumerate --which dq --a-max 5 --m-max 8 --n-values 4 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "a,m,n,t,c,verdict,case\n"
            "1,5,4,81,9,true,\"sporadic (1,5,4)\"\n"
            "2,1,4,36,6,true,\"sporadic (2,1,4)\"\n"
            "3,1,4,49,7,true,\"sporadic (3,1,4)\"\n"
            "3,4,4,676,26,true,\"sporadic (3,4,4)\"\n"
            "4,2,4,324,18,true,\"sporadic (4,2,4)\"\n");
}
