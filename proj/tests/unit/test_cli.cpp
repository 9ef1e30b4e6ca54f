#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

using nlohmann::json;

namespace {

struct Result {
  int code = -1;
  std::string out;
  json doc() const { return json::parse(out); }
};

Result run(const std::string& args, const std::string& input = "") {
  static int counter = 0;
  std::string path = testing::TempDir() + "latred_cli_" + std::to_string(counter++) + ".json";
  std::ofstream(path) << input;
  std::string cmd = std::string(LATRED_BIN) + " " + args + " < " + path + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::remove(path.c_str());
  return r;
}

const char* kDiag14 = R"({"n":2,"gram":[["1","0"],["0","4"]]})";

}  // namespace

TEST(Cli, CanfiltInteger) {
  Result r = run("canfilt --ring z", kDiag14);
  ASSERT_EQ(r.code, 0) << r.out;
  json j = r.doc();
  EXPECT_EQ(j["c_values"]["1"]["exact"], "ln(2)");
  EXPECT_EQ(j["c_values"]["1"]["c_sq_ratio"], "4/1");
  EXPECT_EQ(j["path"], json::parse("[0,1,2]"));
  EXPECT_EQ(j["chain"][1]["basis"], json::parse(R"([["1","0"]])"));
}

TEST(Cli, FfInvariants) {
  Result r = run("ff-invariants", R"({"q":2,"n":2,"S_basis":[["1","0"],["0","t^2"]]})");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.doc()["r"], json::parse("[-2,0]"));
}

TEST(Cli, BuildingNeighbors) {
  Result r = run("building neighbors --p 2 --n 2", R"({"basis":[["1","0"],["0","1"]]})");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.doc()["count"], 3);
  EXPECT_EQ(run("building-neighbors --p 2 --n 2", R"({"basis":[["1","0"],["0","1"]]})").out, r.out);
}

TEST(Cli, ChainRoundTrip) {
  json chain = run("canfilt --ring z", kDiag14).doc();
  json in{{"form", json::parse(kDiag14)}, {"summand", chain["chain"][1]}};
  Result c = run("cvalue --ring z", in.dump());
  ASSERT_EQ(c.code, 0) << c.out;
  EXPECT_EQ(c.doc()["c"], chain["c_values"]["1"]);
  json v{{"form", json::parse(kDiag14)}};
  EXPECT_EQ(run("volume --ring z", v.dump()).doc()["logvol"], chain["minima"][2]["logvol"]);
}

TEST(Cli, ExitCodes) {
  Result bad = run("canfilt --ring z", "{bad");
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(bad.doc()["error"]["kind"], "parse");
  Result domain = run("canfilt --ring z", R"({"n":2,"gram":[[1,0],[0,-1]]})");
  EXPECT_EQ(domain.code, 3);
  EXPECT_EQ(domain.doc()["error"]["kind"], "definiteness");
  EXPECT_EQ(run("no-such-verb").code, 2);
  EXPECT_EQ(run("canfilt --ring z", R"({"gram":"x"})").code, 2);
  EXPECT_EQ(run("building neighbors --p 4 --n 2").code, 3);
  EXPECT_EQ(run("core-reps --n 9 --theta 1").code, 3);
}

TEST(Cli, Deterministic) {
  const std::string in = R"({"q":2,"vertices":[{"r":[-9,0,9]}],"coeffs":["1"]})";
  Result a = run("cover-membership --theta 4", in), b = run("cover-membership --theta 4", in);
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run("selfcheck --seed 7 --scale 3").out, run("selfcheck --seed 7 --scale 3").out);
}

TEST(Cli, Covers) {
  Result m = run("cover-membership --theta 8", R"({"q":2,"r":[-5,5]})");
  ASSERT_EQ(m.code, 0) << m.out;
  EXPECT_EQ(m.doc()["count"], 1);
  EXPECT_EQ(m.doc()["members"][0]["c"], "10");
  Result t = run("cover-membership --theta 8 --beta 1/2 --lipschitz 8", R"({"q":2,"r":[-9,9]})");
  EXPECT_EQ(t.doc()["thinned"]["member"], true);
  EXPECT_EQ(run("core-test --theta 1", R"({"r":[0,0]})").doc()["core"], true);
  EXPECT_EQ(run("core-test --theta 1", R"({"r":[-3,3]})").doc()["core"], false);
  EXPECT_EQ(run("core-reps --n 2 --theta 1").doc()["reps"], json::parse("[[0,0],[0,1]]"));
}

TEST(Cli, OtherVerbs) {
  Result c = run("chamber-count --n 3 --r 2 --k 1");
  ASSERT_EQ(c.code, 0) << c.out;
  EXPECT_EQ(c.doc()["formula"], "3");
  EXPECT_EQ(c.doc()["agree"], true);
  Result f = run("factorize", R"({"A":[["1/2","0"],["0","3"]],"T":[2]})");
  ASSERT_EQ(f.code, 0) << f.out;
  EXPECT_EQ(f.doc()["checks"]["product"], true);
  EXPECT_EQ(f.doc()["checks"]["B_invertible_away_from_T"], true);
  EXPECT_EQ(f.doc()["checks"]["C_invertible_at_T"], true);
  Result t = run("triangulate", R"({"x":["1/2","0"],"lambda":"1/3"})");
  ASSERT_EQ(t.code, 0) << t.out;
  EXPECT_EQ(t.doc()["reconstructs"], true);
  EXPECT_EQ(t.doc()["shifted"]["matches_direct"], true);
  EXPECT_EQ(run("label-diff --p 2 --n 2", R"({"v1":{"basis":[["1","0"],["0","1"]]},"v2":{"basis":[["1","0"],["0","1/2"]]}})").doc()["adjacent"], true);
  EXPECT_EQ(run("apartment", R"({"m":[1,0]})").code, 0);
  Result i = run("intersect", R"({"structure":{"T":[2],"B":[["1","0"],["0","1"]]},"summand":{"basis":[["1","1/2"]]}})");
  ASSERT_EQ(i.code, 0) << i.out;
  EXPECT_EQ(i.doc()["intersection"]["rank"], 1);
}

TEST(Cli, Selfcheck) {
  Result s = run("selfcheck --seed 1 --scale 5");
  EXPECT_EQ(s.code, 0) << s.out;
  EXPECT_EQ(s.doc()["passed"], true);
}
