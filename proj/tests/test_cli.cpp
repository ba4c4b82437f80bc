#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hankeldet");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hankeldet::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Seq) {
  EXPECT_EQ(run({"seq", "E_k", "--upto", "6"}).out, "1 0 -1 0 5 0 -61\n");
  const Result poly = run({"seq", "E[k](x)", "--upto", "2"});
  EXPECT_EQ(poly.out, "0: 1\n1: x - 1/2\n2: x^2 - x\n");
  const auto j = nlohmann::json::parse(run({"seq", "B_k", "--upto", "2", "--json"}).out);
  EXPECT_EQ(j, nlohmann::json::parse(R"(["1","-1/2","1/6"])"));
}

TEST(Cli, Hankel) {
  EXPECT_EQ(run({"hankel", "kE_{k-1}", "--n", "3"}).out, "256\n");
  EXPECT_EQ(run({"hankel", "E_k", "--n", "4", "--algorithm", "checkerboard"}).out, "82944\n");
  EXPECT_EQ(run({"hankel", "E_k", "--n", "4", "--algorithm", "recurrence"}).out, "82944\n");
  EXPECT_EQ(run({"hankel", "B[2k+1]((x+1)/2)", "--n", "1"}).out, "-1/48*x^4 + 1/48*x^2\n");
  EXPECT_EQ(run({"hankel", "B[2k+1]((x+1)/2)", "--n", "1", "--at", "3"}).out, "-3/2\n");
  const auto j = nlohmann::json::parse(run({"hankel", "E_k", "--n", "2", "--json"}).out);
  EXPECT_EQ(j["value"], "-4");
  EXPECT_EQ(j["algorithm"], "RationalGauss");
}

TEST(Cli, Matrix) {
  EXPECT_EQ(run({"matrix", "E_k", "--n", "1"}).out, " 1   0\n 0  -1\n");
  const auto j = nlohmann::json::parse(run({"matrix", "kE_{k-1}", "--n", "1", "--json"}).out);
  EXPECT_EQ(j, nlohmann::json::parse(R"([["0","1"],["1","0"]])"));
}

TEST(Cli, Recurrence) {
  const Result r = run({"recurrence", "B_k", "--order", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("s_0 = 1/2\n"), std::string::npos);
  EXPECT_NE(r.out.find("t_1 = -1/12\n"), std::string::npos);
  EXPECT_NE(r.out.find("t_2 = -4/15\n"), std::string::npos);
  const Result at = run({"recurrence", "B[2k+1]((x+1)/2)", "--order", "3", "--at", "1/2"});
  EXPECT_NE(at.out.find("t_3 = 81/16\n"), std::string::npos);
  const Result degenerate = run({"recurrence", "kE_{k-1}", "--order", "2"});
  EXPECT_EQ(degenerate.code, hankeldet::cli::kFailure);
  EXPECT_NE(degenerate.err.find("DegenerateMoments"), std::string::npos);
}

TEST(Cli, ClosedForm) {
  EXPECT_EQ(run({"closed-form", "Hn_Ek", "--n", "0"}).out, "1\n");
  EXPECT_EQ(run({"closed-form", "H_diffB", "--param", "q=3", "--param", "r=1", "--param", "s=2", "--n", "3"}).out,
            "4/59049\n");
  EXPECT_EQ(run({"closed-form", "Hn_B2k+1_poly", "--n", "1", "--param", "x=3"}).out, "-3/2\n");
  const auto j = nlohmann::json::parse(run({"closed-form", "H_kEk-1", "--n", "3", "--json"}).out);
  EXPECT_EQ(j["value"], "256");
}

TEST(Cli, Verify) {
  const Result ok = run({"verify", "--id", "Hn_Ek", "--id", "H_Ek+2(1)", "--max", "5"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("PASS  Hn_Ek  n=0..5  6/6 matched"), std::string::npos);
  EXPECT_NE(ok.out.find("REPORT  H_Ek+2(1)"), std::string::npos);
  EXPECT_NE(ok.out.find("2 identities: 1 passed, 0 failed, 1 report-only"), std::string::npos);
  const auto j = nlohmann::json::parse(run({"verify", "--id", "Hn_Bk", "--max", "2", "--json"}).out);
  EXPECT_EQ(j["summary"]["passed"], 1);
  const Result csv = run({"verify", "--id", "Hn_Bk", "--max", "1", "--csv"});
  EXPECT_EQ(csv.out.rfind("id,status,index", 0), 0u);
  EXPECT_EQ(run({"verify", "--id", "Hn_B2k+1_poly", "--max", "3", "--param", "x=1/3"}).code, 0);
}

TEST(Cli, ListAndTable) {
  const Result ids = run({"list"});
  EXPECT_NE(ids.out.find("Hn_Ek  [table-all-n, Asserted]  E[k]"), std::string::npos);
  EXPECT_NE(run({"list", "characters"}).out.find("chi12_2  mod 12  conductor 4"), std::string::npos);
  EXPECT_NE(run({"list", "sequences"}).out.find("Z[k]"), std::string::npos);
  EXPECT_EQ(nlohmann::json::parse(run({"list", "identities", "--json"}).out).size(), 120u);

  const Result all_n = run({"table", "all-n", "--cells", "2"});
  EXPECT_EQ(all_n.code, 0);
  EXPECT_NE(all_n.out.find("E[k]\n"), std::string::npos);
  EXPECT_NE(all_n.out.find("H_0..H_2: 1 -1 -4  [verified]"), std::string::npos);
  const Result odd = run({"table", "odd-only", "--cells", "3", "--csv"});
  EXPECT_EQ(odd.out.rfind("id,sequence,formula,citation,H_0,H_1,H_2,H_3,verified\n", 0), 0u);
  EXPECT_NE(odd.out.find("H_kEk-1,k*E[k-1],"), std::string::npos);
  const Result latex = run({"table", "all-n", "--cells", "1", "--latex"});
  EXPECT_EQ(latex.out.rfind("\\begin{tabular}", 0), 0u);
  EXPECT_NE(latex.out.find("\\end{tabular}"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, hankeldet::cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, hankeldet::cli::kUsage);
  EXPECT_EQ(run({"hankel", "E_k"}).code, hankeldet::cli::kUsage);
  EXPECT_EQ(run({"hankel", "Q[k]", "--n", "2"}).code, hankeldet::cli::kUsage);
  EXPECT_EQ(run({"closed-form", "nope", "--n", "2"}).code, hankeldet::cli::kUsage);
  EXPECT_EQ(run({"closed-form", "Hn_Ek", "--n", "1", "--param", "junk"}).code, hankeldet::cli::kUsage);
  EXPECT_EQ(run({"table", "7.1"}).code, hankeldet::cli::kUsage);
  EXPECT_EQ(run({"verify", "--json", "--csv"}).code, hankeldet::cli::kUsage);
  const Result bad = run({"seq", "B[k", "--upto", "2"});
  EXPECT_EQ(bad.code, hankeldet::cli::kUsage);
  EXPECT_EQ(bad.err.rfind("error: ParseError: ", 0), 0u);
  EXPECT_EQ(run({"--help"}).code, 0);
}
