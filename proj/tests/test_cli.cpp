#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "dyck/cli.hpp"

using namespace dyck::cli;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dyck-squares");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("triangle pretty layout") {
  const auto r = invoke({"triangle", "4"});
  REQUIRE(r.status == 0);
  const auto ls = lines(r.out);
  // Rows j = 4..0, a rule, then the i axis.
  REQUIRE(ls.size() == 7);
  CHECK(ls[0] == "4 |         1");
  CHECK(ls[2] == "2 |     1   3");
  CHECK(ls[4] == "0 | 1   1   2");
  CHECK(ls[5] == "  +----------");
  CHECK(ls[6] == "    0 1 2 3 4");
}

TEST_CASE("triangle records") {
  auto r = invoke({"triangle", "0", "--format", "json"});
  REQUIRE(r.status == 0);
  CHECK(r.out == "[{\"i\":0,\"j\":0,\"value\":\"1\"}]\n");

  r = invoke({"triangle", "14", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& rec : doc) {
    if (rec["i"] == 13 && rec["j"] == 1) found = rec["value"] == "429";
  }
  CHECK(found);

  r = invoke({"triangle", "2", "--format", "csv"});
  CHECK(r.out == "i,j,value\n0,0,1\n1,1,1\n2,0,1\n2,2,1\n");
}

TEST_CASE("decompose") {
  auto r = invoke({"decompose", "7", "--format", "json"});
  REQUIRE(r.status == 0);
  CHECK(r.out ==
        "{\"n\":7,\"catalan\":\"429\",\"terms\":[\"1\",\"6\",\"14\",\"14\"],"
        "\"squares\":[\"1\",\"36\",\"196\",\"196\"]}\n");

  r = invoke({"decompose", "6"});
  CHECK(r.out.find("C_6 = 1^2 + 5^2 + 9^2 + 5^2 = 132") != std::string::npos);

  r = invoke({"decompose", "1", "--format", "csv"});
  CHECK(r.out == "n,k,term,square\n1,0,1,1\n1,sum,,1\n");
}

TEST_CASE("big values stay exact in JSON") {
  const auto r = invoke({"decompose", "300", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["catalan"].is_string());
  CHECK(doc["catalan"].get<std::string>().size() > 170);
  // Re-serialising the parsed document reproduces it byte for byte.
  CHECK(nlohmann::ordered_json::parse(r.out).dump() + "\n" == r.out);
}

TEST_CASE("convolution") {
  auto r = invoke({"convolution", "5", "0", "--format", "csv"});
  CHECK(r.out == "n,j,value\n0,0,1\n1,0,1\n2,0,2\n3,0,5\n4,0,14\n5,0,42\n");
  r = invoke({"convolution", "0", "0", "--format", "json"});
  CHECK(r.out == "[{\"n\":0,\"j\":0,\"value\":\"1\"}]\n");
  r = invoke({"convolution", "6", "6", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.back()["n"] == 6);
  CHECK(doc.back()["j"] == 6);
  CHECK(doc.back()["value"] == "1");
  r = invoke({"convolution", "5", "1"});
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[2] == "  0 |  1  1  2  5 14 42");
}

TEST_CASE("enumerate") {
  auto r = invoke({"enumerate", "2"});
  CHECK(r.out == "(())\n()()\n");
  r = invoke({"enumerate", "3"});
  CHECK(lines(r.out).size() == 5);
  r = invoke({"enumerate", "0"});
  CHECK(r.out == "\n");
  r = invoke({"enumerate", "0", "--format", "csv"});
  CHECK(r.out == "word\n\"\"\n");
  r = invoke({"enumerate", "2", "--format", "json"});
  CHECK(r.out == "[\"(())\",\"()()\"]\n");
}

TEST_CASE("usage and cap errors exit 2") {
  CHECK(invoke({}).status == kExitUsage);
  CHECK(invoke({"bogus"}).status == kExitUsage);
  CHECK(invoke({"decompose", "3", "--format", "xml"}).status == kExitUsage);
  auto r = invoke({"enumerate", "15"});
  CHECK(r.status == kExitUsage);
  CHECK(r.out.empty());
  CHECK(r.err.find("cap") != std::string::npos);
  CHECK(invoke({"triangle", "20", "--cap", "10"}).status == kExitUsage);
  CHECK(invoke({"verify", "--oracle-max-n", "15"}).status == kExitUsage);
  CHECK(invoke({"enumerate", "1", "--cap", "1"}).status == kExitOk);
}

TEST_CASE("verify") {
  auto r = invoke({"verify", "--max-n", "0", "--oracle-max-n", "0"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("result: PASS") != std::string::npos);

  r = invoke({"verify", "--max-n", "64", "--oracle-max-n", "10"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("sum_of_squares          pass=65 fail=0") != std::string::npos);
  CHECK(r.out.find("fail=0") != std::string::npos);
  CHECK(r.out == invoke({"verify", "--max-n", "64", "--oracle-max-n", "10"}).out);

  r = invoke({"verify", "--max-n", "3", "--oracle-max-n", "1", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["ok"] == true);
  CHECK(doc["first_mismatch"].is_null());
}

TEST_CASE("verify reports an injected fault") {
  VerifyOptions opts;
  opts.max_n = 10;
  opts.oracle_max_n = 3;
  opts.fault = TermFault{7, 2};
  const auto report = run_verify(opts);
  CHECK_FALSE(report.ok());
  REQUIRE(report.first_mismatch);
  CHECK(report.first_mismatch->check == "sum_of_squares");
  CHECK(report.first_mismatch->where == "n=7");
  CHECK(report.first_mismatch->expected == dyck::BigNat(429));
  // 1 + 36 + 15^2 + 196
  CHECK(report.first_mismatch->got == dyck::BigNat(458));

  std::ostringstream out;
  CHECK(cmd_verify(opts, OutputFormat::kPretty, out) == kExitVerifyFailed);
  CHECK(out.str().find("first mismatch: sum_of_squares n=7 expected=429 got=458") != std::string::npos);
  CHECK(out.str().find("result: FAIL") != std::string::npos);
}
