#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qrep/errors.hpp"
#include "qrep_cli/cache.hpp"
#include "qrep_cli/cli.hpp"
#include "qrep_cli/config.hpp"

using namespace qrep;
using namespace qrep::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::path(QREP_TEST_TMPDIR) / name).string();
}

}  // namespace

TEST(MRange, Parsing) {
  const MRange single = parse_m_range("12");
  EXPECT_EQ(single.lo, 12);
  EXPECT_EQ(single.hi, 12);
  const MRange r = parse_m_range("3..40");
  EXPECT_EQ(r.lo, 3);
  EXPECT_EQ(r.hi, 40);
  EXPECT_EQ(r.size(), 38u);
  for (const char* bad : {"", "0", "-3", "5..2", "1..", "..4", "a..b", "1...4", "99999999999999999999"}) {
    EXPECT_THROW(parse_m_range(bad), InvalidInput) << bad;
  }
}

TEST(Cli, RepCsv) {
  const Outcome o = invoke({"rep", "--squares", "3", "--m", "1..20", "--format", "csv"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto ls = lines(o.out);
  ASSERT_EQ(ls.size(), 21u);
  EXPECT_EQ(ls[0], "m,count");
  EXPECT_EQ(ls[1], "1,6");
  EXPECT_EQ(ls[7], "7,0");
}

TEST(Cli, HeckeDegree) {
  const Outcome o = invoke({"hecke", "--degree", "--D", "1", "--N", "1", "--m", "12", "--format", "csv"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(lines(o.out).back(), "12,56");
}

TEST(Cli, VerifyHardyJsonSchema) {
  const Outcome o = invoke({"verify", "--suite", "hardy", "--m", "1..200", "--format", "json", "--parallel", "2"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j.at("suite"), "hardy");
  EXPECT_TRUE(j.at("paper_ref").is_string());
  ASSERT_TRUE(j.at("rows").is_array());
  ASSERT_FALSE(j.at("rows").empty());
  for (const auto& row : j.at("rows")) {
    ASSERT_TRUE(row.at("inputs").is_object());
    ASSERT_TRUE(row.at("expected").is_string());
    ASSERT_TRUE(row.at("actual").is_string());
    ASSERT_TRUE(row.at("pass").get<bool>());
  }
  EXPECT_EQ(j.at("summary").at("fail"), 0);
  EXPECT_EQ(j.at("summary").at("pass").get<std::size_t>(), j.at("rows").size());
}

TEST(Cli, OutputIndependentOfParallelism) {
  for (const std::vector<std::string> base :
       {std::vector<std::string>{"verify", "--suite", "hurwitz", "--m", "1..200"},
        std::vector<std::string>{"verify", "--suite", "three-squares", "--m", "1..2000"},
        std::vector<std::string>{"rep", "--order", "hurwitz", "--m", "1..300"},
        std::vector<std::string>{"singular", "--rho", "--s", "4", "--m", "1..20", "--cut", "2000"}}) {
    std::vector<std::string> one = base, four = base;
    one.insert(one.end(), {"--parallel", "1"});
    four.insert(four.end(), {"--parallel", "4"});
    const Outcome a = invoke(one);
    const Outcome b = invoke(four);
    const Outcome c = invoke(four);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out) << base[0] << " " << base[2];
    EXPECT_EQ(b.out, c.out);
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"verify", "--suite", "rho", "--cut", "2", "--m", "1..3"}).code, kExitVerificationFailed);
  EXPECT_EQ(invoke({"verify", "--suite", "no-such-suite"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"rep", "--squares", "3", "--m", "0..3"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"rep", "--squares", "5", "--m", "3"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"hecke", "--degree", "--D", "2", "--N", "1", "--m", "3"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"rep", "--squares", "3", "--m", "20000"}).code, kExitWorkBound);
  EXPECT_EQ(invoke({"singular", "--s", "4", "--p", "191", "--m", "1"}).code, kExitWorkBound);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, FailureRowsAreStillReported) {
  const Outcome o = invoke({"verify", "--suite", "rho", "--cut", "2", "--m", "1..3", "--format", "csv"});
  EXPECT_EQ(o.code, kExitVerificationFailed);
  EXPECT_EQ(lines(o.out).size(), 7u);
  EXPECT_NE(o.err.find("failed"), std::string::npos);
}

TEST(Cli, MarkdownAndCsv) {
  const Outcome md = invoke({"verify", "--suite", "hz", "--m", "1..3", "--format", "markdown"});
  ASSERT_EQ(md.code, kExitOk);
  EXPECT_NE(md.out.find("| m | expected | actual | pass |"), std::string::npos);
  const Outcome csv = invoke({"verify", "--suite", "hz", "--m", "1..2", "--format", "csv"});
  EXPECT_EQ(lines(csv.out), (std::vector<std::string>{"m,expected,actual,pass", "1,6,6,true", "2,12,12,true"}));
}

TEST(Cache, RoundTrip) {
  const std::string path = temp_path("qrep_cache_roundtrip.tsv");
  std::filesystem::remove(path);
  EXPECT_TRUE(load_cache(path).empty());
  const Outcome first = invoke({"rep", "--closed", "r3", "--m", "1..300", "--cache", path});
  ASSERT_EQ(first.code, kExitOk) << first.err;
  const auto table = load_cache(path);
  EXPECT_FALSE(table.empty());
  EXPECT_NO_THROW(validate_memo_table(table));
  const Outcome second = invoke({"rep", "--closed", "r3", "--m", "1..300", "--cache", path});
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(load_cache(path), table);

  const std::string copy = temp_path("qrep_cache_copy.tsv");
  save_cache(copy, table);
  EXPECT_EQ(load_cache(copy), table);
}

TEST(Cache, MalformedFileIsInvalidInput) {
  const std::string path = temp_path("qrep_cache_bad.tsv");
  {
    std::ofstream f(path);
    f << "-3\t1\nnot a line\n";
  }
  EXPECT_THROW(load_cache(path), InvalidInput);
  EXPECT_EQ(invoke({"rep", "--closed", "r3", "--m", "1..5", "--cache", path}).code, kExitInvalidInput);
  {
    std::ofstream f(path);
    f << "-4\t0\n";
  }
  EXPECT_EQ(invoke({"rep", "--closed", "r3", "--m", "1..5", "--cache", path}).code, kExitInvalidInput);
}
