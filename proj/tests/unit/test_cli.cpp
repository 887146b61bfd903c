#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "liekv/cli.hpp"

using namespace liekv;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return std::string(LIEKV_CORPUS_DIR) + "/" + name + ".json"; }

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

TEST(Fnv1a, KnownVectors) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(fnv1a_hex("foobar"), "85944171f73967e8");
}

TEST(Cli, SpectrumOfPlaneTranslation) {
  CliRun r = cli({"spectrum", corpus("e2_plane"), "--field", "x"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = parse(r.out);
  const auto& f = j["results"]["fields"][0];
  EXPECT_EQ(f["pure_imaginary"], true);
  EXPECT_EQ(f["spectrum"][0]["eigenvalues"], "0");
  EXPECT_EQ(f["fitting"]["dim_A1"], 3);
  EXPECT_EQ(f["fitting"]["dim_A2"], 0);
  EXPECT_EQ(f["fitting"]["exponent"], 2);
  EXPECT_EQ(f["compact_vector"], false);
}

TEST(Cli, FieldAsCoordinates) {
  CliRun r = cli({"spectrum", corpus("so3"), "--field", "1,0,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto f = parse(r.out)["results"]["fields"][0];
  EXPECT_EQ(f["field"], "e1");
  EXPECT_EQ(f["spectrum"][1]["eigenvalues"], "+-1i");
}

TEST(Cli, CheckReportsExactWitness) {
  CliRun r = cli({"check", corpus("heis_go_1"), "--field", "e1", "--samples", "100", "--seed", "7"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("RefutedAt word (e2,1): F=2 vs 1"), std::string::npos) << r.err;
  auto j = parse(r.out);
  EXPECT_EQ(j["parameters"]["samples"], 100);
  EXPECT_EQ(j["parameters"]["seed"], 7);
  EXPECT_EQ(j["summary"]["refuted"], 1);
}

TEST(Cli, CheckCertifiedAndGo) {
  CliRun r = cli({"check", corpus("heis_go_1"), "--field", "e3", "--go"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = parse(r.out);
  EXPECT_EQ(j["results"]["constant_length"][0]["verdict"]["certificate"], "CenterNilradical");
  EXPECT_EQ(j["results"]["go"]["note"], "GO-consistent");
}

TEST(Cli, VerifySo3Passes) {
  CliRun r = cli({"verify", corpus("so3"), "--statements", "all"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = parse(r.out);
  EXPECT_EQ(j["summary"]["refuted"], 0);
  EXPECT_GT(j["findings"].size(), 0u);
}

TEST(Cli, VerifyOnlyProbes) {
  CliRun r = cli({"verify", corpus("e2_plane"), "--statements", "conj-3.6"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = parse(r.out);
  for (const auto& f : j["findings"]) EXPECT_EQ(f["statement"], "conj-3.6");
  EXPECT_EQ(j["findings"].size(), 3u);
}

TEST(Cli, ReportsAreByteIdentical) {
  std::vector<std::string> args{"verify", corpus("heis_go_1"), "--seed", "3", "--samples", "50"};
  CliRun a = cli(args), b = cli(args);
  EXPECT_EQ(a.out, b.out);
  args.push_back("--format");
  args.push_back("markdown");
  EXPECT_EQ(cli(args).out, cli(args).out);
}

TEST(Cli, EveryFlagRecordedInHeader) {
  auto p = parse(cli({"inspect", corpus("so3")}).out)["parameters"];
  for (const char* k : {"samples", "order", "tol", "seed", "max_word_length", "max_parameter", "inner_samples", "field",
                        "go", "statements", "format"})
    EXPECT_TRUE(p.contains(k)) << k;
  EXPECT_EQ(p["samples"], 200);
  EXPECT_EQ(p["order"], 6);
  EXPECT_EQ(p["seed"], 0);
  EXPECT_DOUBLE_EQ(p["tol"].get<double>(), 1e-9);
}

TEST(Cli, MarkdownAndJsonAgree) {
  auto j = parse(cli({"verify", corpus("e2_plane"), "--samples", "40"}).out);
  std::string md = cli({"verify", corpus("e2_plane"), "--samples", "40", "--format", "markdown"}).out;
  EXPECT_NE(md.find(j["input_digest"].get<std::string>()), std::string::npos);
  for (const auto& f : j["findings"]) {
    std::string row = "| " + f["statement"].get<std::string>() + " | " + f.value("field", std::string("-")) + " | " +
                      f["status"].get<std::string>() + " |";
    EXPECT_NE(md.find(row), std::string::npos) << row;
  }
  for (const auto& [k, v] : j["summary"].items())
    EXPECT_NE(md.find("- " + k + ": " + v.dump()), std::string::npos) << k;
}

TEST(Cli, InspectStructure) {
  CliRun r = cli({"inspect", corpus("e2_plane")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = parse(r.out)["results"];
  EXPECT_EQ(j["radical"]["dim"], 3);
  EXPECT_EQ(j["nilradical"]["dim"], 2);
  EXPECT_EQ(j["declared"]["nilradical"], "verified");
  EXPECT_EQ(j["levi"]["dim"], 0);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "liekv_cli_out.json";
  CliRun r = cli({"inspect", corpus("so3"), "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), cli({"inspect", corpus("so3")}).out);
  std::filesystem::remove(path);
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"verify"}).code, 2);
  EXPECT_EQ(cli({"verify", corpus("so3"), "--format", "xml"}).code, 2);
  CliRun missing = cli({"inspect", "/nonexistent.json"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_FALSE(missing.err.empty());
  EXPECT_EQ(cli({"spectrum", corpus("so3"), "--field", "1,2"}).code, 2);
  EXPECT_EQ(cli({"spectrum", corpus("so3"), "--field", "1,2,3/0"}).code, 2);
  EXPECT_EQ(cli({"verify", corpus("so3"), "--statements", "thm-0"}).code, 2);
}

TEST(Cli, InvalidDocumentExitsTwo) {
  const auto path = std::filesystem::temp_directory_path() / "liekv_bad.json";
  std::ofstream(path) << "{\"name\": \"bad\", \"dimension\": 1}";
  CliRun r = cli({"inspect", path.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ParseError"), std::string::npos) << r.err;
  std::filesystem::remove(path);
}

TEST(Cli, CorpusExportMatchesShippedFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "liekv_export";
  std::filesystem::remove_all(dir);
  ASSERT_EQ(cli({"corpus", "export", dir.string()}).code, 0);
  std::size_t n = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ifstream a(entry.path()), b(std::filesystem::path(LIEKV_CORPUS_DIR) / entry.path().filename());
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    EXPECT_EQ(sa.str(), sb.str()) << entry.path();
    ++n;
  }
  EXPECT_EQ(n, 7u);
  std::filesystem::remove_all(dir);
}

TEST(Cli, StatementsListing) {
  CliRun r = cli({"statements"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("thm-3.9\t"), std::string::npos);
}
