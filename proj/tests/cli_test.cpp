#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = golden::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) v.push_back(line);
  return v;
}

}  // namespace

TEST(Cli, SequenceExample) {
  const auto r = run({"seq", "--k", "3", "--n", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 4 17 72 305\n");
}

TEST(Cli, SpectrumExample) {
  EXPECT_EQ(run({"spectrum", "--k", "4", "--type", "boson", "--n", "4"}).out, "8 55 377 2584\n");
  EXPECT_EQ(run({"spectrum", "--k", "3", "--type", "fermion", "--n", "4", "--magnitude"}).out, "3 13 55 233\n");
  const auto csv = run({"spectrum", "--k", "2", "--n", "2", "--from", "0", "--format", "csv"});
  EXPECT_EQ(csv.out, "k,n,energy_halfquanta\n2,0,1\n2,1,4\n2,2,11\n");
}

TEST(Cli, IdentitiesJsonLines) {
  const auto r = run({"identities", "--k", "1", "--precision", "256", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  EXPECT_EQ(ls.size(), 18u);
  for (const auto& l : ls) {
    const auto j = nlohmann::json::parse(l);
    EXPECT_LT(std::stod(j["residual"].get<std::string>()), 1e-25) << l;
  }
}

TEST(Cli, ToleranceFailureExitsFour) {
  const auto r = run({"identities", "--k", "2", "--tolerance", "0"});
  // Closed-form items round at the last bit, so a zero tolerance cannot be met.
  EXPECT_EQ(r.code, 4);
  const auto j = nlohmann::json::parse(r.err);
  EXPECT_EQ(j["code"], "BoundNotMet");
}

TEST(Cli, TaylorAndBinomial) {
  EXPECT_EQ(run({"taylor", "--k", "2", "--poly", "1,3,3,1"}).out, "1 3 9 24\n");
  EXPECT_EQ(run({"binomial", "--k", "1", "--n", "2", "--a", "1", "--sign", "plus"}).out, "-1 1 1\n");
  EXPECT_EQ(run({"derive", "--k", "2", "--poly", "0,0,0,1"}).out, "0 0 8\n");
  EXPECT_EQ(run({"bargman", "--k", "2", "--poly", "0,0,0,1"}).out, "0 0 0 8\n");
}

TEST(Cli, SequencesAndSeries) {
  EXPECT_EQ(run({"lucas", "--k", "-3"}).out, "k -3\nlucas -4\n");
  EXPECT_EQ(run({"fibonomial", "--k", "1", "--n", "4", "--m", "2"}).out, "6\n");
  EXPECT_EQ(run({"genfun", "--k", "3", "--n", "4"}).out, "0 1 4 17 72\n");
  const auto e = nlohmann::json::parse(run({"exp", "--k", "1", "--x", "0", "--format", "json"}).out);
  EXPECT_EQ(std::stod(e["re"].get<std::string>()), 1.0);
}

TEST(Cli, QuantumCommands) {
  const auto q = nlohmann::json::parse(run({"qubit", "--k", "1", "--n", "2", "--format", "json"}).out);
  EXPECT_EQ(q["amplitudes"], nlohmann::json({"0", "1", "1", "1"}));
  EXPECT_EQ(q["norm_sq"], "3");
  const auto c = nlohmann::json::parse(run({"concurrence", "--k", "1", "--format", "json"}).out);
  EXPECT_EQ(c["closed_form"], "2/3");
  EXPECT_EQ(lines(run({"bell", "--k", "2", "--format", "csv"}).out).size(), 5u);
  EXPECT_EQ(run({"hecke", "--k", "3", "--n", "7"}).code, 0);
  EXPECT_EQ(run({"hecke", "--k", "3", "--n", "7", "--sample", "conjugated"}).code, 0);
}

TEST(Cli, OscillatorCommands) {
  const auto s = nlohmann::json::parse(run({"semiclassical", "--k", "2", "--n", "1", "--format", "json"}).out);
  EXPECT_EQ(s["exact"], "4");
  EXPECT_LT(std::stod(s["error"].get<std::string>()), 1e-10);
  const auto co = nlohmann::json::parse(run({"coherent", "--k", "1", "--format", "json"}).out);
  EXPECT_EQ(co["amplitudes"].size(), 40u);
  EXPECT_LT(std::stod(co["residual"].get<std::string>()), 1e-20);
}

TEST(Cli, HydroCommands) {
  const auto field = run({"hydro-field", "--nx", "3", "--ny", "2"});
  EXPECT_EQ(field.code, 0);
  const auto ls = lines(field.out);
  ASSERT_EQ(ls.size(), 7u);
  EXPECT_EQ(ls[0], "x,y,Re(V),Im(V),|V|");
  const auto ok = run({"hydro-residual", "--truncation", "200", "--precision", "256", "--x", "0.6", "--y", "0.8",
                       "--bound", "1e-40"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  const auto bad = run({"hydro-residual", "--truncation", "5", "--x", "0.6", "--y", "0.8", "--bound", "1e-40"});
  EXPECT_EQ(bad.code, 4);
  EXPECT_EQ(run({"hydro-residual", "--z0-re", "3"}).code, 3);
}

TEST(Cli, ErrorsAndExitCodes) {
  const auto unknown = run({"seq", "--k", "1", "--n", "3", "--bogus", "1"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_TRUE(nlohmann::json::parse(unknown.err).contains("error"));
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nosuch"}).code, 2);
  EXPECT_EQ(run({"seq", "--k", "1", "--n", "3", "--format", "xml"}).code, 2);

  const auto domain = run({"seq", "--k", "0", "--n", "3"});
  EXPECT_EQ(domain.code, 3);
  EXPECT_EQ(nlohmann::json::parse(domain.err)["code"], "InvalidOrder");
  EXPECT_EQ(run({"spectrum", "--k", "2", "--type", "fermion", "--n", "3"}).code, 3);
  EXPECT_EQ(run({"qubit", "--k", "2", "--n", "2"}).code, 3);

  const auto precision = run({"seq", "--k", "1", "--n", "3", "--precision", "8"});
  EXPECT_EQ(precision.code, 4);
  EXPECT_EQ(nlohmann::json::parse(precision.err)["code"], "PrecisionUnachievable");

  const auto even = run({"hecke", "--k", "2", "--n", "5"});
  EXPECT_EQ(even.code, 4);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args = {"exp", "--k", "2", "--x", "0.3", "--y", "-0.1", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, CsvAlwaysHasHeader) {
  const auto r = run({"fibonomial", "--k", "2", "--n", "3", "--row", "--format", "csv"});
  EXPECT_EQ(r.out, "index,row\n0,1\n1,8\n2,8\n3,1\n");
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("seq"), std::string::npos);
}
