#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "lenergy");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = lenergy::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t line_count(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST_CASE("energy") {
  auto r = run({"energy", "--family", "K5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("E = 8.000000000\n") != std::string::npos);
  r = run({"energy", "--family", "C4"});
  CHECK(r.out.find("E = 4.000000000\n") != std::string::npos);
  CHECK(r.out.find("spectrum: 2.000000000 0.000000000 0.000000000 -2.000000000") != std::string::npos);
  r = run({"energy", "--g6", "@"});
  CHECK(r.code == 0);
  CHECK(r.out.find("E = 0.000000000") != std::string::npos);
}

TEST_CASE("local") {
  auto r = run({"local", "--family", "C5"});
  CHECK(r.code == 0);
  std::size_t rows = 0;
  for (std::size_t pos = 0; (pos = r.out.find(" 2.000000000 ", pos)) != std::string::npos; ++pos) ++rows;
  CHECK(rows == 5);
  CHECK(r.out.find("total e(G) = 10.00000000") != std::string::npos);

  r = run({"local", "--family", "S4"});
  const auto center = r.out.substr(r.out.find("\n     0 "));
  const auto row = center.substr(1, center.find('\n', 1));
  CHECK(row.find("3.464101615") != std::string::npos);
  CHECK(row.find("tight") != std::string::npos);

  r = run({"local", "--family", "K1"});
  CHECK(r.out.find("total e(G) = 0.000000000") != std::string::npos);
}

TEST_CASE("input errors exit with code 2 and name the offset") {
  auto r = run({"energy", "--g6", "A_x"});
  CHECK(r.code == 2);
  CHECK(r.err.find("byte offset 2") != std::string::npos);
  r = run({"energy", "--family", "K4+Q"});
  CHECK(r.code == 2);
  CHECK(r.err.find("byte offset 3") != std::string::npos);
  CHECK(run({"energy"}).code == 2);
  CHECK(run({"energy", "--family", "K2", "--g6", "A_"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"generate", "--order", "4", "--shard", "4/4"}).code == 2);
  CHECK(run({"generate", "--order", "4", "--shard", "x"}).code == 2);
  CHECK(run({"generate", "--order", "11"}).code == 2);
  CHECK(run({"classes", "--order", "4", "--threads", "0"}).code == 2);
  CHECK(run({"classes", "--order", "4", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "--scope", "everything"}).code == 2);
}

TEST_CASE("generate") {
  CHECK(line_count(run({"generate", "--order", "4"}).out) == 11);
  CHECK(line_count(run({"generate", "--order", "2"}).out) == 2);
  CHECK(line_count(run({"generate", "--order", "5", "--connected"}).out) == 21);
  const auto one = run({"generate", "--order", "6", "--threads", "1"}).out;
  CHECK(one == run({"generate", "--order", "6", "--threads", "3"}).out);
  CHECK(one == run({"generate", "--order", "6", "--threads", "auto"}).out);
}

TEST_CASE("classes") {
  auto r = run({"classes", "--order", "4"});
  CHECK(r.code == 0);
  r = run({"classes", "--order", "4", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["classes"].size() == 1);
  r = run({"classes", "--order", "7", "--connected-only", "--format", "json"});
  const auto j7 = nlohmann::json::parse(r.out);
  REQUIRE(j7["classes"].size() == 1);
  CHECK(j7["classes"][0]["members"].size() == 2);
  r = run({"classes", "--order", "6", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["classes"].size() == 3);
  CHECK(r.out == run({"classes", "--order", "6", "--format", "json", "--threads", "2"}).out);
  r = run({"classes", "--order", "5", "--format", "csv"});
  CHECK(r.out.rfind("class,energy,member\n", 0) == 0);
  CHECK(line_count(r.out) == 6);
}

TEST_CASE("classes from a graph6 file") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto good = dir / "lenergy_cli_good.g6";
  const auto mixed = dir / "lenergy_cli_mixed.g6";
  {
    std::ofstream(good) << run({"generate", "--order", "5"}).out;
    std::ofstream(mixed) << "D~{\nC~\n";
  }
  auto r = run({"classes", "--input", good.string(), "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out == run({"classes", "--order", "5", "--format", "json"}).out);
  r = run({"classes", "--input", mixed.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("mixed orders") != std::string::npos);
  CHECK(run({"classes", "--input", (dir / "does_not_exist.g6").string()}).code == 2);
  std::filesystem::remove(good);
  std::filesystem::remove(mixed);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--scope", "formulas"});
  CHECK(r.code == 0);
  CHECK(r.out.find("documented discrepancy") != std::string::npos);
  r = run({"verify", "--scope", "corollary", "--max-order", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("8/8 pass") != std::string::npos);
}
