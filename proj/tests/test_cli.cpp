#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lambert_tsallis/cli.hpp"

using namespace lt;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "lambert_tsallis");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l)) {
    if (l == line) return true;
  }
  return false;
}

int count_lines(const std::string& text) {
  return static_cast<int>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("classify") {
  const Result lambert = call({"classify", "--kappa", "inf", "--gamma", "0"});
  CHECK(lambert.code == cli::kOk);
  CHECK(has_line(lambert.out, "exists yes"));
  CHECK(has_line(lambert.out, "region v"));
  CHECK(has_line(lambert.out, "cut half_line (-inf, -0.367879441171442)"));

  const Result identity = call({"classify", "--kappa", "1", "--gamma", "1"});
  CHECK(identity.code == cli::kOk);
  CHECK(has_line(identity.out, "note identity map f(z) = z"));
  CHECK(has_line(identity.out, "kappa 1 (integer)"));

  const Result small = call({"classify", "--kappa", "0.5", "--gamma", "0.1"});
  CHECK(small.code == cli::kNotExists);
  CHECK(has_line(small.out, "exists no"));
  CHECK(has_line(small.out, "failure domain_obstruction"));

  const Result two = call({"classify", "--kappa", "2", "--gamma", "0.7", "--format", "json"});
  CHECK(two.code == cli::kNotExists);
  const auto j = nlohmann::json::parse(two.out);
  CHECK(j["failure"] == "two_to_one");
  CHECK(j["cut"].is_null());

  CHECK(call({"classify", "--kappa", "0", "--gamma", "0"}).code == cli::kUsage);
  CHECK(call({"classify", "--kappa", "abc", "--gamma", "0"}).code == cli::kUsage);
  CHECK(call({"classify", "--kappa", "2"}).code == cli::kUsage);
}

TEST_CASE("eval") {
  const Result w = call({"eval", "--mode", "w", "--kappa", "inf", "--gamma", "0", "1", "0"});
  CHECK(w.code == cli::kOk);
  std::istringstream in(w.out);
  double re = 0.0;
  double im = 0.0;
  double residual = 1.0;
  in >> re >> im >> residual;
  CHECK(std::abs(re - 0.567143290409784) < 1e-12);
  CHECK(im == 0.0);
  CHECK(residual <= 1e-12);

  const Result f = call({"eval", "--mode", "f", "--kappa", "2", "--gamma", "0.1", "0", "0"});
  CHECK(f.code == cli::kOk);
  CHECK(f.out == "0 0\n");

  const Result cut = call({"eval", "--mode", "w", "--kappa", "inf", "--gamma", "0", "-5", "0"});
  CHECK(cut.code == cli::kEvalDomain);
  CHECK(cut.err.find("cut") != std::string::npos);

  const Result pole = call({"eval", "--mode", "f", "--kappa", "2", "--gamma", "-0.5", "2", "0"});
  CHECK(pole.code == cli::kEvalDomain);

  CHECK(call({"eval", "--mode", "w", "--kappa", "2", "--gamma", "0.7", "1", "1"}).code ==
        cli::kNotExists);
  CHECK(call({"eval", "--mode", "x", "--kappa", "2", "--gamma", "0", "1", "1"}).code == cli::kUsage);
  CHECK(call({"eval", "--kappa", "2", "--gamma", "0", "1"}).code == cli::kUsage);

  const Result json = call({"eval", "--kappa", "2", "--gamma", "-0.5", "--format", "json", "0.5", "0.5"});
  CHECK(json.code == cli::kOk);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["mode"] == "w");
  CHECK(j["residual"].get<double>() <= 1e-12);

  const Result csv = call({"eval", "--mode", "f", "--kappa", "inf", "--gamma", "0", "--format", "csv", "1", "0"});
  CHECK(csv.out == "re,im\n2.71828182845905,0\n");
}

TEST_CASE("LT_TOL overrides the evaluation tolerance") {
  setenv("LT_TOL", "1e-6", 1);
  CHECK(call({"eval", "--kappa", "inf", "--gamma", "0", "3", "1"}).code == cli::kOk);
  setenv("LT_TOL", "nonsense", 1);
  CHECK(call({"eval", "--kappa", "inf", "--gamma", "0", "3", "1"}).code == cli::kUsage);
  unsetenv("LT_TOL");
}

TEST_CASE("boundary") {
  const Result circle = call({"boundary", "--kappa", "1", "--gamma", "-1", "--samples", "256", "--format", "json"});
  CHECK(circle.code == cli::kOk);
  const auto c = nlohmann::json::parse(circle.out);
  CHECK(c["case"] == "kappa_one_circle");
  CHECK(c["samples"].size() == 256);

  const Result strip = call({"boundary", "--kappa", "inf", "--gamma", "0.2", "--samples", "512", "--format", "json"});
  const auto s = nlohmann::json::parse(strip.out);
  CHECK(s["case"] == "infty_half_strip");
  CHECK_FALSE(s.contains("y0"));
  CHECK(s["samples"].size() == 512);

  const Result lens = call({"boundary", "--kappa", "2", "--gamma", "-0.5", "--format", "csv"});
  CHECK(lens.code == cli::kOk);
  CHECK(lens.out.rfind("theta,r_minus,r_plus,x_minus,y_minus,x_plus,y_plus\n", 0) == 0);
  CHECK(count_lines(lens.out) == 257);
  CHECK(lens.out.find("\n0,0.719223593595585,2.78077640640442,-0.56155281280883,0,3.56155281280883,0\n") !=
        std::string::npos);

  const Result full = call({"boundary", "--kappa", "0.5", "--gamma", "3", "--format", "json"});
  CHECK(nlohmann::json::parse(full.out)["samples"].empty());

  CHECK(call({"boundary", "--kappa", "-2", "--gamma", "-1"}).code == cli::kUsage);
  CHECK(call({"boundary", "--kappa", "2", "--gamma", "0", "--samples", "0"}).code == cli::kUsage);
  CHECK(call({"boundary", "--kappa", "2", "--gamma", "0", "--format", "xml"}).code == cli::kUsage);
}

TEST_CASE("verify") {
  const Result ok = call({"verify", "--kappa", "2", "--gamma", "0.25"});
  CHECK(ok.code == cli::kOk);
  CHECK(has_line(ok.out, "windings 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1"));
  CHECK(has_line(ok.out, "pass yes"));

  const Result two = call({"verify", "--kappa", "2", "--gamma", "0.7", "--format", "json"});
  CHECK(two.code == cli::kOk);
  const auto j = nlohmann::json::parse(two.out);
  CHECK(j["exists"] == false);
  bool saw_two = false;
  for (const auto& w : j["windings"]) saw_two = saw_two || w["value"] == 2;
  CHECK(saw_two);

  const Result grid = call({"verify", "--grid", "3x2"});
  CHECK(grid.code == cli::kOk);
  CHECK(count_lines(grid.out) == 6);

  CHECK(call({"verify"}).code == cli::kUsage);
  CHECK(call({"verify", "--grid", "4by4"}).code == cli::kUsage);
  CHECK(call({"verify", "--grid", "2x2", "--kappa", "2", "--gamma", "0"}).code == cli::kUsage);
}

TEST_CASE("grid layout") {
  const std::vector<Params> g = cli::grid(40, 40);
  CHECK(g.size() == 1600);
  CHECK(g.front().k() == doctest::Approx(0.25));
  CHECK(g[19 * 40].k() == doctest::Approx(4.0));
  CHECK(g[20 * 40].k() == doctest::Approx(-0.25));
  CHECK(g[38 * 40].k() == doctest::Approx(-4.0));
  CHECK(g.back().is_infinite());
  CHECK(g.front().gamma() == -2.0);
  CHECK(g[39].gamma() == 2.0);
  CHECK(cli::parse_grid("default")->size() == 1600);
  CHECK(cli::parse_grid("5x7")->size() == 35);
  CHECK_FALSE(cli::parse_grid("0x7"));
  CHECK_FALSE(cli::parse_grid("5x"));
}

TEST_CASE("parsing") {
  CHECK(cli::parse_params("INF", 0.0)->is_infinite());
  CHECK(cli::parse_params("+inf", 0.0)->is_infinite());
  CHECK(cli::parse_params("2.5", 0.1)->k() == 2.5);
  CHECK_FALSE(cli::parse_params("2,5", 0.1));
  CHECK_FALSE(cli::parse_params("nan", 0.1));
  CHECK(cli::parse_double("-1e-3") == -1e-3);
  CHECK_FALSE(cli::parse_double("1.0x"));
  CHECK_FALSE(cli::parse_double(""));
}

TEST_CASE("output file and byte-identical reruns") {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / "lt_cli_boundary.csv";
  const std::vector<std::string> args = {"boundary", "--kappa", "3", "--gamma", "0.4", "--format", "csv",
                                         "--out", path.string()};
  const Result r = call(args);
  CHECK(r.code == cli::kOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const std::string first((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(first == call({"boundary", "--kappa", "3", "--gamma", "0.4", "--format", "csv"}).out);
  std::filesystem::remove(path);

  const std::vector<std::string> v = {"verify", "--kappa", "inf", "--gamma", "-1", "--seed", "5", "--format", "json"};
  CHECK(call(v).out == call(v).out);

  CHECK(call({"boundary", "--kappa", "2", "--gamma", "0", "--out", "/nonexistent/dir/x.csv"}).code ==
        cli::kUsage);
}

TEST_CASE("help and usage") {
  CHECK(call({"--help"}).code == cli::kOk);
  CHECK(call({}).code == cli::kUsage);
  CHECK(call({"frobnicate"}).code == cli::kUsage);
}
