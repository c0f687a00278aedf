#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <clocale>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lambert_tsallis/boundary_export.hpp"
#include "lambert_tsallis/error.hpp"
#include "lambert_tsallis/tsallis_map.hpp"

using namespace lt;
using namespace lt::domain;

namespace {

struct Case {
  double kappa;
  double gamma;
};

Params make(const Case& c) {
  return std::isinf(c.kappa) ? Params::infinite(c.gamma) : Params(c.kappa, c.gamma);
}

const std::vector<Case> kCases = {
    {2.0, -0.5}, {0.5, -1.0}, {0.6, -0.3}, {2.5, 0.0}, {0.6, 0.0}, {2.0, 0.1},
    {3.0, 0.4},  {2.0, 0.5},  {4.0, 0.3},  {2.0, 1.0}, {4.0, 0.6}, {1.0, -1.0},
    {1.0, 0.5},  {1.0, 0.0},  {INFINITY, 0.0}, {INFINITY, 0.2}, {INFINITY, -1.0},
    {INFINITY, 1.0}, {0.5, 0.5},
};

std::vector<Complex> points(const BoundaryExport& e) {
  std::vector<Complex> out;
  for (const BoundarySample& s : e.samples) {
    if (s.z_minus) out.push_back(*s.z_minus);
    if (s.z_plus) out.push_back(*s.z_plus);
  }
  return out;
}

}  // namespace

TEST_CASE("exported points satisfy F = 0") {
  for (const Case& c : kCases) {
    const Params p = make(c);
    CAPTURE(p.to_string());
    const BoundaryExport e = export_boundary(p, 512);
    CHECK(e.samples.size() == 512);
    for (const Complex z : points(e)) {
      CAPTURE(z);
      CHECK(std::abs(map::implicit_f(p, z.real(), z.imag())) <= 1e-9);
      CHECK(z.imag() >= 0.0);
    }
  }
}

TEST_CASE("unbounded branches approach their asymptote") {
  for (const Case& c : kCases) {
    const Params p = make(c);
    const BoundaryExport e = export_boundary(p, 512);
    for (const Asymptote& a : e.description.asymptotes) {
      CAPTURE(p.to_string());
      const std::size_t n = e.samples.size();
      double previous = INFINITY;
      for (std::size_t i = n - n / 10; i < n; ++i) {
        REQUIRE(e.samples[i].z_plus);
        const Complex z = *e.samples[i].z_plus;
        const double d =
            std::abs(z.real() * std::sin(a.slope_angle) - z.imag() * std::cos(a.slope_angle) - a.offset);
        CHECK(d <= previous + 1e-12);
        previous = d;
      }
    }
  }
}

TEST_CASE("bounded cases close on the real axis") {
  for (const Case& c : {Case{2.0, -0.5}, Case{0.5, -1.0}, Case{1.0, -1.0}, Case{INFINITY, -1.0}}) {
    const Params p = make(c);
    CAPTURE(p.to_string());
    const BoundaryExport e = export_boundary(p, 256);
    REQUIRE(e.description.bounded);
    CHECK(e.description.asymptotes.empty());
    const BoundarySample& first = e.samples.front();
    REQUIRE(first.z_minus);
    REQUIRE(first.z_plus);
    CHECK(std::abs(*first.z_minus - e.description.alpha1) < 1e-9);
    CHECK(std::abs(*first.z_plus - e.description.alpha2) < 1e-9);
    const BoundarySample& last = e.samples.back();
    CHECK(std::abs(*last.z_minus - *last.z_plus) < 1e-4);
  }
}

TEST_CASE("circle, strip and full-domain exports") {
  const BoundaryExport circle = export_boundary(Params(1.0, -1.0), 256);
  CHECK(circle.description.kind == OmegaCase::kappa_one_circle);
  CHECK(circle.samples.size() == 256);
  for (const Complex z : points(circle)) CHECK(std::abs(std::abs(z - 1.0) - std::sqrt(2.0)) < 1e-12);

  const BoundaryExport strip = export_boundary(Params::infinite(0.2), 512);
  CHECK(strip.description.kind == OmegaCase::infty_half_strip);
  CHECK_FALSE(strip.description.y0);
  for (const BoundarySample& s : strip.samples) CHECK_FALSE(s.z_minus);

  const BoundaryExport full = export_boundary(Params(0.5, 3.0), 64);
  CHECK(full.description.kind == OmegaCase::full_domain);
  CHECK(full.samples.empty());
  CHECK(nlohmann::json::parse(to_json(full))["case"] == "full_domain");

  CHECK_THROWS_AS(export_boundary(Params(2.0, 0.1), 0), Error);
}

TEST_CASE("csv layout") {
  const std::string csv = to_csv(export_boundary(Params(3.0, 0.8), 16));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "theta,r_minus,r_plus,x_minus,y_minus,x_plus,y_plus");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 6);
  }
  CHECK(rows == 16);

  const std::string single = to_csv(export_boundary(Params(2.0, 0.1), 4));
  CHECK(single.find("\n0,,") != std::string::npos);
}

TEST_CASE("number formatting ignores the global locale") {
  std::setlocale(LC_NUMERIC, "de_DE.UTF-8");
  std::locale::global(std::locale::classic());
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333333");
  CHECK(format_number(1e20) == "1e+20");
  CHECK(format_number(-INFINITY) == "-inf");
  std::setlocale(LC_NUMERIC, "C");
}

TEST_CASE("json layout") {
  const auto slit = nlohmann::json::parse(to_json(export_boundary(Params(4.0, 0.6), 8)));
  CHECK(slit["case"] == "two_curve_slit");
  CHECK(slit["params"]["kappa"] == 4.0);
  CHECK(slit.contains("theta_star"));
  CHECK(slit["asymptotes"].size() == 1);
  CHECK(slit["samples"].size() == 8);
  CHECK(slit["samples"][3].contains("x_minus"));

  const auto inf = nlohmann::json::parse(to_json(export_boundary(Params::infinite(1.0), 8)));
  CHECK(inf["params"]["kappa"] == "inf");
  CHECK(inf.contains("y0"));
  CHECK_FALSE(inf["samples"][0].contains("r_plus"));
}

TEST_CASE("output is deterministic") {
  const Params p(2.0, -0.5);
  CHECK(to_csv(export_boundary(p, 64)) == to_csv(export_boundary(p, 64)));
  CHECK(to_plain(export_boundary(p, 4)).rfind("# bounded_lens", 0) == 0);
}
