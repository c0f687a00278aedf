#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "lambert_tsallis/domain.hpp"
#include "lambert_tsallis/error.hpp"
#include "lambert_tsallis/scalar_analysis.hpp"
#include "lambert_tsallis/tsallis_map.hpp"

using namespace lt;
using namespace lt::domain;

namespace {

constexpr double kPi = std::numbers::pi;

double sample_theta(double end, int j, int n) {
  return end * std::sin(0.5 * kPi * (j + 0.5) / n);
}

}  // namespace

TEST_CASE("classification examples") {
  BranchClass c = classify(Params(2.0, 0.5));
  CHECK(c.exists);
  CHECK(c.region == Region::ii);

  c = classify(Params::infinite(0.3));
  CHECK_FALSE(c.exists);
  CHECK(c.failure == Failure::two_to_one);

  c = classify(Params(-0.5, -3.0));
  CHECK(c.exists);
  CHECK(c.region == Region::iii);

  c = classify(Params(0.5, 0.1));
  CHECK_FALSE(c.exists);
  CHECK(c.failure == Failure::domain_obstruction);

  c = classify(Params(1.0, 1.0));
  CHECK(c.exists);
  CHECK(classify(Params(1.0, 1.01)).failure == Failure::two_to_one);
  CHECK(classify(Params(0.7, 0.0)).region == Region::i);
  CHECK(classify(Params(-3.0, 0.05)).region == Region::iv);
  CHECK(classify(Params(-3.0, 0.3)).failure == Failure::two_to_one);
  CHECK(classify(Params(-0.5, -1.0)).failure == Failure::domain_obstruction);
  CHECK(classify(Params::infinite(0.25)).exists);
  CHECK_THROWS_AS(Params(0.0, 1.0), Error);
}

TEST_CASE("boundary roots") {
  SUBCASE("a = 1 with kappa > 1") {
    const Params p = Params::from_a(2.0, 1.0);
    const BoundaryRoots r = boundary_roots(p, 0.6);
    CHECK(r.real);
    CHECK(r.r_minus == doctest::Approx(0.0).scale(1.0));
    CHECK(r.r_plus == doctest::Approx(-scalar::b_theta(p, 0.6)));
    CHECK(r.r_plus > 0.0);
  }
  SUBCASE("gamma = 0") {
    const BoundaryRoots r = boundary_roots(Params(1.0, 0.0), kPi / 3);
    CHECK(r.r_plus == doctest::Approx(1.0));
    CHECK(r.r_minus == doctest::Approx(1.0));
  }
  SUBCASE("complex past theta_*") {
    const Params p(2.0, -0.5);
    const double ts = theta_star(p);
    CHECK_FALSE(boundary_roots(p, ts + 1e-3).real);
    const BoundaryRoots at = boundary_roots(p, ts - 1e-10);
    CHECK(at.real);
    CHECK(at.r_minus == doctest::Approx(at.r_plus).epsilon(1e-4));
  }
}

TEST_CASE("theta_*") {
  for (const Params& p : {Params(2.0, -0.5), Params(0.5, -1.0), Params(3.0, -0.1), Params(0.8, -2.0)}) {
    const double ts = theta_star(p);
    CHECK(ts > 0.0);
    CHECK(ts < kPi / (p.k() + 1));
    CHECK(std::abs(scalar::discriminant_d(p, ts)) < 1e-10);
    double prev = scalar::discriminant_d(p, 0.0);
    for (int j = 1; j < 100; ++j) {
      const double d = scalar::discriminant_d(p, ts * j / 100.0);
      CHECK(d <= prev + 1e-14);
      prev = d;
    }
  }
  const Params two(2.0, 0.6);
  const double ts = theta_star(two);
  CHECK(ts > 0.0);
  CHECK(ts < kPi / 2);
  CHECK(std::abs(scalar::discriminant_d(two, ts)) < 1e-10);
  for (int j = 1; j < 100; ++j) CHECK(scalar::discriminant_d(two, ts * j / 100.0) < 0.0);
  CHECK_THROWS_AS(theta_star(Params(2.0, 0.25)), Error);
}

TEST_CASE("boundary points lie on F = 0") {
  CHECK(boundary_point(Params(2.0, 0.0), 1e-10, Branch::plus).real() == doctest::Approx(-2.0 / 3));
  const Params lens(2.0, -0.5);
  const auto [a1, a2] = scalar::critical_points(lens);
  CHECK(boundary_point(lens, 1e-10, Branch::minus).real() == doctest::Approx(a1.real()));
  CHECK(boundary_point(lens, 1e-10, Branch::plus).real() == doctest::Approx(a2.real()));

  for (const Params& p : {Params(2.0, -0.5), Params(2.0, 0.0), Params(2.0, 0.1), Params(2.0, 0.5),
                          Params(0.5, 0.5), Params(0.5, 0.0), Params(0.6, -1.0), Params(3.0, 0.4),
                          Params::from_a(2.0, 1.0)}) {
    const DomainDescription d = omega_description(p);
    double end = std::min(*d.theta0, kPi);
    if (d.theta_star && d.kind == OmegaCase::bounded_lens) end = *d.theta_star;
    if (d.kind == OmegaCase::gamma_zero_curve) end = *d.theta1;
    CAPTURE(p.to_string());
    for (int j = 0; j < 512; ++j) {
      const double t = sample_theta(end, j, 512);
      for (Branch br : {Branch::minus, Branch::plus}) {
        if (d.kind != OmegaCase::bounded_lens && br == Branch::minus) continue;
        const Complex z = boundary_point(p, t, br);
        const double scale = 1.0 + std::abs(z) + std::abs(p.gamma()) * std::norm(z);
        CHECK(std::abs(map::implicit_f(p, z.real(), z.imag())) <= 1e-9 * scale);
      }
    }
  }
}

TEST_CASE("kappa infinity boundary") {
  const auto x0 = boundary_infty(0.0, kPi / 2);
  REQUIRE(x0);
  CHECK(x0->first == doctest::Approx(0.0).scale(1.0));
  CHECK(boundary_infty(0.2, 1e-12).has_value());
  const double y0 = y_zero(-1.0);
  CHECK(std::abs(g_infty(-1.0, y0) + 1.0) < 1e-12);
  CHECK(g_infty(-1.0, y0 + 1e-3) < -1.0);
  CHECK_FALSE(boundary_infty(-1.0, y0 + 1e-3).has_value());
  CHECK_THROWS_AS(y_zero(0.25), Error);
  CHECK(y_star(0.5) == doctest::Approx(kPi / 2));
  const double ys = y_star(0.3);
  CHECK(ys < kPi / 2);
  const double y1 = y_zero(0.3);
  CHECK(y1 > ys);
  CHECK(std::abs(g_infty(0.3, y1) - 1.0) < 1e-12);
  for (double g : {-1.0, -0.2, 0.1, 0.25, 0.6}) {
    for (int j = 1; j < 200; ++j) {
      const double y = kPi * j / 200.0;
      const auto xs = boundary_infty(g, y);
      if (!xs) continue;
      for (double x : {xs->first, xs->second}) {
        const double scale = 1.0 + std::abs(x) + std::abs(g) * (x * x + y * y);
        CHECK(std::abs(map::implicit_f(Params::infinite(g), x, y)) <= 1e-9 * scale * (1.0 + 1.0 / std::sin(y)));
      }
    }
  }
}

TEST_CASE("omega descriptions") {
  DomainDescription d = omega_description(Params(1.0, -1.0));
  CHECK(d.kind == OmegaCase::kappa_one_circle);
  REQUIRE(d.circle);
  CHECK(d.circle->center == doctest::Approx(1.0));
  CHECK(d.circle->radius * d.circle->radius == doctest::Approx(2.0));
  CHECK(d.circle->interior);
  CHECK(d.bounded);

  d = omega_description(Params(1.0, 2.0));
  CHECK(d.kind == OmegaCase::full_domain);
  CHECK(membership(d, Complex(-0.5, 0.0)) == Membership::outside);
  CHECK(membership(d, Complex(-7.0, 3.0)) == Membership::inside);

  d = omega_description(Params(2.0, 0.1));
  CHECK(d.kind == OmegaCase::single_curve);
  REQUIRE(d.asymptotes.size() == 1);
  CHECK(d.asymptotes[0].slope_angle == doctest::Approx(kPi / 2));
  CHECK(d.asymptotes[0].offset == doctest::Approx(1.0 / 0.2 - 2.0));

  CHECK(omega_description(Params(2.0, -0.5)).kind == OmegaCase::bounded_lens);
  CHECK(omega_description(Params(2.0, 0.0)).kind == OmegaCase::gamma_zero_curve);
  CHECK(omega_description(Params(2.0, 0.7)).kind == OmegaCase::two_curve_slit);
  CHECK(omega_description(Params(0.5, 3.0)).kind == OmegaCase::full_domain);
  CHECK(omega_description(Params::infinite(0.0)).kind == OmegaCase::infty_half_strip);
  CHECK(omega_description(Params::infinite(0.5)).kind == OmegaCase::infty_slit);
  CHECK(omega_description(Params::infinite(-1.0)).kind == OmegaCase::infty_bounded);
  CHECK(omega_description(Params(1.0, 0.0)).kind == OmegaCase::kappa_one_half_plane);
  CHECK_THROWS_AS(omega_description(Params(-2.0, 0.0)), Error);
}

TEST_CASE("membership") {
  for (const Params& p : {Params(2.0, -0.5), Params(2.0, 0.1), Params(0.6, -1.0), Params(1.0, 0.5),
                          Params(1.0, -1.0), Params::infinite(0.0), Params::infinite(-1.0),
                          Params::infinite(0.2), Params(-0.5, -3.0), Params(-3.0, 0.05)}) {
    CHECK(membership(p, Complex(0.0)) == Membership::inside);
  }
  const Params lens(2.0, -0.5);
  const double a2 = scalar::critical_points(lens).second.real();
  CHECK(membership(lens, Complex(a2 + 1e-3, 0.0)) == Membership::outside);
  CHECK(membership(lens, Complex(a2 - 1e-3, 0.0)) == Membership::inside);
  CHECK(membership(lens, Complex(-1.0 / -0.5, 0.0)) == Membership::outside);

  const Params w(Params::infinite(0.0));
  CHECK(membership(w, Complex(1e-3, kPi / 2)) == Membership::inside);
  CHECK(membership(w, Complex(-1e-3, kPi / 2)) == Membership::outside);
  CHECK(membership(w, Complex(-0.1, kPi / 2)) == Membership::outside);
  CHECK(membership(w, Complex(0.0, kPi / 2)) == Membership::boundary);
  CHECK(membership(w, Complex(5.0, 3.2)) == Membership::outside);

  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  for (const Params& p : {Params(2.0, -0.5), Params(2.0, 0.1), Params(2.0, 0.7), Params(0.4, 0.6),
                          Params::infinite(0.5), Params::infinite(-1.0), Params(1.0, 0.5)}) {
    const DomainDescription d = omega_description(p);
    for (int i = 0; i < 500; ++i) {
      const Complex z(u(rng), u(rng));
      CHECK(membership(d, z) == membership(d, std::conj(z)));
      // interior points map into the open upper half-plane
      if (z.imag() > 0 && membership(d, z) == Membership::inside && classify(p).exists) {
        CHECK(map::f_eval(p, z).imag() > 0.0);
      }
    }
  }
}

TEST_CASE("membership flips across the boundary radially") {
  for (const Params& p : {Params(2.0, -0.5), Params(2.0, 0.1), Params(3.0, 0.4), Params(0.5, 0.0)}) {
    const DomainDescription d = omega_description(p);
    const double end = d.kind == OmegaCase::bounded_lens ? *d.theta_star
                       : d.kind == OmegaCase::gamma_zero_curve ? *d.theta1
                                                               : std::min(*d.theta0, kPi);
    for (int j = 0; j < 64; ++j) {
      const double t = sample_theta(end, j, 64) * 0.98;
      const BoundaryRoots r = boundary_roots(p, t);
      const double rp = r.r_plus;
      auto at = [&](double rr) { return Complex(p.k() * (rr * std::cos(t) - 1), p.k() * rr * std::sin(t)); };
      CHECK(membership(d, at(rp * (1 + 1e-6))) ==
            (d.kind == OmegaCase::bounded_lens ? Membership::outside : Membership::inside));
      CHECK(membership(d, at(rp * (1 - 1e-6))) ==
            (d.kind == OmegaCase::bounded_lens ? Membership::inside : Membership::outside));
      const Complex zb = at(rp);
      const double fin = map::implicit_f(p, at(rp * (1 + 1e-4)).real(), at(rp * (1 + 1e-4)).imag());
      const double fout = map::implicit_f(p, at(rp * (1 - 1e-4)).real(), at(rp * (1 - 1e-4)).imag());
      CHECK(fin * fout < 0.0);
      (void)zb;
    }
  }
}

TEST_CASE("cut sets") {
  CutSet s = cut_set(Params::infinite(0.0));
  CHECK(s.kind == CutKind::half_line);
  CHECK(s.hi == doctest::Approx(-std::exp(-1.0)));

  s = cut_set(Params(2.0, 0.0));
  CHECK(s.kind == CutKind::half_line);
  CHECK(s.hi == doctest::Approx(map::f_eval(Params(2.0, 0.0), -2.0 / 3)));

  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> uk(0.2, 5.0), ug(-3.0, -0.01);
  for (int i = 0; i < 50; ++i) {
    const Params p = i % 5 == 0 ? Params::infinite(ug(rng)) : Params(uk(rng), ug(rng));
    s = cut_set(p);
    CHECK(s.kind == CutKind::interval);
    CHECK(s.lo < s.hi);
    CHECK(s.hi < 0.0);
  }
  s = cut_set(Params(1.0, 0.5));
  CHECK(s.kind == CutKind::interval);
  CHECK(s.lo < s.hi);
  CHECK(cut_set(Params(1.0, 1.0)).kind == CutKind::point);
  CHECK(cut_set(Params(3.0, 0.4)).kind == CutKind::half_line);
  CHECK_THROWS_AS(cut_set(Params(2.0, 0.7)), Error);
  CHECK(cut_set(Params(-3.0, 0.05)).kind == CutKind::half_line);

  s = cut_set(Params::infinite(0.0));
  CHECK(s.distance(Complex(-5.0, 0.0)) == 0.0);
  CHECK(s.distance(Complex(1.0, 0.0)) == doctest::Approx(1.0 + std::exp(-1.0)));
}

TEST_CASE("boundary image is real and monotone for nonnegative gamma") {
  for (const Params& p : {Params(2.0, 0.0), Params(2.0, 0.1), Params(3.0, 0.4), Params(0.5, 0.0)}) {
    const DomainDescription d = omega_description(p);
    const double end = d.kind == OmegaCase::gamma_zero_curve ? *d.theta1 : std::min(*d.theta0, kPi);
    double prev = 1.0;
    for (int j = 0; j < 256; ++j) {
      const double t = end * j / 256.0 + 1e-6;
      const Complex z = boundary_point(p, t, Branch::plus);
      const Complex w = map::f_eval(p, z);
      CHECK(std::abs(w.imag()) <= 1e-9 * std::max(1.0, std::abs(w)));
      CHECK(w.real() < 0.0);
      CHECK(w.real() < prev);
      prev = w.real();
    }
  }
}

TEST_CASE("real components map monotonically onto the complement of the cut") {
  for (const Params& p : {Params(2.0, -0.5), Params(2.0, 0.1), Params(1.0, 0.5), Params::infinite(0.0)}) {
    for (const RealComponent& c : real_components(p)) {
      CHECK(c.lo < c.hi);
      CHECK(c.w_lo < c.w_hi);
      const double lo = std::isfinite(c.lo) ? c.lo : c.hi - 50;
      const double hi = std::isfinite(c.hi) ? c.hi : c.lo + 50;
      double prev = -INFINITY;
      for (int j = 1; j < 100; ++j) {
        const double x = lo + (hi - lo) * j / 100.0;
        const double w = map::f_eval(p, x);
        CHECK(w > prev);
        prev = w;
        CHECK(membership(p, Complex(x, 0.0)) == Membership::inside);
      }
    }
  }
}
