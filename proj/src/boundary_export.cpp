#include "lambert_tsallis/boundary_export.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <charconv>
#include <sstream>

#include "json.hpp"
#include "lambert_tsallis/error.hpp"
#include "lambert_tsallis/roots.hpp"

namespace lt::domain {

namespace {

constexpr double kPi = std::numbers::pi;

// Cosine spacing dense toward hi (one_sided) or toward both ends.
std::vector<double> grid(double lo, double hi, int n, bool one_sided) {
  std::vector<double> out;
  if (n == 1) return {lo};
  for (int j = 0; j < n; ++j) {
    const double s = static_cast<double>(j) / (n - 1);
    const double w = one_sided ? std::sin(0.5 * kPi * s) : 0.5 * (1.0 - std::cos(kPi * s));
    out.push_back(lo + (hi - lo) * w);
  }
  return out;
}

// Where `size` (increasing toward hi) first reaches `radius`, else just below hi.
double cap(const std::function<double(double)>& size, double lo, double hi, double radius) {
  const double top = hi * (1.0 - 1e-12);
  const int scan = 2048;
  double prev = lo;
  for (int i = 1; i <= scan; ++i) {
    const double t = lo + (top - lo) * i / scan;
    if (!(size(t) < radius)) {
      return roots::bisect([&](double x) { return size(x) < radius ? -1.0 : 1.0; }, prev, t);
    }
    prev = t;
  }
  return top;
}

// Junction angles sit where the discriminant vanishes; step just inside.
double below(double t) { return t * (1.0 - 1e-12); }
double above(double t) { return t * (1.0 + 1e-12); }

std::optional<double> positive(double r) {
  if (std::isfinite(r) && r > 0.0) return r;
  return std::nullopt;
}

BoundarySample finite_row(const Params& p, double theta, bool minus, bool plus) {
  const BoundaryRoots roots = boundary_roots(p, theta);
  BoundarySample s{theta, {}, {}, {}, {}};
  if (!roots.real) return s;
  const double k = p.k();
  auto point = [&](double r) { return k * (std::polar(r, theta) - 1.0); };
  if (minus) {
    s.r_minus = positive(roots.r_minus);
    if (s.r_minus) s.z_minus = point(*s.r_minus);
  }
  if (plus) {
    s.r_plus = positive(roots.r_plus);
    if (s.r_plus) s.z_plus = point(*s.r_plus);
  }
  return s;
}

BoundarySample infty_row(double gamma, double y, bool minus, bool plus) {
  BoundarySample s{y, {}, {}, {}, {}};
  const auto x = boundary_infty(gamma, y);
  if (!x) return s;
  if (minus) s.z_minus = Complex(x->first, y);
  if (plus) s.z_plus = Complex(x->second, y);
  return s;
}

double plus_size(const Params& p, double theta) {
  const BoundaryRoots roots = boundary_roots(p, theta);
  if (!roots.real) return 0.0;
  return std::abs(p.k() * (std::polar(roots.r_plus, theta) - 1.0));
}

double infty_size(double gamma, double y) {
  const auto x = boundary_infty(gamma, y);
  if (!x) return 0.0;
  return std::max(std::abs(x->first), std::abs(x->second));
}

bool has_point(const BoundarySample& s) { return s.z_minus.has_value() || s.z_plus.has_value(); }

}  // namespace

BoundaryExport export_boundary(const Params& params, int n, double radius) {
  if (n < 1) throw Error(ErrorKind::invalid_parameter, "export_boundary: samples must be positive");
  BoundaryExport out{omega_description(params), {}};
  const DomainDescription& d = out.description;
  std::vector<BoundarySample>& rows = out.samples;

  if (params.is_infinite()) {
    const double g = params.gamma();
    switch (d.kind) {
      case OmegaCase::infty_bounded:
        for (double y : grid(0.0, below(*d.y0), n, false)) rows.push_back(infty_row(g, y, true, true));
        break;
      case OmegaCase::infty_slit: {
        const double y0 = above(*d.y0);
        const double top = cap([&](double y) { return infty_size(g, y); }, y0, kPi, radius);
        for (double y : grid(y0, top, n, true)) rows.push_back(infty_row(g, y, true, true));
        break;
      }
      default: {
        const double top = cap([&](double y) { return infty_size(g, y); }, 0.0, kPi, radius);
        for (double y : grid(0.0, top, n, true)) rows.push_back(infty_row(g, y, false, true));
        break;
      }
    }
  } else {
    auto size = [&](double t) { return plus_size(params, t); };
    switch (d.kind) {
      case OmegaCase::full_domain:
        break;
      case OmegaCase::bounded_lens:
        for (double t : grid(0.0, below(*d.theta_star), n, false)) {
          rows.push_back(finite_row(params, t, true, true));
        }
        break;
      case OmegaCase::kappa_one_circle:
        if (d.circle->interior) {
          const double ts = below(theta_star(params));
          for (double t : grid(0.0, ts, n, false)) rows.push_back(finite_row(params, t, true, true));
        } else if (d.circle->radius > 0.0) {
          for (double t : grid(0.0, below(kPi), n, false)) {
            rows.push_back(finite_row(params, t, false, true));
          }
        }
        break;
      case OmegaCase::two_curve_slit: {
        const double ts = above(*d.theta_star);
        const double top = cap(size, ts, *d.theta0, radius);
        for (double t : grid(ts, top, n, true)) {
          rows.push_back(finite_row(params, t, true, true));
        }
        break;
      }
      default: {
        double hi = std::min(*d.theta0, kPi);
        if (d.kind == OmegaCase::gamma_zero_curve || d.kind == OmegaCase::kappa_one_half_plane) {
          hi = *d.theta1;
        }
        const double top = cap(size, 0.0, hi, radius);
        for (double t : grid(0.0, top, n, true)) rows.push_back(finite_row(params, t, false, true));
        break;
      }
    }
  }
  if (std::none_of(rows.begin(), rows.end(), has_point)) rows.clear();
  return out;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(15);
  os << v;
  return os.str();
}

double round15(double v) {
  if (!std::isfinite(v)) return v;
  const std::string text = format_number(v);
  double out = v;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

namespace {

std::vector<std::optional<double>> fields(const BoundarySample& s) {
  auto re = [](const std::optional<Complex>& z) {
    return z ? std::optional<double>(z->real()) : std::nullopt;
  };
  auto im = [](const std::optional<Complex>& z) {
    return z ? std::optional<double>(z->imag()) : std::nullopt;
  };
  return {s.t,           s.r_minus,     s.r_plus,     re(s.z_minus),
          im(s.z_minus), re(s.z_plus), im(s.z_plus)};
}

constexpr const char* kColumns[] = {"theta",   "r_minus", "r_plus", "x_minus",
                                    "y_minus", "x_plus",  "y_plus"};

nlohmann::ordered_json number(double v) {
  if (std::isfinite(v)) return round15(v);
  return format_number(v);
}

}  // namespace

std::string to_csv(const BoundaryExport& data) {
  std::string out = "theta,r_minus,r_plus,x_minus,y_minus,x_plus,y_plus\n";
  for (const BoundarySample& s : data.samples) {
    const auto row = fields(s);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      if (row[i]) out += format_number(*row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_plain(const BoundaryExport& data) {
  std::string out = "# " + std::string(to_string(data.description.kind)) + " " +
                    data.description.params.to_string() + "\n";
  for (const BoundarySample& s : data.samples) {
    const auto row = fields(s);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ' ';
      out += row[i] ? format_number(*row[i]) : "-";
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const BoundaryExport& data) {
  const DomainDescription& d = data.description;
  nlohmann::ordered_json j;
  j["case"] = to_string(d.kind);
  j["params"]["kappa"] = d.params.is_infinite() ? nlohmann::ordered_json("inf")
                                                : nlohmann::ordered_json(round15(d.params.k()));
  j["params"]["gamma"] = round15(d.params.gamma());
  if (d.theta_star) j["theta_star"] = round15(*d.theta_star);
  if (d.y0) j["y0"] = round15(*d.y0);
  j["asymptotes"] = nlohmann::ordered_json::array();
  for (const Asymptote& a : d.asymptotes) {
    j["asymptotes"].push_back({{"slope_angle", round15(a.slope_angle)}, {"offset", round15(a.offset)}});
  }
  j["samples"] = nlohmann::ordered_json::array();
  for (const BoundarySample& s : data.samples) {
    nlohmann::ordered_json row;
    const auto values = fields(s);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i]) row[kColumns[i]] = number(*values[i]);
    }
    j["samples"].push_back(row);
  }
  return j.dump(2);
}

}  // namespace lt::domain
