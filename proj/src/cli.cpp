#include "lambert_tsallis/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lambert_tsallis/boundary_export.hpp"
#include "lambert_tsallis/domain.hpp"
#include "lambert_tsallis/error.hpp"
#include "lambert_tsallis/inverse.hpp"
#include "lambert_tsallis/scalar_analysis.hpp"
#include "lambert_tsallis/tsallis_map.hpp"
#include "lambert_tsallis/verify.hpp"

namespace lt::cli {

namespace {

using domain::format_number;
using nlohmann::ordered_json;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

ordered_json number_json(double v) {
  if (std::isfinite(v)) return domain::round15(v);
  return format_number(v);
}

ordered_json kappa_json(const Params& p) {
  return p.is_infinite() ? ordered_json("inf") : number_json(p.k());
}

std::string kappa_text(const Params& p) {
  if (p.is_infinite()) return "inf";
  std::string s = format_number(p.k());
  if (p.kappa().is_integer()) s += " (integer)";
  return s;
}

std::string complex_text(Complex z) { return format_number(z.real()) + " " + format_number(z.imag()); }

std::string cut_text(const domain::CutSet& cut) {
  switch (cut.kind) {
    case domain::CutKind::empty: return "empty";
    case domain::CutKind::point: return "point {" + format_number(cut.lo) + "}";
    case domain::CutKind::interval:
      return "interval (" + format_number(cut.lo) + ", " + format_number(cut.hi) + ")";
    case domain::CutKind::half_line: return "half_line (-inf, " + format_number(cut.hi) + ")";
  }
  return "";
}

int exit_for(const Error& e, int domain_code) {
  switch (e.kind()) {
    case ErrorKind::invalid_parameter: return kUsage;
    case ErrorKind::classification: return kNotExists;
    default: return domain_code;
  }
}

struct Common {
  std::string kappa;
  double gamma = 0.0;
  std::string format = "plain";
  std::string out_path;
};

void add_params(CLI::App* cmd, Common& c, bool required = true) {
  auto* k = cmd->add_option("--kappa", c.kappa, "kappa: decimal or inf");
  auto* g = cmd->add_option("--gamma", c.gamma, "gamma");
  if (required) {
    k->required();
    g->required();
  }
}

Params require_params(const Common& c) {
  const auto p = parse_params(c.kappa, c.gamma);
  if (!p) throw Error(ErrorKind::invalid_parameter, "cannot parse --kappa '" + c.kappa + "'");
  return *p;
}

std::string classify_output(const Params& p, const std::string& format) {
  const domain::BranchClass bc = domain::classify(p);
  const auto [a1, a2] = scalar::critical_points(p);
  const double d0 = scalar::discriminant_at_zero(p);
  std::optional<domain::CutSet> cut;
  if (bc.exists) cut = domain::cut_set(p);
  const bool identity = p.is_finite() && p.k() == 1.0 && p.gamma() == 1.0;
  if (format == "json") {
    ordered_json j;
    j["params"] = {{"kappa", kappa_json(p)}, {"gamma", number_json(p.gamma())}};
    j["exists"] = bc.exists;
    j["region"] = bc.region ? ordered_json(domain::to_string(*bc.region)) : ordered_json(nullptr);
    j["failure"] = domain::to_string(bc.failure);
    j["d0"] = number_json(d0);
    j["alpha1"] = {number_json(a1.real()), number_json(a1.imag())};
    j["alpha2"] = {number_json(a2.real()), number_json(a2.imag())};
    if (cut) {
      j["cut"] = {{"kind", domain::to_string(cut->kind)},
                  {"lo", number_json(cut->lo)},
                  {"hi", number_json(cut->hi)}};
    } else {
      j["cut"] = nullptr;
    }
    if (identity) j["note"] = "identity map f(z) = z";
    return j.dump(2) + "\n";
  }
  std::string s;
  s += "kappa " + kappa_text(p) + "\n";
  s += "gamma " + format_number(p.gamma()) + "\n";
  s += std::string("exists ") + (bc.exists ? "yes" : "no") + "\n";
  s += std::string("region ") + (bc.region ? domain::to_string(*bc.region) : "-") + "\n";
  s += std::string("failure ") + domain::to_string(bc.failure) + "\n";
  s += "D(0) " + format_number(d0) + "\n";
  s += "alpha1 " + complex_text(a1) + "\n";
  s += "alpha2 " + complex_text(a2) + "\n";
  s += "cut " + (cut ? cut_text(*cut) : std::string("-")) + "\n";
  if (identity) s += "note identity map f(z) = z\n";
  return s;
}

std::string eval_output(const Params& p, const std::string& mode, Complex w, const std::string& format) {
  Complex value;
  std::optional<inverse::WResult> res;
  if (mode == "f") {
    value = map::f_eval(p, w);
  } else {
    inverse::EvalOptions opts;
    if (const char* env = std::getenv("LT_TOL")) {
      const auto tol = parse_double(env);
      if (!tol || !(*tol > 0.0)) throw Error(ErrorKind::invalid_parameter, "LT_TOL must be a positive number");
      opts.tol = *tol;
    }
    res = inverse::w_eval(p, w, opts);
    value = res->z;
  }
  if (format == "json") {
    ordered_json j;
    j["params"] = {{"kappa", kappa_json(p)}, {"gamma", number_json(p.gamma())}};
    j["mode"] = mode;
    j["input"] = {number_json(w.real()), number_json(w.imag())};
    j["value"] = {number_json(value.real()), number_json(value.imag())};
    if (res) {
      j["residual"] = number_json(res->residual);
      j["iterations"] = res->iterations;
      j["path_used"] = res->path_used;
      j["near_critical"] = res->near_critical;
    }
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    std::string s = res ? "re,im,residual\n" : "re,im\n";
    s += format_number(value.real()) + "," + format_number(value.imag());
    if (res) s += "," + format_number(res->residual);
    return s + "\n";
  }
  std::string s = complex_text(value);
  if (res) s += " " + format_number(res->residual);
  return s + "\n";
}

std::string windings_text(const verify::VerificationReport& r) {
  std::string s;
  for (const verify::WindingRecord& w : r.windings) {
    if (!s.empty()) s += ' ';
    s += std::to_string(w.value);
  }
  return s;
}

std::string report_plain(const verify::VerificationReport& r) {
  std::string s;
  s += "params " + r.params.to_string() + "\n";
  s += std::string("exists ") + (r.exists ? "yes" : "no") + "\n";
  s += "windings " + windings_text(r) + "\n";
  s += std::string("consistent ") + (r.consistent ? "yes" : "no") + "\n";
  s += "residual_max " + format_number(r.residual_max) + "\n";
  s += "sign_violations " + std::to_string(r.sign_violations) + "\n";
  s += "lemma_failures " + std::to_string(r.lemma_failures.size()) + "\n";
  for (const std::string& f : r.lemma_failures) s += "  " + f + "\n";
  s += std::string("pass ") + (r.pass() ? "yes" : "no") + "\n";
  return s;
}

int emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot write " << path << "\n";
    return kUsage;
  }
  file << text;
  return kOk;
}

}  // namespace

std::optional<double> parse_double(const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return v;
}

std::optional<Params> parse_params(const std::string& kappa, double gamma) {
  const std::string k = lower(kappa);
  if (k == "inf" || k == "+inf" || k == "infinity" || k == "+infinity") return Params::infinite(gamma);
  const auto v = parse_double(kappa);
  if (!v || !std::isfinite(*v)) return std::nullopt;
  return Params(*v, gamma);
}

std::vector<Params> grid(int n_kappa, int n_gamma) {
  std::vector<double> kappas;
  const int positive = n_kappa / 2;
  const int negative = (n_kappa - 1) / 2;
  auto spread = [](int count, int i) {
    return count == 1 ? 1.0 : 0.25 * std::pow(16.0, static_cast<double>(i) / (count - 1));
  };
  for (int i = 0; i < positive; ++i) kappas.push_back(spread(positive, i));
  for (int i = 0; i < negative; ++i) kappas.push_back(-spread(negative, i));
  std::vector<Params> out;
  for (int row = 0; row < n_kappa; ++row) {
    for (int j = 0; j < n_gamma; ++j) {
      const double g = n_gamma == 1 ? 0.0 : -2.0 + 4.0 * j / (n_gamma - 1);
      if (row < static_cast<int>(kappas.size())) {
        out.emplace_back(kappas[row], g);
      } else {
        out.push_back(Params::infinite(g));
      }
    }
  }
  return out;
}

std::optional<std::vector<Params>> parse_grid(const std::string& text) {
  if (text == "default") return grid(40, 40);
  const auto x = text.find('x');
  if (x == std::string::npos) return std::nullopt;
  int n = 0;
  int m = 0;
  const char* s = text.data();
  const auto r1 = std::from_chars(s, s + x, n);
  const auto r2 = std::from_chars(s + x + 1, s + text.size(), m);
  if (r1.ec != std::errc() || r1.ptr != s + x || r2.ec != std::errc() ||
      r2.ptr != s + text.size() || n < 1 || m < 1) {
    return std::nullopt;
  }
  return grid(n, m);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lambert-Tsallis W: classification, evaluation, boundary export, verification"};
  app.require_subcommand(1);

  Common c;
  auto* classify = app.add_subcommand("classify", "existence of the main branch");
  add_params(classify, c);
  classify->add_option("--format", c.format)->check(CLI::IsMember({"plain", "json"}));
  classify->add_option("--out", c.out_path, "output file");

  std::string mode = "w";
  std::vector<double> point;
  auto* eval = app.add_subcommand("eval", "evaluate f or W at re + i im");
  add_params(eval, c);
  eval->add_option("--mode", mode)->check(CLI::IsMember({"f", "w"}));
  eval->add_option("--format", c.format)->check(CLI::IsMember({"plain", "json", "csv"}));
  eval->add_option("--out", c.out_path, "output file");
  eval->add_option("point", point, "re im")->expected(2)->required();

  int samples = 256;
  auto* boundary = app.add_subcommand("boundary", "boundary of the domain as plot data");
  add_params(boundary, c);
  boundary->add_option("--samples", samples)->check(CLI::PositiveNumber);
  boundary->add_option("--format", c.format)->check(CLI::IsMember({"plain", "json", "csv"}));
  boundary->add_option("--out", c.out_path, "output file");

  std::string grid_spec;
  unsigned seed = 0;
  auto* verify = app.add_subcommand("verify", "winding, round-trip, sign and table checks");
  add_params(verify, c, false);
  verify->add_option("--grid", grid_spec, "default or NxM");
  verify->add_option("--seed", seed);
  verify->add_option("--format", c.format)->check(CLI::IsMember({"plain", "json"}));
  verify->add_option("--out", c.out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (classify->parsed()) {
      const Params p = require_params(c);
      const int code = emit(classify_output(p, c.format), c.out_path, out, err);
      if (code != kOk) return code;
      return domain::classify(p).exists ? kOk : kNotExists;
    }
    if (eval->parsed()) {
      const Params p = require_params(c);
      return emit(eval_output(p, mode, Complex(point[0], point[1]), c.format), c.out_path, out, err);
    }
    if (boundary->parsed()) {
      const Params p = require_params(c);
      if (p.is_finite() && p.k() < 0.0) {
        err << "error: boundary export needs kappa > 0 or inf; negative kappa maps to kappa' = "
            << format_number(-p.k()) << ", gamma' = " << format_number(p.gamma() - 1.0 / p.k())
            << "\n";
        return kUsage;
      }
      const domain::BoundaryExport data = domain::export_boundary(p, samples);
      std::string text;
      if (c.format == "csv") text = domain::to_csv(data);
      else if (c.format == "json") text = domain::to_json(data) + "\n";
      else text = domain::to_plain(data);
      return emit(text, c.out_path, out, err);
    }
    if (verify->parsed()) {
      std::vector<Params> cells;
      if (!grid_spec.empty()) {
        if (!c.kappa.empty()) {
          err << "error: use either --grid or --kappa/--gamma\n";
          return kUsage;
        }
        const auto g = parse_grid(grid_spec);
        if (!g) {
          err << "error: --grid expects default or NxM\n";
          return kUsage;
        }
        cells = *g;
      } else {
        if (c.kappa.empty() || verify->count("--gamma") == 0) {
          err << "error: verify needs --kappa and --gamma, or --grid\n";
          return kUsage;
        }
        cells.push_back(require_params(c));
      }
      bool all = true;
      std::string text;
      ordered_json reports = ordered_json::array();
      for (const Params& p : cells) {
        try {
          const verify::VerificationReport r = verify::verify_params(p, seed);
          all = all && r.pass();
          if (c.format == "json") {
            reports.push_back(ordered_json::parse(r.to_json()));
          } else if (grid_spec.empty()) {
            text += report_plain(r);
          } else {
            text += kappa_text(p) + " " + format_number(p.gamma()) + " exists=" +
                    (r.exists ? "yes" : "no") + " windings=" + windings_text(r) +
                    " pass=" + (r.pass() ? "yes" : "no") + "\n";
          }
        } catch (const Error& e) {
          all = false;
          if (c.format == "json") {
            reports.push_back({{"params", {{"kappa", kappa_json(p)}, {"gamma", number_json(p.gamma())}}},
                               {"error", e.what()},
                               {"pass", false}});
          } else {
            text += p.to_string() + " error: " + e.what() + "\n";
          }
        }
      }
      if (c.format == "json") {
        text = (grid_spec.empty() ? reports.front().dump(2) : reports.dump(2)) + "\n";
      }
      const int code = emit(text, c.out_path, out, err);
      if (code != kOk) return code;
      return all ? kOk : kVerifyFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e, eval->parsed() ? kEvalDomain : verify->parsed() ? kVerifyFailed : kUsage);
  }
  return kUsage;
}

}  // namespace lt::cli
