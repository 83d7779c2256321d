#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "dha/geometry.hpp"
#include "dha/oracle.hpp"
#include "dha/solver.hpp"
#include "dha/special_functions.hpp"

namespace dha::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, json };

// Quadrature and Monte Carlo gates used by `verify`.
constexpr int kVerifyPanels = 4096;
constexpr double kQuadratureGate = 1e-8;
constexpr double kSigmaGate = 4.0;

// Result of one subcommand, rendered by emit().
struct Envelope {
  std::string command;
  Json inputs = Json::object();
  Json result;
  Json diagnostics = Json::object();
  // Text mode: first line is the primary scalar, then these lines.
  std::optional<double> primary;
  std::vector<std::string> text_lines;
  int exit_code = kOk;
};

std::string fixed17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.17g", v);
  return buf;
}

void emit(const Envelope& env, Format format, std::ostream& out) {
  if (format == Format::json) {
    Json j;
    j["command"] = env.command;
    j["inputs"] = env.inputs;
    j["result"] = env.result;
    j["diagnostics"] = env.diagnostics;
    out << j.dump() << '\n';
    return;
  }
  if (env.primary) out << fixed17(*env.primary) << '\n';
  for (const auto& line : env.text_lines) out << line << '\n';
}

Json optional_number(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Tolerance tolerance_from(double tol) {
  Tolerance t;
  t.abs_tol = tol;
  t.validate();
  return t;
}

Envelope cmd_constant(double tol_value) {
  const Tolerance tol = tolerance_from(tol_value);
  const MethodReport report = dha_report(tol);

  Envelope env;
  env.command = "constant";
  env.inputs["tol"] = tol.abs_tol;
  env.result = {
      {"d_rootfind", optional_number(report.d_rootfind)},
      {"d_kepler", optional_number(report.d_kepler)},
      {"d_archav", optional_number(report.d_archav)},
      {"d_invbeta", optional_number(report.d_invbeta)},
      {"max_pairwise_delta", report.max_pairwise_delta},
      {"reference_digits_matched", report.reference_digits_matched},
  };
  Json methods = Json::object();
  for (const auto& m : report.methods) {
    Json entry = {{"digits_matched", m.digits_matched}};
    if (!m.error.empty()) entry["error"] = m.error;
    methods[m.name] = entry;
  }
  env.diagnostics["methods"] = methods;
  env.diagnostics["reference"] = std::string(kHalfAreaOffsetLiteral);

  env.primary = report.d_invbeta ? report.d_invbeta
                : report.d_kepler ? report.d_kepler
                                  : report.d_rootfind;
  for (const auto& m : report.methods) {
    env.text_lines.push_back(
        "d_" + m.name + ": " +
        (m.value ? fixed17(*m.value) + " (" + std::to_string(m.digits_matched) +
                       " digits)"
                 : "failed: " + m.error));
  }
  env.text_lines.push_back("max_pairwise_delta: " +
                           fixed17(report.max_pairwise_delta));
  env.text_lines.push_back("reference_digits_matched: " +
                           std::to_string(report.reference_digits_matched));

  // Consistency gate, scaled with a loosened tolerance.
  const double gate = std::max(1e-10, 10.0 * tol.abs_tol);
  env.diagnostics["consistency_gate"] = gate;
  const bool ok = report.all_succeeded() && report.max_pairwise_delta <= gate;
  env.exit_code = ok ? kOk : kNumerical;
  return env;
}

Envelope cmd_lens_area(double R, double r, double d) {
  const LensConfig c{R, r, d};
  const double area = lens_area(c);
  Envelope env;
  env.command = "lens-area";
  env.inputs = {{"R", R}, {"r", r}, {"d", d}};
  env.result = area;
  env.primary = area;
  return env;
}

Envelope cmd_offset(double R, double r, std::optional<double> fraction,
                    std::optional<double> area, double tol_value) {
  const Tolerance tol = tolerance_from(tol_value);
  const SolveRequest req = fraction
                               ? SolveRequest(R, r, FractionTarget{*fraction}, tol)
                               : SolveRequest(R, r, AreaTarget{*area}, tol);
  const OffsetSolution sol = solve_offset(req);

  Envelope env;
  env.command = "offset";
  env.inputs = {{"R", R}, {"r", r}};
  if (fraction) env.inputs["fraction"] = *fraction;
  if (area) env.inputs["area"] = *area;
  env.inputs["tol"] = tol.abs_tol;
  env.result = sol.d;
  env.diagnostics = {{"target_area", req.target_area()},
                     {"residual", sol.residual},
                     {"iterations", sol.iterations}};
  env.primary = sol.d;
  env.text_lines = {"residual: " + fixed17(sol.residual),
                    "iterations: " + std::to_string(sol.iterations)};
  return env;
}

Envelope cmd_kepler(double a, double x, const std::string& method,
                    std::optional<int> terms, double tol_value) {
  const KeplerQuery q{a, x};
  KeplerSolution sol;
  Envelope env;
  if (method == "series") {
    sol = kepler_e_series(q, terms.value_or(50));
  } else {
    sol = kepler_e_newton(q, tolerance_from(tol_value));
    if (sol.residual > 1e-12) env.exit_code = kNumerical;
  }
  env.command = "kepler";
  env.inputs = {{"a", a}, {"x", x}, {"method", method}};
  if (method == "series") {
    env.inputs["terms"] = sol.iterations_or_terms;
  } else {
    env.inputs["tol"] = tol_value;
  }
  env.result = sol.y;
  env.diagnostics = {{"method", std::string(to_string(sol.method))},
                     {"residual", sol.residual},
                     {"iterations_or_terms", sol.iterations_or_terms}};
  env.primary = sol.y;
  env.text_lines = {"residual: " + fixed17(sol.residual),
                    std::string(sol.method == KeplerMethod::series ? "terms: "
                                                                   : "iterations: ") +
                        std::to_string(sol.iterations_or_terms)};
  return env;
}

Envelope cmd_invbeta(double z, double a, double b, double tol_value) {
  const BetaParams p{a, b};
  const double x = beta_regularized_inverse(z, p, tolerance_from(tol_value));
  const double residual = std::abs(beta_regularized(x, p) - z);
  Envelope env;
  env.command = "invbeta";
  env.inputs = {{"z", z}, {"a", a}, {"b", b}, {"tol", tol_value}};
  env.result = x;
  env.diagnostics = {{"residual", residual}};
  env.primary = x;
  env.text_lines = {"residual: " + fixed17(residual)};
  return env;
}

struct VerifyCase {
  const char* name;
  LensConfig config;
};

Envelope cmd_verify(std::uint64_t samples, std::uint64_t seed) {
  const double dha = half_area_offset_reference();
  const std::vector<VerifyCase> cases = {
      {"coincident", {1.0, 1.0, 0.0}},
      {"unit_d1", {1.0, 1.0, 1.0}},
      {"unit_half_area", {1.0, 1.0, dha}},
      {"unit_close", {1.0, 1.0, 0.3}},
      {"unit_far", {1.0, 1.0, 1.8}},
      {"R2_r1_d2", {2.0, 1.0, 2.0}},
      {"R2_r1_d1.5", {2.0, 1.0, 1.5}},
      {"R1_r2_d1.5", {1.0, 2.0, 1.5}},
      {"R1.5_r0.7_d1.2", {1.5, 0.7, 1.2}},
      {"contained", {3.0, 1.0, 1.0}},
      {"disjoint", {1.0, 1.0, 2.5}},
  };

  oracle::MonteCarloOptions opts;
  opts.threads = std::max(1u, std::thread::hardware_concurrency());

  Envelope env;
  env.command = "verify";
  env.inputs = {{"samples", samples}, {"seed", seed}};
  Json checks = Json::array();
  int failed = 0;
  int total = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& vc = cases[i];
    const double analytic = lens_area(vc.config);
    const double quad = oracle::lens_area_quadrature(vc.config, kVerifyPanels);
    const auto mc = oracle::lens_area_montecarlo(vc.config, samples,
                                                 seed + i, opts);
    const double quad_delta = std::abs(quad - analytic);
    const double mc_delta = std::abs(mc.value - analytic);
    const bool quad_ok = quad_delta <= kQuadratureGate;
    const bool mc_ok = mc_delta <= kSigmaGate * mc.std_error;
    failed += !quad_ok + !mc_ok;
    total += 2;

    checks.push_back({{"name", vc.name},
                      {"R", vc.config.R},
                      {"r", vc.config.r},
                      {"d", vc.config.d},
                      {"analytic", analytic},
                      {"quadrature", quad},
                      {"quadrature_delta", quad_delta},
                      {"quadrature_pass", quad_ok},
                      {"montecarlo", mc.value},
                      {"montecarlo_std_error", mc.std_error},
                      {"montecarlo_delta", mc_delta},
                      {"montecarlo_pass", mc_ok}});

    char line[256];
    std::snprintf(line, sizeof line,
                  "%-16s quad %-4s (delta %.3g)  mc %-4s (delta %.3g, 4se %.3g)",
                  vc.name, quad_ok ? "PASS" : "FAIL", quad_delta,
                  mc_ok ? "PASS" : "FAIL", mc_delta, kSigmaGate * mc.std_error);
    env.text_lines.emplace_back(line);
  }
  env.result = {{"passed", total - failed}, {"failed", failed}, {"total", total}};
  env.diagnostics = {{"checks", checks},
                     {"quadrature_panels", kVerifyPanels},
                     {"quadrature_gate", kQuadratureGate},
                     {"sigma_gate", kSigmaGate}};
  env.text_lines.insert(env.text_lines.begin(),
                        std::string(failed == 0 ? "PASS " : "FAIL ") +
                            std::to_string(total - failed) + "/" +
                            std::to_string(total));
  env.exit_code = failed == 0 ? kOk : kNumerical;
  return env;
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
}

void add_tol(CLI::App* cmd, double& tol) {
  cmd->add_option("--tol", tol, "Absolute tolerance")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Half-area overlap offset of two disks and supporting numerics",
               "dha"};
  app.require_subcommand(1);

  std::string format = "text";
  double tol = 1e-14;

  auto* constant = app.add_subcommand(
      "constant", "Half-area offset of two unit disks by every method");
  add_format(constant, format);
  add_tol(constant, tol);

  double R = 0.0;
  double r = 0.0;
  double d = 0.0;
  auto* lens = app.add_subcommand("lens-area", "Overlap area of two disks");
  lens->add_option("R", R, "Radius of the first circle")->required();
  lens->add_option("r", r, "Radius of the second circle")->required();
  lens->add_option("d", d, "Center separation")->required();
  add_format(lens, format);

  std::optional<double> fraction;
  std::optional<double> area;
  auto* offset = app.add_subcommand("offset", "Separation for a target overlap");
  offset->add_option("R", R, "Radius of the first circle")->required();
  offset->add_option("r", r, "Radius of the second circle")->required();
  auto* fraction_opt =
      offset->add_option("--fraction", fraction, "Share of the smaller disk");
  auto* area_opt = offset->add_option("--area", area, "Absolute overlap area");
  fraction_opt->excludes(area_opt);
  area_opt->excludes(fraction_opt);
  add_format(offset, format);
  add_tol(offset, tol);

  double a = 0.0;
  double x = 0.0;
  std::string method = "newton";
  std::optional<int> terms;
  auto* kepler = app.add_subcommand("kepler", "Solve x = y - a sin(y) for y");
  kepler->add_option("a", a, "Parameter in [-1, 1]")->required();
  kepler->add_option("x", x, "Abscissa in [-pi, pi]")->required();
  kepler->add_option("--method", method, "Solution method")
      ->check(CLI::IsMember({"newton", "series"}));
  kepler->add_option("--terms", terms, "Series terms")->check(CLI::PositiveNumber);
  add_format(kepler, format);
  add_tol(kepler, tol);

  double z = 0.0;
  double shape_b = 0.0;
  auto* invbeta =
      app.add_subcommand("invbeta", "Inverse regularized incomplete beta");
  invbeta->add_option("z", z, "Probability in [0, 1]")->required();
  invbeta->add_option("a", a, "First shape")->required();
  invbeta->add_option("b", shape_b, "Second shape")->required();
  add_format(invbeta, format);
  add_tol(invbeta, tol);

  std::uint64_t samples = 1000000;
  std::uint64_t seed = 42;
  auto* verify =
      app.add_subcommand("verify", "Cross-check lens areas against oracles");
  verify->add_option("--samples", samples, "Monte Carlo samples per config")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Base seed");
  add_format(verify, format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const Format fmt = format == "json" ? Format::json : Format::text;
  try {
    Envelope env;
    if (*constant) {
      env = cmd_constant(tol);
    } else if (*lens) {
      env = cmd_lens_area(R, r, d);
    } else if (*offset) {
      if (!fraction && !area) {
        err << "error: offset needs exactly one of --fraction or --area\n";
        return kUsage;
      }
      env = cmd_offset(R, r, fraction, area, tol);
    } else if (*kepler) {
      env = cmd_kepler(a, x, method, terms, tol);
    } else if (*invbeta) {
      env = cmd_invbeta(z, a, shape_b, tol);
    } else if (*verify) {
      env = cmd_verify(samples, seed);
    }
    emit(env, fmt, out);
    return env.exit_code;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << " (best " << fixed17(e.best())
        << ", residual " << fixed17(e.residual()) << ", bracket ["
        << fixed17(e.bracket_lo()) << ", " << fixed17(e.bracket_hi()) << "])\n";
    return kNumerical;
  }
}

}  // namespace dha::cli
