#include "ebell/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <regex>
#include <string>
#include <vector>

#include "ebell/emit.hpp"
#include "ebell/entropy.hpp"
#include "ebell/errors.hpp"
#include "ebell/inequality.hpp"
#include "ebell/matlog.hpp"

namespace ebell::cli {
namespace {

double parse_real(std::string_view text) {
  std::string s(text);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    throw InvalidInputError("not a number: '" + s + "'");
  }
  return v;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

// Options shared by the matrix-producing subcommands.
struct StateOptions {
  std::string beta_a = "0";
  std::string beta_b;
  std::string beta_c;
  std::string alpha = "0";
  std::string sign_a = "+";
  std::string sign_b = "+";
  std::string sign_c = "+";
  std::string matrix;
  bool paper_literal = false;
  double tol = kInvertibleTol;

  CLI::Option* beta_b_opt = nullptr;
  CLI::Option* beta_c_opt = nullptr;
  CLI::Option* beta_a_opt = nullptr;
  CLI::Option* matrix_opt = nullptr;
};

void add_angle_options(CLI::App* app, StateOptions& o, int count) {
  o.beta_a_opt = app->add_option("--beta-a,--theta-ab", o.beta_a, "First angle (radians or pi expression)");
  if (count >= 2) o.beta_b_opt = app->add_option("--beta-b,--theta-bc", o.beta_b, "Second angle");
  if (count >= 3) o.beta_c_opt = app->add_option("--beta-c,--theta-ac", o.beta_c, "Third angle");
  app->add_option("--sign-a", o.sign_a, "Outcome sign for the first measurement (+ or -)");
  if (count >= 2) app->add_option("--sign-b", o.sign_b, "Outcome sign for the second measurement");
  if (count >= 3) app->add_option("--sign-c", o.sign_c, "Outcome sign for the third measurement");
  app->add_option("--alpha", o.alpha, "Phase angle alpha (radians)");
}

DensityMatrix measurement(double beta, Sign sign, double alpha) {
  if (alpha == 0.0) return density_xz(beta, sign);
  return density_from_ket(make_ket(Axis(alpha, beta), sign));
}

// --matrix, --paper-literal, a two-angle mixture, or a single measurement
// state, in that order of precedence.
GeneralMatrix input_matrix(const StateOptions& o) {
  if (o.matrix_opt && o.matrix_opt->count() > 0) return parse_matrix_json(o.matrix);
  const double beta_a = parse_angle(o.beta_a);
  const double alpha = parse_angle(o.alpha);
  const Sign sign_a = parse_sign(o.sign_a);
  if (o.paper_literal) return paper_literal_density(Axis(alpha, beta_a), sign_a);
  if (o.beta_b_opt && o.beta_b_opt->count() > 0) {
    return pair_mixture(beta_a, sign_a, parse_angle(o.beta_b), parse_sign(o.sign_b), alpha).matrix();
  }
  return measurement(beta_a, sign_a, alpha).matrix();
}

std::string eigenvalues_json(const GeneralMatrix& m) {
  const EigenDecomp eig = eigen2(m);
  std::string s = "[";
  for (int i = 0; i < 2; ++i) {
    if (i) s += ", ";
    s += "[" + format_number(eig.eigenvalues[i].real()) + ", " +
         format_number(eig.eigenvalues[i].imag()) + "]";
  }
  return s + "]";
}

int run_density(const StateOptions& o, std::ostream& out) {
  const double beta = parse_angle(o.beta_a);
  const double alpha = parse_angle(o.alpha);
  const Sign sign = parse_sign(o.sign_a);
  GeneralMatrix m;
  std::string construction;
  if (o.paper_literal) {
    m = paper_literal_density(Axis(alpha, beta), sign);
    construction = "paper_literal";
  } else if (alpha == 0.0) {
    m = density_xz(beta, sign).matrix();
    construction = "xz";
  } else {
    m = density_from_ket(make_ket(Axis(alpha, beta), sign)).matrix();
    construction = "outer_product";
  }
  const cplx tr = m.trace();
  out << "{\"construction\": \"" << construction << "\", \"matrix\": " << matrix_json(m)
      << ", \"hermitian\": " << (is_hermitian(m) ? "true" : "false") << ", \"trace\": ["
      << format_number(tr.real()) << ", " << format_number(tr.imag()) << "]}\n";
  return kExitOk;
}

int run_mix(const StateOptions& o, std::ostream& out) {
  const DensityMatrix rho =
      pair_mixture(parse_angle(o.beta_a), parse_sign(o.sign_a),
                   o.beta_b.empty() ? 0.0 : parse_angle(o.beta_b), parse_sign(o.sign_b),
                   parse_angle(o.alpha));
  out << "{\"matrix\": " << matrix_json(rho.matrix())
      << ", \"eigenvalues\": " << eigenvalues_json(rho.matrix()) << "}\n";
  return kExitOk;
}

int run_entropy(const StateOptions& o, const std::string& route, std::ostream& out) {
  if (route != "eigen" && route != "trace" && route != "both") {
    throw InvalidInputError("invalid route '" + route + "' (expected eigen, trace or both)");
  }
  const DensityMatrix rho = DensityMatrix::from_matrix(input_matrix(o));
  const EntropyReport report = entropy_report(rho);
  std::string trace_value = "null";
  if (route != "eigen") trace_value = format_number(von_neumann_tr(rho, o.tol));
  out << "{\"sigma\": " << format_number(report.sigma) << ", \"sigma_trace\": " << trace_value
      << ", \"s_thermo\": " << format_number(report.s_thermo) << ", \"eigenvalues\": ["
      << format_number(report.basis_eigenvalues[0]) << ", "
      << format_number(report.basis_eigenvalues[1]) << "], \"units\": \"nats\"}\n";
  return kExitOk;
}

int run_logm(const StateOptions& o, std::ostream& out) {
  const GeneralMatrix m = input_matrix(o);
  const LogmResult r = logm(m, o.tol);
  out << "{\"matrix\": " << matrix_json(r.matrix) << ", \"method\": \"" << to_string(r.method)
      << "\", \"is_complex\": " << (r.is_complex ? "true" : "false")
      << ", \"roundtrip_max_error\": " << format_number(max_abs_diff(expm(r.matrix), m))
      << "}\n";
  return kExitOk;
}

struct CheckOptions {
  std::string kind;
  std::string mode = "entrywise";
  std::string units = "nats";
  std::string format;
  bool coplanar = false;
};

IneqVerdict single_check(CheckKind kind, const StateOptions& o, const CheckOptions& c) {
  const double a = parse_angle(o.beta_a);
  const double b = o.beta_b.empty() ? 0.0 : parse_angle(o.beta_b);
  double z = o.beta_c.empty() ? 0.0 : parse_angle(o.beta_c);
  const SignTriple signs{parse_sign(o.sign_a), parse_sign(o.sign_b), parse_sign(o.sign_c)};
  switch (kind) {
    case CheckKind::wigner: return check_wigner_prob(a, b, z);
    case CheckKind::matrix:
      return check_matrix(a, b, z, signs, parse_mode(c.mode), parse_angle(o.alpha));
    case CheckKind::entropic: return check_entropy(a, b, z, signs);
    case CheckKind::cerf_adami:
      if (c.coplanar) z = a + b;
      return check_cerf_adami(a, b, z, parse_units(c.units));
  }
  throw InvalidInputError("unknown kind");
}

int run_check(const StateOptions& o, const CheckOptions& c, std::ostream& out) {
  const CheckKind kind = parse_check_kind(c.kind);
  const IneqVerdict v = single_check(kind, o, c);
  const OutputFormat format = c.format.empty() ? OutputFormat::json : parse_format(c.format);
  if (format == OutputFormat::json) {
    out << verdict_json(v) << '\n';
  } else {
    ScanRecord rec;
    rec.angles = v.inputs.angles;
    rec.verdict = v;
    auto writer = make_csv_writer(out);
    ScanConfig cfg;
    writer->begin(cfg);
    writer->record(rec);
    ScanSummary summary;
    summary.add(rec);
    writer->end(summary);
  }
  return v.holds ? kExitOk : kExitViolation;
}

struct ScanOptions {
  std::string range[3];
  CLI::Option* range_opt[3] = {nullptr, nullptr, nullptr};
  std::string step = "pi/36";
  std::string output;
  unsigned threads = 0;
};

int run_scan_command(const StateOptions& o, const CheckOptions& c, const ScanOptions& s,
                     std::ostream& out, std::ostream& err) {
  ScanConfig cfg;
  cfg.kind = parse_check_kind(c.kind);
  cfg.signs = {parse_sign(o.sign_a), parse_sign(o.sign_b), parse_sign(o.sign_c)};
  cfg.mode = parse_mode(c.mode);
  cfg.units = parse_units(c.units);
  cfg.coplanar = c.coplanar;
  cfg.alpha = parse_angle(o.alpha);
  cfg.format = c.format.empty() ? OutputFormat::csv : parse_format(c.format);

  const double step = parse_angle(s.step);
  const CLI::Option* fixed[3] = {o.beta_a_opt, o.beta_b_opt, o.beta_c_opt};
  const std::string* fixed_value[3] = {&o.beta_a, &o.beta_b, &o.beta_c};
  for (int d = 0; d < 3; ++d) {
    if (fixed[d] && fixed[d]->count() > 0) {
      cfg.ranges[d] = AngleRange::single(parse_angle(*fixed_value[d]));
    } else if (s.range_opt[d] && s.range_opt[d]->count() > 0) {
      cfg.ranges[d] = parse_range(s.range[d], step);
    } else {
      cfg.ranges[d] = AngleRange{0.0, kTwoPi, step, true, false};
    }
  }
  cfg.validate();

  std::ofstream file;
  std::ostream* sink = &out;
  if (!s.output.empty()) {
    file.open(s.output, std::ios::binary);
    if (!file) throw IoError("cannot open output file '" + s.output + "'");
    sink = &file;
  }
  auto writer = make_writer(cfg.format, *sink);
  writer->begin(cfg);
  const ScanSummary summary =
      run_scan(cfg, [&writer](const ScanRecord& r) { writer->record(r); }, s.threads);
  writer->end(summary);

  err << "points=" << summary.total_points << " violations=" << summary.violations
      << " not_comparable=" << summary.not_comparable;
  if (summary.worst_violation) {
    err << " worst_margin=" << format_number(summary.worst_violation->margin);
  }
  err << '\n';
  return summary.violations > 0 ? kExitViolation : kExitOk;
}

}  // namespace

double parse_angle(std::string_view text) {
  const std::string s = trim(text);
  static const std::regex pi_expr(
      R"(^([+-])?((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*\*?\s*pi\s*(?:/\s*((?:\d+\.?\d*|\.\d+)))?$)");
  std::smatch m;
  if (std::regex_match(s, m, pi_expr)) {
    double v = kPi;
    if (m[2].matched) v *= parse_real(m[2].str());
    if (m[3].matched) {
      const double den = parse_real(m[3].str());
      if (den == 0.0) throw InvalidInputError("division by zero in angle '" + s + "'");
      v /= den;
    }
    if (m[1].matched && m[1].str() == "-") v = -v;
    return v;
  }
  return parse_real(s);
}

AngleRange parse_range(std::string_view text, double step) {
  const std::string s = trim(text);
  AngleRange r;
  r.step = step;
  std::string body;
  if (s.size() >= 2 && (s.front() == '[' || s.front() == '(') &&
      (s.back() == ']' || s.back() == ')')) {
    r.include_start = s.front() == '[';
    r.include_stop = s.back() == ']';
    body = s.substr(1, s.size() - 2);
    const auto comma = body.find(',');
    if (comma == std::string::npos) throw InvalidInputError("range '" + s + "' needs a comma");
    r.start = parse_angle(body.substr(0, comma));
    r.stop = parse_angle(body.substr(comma + 1));
  } else {
    const auto colon = s.find(':');
    if (colon == std::string::npos) {
      throw InvalidInputError("range '" + s + "' must look like [a,b) or a:b");
    }
    r.start = parse_angle(s.substr(0, colon));
    r.stop = parse_angle(s.substr(colon + 1));
    r.include_start = true;
    r.include_stop = false;
  }
  return r;
}

GeneralMatrix parse_matrix_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(std::string("--matrix is not valid JSON: ") + e.what());
  }
  if (!j.is_array() || j.size() != 2) throw InvalidInputError("--matrix must be a 2x2 array");
  GeneralMatrix m;
  for (int i = 0; i < 2; ++i) {
    if (!j[i].is_array() || j[i].size() != 2) {
      throw InvalidInputError("--matrix must be a 2x2 array");
    }
    for (int k = 0; k < 2; ++k) {
      const auto& e = j[i][k];
      if (e.is_number()) {
        m(i, k) = cplx(e.get<double>(), 0.0);
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m(i, k) = cplx(e[0].get<double>(), e[1].get<double>());
      } else {
        throw InvalidInputError("--matrix entries must be numbers or [re, im] pairs");
      }
    }
  }
  if (!all_finite(m)) throw InvalidInputError("--matrix has non-finite entries");
  return m;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Density matrices, entropies and Bell-type inequality checks for spin measurements",
               "ebell"};
  app.require_subcommand(1);

  StateOptions density_opts;
  auto* density = app.add_subcommand("density", "Print a measurement density matrix");
  add_angle_options(density, density_opts, 1);
  density->add_flag("--paper-literal", density_opts.paper_literal,
                    "Use the unconjugated general-axis form");

  StateOptions mix_opts;
  auto* mix = app.add_subcommand("mix", "Equal mixture of the a- and b-measurement states");
  add_angle_options(mix, mix_opts, 2);

  StateOptions entropy_opts;
  std::string route = "both";
  auto* entropy = app.add_subcommand("entropy", "Von Neumann and thermodynamic entropy");
  add_angle_options(entropy, entropy_opts, 2);
  entropy_opts.matrix_opt =
      entropy->add_option("--matrix", entropy_opts.matrix, "2x2 JSON array of [re, im] pairs");
  entropy->add_option("--route", route, "eigen, trace or both");
  entropy->add_option("--tol", entropy_opts.tol, "Invertibility tolerance for the trace route");

  StateOptions logm_opts;
  auto* logm_cmd = app.add_subcommand("logm", "Matrix logarithm with method report");
  add_angle_options(logm_cmd, logm_opts, 2);
  logm_opts.matrix_opt =
      logm_cmd->add_option("--matrix", logm_opts.matrix, "2x2 JSON array of [re, im] pairs");
  logm_cmd->add_flag("--paper-literal", logm_opts.paper_literal,
                     "Use the unconjugated general-axis form");
  logm_cmd->add_option("--tol", logm_opts.tol, "Invertibility tolerance on |det|");

  StateOptions check_opts;
  CheckOptions check_cfg;
  auto* check = app.add_subcommand("check", "Evaluate one inequality at a single point");
  check->add_option("kind", check_cfg.kind, "wigner, matrix, entropic or cerf_adami")->required();
  add_angle_options(check, check_opts, 3);
  check->add_option("--mode", check_cfg.mode, "entrywise or loewner (matrix)");
  check->add_option("--units", check_cfg.units, "nats or bits (cerf_adami)");
  check->add_flag("--coplanar", check_cfg.coplanar, "cerf_adami: theta_ac = theta_ab + theta_bc");
  check->add_option("--format", check_cfg.format, "json (default) or csv");

  StateOptions scan_opts;
  CheckOptions scan_cfg;
  ScanOptions scan_ranges;
  auto* scan = app.add_subcommand("scan", "Sweep an inequality over an angle grid");
  scan->add_option("kind", scan_cfg.kind, "wigner, matrix, entropic or cerf_adami")->required();
  add_angle_options(scan, scan_opts, 3);
  scan_ranges.range_opt[0] =
      scan->add_option("--range-a", scan_ranges.range[0], "Interval for the first angle");
  scan_ranges.range_opt[1] =
      scan->add_option("--range-b", scan_ranges.range[1], "Interval for the second angle");
  scan_ranges.range_opt[2] =
      scan->add_option("--range-c", scan_ranges.range[2], "Interval for the third angle");
  scan->add_option("--step", scan_ranges.step, "Grid step (default pi/36)");
  scan->add_option("--mode", scan_cfg.mode, "entrywise or loewner (matrix)");
  scan->add_option("--units", scan_cfg.units, "nats or bits (cerf_adami)");
  scan->add_flag("--coplanar", scan_cfg.coplanar, "cerf_adami: theta_ac = theta_ab + theta_bc");
  scan->add_option("--format", scan_cfg.format, "csv (default) or json");
  scan->add_option("--output,-o", scan_ranges.output, "Write to a file instead of stdout");
  scan->add_option("--threads", scan_ranges.threads, "Worker threads (0 = all cores)");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitError;
  }

  try {
    if (*density) return run_density(density_opts, out);
    if (*mix) return run_mix(mix_opts, out);
    if (*entropy) return run_entropy(entropy_opts, route, out);
    if (*logm_cmd) return run_logm(logm_opts, out);
    if (*check) return run_check(check_opts, check_cfg, out);
    if (*scan) return run_scan_command(scan_opts, scan_cfg, scan_ranges, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace ebell::cli
