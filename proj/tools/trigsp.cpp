// trigsp: command-line front end for the trigspline library. Every math
// path goes through the C API; this file only parses flags and formats
// tables.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trigspline.h"

namespace {

constexpr const char* kExitCodeHelp =
    "Exit codes: 0 success; 2 usage or validation error; 3 input parse error; "
    "4 math error (series convergence, degenerate factor, derivative order); "
    "5 I/O error.";

int exit_code(ts_status st) {
  switch (st) {
    case TS_OK: return 0;
    case TS_ERR_INVALID_ARGUMENT:
    case TS_ERR_INVALID_GRID:
    case TS_ERR_ORDER_RANGE:
    case TS_ERR_INCOMPATIBLE:
    case TS_ERR_INVALID_STATE:
    case TS_ERR_INVALID_FILTER: return 2;
    case TS_ERR_PARSE: return 3;
    case TS_ERR_SAMPLING:
    case TS_ERR_CONVERGENCE:
    case TS_ERR_DEGENERATE_FACTOR:
    case TS_ERR_NONCONVERGENT_DERIVATIVE:
    case TS_ERR_QUADRATURE: return 4;
    case TS_ERR_IO: return 5;
    default: return 4;
  }
}

int report(ts_status st) {
  std::cerr << "trigsp: " << ts_status_name(st) << ": " << ts_last_error() << "\n";
  return exit_code(st);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct SamplesDeleter {
  void operator()(ts_samples* p) const { ts_samples_free(p); }
};
struct SpectrumDeleter {
  void operator()(ts_spectrum* p) const { ts_spectrum_free(p); }
};
struct SplineDeleter {
  void operator()(ts_spline* p) const { ts_spline_free(p); }
};
using SamplesPtr = std::unique_ptr<ts_samples, SamplesDeleter>;
using SpectrumPtr = std::unique_ptr<ts_spectrum, SpectrumDeleter>;
using SplinePtr = std::unique_ptr<ts_spline, SplineDeleter>;

struct CommonOpts {
  std::string input = "-";
  std::string output = "-";
  std::string format = "csv";
};

struct ParamOpts {
  std::vector<double> gamma{1.0, 1.0, 1.0};
  std::vector<double> eta{1.0, 1.0, 1.0};
  int r = 1;
  int i1 = 0;
  int i2 = -1;  // -1: follow the sample grid variant
  double tolerance = 1e-12;
  long max_terms = 1000000;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("-i,--input", o.input, "Input path, '-' for stdin")->capture_default_str();
  cmd->add_option("-o,--output", o.output, "Output path, '-' for stdout")->capture_default_str();
  cmd->add_option("-f,--format", o.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void add_params(CLI::App* cmd, ParamOpts& p) {
  cmd->add_option("--gamma", p.gamma, "Cosine-kernel weights g1,g2,g3")
      ->delimiter(',')
      ->expected(1, 3);
  cmd->add_option("--eta", p.eta, "Sine-kernel weights e1,e2,e3")->delimiter(',')->expected(1, 3);
  cmd->add_option("--r", p.r, "Spline order (>= 1)")->capture_default_str();
  cmd->add_option("--i1", p.i1, "Stitching grid indicator (0 or 1)")->capture_default_str();
  cmd->add_option("--i2", p.i2, "Interpolation grid indicator; default: sample grid variant");
  cmd->add_option("--tolerance", p.tolerance, "Series tail tolerance")->capture_default_str();
  cmd->add_option("--max-terms", p.max_terms, "Series term cap")->capture_default_str();
}

ts_spline_params to_c_params(const ParamOpts& p, int variant_from_samples) {
  ts_spline_params out;
  ts_spline_params_init(&out);
  for (size_t i = 0; i < 3 && i < p.gamma.size(); ++i) out.gamma[i] = p.gamma[i];
  for (size_t i = 0; i < 3 && i < p.eta.size(); ++i) out.eta[i] = p.eta[i];
  out.r = p.r;
  out.i1 = p.i1;
  out.i2 = p.i2 >= 0 ? p.i2 : variant_from_samples;
  out.tolerance = p.tolerance;
  out.max_terms = p.max_terms;
  return out;
}

int write_output(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout << data;
    return std::cout ? 0 : 5;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "trigsp: io-error: cannot open '" << path << "' for writing\n";
    return 5;
  }
  out << data;
  if (!out) {
    std::cerr << "trigsp: io-error: write to '" << path << "' failed\n";
    return 5;
  }
  return 0;
}

int read_input(const std::string& path, std::string& data) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    data = buf.str();
    return 0;
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "trigsp: io-error: cannot open '" << path << "' for reading\n";
    return 5;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  data = buf.str();
  return 0;
}

int load_input_samples(const std::string& path, SamplesPtr& out) {
  std::string data;
  if (int rc = read_input(path, data)) return rc;
  ts_samples* raw = nullptr;
  if (ts_status st = ts_samples_parse(data.c_str(), data.size(), TS_FORMAT_AUTO, &raw))
    return report(st);
  out.reset(raw);
  return 0;
}

std::string param_header(const ts_spline_params& p, int n_points, int variant) {
  std::ostringstream os;
  os << "# gamma=" << fmt(p.gamma[0]) << "," << fmt(p.gamma[1]) << "," << fmt(p.gamma[2])
     << " eta=" << fmt(p.eta[0]) << "," << fmt(p.eta[1]) << "," << fmt(p.eta[2]) << " r=" << p.r
     << " i1=" << p.i1 << " i2=" << p.i2 << " tolerance=" << fmt(p.tolerance)
     << " max_terms=" << p.max_terms << " N=" << n_points << " variant=" << variant << "\n";
  return os.str();
}

// Shared tail of interpolate/approximate/regularize/smooth: evaluate the
// spline densely and emit the table; optionally dump the spline JSON.
int emit_spline_table(const SplinePtr& spline, const CommonOpts& common, const std::string& header,
                      int eval_points, const std::string& spline_out) {
  if (!spline_out.empty()) {
    char* json = nullptr;
    if (ts_status st = ts_spline_to_json(spline.get(), &json)) return report(st);
    std::string text(json);
    ts_string_free(json);
    if (int rc = write_output(spline_out, text + "\n")) return rc;
  }
  std::vector<double> xs(static_cast<size_t>(eval_points));
  for (int i = 0; i < eval_points; ++i)
    xs[static_cast<size_t>(i)] = (2.0 * 3.14159265358979323846 * i) / eval_points;
  std::vector<double> values(xs.size());
  if (ts_status st =
          ts_spline_eval_many(spline.get(), xs.data(), eval_points, values.data()))
    return report(st);

  std::ostringstream os;
  if (common.format == "json") {
    os << "{\"x\":[";
    for (int i = 0; i < eval_points; ++i) os << (i ? "," : "") << fmt(xs[static_cast<size_t>(i)]);
    os << "],\"value\":[";
    for (int i = 0; i < eval_points; ++i)
      os << (i ? "," : "") << fmt(values[static_cast<size_t>(i)]);
    os << "]}\n";
  } else {
    os << header << "x,value\n";
    for (int i = 0; i < eval_points; ++i)
      os << fmt(xs[static_cast<size_t>(i)]) << "," << fmt(values[static_cast<size_t>(i)]) << "\n";
  }
  return write_output(common.output, os.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("trigsp: trigonometric interpolation splines on uniform periodic "
                           "grids.\n") +
               kExitCodeHelp};
  app.require_subcommand(1);

  // ---- coeffs ----
  CommonOpts coeffs_common;
  auto* coeffs = app.add_subcommand("coeffs", "Discrete Fourier coefficients of the samples");
  add_common(coeffs, coeffs_common);

  // ---- interpolate / approximate / regularize / smooth ----
  struct SplineCmd {
    CLI::App* cmd = nullptr;
    CommonOpts common;
    ParamOpts params;
    int eval_points = 256;
    std::string spline_out;
  };
  auto add_spline_cmd = [&](const char* name, const char* help) {
    auto holder = std::make_shared<SplineCmd>();
    holder->cmd = app.add_subcommand(name, help);
    add_common(holder->cmd, holder->common);
    add_params(holder->cmd, holder->params);
    holder->cmd->add_option("--eval-points", holder->eval_points, "Dense evaluation grid size")
        ->capture_default_str();
    holder->cmd->add_option("--spline-out", holder->spline_out,
                            "Also write the spline as JSON to this path");
    return holder;
  };
  auto interp = add_spline_cmd("interpolate", "Build the interpolating spline and evaluate it");
  auto approx = add_spline_cmd("approximate", "Least-squares truncation of the spline");
  int approx_m = 0;
  approx->cmd->add_option("--m", approx_m, "Truncation order")->required();
  auto regul = add_spline_cmd("regularize", "Regularized spline (tau-weighted kernels)");
  double reg_lambda = 0.0;
  int reg_p = 1;
  regul->cmd->add_option("--lambda", reg_lambda, "Regularization weight (>= 0)")->required();
  regul->cmd->add_option("--p", reg_p, "Regularization order (>= 1)")->capture_default_str();
  auto smooth = add_spline_cmd("smooth", "Spline smoothed with modified Fejer multipliers");
  double smooth_alpha = 1.0;
  smooth->cmd->add_option("--alpha", smooth_alpha, "Fejer exponent (> 0)")->capture_default_str();

  // ---- smooth-data ----
  CommonOpts sd_common;
  std::vector<double> sd_kernel{0.25, 0.5, 0.25};
  auto* sdata = app.add_subcommand("smooth-data", "Circular convolution filter on the samples");
  add_common(sdata, sd_common);
  sdata->add_option("--kernel", sd_kernel, "Odd-length filter weights summing to 1")
      ->delimiter(',');

  // ---- eval ----
  CommonOpts ev_common;
  std::string ev_spline;
  int ev_points = 0;
  int ev_derivative = 0;
  std::vector<double> ev_at;
  auto* ev = app.add_subcommand("eval", "Evaluate a spline saved as JSON");
  add_common(ev, ev_common);
  ev->add_option("--spline", ev_spline, "Spline JSON path, '-' for stdin")->required();
  ev->add_option("--eval-points", ev_points, "Dense evaluation grid size");
  ev->add_option("--at", ev_at, "Explicit evaluation points (repeatable)");
  ev->add_option("--derivative", ev_derivative, "Derivative order (default 0)");

  // ---- factors ----
  CommonOpts fa_common;
  ParamOpts fa_params;
  bool fa_tau = false, fa_fejer = false, fa_interp = false;
  double fa_lambda = 0.1, fa_alpha = 1.0;
  int fa_p = 1, fa_kmax = 50, fa_n = 100, fa_npoints = 5;
  auto* fa = app.add_subcommand("factors", "Multiplier and interpolation-factor tables");
  add_common(fa, fa_common);
  fa->add_flag("--tau", fa_tau, "Regularization multipliers tau_k(lambda, p)");
  fa->add_flag("--fejer", fa_fejer, "Modified Fejer multipliers lambda_k(alpha, n)");
  fa->add_flag("--interp", fa_interp, "Interpolation factors hc_k, hs_k");
  fa->add_option("--lambda", fa_lambda, "tau: lambda")->capture_default_str();
  fa->add_option("--p", fa_p, "tau: order p")->capture_default_str();
  fa->add_option("--kmax", fa_kmax, "tau: table size")->capture_default_str();
  fa->add_option("--alpha", fa_alpha, "fejer: exponent alpha")->capture_default_str();
  fa->add_option("--n", fa_n, "fejer: harmonic count n")->capture_default_str();
  fa->add_option("--N", fa_npoints, "interp: grid size")->capture_default_str();
  add_params(fa, fa_params);

  // ---- verify ----
  std::string ve_level = "quick";
  double ve_tolerance = 1e-12;
  auto* ve = app.add_subcommand("verify", "Run the self-verification suite");
  ve->add_option("--level", ve_level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  ve->add_option("--tolerance", ve_tolerance, "Series tolerance used by the checks")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  // ---- dispatch ----
  if (coeffs->parsed()) {
    SamplesPtr samples;
    if (int rc = load_input_samples(coeffs_common.input, samples)) return rc;
    ts_spectrum* raw = nullptr;
    if (ts_status st = ts_spectrum_from_samples(samples.get(), &raw)) return report(st);
    SpectrumPtr spec(raw);
    if (coeffs_common.format == "json") {
      char* json = nullptr;
      if (ts_status st = ts_spectrum_to_json(spec.get(), &json)) return report(st);
      std::string text(json);
      ts_string_free(json);
      return write_output(coeffs_common.output, text + "\n");
    }
    const int n = ts_spectrum_harmonics(spec.get());
    double a0 = 0.0;
    std::vector<double> a(static_cast<size_t>(n)), b(static_cast<size_t>(n));
    ts_spectrum_get(spec.get(), &a0, a.data(), b.data());
    std::ostringstream os;
    os << "# N=" << ts_samples_size(samples.get()) << " variant="
       << ts_samples_variant(samples.get()) << " a0=" << fmt(a0) << "\n"
       << "k,a,b\n";
    for (int k = 1; k <= n; ++k)
      os << k << "," << fmt(a[static_cast<size_t>(k - 1)]) << ","
         << fmt(b[static_cast<size_t>(k - 1)]) << "\n";
    return write_output(coeffs_common.output, os.str());
  }

  auto run_spline_cmd = [&](const SplineCmd& sc, const char* kind) -> int {
    if (sc.params.gamma.size() != 3 || sc.params.eta.size() != 3) {
      std::cerr << "trigsp: usage: --gamma and --eta need exactly three values\n";
      return 2;
    }
    if (sc.eval_points < 1) {
      std::cerr << "trigsp: usage: --eval-points must be positive\n";
      return 2;
    }
    SamplesPtr samples;
    if (int rc = load_input_samples(sc.common.input, samples)) return rc;
    const ts_spline_params cp = to_c_params(sc.params, ts_samples_variant(samples.get()));
    ts_spline* raw = nullptr;
    if (ts_status st = ts_spline_build(samples.get(), &cp, &raw)) return report(st);
    SplinePtr spline(raw);

    if (std::string(kind) == "approximate") {
      ts_spline* mod = nullptr;
      if (ts_status st = ts_spline_truncate(spline.get(), approx_m, &mod)) return report(st);
      spline.reset(mod);
    } else if (std::string(kind) == "regularize") {
      if (sc.params.r > 3)
        std::cerr << "trigsp: warning: regularization further steepens the coefficient decay; "
                     "with r = "
                  << sc.params.r << " the differential properties change noticeably\n";
      ts_spline* mod = nullptr;
      if (ts_status st = ts_spline_regularize(spline.get(), reg_lambda, reg_p, &mod))
        return report(st);
      spline.reset(mod);
    } else if (std::string(kind) == "smooth") {
      ts_spline* mod = nullptr;
      if (ts_status st = ts_spline_smooth(spline.get(), smooth_alpha, &mod)) return report(st);
      spline.reset(mod);
    }

    std::ostringstream header;
    header << "# trigsp " << kind;
    if (std::string(kind) == "approximate") header << " m=" << approx_m;
    if (std::string(kind) == "regularize")
      header << " lambda=" << fmt(reg_lambda) << " p=" << reg_p;
    if (std::string(kind) == "smooth") header << " alpha=" << fmt(smooth_alpha);
    header << " eval_points=" << sc.eval_points << "\n"
           << param_header(cp, ts_samples_size(samples.get()), ts_samples_variant(samples.get()));
    return emit_spline_table(spline, sc.common, header.str(), sc.eval_points, sc.spline_out);
  };

  if (interp->cmd->parsed()) return run_spline_cmd(*interp, "interpolate");
  if (approx->cmd->parsed()) return run_spline_cmd(*approx, "approximate");
  if (regul->cmd->parsed()) return run_spline_cmd(*regul, "regularize");
  if (smooth->cmd->parsed()) return run_spline_cmd(*smooth, "smooth");

  if (sdata->parsed()) {
    SamplesPtr samples;
    if (int rc = load_input_samples(sd_common.input, samples)) return rc;
    ts_samples* raw = nullptr;
    if (ts_status st = ts_samples_smooth(samples.get(), sd_kernel.data(),
                                         static_cast<int>(sd_kernel.size()), &raw))
      return report(st);
    SamplesPtr smoothed(raw);
    char* text = nullptr;
    if (ts_status st = ts_samples_to_string(
            smoothed.get(), sd_common.format == "json" ? TS_FORMAT_JSON : TS_FORMAT_CSV, &text))
      return report(st);
    std::string out(text);
    ts_string_free(text);
    return write_output(sd_common.output, out);
  }

  if (ev->parsed()) {
    std::string data;
    if (int rc = read_input(ev_spline, data)) return rc;
    ts_spline* raw = nullptr;
    if (ts_status st = ts_spline_from_json(data.c_str(), data.size(), &raw)) return report(st);
    SplinePtr spline(raw);
    std::vector<double> xs = ev_at;
    if (ev_points > 0) {
      for (int i = 0; i < ev_points; ++i)
        xs.push_back((2.0 * 3.14159265358979323846 * i) / ev_points);
    }
    if (xs.empty()) {
      std::cerr << "trigsp: usage: eval needs --eval-points or --at\n";
      return 2;
    }
    std::ostringstream os;
    os << "# trigsp eval derivative=" << ev_derivative << "\n"
       << "x,value\n";
    for (double x : xs) {
      double v = 0.0;
      ts_status st = ev_derivative == 0 ? ts_spline_eval(spline.get(), x, &v)
                                        : ts_spline_derivative(spline.get(), ev_derivative, x, &v);
      if (st) return report(st);
      os << fmt(x) << "," << fmt(v) << "\n";
    }
    return write_output(ev_common.output, os.str());
  }

  if (fa->parsed()) {
    if (static_cast<int>(fa_tau) + static_cast<int>(fa_fejer) + static_cast<int>(fa_interp) != 1) {
      std::cerr << "trigsp: usage: factors needs exactly one of --tau, --fejer, --interp\n";
      return 2;
    }
    std::ostringstream os;
    if (fa_tau) {
      os << "# trigsp factors kind=tau lambda=" << fmt(fa_lambda) << " p=" << fa_p
         << " kmax=" << fa_kmax << "\n"
         << "k,tau\n";
      for (int k = 0; k <= fa_kmax; ++k) {
        double v = 0.0;
        if (ts_status st = ts_tau(k, fa_lambda, fa_p, &v)) return report(st);
        os << k << "," << fmt(v) << "\n";
      }
    } else if (fa_fejer) {
      os << "# trigsp factors kind=fejer alpha=" << fmt(fa_alpha) << " n=" << fa_n << "\n"
         << "k,lambda\n";
      for (int k = 0; k <= fa_n; ++k) {
        double v = 0.0;
        if (ts_status st = ts_modified_fejer(k, fa_alpha, fa_n, &v)) return report(st);
        os << k << "," << fmt(v) << "\n";
      }
    } else {
      ts_spline_params cp = to_c_params(fa_params, 0);
      cp.n_points = fa_npoints;
      if (cp.i2 < 0) cp.i2 = 0;
      const int n = (fa_npoints - 1) / 2;
      std::vector<double> hc(static_cast<size_t>(n)), hs(static_cast<size_t>(n));
      if (ts_status st = ts_interp_factors(&cp, hc.data(), hs.data())) return report(st);
      os << "# trigsp factors kind=interp"
         << param_header(cp, fa_npoints, cp.i2).substr(1) << "k,hc,hs\n";
      for (int k = 1; k <= n; ++k)
        os << k << "," << fmt(hc[static_cast<size_t>(k - 1)]) << ","
           << fmt(hs[static_cast<size_t>(k - 1)]) << "\n";
    }
    return write_output(fa_common.output, os.str());
  }

  if (ve->parsed()) {
    const auto cb = [](const char* name, int passed, const char* detail, void*) -> int {
      std::printf("%s %s: %s\n", passed ? "PASS" : "FAIL", name, detail);
      return 0;
    };
    int failures = 0;
    if (ts_status st =
            ts_verify(ve_level == "full" ? 1 : 0, ve_tolerance, cb, nullptr, &failures))
      return report(st);
    if (failures > 0) {
      std::printf("%d check(s) failed\n", failures);
      return 1;
    }
    std::printf("all checks passed\n");
    return 0;
  }

  return 2;
}
