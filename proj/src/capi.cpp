#include "trigspline.h"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <sstream>
#include <string>

#include "trigspline/io.hpp"
#include "trigspline/kernels.hpp"
#include "trigspline/oracle.hpp"
#include "trigspline/regularization.hpp"
#include "trigspline/smoothing.hpp"
#include "trigspline/spline.hpp"
#include "trigspline/verify.hpp"

using namespace trigspline;

struct ts_samples {
  SampleSet impl;
};
struct ts_spectrum {
  DiscreteSpectrum impl;
};
struct ts_spline {
  TrigSpline impl;
};

namespace {

thread_local std::string g_last_error;

ts_status status_of(errc code) {
  switch (code) {
    case errc::invalid_argument: return TS_ERR_INVALID_ARGUMENT;
    case errc::invalid_grid: return TS_ERR_INVALID_GRID;
    case errc::parse_error: return TS_ERR_PARSE;
    case errc::sampling_error: return TS_ERR_SAMPLING;
    case errc::order_out_of_range: return TS_ERR_ORDER_RANGE;
    case errc::incompatible: return TS_ERR_INCOMPATIBLE;
    case errc::convergence_failure: return TS_ERR_CONVERGENCE;
    case errc::degenerate_factor: return TS_ERR_DEGENERATE_FACTOR;
    case errc::nonconvergent_derivative: return TS_ERR_NONCONVERGENT_DERIVATIVE;
    case errc::invalid_state: return TS_ERR_INVALID_STATE;
    case errc::invalid_filter: return TS_ERR_INVALID_FILTER;
    case errc::quadrature_error: return TS_ERR_QUADRATURE;
    case errc::io_error: return TS_ERR_IO;
  }
  return TS_ERR_UNKNOWN;
}

template <typename Fn>
ts_status wrap(Fn&& fn) {
  try {
    fn();
    return TS_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TS_ERR_UNKNOWN;
  } catch (...) {
    g_last_error = "unknown error";
    return TS_ERR_UNKNOWN;
  }
}

ts_status require(bool ok, const char* message) {
  if (ok) return TS_OK;
  g_last_error = message;
  return TS_ERR_INVALID_ARGUMENT;
}

SampleFormat to_format(ts_format f) {
  switch (f) {
    case TS_FORMAT_CSV: return SampleFormat::csv;
    case TS_FORMAT_JSON: return SampleFormat::json;
    default: return SampleFormat::autodetect;
  }
}

SplineParams to_params(const ts_spline_params* p, int n_from_samples) {
  SplineParams out;
  std::copy(p->gamma, p->gamma + 3, out.gamma.begin());
  std::copy(p->eta, p->eta + 3, out.eta.begin());
  out.r = p->r;
  out.I1 = p->i1;
  out.I2 = p->i2;
  out.N = p->n_points > 0 ? p->n_points : n_from_samples;
  if (p->tolerance > 0.0) out.series.tolerance = p->tolerance;
  if (p->max_terms > 0) out.series.max_terms = p->max_terms;
  return out;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

void ts_spline_params_init(ts_spline_params* params) {
  if (!params) return;
  for (int i = 0; i < 3; ++i) {
    params->gamma[i] = 1.0;
    params->eta[i] = 1.0;
  }
  params->r = 1;
  params->i1 = 0;
  params->i2 = 0;
  params->n_points = 0;
  params->tolerance = 0.0;  // default 1e-12
  params->max_terms = 0;    // default 1e6
}

const char* ts_last_error(void) { return g_last_error.c_str(); }

const char* ts_status_name(ts_status status) {
  switch (status) {
    case TS_OK: return "ok";
    case TS_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case TS_ERR_INVALID_GRID: return "invalid-grid";
    case TS_ERR_PARSE: return "parse-error";
    case TS_ERR_SAMPLING: return "sampling-error";
    case TS_ERR_ORDER_RANGE: return "order-out-of-range";
    case TS_ERR_INCOMPATIBLE: return "incompatible";
    case TS_ERR_CONVERGENCE: return "convergence-failure";
    case TS_ERR_DEGENERATE_FACTOR: return "degenerate-factor";
    case TS_ERR_NONCONVERGENT_DERIVATIVE: return "nonconvergent-derivative";
    case TS_ERR_INVALID_STATE: return "invalid-state";
    case TS_ERR_INVALID_FILTER: return "invalid-filter";
    case TS_ERR_QUADRATURE: return "quadrature-error";
    case TS_ERR_IO: return "io-error";
    default: return "unknown";
  }
}

const char* ts_version(void) { return "1.0.0"; }

void ts_string_free(char* s) { std::free(s); }

/* ---- samples ---------------------------------------------------------- */

ts_status ts_samples_create(int n_points, int variant, const double* values, ts_samples** out) {
  if (ts_status st = require(values && out, "values and out must be non-null")) return st;
  return wrap([&] {
    std::vector<double> v(values, values + (n_points > 0 ? n_points : 0));
    *out = new ts_samples{SampleSet(build_grid(n_points, variant), std::move(v))};
  });
}

ts_status ts_samples_load(const char* path, ts_format format, ts_samples** out) {
  if (ts_status st = require(path && out, "path and out must be non-null")) return st;
  return wrap([&] { *out = new ts_samples{load_samples_file(path, to_format(format))}; });
}

ts_status ts_samples_parse(const char* data, size_t len, ts_format format, ts_samples** out) {
  if (ts_status st = require(data && out, "data and out must be non-null")) return st;
  return wrap([&] {
    std::istringstream in(std::string(data, len));
    *out = new ts_samples{load_samples(in, to_format(format))};
  });
}

ts_status ts_samples_save(const ts_samples* s, const char* path, ts_format format) {
  if (ts_status st = require(s && path, "samples and path must be non-null")) return st;
  return wrap([&] {
    save_samples_file(path, s->impl,
                      format == TS_FORMAT_JSON ? SampleFormat::json : SampleFormat::csv);
  });
}

ts_status ts_samples_to_string(const ts_samples* s, ts_format format, char** out) {
  if (ts_status st = require(s && out, "samples and out must be non-null")) return st;
  return wrap([&] {
    std::ostringstream os;
    save_samples(os, s->impl, format == TS_FORMAT_JSON ? SampleFormat::json : SampleFormat::csv);
    *out = dup_string(os.str());
  });
}

int ts_samples_size(const ts_samples* s) { return s ? s->impl.grid.size() : 0; }

int ts_samples_variant(const ts_samples* s) { return s ? s->impl.grid.variant() : -1; }

ts_status ts_samples_values(const ts_samples* s, double* out) {
  if (ts_status st = require(s && out, "samples and out must be non-null")) return st;
  std::memcpy(out, s->impl.values.data(), s->impl.values.size() * sizeof(double));
  return TS_OK;
}

ts_status ts_samples_nodes(const ts_samples* s, double* out) {
  if (ts_status st = require(s && out, "samples and out must be non-null")) return st;
  std::memcpy(out, s->impl.grid.nodes().data(), s->impl.grid.nodes().size() * sizeof(double));
  return TS_OK;
}

ts_status ts_samples_smooth(const ts_samples* s, const double* weights, int len, ts_samples** out) {
  if (ts_status st = require(s && weights && out, "samples, weights and out must be non-null")) return st;
  return wrap([&] {
    FilterKernel kernel(std::vector<double>(weights, weights + (len > 0 ? len : 0)));
    *out = new ts_samples{smooth_data(s->impl, kernel)};
  });
}

void ts_samples_free(ts_samples* s) { delete s; }

/* ---- discrete spectra -------------------------------------------------- */

ts_status ts_spectrum_from_samples(const ts_samples* s, ts_spectrum** out) {
  if (ts_status st = require(s && out, "samples and out must be non-null")) return st;
  return wrap([&] { *out = new ts_spectrum{bessel_coefficients(s->impl)}; });
}

int ts_spectrum_harmonics(const ts_spectrum* spec) { return spec ? spec->impl.harmonics() : 0; }

ts_status ts_spectrum_get(const ts_spectrum* spec, double* a0, double* a, double* b) {
  if (ts_status st = require(spec != nullptr, "spectrum must be non-null")) return st;
  if (a0) *a0 = spec->impl.a0;
  if (a) std::memcpy(a, spec->impl.a.data(), spec->impl.a.size() * sizeof(double));
  if (b) std::memcpy(b, spec->impl.b.data(), spec->impl.b.size() * sizeof(double));
  return TS_OK;
}

ts_status ts_spectrum_eval(const ts_spectrum* spec, int m, double x, double* out) {
  if (ts_status st = require(spec && out, "spectrum and out must be non-null")) return st;
  return wrap([&] { *out = eval_trig_polynomial(spec->impl, m, x); });
}

ts_status ts_spectrum_truncate(const ts_spectrum* spec, int m, ts_spectrum** out) {
  if (ts_status st = require(spec && out, "spectrum and out must be non-null")) return st;
  return wrap([&] { *out = new ts_spectrum{truncate_spectrum(spec->impl, m)}; });
}

ts_status ts_spectrum_residual(const ts_spectrum* spec, int m, const ts_samples* s, double* out) {
  if (ts_status st = require(spec && s && out, "spectrum, samples and out must be non-null")) return st;
  return wrap([&] { *out = residual_discrete(spec->impl, m, s->impl); });
}

ts_status ts_spectrum_to_json(const ts_spectrum* spec, char** out) {
  if (ts_status st = require(spec && out, "spectrum and out must be non-null")) return st;
  return wrap([&] { *out = dup_string(spectrum_to_json(spec->impl)); });
}

void ts_spectrum_free(ts_spectrum* spec) { delete spec; }

/* ---- splines ----------------------------------------------------------- */

ts_status ts_spline_build(const ts_samples* s, const ts_spline_params* params, ts_spline** out) {
  if (ts_status st = require(s && params && out, "samples, params and out must be non-null")) return st;
  return wrap([&] {
    *out = new ts_spline{build_spline(s->impl, to_params(params, s->impl.grid.size()))};
  });
}

ts_status ts_spline_eval(const ts_spline* sp, double x, double* out) {
  if (ts_status st = require(sp && out, "spline and out must be non-null")) return st;
  return wrap([&] { *out = eval_spline(sp->impl, x); });
}

ts_status ts_spline_eval_many(const ts_spline* sp, const double* xs, int count, double* out) {
  if (ts_status st = require(sp && xs && out, "spline, xs and out must be non-null")) return st;
  return wrap([&] {
    for (int i = 0; i < count; ++i) out[i] = eval_spline(sp->impl, xs[i]);
  });
}

ts_status ts_spline_derivative(const ts_spline* sp, int d, double x, double* out) {
  if (ts_status st = require(sp && out, "spline and out must be non-null")) return st;
  return wrap([&] { *out = spline_derivative(sp->impl, d, x); });
}

ts_status ts_spline_truncate(const ts_spline* sp, int m, ts_spline** out) {
  if (ts_status st = require(sp && out, "spline and out must be non-null")) return st;
  return wrap([&] { *out = new ts_spline{approximate_spline(sp->impl, m)}; });
}

ts_status ts_spline_regularize(const ts_spline* sp, double lambda, int p, ts_spline** out) {
  if (ts_status st = require(sp && out, "spline and out must be non-null")) return st;
  return wrap([&] { *out = new ts_spline{regularize_spline(sp->impl, RegParams{lambda, p})}; });
}

ts_status ts_spline_smooth(const ts_spline* sp, double alpha, ts_spline** out) {
  if (ts_status st = require(sp && out, "spline and out must be non-null")) return st;
  return wrap([&] {
    *out = new ts_spline{smooth_spline(sp->impl, MultiplierFamily{alpha, sp->impl.harmonics()})};
  });
}

int ts_spline_harmonics(const ts_spline* sp) { return sp ? sp->impl.harmonics() : 0; }

ts_status ts_spline_coefficients(const ts_spline* sp, double* a0, double* a, double* b) {
  if (ts_status st = require(sp != nullptr, "spline must be non-null")) return st;
  const DiscreteSpectrum& spec = sp->impl.spectrum();
  if (a0) *a0 = spec.a0;
  if (a) std::memcpy(a, spec.a.data(), spec.a.size() * sizeof(double));
  if (b) std::memcpy(b, spec.b.data(), spec.b.size() * sizeof(double));
  return TS_OK;
}

ts_status ts_spline_factors(const ts_spline* sp, double* hc, double* hs) {
  if (ts_status st = require(sp != nullptr, "spline must be non-null")) return st;
  if (hc) std::memcpy(hc, sp->impl.cos_factors().data(), sp->impl.cos_factors().size() * sizeof(double));
  if (hs) std::memcpy(hs, sp->impl.sin_factors().data(), sp->impl.sin_factors().size() * sizeof(double));
  return TS_OK;
}

ts_status ts_spline_to_json(const ts_spline* sp, char** out) {
  if (ts_status st = require(sp && out, "spline and out must be non-null")) return st;
  return wrap([&] { *out = dup_string(spline_to_json(sp->impl)); });
}

ts_status ts_spline_from_json(const char* data, size_t len, ts_spline** out) {
  if (ts_status st = require(data && out, "data and out must be non-null")) return st;
  return wrap([&] { *out = new ts_spline{spline_from_json(std::string(data, len))}; });
}

void ts_spline_free(ts_spline* sp) { delete sp; }

/* ---- scalar tables ------------------------------------------------------ */

ts_status ts_tau(int k, double lambda, int p, double* out) {
  if (ts_status st = require(out != nullptr, "out must be non-null")) return st;
  return wrap([&] { *out = tau(k, RegParams{lambda, p}); });
}

ts_status ts_modified_fejer(int k, double alpha, int n, double* out) {
  if (ts_status st = require(out != nullptr, "out must be non-null")) return st;
  return wrap([&] { *out = modified_fejer(k, alpha, n); });
}

ts_status ts_convergence_factor(long k, int r, double* out) {
  if (ts_status st = require(out != nullptr, "out must be non-null")) return st;
  return wrap([&] { *out = convergence_factor(k, r); });
}

ts_status ts_interp_factors(const ts_spline_params* params, double* hc, double* hs) {
  if (ts_status st = require(params && hc && hs, "params, hc and hs must be non-null")) return st;
  return wrap([&] {
    const SplineParams p = to_params(params, 0);
    p.validate();
    for (int k = 1; k <= p.n(); ++k) {
      hc[k - 1] = interp_factor_cos(k, p, p.series);
      hs[k - 1] = interp_factor_sin(k, p, p.series);
    }
  });
}

/* ---- verification ------------------------------------------------------- */

ts_status ts_verify(int level, double series_tolerance, ts_verify_cb cb, void* user_data,
                    int* failures) {
  return wrap([&] {
    SeriesConfig series;
    if (series_tolerance > 0.0) series.tolerance = series_tolerance;
    bool aborted = false;
    const auto on_result = [&](const verify::CheckResult& r) {
      if (!aborted && cb && cb(r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str(), user_data) != 0)
        aborted = true;
    };
    const auto results =
        verify::run(level == 0 ? verify::Level::quick : verify::Level::full, series, on_result);
    int failed = 0;
    for (const auto& r : results)
      if (!r.passed) ++failed;
    if (failures) *failures = failed;
  });
}

}  // extern "C"
