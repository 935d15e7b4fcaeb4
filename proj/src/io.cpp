#include "trigspline/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace trigspline {

namespace {

using nlohmann::json;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& token, int line) {
  const char* begin = token.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  while (end && *end == ' ') ++end;
  if (end == begin || (end && *end != '\0'))
    fail(errc::parse_error, "line " + std::to_string(line) + ": not a number: '" + token + "'");
  if (!std::isfinite(v))
    fail(errc::parse_error, "line " + std::to_string(line) + ": value is not finite");
  return v;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

SampleSet load_samples_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail(errc::parse_error, "line 1: empty input");
  int n_points = 0, variant = -1;
  if (std::sscanf(trim(line).c_str(), "N=%d,variant=%d", &n_points, &variant) != 2)
    fail(errc::parse_error, "line 1: expected header 'N=<int>,variant=<0|1>', got '" + trim(line) + "'");
  if (variant != 0 && variant != 1)
    fail(errc::parse_error, "line 1: variant must be 0 or 1, got " + std::to_string(variant));
  if (n_points < 3 || n_points % 2 == 0)
    fail(errc::parse_error, "line 1: N must be odd and >= 3, got " + std::to_string(n_points));

  std::vector<double> values;
  values.reserve(static_cast<size_t>(n_points));
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (static_cast<int>(values.size()) == n_points)
      fail(errc::parse_error,
           "line " + std::to_string(lineno) + ": more than N = " + std::to_string(n_points) + " values");
    values.push_back(parse_double(t, lineno));
  }
  if (static_cast<int>(values.size()) != n_points)
    fail(errc::parse_error, "expected " + std::to_string(n_points) + " values, got " +
                                std::to_string(values.size()));
  return SampleSet(build_grid(n_points, variant), std::move(values));
}

json parse_json(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse_error, std::string(what) + ": malformed JSON");
  return j;
}

int require_int(const json& j, const char* field, const char* what) {
  if (!j.contains(field) || !j[field].is_number_integer())
    fail(errc::parse_error, std::string(what) + ": missing integer field '" + field + "'");
  return j[field].get<int>();
}

std::vector<double> require_array(const json& j, const char* field, const char* what) {
  if (!j.contains(field) || !j[field].is_array())
    fail(errc::parse_error, std::string(what) + ": missing array field '" + field + "'");
  std::vector<double> out;
  out.reserve(j[field].size());
  size_t idx = 0;
  for (const auto& v : j[field]) {
    if (!v.is_number())
      fail(errc::parse_error, std::string(what) + ": " + field + "[" + std::to_string(idx) +
                                  "] is not a number");
    out.push_back(v.get<double>());
    ++idx;
  }
  return out;
}

SampleSet load_samples_json(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  const json j = parse_json(buf.str(), "samples");
  const int n_points = require_int(j, "N", "samples");
  const int variant = require_int(j, "variant", "samples");
  std::vector<double> values = require_array(j, "values", "samples");
  if (variant != 0 && variant != 1) fail(errc::parse_error, "samples: variant must be 0 or 1");
  if (n_points < 3 || n_points % 2 == 0)
    fail(errc::parse_error, "samples: N must be odd and >= 3, got " + std::to_string(n_points));
  if (static_cast<int>(values.size()) != n_points)
    fail(errc::parse_error, "samples: expected " + std::to_string(n_points) + " values, got " +
                                std::to_string(values.size()));
  for (size_t i = 0; i < values.size(); ++i)
    if (!std::isfinite(values[i]))
      fail(errc::parse_error, "samples: values[" + std::to_string(i) + "] is not finite");
  return SampleSet(build_grid(n_points, variant), std::move(values));
}

json spectrum_json(const DiscreteSpectrum& spec) {
  return json{{"a0", spec.a0}, {"a", spec.a}, {"b", spec.b}, {"variant", spec.grid_variant}};
}

DiscreteSpectrum spectrum_from(const json& j, const char* what) {
  DiscreteSpectrum spec;
  if (!j.contains("a0") || !j["a0"].is_number())
    fail(errc::parse_error, std::string(what) + ": missing number field 'a0'");
  spec.a0 = j["a0"].get<double>();
  spec.a = require_array(j, "a", what);
  spec.b = require_array(j, "b", what);
  spec.grid_variant = require_int(j, "variant", what);
  if (spec.a.size() != spec.b.size())
    fail(errc::parse_error, std::string(what) + ": 'a' and 'b' must have equal length");
  if (spec.grid_variant != 0 && spec.grid_variant != 1)
    fail(errc::parse_error, std::string(what) + ": variant must be 0 or 1");
  return spec;
}

constexpr const char* kSplineSchema = "trigspline.spline/1";

}  // namespace

SampleSet load_samples(std::istream& in, SampleFormat format) {
  if (format == SampleFormat::autodetect) {
    int c = in.peek();
    while (c == ' ' || c == '\n' || c == '\r' || c == '\t') {
      in.get();
      c = in.peek();
    }
    format = (c == '{') ? SampleFormat::json : SampleFormat::csv;
  }
  return format == SampleFormat::json ? load_samples_json(in) : load_samples_csv(in);
}

SampleSet load_samples_file(const std::string& path, SampleFormat format) {
  if (path == "-") return load_samples(std::cin, format);
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open '" + path + "' for reading");
  return load_samples(in, format);
}

void save_samples(std::ostream& out, const SampleSet& samples, SampleFormat format) {
  if (format == SampleFormat::json) {
    json j{{"N", samples.grid.size()},
           {"variant", samples.grid.variant()},
           {"values", samples.values}};
    out << j.dump() << "\n";
  } else {
    out << "N=" << samples.grid.size() << ",variant=" << samples.grid.variant() << "\n";
    for (double v : samples.values) out << format_double(v) << "\n";
  }
  if (!out) fail(errc::io_error, "write failed");
}

void save_samples_file(const std::string& path, const SampleSet& samples, SampleFormat format) {
  if (path == "-") {
    save_samples(std::cout, samples, format);
    return;
  }
  std::ofstream out(path);
  if (!out) fail(errc::io_error, "cannot open '" + path + "' for writing");
  save_samples(out, samples, format);
}

std::string spectrum_to_json(const DiscreteSpectrum& spec) { return spectrum_json(spec).dump(); }

DiscreteSpectrum spectrum_from_json(const std::string& text) {
  return spectrum_from(parse_json(text, "spectrum"), "spectrum");
}

std::string spline_to_json(const TrigSpline& s) {
  const SplineParams& p = s.params();
  json j{{"schema", kSplineSchema},
         {"params",
          {{"gamma", p.gamma},
           {"eta", p.eta},
           {"r", p.r},
           {"N", p.N},
           {"I1", p.I1},
           {"I2", p.I2},
           {"tolerance", p.series.tolerance},
           {"max_terms", p.series.max_terms}}},
         {"spectrum", spectrum_json(s.spectrum())}};
  if (s.regularization())
    j["regularization"] = {{"lambda", s.regularization()->lambda}, {"p", s.regularization()->p}};
  if (s.multipliers()) j["multipliers"] = *s.multipliers();
  if (s.truncation()) j["truncation"] = *s.truncation();
  return j.dump();
}

TrigSpline spline_from_json(const std::string& text) {
  const json j = parse_json(text, "spline");
  if (!j.contains("schema") || j["schema"] != kSplineSchema)
    fail(errc::parse_error, "spline: missing or unsupported schema tag");
  if (!j.contains("params") || !j["params"].is_object())
    fail(errc::parse_error, "spline: missing object field 'params'");
  const json& pj = j["params"];

  SplineParams p;
  const std::vector<double> gamma = require_array(pj, "gamma", "spline.params");
  const std::vector<double> eta = require_array(pj, "eta", "spline.params");
  if (gamma.size() != 3 || eta.size() != 3)
    fail(errc::parse_error, "spline.params: gamma and eta must have 3 entries");
  std::copy(gamma.begin(), gamma.end(), p.gamma.begin());
  std::copy(eta.begin(), eta.end(), p.eta.begin());
  p.r = require_int(pj, "r", "spline.params");
  p.N = require_int(pj, "N", "spline.params");
  p.I1 = require_int(pj, "I1", "spline.params");
  p.I2 = require_int(pj, "I2", "spline.params");
  if (pj.contains("tolerance")) {
    if (!pj["tolerance"].is_number())
      fail(errc::parse_error, "spline.params: 'tolerance' must be a number");
    p.series.tolerance = pj["tolerance"].get<double>();
  }
  if (pj.contains("max_terms")) {
    if (!pj["max_terms"].is_number_integer())
      fail(errc::parse_error, "spline.params: 'max_terms' must be an integer");
    p.series.max_terms = pj["max_terms"].get<long>();
  }

  if (!j.contains("spectrum") || !j["spectrum"].is_object())
    fail(errc::parse_error, "spline: missing object field 'spectrum'");
  DiscreteSpectrum spec = spectrum_from(j["spectrum"], "spline.spectrum");

  std::optional<RegParams> reg;
  if (j.contains("regularization")) {
    const json& rj = j["regularization"];
    if (!rj.is_object() || !rj.contains("lambda") || !rj["lambda"].is_number() ||
        !rj.contains("p") || !rj["p"].is_number_integer())
      fail(errc::parse_error, "spline.regularization: needs number 'lambda' and integer 'p'");
    reg = RegParams{rj["lambda"].get<double>(), rj["p"].get<int>()};
  }
  std::optional<std::vector<double>> mult;
  if (j.contains("multipliers")) mult = require_array(j, "multipliers", "spline");
  std::optional<int> trunc;
  if (j.contains("truncation")) trunc = require_int(j, "truncation", "spline");

  return TrigSpline::assemble(p, std::move(spec), reg, std::move(mult), trunc);
}

}  // namespace trigspline
