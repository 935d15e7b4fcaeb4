#pragma once

#include <iosfwd>
#include <string>

#include "trigspline/fourier.hpp"
#include "trigspline/grid.hpp"
#include "trigspline/spline.hpp"

namespace trigspline {

enum class SampleFormat { autodetect, csv, json };

// CSV sample format: first line "N=<int>,variant=<0|1>", then one value per
// line in decimal notation. JSON: {"N": ..., "variant": ..., "values": [...]}.
// Values are written with 17 significant digits, so save/load round-trips
// are bit-exact.
SampleSet load_samples(std::istream& in, SampleFormat format = SampleFormat::autodetect);
SampleSet load_samples_file(const std::string& path, SampleFormat format = SampleFormat::autodetect);
void save_samples(std::ostream& out, const SampleSet& samples, SampleFormat format = SampleFormat::csv);
void save_samples_file(const std::string& path, const SampleSet& samples,
                       SampleFormat format = SampleFormat::csv);

std::string spectrum_to_json(const DiscreteSpectrum& spec);
DiscreteSpectrum spectrum_from_json(const std::string& text);

std::string spline_to_json(const TrigSpline& s);
TrigSpline spline_from_json(const std::string& text);

}  // namespace trigspline
