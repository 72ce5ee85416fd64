#pragma once

#include <string>

#include "tfa/cone.hpp"
#include "tfa/grid.hpp"
#include "tfa/instfreq.hpp"
#include "tfa/tf_matrix.hpp"

namespace tfa {

// all writers are atomic (temp file + rename); no partial output on failure.
// doubles are serialized with 17 significant digits so read(write(x)) is
// bit-identical.

// <stem>.csv: header "t,re,im", n rows; <stem>.json: grid metadata
void write_signal(const std::string& stem, const Signal& s);
Signal read_signal(const std::string& stem);

// <stem>.csv: row-major values (complex interleaves re,im pairs);
// <stem>.axes.json: time_axis, freq_axis, value_kind
void write_matrix(const std::string& stem, const TimeFrequencyMatrix& m);
TimeFrequencyMatrix read_matrix(const std::string& stem);

// <stem>.csv: "t,if_value,valid"; <stem>.json: threshold + estimator tag
void write_track(const std::string& stem, const IFTrack& t);

void write_cone_report(const std::string& path, const ConeDecayReport& r);

// temp file + rename in the destination directory
void atomic_write(const std::string& path, const std::string& content);

std::string format_double(double v);  // %.17g

}  // namespace tfa
