#pragma once

#include <string>
#include <vector>

#include "tfa/grid.hpp"

namespace tfa {

enum class ValueKind { real, complex };

// dense time-frequency matrix. rows follow time_axis, columns follow the
// ascending, zero-centered freq_axis. storage is complex; real-kind matrices
// carry zero imaginary parts.
struct TimeFrequencyMatrix {
    std::vector<double> time_axis;
    std::vector<double> freq_axis;
    std::vector<cd> values;  // row-major
    ValueKind kind = ValueKind::complex;

    int rows() const { return (int)time_axis.size(); }
    int cols() const { return (int)freq_axis.size(); }

    cd& at(int r, int c) { return values[(size_t)r * cols() + c]; }
    const cd& at(int r, int c) const { return values[(size_t)r * cols() + c]; }

    double freq_spacing() const {
        if (freq_axis.size() < 2) throw std::runtime_error("matrix: missing freq axis");
        return freq_axis[1] - freq_axis[0];
    }
    double time_spacing() const {
        if (time_axis.size() < 2) throw std::runtime_error("matrix: missing time axis");
        return time_axis[1] - time_axis[0];
    }

    void validate() const {
        if (values.size() != time_axis.size() * freq_axis.size())
            throw std::runtime_error("matrix: shape mismatch");
        for (const cd& v : values)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw std::runtime_error("matrix: non-finite entry");
    }
};

// sampled window on the signal grid spacing, support [-half_width, half_width]
// samples around its center.
struct Window {
    std::vector<cd> samples;  // length 2*half_width + 1
    int half_width = 0;
    std::string kind = "custom";
    double gaussian_a = 0.0;  // set when kind == "gaussian"

    void validate() const {
        if ((int)samples.size() != 2 * half_width + 1)
            throw std::invalid_argument("window: sample count != 2*half_width+1");
        double norm2 = 0.0;
        for (const cd& v : samples) {
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw std::invalid_argument("window: non-finite sample");
            norm2 += std::norm(v);
        }
        if (!(norm2 > 0.0)) throw std::invalid_argument("window: zero window");
    }
};

}  // namespace tfa
