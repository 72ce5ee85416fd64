#pragma once

#include "tfa/grid.hpp"
#include "tfa/wigner.hpp"

namespace tfa {

// per-sample instantaneous-frequency estimate (cycles/second). invalid
// entries hold NaN and are excluded from every comparison.
struct IFTrack {
    std::vector<double> time_axis;
    std::vector<double> values;
    std::vector<char> valid;
    double threshold = 1e-6;
    std::string estimator;
};

struct IFComparison {
    double max_abs_err = 0.0;
    double rms_err = 0.0;
    int n_compared = 0;
};

// (u v' - v u') / (2 pi (u^2 + v^2)) with f = u + iv; derivative by spectral
// differentiation (multiply the dft by 2 pi i xi), or by a 2nd-order central
// difference when use_finite_difference is set. valid where
// |f|^2 >= threshold * max |f|^2.
IFTrack if_phase_gradient(const Signal& f, double threshold = 1e-6,
                          bool use_finite_difference = false);

// normalized first frequency moment of the wigner row; valid where the
// denominator >= threshold * max denominator.
IFTrack if_moment(const Signal& f, double threshold = 1e-6, Boundary mode = Boundary::zero);

// the same moment computed from an already-built wigner matrix
IFTrack if_moment_from_matrix(const TimeFrequencyMatrix& W, double threshold = 1e-6);

// errors over the intersection of the valid masks
IFComparison compare_if(const IFTrack& a, const IFTrack& b);

}  // namespace tfa
