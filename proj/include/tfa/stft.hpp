#pragma once

#include "tfa/grid.hpp"
#include "tfa/tf_matrix.hpp"

namespace tfa {

// gaussian window exp(-pi a (q dt)^2), truncated where it falls below ~1e-17
// (half-width ceil(sqrt(39.14 / (pi a)) / dt) samples).
Window gaussian_window(double a, double dt);

// V[k,j] = dt * sum_m f[m] conj(w[m-k]) exp(-2 pi i t_m xi_j), zero extension
// outside the record; freq_oversample refines the bins by zero padding.
// rows = n time points, cols = n * freq_oversample bins spanning the full
// Nyquist range.
TimeFrequencyMatrix stft(const Signal& f, const Window& w, int freq_oversample = 1);

}  // namespace tfa
