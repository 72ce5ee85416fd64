#pragma once

#include <vector>

#include "tfa/grid.hpp"

namespace tfa {

// centered bin frequencies xi_j = (j - n/2) / (n dt), ascending, j = 0..n-1.
std::vector<double> freq_axis(int n, double dt);

// grid-aware transform: F[j] = dt * sum_k f[k] exp(-2 pi i t_k xi_j)
// over the centered bins. idft is its exact inverse.
std::vector<cd> dft(const std::vector<cd>& f, double t0, double dt);
std::vector<cd> idft(const std::vector<cd>& F, double t0, double dt);

// rotate so bin 0 lands at index n/2 (even n: fftshift == ifftshift^-1 below)
std::vector<cd> fftshift(const std::vector<cd>& v);
std::vector<cd> ifftshift(const std::vector<cd>& v);

}  // namespace tfa
