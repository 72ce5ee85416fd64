#pragma once

#include <complex>
#include <vector>

namespace tfa {

// unnormalized FFTs (fftw convention): forward kernel exp(-2 pi i jk/n),
// inverse kernel exp(+2 pi i jk/n). inverse(forward(v)) == n * v.
// thread-safe; plans are cached per (size, direction).
std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& v);
std::vector<std::complex<double>> ifft_unscaled(const std::vector<std::complex<double>>& v);

// inverse with 1/n applied
std::vector<std::complex<double>> ifft(const std::vector<std::complex<double>>& v);

}  // namespace tfa
