#pragma once

#include "tfa/grid.hpp"
#include "tfa/tf_matrix.hpp"
#include "tfa/wigner.hpp"

namespace tfa {

// literal O(n^2)+ summations with no FFT anywhere; guarded to n <= 256.
std::vector<cd> oracle_direct_dft(const std::vector<cd>& f, double t0, double dt);
TimeFrequencyMatrix oracle_direct_wigner(const Signal& f, Boundary mode = Boundary::zero);
TimeFrequencyMatrix oracle_direct_stft(const Signal& f, const Window& w, int freq_oversample = 1);

// closed-form Wigner of exp(-pi a t^2 + 2 pi b t + c):
//   sqrt(2/Re a) e^{2 Re c} exp(-2 pi (Re a t^2 - 2 Re b t))
//   exp(-(2 pi / Re a)(xi + Im a t - Im b)^2)
// constant fixed so the double integral equals ||f||^2.
TimeFrequencyMatrix oracle_gaussian_wigner(const GaussianParams& p,
                                           const std::vector<double>& time_axis,
                                           const std::vector<double>& freq_axis);

// ridge line xi*(t) = rate * t of the chirp exp(pi i rate t^2)
std::vector<double> oracle_chirp_ridge(double rate, const std::vector<double>& time_axis);

// |V| of the chirp exp(2 pi i eta0 t^2) against the window exp(-2 pi x^2),
// peak-normalized: exp(-2 pi / (1 + eta0^2) * (eta0 x - eta/2)^2).
// only window_a == 2 is supported (that window is baked into the formula).
TimeFrequencyMatrix oracle_chirp_stft_mag(double eta0, double window_a,
                                          const std::vector<double>& x_axis,
                                          const std::vector<double>& eta_axis);

// factorization identity: the 2-D grid dft of W_f .* W_phi equals the product
// V_phi f(-x/2, eta/2) conj(V_phi f(x/2, -eta/2)) at the bin-mapped
// coordinates (2x-oversampled stft, even first-index bins). returns the max
// relative deviation over entries above 1e-9 of peak. requires a symmetric
// grid (t0 == -n dt / 2) so the mapped points land on bins.
double oracle_wigner_window_identity(const Signal& f, double window_a);

}  // namespace tfa
