#pragma once

#include "tfa/grid.hpp"
#include "tfa/tf_matrix.hpp"

namespace tfa {

// boundary handling for the lag products: zero = finite record, zero outside
// (decaying-signal model); periodized = circular indexing (makes shift /
// modulation covariance and tone tests exact).
enum class Boundary { zero, periodized };

// wigner frequency bins: (j - n) / (2 n dt), j = 0..2n-1
std::vector<double> wigner_freq_axis(int n, double dt);

// 2x band-limited interpolation by spectral zero padding; out[2k] == in[k].
std::vector<cd> upsample2(const std::vector<cd>& f);

// lag autocorrelation row at time index k: r[m] = f2[2k+m] * conj(g2[2k-m]),
// m = -n..n-1, returned in ascending lag order (a signal on the lag grid
// with origin -n*dt and spacing dt).
std::vector<cd> autocorrelation_row(const std::vector<cd>& f2, const std::vector<cd>& g2, int k,
                                    Boundary mode);

// discrete (cross-)Wigner distribution: rows = original n time points,
// cols = 2n frequency bins over the full Nyquist range. each row is the
// grid dft of its autocorrelation row.
TimeFrequencyMatrix cross_wigner(const Signal& f, const Signal& g,
                                 Boundary mode = Boundary::zero);

// auto-Wigner: realness is asserted (max |Im| <= 1e-10 max |Re|), then the
// imaginary residue is dropped.
TimeFrequencyMatrix wigner(const Signal& f, Boundary mode = Boundary::zero);

// row k of W (equals dft(autocorrelation_row k) by construction)
std::vector<cd> slice_time(const TimeFrequencyMatrix& W, int k);

// Riemann marginals / energy; real-kind matrices only
std::vector<double> marginal_freq(const TimeFrequencyMatrix& W);  // over freq -> |f(t)|^2
std::vector<double> marginal_time(const TimeFrequencyMatrix& W);  // over time -> |fhat(xi)|^2
double total_energy(const TimeFrequencyMatrix& W);

// numerator = sum_j xi_j W[k,j] dxi, denominator = sum_j W[k,j] dxi
std::pair<double, double> first_freq_moment(const TimeFrequencyMatrix& W, int k);

// circular shift by whole samples + modulation by whole signal-grid bins
// (1/(n dt)); the wigner matrix of the result is the input's rolled by
// (shift_bins rows, 2*mod_bins columns) in periodized mode.
Signal modulate_translate(const Signal& f, int shift_bins, int mod_bins);

}  // namespace tfa
