#include "tfa/wigner.hpp"

#include <cmath>

#include "tfa/dft.hpp"
#include "tfa/fft.hpp"
#include "tfa/threads.hpp"

namespace tfa {

std::vector<double> wigner_freq_axis(int n, double dt) {
    std::vector<double> xi(2 * n);
    for (int j = 0; j < 2 * n; ++j) xi[j] = (double)(j - n) / (2.0 * n * dt);
    return xi;
}

std::vector<cd> upsample2(const std::vector<cd>& f) {
    const int n = (int)f.size();
    const auto F = fft(f);
    std::vector<cd> G(2 * n, cd(0.0, 0.0));
    for (int s = -n / 2; s < n / 2; ++s) {
        const int src = (s % n + n) % n;
        const int dst = (s % (2 * n) + 2 * n) % (2 * n);
        G[dst] = 2.0 * F[src];
    }
    return ifft(G);
}

std::vector<cd> autocorrelation_row(const std::vector<cd>& f2, const std::vector<cd>& g2, int k,
                                    Boundary mode) {
    const int n2 = (int)f2.size();  // == 2n
    const int n = n2 / 2;
    std::vector<cd> r(n2);
    for (int m = -n; m < n; ++m) {
        const int ip = 2 * k + m;
        const int im = 2 * k - m;
        cd v(0.0, 0.0);
        if (mode == Boundary::periodized) {
            v = f2[(ip % n2 + n2) % n2] * std::conj(g2[(im % n2 + n2) % n2]);
        } else if (ip >= 0 && ip < n2 && im >= 0 && im < n2) {
            v = f2[ip] * std::conj(g2[im]);
        }
        r[m + n] = v;
    }
    return r;
}

TimeFrequencyMatrix cross_wigner(const Signal& f, const Signal& g, Boundary mode) {
    f.validate();
    g.validate();
    if (f.grid != g.grid) throw std::invalid_argument("cross_wigner: grid mismatch");
    const int n = f.grid.n;
    const double dt = f.grid.dt;

    const auto f2 = upsample2(f.samples);
    const auto g2 = (&f == &g || f.samples == g.samples) ? f2 : upsample2(g.samples);

    TimeFrequencyMatrix W;
    W.kind = ValueKind::complex;
    W.time_axis.resize(n);
    for (int k = 0; k < n; ++k) W.time_axis[k] = f.grid.time(k);
    W.freq_axis = wigner_freq_axis(n, dt);
    W.values.resize((size_t)n * 2 * n);

    const double lag_origin = -(double)n * dt;
    parallel_for(n, [&](int k) {
        const auto r = autocorrelation_row(f2, g2, k, mode);
        const auto row = dft(r, lag_origin, dt);
        std::copy(row.begin(), row.end(), W.values.begin() + (size_t)k * 2 * n);
    });
    return W;
}

TimeFrequencyMatrix wigner(const Signal& f, Boundary mode) {
    TimeFrequencyMatrix W = cross_wigner(f, f, mode);
    double max_re = 0.0, max_im = 0.0;
    for (const cd& v : W.values) {
        max_re = std::max(max_re, std::abs(v.real()));
        max_im = std::max(max_im, std::abs(v.imag()));
    }
    if (max_re > 0.0 && max_im > 1e-10 * max_re)
        throw std::runtime_error("wigner: realness check failed (aliasing?)");
    for (cd& v : W.values) v = cd(v.real(), 0.0);
    W.kind = ValueKind::real;
    return W;
}

std::vector<cd> slice_time(const TimeFrequencyMatrix& W, int k) {
    if (k < 0 || k >= W.rows()) throw std::out_of_range("slice_time: row index");
    return std::vector<cd>(W.values.begin() + (size_t)k * W.cols(),
                           W.values.begin() + (size_t)(k + 1) * W.cols());
}

static void require_real(const TimeFrequencyMatrix& W, const char* who) {
    if (W.kind != ValueKind::real)
        throw std::invalid_argument(std::string(who) + ": real-valued matrix required");
}

std::vector<double> marginal_freq(const TimeFrequencyMatrix& W) {
    require_real(W, "marginal_freq");
    const double dxi = W.freq_spacing();
    std::vector<double> out(W.rows());
    for (int k = 0; k < W.rows(); ++k) {
        double acc = 0.0;
        for (int j = 0; j < W.cols(); ++j) acc += W.at(k, j).real();
        out[k] = acc * dxi;
    }
    return out;
}

std::vector<double> marginal_time(const TimeFrequencyMatrix& W) {
    require_real(W, "marginal_time");
    const double dt = W.time_spacing();
    std::vector<double> out(W.cols(), 0.0);
    for (int k = 0; k < W.rows(); ++k)
        for (int j = 0; j < W.cols(); ++j) out[j] += W.at(k, j).real();
    for (double& v : out) v *= dt;
    return out;
}

double total_energy(const TimeFrequencyMatrix& W) {
    require_real(W, "total_energy");
    const double w = W.time_spacing() * W.freq_spacing();
    double acc = 0.0;
    for (const cd& v : W.values) acc += v.real();
    return acc * w;
}

std::pair<double, double> first_freq_moment(const TimeFrequencyMatrix& W, int k) {
    require_real(W, "first_freq_moment");
    if (k < 0 || k >= W.rows()) throw std::out_of_range("first_freq_moment: row index");
    const double dxi = W.freq_spacing();
    double num = 0.0, den = 0.0;
    for (int j = 0; j < W.cols(); ++j) {
        const double v = W.at(k, j).real();
        num += W.freq_axis[j] * v;
        den += v;
    }
    return {num * dxi, den * dxi};
}

Signal modulate_translate(const Signal& f, int shift_bins, int mod_bins) {
    f.validate();
    const int n = f.grid.n;
    const double dxi = 1.0 / (n * f.grid.dt);
    std::vector<cd> s(n);
    for (int k = 0; k < n; ++k) {
        const int src = ((k - shift_bins) % n + n) % n;
        const double ph = 2.0 * M_PI * mod_bins * dxi * f.grid.time(k);
        s[k] = f.samples[src] * cd(std::cos(ph), std::sin(ph));
    }
    return Signal(f.grid, std::move(s));
}

}  // namespace tfa
