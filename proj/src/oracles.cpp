#include "tfa/oracles.hpp"

#include <cmath>

#include "tfa/dft.hpp"
#include "tfa/generators.hpp"
#include "tfa/stft.hpp"

namespace tfa {

static void size_guard(int n) {
    if (n > 256) throw std::invalid_argument("direct oracle: n > 256 guard tripped");
}

static cd cis(double ph) { return cd(std::cos(ph), std::sin(ph)); }

std::vector<cd> oracle_direct_dft(const std::vector<cd>& f, double t0, double dt) {
    const int n = (int)f.size();
    size_guard(n);
    const auto xi = freq_axis(n, dt);
    std::vector<cd> F(n);
    for (int j = 0; j < n; ++j) {
        cd acc(0.0, 0.0);
        for (int k = 0; k < n; ++k)
            acc += f[k] * cis(-2.0 * M_PI * (t0 + k * dt) * xi[j]);
        F[j] = dt * acc;
    }
    return F;
}

// trigonometric 2x interpolation as a literal double sum
static std::vector<cd> direct_upsample2(const std::vector<cd>& f) {
    const int n = (int)f.size();
    std::vector<cd> F(n, cd(0.0, 0.0));  // bare DFT, bins s = -n/2 .. n/2-1 stored mod n
    for (int s = 0; s < n; ++s)
        for (int k = 0; k < n; ++k) F[s] += f[k] * cis(-2.0 * M_PI * s * k / n);
    std::vector<cd> f2(2 * n, cd(0.0, 0.0));
    for (int p = 0; p < 2 * n; ++p) {
        cd acc(0.0, 0.0);
        for (int s = -n / 2; s < n / 2; ++s)
            acc += F[(s % n + n) % n] * cis(2.0 * M_PI * s * p / (2.0 * n));
        f2[p] = acc / (double)n;
    }
    return f2;
}

TimeFrequencyMatrix oracle_direct_wigner(const Signal& f, Boundary mode) {
    f.validate();
    const int n = f.grid.n;
    size_guard(n);
    const double dt = f.grid.dt;
    const auto f2 = direct_upsample2(f.samples);

    TimeFrequencyMatrix W;
    W.kind = ValueKind::real;
    W.time_axis.resize(n);
    for (int k = 0; k < n; ++k) W.time_axis[k] = f.grid.time(k);
    W.freq_axis = wigner_freq_axis(n, dt);
    W.values.assign((size_t)n * 2 * n, cd(0.0, 0.0));

    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < 2 * n; ++j) {
            cd acc(0.0, 0.0);
            for (int m = -n; m < n; ++m) {
                const int ip = 2 * k + m, im = 2 * k - m;
                cd r(0.0, 0.0);
                if (mode == Boundary::periodized)
                    r = f2[(ip % (2 * n) + 2 * n) % (2 * n)] *
                        std::conj(f2[(im % (2 * n) + 2 * n) % (2 * n)]);
                else if (ip >= 0 && ip < 2 * n && im >= 0 && im < 2 * n)
                    r = f2[ip] * std::conj(f2[im]);
                acc += r * cis(-2.0 * M_PI * (m * dt) * W.freq_axis[j]);
            }
            W.at(k, j) = cd(dt * acc.real(), 0.0);
        }
    }
    return W;
}

TimeFrequencyMatrix oracle_direct_stft(const Signal& f, const Window& w, int freq_oversample) {
    f.validate();
    w.validate();
    const int n = f.grid.n;
    size_guard(n);
    const double dt = f.grid.dt;
    const int N = n * freq_oversample;
    const int h = w.half_width;

    TimeFrequencyMatrix V;
    V.kind = ValueKind::complex;
    V.time_axis.resize(n);
    for (int k = 0; k < n; ++k) V.time_axis[k] = f.grid.time(k);
    V.freq_axis = freq_axis(N, dt);
    V.values.assign((size_t)n * N, cd(0.0, 0.0));

    for (int k = 0; k < n; ++k) {
        const int lo = std::max(0, k - h), hi = std::min(n - 1, k + h);
        for (int j = 0; j < N; ++j) {
            cd acc(0.0, 0.0);
            for (int m = lo; m <= hi; ++m)
                acc += f.samples[m] * std::conj(w.samples[m - k + h]) *
                       cis(-2.0 * M_PI * f.grid.time(m) * V.freq_axis[j]);
            V.at(k, j) = dt * acc;
        }
    }
    return V;
}

TimeFrequencyMatrix oracle_gaussian_wigner(const GaussianParams& p,
                                           const std::vector<double>& time_axis,
                                           const std::vector<double>& freq_axis_) {
    p.validate();
    const double al = p.a.real(), be = p.a.imag();
    const double br = p.b.real(), bi = p.b.imag();
    const double C = std::sqrt(2.0 / al) * std::exp(2.0 * p.c.real());

    TimeFrequencyMatrix W;
    W.kind = ValueKind::real;
    W.time_axis = time_axis;
    W.freq_axis = freq_axis_;
    W.values.resize(time_axis.size() * freq_axis_.size());
    for (size_t k = 0; k < time_axis.size(); ++k) {
        const double t = time_axis[k];
        const double envelope = C * std::exp(-2.0 * M_PI * (al * t * t - 2.0 * br * t));
        for (size_t j = 0; j < freq_axis_.size(); ++j) {
            const double u = freq_axis_[j] + be * t - bi;
            W.values[k * freq_axis_.size() + j] =
                cd(envelope * std::exp(-(2.0 * M_PI / al) * u * u), 0.0);
        }
    }
    return W;
}

std::vector<double> oracle_chirp_ridge(double rate, const std::vector<double>& time_axis) {
    std::vector<double> r(time_axis.size());
    for (size_t k = 0; k < r.size(); ++k) r[k] = rate * time_axis[k];
    return r;
}

TimeFrequencyMatrix oracle_chirp_stft_mag(double eta0, double window_a,
                                          const std::vector<double>& x_axis,
                                          const std::vector<double>& eta_axis) {
    if (std::abs(window_a - 2.0) > 1e-12)
        throw std::invalid_argument("oracle_chirp_stft_mag: only window_a == 2 is supported");
    TimeFrequencyMatrix M;
    M.kind = ValueKind::real;
    M.time_axis = x_axis;
    M.freq_axis = eta_axis;
    M.values.resize(x_axis.size() * eta_axis.size());
    const double c = 2.0 * M_PI / (1.0 + eta0 * eta0);
    for (size_t k = 0; k < x_axis.size(); ++k)
        for (size_t j = 0; j < eta_axis.size(); ++j) {
            const double d = eta0 * x_axis[k] - eta_axis[j] / 2.0;
            M.values[k * eta_axis.size() + j] = cd(std::exp(-c * d * d), 0.0);
        }
    return M;
}

double oracle_wigner_window_identity(const Signal& f, double window_a) {
    f.validate();
    const int n = f.grid.n;
    const double dt = f.grid.dt;
    if (std::abs(f.grid.t0 + n * dt / 2.0) > 1e-9 * dt)
        throw std::invalid_argument(
            "oracle_wigner_window_identity: grid must be symmetric (t0 == -n dt / 2)");

    GaussianParams wp;
    wp.a = cd(window_a, 0.0);
    const Signal phi = gen_gaussian(f.grid, wp);

    const auto Wf = wigner(f, Boundary::zero);
    const auto Wp = wigner(phi, Boundary::zero);

    // pointwise product, rows transformed over the frequency axis, columns
    // over the time axis
    const double dxi = 1.0 / (2.0 * n * dt);
    const double xi0 = -1.0 / (2.0 * dt);
    std::vector<std::vector<cd>> A(n);
    for (int k = 0; k < n; ++k) {
        std::vector<cd> row(2 * n);
        for (int j = 0; j < 2 * n; ++j)
            row[j] = cd(Wf.at(k, j).real() * Wp.at(k, j).real(), 0.0);
        A[k] = dft(row, xi0, dxi);
    }
    std::vector<std::vector<cd>> B(n, std::vector<cd>(2 * n));
    for (int p = 0; p < 2 * n; ++p) {
        std::vector<cd> col(n);
        for (int k = 0; k < n; ++k) col[k] = A[k][p];
        col = dft(col, f.grid.t0, dt);
        for (int q = 0; q < n; ++q) B[q][p] = col[q];
    }

    double peak = 0.0;
    for (const auto& row : B)
        for (const cd& v : row) peak = std::max(peak, std::abs(v));

    const auto V = stft(f, gaussian_window(window_a, dt), 2);

    double worst = 0.0;
    for (int qi = 0; qi < n; ++qi) {
        const int q = qi - n / 2;
        const int i1 = q + n, i2 = n - q;
        if (i1 < 0 || i1 >= 2 * n || i2 < 0 || i2 >= 2 * n) continue;
        for (int u = -n / 2 + 1; u < n / 2; ++u) {
            const cd lhs = B[qi][2 * u + n];
            if (std::abs(lhs) <= 1e-9 * peak) continue;
            const cd rhs = V.at(n / 2 - u, i1) * std::conj(V.at(n / 2 + u, i2));
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
        }
    }
    return worst;
}

}  // namespace tfa
