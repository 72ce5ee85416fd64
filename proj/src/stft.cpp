#include "tfa/stft.hpp"

#include <cmath>

#include "tfa/dft.hpp"
#include "tfa/fft.hpp"
#include "tfa/threads.hpp"

namespace tfa {

Window gaussian_window(double a, double dt) {
    if (!(a > 0.0)) throw std::invalid_argument("gaussian_window: a must be > 0");
    const int h = (int)std::ceil(std::sqrt(39.14 / (M_PI * a)) / dt);
    Window w;
    w.half_width = h;
    w.kind = "gaussian";
    w.gaussian_a = a;
    w.samples.resize(2 * h + 1);
    for (int q = -h; q <= h; ++q) {
        const double t = q * dt;
        w.samples[q + h] = cd(std::exp(-M_PI * a * t * t), 0.0);
    }
    return w;
}

TimeFrequencyMatrix stft(const Signal& f, const Window& w, int freq_oversample) {
    f.validate();
    w.validate();
    if (freq_oversample < 1) throw std::invalid_argument("stft: freq_oversample must be >= 1");
    const int n = f.grid.n;
    const double dt = f.grid.dt;
    if (2 * w.half_width + 1 > n)
        throw std::invalid_argument("stft: window support exceeds record");
    const int N = n * freq_oversample;

    TimeFrequencyMatrix V;
    V.kind = ValueKind::complex;
    V.time_axis.resize(n);
    for (int k = 0; k < n; ++k) V.time_axis[k] = f.grid.time(k);
    V.freq_axis = freq_axis(N, dt);
    V.values.resize((size_t)n * N);

    const int h = w.half_width;
    parallel_for(n, [&](int k) {
        std::vector<cd> g(N, cd(0.0, 0.0));
        const int lo = std::max(0, k - h);
        const int hi = std::min(n - 1, k + h);
        for (int m = lo; m <= hi; ++m)
            g[m] = f.samples[m] * std::conj(w.samples[m - k + h]);
        const auto row = dft(g, f.grid.t0, dt);
        std::copy(row.begin(), row.end(), V.values.begin() + (size_t)k * N);
    });
    return V;
}

}  // namespace tfa
