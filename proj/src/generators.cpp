#include "tfa/generators.hpp"

#include <cmath>
#include <random>

#include "tfa/dft.hpp"

namespace tfa {

Signal gen_tone(const Grid& grid, double xi0, cd amplitude) {
    grid.validate();
    if (amplitude == cd(0.0, 0.0))
        throw std::invalid_argument("gen_tone: zero amplitude is degenerate");
    std::vector<cd> s(grid.n);
    for (int k = 0; k < grid.n; ++k) {
        const double ph = 2.0 * M_PI * xi0 * grid.time(k);
        s[k] = amplitude * cd(std::cos(ph), std::sin(ph));
    }
    return Signal(grid, std::move(s));
}

Signal gen_gaussian(const Grid& grid, const GaussianParams& p) {
    grid.validate();
    p.validate();
    std::vector<cd> s(grid.n);
    for (int k = 0; k < grid.n; ++k) {
        const double t = grid.time(k);
        s[k] = std::exp(-M_PI * p.a * (t * t) + 2.0 * M_PI * p.b * t + p.c);
    }
    return Signal(grid, std::move(s));
}

Signal gen_chirp(const Grid& grid, const ChirpParams& p,
                 const std::optional<GaussianParams>& envelope) {
    grid.validate();
    p.validate();
    if (envelope) envelope->validate();
    std::vector<cd> s(grid.n);
    for (int k = 0; k < grid.n; ++k) {
        const double t = grid.time(k);
        const double ph = M_PI * p.rate * t * t;
        s[k] = cd(std::cos(ph), std::sin(ph));
        if (envelope)
            s[k] *= std::exp(-M_PI * envelope->a * (t * t) + 2.0 * M_PI * envelope->b * t +
                             envelope->c);
    }
    return Signal(grid, std::move(s));
}

Signal gen_bandlimited(const Grid& grid, double xi_lo, double xi_hi, unsigned long long seed) {
    grid.validate();
    const double nyq = grid.nyquist();
    if (!(xi_lo < xi_hi) || xi_lo < -nyq || xi_hi > nyq)
        throw std::invalid_argument("gen_bandlimited: band must satisfy -nyq <= lo < hi <= nyq");
    if (xi_hi - xi_lo > nyq)
        throw std::invalid_argument(
            "gen_bandlimited: band width must be <= half the Nyquist range");

    // mt19937_64 with an explicit 53-bit mapping; uniform_real_distribution is
    // implementation-defined and would break cross-platform determinism.
    std::mt19937_64 rng(seed);
    auto uniform_pm1 = [&rng]() {
        const double u = (double)(rng() >> 11) * 0x1p-53;  // [0,1)
        return 2.0 * u - 1.0;
    };

    const auto xi = freq_axis(grid.n, grid.dt);
    std::vector<cd> F(grid.n, cd(0.0, 0.0));
    int in_band = 0;
    for (int j = 0; j < grid.n; ++j) {
        if (xi[j] >= xi_lo && xi[j] <= xi_hi) {
            const double re = uniform_pm1();
            const double im = uniform_pm1();
            F[j] = cd(re, im);
            ++in_band;
        }
    }
    if (in_band == 0)
        throw std::invalid_argument("gen_bandlimited: band contains no DFT bins");
    return Signal(grid, idft(F, grid.t0, grid.dt));
}

}  // namespace tfa
