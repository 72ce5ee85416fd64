#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "tfa/generators.hpp"
#include "tfa/oracles.hpp"
#include "tfa/stft.hpp"
#include "tfa/wigner.hpp"

using namespace tfa;

TEST_CASE("direct oracles refuse large inputs") {
    const Grid g{-8.0, 1.0 / 32, 512};
    const Signal f = gen_tone(g, 1.0);
    CHECK_THROWS(oracle_direct_dft(f.samples, g.t0, g.dt));
    CHECK_THROWS(oracle_direct_wigner(f));
    CHECK_THROWS(oracle_direct_stft(f, gaussian_window(2.0, g.dt)));
}

TEST_CASE("direct wigner matches the fft path in both boundary modes") {
    const Grid g{-2.0, 0.25, 16};
    const Signal f = gen_bandlimited(g, -1.0, 1.0, 23);
    for (const Boundary mode : {Boundary::zero, Boundary::periodized}) {
        const auto W = wigner(f, mode);
        const auto D = oracle_direct_wigner(f, mode);
        double peak = 0.0, dev = 0.0;
        for (size_t i = 0; i < W.values.size(); ++i) {
            peak = std::max(peak, std::abs(D.values[i]));
            dev = std::max(dev, std::abs(W.values[i] - D.values[i]));
        }
        CHECK(dev < 1e-13 * peak);
    }
}

TEST_CASE("direct stft matches the fft path with oversampling") {
    const Grid g{-8.0, 1.0, 16};
    const Signal f = gen_bandlimited(g, -0.25, 0.25, 31);
    const Window w = gaussian_window(2.0, g.dt);
    for (const int L : {1, 2}) {
        const auto V = stft(f, w, L);
        const auto D = oracle_direct_stft(f, w, L);
        double peak = 0.0, dev = 0.0;
        for (size_t i = 0; i < V.values.size(); ++i) {
            peak = std::max(peak, std::abs(D.values[i]));
            dev = std::max(dev, std::abs(V.values[i] - D.values[i]));
        }
        CHECK(dev < 1e-13 * peak);
    }
}

TEST_CASE("gaussian wigner oracle integrates to the signal energy") {
    const Grid g{-8.0, 1.0 / 16, 256};
    const GaussianParams p{cd(1.0, 0.7), cd(0.3, 0.4), cd(0.1, 0.0)};
    const Signal f = gen_gaussian(g, p);
    const auto W = wigner(f);  // borrow its axes
    const auto O = oracle_gaussian_wigner(p, W.time_axis, W.freq_axis);

    double integral = 0.0;
    for (const cd& v : O.values) integral += v.real();
    integral *= g.dt * W.freq_spacing();
    double energy = 0.0;
    for (const cd& v : f.samples) energy += std::norm(v);
    energy *= g.dt;
    CHECK(integral == doctest::Approx(energy).epsilon(1e-6));
}

TEST_CASE("chirp ridge oracle is the line rate * t") {
    const std::vector<double> tt{-1.0, 0.0, 0.5, 2.0};
    const auto line = oracle_chirp_ridge(3.0, tt);
    for (size_t i = 0; i < tt.size(); ++i) CHECK(line[i] == 3.0 * tt[i]);
}

TEST_CASE("chirp stft oracle only knows the unit-width window") {
    const std::vector<double> ax{0.0, 1.0};
    CHECK_THROWS(oracle_chirp_stft_mag(1.0, 1.0, ax, ax));
    CHECK_NOTHROW(oracle_chirp_stft_mag(1.0, 2.0, ax, ax));
}

TEST_CASE("window identity oracle requires a centered grid") {
    const Grid off{0.0, 1.0 / 16, 128};  // starts at 0: mapped points miss bins
    CHECK_THROWS(oracle_wigner_window_identity(gen_gaussian(off, GaussianParams{1.0}), 2.0));
}

TEST_CASE("window identity deviation is tiny for a centered gaussian") {
    const Grid g{-4.0, 1.0 / 16, 128};
    const double dev = oracle_wigner_window_identity(gen_gaussian(g, GaussianParams{1.0}), 2.0);
    CHECK(dev < 1e-5);
    CHECK(dev > 0.0);
}
