#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "tfa/generators.hpp"
#include "tfa/oracles.hpp"
#include "tfa/stft.hpp"

using namespace tfa;

TEST_CASE("gaussian window shape and normalization point") {
    const Window w = gaussian_window(2.0, 1.0 / 16);
    CHECK((int)w.samples.size() == 2 * w.half_width + 1);
    CHECK(w.samples[w.half_width] == cd(1.0, 0.0));  // center tap
    // symmetric and decayed below 1e-8 at the edges
    for (int q = 0; q < w.half_width; ++q)
        CHECK(std::abs(w.samples[q] - w.samples[2 * w.half_width - q]) == 0.0);
    CHECK(std::abs(w.samples.front()) < 1e-8);
}

TEST_CASE("stft dimensions follow the oversampling factor") {
    const Grid g{-4.0, 1.0 / 16, 128};
    const Signal f = gen_bandlimited(g, -2.0, 2.0, 14);
    const Window w = gaussian_window(2.0, g.dt);
    const auto V1 = stft(f, w, 1);
    CHECK(V1.rows() == 128);
    CHECK(V1.cols() == 128);
    const auto V2 = stft(f, w, 2);
    CHECK(V2.cols() == 256);
    CHECK(V2.kind == ValueKind::complex);
}

TEST_CASE("window wider than the record is rejected") {
    const Grid g{-1.0, 1.0 / 16, 32};
    const Window w = gaussian_window(0.05, g.dt);  // very wide
    CHECK(2 * w.half_width + 1 > 32);
    CHECK_THROWS(stft(gen_tone(g, 1.0), w));
}

TEST_CASE("stft of a tone peaks on the tone bin in every interior row") {
    const Grid g{-4.0, 1.0 / 32, 256};
    const double dxi = 1.0 / (g.n * g.dt);
    const Signal f = gen_tone(g, 8 * dxi);
    const Window w = gaussian_window(2.0, g.dt);
    const auto V = stft(f, w);
    for (int k = w.half_width; k < g.n - w.half_width; ++k) {
        int am = 0;
        for (int j = 1; j < V.cols(); ++j)
            if (std::abs(V.at(k, j)) > std::abs(V.at(k, am))) am = j;
        CHECK(am == 128 + 8);
    }
}

TEST_CASE("chirp stft magnitude matches the closed form on the ridge region") {
    const Grid g{-4.0, 1.0 / 64, 512};
    const double eta0 = 1.0;
    const Signal f = gen_chirp(g, ChirpParams{2.0 * eta0});
    const Window w = gaussian_window(2.0, g.dt);
    const auto V = stft(f, w);
    const auto O = oracle_chirp_stft_mag(eta0, 2.0, V.time_axis, V.freq_axis);

    // peak-normalize over interior rows (boundary rows see a clipped window)
    double peak = 0.0;
    for (int k = w.half_width; k < g.n - w.half_width; ++k)
        for (int j = 0; j < V.cols(); ++j) peak = std::max(peak, std::abs(V.at(k, j)));
    double dev = 0.0;
    int npts = 0;
    for (int k = w.half_width; k < g.n - w.half_width; ++k)
        for (int j = 0; j < V.cols(); ++j) {
            const double vn = std::abs(V.at(k, j)) / peak;
            const double o = O.at(k, j).real();
            if (vn < 1e-3) continue;
            dev = std::max(dev, std::abs(vn - o) / o);
            ++npts;
        }
    CHECK(npts > 1000);
    CHECK(dev < 1e-10);
}

TEST_CASE("chirp stft ridge column follows eta = 2 eta0 x") {
    const Grid g{-4.0, 1.0 / 64, 512};
    const double eta0 = 1.0;
    const Signal f = gen_chirp(g, ChirpParams{2.0 * eta0});
    const Window w = gaussian_window(2.0, g.dt);
    const auto V = stft(f, w);
    const double dxi = 1.0 / (g.n * g.dt);
    for (int k = w.half_width; k < g.n - w.half_width; ++k) {
        int am = 0;
        for (int j = 1; j < V.cols(); ++j)
            if (std::abs(V.at(k, j)) > std::abs(V.at(k, am))) am = j;
        const long want = std::lround(2.0 * eta0 * g.time(k) / dxi) + g.n / 2;
        CHECK(std::abs((double)(am - want)) <= 1.0);
    }
}

TEST_CASE("gaussian window validation") {
    CHECK_THROWS(gaussian_window(0.0, 0.1));
    CHECK_THROWS(gaussian_window(-1.0, 0.1));
}
