#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace tfa {

using cd = std::complex<double>;

// uniform sampling grid: t_k = t0 + k*dt, k = 0..n-1. n must be even
// (the wigner oversampling scheme doubles it).
struct Grid {
    double t0 = 0.0;
    double dt = 1.0;
    int n = 0;

    Grid() = default;
    Grid(double t0_, double dt_, int n_) : t0(t0_), dt(dt_), n(n_) { validate(); }

    void validate() const {
        if (!(dt > 0.0) || !std::isfinite(dt) || !std::isfinite(t0))
            throw std::invalid_argument("grid: dt must be finite and > 0");
        if (n < 2 || n % 2 != 0)
            throw std::invalid_argument("grid: n must be even and >= 2");
    }

    double time(int k) const { return t0 + k * dt; }
    double nyquist() const { return 1.0 / (2.0 * dt); }

    bool operator==(const Grid& o) const { return t0 == o.t0 && dt == o.dt && n == o.n; }
    bool operator!=(const Grid& o) const { return !(*this == o); }
};

struct Signal {
    Grid grid;
    std::vector<cd> samples;

    Signal() = default;
    Signal(Grid g, std::vector<cd> s) : grid(g), samples(std::move(s)) { validate(); }

    void validate() const {
        grid.validate();
        if ((int)samples.size() != grid.n)
            throw std::invalid_argument("signal: sample count does not match grid");
        for (const cd& v : samples)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw std::invalid_argument("signal: non-finite sample");
    }
};

// f(t) = exp(-pi a t^2 + 2 pi b t + c), Re a > 0
struct GaussianParams {
    cd a{1.0, 0.0};
    cd b{0.0, 0.0};
    cd c{0.0, 0.0};

    void validate() const {
        if (!(a.real() > 0.0))
            throw std::invalid_argument("gaussian: Re a must be > 0");
    }
};

// f(t) = exp(pi i rate t^2); rate = 2*eta0
struct ChirpParams {
    double rate = 0.0;

    double eta0() const { return rate / 2.0; }
    void validate() const {
        if (!std::isfinite(rate)) throw std::invalid_argument("chirp: rate must be finite");
    }
};

}  // namespace tfa
