#include "tfa/dft.hpp"

#include <cmath>

#include "tfa/fft.hpp"

namespace tfa {

std::vector<double> freq_axis(int n, double dt) {
    std::vector<double> xi(n);
    for (int j = 0; j < n; ++j) xi[j] = (double)(j - n / 2) / (n * dt);
    return xi;
}

std::vector<cd> fftshift(const std::vector<cd>& v) {
    const int n = (int)v.size();
    std::vector<cd> out(n);
    for (int j = 0; j < n; ++j) out[j] = v[(j + n / 2) % n];
    return out;
}

std::vector<cd> ifftshift(const std::vector<cd>& v) {
    const int n = (int)v.size();
    std::vector<cd> out(n);
    for (int j = 0; j < n; ++j) out[(j + n / 2) % n] = v[j];
    return out;
}

std::vector<cd> dft(const std::vector<cd>& f, double t0, double dt) {
    const int n = (int)f.size();
    std::vector<cd> F = fftshift(fft(f));
    const auto xi = freq_axis(n, dt);
    for (int j = 0; j < n; ++j) {
        const double ph = -2.0 * M_PI * t0 * xi[j];
        F[j] *= dt * cd(std::cos(ph), std::sin(ph));
    }
    return F;
}

std::vector<cd> idft(const std::vector<cd>& F, double t0, double dt) {
    const int n = (int)F.size();
    std::vector<cd> G(n);
    const auto xi = freq_axis(n, dt);
    for (int j = 0; j < n; ++j) {
        const double ph = 2.0 * M_PI * t0 * xi[j];
        G[j] = F[j] * cd(std::cos(ph), std::sin(ph));
    }
    G = ifft(ifftshift(G));
    const double s = 1.0 / dt;
    for (auto& x : G) x *= s;
    return G;
}

}  // namespace tfa
