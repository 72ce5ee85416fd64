#include "tfa/instfreq.hpp"

#include <cmath>
#include <limits>

#include "tfa/dft.hpp"

namespace tfa {

static const double kNaN = std::numeric_limits<double>::quiet_NaN();

IFTrack if_phase_gradient(const Signal& f, double threshold, bool use_finite_difference) {
    f.validate();
    if (!(threshold > 0.0 && threshold < 1.0))
        throw std::invalid_argument("if_phase_gradient: threshold must be in (0,1)");
    const int n = f.grid.n;

    std::vector<cd> fp(n);
    if (use_finite_difference) {
        for (int k = 0; k < n; ++k) {
            const cd hi = f.samples[(k + 1) % n];
            const cd lo = f.samples[(k - 1 + n) % n];
            fp[k] = (hi - lo) / (2.0 * f.grid.dt);
        }
    } else {
        auto F = dft(f.samples, f.grid.t0, f.grid.dt);
        const auto xi = freq_axis(n, f.grid.dt);
        for (int j = 0; j < n; ++j) F[j] *= cd(0.0, 2.0 * M_PI * xi[j]);
        fp = idft(F, f.grid.t0, f.grid.dt);
    }

    double max_p = 0.0;
    for (const cd& v : f.samples) max_p = std::max(max_p, std::norm(v));

    IFTrack tr;
    tr.threshold = threshold;
    tr.estimator = use_finite_difference ? "phase_gradient_fd" : "phase_gradient";
    tr.time_axis.resize(n);
    tr.values.assign(n, kNaN);
    tr.valid.assign(n, 0);
    for (int k = 0; k < n; ++k) {
        tr.time_axis[k] = f.grid.time(k);
        const double u = f.samples[k].real(), v = f.samples[k].imag();
        const double p = u * u + v * v;
        if (max_p > 0.0 && p >= threshold * max_p) {
            tr.values[k] = (u * fp[k].imag() - v * fp[k].real()) / (2.0 * M_PI * p);
            tr.valid[k] = 1;
        }
    }
    return tr;
}

IFTrack if_moment_from_matrix(const TimeFrequencyMatrix& W, double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0))
        throw std::invalid_argument("if_moment: threshold must be in (0,1)");
    const int n = static_cast<int>(W.time_axis.size());

    std::vector<double> num(n), den(n);
    double max_den = 0.0;
    for (int k = 0; k < n; ++k) {
        auto [nu, de] = first_freq_moment(W, k);
        num[k] = nu;
        den[k] = de;
        max_den = std::max(max_den, std::abs(de));
    }

    IFTrack tr;
    tr.threshold = threshold;
    tr.estimator = "moment";
    tr.time_axis = W.time_axis;
    tr.values.assign(n, kNaN);
    tr.valid.assign(n, 0);
    for (int k = 0; k < n; ++k) {
        if (max_den > 0.0 && std::abs(den[k]) >= threshold * max_den) {
            tr.values[k] = num[k] / den[k];
            tr.valid[k] = 1;
        }
    }
    return tr;
}

IFTrack if_moment(const Signal& f, double threshold, Boundary mode) {
    f.validate();
    return if_moment_from_matrix(wigner(f, mode), threshold);
}

IFComparison compare_if(const IFTrack& a, const IFTrack& b) {
    if (a.time_axis != b.time_axis)
        throw std::invalid_argument("compare_if: time axis mismatch");
    IFComparison c;
    double sq = 0.0;
    for (size_t k = 0; k < a.values.size(); ++k) {
        if (!a.valid[k] || !b.valid[k]) continue;
        const double e = std::abs(a.values[k] - b.values[k]);
        c.max_abs_err = std::max(c.max_abs_err, e);
        sq += e * e;
        ++c.n_compared;
    }
    c.rms_err = c.n_compared ? std::sqrt(sq / c.n_compared) : 0.0;
    return c;
}

}  // namespace tfa
