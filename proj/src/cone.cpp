#include "tfa/cone.hpp"

#include <algorithm>
#include <cmath>

namespace tfa {

std::string to_string(DecayClass c) {
    switch (c) {
        case DecayClass::rapid: return "rapid";
        case DecayClass::polynomial: return "polynomial";
        default: return "non_decaying";
    }
}

std::vector<std::pair<double, double>> cone_sup_profile(const TimeFrequencyMatrix& V,
                                                        const ConeSpec& cone, int n_shells,
                                                        double center) {
    cone.validate();
    if (n_shells < 4) throw std::invalid_argument("cone_sup_profile: need n_shells >= 4");

    std::vector<double> edges(n_shells + 1);
    for (int j = 0; j <= n_shells; ++j)
        edges[j] = cone.radius_min *
                   std::pow(cone.radius_max / cone.radius_min, (double)j / n_shells);

    std::vector<double> sup(n_shells, -1.0);  // -1 marks an empty shell
    const int rows = V.rows(), cols = V.cols();
    for (int k = 0; k < rows; ++k) {
        const double x = V.time_axis[k] - center;
        for (int j = 0; j < cols; ++j) {
            const double eta = V.freq_axis[j];
            if (std::abs(eta) <= cone.slope_B * std::abs(x)) continue;
            const double r = std::sqrt(1.0 + x * x + eta * eta);
            if (r < edges.front() || r >= edges.back()) continue;
            const int s = std::min(
                n_shells - 1,
                (int)(std::log(r / cone.radius_min) /
                      std::log(cone.radius_max / cone.radius_min) * n_shells));
            sup[s] = std::max(sup[s], std::abs(V.at(k, j)));
        }
    }

    std::vector<std::pair<double, double>> profile;
    for (int s = 0; s < n_shells; ++s)
        if (sup[s] >= 0.0) profile.emplace_back(0.5 * (edges[s] + edges[s + 1]), sup[s]);
    if (profile.empty()) throw std::runtime_error("cone_sup_profile: cone does not meet the grid");
    return profile;
}

namespace {

struct LineFit {
    double slope = 0.0;
    double residual = 0.0;
};

LineFit lsq_line(const std::vector<double>& u, const std::vector<double>& y) {
    const int n = (int)u.size();
    double su = 0.0, sy = 0.0, suu = 0.0, suy = 0.0;
    for (int i = 0; i < n; ++i) {
        su += u[i];
        sy += y[i];
        suu += u[i] * u[i];
        suy += u[i] * y[i];
    }
    const double det = n * suu - su * su;
    LineFit f;
    f.slope = (n * suy - su * sy) / det;
    const double icpt = (sy - f.slope * su) / n;
    double sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double e = y[i] - (f.slope * u[i] + icpt);
        sq += e * e;
    }
    f.residual = std::sqrt(sq / n);
    return f;
}

}  // namespace

DecayFit fit_decay(const std::vector<std::pair<double, double>>& profile, double peak) {
    if (profile.size() < 4) throw std::invalid_argument("fit_decay: degenerate profile");

    const double floor_abs = kSupFloor * peak;
    bool all_floor = true;
    for (const auto& [r, s] : profile)
        if (s > floor_abs) all_floor = false;
    if (all_floor) {
        DecayFit f;
        f.poly_order = f.exp_rate = std::numeric_limits<double>::infinity();
        f.residual = 0.0;
        f.cls = DecayClass::rapid;
        return f;
    }

    std::vector<double> r, logr, logs;
    for (const auto& [radius, s] : profile) {
        r.push_back(radius);
        logr.push_back(std::log(radius));
        logs.push_back(std::log(std::max(s, floor_abs * 1e-4)));  // guard exact zeros
    }
    const LineFit pfit = lsq_line(logr, logs);
    const LineFit efit = lsq_line(r, logs);

    DecayFit f;
    f.poly_order = -pfit.slope;
    f.exp_rate = -efit.slope;
    if (efit.residual <= pfit.residual) {
        f.residual = efit.residual;
        f.cls = f.exp_rate >= kRateMin ? DecayClass::rapid : DecayClass::non_decaying;
    } else {
        f.residual = pfit.residual;
        if (f.poly_order < 0.5)
            f.cls = DecayClass::non_decaying;
        else if (f.poly_order < kOrderMax)
            f.cls = DecayClass::polynomial;
        else
            f.cls = DecayClass::rapid;
    }
    return f;
}

ConeDecayReport classify_vcon(const Signal& f, const Window& w, std::vector<double> slopes,
                              int n_shells) {
    f.validate();
    if (slopes.size() < 3) throw std::invalid_argument("classify_vcon: need >= 3 slopes");
    for (size_t i = 1; i < slopes.size(); ++i)
        if (!(slopes[i] > slopes[i - 1]))
            throw std::invalid_argument("classify_vcon: slopes must be ascending");

    const auto V = stft(f, w, 1);
    double peak = 0.0;
    for (const cd& v : V.values) peak = std::max(peak, std::abs(v));

    // x is measured from the temporal centroid so the cones sit where the
    // signal actually lives.
    double m0 = 0.0, m1 = 0.0;
    for (int k = 0; k < f.grid.n; ++k) {
        const double p = std::norm(f.samples[k]);
        m0 += p;
        m1 += f.grid.time(k) * p;
    }
    const double center = m0 > 0.0 ? m1 / m0 : 0.0;

    ConeDecayReport rep;
    rep.rate_min = kRateMin;
    rep.order_max = kOrderMax;
    rep.floor = kSupFloor;
    rep.grid = f.grid;
    rep.window_a = w.gaussian_a;
    const double half_extent = f.grid.n * f.grid.dt / 2.0;
    rep.radius_max = kRadiusMaxFrac * half_extent;
    rep.radius_min = kRadiusMinFrac * rep.radius_max;

    auto fit_at = [&](double B) {
        ConeSpec cone{B, rep.radius_min, rep.radius_max};
        return fit_decay(cone_sup_profile(V, cone, n_shells, center), peak);
    };

    for (double B : slopes) rep.records.push_back({B, fit_at(B)});

    for (size_t i = 1; i < rep.records.size(); ++i) {
        const bool prev_rapid = rep.records[i - 1].fit.cls == DecayClass::rapid;
        const bool cur_rapid = rep.records[i].fit.cls == DecayClass::rapid;
        if (prev_rapid && !cur_rapid) {
            rep.monotonic = false;
            rep.violations.push_back(rep.records[i].B);
        }
        if (!prev_rapid && cur_rapid && !rep.critical_B) {
            double lo = rep.records[i - 1].B, hi = rep.records[i].B;
            while ((hi - lo) / (0.5 * (hi + lo)) > 0.05) {
                const double mid = 0.5 * (lo + hi);
                if (fit_at(mid).cls == DecayClass::rapid)
                    hi = mid;
                else
                    lo = mid;
            }
            rep.critical_B = 0.5 * (lo + hi);
        }
    }
    return rep;
}

}  // namespace tfa
