#include "tfa/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "tfa/cone.hpp"
#include "tfa/dft.hpp"
#include "tfa/generators.hpp"
#include "tfa/instfreq.hpp"
#include "tfa/io.hpp"
#include "tfa/oracles.hpp"
#include "tfa/stft.hpp"
#include "tfa/wigner.hpp"

namespace tfa {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Grid centered(int n, double dt) { return Grid{-n * dt / 2.0, dt, n}; }

// the negative-control hook: a constant offset scaled to the matrix peak.
// pure rescalings would cancel out of the normalized moment, an offset does not.
void corrupt(TimeFrequencyMatrix& W, double eps) {
    if (eps == 0.0) return;
    double peak = 0.0;
    for (const cd& v : W.values) peak = std::max(peak, std::abs(v));
    for (cd& v : W.values) v += eps * peak;
}

TimeFrequencyMatrix wig(const Signal& f, Boundary mode, double eps) {
    auto W = wigner(f, mode);
    corrupt(W, eps);
    return W;
}

double rel_linf(const std::vector<double>& got, const std::vector<double>& want) {
    if (got.size() != want.size()) throw std::logic_error("rel_linf: size mismatch");
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < got.size(); ++i) {
        num = std::max(num, std::abs(got[i] - want[i]));
        den = std::max(den, std::abs(want[i]));
    }
    return num / den;
}

double rel_linf_c(const std::vector<cd>& got, const std::vector<cd>& want) {
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < got.size(); ++i) {
        num = std::max(num, std::abs(got[i] - want[i]));
        den = std::max(den, std::abs(want[i]));
    }
    return num / den;
}

double matrix_peak(const TimeFrequencyMatrix& W) {
    double m = 0.0;
    for (const cd& v : W.values) m = std::max(m, std::abs(v));
    return m;
}

std::vector<double> power(const Signal& f) {
    std::vector<double> p(f.samples.size());
    for (size_t k = 0; k < p.size(); ++k) p[k] = std::norm(f.samples[k]);
    return p;
}

std::vector<char> amplitude_mask(const Signal& f, double threshold = 1e-6) {
    auto p = power(f);
    const double pm = *std::max_element(p.begin(), p.end());
    std::vector<char> v(p.size());
    for (size_t k = 0; k < p.size(); ++k) v[k] = p[k] >= threshold * pm;
    return v;
}

Signal product(const Signal& a, const Signal& b) {
    Signal out = a;
    for (int k = 0; k < a.grid.n; ++k) out.samples[k] *= b.samples[k];
    return out;
}

// moment-vs-phase-gradient comparison with the matrix built here so the
// perturbation hook can reach it before the moment is taken.
struct MomentCmp {
    double err = 0.0;
    double range = 0.0;
};

MomentCmp moment_vs_phase(const Signal& f, Boundary mode, double eps) {
    const auto pg = if_phase_gradient(f);
    const auto mm = if_moment_from_matrix(wig(f, mode, eps));
    MomentCmp c;
    double lo = kInf, hi = -kInf;
    int joint = 0;
    for (size_t k = 0; k < pg.values.size(); ++k) {
        if (!pg.valid[k] || !mm.valid[k]) continue;
        c.err = std::max(c.err, std::abs(mm.values[k] - pg.values[k]));
        lo = std::min(lo, pg.values[k]);
        hi = std::max(hi, pg.values[k]);
        ++joint;
    }
    if (joint == 0) throw std::runtime_error("moment_vs_phase: no jointly valid samples");
    c.range = hi - lo;
    return c;
}

// ---- identity runners ------------------------------------------------------

// ten seeded band-limited fixtures shared by the marginal and energy checks
std::vector<Signal> marginal_fixtures() {
    std::vector<Signal> out;
    const Grid g = centered(256, 1.0 / 32);
    for (int seed = 1; seed <= 10; ++seed) out.push_back(gen_bandlimited(g, -3.0, 3.0, seed));
    return out;
}

double run_marginal_freq(double eps) {
    double dev = 0.0;
    for (const Signal& f : marginal_fixtures())
        dev = std::max(dev, rel_linf(marginal_freq(wig(f, Boundary::zero, eps)), power(f)));
    return dev;
}

double run_marginal_time(double eps) {
    double dev = 0.0;
    for (const Signal& f : marginal_fixtures()) {
        const auto m = marginal_time(wig(f, Boundary::zero, eps));
        const auto F = dft(f.samples, f.grid.t0, f.grid.dt);
        std::vector<double> got(F.size()), want(F.size());
        for (size_t j = 0; j < F.size(); ++j) {
            got[j] = m[2 * j];  // even wigner bins coincide with signal bins
            want[j] = std::norm(F[j]);
        }
        dev = std::max(dev, rel_linf(got, want));
    }
    return dev;
}

double run_energy(double eps) {
    double dev = 0.0;
    for (const Signal& f : marginal_fixtures()) {
        const auto p = power(f);
        double ref = 0.0;
        for (double v : p) ref += v;
        ref *= f.grid.dt;
        dev = std::max(dev, std::abs(total_energy(wig(f, Boundary::zero, eps)) - ref) / ref);
    }
    return dev;
}

double run_covariance(double eps) {
    const Grid g = centered(256, 1.0 / 32);
    const double dxi = 1.0 / (g.n * g.dt);
    const std::vector<Signal> fixtures = {gen_tone(g, 4 * dxi), gen_bandlimited(g, -3.0, 3.0, 5)};
    double dev = 0.0;
    for (const auto [s, mu] : {std::pair{16, 8}, std::pair{5, -3}}) {
        for (const Signal& f : fixtures) {
            const auto Wf = wig(f, Boundary::periodized, eps);
            const auto Wg = wig(modulate_translate(f, s, mu), Boundary::periodized, eps);
            const int n = Wf.rows(), m = Wf.cols();
            const double peak = matrix_peak(Wf);
            for (int k = 0; k < n; ++k) {
                const int kr = ((k - s) % n + n) % n;
                for (int j = 0; j < m; ++j) {
                    const int jr = ((j - 2 * mu) % m + m) % m;
                    dev = std::max(dev, std::abs(Wg.at(k, j) - Wf.at(kr, jr)) / peak);
                }
            }
        }
    }
    return dev;
}

double run_moment_tone(double eps) {
    const Grid g = centered(512, 1.0 / 32);
    const double xi0 = 0.125;
    const auto tr = if_moment_from_matrix(wig(gen_tone(g, xi0), Boundary::periodized, eps));
    double dev = 0.0;
    for (size_t k = 0; k < tr.values.size(); ++k)
        if (tr.valid[k]) dev = std::max(dev, std::abs(tr.values[k] - xi0));
    return dev;
}

Signal chirp_times_band(double rate) {
    const Grid g = centered(512, 1.0 / 32);
    return product(gen_chirp(g, ChirpParams{rate}), gen_bandlimited(g, -2.0, 2.0, 13));
}

// ridge fixture: strongly chirped, slowly decaying envelope
Signal ridge_fixture() {
    return gen_chirp(centered(512, 1.0 / 32), ChirpParams{2.0}, GaussianParams{0.05});
}

double run_ridge_argmax(double eps) {
    const Signal f = ridge_fixture();
    const auto W = wig(f, Boundary::zero, eps);
    const auto valid = amplitude_mask(f);
    const double dxiw = W.freq_spacing();
    const int n = W.rows(), m = W.cols();
    double dev = 0.0;
    for (int k = 0; k < n; ++k) {
        if (!valid[k]) continue;
        int am = 0;
        for (int j = 1; j < m; ++j)
            if (W.at(k, j).real() > W.at(k, am).real()) am = j;
        const long want = std::lround(2.0 * f.grid.time(k) / dxiw) + n;
        dev = std::max(dev, std::abs(double(am - want)));
    }
    return dev;
}

MomentCmp run_ridge_moment(double eps) {
    const Signal f = ridge_fixture();
    const auto tr = if_moment_from_matrix(wig(f, Boundary::zero, eps));
    const auto valid = amplitude_mask(f);
    MomentCmp c;
    double lo = kInf, hi = -kInf;
    for (size_t k = 0; k < tr.values.size(); ++k) {
        if (!valid[k] || !tr.valid[k]) continue;
        const double want = 2.0 * f.grid.time(k);
        c.err = std::max(c.err, std::abs(tr.values[k] - want));
        lo = std::min(lo, want);
        hi = std::max(hi, want);
    }
    c.range = hi - lo;
    return c;
}

double run_shear(double eps) {
    const Grid g = centered(512, 1.0 / 32);
    const double rate = 2.0;  // rate * 2n dt^2 = 2: whole-bin shear on every row
    const Signal h = gen_gaussian(g, GaussianParams{1.0});
    const Signal f = product(gen_chirp(g, ChirpParams{rate}), h);
    const auto Wf = wig(f, Boundary::zero, eps);
    const auto Wh = wig(h, Boundary::zero, eps);
    const double dxiw = Wh.freq_spacing();
    const double peak = matrix_peak(Wh);
    const int n = Wf.rows(), m = Wf.cols();
    double dev = 0.0;
    for (int k = 0; k < n; ++k) {
        const long s = std::lround(rate * g.time(k) / dxiw);
        for (int j = 0; j < m; ++j) {
            const int jr = ((j - s) % m + m) % m;
            dev = std::max(dev, std::abs(Wf.at(k, j) - Wh.at(k, jr)) / peak);
        }
    }
    return dev;
}

double run_gaussian_form(double eps) {
    const Grid g = centered(256, 1.0 / 16);
    double dev = 0.0;
    for (const cd a : {cd(1, 0), cd(1, 1), cd(2, 0)}) {
        for (const cd b : {cd(0, 0), cd(0, 0.5)}) {
            const GaussianParams p{a, b, 0.0};
            const auto W = wig(gen_gaussian(g, p), Boundary::zero, eps);
            const auto O = oracle_gaussian_wigner(p, W.time_axis, W.freq_axis);
            const double peak = matrix_peak(O);
            for (size_t i = 0; i < W.values.size(); ++i)
                dev = std::max(dev, std::abs(W.values[i] - O.values[i]) / peak);
        }
    }
    return dev;
}

double min_over_max(const TimeFrequencyMatrix& W) {
    double lo = kInf, hi = -kInf;
    for (const cd& v : W.values) {
        lo = std::min(lo, v.real());
        hi = std::max(hi, v.real());
    }
    return lo / hi;
}

double run_hudson_gaussian(double eps) {
    const Grid g = centered(256, 1.0 / 16);
    const auto W = wig(gen_gaussian(g, GaussianParams{cd(1, 1), cd(0, 0.5)}), Boundary::zero, eps);
    return std::max(0.0, -min_over_max(W));
}

double run_hudson_two_tone(double eps) {
    const Grid g = centered(256, 1.0 / 16);
    Signal f = gen_tone(g, 2.0);
    const Signal t2 = gen_tone(g, -1.0);
    for (int k = 0; k < g.n; ++k) f.samples[k] += t2.samples[k];
    // interference must push the matrix genuinely negative
    return std::max(0.0, min_over_max(wig(f, Boundary::zero, eps)) + 0.05);
}

double run_factorization_gaussian(double) {
    const Grid g = centered(128, 1.0 / 16);
    return oracle_wigner_window_identity(gen_gaussian(g, GaussianParams{1.0}), 2.0);
}

double run_factorization_bandlimited(double) {
    const Grid g = centered(128, 1.0 / 16);
    Signal f = gen_bandlimited(g, -0.5, 0.5, 9);
    for (int k = 0; k < g.n; ++k) {
        const double t = g.time(k);
        f.samples[k] *= std::exp(-M_PI * 0.5 * t * t);
    }
    return oracle_wigner_window_identity(f, 2.0);
}

double run_autocorr_slice(double eps) {
    const std::vector<Signal> fixtures = {
        gen_bandlimited(centered(256, 1.0 / 32), -3.0, 3.0, 7),
        gen_gaussian(centered(256, 1.0 / 16), GaussianParams{cd(1, 1), cd(0, 0.25)}),
        ridge_fixture(),
    };
    double dev = 0.0;
    for (const Signal& f : fixtures) {
        const int n = f.grid.n;
        const auto f2 = upsample2(f.samples);
        for (const Boundary mode : {Boundary::zero, Boundary::periodized}) {
            const auto W = wig(f, mode, eps);
            for (int k = 0; k < n; ++k) {
                const auto s = slice_time(W, k);
                const auto R =
                    dft(autocorrelation_row(f2, f2, k, mode), -n * f.grid.dt, f.grid.dt);
                for (size_t j = 0; j < R.size(); ++j)
                    dev = std::max(dev, std::abs(s[j] - R[j]));
            }
        }
    }
    return dev;
}

double run_oracle_dft(double) {
    double dev = 0.0;
    for (const int n : {8, 16, 32, 64}) {
        const Grid g = centered(n, 0.25);
        for (int seed = 1; seed <= 10; ++seed) {
            const Signal f = gen_bandlimited(g, -1.0, 1.0, seed);
            dev = std::max(dev, rel_linf_c(dft(f.samples, g.t0, g.dt),
                                           oracle_direct_dft(f.samples, g.t0, g.dt)));
        }
    }
    return dev;
}

double run_oracle_wigner(double) {
    double dev = 0.0;
    for (const int n : {8, 16, 32, 64}) {
        const Grid g = centered(n, 0.25);
        for (int seed = 1; seed <= 10; ++seed) {
            const Signal f = gen_bandlimited(g, -1.0, 1.0, seed);
            for (const Boundary mode : {Boundary::zero, Boundary::periodized}) {
                const auto W = wigner(f, mode);
                const auto D = oracle_direct_wigner(f, mode);
                const double peak = matrix_peak(D);
                for (size_t i = 0; i < W.values.size(); ++i)
                    dev = std::max(dev, std::abs(W.values[i] - D.values[i]) / peak);
            }
        }
    }
    return dev;
}

double run_oracle_stft(double) {
    double dev = 0.0;
    for (const int n : {8, 16, 32, 64}) {
        const Grid g = centered(n, 1.0);
        const Window w = gaussian_window(2.0, g.dt);
        for (int seed = 1; seed <= 10; ++seed) {
            const Signal f = gen_bandlimited(g, -0.25, 0.25, seed);
            for (const int L : {1, 2}) {
                const auto V = stft(f, w, L);
                const auto D = oracle_direct_stft(f, w, L);
                const double peak = matrix_peak(D);
                for (size_t i = 0; i < V.values.size(); ++i)
                    dev = std::max(dev, std::abs(V.values[i] - D.values[i]) / peak);
            }
        }
    }
    return dev;
}

// cone reports are eps-independent and shared by four identities
const ConeDecayReport& chirp_cone_report(double eta0) {
    static const ConeDecayReport r1 = [] {
        const Grid g = centered(1024, 1.0 / 32);
        return classify_vcon(gen_chirp(g, ChirpParams{2.0}), gaussian_window(2.0, g.dt),
                             {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0});
    }();
    static const ConeDecayReport r2 = [] {
        const Grid g = centered(1024, 1.0 / 32);
        return classify_vcon(gen_chirp(g, ChirpParams{4.0}), gaussian_window(4.0, g.dt),
                             {1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0});
    }();
    return eta0 < 1.5 ? r1 : r2;
}

const ConeDecayReport& gaussian_cone_report() {
    static const ConeDecayReport r = [] {
        const Grid g = centered(1024, 1.0 / 32);
        return classify_vcon(gen_gaussian(g, GaussianParams{1.0}), gaussian_window(2.0, g.dt),
                             {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0});
    }();
    return r;
}

double run_cone_critical(double eta0) {
    const auto& r = chirp_cone_report(eta0);
    if (!r.critical_B) return kInf;
    return std::abs(*r.critical_B - 2.0 * eta0) / (2.0 * eta0);
}

double run_cone_gaussian(double) {
    double bad = 0.0;
    for (const auto& rec : gaussian_cone_report().records)
        if (rec.fit.cls != DecayClass::rapid) bad += 1.0;
    return bad;
}

double run_cone_monotonic(double) {
    double v = gaussian_cone_report().violations.size();
    v += chirp_cone_report(1.0).violations.size();
    v += chirp_cone_report(2.0).violations.size();
    return v;
}

struct Identity {
    std::string name;
    std::string statement;
    std::function<std::pair<double, double>(double)> run;  // eps -> (deviation, tolerance)
};

std::vector<Identity> registry() {
    auto fixed = [](std::function<double(double)> fn, double tol) {
        return [fn = std::move(fn), tol](double eps) { return std::pair{fn(eps), tol}; };
    };
    auto ranged = [](std::function<MomentCmp(double)> fn, double frac) {
        return [fn = std::move(fn), frac](double eps) {
            const MomentCmp c = fn(eps);
            return std::pair{c.err, frac * c.range};
        };
    };
    return {
        {"autocorr_slice", "fixed-time wigner slice equals the dft of its autocorrelation row",
         fixed(run_autocorr_slice, 1e-12)},
        {"cone_chirp_critical_eta1", "critical cone slope of exp(2 pi i t^2) is near 2",
         fixed([](double) { return run_cone_critical(1.0); }, 0.15)},
        {"cone_chirp_critical_eta2", "critical cone slope of exp(4 pi i t^2) is near 4",
         fixed([](double) { return run_cone_critical(2.0); }, 0.15)},
        {"cone_gaussian_rapid", "gaussian stft decays rapidly in every tested cone",
         fixed(run_cone_gaussian, 0.0)},
        {"cone_monotonic", "cone decay class never degrades as the cone narrows",
         fixed(run_cone_monotonic, 0.0)},
        {"covariance_shift", "modulate+translate rolls the periodized wigner by whole bins",
         fixed(run_covariance, 1e-12)},
        {"energy", "double integral of the wigner matrix equals the signal energy",
         fixed(run_energy, 1e-6)},
        {"fourier_factorization_bandlimited",
         "2-d transform of W_f * W_phi factors into stft products (tapered band-limited)",
         fixed(run_factorization_bandlimited, 1e-5)},
        {"fourier_factorization_gaussian",
         "2-d transform of W_f * W_phi factors into stft products (gaussian)",
         fixed(run_factorization_gaussian, 1e-5)},
        {"gaussian_closed_form", "gaussian wigner matches its closed-form expression",
         fixed(run_gaussian_form, 1e-4)},
        {"hudson_gaussian", "gaussian wigner is nonnegative",
         fixed(run_hudson_gaussian, 1e-8)},
        {"hudson_two_tone", "two-tone wigner dips below -5% of its peak",
         fixed(run_hudson_two_tone, 0.0)},
        {"marginals_freq", "frequency marginal of the wigner matrix recovers |f(t)|^2",
         fixed(run_marginal_freq, 1e-6)},
        {"marginals_time", "time marginal of the wigner matrix recovers |dft f|^2",
         fixed(run_marginal_time, 1e-6)},
        {"moment_if_bandlimited", "wigner moment tracks phase-gradient IF (band-limited)",
         ranged([](double eps) {
             return moment_vs_phase(gen_bandlimited(centered(512, 1.0 / 32), -3.0, 3.0, 11),
                                    Boundary::periodized, eps);
         }, 1e-3)},
        {"moment_if_chirp_bl_rate05",
         "wigner moment tracks phase-gradient IF (chirp x band-limited, rate 0.5)",
         ranged([](double eps) {
             return moment_vs_phase(chirp_times_band(0.5), Boundary::periodized, eps);
         }, 1e-3)},
        {"moment_if_chirp_bl_rate2",
         "wigner moment tracks phase-gradient IF (chirp x band-limited, rate 2)",
         ranged([](double eps) {
             return moment_vs_phase(chirp_times_band(2.0), Boundary::periodized, eps);
         }, 1e-3)},
        {"moment_if_gaussian", "wigner moment tracks phase-gradient IF (complex gaussian)",
         ranged([](double eps) {
             return moment_vs_phase(
                 gen_gaussian(centered(512, 1.0 / 32), GaussianParams{cd(1, 1), cd(0, 0.25)}),
                 Boundary::zero, eps);
         }, 1e-3)},
        {"moment_if_tone", "wigner moment of a pure tone equals its frequency",
         fixed(run_moment_tone, 1e-8)},
        {"oracle_equivalence_dft", "fft dft matches the direct summation oracle",
         fixed(run_oracle_dft, 1e-12)},
        {"oracle_equivalence_stft", "fft stft matches the direct summation oracle",
         fixed(run_oracle_stft, 1e-12)},
        {"oracle_equivalence_wigner", "fft wigner matches the direct summation oracle",
         fixed(run_oracle_wigner, 1e-12)},
        {"ridge_argmax", "chirp wigner row maxima sit on the line xi = rate * t",
         fixed(run_ridge_argmax, 1.0)},
        {"ridge_moment", "chirp wigner moment tracks rate * t",
         ranged(run_ridge_moment, 0.02)},
        {"shear_chirp", "a chirp factor shears the envelope wigner rows by whole bins",
         fixed(run_shear, 1e-10)},
    };
}

}  // namespace

VerificationReport run_verification(const std::string& only, double perturb) {
    if (perturb < 0.0) throw std::invalid_argument("verify: perturb must be >= 0");
    const auto t_start = std::chrono::steady_clock::now();

    VerificationReport rep;
    rep.perturb = perturb;
    rep.all_pass = true;
    for (const Identity& id : registry()) {
        if (!only.empty() && id.name.find(only) == std::string::npos) continue;
        IdentityRecord rec;
        rec.name = id.name;
        rec.statement = id.statement;
        try {
            const auto [dev, tol] = id.run(perturb);
            rec.max_deviation = dev;
            rec.tolerance = tol;
            rec.pass = dev <= tol;
        } catch (const std::exception&) {
            rec.max_deviation = kInf;
            rec.tolerance = 0.0;
            rec.pass = false;
        }
        rep.all_pass = rep.all_pass && rec.pass;
        rep.records.push_back(std::move(rec));
    }
    std::sort(rep.records.begin(), rep.records.end(),
              [](const IdentityRecord& a, const IdentityRecord& b) { return a.name < b.name; });

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return rep;
}

std::string format_report_table(const VerificationReport& r) {
    std::ostringstream os;
    char line[160];
    std::snprintf(line, sizeof line, "%-34s %12s %12s  %s\n", "identity", "deviation",
                  "tolerance", "result");
    os << line;
    for (const IdentityRecord& rec : r.records) {
        std::snprintf(line, sizeof line, "%-34s %12.3e %12.3e  %s\n", rec.name.c_str(),
                      rec.max_deviation, rec.tolerance, rec.pass ? "pass" : "FAIL");
        os << line;
    }
    std::snprintf(line, sizeof line, "%zu identities, %s (%.1f s)\n", r.records.size(),
                  r.all_pass ? "all passed" : "FAILURES PRESENT", r.elapsed_seconds);
    os << line;
    return os.str();
}

void write_report_json(const std::string& path, const VerificationReport& r) {
    nlohmann::json j;
    j["perturb"] = r.perturb;
    j["all_pass"] = r.all_pass;
    j["elapsed_seconds"] = r.elapsed_seconds;
    j["identities"] = nlohmann::json::array();
    for (const IdentityRecord& rec : r.records) {
        j["identities"].push_back({{"name", rec.name},
                                   {"statement", rec.statement},
                                   {"max_deviation", rec.max_deviation},
                                   {"tolerance", rec.tolerance},
                                   {"pass", rec.pass}});
    }
    atomic_write(path, j.dump(2) + "\n");
}

}  // namespace tfa
