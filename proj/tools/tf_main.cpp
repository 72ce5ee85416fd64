// tf: generate signals, run time-frequency transforms, estimate IF tracks,
// classify cone decay, and run the identity verification suite.
#include <complex>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tfa/cone.hpp"
#include "tfa/dft.hpp"
#include "tfa/generators.hpp"
#include "tfa/instfreq.hpp"
#include "tfa/io.hpp"
#include "tfa/oracles.hpp"
#include "tfa/stft.hpp"
#include "tfa/verify.hpp"
#include "tfa/wigner.hpp"

using namespace tfa;

namespace {

struct GridFlags {
    int n = 512;
    double dt = 0.015625;
    std::optional<double> t0;

    Grid grid() const { return Grid{t0 ? *t0 : -n * dt / 2.0, dt, n}; }

    void attach(CLI::App* cmd) {
        cmd->add_option("--n", n, "number of samples (even)");
        cmd->add_option("--dt", dt, "sample spacing in seconds");
        cmd->add_option("--t0", t0, "record start time (default: centered at 0)");
    }
};

Boundary parse_boundary(const std::string& s) {
    if (s == "zero") return Boundary::zero;
    if (s == "periodized") return Boundary::periodized;
    throw CLI::ValidationError("--boundary must be zero or periodized");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete Wigner / STFT toolbox"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a signal and write csv+json");
    gen->require_subcommand(1);
    GridFlags gf;
    std::string out;

    auto* tone = gen->add_subcommand("tone", "amplitude * exp(2 pi i xi0 t)");
    double xi0 = 0.0, amp_re = 1.0, amp_im = 0.0;
    gf.attach(tone);
    tone->add_option("--xi0", xi0, "tone frequency");
    tone->add_option("--amp-re", amp_re, "amplitude, real part");
    tone->add_option("--amp-im", amp_im, "amplitude, imaginary part");
    tone->add_option("--out", out, "output stem (default: generator name)");

    auto* gauss = gen->add_subcommand("gaussian", "exp(-pi a t^2 + 2 pi b t + c)");
    double a_re = 1.0, a_im = 0.0, b_re = 0.0, b_im = 0.0, c_re = 0.0, c_im = 0.0;
    gf.attach(gauss);
    gauss->add_option("--a-re", a_re, "Re a (> 0)");
    gauss->add_option("--a-im", a_im, "Im a");
    gauss->add_option("--b-re", b_re, "Re b");
    gauss->add_option("--b-im", b_im, "Im b");
    gauss->add_option("--c-re", c_re, "Re c");
    gauss->add_option("--c-im", c_im, "Im c");
    gauss->add_option("--out", out, "output stem (default: generator name)");

    auto* chirp = gen->add_subcommand("chirp", "exp(pi i rate t^2), optional gaussian envelope");
    double rate = 1.0;
    std::optional<double> env_a;
    gf.attach(chirp);
    chirp->add_option("--rate", rate, "chirp rate (IF slope)");
    chirp->add_option("--envelope-a", env_a, "gaussian envelope exp(-pi a t^2)");
    chirp->add_option("--out", out, "output stem (default: generator name)");

    auto* bl = gen->add_subcommand("bandlimited", "seeded noise on dft bins inside a band");
    std::vector<double> band{-2.0, 2.0};
    unsigned long long seed = 1;
    gf.attach(bl);
    bl->add_option("--band", band, "band edges: lo hi")->expected(2);
    bl->add_option("--seed", seed, "rng seed");
    bl->add_option("--out", out, "output stem (default: generator name)");

    // ---- wigner ----
    auto* wig = app.add_subcommand("wigner", "wigner matrix of a signal (n x 2n)");
    std::string in, cross_in, boundary = "zero";
    wig->add_option("--in", in, "input signal stem")->required();
    wig->add_option("--cross", cross_in, "second signal stem (cross-wigner, complex output)");
    wig->add_option("--boundary", boundary, "zero|periodized");
    wig->add_option("--out", out, "output stem")->required();

    // ---- stft ----
    auto* st = app.add_subcommand("stft", "gaussian-window short-time fourier transform");
    double window_a = 2.0;
    int oversample = 1;
    st->add_option("--in", in, "input signal stem")->required();
    st->add_option("--window-a", window_a, "window exp(-pi a t^2)");
    st->add_option("--oversample", oversample, "frequency oversampling factor");
    st->add_option("--out", out, "output stem")->required();

    // ---- if ----
    auto* ifc = app.add_subcommand("if", "both IF estimators plus a comparison summary");
    double threshold = 1e-6;
    bool use_fd = false;
    ifc->add_option("--in", in, "input signal stem")->required();
    ifc->add_option("--threshold", threshold, "validity threshold (fraction of peak power)");
    ifc->add_flag("--finite-difference", use_fd, "differentiate by central differences");
    ifc->add_option("--boundary", boundary, "zero|periodized (moment estimator)");
    ifc->add_option("--out", out, "output stem")->required();

    // ---- cone ----
    auto* cone = app.add_subcommand("cone", "cone-decay classification of the stft");
    std::vector<double> slopes{0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0};
    int shells = kDefaultShells;
    cone->add_option("--in", in, "input signal stem")->required();
    cone->add_option("--window-a", window_a, "window exp(-pi a t^2)");
    cone->add_option("--slopes", slopes, "cone slopes to test (ascending)")->delimiter(',');
    cone->add_option("--shells", shells, "annulus shells for the decay fit");
    cone->add_option("--out", out, "output report path (json)")->required();

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "run the built-in identity suite");
    std::string only, json_out;
    double perturb = 0.0;
    ver->add_option("--only", only, "run identities whose name contains this substring");
    ver->add_option("--perturb", perturb, "fault injection: add eps*max|W| to wigner matrices");
    ver->add_option("--json", json_out, "also write the report as json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            if (out.empty()) out = gen->get_subcommands().front()->get_name();
            Signal s = [&] {
                if (tone->parsed()) return gen_tone(gf.grid(), xi0, cd(amp_re, amp_im));
                if (gauss->parsed())
                    return gen_gaussian(gf.grid(),
                                        GaussianParams{cd(a_re, a_im), cd(b_re, b_im), cd(c_re, c_im)});
                if (chirp->parsed()) {
                    std::optional<GaussianParams> env;
                    if (env_a) env = GaussianParams{*env_a};
                    return gen_chirp(gf.grid(), ChirpParams{rate}, env);
                }
                return gen_bandlimited(gf.grid(), band[0], band[1], seed);
            }();
            write_signal(out, s);
        } else if (wig->parsed()) {
            const Boundary mode = parse_boundary(boundary);
            const Signal f = read_signal(in);
            if (cross_in.empty()) {
                write_matrix(out, wigner(f, mode));
            } else {
                write_matrix(out, cross_wigner(f, read_signal(cross_in), mode));
            }
        } else if (st->parsed()) {
            const Signal f = read_signal(in);
            write_matrix(out, stft(f, gaussian_window(window_a, f.grid.dt), oversample));
        } else if (ifc->parsed()) {
            const Signal f = read_signal(in);
            const auto phase = if_phase_gradient(f, threshold, use_fd);
            const auto moment = if_moment(f, threshold, parse_boundary(boundary));
            write_track(out + "_phase", phase);
            write_track(out + "_moment", moment);
            const auto cmp = compare_if(phase, moment);
            nlohmann::json j = {{"max_abs_err", cmp.max_abs_err},
                                {"rms_err", cmp.rms_err},
                                {"n_compared", cmp.n_compared}};
            atomic_write(out + "_compare.json", j.dump(2) + "\n");
            if (cmp.n_compared == 0)
                std::fprintf(stderr, "warning: no jointly valid samples to compare\n");
        } else if (cone->parsed()) {
            const Signal f = read_signal(in);
            const auto report =
                classify_vcon(f, gaussian_window(window_a, f.grid.dt), slopes, shells);
            write_cone_report(out, report);
        } else if (ver->parsed()) {
            const auto report = run_verification(only, perturb);
            if (report.records.empty()) {
                std::fprintf(stderr, "error: no identity matches --only '%s'\n", only.c_str());
                return 2;
            }
            std::fputs(format_report_table(report).c_str(), stdout);
            if (!json_out.empty()) write_report_json(json_out, report);
            return report.all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
