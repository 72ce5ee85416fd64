#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "tfa/cone.hpp"
#include "tfa/dft.hpp"
#include "tfa/generators.hpp"
#include "tfa/instfreq.hpp"
#include "tfa/stft.hpp"
#include "tfa/verify.hpp"
#include "tfa/wigner.hpp"

namespace py = pybind11;
using namespace tfa;

namespace {

Boundary parse_mode(const std::string& s) {
    if (s == "zero") return Boundary::zero;
    if (s == "periodized") return Boundary::periodized;
    throw py::value_error("boundary must be 'zero' or 'periodized'");
}

py::array_t<cd> vec_to_np(const std::vector<cd>& v) {
    py::array_t<cd> a(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), a.mutable_data());
    return a;
}

std::vector<cd> np_to_vec(const py::array_t<cd, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 1) throw py::value_error("expected a 1-d array");
    return {a.data(), a.data() + a.size()};
}

py::array_t<cd> mat_values(const TimeFrequencyMatrix& m) {
    py::array_t<cd> a({m.rows(), m.cols()});
    std::copy(m.values.begin(), m.values.end(), a.mutable_data());
    return a;
}

py::dict report_to_dict(const ConeDecayReport& r) {
    py::list records;
    for (const SlopeRecord& s : r.records) {
        py::dict d;
        d["B"] = s.B;
        d["class"] = to_string(s.fit.cls);
        d["poly_order"] = s.fit.poly_order;
        d["exp_rate"] = s.fit.exp_rate;
        d["residual"] = s.fit.residual;
        records.append(d);
    }
    py::dict out;
    out["records"] = records;
    out["critical_B"] = r.critical_B ? py::object(py::float_(*r.critical_B)) : py::none();
    out["monotonic"] = r.monotonic;
    out["violations"] = r.violations;
    out["radius_min"] = r.radius_min;
    out["radius_max"] = r.radius_max;
    out["window_a"] = r.window_a;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "discrete Wigner / STFT toolbox";

    py::class_<Grid>(m, "Grid")
        .def(py::init([](double t0, double dt, int n) {
                 Grid g{t0, dt, n};
                 g.validate();
                 return g;
             }),
             py::arg("t0"), py::arg("dt"), py::arg("n"))
        .def_readonly("t0", &Grid::t0)
        .def_readonly("dt", &Grid::dt)
        .def_readonly("n", &Grid::n)
        .def("time", &Grid::time)
        .def("nyquist", &Grid::nyquist)
        .def("__repr__", [](const Grid& g) {
            return "Grid(t0=" + std::to_string(g.t0) + ", dt=" + std::to_string(g.dt) +
                   ", n=" + std::to_string(g.n) + ")";
        });

    py::class_<Signal>(m, "Signal")
        .def(py::init([](const Grid& g, const py::array_t<cd>& samples) {
                 Signal s{g, np_to_vec(samples)};
                 s.validate();
                 return s;
             }),
             py::arg("grid"), py::arg("samples"))
        .def_readonly("grid", &Signal::grid)
        .def_property_readonly("samples", [](const Signal& s) { return vec_to_np(s.samples); });

    py::class_<TimeFrequencyMatrix>(m, "TimeFrequencyMatrix")
        .def_readonly("time_axis", &TimeFrequencyMatrix::time_axis)
        .def_property_readonly("freq_axis",
                               [](const TimeFrequencyMatrix& m_) { return m_.freq_axis; })
        .def_property_readonly("values", &mat_values)
        .def_property_readonly("kind", [](const TimeFrequencyMatrix& m_) {
            return m_.kind == ValueKind::real ? "real" : "complex";
        });

    py::class_<IFTrack>(m, "IFTrack")
        .def_readonly("time_axis", &IFTrack::time_axis)
        .def_readonly("values", &IFTrack::values)
        .def_property_readonly("valid",
                               [](const IFTrack& t) {
                                   py::array_t<bool> a(static_cast<py::ssize_t>(t.valid.size()));
                                   for (py::ssize_t i = 0; i < a.size(); ++i)
                                       a.mutable_data()[i] = t.valid[i] != 0;
                                   return a;
                               })
        .def_readonly("threshold", &IFTrack::threshold)
        .def_readonly("estimator", &IFTrack::estimator);

    py::class_<IFComparison>(m, "IFComparison")
        .def_readonly("max_abs_err", &IFComparison::max_abs_err)
        .def_readonly("rms_err", &IFComparison::rms_err)
        .def_readonly("n_compared", &IFComparison::n_compared);

    m.def(
        "gen_tone",
        [](const Grid& g, double xi0, cd amplitude) { return gen_tone(g, xi0, amplitude); },
        py::arg("grid"), py::arg("xi0"), py::arg("amplitude") = cd(1.0, 0.0));
    m.def(
        "gen_gaussian",
        [](const Grid& g, cd a, cd b, cd c) { return gen_gaussian(g, GaussianParams{a, b, c}); },
        py::arg("grid"), py::arg("a"), py::arg("b") = cd(0, 0), py::arg("c") = cd(0, 0));
    m.def(
        "gen_chirp",
        [](const Grid& g, double rate, std::optional<double> envelope_a) {
            std::optional<GaussianParams> env;
            if (envelope_a) env = GaussianParams{*envelope_a};
            return gen_chirp(g, ChirpParams{rate}, env);
        },
        py::arg("grid"), py::arg("rate"), py::arg("envelope_a") = py::none());
    m.def("gen_bandlimited", &gen_bandlimited, py::arg("grid"), py::arg("xi_lo"),
          py::arg("xi_hi"), py::arg("seed"));

    m.def(
        "dft", [](const py::array_t<cd>& f, double t0, double dt) {
            return vec_to_np(dft(np_to_vec(f), t0, dt));
        },
        py::arg("f"), py::arg("t0"), py::arg("dt"));
    m.def(
        "idft", [](const py::array_t<cd>& F, double t0, double dt) {
            return vec_to_np(idft(np_to_vec(F), t0, dt));
        },
        py::arg("F"), py::arg("t0"), py::arg("dt"));
    m.def("freq_axis", &freq_axis, py::arg("n"), py::arg("dt"));

    m.def(
        "wigner",
        [](const Signal& f, const std::string& boundary) { return wigner(f, parse_mode(boundary)); },
        py::arg("f"), py::arg("boundary") = "zero");
    m.def(
        "cross_wigner",
        [](const Signal& f, const Signal& g, const std::string& boundary) {
            return cross_wigner(f, g, parse_mode(boundary));
        },
        py::arg("f"), py::arg("g"), py::arg("boundary") = "zero");
    m.def(
        "stft",
        [](const Signal& f, double window_a, int oversample) {
            return stft(f, gaussian_window(window_a, f.grid.dt), oversample);
        },
        py::arg("f"), py::arg("window_a") = 2.0, py::arg("oversample") = 1);

    m.def("marginal_freq", &marginal_freq, py::arg("W"));
    m.def("marginal_time", &marginal_time, py::arg("W"));
    m.def("total_energy", &total_energy, py::arg("W"));

    m.def(
        "if_phase_gradient",
        [](const Signal& f, double threshold, bool finite_difference) {
            return if_phase_gradient(f, threshold, finite_difference);
        },
        py::arg("f"), py::arg("threshold") = 1e-6, py::arg("finite_difference") = false);
    m.def(
        "if_moment",
        [](const Signal& f, double threshold, const std::string& boundary) {
            return if_moment(f, threshold, parse_mode(boundary));
        },
        py::arg("f"), py::arg("threshold") = 1e-6, py::arg("boundary") = "zero");
    m.def("compare_if", &compare_if, py::arg("a"), py::arg("b"));

    m.def(
        "classify_vcon",
        [](const Signal& f, double window_a, const std::vector<double>& slopes, int shells) {
            return report_to_dict(
                classify_vcon(f, gaussian_window(window_a, f.grid.dt), slopes, shells));
        },
        py::arg("f"), py::arg("window_a"), py::arg("slopes"), py::arg("shells") = kDefaultShells);

    m.def(
        "run_verification",
        [](const std::string& only, double perturb) {
            const VerificationReport r = run_verification(only, perturb);
            py::list ids;
            for (const IdentityRecord& rec : r.records) {
                py::dict d;
                d["name"] = rec.name;
                d["statement"] = rec.statement;
                d["max_deviation"] = rec.max_deviation;
                d["tolerance"] = rec.tolerance;
                d["pass"] = rec.pass;
                ids.append(d);
            }
            py::dict out;
            out["all_pass"] = r.all_pass;
            out["identities"] = ids;
            return out;
        },
        py::arg("only") = "", py::arg("perturb") = 0.0);
}
