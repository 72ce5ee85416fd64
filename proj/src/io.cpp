#include "tfa/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tfa {

using json = nlohmann::json;

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("rename failed: " + path);
    }
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double parse_double(const std::string& tok, const std::string& where) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
        throw std::runtime_error("bad number '" + tok + "' in " + where);
    if (!std::isfinite(v)) throw std::runtime_error("non-finite value in " + where);
    return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

void write_signal(const std::string& stem, const Signal& s) {
    s.validate();
    std::ostringstream csv;
    csv << "t,re,im\n";
    for (int k = 0; k < s.grid.n; ++k)
        csv << format_double(s.grid.time(k)) << ',' << format_double(s.samples[k].real()) << ','
            << format_double(s.samples[k].imag()) << '\n';

    json meta = {{"t0", s.grid.t0}, {"dt", s.grid.dt}, {"n", s.grid.n}, {"unit_time", "s"}};
    atomic_write(stem + ".csv", csv.str());
    atomic_write(stem + ".json", meta.dump(2) + "\n");
}

Signal read_signal(const std::string& stem) {
    const json meta = json::parse(slurp(stem + ".json"));
    Grid grid(meta.at("t0").get<double>(), meta.at("dt").get<double>(), meta.at("n").get<int>());

    std::istringstream csv(slurp(stem + ".csv"));
    std::string line;
    if (!std::getline(csv, line) || split_csv_line(line) != std::vector<std::string>{"t", "re", "im"})
        throw std::runtime_error("malformed signal header in " + stem + ".csv");

    std::vector<cd> samples;
    samples.reserve(grid.n);
    int k = 0;
    while (std::getline(csv, line)) {
        if (line.empty()) continue;
        const auto tok = split_csv_line(line);
        if (tok.size() != 3) throw std::runtime_error("malformed signal row in " + stem + ".csv");
        const double t = parse_double(tok[0], stem + ".csv");
        const double expect = grid.time(k);
        const double scale = std::max(std::abs(expect), 1.0);
        if (std::abs(t - expect) > 1e-12 * scale)
            throw std::runtime_error("time column mismatch at row " + std::to_string(k));
        samples.emplace_back(parse_double(tok[1], stem + ".csv"),
                             parse_double(tok[2], stem + ".csv"));
        ++k;
    }
    if (k != grid.n) throw std::runtime_error("row count does not match metadata n");
    return Signal(grid, std::move(samples));
}

void write_matrix(const std::string& stem, const TimeFrequencyMatrix& m) {
    m.validate();
    std::ostringstream csv;
    const bool cx = m.kind == ValueKind::complex;
    for (int k = 0; k < m.rows(); ++k) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) csv << ',';
            csv << format_double(m.at(k, j).real());
            if (cx) csv << ',' << format_double(m.at(k, j).imag());
        }
        csv << '\n';
    }
    json axes = {{"time_axis", m.time_axis},
                 {"freq_axis", m.freq_axis},
                 {"value_kind", cx ? "complex" : "real"}};
    atomic_write(stem + ".csv", csv.str());
    atomic_write(stem + ".axes.json", axes.dump() + "\n");
}

TimeFrequencyMatrix read_matrix(const std::string& stem) {
    const json axes = json::parse(slurp(stem + ".axes.json"));
    TimeFrequencyMatrix m;
    m.time_axis = axes.at("time_axis").get<std::vector<double>>();
    m.freq_axis = axes.at("freq_axis").get<std::vector<double>>();
    const std::string kind = axes.at("value_kind").get<std::string>();
    m.kind = kind == "complex" ? ValueKind::complex : ValueKind::real;
    const bool cx = m.kind == ValueKind::complex;

    std::istringstream csv(slurp(stem + ".csv"));
    std::string line;
    while (std::getline(csv, line)) {
        if (line.empty()) continue;
        const auto tok = split_csv_line(line);
        const size_t expect = m.freq_axis.size() * (cx ? 2 : 1);
        if (tok.size() != expect) throw std::runtime_error("matrix row width mismatch in " + stem);
        for (size_t j = 0; j < tok.size(); j += cx ? 2 : 1) {
            const double re = parse_double(tok[j], stem + ".csv");
            const double im = cx ? parse_double(tok[j + 1], stem + ".csv") : 0.0;
            m.values.emplace_back(re, im);
        }
    }
    if (m.values.size() != m.time_axis.size() * m.freq_axis.size())
        throw std::runtime_error("matrix row count mismatch in " + stem);
    return m;
}

void write_track(const std::string& stem, const IFTrack& t) {
    std::ostringstream csv;
    csv << "t,if_value,valid\n";
    for (size_t k = 0; k < t.values.size(); ++k)
        csv << format_double(t.time_axis[k]) << ','
            << (t.valid[k] ? format_double(t.values[k]) : "nan") << ','
            << (t.valid[k] ? 1 : 0) << '\n';
    json meta = {{"threshold", t.threshold}, {"estimator", t.estimator}};
    atomic_write(stem + ".csv", csv.str());
    atomic_write(stem + ".json", meta.dump(2) + "\n");
}

void write_cone_report(const std::string& path, const ConeDecayReport& r) {
    json recs = json::array();
    for (const auto& rec : r.records) {
        json fit = {{"B", rec.B},
                    {"class", to_string(rec.fit.cls)},
                    {"poly_order", std::isfinite(rec.fit.poly_order) ? json(rec.fit.poly_order)
                                                                     : json("inf")},
                    {"exp_rate", std::isfinite(rec.fit.exp_rate) ? json(rec.fit.exp_rate)
                                                                 : json("inf")},
                    {"residual", rec.fit.residual}};
        recs.push_back(fit);
    }
    json out = {{"records", recs},
                {"critical_B_estimate", r.critical_B ? json(*r.critical_B) : json(nullptr)},
                {"monotonic", r.monotonic},
                {"violations", r.violations},
                {"thresholds",
                 {{"rate_min", r.rate_min}, {"order_max", r.order_max}, {"floor", r.floor}}},
                {"annulus", {{"radius_min", r.radius_min}, {"radius_max", r.radius_max}}},
                {"window_a", r.window_a},
                {"grid", {{"t0", r.grid.t0}, {"dt", r.grid.dt}, {"n", r.grid.n}}}};
    atomic_write(path, out.dump(2) + "\n");
}

}  // namespace tfa
