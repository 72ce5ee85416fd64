#include <cmath>
#include <utility>
#include <vector>

#include "doctest.h"
#include "tfa/cone.hpp"
#include "tfa/generators.hpp"
#include "tfa/stft.hpp"

using namespace tfa;

namespace {
std::vector<std::pair<double, double>> synthetic_profile(double (*law)(double)) {
    std::vector<std::pair<double, double>> prof;
    for (int i = 0; i < 8; ++i) {
        const double r = 2.0 * std::pow(10.0 / 2.0, i / 7.0);  // geometric 2..10
        prof.push_back({r, law(r)});
    }
    return prof;
}
}  // namespace

TEST_CASE("fit_decay recovers synthetic decay laws") {
    SUBCASE("cubic polynomial decay") {
        const auto fit = fit_decay(synthetic_profile([](double r) { return std::pow(r, -3.0); }), 1.0);
        CHECK(fit.cls == DecayClass::polynomial);
        CHECK(std::abs(fit.poly_order - 3.0) < 0.3);
    }
    SUBCASE("exponential decay is rapid") {
        const auto fit = fit_decay(synthetic_profile([](double r) { return std::exp(-r); }), 1.0);
        CHECK(fit.cls == DecayClass::rapid);
        CHECK(std::abs(fit.exp_rate - 1.0) < 0.1);
    }
    SUBCASE("flat profile does not decay") {
        const auto fit = fit_decay(synthetic_profile([](double) { return 0.5; }), 1.0);
        CHECK(fit.cls == DecayClass::non_decaying);
    }
    SUBCASE("everything under the floor counts as rapid") {
        const auto fit = fit_decay(synthetic_profile([](double) { return 1e-15; }), 1.0);
        CHECK(fit.cls == DecayClass::rapid);
        CHECK(std::isinf(fit.exp_rate));
    }
    SUBCASE("too few shells is an error") {
        std::vector<std::pair<double, double>> tiny{{2.0, 1.0}, {3.0, 0.5}, {4.0, 0.2}};
        CHECK_THROWS(fit_decay(tiny, 1.0));
    }
}

TEST_CASE("cone spec and slope-list validation") {
    CHECK_THROWS(ConeSpec{0.0, 1.0, 2.0}.validate());
    CHECK_THROWS(ConeSpec{1.0, 2.0, 1.0}.validate());
    const Grid g{-4.0, 1.0 / 32, 256};
    const Signal f = gen_gaussian(g, GaussianParams{1.0});
    const Window w = gaussian_window(2.0, g.dt);
    CHECK_THROWS(classify_vcon(f, w, {1.0, 2.0}));        // too few
    CHECK_THROWS(classify_vcon(f, w, {1.0, 3.0, 2.0}));   // not ascending
}

TEST_CASE("gaussian is rapid in every cone; no critical slope is reported") {
    const Grid g{-4.0, 1.0 / 32, 256};
    const Signal f = gen_gaussian(g, GaussianParams{1.0});
    const auto rep = classify_vcon(f, gaussian_window(2.0, g.dt), {0.5, 1.0, 2.0, 4.0});
    for (const auto& rec : rep.records) CHECK(rec.fit.cls == DecayClass::rapid);
    CHECK(!rep.critical_B.has_value());
    CHECK(rep.monotonic);
    CHECK(rep.violations.empty());
}

TEST_CASE("chirp cone classification: wide cones see the ridge, narrow ones do not") {
    const Grid g{-16.0, 1.0 / 32, 1024};
    const Signal ch = gen_chirp(g, ChirpParams{2.0});  // IF slope 2
    const auto rep = classify_vcon(ch, gaussian_window(2.0, g.dt),
                                   {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0});
    REQUIRE(rep.records.size() == 8);
    CHECK(rep.records.front().fit.cls != DecayClass::rapid);
    CHECK(rep.records.back().fit.cls == DecayClass::rapid);
    REQUIRE(rep.critical_B.has_value());
    CHECK(std::abs(*rep.critical_B - 2.0) / 2.0 < 0.15);
    CHECK(rep.monotonic);
}

TEST_CASE("classification is stable under doubling or halving the window width") {
    const Grid g{-16.0, 1.0 / 32, 1024};
    const Signal ch = gen_chirp(g, ChirpParams{2.0});
    const std::vector<double> slopes{0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0};

    const auto base = classify_vcon(ch, gaussian_window(2.0, g.dt), slopes);
    REQUIRE(base.critical_B.has_value());
    for (const double wa : {1.0, 4.0}) {
        const auto rep = classify_vcon(ch, gaussian_window(wa, g.dt), slopes);
        for (size_t i = 0; i < slopes.size(); ++i) {
            const bool base_rapid = base.records[i].fit.cls == DecayClass::rapid;
            const bool rep_rapid = rep.records[i].fit.cls == DecayClass::rapid;
            CHECK(base_rapid == rep_rapid);
        }
        REQUIRE(rep.critical_B.has_value());
        CHECK(std::abs(*rep.critical_B - *base.critical_B) / *base.critical_B <= 0.20);
    }
}

TEST_CASE("report carries its thresholds and geometry") {
    const Grid g{-4.0, 1.0 / 32, 256};
    const auto rep =
        classify_vcon(gen_gaussian(g, GaussianParams{1.0}), gaussian_window(2.0, g.dt),
                      {1.0, 2.0, 3.0});
    CHECK(rep.rate_min == 0.1);
    CHECK(rep.order_max == 12.0);
    CHECK(rep.floor == 1e-12);
    CHECK(rep.radius_max == doctest::Approx(0.8 * 4.0));
    CHECK(rep.radius_min == doctest::Approx(0.7 * 0.8 * 4.0));
    CHECK(rep.window_a == 2.0);
}
