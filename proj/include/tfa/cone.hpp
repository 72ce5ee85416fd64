#pragma once

#include <optional>
#include <string>

#include "tfa/grid.hpp"
#include "tfa/stft.hpp"
#include "tfa/tf_matrix.hpp"

namespace tfa {

// cone |eta| > B |x| intersected with the annulus
// radius_min <= <(x, eta)> < radius_max, radius = sqrt(1 + x^2 + eta^2).
struct ConeSpec {
    double slope_B = 1.0;
    double radius_min = 0.0;
    double radius_max = 0.0;

    void validate() const {
        if (!(slope_B > 0.0)) throw std::invalid_argument("cone: slope_B must be > 0");
        if (!(0.0 < radius_min && radius_min < radius_max))
            throw std::invalid_argument("cone: need 0 < radius_min < radius_max");
    }
};

enum class DecayClass { rapid, polynomial, non_decaying };

std::string to_string(DecayClass c);

struct DecayFit {
    double poly_order = 0.0;
    double exp_rate = 0.0;
    double residual = 0.0;
    DecayClass cls = DecayClass::non_decaying;
};

struct SlopeRecord {
    double B = 0.0;
    DecayFit fit;
};

struct ConeDecayReport {
    std::vector<SlopeRecord> records;  // ascending in B
    std::optional<double> critical_B;
    bool monotonic = true;             // class may flip to rapid at most once
    std::vector<double> violations;    // slopes where rapid flipped back
    // fixed thresholds, documented in the report output
    double rate_min = 0.1;
    double order_max = 12.0;
    double floor = 1e-12;
    double radius_min = 0.0;
    double radius_max = 0.0;
    Grid grid;
    double window_a = 0.0;
};

// decay-law proxies; honest finite-data stand-ins for "decays rapidly":
// measured exponential rate >= rate_min, or every shell below floor * peak.
inline constexpr double kRateMin = 0.1;
inline constexpr double kOrderMax = 12.0;
inline constexpr double kSupFloor = 1e-12;
inline constexpr double kRadiusMaxFrac = 0.8;   // of the grid's half extent
inline constexpr double kRadiusMinFrac = 0.7;   // of radius_max
inline constexpr int kDefaultShells = 6;

// max |V| over cone-and-shell grid points for geometric shells between
// radius_min and radius_max; x measured from `center`. empty shells are
// skipped. throws if every shell is empty.
std::vector<std::pair<double, double>> cone_sup_profile(const TimeFrequencyMatrix& V,
                                                        const ConeSpec& cone, int n_shells,
                                                        double center);

// least-squares fits of log sup against radius (exp rate) and log radius
// (poly order); classification by whichever fit explains the profile better.
DecayFit fit_decay(const std::vector<std::pair<double, double>>& profile, double peak);

// per-slope classification of the signal's stft plus a bisection estimate of
// the critical slope where the class flips to rapid.
ConeDecayReport classify_vcon(const Signal& f, const Window& w, std::vector<double> slopes,
                              int n_shells = kDefaultShells);

}  // namespace tfa
