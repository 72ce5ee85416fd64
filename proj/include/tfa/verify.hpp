#pragma once

#include <string>
#include <vector>

namespace tfa {

struct IdentityRecord {
    std::string name;
    std::string statement;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::vector<IdentityRecord> records;  // sorted by identity name
    bool all_pass = false;
    double perturb = 0.0;
    double elapsed_seconds = 0.0;
};

// runs every built-in identity check whose name contains `only` (all when
// empty). `perturb` > 0 adds perturb * max|W| to each wigner matrix before
// the identity is evaluated -- a negative control that must break at least
// the marginal and moment checks.
VerificationReport run_verification(const std::string& only = {}, double perturb = 0.0);

std::string format_report_table(const VerificationReport& r);
void write_report_json(const std::string& path, const VerificationReport& r);

}  // namespace tfa
