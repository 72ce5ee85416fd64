#include <algorithm>
#include <string>

#include "doctest.h"
#include "tfa/verify.hpp"

using namespace tfa;

namespace {
const IdentityRecord* find(const VerificationReport& r, const std::string& name) {
    for (const auto& rec : r.records)
        if (rec.name == name) return &rec;
    return nullptr;
}
}  // namespace

TEST_CASE("identity subset filtering and name ordering") {
    const auto rep = run_verification("hudson");
    REQUIRE(rep.records.size() == 2);
    CHECK(rep.records[0].name == "hudson_gaussian");
    CHECK(rep.records[1].name == "hudson_two_tone");
    CHECK(rep.all_pass);
    CHECK(std::is_sorted(rep.records.begin(), rep.records.end(),
                         [](const auto& a, const auto& b) { return a.name < b.name; }));
}

TEST_CASE("no matching identity yields an empty report") {
    const auto rep = run_verification("no_such_identity");
    CHECK(rep.records.empty());
    CHECK(rep.all_pass);  // vacuous conjunction; the cli treats it as a usage error
}

TEST_CASE("marginal identities fail under the fault-injection hook") {
    const auto clean = run_verification("marginals");
    REQUIRE(clean.records.size() == 2);
    CHECK(clean.all_pass);

    const auto broken = run_verification("marginals", 1e-3);
    REQUIRE(broken.records.size() == 2);
    CHECK_FALSE(broken.all_pass);
    CHECK_FALSE(find(broken, "marginals_freq")->pass);
    CHECK_FALSE(find(broken, "marginals_time")->pass);
    // the injected offset must dominate the clean deviation by orders
    CHECK(find(broken, "marginals_freq")->max_deviation >
          1e3 * find(clean, "marginals_freq")->max_deviation);
}

TEST_CASE("moment identities fail under the fault-injection hook") {
    const auto broken = run_verification("moment_if", 1e-3);
    REQUIRE(broken.records.size() == 5);
    for (const auto& rec : broken.records) CHECK_FALSE(rec.pass);
}

TEST_CASE("covariance identity is immune to the symmetric offset, by design") {
    // both matrices get the same peak-scaled offset, so the roll equality
    // still holds; the negative control targets marginals and moments
    const auto rep = run_verification("covariance", 1e-3);
    REQUIRE(rep.records.size() == 1);
    CHECK(rep.records[0].pass);
}

TEST_CASE("table and json rendering carry every record") {
    const auto rep = run_verification("hudson");
    const std::string table = format_report_table(rep);
    CHECK(table.find("hudson_gaussian") != std::string::npos);
    CHECK(table.find("hudson_two_tone") != std::string::npos);
    CHECK(table.find("pass") != std::string::npos);

    const std::string path = "/tmp/tfa_verify_report_test.json";
    write_report_json(path, rep);
    std::FILE* fp = std::fopen(path.c_str(), "rb");
    REQUIRE(fp != nullptr);
    char buf[4096];
    const size_t got = std::fread(buf, 1, sizeof buf - 1, fp);
    std::fclose(fp);
    std::remove(path.c_str());
    const std::string body(buf, got);
    CHECK(body.find("\"all_pass\": true") != std::string::npos);
    CHECK(body.find("hudson_two_tone") != std::string::npos);
    CHECK(body.find("statement") != std::string::npos);
}

TEST_CASE("negative perturbation is rejected") {
    CHECK_THROWS(run_verification("", -1.0));
}
