#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pluripot {

struct VerifyConfig {
    std::uint64_t seed = 20260823ULL;
    double fd_step = 1e-3;
    int threads = 0;  // 0 = hardware concurrency
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string note;
};

struct VerifyRun {
    std::vector<CriterionResult> criteria;  // criteria 1..11
    std::string canonical;                  // canonical serialization for the determinism check
};

// One pass over criteria 1..11 (criterion 12 compares two such passes).
VerifyRun run_criteria(const VerifyConfig& cfg);

// Full report: runs the criteria twice, appends the determinism criterion,
// attaches the standing analysis notes, and reports overall pass/fail.
nlohmann::ordered_json verify_report(const VerifyConfig& cfg);

bool report_all_pass(const nlohmann::ordered_json& report);

}  // namespace pluripot
