#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dhspan {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double limit_seconds = 0.0;

    /// "PASS  3 name (1.23 s, limit 120 s): detail"
    std::string to_line() const;
};

/// Runs the ten end-to-end acceptance criteria. A criterion that finishes
/// but overruns its time limit fails. `on_result` is called as each one
/// completes.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace dhspan
