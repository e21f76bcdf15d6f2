#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

namespace octmod {

/// Outcome of one property check.  Discovery checks probe statements that are
/// expected to fail (they document observed behaviour); their failures are
/// reported but never count as hard failures.
enum class CheckStatus { Pass, Fail, DiscoveryFail };

[[nodiscard]] inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "discovery-fail";
    }
}

struct IdentityReport {
    std::string name;
    int trials = 0;
    std::uint64_t seed = 0;
    CheckStatus status = CheckStatus::Pass;
    /// Null unless status is a failure; then a JSON object describing the
    /// first failing trial (inputs and mismatching values).
    nlohmann::json counterexample = nullptr;
    /// Optional free-form annotation (empty when absent).
    std::string note;

    [[nodiscard]] bool passed() const { return status == CheckStatus::Pass; }
    [[nodiscard]] bool hard_failure() const { return status == CheckStatus::Fail; }
};

} // namespace octmod
