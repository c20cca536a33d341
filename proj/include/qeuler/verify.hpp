#pragma once

#include <json.hpp>

#include <optional>
#include <string>

namespace qeuler {

/// Grid overrides for the verification suites. Unset fields keep the default
/// desk-scale grids.
struct VerifyOptions {
    std::optional<long> f;        // twist conductor (theorem1 / theorem4)
    std::optional<unsigned> n;    // restrict to a single degree / moment
    std::optional<unsigned> n_max;  // cap the degree grid
};

struct SuiteReport {
    nlohmann::json checks = nlohmann::json::array();
    bool all_passed = true;
};

/// Runs one verification suite. Valid names: theorem1, theorem2, theorem3,
/// theorem4, genfun, padic, all. Throws DomainError on an unknown name.
/// Each check entry carries the grid point, the residual, and a status of
/// "pass", "fail", or "logged" (measured but not asserted).
SuiteReport verify_suite(const std::string& name, const VerifyOptions& options);

}  // namespace qeuler
