#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qbundle {

/// One verification step inside a suite. Exact symbolic checks set `exact`;
/// numeric checks set `residual` and `tolerance`. The witness carries the
/// first counterexample on failure, or a short informative note on pass.
struct CheckResult {
    std::string name;
    std::string status;  ///< "pass", "fail" or "vacuous"
    std::optional<bool> exact;
    std::optional<double> residual;
    std::optional<double> tolerance;
    std::string witness;
    double runtime_ms = 0.0;
};

/// Parameters a run actually used, echoed for reproducibility.
struct ReportEnvironment {
    std::string algebra;
    std::string q;        ///< "formal" or a rational literal
    int max_degree = 0;   ///< 0 when no symbolic cutoff applies
    std::string grid;     ///< "48x48x48" or "-" for symbolic suites
    int fiber_samples = 0;
    int equator_samples = 0;
    std::string tolerance;  ///< "defaults" or the --tol override
};

struct Report {
    int schema_version = 1;
    std::string suite;
    std::string status;  ///< worst check status: fail > vacuous > pass
    ReportEnvironment environment;
    std::vector<CheckResult> checks;

    bool passed() const { return status == "pass"; }
    void finalize();  ///< derive status from checks
};

/// Deterministic rendering: fixed key order, fixed float formatting. Two
/// runs with identical inputs differ only in the runtime_ms fields.
std::string to_json(const Report& report);

std::string to_text(const Report& report);

}  // namespace qbundle
