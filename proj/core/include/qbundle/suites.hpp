#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qbundle/rational.hpp"
#include "qbundle/report.hpp"

namespace qbundle {

/// CLI-visible knobs. Zero/empty fields mean per-suite defaults; every
/// tolerance and cutoff used by a suite is surfaced here.
struct SuiteOptions {
    std::string algebra;                    ///< preset name or DSL file path
    std::optional<Rational> q;
    int max_degree = 0;
    std::optional<std::array<int, 3>> grid;
    int fiber_samples = 0;
    int equator_samples = 0;
    std::optional<double> tol;              ///< overrides every default tolerance
    bool skip_confluence = false;
};

const std::vector<std::string>& suite_names();

/// Executes one verification suite (or "all"). Check failures land in the
/// report; configuration errors (unknown suite or algebra, bad parameters)
/// throw std::invalid_argument.
Report run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace qbundle
