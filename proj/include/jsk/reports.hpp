#pragma once

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jsk/diffop.hpp"

namespace jsk {

// Parameters for one scenario run, before validation.  Unset options fall
// back to per-scenario defaults; supplying an option a scenario does not
// accept is a UsageError.  The seed only affects scenarios that sample
// random data and is ignored elsewhere.
struct ScenarioSpec {
    std::string name;
    std::optional<int> n;
    std::optional<int> degreeBound;
    std::optional<std::string> signature;  // "euclid" | "minkowski"
    std::optional<std::uint64_t> seed;
};

// One titled block of a report.  `payload` is the machine-readable form,
// `lines` the pre-rendered human form; both are deterministic for a given
// spec.
struct ReportSection {
    std::string title;
    std::string kind;  // "operator" | "diagram" | "table" | "text" | "certificate" | "solutions"
    nlohmann::ordered_json payload;
    std::vector<std::string> lines;
};

struct Report {
    std::string scenario;
    nlohmann::ordered_json params;  // resolved parameter record
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<ReportSection> sections;

    // Conjunction of all checks.
    bool verdict() const;
    // Name of the first failing check; empty when all pass.
    std::string first_failing() const;

    // One top-level record, schema version "jsk-1".
    nlohmann::ordered_json to_json() const;
    std::string render_text() const;
};

const std::vector<std::string>& scenario_names();

// Build and verify one scenario.  Throws UsageError for unknown names or
// invalid parameters; mathematical failures are reported through the
// verdict, not thrown.
Report run_scenario(const ScenarioSpec& spec);

// Report for a user-supplied operator: run one engine operation and package
// the result.  `mode` is one of cc | adjoint | solutions | parametrize;
// parametrize requires `with` (the candidate parametrization).
Report operator_report(const LinearDiffOp& op, const std::string& mode,
                       const std::optional<LinearDiffOp>& with,
                       std::optional<int> degreeBound);

}  // namespace jsk
