#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "jsk/diffop.hpp"
#include "jsk/errors.hpp"
#include "jsk/reports.hpp"

namespace {

// Shared convention: exit 0 when every check passes, exit 1 when a
// mathematical check fails, exit 2 for usage and parse problems.
constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::optional<std::uint64_t> seed_from_env() {
    const char* raw = std::getenv("JSK_SEED");
    if (!raw || !*raw) return std::nullopt;
    std::string text(raw);
    std::uint64_t value = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '9')
            throw jsk::UsageError("JSK_SEED must be an unsigned integer");
        std::uint64_t digit = static_cast<std::uint64_t>(ch - '0');
        if (value > (UINT64_MAX - digit) / 10)
            throw jsk::UsageError("JSK_SEED must be an unsigned integer");
        value = value * 10 + digit;
    }
    return value;
}

int emit(const jsk::Report& report, bool json) {
    if (json)
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.render_text();
    if (!report.verdict()) {
        std::cerr << "check failed: " << report.first_failing() << "\n";
        return kExitCheckFailed;
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic checks for linear constant-coefficient "
                 "differential operators"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::simple);

    // --- run -----------------------------------------------------------
    auto* run = app.add_subcommand("run", "run a named scenario report");
    std::string scenario;
    bool runAll = false;
    std::optional<int> n, degreeBound;
    std::optional<std::string> signature;
    bool runJson = false;
    auto* scenarioArg =
        run->add_option("scenario", scenario, "scenario name");
    run->add_flag("--all", runAll, "run every scenario");
    run->add_option("--n", n, "number of independent variables");
    run->add_option("--degree-bound", degreeBound,
                    "polynomial degree bound where applicable");
    run->add_option("--signature", signature,
                    "metric signature (euclid or minkowski)")
        ->check(CLI::IsMember({"euclid", "minkowski"}));
    run->add_flag("--json", runJson, "emit the report as JSON");

    // --- op ------------------------------------------------------------
    auto* opCmd =
        app.add_subcommand("op", "analyze an operator loaded from JSON");
    std::string opPath, mode, withPath;
    std::optional<int> opDegreeBound;
    bool opJson = false;
    opCmd->add_option("path", opPath, "operator JSON file")->required();
    opCmd->add_option("--mode", mode,
                      "cc | adjoint | solutions | parametrize")
        ->required();
    opCmd->add_option("--with", withPath,
                      "second operator file (parametrize mode)");
    opCmd->add_option("--degree-bound", opDegreeBound,
                      "degree bound for solutions mode");
    opCmd->add_flag("--json", opJson, "emit the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help and friends
            return app.exit(e);
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        std::optional<std::uint64_t> seed = seed_from_env();

        if (run->parsed()) {
            if (!runAll && scenarioArg->empty())
                throw jsk::UsageError("run needs a scenario name or --all");
            std::vector<std::string> targets;
            if (runAll) {
                if (!scenarioArg->empty())
                    throw jsk::UsageError(
                        "--all cannot be combined with a scenario name");
                if (n || degreeBound || signature)
                    throw jsk::UsageError(
                        "--all does not take scenario options");
                targets = jsk::scenario_names();
            } else {
                targets.push_back(scenario);
            }
            int worst = kExitPass;
            for (size_t i = 0; i < targets.size(); ++i) {
                jsk::ScenarioSpec spec;
                spec.name = targets[i];
                spec.n = n;
                spec.degreeBound = degreeBound;
                spec.signature = signature;
                spec.seed = seed;
                jsk::Report report = jsk::run_scenario(spec);
                if (i) std::cout << "\n";
                worst = std::max(worst, emit(report, runJson));
            }
            return worst;
        }

        jsk::LinearDiffOp op = jsk::load_diffop(opPath);
        std::optional<jsk::LinearDiffOp> with;
        if (!withPath.empty()) with = jsk::load_diffop(withPath);
        jsk::Report report =
            jsk::operator_report(op, mode, with, opDegreeBound);
        return emit(report, opJson);
    } catch (const jsk::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const jsk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
