#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lck/dsl/workspace.hpp"

namespace lck::dsl {

struct RunOptions {
    bool oracle = false;
    unsigned oracle_points = 0;  // per symbol; 0 means degree + 1
    std::uint64_t seed = 0;
    bool timing = false;
};

struct OracleSummary {
    std::size_t residuals = 0;
    std::uint64_t points = 0;
    std::size_t disagreements = 0;
    bool certified = true;
    bool agree() const { return disagreements == 0; }
};

struct LocatedWitness {
    std::string location;
    Witness witness;
};

struct CheckResult {
    CheckStmt stmt;
    Report report;
    std::optional<LocatedWitness> witness;
    std::optional<OracleSummary> oracle;
    std::optional<double> millis;

    Verdict verdict() const { return report.verdict(); }
};

// Failures inside a check become verdict error and do not stop later checks.
CheckResult run_check(const Workspace& ws, const CheckStmt& stmt, const RunOptions& opts = {});
std::vector<CheckResult> run(const Workspace& ws, const RunOptions& opts = {});

// 0 when every verdict is pass, else 1.
int exit_code(const std::vector<CheckResult>& results);

std::string render_text(const CheckResult& r);
// One line of JSON, schema lck-report/1.
std::string render_json(const CheckResult& r);

// Known check kinds with their argument signature.
const std::vector<std::pair<std::string, std::string>>& check_kinds();

}  // namespace lck::dsl
