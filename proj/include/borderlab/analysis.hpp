#pragma once

#include <optional>
#include <string>

#include "borderlab/json_io.hpp"

namespace borderlab {

struct AnalysisOptions {
    DeltaVariant variant = DeltaVariant::prime;
    std::optional<Field> field;  // absent: Q up to 2000 unknowns, then GF(32713)
    bool checkEfficiency = false;
    bool checkExactEfficiency = false;
    std::optional<std::string> dumpMatrixPath;
    std::size_t buchbergerBudget = 200000;
};

struct AnalysisResult {
    GenericityReport genericity;
    std::optional<EfficiencyReport> efficiency;
    bool efficiencyInconclusive = false;  // Buchberger budget ran out
    Json report;
    // 0 generic, 2 not generic, 3 inconclusive or budget exhausted
    int exitCode = 0;
};

// Runs the full pipeline on a verified distinguished ideal and assembles the
// analysis report.  `sourceInfo` is echoed into the report unchanged.
AnalysisResult analyzeIdeal(const DistinguishedIdeal& I, const AnalysisOptions& options,
                            Json sourceInfo);

}  // namespace borderlab
