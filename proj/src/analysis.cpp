#include "borderlab/analysis.hpp"

#include <fstream>

#include "borderlab/errors.hpp"

namespace borderlab {

AnalysisResult analyzeIdeal(const DistinguishedIdeal& I, const AnalysisOptions& options,
                            Json sourceInfo) {
    const OrderIdealData& O = I.orderIdeal();
    AnalysisResult result;

    auto check = verifyBorderBasis(I);
    if (!check.isBorderBasis) {
        throw InternalError("distinguished prebasis failed the border basis check");
    }

    Field field = options.field ? *options.field : defaultField(I.mu() * I.nu());
    if (!field.rational && !isPrime(field.prime)) {
        throw ArgumentError("field modulus " + std::to_string(field.prime) + " is not prime");
    }

    if (options.dumpMatrixPath) {
        auto syzygies = linearSyzygyBasis(I);
        TangentSystem sys = tangentRelations(I, syzygies);
        std::ofstream out(*options.dumpMatrixPath);
        if (!out) throw ArgumentError("cannot write matrix dump: " + *options.dumpMatrixPath);
        sys.relations.dumpCoordinate(out);
    }

    result.genericity = genericityVerdict(I, options.variant, field);

    Json report;
    report["source"] = std::move(sourceInfo);
    {
        Json ideal;
        ideal["n"] = O.n();
        ideal["mu"] = O.mu();
        ideal["nu"] = O.nu();
        ideal["lambda"] = I.lambda();
        ideal["tau"] = I.tau();
        ideal["hilbert"] = O.hilbertFunction();
        ideal["distinguished_pairs"] = I.lambda() * I.tau();
        if (I.seed()) ideal["seed"] = *I.seed();
        report["ideal"] = std::move(ideal);
    }
    report["psi"] = predictedSyzygyCount(I);
    report["border_basis_verified"] = true;
    report["genericity"] = genericityReportToJson(result.genericity, O);

    if (options.checkEfficiency || options.checkExactEfficiency) {
        EfficiencyReport eff = thetaEfficiency(I);
        if (options.checkExactEfficiency) {
            try {
                eff.exactEfficient = exactEfficiency(I, options.buchbergerBudget);
            } catch (const BudgetExceededError&) {
                result.efficiencyInconclusive = true;
            }
        }
        result.efficiency = eff;
        Json effJson = efficiencyReportToJson(eff);
        if (result.efficiencyInconclusive) effJson["exact_efficient"] = "inconclusive";
        report["efficiency"] = std::move(effJson);
    }

    switch (result.genericity.verdict) {
        case Verdict::generic: result.exitCode = 0; break;
        case Verdict::notShapeGeneric: result.exitCode = 2; break;
        case Verdict::inconclusive: result.exitCode = 3; break;
    }
    if (result.efficiencyInconclusive) result.exitCode = 3;
    result.report = std::move(report);
    return result;
}

}  // namespace borderlab
