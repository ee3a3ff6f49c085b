#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "borderlab/analysis.hpp"
#include "borderlab/errors.hpp"
#include "borderlab/fixtures.hpp"

namespace {

using namespace borderlab;

std::vector<std::size_t> parseSizeList(const std::string& text, char sep = ',') {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(sep, pos);
        if (next == std::string::npos) next = text.size();
        out.push_back(std::stoul(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

ShapeParams parseShape(const std::string& text) {
    auto parts = parseSizeList(text);
    if (parts.size() != 4) throw ArgumentError("expected --shape n,kappa,r,s");
    return ShapeParams(parts[0], parts[1], static_cast<long>(parts[2]),
                       static_cast<long>(parts[3]));
}

ScanRange parseRange(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        std::size_t v = std::stoul(text);
        return {v, v};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
}

Field parseField(const std::string& text) {
    if (text == "q" || text == "Q") return Field::Q();
    if (text.rfind("gf:", 0) == 0) {
        std::uint64_t p = std::stoull(text.substr(3));
        if (!isPrime(p)) throw ArgumentError("field modulus " + std::to_string(p) + " is not prime");
        return Field::GF(p);
    }
    throw ArgumentError("bad --field value '" + text + "' (use q or gf:PRIME)");
}

SeededCoefficients parseRng(const std::string& text, std::uint64_t seed) {
    SeededCoefficients out;
    out.seed = seed;
    if (text == "ternary") {
        out.kind = SeededCoefficients::Kind::ternary;
    } else if (text.rfind("bernoulli:", 0) == 0) {
        out.kind = SeededCoefficients::Kind::bernoulli;
        out.p = std::stod(text.substr(10));
        if (out.p < 0.0 || out.p > 1.0) throw ArgumentError("bernoulli probability out of [0,1]");
    } else {
        throw ArgumentError("bad --rng value '" + text + "' (use ternary or bernoulli:P)");
    }
    return out;
}

std::vector<Monomial> parseMonomialList(const std::string& text, std::size_t n) {
    std::vector<Monomial> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        std::string piece = text.substr(pos, next - pos);
        if (!piece.empty()) out.push_back(Monomial::parse(piece, n));
        pos = next + 1;
    }
    return out;
}

struct SourceArgs {
    std::string example;
    std::string shape;
    std::string idealFile;
    std::string hilbert;
    std::string lm;
    std::string tm;
    std::uint64_t seed = 0;
    std::string rng = "ternary";
};

DistinguishedIdeal buildFromSource(const SourceArgs& src, Json& sourceInfo) {
    int given = (!src.example.empty()) + (!src.shape.empty()) + (!src.idealFile.empty()) +
                (!src.hilbert.empty());
    if (given != 1) {
        throw ArgumentError("need exactly one of --example, --shape, --ideal, --hilbert");
    }
    if (!src.example.empty()) {
        sourceInfo["kind"] = "example";
        sourceInfo["name"] = src.example;
        return buildNamedExample(src.example);
    }
    if (!src.idealFile.empty()) {
        sourceInfo["kind"] = "file";
        sourceInfo["path"] = src.idealFile;
        return loadIdealFile(src.idealFile);
    }
    SeededCoefficients rng = parseRng(src.rng, src.seed);
    if (!src.shape.empty()) {
        ShapeParams shape = parseShape(src.shape);
        sourceInfo["kind"] = "shape";
        sourceInfo["shape"] = {shape.n, shape.kappa, shape.r, shape.s};
        sourceInfo["seed"] = src.seed;
        return buildShapeIdeal(shape, CoefficientSource(rng));
    }
    // explicit Hilbert function with leading/trailing monomial lists
    auto h = parseSizeList(src.hilbert);
    if (h.empty()) throw ArgumentError("empty --hilbert");
    if (src.lm.empty() || src.tm.empty()) {
        throw ArgumentError("--hilbert needs --lm and --tm monomial lists");
    }
    // infer n: the number of degree-1 monomials of a lex-segment complement
    std::size_t n = h.size() > 1 ? h[1] : 0;
    if (n == 0) throw ArgumentError("--hilbert needs h_1 >= 1 to fix the variable count");
    auto O = std::make_shared<const OrderIdealData>(lexSegmentComplementFromHilbert(n, h));
    sourceInfo["kind"] = "hilbert";
    sourceInfo["hilbert"] = h;
    sourceInfo["seed"] = src.seed;
    return buildDistinguishedIdeal(O, parseMonomialList(src.lm, n), parseMonomialList(src.tm, n),
                                   CoefficientSource(rng));
}

int runAnalyze(const SourceArgs& src, const std::string& fieldText, const std::string& variantText,
               bool checkEff, bool checkExactEff, const std::string& dumpPath,
               std::size_t budget, const std::string& outPath) {
    AnalysisOptions options;
    if (!fieldText.empty()) options.field = parseField(fieldText);
    if (variantText == "prime") {
        options.variant = DeltaVariant::prime;
    } else if (variantText == "double-prime") {
        options.variant = DeltaVariant::doublePrime;
    } else {
        throw ArgumentError("bad --variant value (use prime or double-prime)");
    }
    options.checkEfficiency = checkEff;
    options.checkExactEfficiency = checkExactEff;
    if (!dumpPath.empty()) options.dumpMatrixPath = dumpPath;
    options.buchbergerBudget = budget;

    Json sourceInfo;
    DistinguishedIdeal I = buildFromSource(src, sourceInfo);
    AnalysisResult result = analyzeIdeal(I, options, std::move(sourceInfo));
    std::string text = result.report.dump(2) + "\n";
    if (outPath.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(outPath);
        if (!out) throw ArgumentError("cannot write report: " + outPath);
        out << text;
    }
    return result.exitCode;
}

int runScan(const std::string& nText, const std::string& kappaText, const std::string& rText,
            const std::string& sText, const std::string& format, const std::string& outPath) {
    auto reports = plausibleScan(parseRange(nText), parseRange(kappaText), parseRange(rText),
                                 parseRange(sText));
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!outPath.empty()) {
        file.open(outPath);
        if (!file) throw ArgumentError("cannot write scan output: " + outPath);
        os = &file;
    }
    if (format == "csv") {
        *os << plausibilityCsvHeader() << '\n';
        for (const auto& rep : reports) *os << plausibilityCsvRow(rep) << '\n';
    } else if (format == "json") {
        Json arr = Json::array();
        for (const auto& rep : reports) arr.push_back(plausibilityReportToJson(rep));
        *os << arr.dump(2) << '\n';
    } else {
        throw ArgumentError("bad --format value (use csv or json)");
    }
    return 0;
}

int runGenerate(const SourceArgs& src, const std::string& outPath) {
    Json sourceInfo;
    DistinguishedIdeal I = buildFromSource(src, sourceInfo);
    if (outPath.empty()) {
        std::cout << idealToJson(I).dump(2) << '\n';
    } else {
        saveIdealFile(I, outPath);
    }
    return 0;
}

int runExamples() {
    for (const auto& e : namedExamples()) {
        std::cout << e.name << (e.extended ? "  [extended]" : "") << "\n    " << e.description;
        if (e.expectedDimension) {
            std::cout << " (tangent dimension " << *e.expectedDimension << ")";
        }
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"borderlab: distinguished border-basis ideals, tangent-space dimensions, "
                 "genericity certification, and plausibility scans"};
    app.require_subcommand(1);

    SourceArgs src;
    std::string fieldText, dumpPath, outPath;
    std::string variantText = "prime";
    bool checkEff = false, checkExactEff = false;
    std::size_t budget = 200000;

    auto addSourceFlags = [&](CLI::App* cmd) {
        cmd->add_option("--example", src.example, "named example (see the examples command)");
        cmd->add_option("--shape", src.shape, "shape parameters n,kappa,r,s");
        cmd->add_option("--ideal", src.idealFile, "ideal JSON file");
        cmd->add_option("--hilbert", src.hilbert, "Hilbert function h_0,h_1,...,0");
        cmd->add_option("--lm", src.lm, "leading monomials, comma separated");
        cmd->add_option("--tm", src.tm, "trailing monomials, comma separated");
        cmd->add_option("--seed", src.seed, "coefficient seed");
        cmd->add_option("--rng", src.rng, "ternary (default) or bernoulli:P");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full genericity analysis of one ideal");
    addSourceFlags(analyze);
    analyze->add_option("--field", fieldText, "q or gf:PRIME (default: q up to 2000 unknowns)");
    analyze->add_option("--variant", variantText, "prime (default) or double-prime");
    analyze->add_flag("--check-efficiency", checkEff, "run the theta-efficiency screen");
    analyze->add_flag("--check-exact-efficiency", checkExactEff,
                      "run the Groebner-based exact efficiency test");
    analyze->add_option("--dump-matrix", dumpPath, "write the tangent relation matrix (row col value)");
    analyze->add_option("--budget", budget, "Buchberger S-pair budget");
    analyze->add_option("--out", outPath, "write the JSON report here instead of stdout");

    std::string nText = "5..5", kappaText = "2..2", rText = "2..2", sText = "3..3";
    std::string format = "csv";
    CLI::App* scan = app.add_subcommand("scan", "plausibility table over shape ranges");
    scan->add_option("--n", nText, "range a..b or single value");
    scan->add_option("--kappa", kappaText, "range a..b or single value");
    scan->add_option("--r", rText, "range a..b or single value");
    scan->add_option("--s", sText, "range a..b or single value");
    scan->add_option("--format", format, "csv (default) or json");
    scan->add_option("--out", outPath, "write output here instead of stdout");

    CLI::App* generate = app.add_subcommand("generate", "write a reproducible ideal JSON file");
    addSourceFlags(generate);
    generate->add_option("--out", outPath, "output file (default: stdout)");

    app.add_subcommand("examples", "list the named example fixtures");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            return runAnalyze(src, fieldText, variantText, checkEff, checkExactEff, dumpPath,
                              budget, outPath);
        }
        if (scan->parsed()) return runScan(nText, kappaText, rText, sText, format, outPath);
        if (generate->parsed()) return runGenerate(src, outPath);
        return runExamples();
    } catch (const borderlab::BudgetExceededError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
