#include "borderlab/fixtures.hpp"

#include "borderlab/errors.hpp"

namespace borderlab {

namespace {

std::vector<Monomial> parseAll(std::size_t n, const std::vector<std::string>& texts) {
    std::vector<Monomial> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(Monomial::parse(t, n));
    return out;
}

// The twelve published generators for the shape (5,2,2,3) ideal, as tail
// coefficients over the trailing monomials [x4^3, x4^2*x5, x4*x5^2, x5^3],
// one row per leading monomial in canonical order.
DistinguishedIdeal referenceShape5223() {
    auto data = orderIdealFromShape(ShapeParams(5, 2, 2, 3));
    auto O = std::make_shared<const OrderIdealData>(std::move(data.orderIdeal));
    const std::int64_t rows[12][4] = {
        {1, 1, -1, -1},    // x1^2
        {1, -1, -1, -1},   // x1*x2
        {0, 1, 0, -1},     // x1*x3
        {-1, -1, 0, 1},    // x1*x4
        {0, -1, 0, 1},     // x1*x5
        {-1, -1, -1, 1},   // x2^2
        {1, 1, 0, 0},      // x2*x3
        {-1, 1, 0, 0},     // x2*x4
        {0, 1, 0, 0},      // x2*x5
        {-1, -1, -1, 1},   // x3^2
        {-1, 1, 0, 0},     // x3*x4
        {0, 1, 1, 0},      // x3*x5
    };
    ExplicitCoefficients coeffs;
    for (std::size_t p = 0; p < 12; ++p) {
        for (std::size_t q = 0; q < 4; ++q) {
            if (rows[p][q] != 0) {
                coeffs.values[{data.trailing[q], data.leading[p]}] = rows[p][q];
            }
        }
    }
    return buildDistinguishedIdeal(O, data.leading, data.trailing, CoefficientSource(coeffs));
}

// The efficient ideal of the three-variable running example:
// {x1^2 + x2x3 + x3^2, x1x2 + x2x3, x1x3 + x2x3 + x3^2, x2^2}.
DistinguishedIdeal runningExampleIdeal() {
    auto O = std::make_shared<const OrderIdealData>(
        lexSegmentComplementFromHilbert(3, {1, 3, 2, 0}));
    std::vector<Monomial> lm = parseAll(3, {"x1^2", "x1*x2", "x1*x3", "x2^2"});
    std::vector<Monomial> tm = parseAll(3, {"x2*x3", "x3^2"});
    ExplicitCoefficients coeffs;
    auto set = [&](const char* t, const char* b, std::int64_t c) {
        coeffs.values[{O->basisIndexOf(Monomial::parse(t, 3)),
                       O->borderIndexOf(Monomial::parse(b, 3))}] = c;
    };
    set("x2*x3", "x1^2", -1);
    set("x3^2", "x1^2", -1);
    set("x2*x3", "x1*x2", -1);
    set("x2*x3", "x1*x3", -1);
    set("x3^2", "x1*x3", -1);
    return buildDistinguishedIdeal(O, lm, tm, CoefficientSource(coeffs));
}

DistinguishedIdeal iarrobinoEmsalem(std::uint64_t seed) {
    auto O = std::make_shared<const OrderIdealData>(
        lexSegmentComplementFromHilbert(4, {1, 4, 3, 0}));
    std::vector<Monomial> lm =
        parseAll(4, {"x1^2", "x1*x2", "x1*x3", "x1*x4", "x2^2", "x2*x3", "x2*x4"});
    std::vector<Monomial> tm = parseAll(4, {"x3^2", "x3*x4", "x4^2"});
    return buildDistinguishedIdeal(O, lm, tm,
                                   CoefficientSource(SeededCoefficients{seed}));
}

DistinguishedIdeal hilb16101050(int which, std::uint64_t seed) {
    auto O = std::make_shared<const OrderIdealData>(
        lexSegmentComplementFromHilbert(6, {1, 6, 10, 10, 5, 0}));
    std::vector<std::string> lmText, tmText;
    if (which == 1) {
        lmText = {"x1^2", "x1*x2", "x1*x3", "x1*x4", "x1*x5", "x1*x6", "x2^2",
                  "x2*x3", "x2*x4", "x2*x5", "x2*x6", "x3^3", "x3^2*x4", "x3^2*x5",
                  "x3^2*x6", "x3*x4^2", "x3*x4*x5", "x3*x4*x6", "x3*x5^2", "x3*x5*x6",
                  "x3*x6^2"};
        tmText = {"x4^3", "x4^2*x5", "x4^2*x6", "x4*x5^2", "x4*x5*x6", "x4*x6^2",
                  "x5^4", "x5^3*x6", "x5^2*x6^2", "x5*x6^3", "x6^4"};
    } else if (which == 2) {
        lmText = {"x1^2", "x1*x2", "x1*x3", "x1*x4", "x1*x5", "x1*x6", "x2^2",
                  "x2*x3", "x2*x4", "x2*x5", "x2*x6", "x4^4", "x4^3*x5", "x4^3*x6",
                  "x4^2*x5^2", "x4^2*x5*x6", "x4^2*x6^2", "x4*x5^3", "x4*x5^2*x6",
                  "x4*x5*x6^2", "x4*x6^3"};
        tmText = {"x3^2", "x3*x4", "x3*x5", "x3*x6", "x5^4", "x5^3*x6", "x5^2*x6^2",
                  "x5*x6^3", "x6^4"};
    } else {
        lmText = {"x1^2", "x1*x2", "x1*x3", "x1*x4", "x1*x5", "x1*x6", "x2^2",
                  "x2*x3", "x2*x4", "x2*x5", "x2*x6", "x5^5", "x5^4*x6", "x5^3*x6^2",
                  "x5^2*x6^3", "x5*x6^4", "x6^5"};
        tmText = {"x3^2", "x3*x4", "x3*x5", "x3*x6", "x4^3", "x4^2*x5", "x4^2*x6",
                  "x4*x5^2", "x4*x5*x6", "x4*x6^2"};
    }
    return buildDistinguishedIdeal(O, parseAll(6, lmText), parseAll(6, tmText),
                                   CoefficientSource(SeededCoefficients{seed}));
}

std::vector<NamedExample> makeExamples() {
    std::vector<NamedExample> out;
    out.push_back({"d-5-2-2-3",
                   "shape (5,2,2,3), Hilbert (1,5,3,4,0); the published twelve generators",
                   false, 59, [] { return referenceShape5223(); }});
    out.push_back({"d-5-2-2-5",
                   "shape (5,2,2,5), Hilbert (1,5,3,4,5,6,0); pinned general seed",
                   false, 104, [] {
                       return buildShapeIdeal(ShapeParams(5, 2, 2, 5),
                                              CoefficientSource(SeededCoefficients{2}));
                   }});
    out.push_back({"d-6-3-2-3",
                   "shape (6,3,2,3), Hilbert (1,6,6,10,0); pinned general seed",
                   false, 165, [] {
                       return buildShapeIdeal(ShapeParams(6, 3, 2, 3),
                                              CoefficientSource(SeededCoefficients{1}));
                   }});
    out.push_back({"d-5-2-2-6",
                   "shape (5,2,2,6), Hilbert (1,5,3,4,5,6,7,0); tangent dimension "
                   "exceeds the lower bound",
                   false, 139, [] {
                       return buildShapeIdeal(ShapeParams(5, 2, 2, 6),
                                              CoefficientSource(SeededCoefficients{1}));
                   }});
    out.push_back({"d-6-3-3-4",
                   "shape (6,3,3,4), Hilbert (1,6,21,10,15,0); 7526 unknowns, heavy",
                   true, 705, [] {
                       return buildShapeIdeal(ShapeParams(6, 3, 3, 4),
                                              CoefficientSource(SeededCoefficients{1}));
                   }});
    out.push_back({"running-3-2-1",
                   "three-variable running example, Hilbert (1,3,2,0); efficient but "
                   "too small to be generic",
                   false, 18, [] { return runningExampleIdeal(); }});
    out.push_back({"iarrobino-emsalem",
                   "n = 4, Hilbert (1,4,3,0); the classical first example",
                   false, 25, [] { return iarrobinoEmsalem(1); }});
    out.push_back({"h-1-6-10-10-5-first",
                   "Hilbert (1,6,10,10,5,0), first leading/trailing choice",
                   true, 255, [] { return hilb16101050(1, 1); }});
    out.push_back({"h-1-6-10-10-5-second",
                   "Hilbert (1,6,10,10,5,0), second choice; needs the doublePrime variant",
                   true, 222, [] { return hilb16101050(2, 1); }});
    out.push_back({"h-1-6-10-10-5-third",
                   "Hilbert (1,6,10,10,5,0), third choice; efficient but not "
                   "theta-efficient, doublePrime variant",
                   true, 211, [] { return hilb16101050(3, 1); }});
    return out;
}

}  // namespace

const std::vector<NamedExample>& namedExamples() {
    static const std::vector<NamedExample> examples = makeExamples();
    return examples;
}

const NamedExample* findNamedExample(const std::string& name) {
    for (const auto& e : namedExamples()) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

DistinguishedIdeal buildNamedExample(const std::string& name) {
    const NamedExample* e = findNamedExample(name);
    if (!e) throw ArgumentError("unknown example '" + name + "' (see the examples command)");
    return e->build();
}

}  // namespace borderlab
