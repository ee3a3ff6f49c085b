#include "borderlab/json_io.hpp"

#include <fstream>
#include <sstream>

#include "borderlab/errors.hpp"

namespace borderlab {

Json bigIntToJson(const mpz_class& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Json orderIdealToJson(const OrderIdealData& O) {
    Json j;
    j["n"] = O.n();
    j["hilbert"] = O.hilbertFunction();
    Json basis = Json::array();
    for (const auto& m : O.basis()) basis.push_back(m.str());
    j["basis"] = std::move(basis);
    Json border = Json::array();
    for (const auto& m : O.border()) border.push_back(m.str());
    j["border"] = std::move(border);
    return j;
}

OrderIdealData orderIdealFromJson(const Json& j, const std::string& pointer) {
    if (!j.is_object()) throw SchemaError(pointer, "order ideal must be an object");
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 1) {
        throw SchemaError(pointer + "/n", "missing or invalid variable count");
    }
    std::size_t n = j["n"].get<std::size_t>();
    OrderIdealData O = [&] {
        if (j.contains("basis")) {
            if (!j["basis"].is_array()) throw SchemaError(pointer + "/basis", "basis must be an array");
            std::vector<Monomial> basis;
            for (std::size_t k = 0; k < j["basis"].size(); ++k) {
                const auto& entry = j["basis"][k];
                if (!entry.is_string()) {
                    throw SchemaError(pointer + "/basis/" + std::to_string(k), "monomial must be a string");
                }
                try {
                    basis.push_back(Monomial::parse(entry.get<std::string>(), n));
                } catch (const std::exception& e) {
                    throw SchemaError(pointer + "/basis/" + std::to_string(k), e.what());
                }
            }
            try {
                return OrderIdealData::fromMonomials(n, std::move(basis));
            } catch (const std::exception& e) {
                throw SchemaError(pointer + "/basis", e.what());
            }
        }
        if (j.contains("hilbert")) {
            if (!j["hilbert"].is_array()) {
                throw SchemaError(pointer + "/hilbert", "hilbert must be an array");
            }
            std::vector<std::size_t> h;
            for (const auto& entry : j["hilbert"]) {
                if (!entry.is_number_integer() || entry.get<long long>() < 0) {
                    throw SchemaError(pointer + "/hilbert", "hilbert entries must be nonnegative");
                }
                h.push_back(entry.get<std::size_t>());
            }
            try {
                return lexSegmentComplementFromHilbert(n, h);
            } catch (const std::exception& e) {
                throw SchemaError(pointer + "/hilbert", e.what());
            }
        }
        throw SchemaError(pointer, "order ideal needs a basis or a hilbert function");
    }();
    if (j.contains("border")) {
        if (!j["border"].is_array() || j["border"].size() != O.nu()) {
            throw SchemaError(pointer + "/border",
                              "border does not match the computed border (expected " +
                                  std::to_string(O.nu()) + " monomials)");
        }
        for (std::size_t k = 0; k < j["border"].size(); ++k) {
            Monomial m = Monomial::parse(j["border"][k].get<std::string>(), n);
            if (!O.inBorder(m)) {
                throw SchemaError(pointer + "/border/" + std::to_string(k),
                                  m.str() + " is not a boundary monomial of this order ideal");
            }
        }
    }
    return O;
}

Json idealToJson(const DistinguishedIdeal& I) {
    const OrderIdealData& O = I.orderIdeal();
    Json j;
    j["order_ideal"] = orderIdealToJson(O);
    Json lm = Json::array();
    for (std::size_t jj : I.leading()) lm.push_back(O.b(jj).str());
    j["leading"] = std::move(lm);
    Json tm = Json::array();
    for (std::size_t ii : I.trailing()) tm.push_back(O.t(ii).str());
    j["trailing"] = std::move(tm);
    Json coeffs = Json::array();
    for (std::size_t jj : I.leading()) {
        for (std::size_t ii : I.trailing()) {
            std::int64_t c = I.coefficient(ii, jj);
            if (c == 0) continue;
            Json entry;
            entry["t"] = O.t(ii).str();
            entry["b"] = O.b(jj).str();
            entry["c"] = c;
            coeffs.push_back(std::move(entry));
        }
    }
    j["coefficients"] = std::move(coeffs);
    if (I.seed()) j["seed"] = *I.seed();
    return j;
}

DistinguishedIdeal idealFromJson(const Json& j) {
    if (!j.is_object()) throw SchemaError("", "ideal file must be a JSON object");
    if (!j.contains("order_ideal")) throw SchemaError("/order_ideal", "missing order ideal");
    auto O = std::make_shared<const OrderIdealData>(orderIdealFromJson(j["order_ideal"]));

    auto readMonomialList = [&](const char* key) {
        if (!j.contains(key) || !j[key].is_array()) {
            throw SchemaError(std::string("/") + key, "missing monomial list");
        }
        std::vector<Monomial> out;
        for (std::size_t k = 0; k < j[key].size(); ++k) {
            const auto& entry = j[key][k];
            if (!entry.is_string()) {
                throw SchemaError(std::string("/") + key + "/" + std::to_string(k),
                                  "monomial must be a string");
            }
            try {
                out.push_back(Monomial::parse(entry.get<std::string>(), O->n()));
            } catch (const std::exception& e) {
                throw SchemaError(std::string("/") + key + "/" + std::to_string(k), e.what());
            }
        }
        return out;
    };
    std::vector<Monomial> lm = readMonomialList("leading");
    std::vector<Monomial> tm = readMonomialList("trailing");

    ExplicitCoefficients coeffs;
    if (j.contains("coefficients")) {
        if (!j["coefficients"].is_array()) {
            throw SchemaError("/coefficients", "coefficients must be an array");
        }
        for (std::size_t k = 0; k < j["coefficients"].size(); ++k) {
            const std::string at = "/coefficients/" + std::to_string(k);
            const auto& entry = j["coefficients"][k];
            if (!entry.is_object() || !entry.contains("t") || !entry.contains("b") ||
                !entry.contains("c") || !entry["c"].is_number_integer()) {
                throw SchemaError(at, "coefficient entries need string t, string b, integer c");
            }
            Monomial t, b;
            try {
                t = Monomial::parse(entry["t"].get<std::string>(), O->n());
                b = Monomial::parse(entry["b"].get<std::string>(), O->n());
            } catch (const std::exception& e) {
                throw SchemaError(at, e.what());
            }
            std::size_t i = O->basisIndexOf(t);
            std::size_t jj = O->borderIndexOf(b);
            if (i == 0) throw SchemaError(at + "/t", t.str() + " is not a basis monomial");
            if (jj == 0) throw SchemaError(at + "/b", b.str() + " is not a boundary monomial");
            auto key = std::make_pair(i, jj);
            if (coeffs.values.count(key)) throw SchemaError(at, "duplicate coefficient key");
            coeffs.values[key] = entry["c"].get<std::int64_t>();
        }
    }
    try {
        DistinguishedIdeal I = buildDistinguishedIdeal(std::move(O), lm, tm, CoefficientSource(coeffs));
        if (j.contains("seed") && j["seed"].is_number_unsigned()) {
            I.annotateSeed(j["seed"].get<std::uint64_t>());
        }
        return I;
    } catch (const SchemaError&) {
        throw;
    } catch (const std::exception& e) {
        throw SchemaError("", e.what());
    }
}

DistinguishedIdeal loadIdealFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open ideal file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SchemaError("", std::string("invalid JSON: ") + e.what());
    }
    return idealFromJson(j);
}

void saveIdealFile(const DistinguishedIdeal& I, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ArgumentError("cannot write ideal file: " + path);
    out << idealToJson(I).dump(2) << '\n';
}

Json tangentReportToJson(const TangentReport& rep) {
    Json j;
    j["mu"] = rep.mu;
    j["nu"] = rep.nu;
    j["rank"] = rep.rank;
    j["field"] = rep.field.str();
    j["dimension"] = rep.dimension;
    Json byDeg;
    for (const auto& [d, c] : rep.relationsByDegree) byDeg[std::to_string(d)] = c;
    j["relations_by_degree"] = std::move(byDeg);
    return j;
}

Json deltaFamilyToJson(const DeltaFamily& fam, const OrderIdealData& O) {
    Json j;
    j["variant"] = fam.variant == DeltaVariant::prime ? "prime" : "doublePrime";
    Json rows = Json::array();
    for (const auto& pv : fam.perVariable) {
        Json row;
        row["alpha"] = pv.alpha;
        row["b"] = O.b(pv.borderIndex).str();
        row["t"] = O.t(pv.basisIndex).str();
        row["b_leading"] = pv.witnessLeading;
        Json ms = Json::array();
        for (const auto& m : pv.monomials) ms.push_back(m.str());
        row["monomials"] = std::move(ms);
        rows.push_back(std::move(row));
    }
    j["per_variable"] = std::move(rows);
    j["count"] = fam.totalCount();
    return j;
}

Json genericityReportToJson(const GenericityReport& rep, const OrderIdealData& O) {
    Json j;
    j["s_count"] = rep.sCount;
    j["z_count"] = rep.zCount;
    j["lower_bound"] = rep.lowerBound;
    j["independence_verified"] = rep.independenceVerified;
    j["tangent"] = tangentReportToJson(rep.tangent);
    j["verdict"] = verdictName(rep.verdict);
    j["principal_component_dim"] = rep.principalComponentDim;
    if (rep.elementaryComponentDim) j["elementary_component_dim"] = *rep.elementaryComponentDim;
    j["delta"] = deltaFamilyToJson(rep.delta, O);
    j["notes"] = rep.notes;
    return j;
}

Json efficiencyReportToJson(const EfficiencyReport& rep) {
    Json j;
    j["q_size"] = rep.qSet.size();
    j["condition_i"] = rep.conditionI;
    if (rep.conditionIWitness) j["condition_i_witness"] = rep.conditionIWitness->str();
    j["theta_domain_dim"] = rep.thetaDomainDim;
    j["theta_codomain_dim"] = rep.thetaCodomainDim;
    j["theta_surjective"] = rep.thetaSurjective;
    j["theta_efficient"] = rep.thetaEfficient;
    if (rep.exactEfficient) j["exact_efficient"] = *rep.exactEfficient;
    return j;
}

Json syzygiesToJson(const std::vector<LinearSyzygy>& syzygies) {
    Json arr = Json::array();
    for (const auto& syz : syzygies) {
        // nu tuples of (constant, coefficients of x_1..x_n)
        std::vector<std::vector<std::int64_t>> tuple(syz.nu,
                                                     std::vector<std::int64_t>(syz.n + 1, 0));
        for (const auto& [alpha, j, d] : syz.entries) {
            if (!d.fits_slong_p()) throw InternalError("syzygy coefficient exceeds 64 bits");
            tuple[j - 1][alpha] = d.get_si();
        }
        arr.push_back(tuple);
    }
    return arr;
}

Json plausibilityReportToJson(const PlausibilityReport& rep) {
    Json j;
    j["n"] = rep.counts.shape.n;
    j["kappa"] = rep.counts.shape.kappa;
    j["r"] = rep.counts.shape.r;
    j["s"] = rep.counts.shape.s;
    j["lambda"] = bigIntToJson(rep.counts.lambda);
    j["tau"] = bigIntToJson(rep.counts.tau);
    j["mu"] = bigIntToJson(rep.counts.mu);
    j["nu"] = bigIntToJson(rep.counts.nu);
    j["psi"] = bigIntToJson(rep.counts.psi);
    j["cond1"] = rep.condition1;
    j["cond2"] = rep.condition2;
    j["plausible"] = rep.plausible;
    Json perDeg;
    for (const auto& [d, ok] : rep.condition1ByDegree) perDeg[std::to_string(d)] = ok;
    j["cond1_by_degree"] = std::move(perDeg);
    j["cond2_lhs"] = bigIntToJson(rep.condition2Lhs);
    j["cond2_rhs"] = bigIntToJson(rep.condition2Rhs);
    return j;
}

std::string plausibilityCsvHeader() {
    return "n,kappa,r,s,lambda,tau,mu,nu,psi,cond1,cond2,plausible";
}

std::string plausibilityCsvRow(const PlausibilityReport& rep) {
    std::ostringstream os;
    os << rep.counts.shape.n << ',' << rep.counts.shape.kappa << ',' << rep.counts.shape.r << ','
       << rep.counts.shape.s << ',' << rep.counts.lambda.get_str() << ','
       << rep.counts.tau.get_str() << ',' << rep.counts.mu.get_str() << ','
       << rep.counts.nu.get_str() << ',' << rep.counts.psi.get_str() << ','
       << (rep.condition1 ? "true" : "false") << ',' << (rep.condition2 ? "true" : "false") << ','
       << (rep.plausible ? "true" : "false");
    return os.str();
}

}  // namespace borderlab
