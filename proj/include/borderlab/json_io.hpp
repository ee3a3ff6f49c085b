#pragma once

#include <json.hpp>

#include "borderlab/deformation.hpp"
#include "borderlab/efficiency.hpp"
#include "borderlab/plausibility.hpp"
#include "borderlab/syzygy.hpp"

namespace borderlab {

using Json = nlohmann::ordered_json;

Json orderIdealToJson(const OrderIdealData& O);
OrderIdealData orderIdealFromJson(const Json& j, const std::string& pointer = "/order_ideal");

Json idealToJson(const DistinguishedIdeal& I);
DistinguishedIdeal idealFromJson(const Json& j);
DistinguishedIdeal loadIdealFile(const std::string& path);
void saveIdealFile(const DistinguishedIdeal& I, const std::string& path);

Json tangentReportToJson(const TangentReport& rep);
Json deltaFamilyToJson(const DeltaFamily& fam, const OrderIdealData& O);
Json genericityReportToJson(const GenericityReport& rep, const OrderIdealData& O);
Json efficiencyReportToJson(const EfficiencyReport& rep);

Json syzygiesToJson(const std::vector<LinearSyzygy>& syzygies);

Json plausibilityReportToJson(const PlausibilityReport& rep);
std::string plausibilityCsvHeader();
std::string plausibilityCsvRow(const PlausibilityReport& rep);

// big integers render as JSON numbers when they fit in 64 bits, strings otherwise
Json bigIntToJson(const mpz_class& v);

}  // namespace borderlab
