#include "lps/specjson.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

#include "lps/halasz.hpp"
#include "lps/multcore.hpp"

namespace lps {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("spec: " + what);
}

nf::SplittingRule rule_from_json(const json& j) {
    if (!j.is_array() || j.empty()) bad("splitting rule must be a nonempty array of [e,f] pairs");
    nf::SplittingRule rule;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) bad("splitting rule entries must be [e,f]");
        int e = pair[0].get<int>(), f = pair[1].get<int>();
        if (e < 1 || f < 1) bad("splitting rule entries need e >= 1, f >= 1");
        rule.ef.emplace_back(e, f);
    }
    return rule;
}

}  // namespace

nf::FieldSpec field_from_json(const json& j) {
    if (!j.is_object()) bad("field spec must be a JSON object");
    if (!j.contains("type")) bad("field spec missing \"type\"");
    std::string type = j.at("type").get<std::string>();
    if (type == "rational") return nf::FieldSpec::rationals();
    if (type == "quadratic") {
        if (!j.contains("disc")) bad("quadratic field spec missing \"disc\"");
        return nf::FieldSpec::quadratic(j.at("disc").get<long long>());
    }
    if (type == "cyclotomic") {
        if (!j.contains("q")) bad("cyclotomic field spec missing \"q\"");
        return nf::FieldSpec::cyclotomic(j.at("q").get<long long>());
    }
    if (type == "custom") {
        if (!j.contains("degree")) bad("custom field spec missing \"degree\"");
        if (!j.contains("default")) bad("custom field spec missing \"default\" rule");
        int degree = j.at("degree").get<int>();
        std::map<uint64_t, nf::SplittingRule> rules;
        if (j.contains("rules")) {
            for (const auto& [key, val] : j.at("rules").items()) {
                uint64_t p = std::stoull(key);
                rules[p] = rule_from_json(val);
            }
        }
        return nf::FieldSpec::custom(degree, std::move(rules),
                                     rule_from_json(j.at("default")));
    }
    bad("unknown field type \"" + type + "\"");
}

CoefficientSeries series_from_json(const json& j, size_t N) {
    if (!j.is_object()) bad("series spec must be a JSON object");
    if (!j.contains("type")) bad("series spec missing \"type\"");
    std::string type = j.at("type").get<std::string>();
    if (type == "zeta") return coeffs_from_multiplicative(zeta_spec(), N);
    if (type == "moebius") return coeffs_from_multiplicative(moebius_spec(), N);
    if (type == "sharp-example") {
        if (!j.contains("k")) bad("sharp-example spec missing \"k\"");
        int k = j.at("k").get<int>();
        if (k < 1) bad("sharp-example needs k >= 1");
        return sharp_example_coeffs(static_cast<unsigned>(k), N);
    }
    if (type == "coeff-list") {
        if (!j.contains("values")) bad("coeff-list spec missing \"values\"");
        std::vector<cplx> v;
        for (const auto& entry : j.at("values")) {
            if (!entry.is_array() || entry.size() != 2)
                bad("coeff-list values must be [re, im] pairs");
            v.emplace_back(entry[0].get<double>(), entry[1].get<double>());
        }
        if (v.empty()) bad("coeff-list must not be empty");
        if (v.size() > N) v.resize(N);
        return CoefficientSeries(std::move(v), "coeff-list");
    }
    if (type == "dedekind") {
        if (!j.contains("field")) bad("dedekind spec missing \"field\"");
        return nf::dedekind_coeffs(field_from_json(j.at("field")), N);
    }
    bad("unknown series type \"" + type + "\"");
}

}  // namespace lps
