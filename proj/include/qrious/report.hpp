#pragma once

#include "qrious/integrality.hpp"
#include "qrious/q_ratio.hpp"
#include "qrious/ratio_spec.hpp"
#include "qrious/search.hpp"

#include <json.hpp>

#include <string>

namespace qrious {

// Insertion-ordered JSON keeps report layouts stable; all big integers are
// serialized as decimal strings.
using ojson = nlohmann::ordered_json;

inline ojson spec_json(const RatioSpec& spec) {
    ojson j;
    j["params"] = ojson::array();
    for (char p : spec.params) j["params"].push_back(std::string(1, p));
    auto forms = [](const std::vector<LinearForm>& fs) {
        ojson a = ojson::array();
        for (const auto& f : fs) a.push_back(f.coeffs);
        return a;
    };
    j["num"] = forms(spec.num);
    j["den"] = forms(spec.den);
    return j;
}

inline RatioSpec spec_from_json(const ojson& j) {
    RatioSpec spec;
    for (const auto& p : j.at("params")) {
        std::string s = p.get<std::string>();
        if (s.size() != 1) throw std::invalid_argument("parameter names must be single letters");
        spec.params.push_back(s[0]);
    }
    auto forms = [](const ojson& a) {
        std::vector<LinearForm> fs;
        for (const auto& row : a) fs.push_back({row.get<std::vector<i64>>()});
        return fs;
    };
    spec.num = forms(j.at("num"));
    spec.den = forms(j.at("den"));
    spec.validate();
    return spec;
}

inline ojson verdict_json(const Verdict& v) {
    ojson j;
    j["status"] = to_string(v.status);
    j["scan_depth"] = v.scan_depth;
    j["certified_depth"] = v.certified_depth;
    if (v.floor_witness) {
        j["floor_witness"] = {{"residue", v.floor_witness->residue},
                              {"modulus", v.floor_witness->modulus},
                              {"value", v.floor_witness->value}};
    }
    if (v.point_witness) {
        j["point_witness"] = {{"point", v.point_witness->point.values},
                              {"numerator", dec(v.point_witness->numerator)},
                              {"denominator", dec(v.point_witness->denominator)}};
    }
    return j;
}

inline ojson positivity_json(const PositivityReport& r) {
    ojson j;
    j["family"] = r.family;
    j["box"] = r.box;
    j["status"] = to_string(r.status);
    if (r.min_coefficient) {
        j["min_coefficient"] = {{"value", dec(r.min_coefficient->value)},
                                {"point", r.min_coefficient->point.values},
                                {"power", r.min_coefficient->power}};
    } else {
        j["min_coefficient"] = nullptr;
    }
    j["witnesses"] = ojson::array();
    for (const auto& w : r.witnesses)
        j["witnesses"].push_back({{"point", w.point.values}, {"detail", w.detail}});
    j["points_scanned"] = r.points_scanned;
    j["points_skipped"] = r.points_skipped;
    return j;
}

inline ojson candidate_json(const SearchCandidate& c) {
    ojson j;
    j["num"] = c.num;
    j["den"] = c.den;
    switch (c.outcome) {
        case SearchCandidate::Outcome::Integral: j["outcome"] = "Integral"; break;
        case SearchCandidate::Outcome::NonIntegral: j["outcome"] = "NonIntegral"; break;
        case SearchCandidate::Outcome::Skipped: j["outcome"] = "Skipped"; break;
    }
    if (c.criterion_witness) {
        j["criterion_witness"] = {{"t", c.criterion_witness->residue[0]},
                                  {"modulus", c.criterion_witness->modulus},
                                  {"value", c.criterion_witness->value}};
    }
    if (c.witness_n)
        j["witness_n"] = *c.witness_n;
    else if (c.outcome == SearchCandidate::Outcome::NonIntegral)
        j["witness_n"] = nullptr;
    if (!c.skip_reason.empty()) j["skip_reason"] = c.skip_reason;
    if (c.internal_error) j["internal_error"] = true;
    return j;
}

}  // namespace qrious
