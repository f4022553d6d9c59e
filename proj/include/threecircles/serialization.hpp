#pragma once

// JSON forms of the value types. Rationals travel as their canonical text
// ("p/q", or "p" for integers) so nothing is lost to floating point.

#include "threecircles/certcheck.hpp"
#include "threecircles/isolator.hpp"
#include "threecircles/regions.hpp"

#include "json.hpp"

#include <string>

namespace threecircles {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected a rational as a string");
    return parse_rational(j.get<std::string>());
}

inline Json to_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

inline Json to_json(const IntervalLR& iv) { return Json{{"l", to_string(iv.l())}, {"r", to_string(iv.r())}}; }

inline IntervalLR interval_from_json(const Json& j) {
    return IntervalLR(rational_from_json(j.at("l")), rational_from_json(j.at("r")));
}

inline Json to_json(const RootSpec& spec) {
    Json reals = Json::array(), pairs = Json::array();
    for (const auto& rr : spec.real_roots) reals.push_back({{"value", to_string(rr.value)}, {"mult", rr.multiplicity}});
    for (const auto& cp : spec.complex_pairs)
        pairs.push_back({{"re", to_string(cp.re)}, {"im", to_string(cp.im)}, {"mult", cp.multiplicity}});
    return Json{{"real", reals}, {"pairs", pairs}, {"leading", to_string(spec.leading)}};
}

inline RootSpec root_spec_from_json(const Json& j) {
    RootSpec spec;
    for (const auto& e : j.at("real"))
        spec.real_roots.push_back({rational_from_json(e.at("value")), e.at("mult").get<unsigned>()});
    for (const auto& e : j.at("pairs"))
        spec.complex_pairs.push_back(
            {rational_from_json(e.at("re")), rational_from_json(e.at("im")), e.at("mult").get<unsigned>()});
    spec.leading = rational_from_json(j.at("leading"));
    spec.validate();
    return spec;
}

inline Json to_json(const IsolationResult& res) {
    Json roots = Json::array(), ivs = Json::array();
    for (const auto& x : res.exact_roots) roots.push_back(to_string(x));
    for (const auto& iv : res.intervals) ivs.push_back(Json::array({to_string(iv.lo), to_string(iv.hi)}));
    return Json{{"exact_roots", roots},
                {"intervals", ivs},
                {"depth_reached", res.depth_reached},
                {"node_count", res.node_count}};
}

}  // namespace threecircles
