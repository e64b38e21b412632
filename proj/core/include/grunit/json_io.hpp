#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "grunit/catalog.hpp"
#include "grunit/group.hpp"
#include "grunit/group_ring.hpp"
#include "grunit/rings.hpp"

namespace grunit {

using json = nlohmann::ordered_json;

class JsonFormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

json element_to_json(const GroupElement& g);
GroupElement element_from_json(const json& j);

json ring_to_json(const CycloBivariate& x);
json ring_to_json(const CyclotomicZeta8& x);
json ring_to_json(const GaussianInt& x);
json ring_to_json(const PrimeField& x);
json ring_to_json(const QuadExtField& x);

std::string ring_descriptor(const CycloBivariate&);
std::string ring_descriptor(const CyclotomicZeta8&);
std::string ring_descriptor(const GaussianInt&);
std::string ring_descriptor(const PrimeField& x);
std::string ring_descriptor(const QuadExtField& x);

CycloBivariate cyclo_from_json(const json& j);
CyclotomicZeta8 zeta8_from_json(const json& j);
GaussianInt gaussian_from_json(const json& j);
FiniteFieldElem field_from_json(const json& j);

template <CoefficientRing K>
json group_ring_to_json(const GroupRingElem<K>& a) {
    json out;
    out["group"] = a.group()->name();
    out["ring"] = a.is_zero() ? std::string() : ring_descriptor(a.terms().begin()->second);
    out["terms"] = json::array();
    for (const auto& [g, c] : a.terms())
        out["terms"].push_back(json{{"word", a.display_word(g).to_string()}, {"coeff", ring_to_json(c)}});
    return out;
}

// Words are evaluated in the named group; terms landing on the same element are summed.
template <CoefficientRing K, class Parse>
GroupRingElem<K> group_ring_from_json(const json& j, Parse&& parse_coeff) {
    try {
        const GroupHandle& group = group_by_name(j.at("group").get<std::string>());
        GroupRingElem<K> out(group);
        for (const auto& term : j.at("terms")) {
            const Word w = parse_word(term.at("word").get<std::string>(), *group);
            out.add_term(group->eval(w), parse_coeff(term.at("coeff")), w);
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw JsonFormatError(std::string("malformed group-ring JSON: ") + e.what());
    }
}

// Accepts {"group": G, "g": [words], "h": [words]} or {"alpha": group-ring JSON, "beta": group-ring JSON}.
SupportPair supports_from_json(const json& j);
json supports_to_json(const SupportPair& sp);

}  // namespace grunit
