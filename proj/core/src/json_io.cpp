#include "grunit/json_io.hpp"

namespace grunit {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw JsonFormatError("malformed JSON: " + what); }

template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        malformed(std::string(what) + " (" + e.what() + ")");
    }
}

std::vector<Word> words_from(const json& arr, const AffineGroup& group) {
    std::vector<Word> out;
    for (const auto& w : arr) out.push_back(parse_word(w.get<std::string>(), group));
    return out;
}

}  // namespace

json element_to_json(const GroupElement& g) {
    json rows = json::array();
    for (const auto& row : g.rows()) rows.push_back(row);
    return json{{"dim", g.dim()}, {"rows", rows}};
}

GroupElement element_from_json(const json& j) {
    return guarded("group element", [&] {
        const int dim = j.at("dim").get<int>();
        const auto rows = j.at("rows").get<std::vector<std::vector<std::int64_t>>>();
        if (static_cast<int>(rows.size()) != dim) malformed("row count does not match dim");
        return GroupElement::from_rows(rows);
    });
}

json ring_to_json(const CycloBivariate& x) {
    json st = json::array();
    for (int i = 0; i < 4; ++i) st.push_back({x.coeff(i, 0), x.coeff(i, 1), x.coeff(i, 2), x.coeff(i, 3)});
    return json{{"st", st}};
}

json ring_to_json(const CyclotomicZeta8& x) { return json{{"zeta8", {x.coeff(0), x.coeff(1), x.coeff(2), x.coeff(3)}}}; }

json ring_to_json(const GaussianInt& x) { return json{{"gauss", {x.re(), x.im()}}}; }

json ring_to_json(const PrimeField& x) { return json{{"p", x.p()}, {"deg", 1}, {"val", {x.value()}}}; }

json ring_to_json(const QuadExtField& x) {
    return json{{"p", x.p()}, {"deg", 2}, {"val", {x.a0(), x.a1()}}, {"mod", {x.modulus().m0, x.modulus().m1}}};
}

std::string ring_descriptor(const CycloBivariate&) { return "R"; }
std::string ring_descriptor(const CyclotomicZeta8&) { return "Z[zeta8]"; }
std::string ring_descriptor(const GaussianInt&) { return "Z[i]"; }
std::string ring_descriptor(const PrimeField& x) { return "F_" + std::to_string(x.p()); }
std::string ring_descriptor(const QuadExtField& x) { return "F_" + std::to_string(x.p()) + "^2"; }

CycloBivariate cyclo_from_json(const json& j) {
    return guarded("R coefficient", [&] {
        const auto st = j.at("st").get<std::vector<std::vector<std::int64_t>>>();
        if (st.size() != 4) malformed("\"st\" needs 4 rows");
        CycloBivariate out;
        for (int i = 0; i < 4; ++i) {
            if (st[static_cast<std::size_t>(i)].size() != 4) malformed("\"st\" rows need 4 entries");
            for (int k = 0; k < 4; ++k) out.set_coeff(i, k, st[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
        }
        return out;
    });
}

CyclotomicZeta8 zeta8_from_json(const json& j) {
    return guarded("zeta8 coefficient", [&] {
        const auto c = j.at("zeta8").get<std::vector<std::int64_t>>();
        if (c.size() != 4) malformed("\"zeta8\" needs 4 entries");
        CyclotomicZeta8 out;
        for (int k = 0; k < 4; ++k) out = out + CyclotomicZeta8::monomial(c[static_cast<std::size_t>(k)], k);
        return out;
    });
}

GaussianInt gaussian_from_json(const json& j) {
    return guarded("Gaussian coefficient", [&] {
        const auto c = j.at("gauss").get<std::vector<std::int64_t>>();
        if (c.size() != 2) malformed("\"gauss\" needs 2 entries");
        return GaussianInt(c[0], c[1]);
    });
}

FiniteFieldElem field_from_json(const json& j) {
    return guarded("finite field coefficient", [&]() -> FiniteFieldElem {
        const auto p = j.at("p").get<std::uint64_t>();
        const int deg = j.at("deg").get<int>();
        const auto val = j.at("val").get<std::vector<std::int64_t>>();
        if (deg == 1) {
            if (val.size() != 1) malformed("degree 1 needs one value");
            return PrimeField(p, val[0]);
        }
        if (deg == 2) {
            if (val.size() != 2) malformed("degree 2 needs two values");
            const auto mod = j.at("mod").get<std::vector<std::uint64_t>>();
            if (mod.size() != 2) malformed("\"mod\" needs 2 entries");
            return QuadExtField(QuadExtField::make_modulus(p, mod[0], mod[1]), val[0], val[1]);
        }
        malformed("\"deg\" must be 1 or 2");
    });
}

SupportPair supports_from_json(const json& j) {
    return guarded("supports", [&] {
        if (j.contains("alpha")) {
            const json& a = j.at("alpha");
            const json& b = j.at("beta");
            const std::string name = a.at("group").get<std::string>();
            if (b.at("group").get<std::string>() != name) malformed("alpha and beta name different groups");
            const GroupHandle& group = group_by_name(name);
            std::vector<Word> g, h;
            for (const auto& t : a.at("terms")) g.push_back(parse_word(t.at("word").get<std::string>(), *group));
            for (const auto& t : b.at("terms")) h.push_back(parse_word(t.at("word").get<std::string>(), *group));
            return make_support_pair(group, std::move(g), std::move(h));
        }
        const GroupHandle& group = group_by_name(j.at("group").get<std::string>());
        return make_support_pair(group, words_from(j.at("g"), *group), words_from(j.at("h"), *group));
    });
}

json supports_to_json(const SupportPair& sp) {
    json g = json::array(), h = json::array();
    for (const auto& w : sp.g_words) g.push_back(w.to_string());
    for (const auto& w : sp.h_words) h.push_back(w.to_string());
    return json{{"group", sp.group->name()}, {"g", g}, {"h", h}};
}

}  // namespace grunit
