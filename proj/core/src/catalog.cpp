#include "grunit/catalog.hpp"

#include <array>
#include <set>
#include <string_view>

namespace grunit {

namespace {

struct CatalogTerm {
    std::string_view word;
    int sign;
    int s_exp;
    int t_exp;
};

// alpha_1, then s*alpha_a*a, t*alpha_b*b, s*t*alpha_ab*ab with the leading factors folded in.
constexpr std::array<CatalogTerm, 21> alpha_terms{{
    {"1", 1, 0, 0},
    {"x*z^-1", 1, 0, 2},
    {"x^-1*z^-1", -1, 0, 2},
    {"y*z^-1", -1, 2, 0},
    {"y^-1*z^-1", 1, 2, 0},
    {"x^-1*a", -1, 3, 0},
    {"a", 1, 1, 0},
    {"x^-1*y^-1*z*a", -1, 1, 0},
    {"y*z*a", 1, 3, 0},
    {"x^-1*y^-1*z*b", 1, 0, 1},
    {"x*z*b", -1, 0, 3},
    {"y^-1*z^2*b", 1, 0, 3},
    {"z^2*b", -1, 0, 1},
    {"x^-1*z^-1*a*b", -1, 1, 3},
    {"y*z^-1*a*b", -1, 3, 1},
    {"z^-1*a*b", 1, 3, 3},
    {"x^-1*y*z^-1*a*b", 1, 1, 1},
    {"x^-1*z^-2*a*b", 1, 3, 1},
    {"y*z^-2*a*b", 1, 1, 3},
    {"z^-2*a*b", -1, 1, 1},
    {"x^-1*y*z^-2*a*b", -1, 3, 3},
}};

constexpr std::array<CatalogTerm, 21> beta_terms{{
    {"1", 1, 0, 0},
    {"x^-1*z", 1, 0, 2},
    {"x*z", -1, 0, 2},
    {"y*z", 1, 2, 0},
    {"y^-1*z", -1, 2, 0},
    {"a", -1, 1, 0},
    {"x^-1*a", 1, 3, 0},
    {"y*z*a", -1, 3, 0},
    {"x^-1*y^-1*z*a", 1, 1, 0},
    {"x^-1*y^-1*z*b", -1, 0, 1},
    {"x*z*b", 1, 0, 3},
    {"y^-1*z^2*b", -1, 0, 3},
    {"z^2*b", 1, 0, 1},
    {"x^-1*y*a*b", 1, 3, 3},
    {"a*b", 1, 1, 1},
    {"y*a*b", -1, 1, 3},
    {"x^-1*a*b", -1, 3, 1},
    {"x^-1*y*z*a*b", -1, 1, 1},
    {"z*a*b", -1, 3, 3},
    {"y*z*a*b", 1, 3, 1},
    {"x^-1*z*a*b", 1, 1, 3},
}};

GroupRingElem<CycloBivariate> build(const std::array<CatalogTerm, 21>& terms) {
    const GroupHandle& group = shared_group_P();
    GroupRingElem<CycloBivariate> out(group);
    for (const auto& term : terms) {
        const Word w = parse_word(term.word, *group);
        const GroupElement g = group->eval(w);
        if (out.coeff(g)) throw std::logic_error("catalog support has a repeated element");
        out.add_term(g, CycloBivariate::monomial(term.sign, term.s_exp, term.t_exp), w);
    }
    return out;
}

std::vector<Word> words_of(const std::array<CatalogTerm, 21>& terms) {
    std::vector<Word> out;
    for (const auto& term : terms) out.push_back(parse_word(term.word, *shared_group_P()));
    return out;
}

Word gen(std::string name, std::int64_t e = 1) { return Word{{{std::move(name), e}}}; }

}  // namespace

SupportPair make_support_pair(GroupHandle group, std::vector<Word> g_words, std::vector<Word> h_words) {
    SupportPair sp{std::move(group), {}, {}, std::move(g_words), std::move(h_words)};
    for (const auto& w : sp.g_words) sp.g_list.push_back(sp.group->eval(w));
    for (const auto& w : sp.h_words) sp.h_list.push_back(sp.group->eval(w));
    for (const auto* list : {&sp.g_list, &sp.h_list}) {
        if (std::set<GroupElement>(list->begin(), list->end()).size() != list->size())
            throw std::invalid_argument("support list has repeated elements");
    }
    return sp;
}

GroupRingElem<CycloBivariate> catalog_alpha_R() { return build(alpha_terms); }
GroupRingElem<CycloBivariate> catalog_beta_R() { return build(beta_terms); }

SupportPair catalog_supports() {
    return make_support_pair(shared_group_P(), words_of(alpha_terms), words_of(beta_terms));
}

GeneratorMap catalog_phi0() { return {{"a", gen("a", -1)}, {"b", gen("b", -1)}}; }
GeneratorMap catalog_phi1() { return {{"a", gen("a")}, {"b", gen("b", -1)}}; }

GroupCharacter<CycloBivariate> catalog_chi0() {
    return GroupCharacter<CycloBivariate>(
        {{"a", CycloBivariate::monomial(-1, 2, 0)}, {"b", CycloBivariate::monomial(-1, 0, 2)}});
}

GroupCharacter<CycloBivariate> catalog_chi1() {
    return GroupCharacter<CycloBivariate>({{"a", CycloBivariate::monomial(1, 2, 0)}, {"b", CycloBivariate(-1)}});
}

TwistedAutomorphism<CycloBivariate> catalog_theta0() {
    return {catalog_phi0(), catalog_phi0(), catalog_chi0(), CoeffAuto::identity};
}

TwistedAutomorphism<CycloBivariate> catalog_theta1() {
    return {catalog_phi1(), catalog_phi1(), catalog_chi1(), CoeffAuto::identity};
}

TwistedAutomorphism<CycloBivariate> catalog_conjugation_gauge() {
    GeneratorMap id{{"a", gen("a")}, {"b", gen("b")}};
    GroupCharacter<CycloBivariate> gauge(
        {{"a", CycloBivariate::monomial(1, 2, 0)}, {"b", CycloBivariate::monomial(1, 0, 2)}});
    return {id, id, gauge, CoeffAuto::conjugate};
}

SignedCharacter<CycloBivariate> catalog_rho() { return {{{"a", CycloBivariate::s()}, {"b", CycloBivariate::t()}}}; }

GroupCharacter<GaussianInt> catalog_chi0_gaussian() {
    return GroupCharacter<GaussianInt>({{"a", GaussianInt(0, -1)}, {"b", GaussianInt(0, -1)}});
}

GroupCharacter<GaussianInt> catalog_chi1_gaussian() {
    return GroupCharacter<GaussianInt>({{"a", GaussianInt(0, 1)}, {"b", GaussianInt(-1, 0)}});
}

const std::vector<Word>& catalog_nu_words() {
    static const std::vector<Word> words = [] {
        constexpr std::array<std::string_view, 29> text{
            "x",           "x^-1",          "y",
            "y^-1",        "x*y",           "x^-1*y^-1",
            "y*x^-1",      "y^2",           "y^-1*x",
            "y^-2",        "x^2*y",         "x*y^-1*x",
            "x*y^-2",      "x^-2*y^-1",     "x^-1*y*x^-1",
            "x^-1*y^2",    "y*x*y",         "y^-1*x^-1*y^-1",
            "x^2*y^-1*x",  "x*y*x^2",       "x^-2*y*x^-1",
            "x^-1*y^-1*x^-2", "y*x^-2*y^-1", "y^-1*x^2*y",
            "x^2*y*x^2",   "x*y^-1*x^2*y",  "x^-2*y^-1*x^-2",
            "x^-1*y*x^-2*y^-1", "x^2*y^-1*x^2*y",
        };
        std::vector<Word> out;
        for (auto t : text) out.push_back(parse_word(t, *shared_group_S()));
        return out;
    }();
    return words;
}

GroupRingElem<PrimeField> catalog_nu_F2() {
    const GroupHandle& group = shared_group_S();
    GroupRingElem<PrimeField> out(group);
    for (const auto& w : catalog_nu_words()) {
        const GroupElement g = group->eval(w);
        if (out.coeff(g)) throw std::logic_error("nu has a repeated support element");
        out.add_term(g, PrimeField(2, 1), w);
    }
    return out;
}

GeneratorMap catalog_phi_S() { return {{"x", gen("y")}, {"y", gen("x", -1)}}; }
GeneratorMap catalog_phi_S_inverse() { return {{"x", gen("y", -1)}, {"y", gen("x")}}; }

TwistedAutomorphism<PrimeField> catalog_phi_S_twisted() {
    return group_automorphism_only(*shared_group_S(), catalog_phi_S(), catalog_phi_S_inverse(), PrimeField(2, 1));
}

}  // namespace grunit
