#include <doctest.h>

#include <numeric>
#include <sstream>
#include <set>

#include "grunit/combinatorics.hpp"
#include "grunit/poly_system.hpp"
#include "grunit/json_io.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace grunit;

namespace {

const GroupHandle& P() { return shared_group_P(); }

Monomial uv(int i, int j) { return {Variable::u(i), Variable::v(j)}; }

Polynomial bilinear(const std::vector<std::pair<int, int>>& pairs, std::int64_t constant = 0) {
    Polynomial p;
    for (const auto& [i, j] : pairs) p.add_term(GaussianInt(1), uv(i, j));
    if (constant) p.add_term(GaussianInt(constant), {});
    return p;
}

bool contains_poly(const BilinearSystem& sys, const Polynomial& p) {
    for (const auto& eq : sys.equations)
        if (eq.poly == p) return true;
    return false;
}

template <class K, class F>
std::map<Variable, K> catalog_assignment(F&& map_coeff) {
    const SupportPair sp = catalog_supports();
    const auto alpha = catalog_alpha_R();
    const auto beta = catalog_beta_R();
    std::map<Variable, K> out;
    for (std::size_t i = 0; i < sp.g_list.size(); ++i)
        out.emplace(Variable::u(static_cast<int>(i) + 1), map_coeff(*alpha.coeff(sp.g_list[i])));
    for (std::size_t j = 0; j < sp.h_list.size(); ++j)
        out.emplace(Variable::v(static_cast<int>(j) + 1), map_coeff(*beta.coeff(sp.h_list[j])));
    return out;
}

template <class K>
bool all_zero(const std::vector<K>& r) {
    return std::all_of(r.begin(), r.end(), [](const K& x) { return x.is_zero(); });
}

SupportPair random_pair(gen::Rng& rng, int m, int n) {
    return make_support_pair(P(), gen::distinct_words(rng, m), gen::distinct_words(rng, n));
}

}  // namespace

TEST_CASE("catalog system shape") {
    const BilinearSystem sys = generate_bilinear_system(catalog_supports());
    CHECK(sys.equations.size() == 121);
    CHECK(sys.vars.size() == 42);
    const Polynomial identity = bilinear({{1, 1}, {2, 2}, {3, 3}, {4, 5}, {5, 4}, {6, 6}, {7, 7}, {12, 13}, {13, 12},
                                          {14, 17}, {15, 16}, {16, 15}, {17, 14}, {18, 21}, {19, 20}, {20, 19}, {21, 18}},
                                         -1);
    CHECK(sys.equations.front().poly == identity);
    CHECK(sys.equations.front().label->is_identity());
    CHECK(sys.equations.front().poly.count_degree(2) == 17);
    CHECK(contains_poly(sys, bilinear({{1, 2}, {12, 11}, {14, 19}, {17, 20}})));
    CHECK(contains_poly(sys, bilinear({{1, 3}, {13, 10}, {15, 18}, {16, 21}})));
    CHECK(check_parity(sys));
    CHECK(check_swap_symmetries(sys).all());
    CHECK(sys.equations.front().poly.to_string().rfind("u1*v1+u2*v2+", 0) == 0);
}

TEST_CASE("identity equation matches a brute-force oracle") {
    const SupportPair sp = catalog_supports();
    const oracle::Matrix id = oracle::identity(4);
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < sp.g_words.size(); ++i)
        for (std::size_t j = 0; j < sp.h_words.size(); ++j)
            if (oracle::mul(oracle::eval(sp.g_words[i].to_string(), oracle::p_generators()),
                            oracle::eval(sp.h_words[j].to_string(), oracle::p_generators())) == id)
                pairs.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    CHECK(generate_bilinear_system(sp).equations.front().poly == bilinear(pairs, -1));
}

TEST_CASE("trivial system") {
    const SupportPair sp = make_support_pair(P(), {Word{}}, {Word{}});
    const BilinearSystem sys = generate_bilinear_system(sp);
    REQUIRE(sys.equations.size() == 1);
    CHECK(sys.equations[0].poly.to_string() == "u1*v1-1");
    CHECK(export_system(sys, ExportFormat::msolve) == "u1,v1\n0\nu1*v1-1\n");
}

TEST_CASE("swap symmetries fail for a partial swap") {
    const BilinearSystem sys = generate_bilinear_system(catalog_supports());
    const VariablePermutation partial{{Variable::u(2), Variable::u(3)}, {Variable::u(3), Variable::u(2)}};
    CHECK_FALSE(is_invariant_under(sys, partial));
    const BilinearSystem moved = permute_variables(sys, partial);
    std::multiset<Polynomial> original;
    for (const auto& eq : sys.equations) original.insert(eq.poly);
    bool witness = false;
    for (const auto& eq : moved.equations) witness = witness || !original.contains(eq.poly);
    CHECK(witness);
}

TEST_CASE("parity fails when a product is unique") {
    const SupportPair sp = make_support_pair(P(), {Word{}, parse_word("a", *P())}, {Word{}});
    CHECK_FALSE(check_parity(generate_bilinear_system(sp)));
}

TEST_CASE("property: every (i, j) pair lands in exactly one equation, labels are a bijection") {
    gen::Rng rng(41);
    for (int t = 0; t < 60; ++t) {
        const int m = gen::uniform(rng, 1, 6), n = gen::uniform(rng, 1, 6);
        const SupportPair sp = random_pair(rng, m, n);
        const BilinearSystem sys = generate_bilinear_system(sp);
        std::size_t total = 0;
        std::set<GroupElement> labels;
        for (const auto& eq : sys.equations) {
            total += eq.poly.count_degree(2);
            labels.insert(*eq.label);
            for (const auto& [mono, c] : eq.poly.terms())
                if (mono.size() == 2)
                    CHECK(elem_mul(sp.g_list[static_cast<std::size_t>(mono[0].index - 1)],
                                   sp.h_list[static_cast<std::size_t>(mono[1].index - 1)]) == *eq.label);
        }
        CHECK(total == static_cast<std::size_t>(m * n));
        CHECK(labels.size() == sys.equations.size());
        CHECK(labels.size() == multiplicity_table(sp.g_list, sp.h_list).size());
    }
}

TEST_CASE("normalization") {
    const BilinearSystem sys = add_normalization(generate_bilinear_system(catalog_supports()));
    CHECK(sys.equations.size() == 123);
    for (std::size_t k = 121; k < 123; ++k) {
        const auto& p = sys.equations[k].poly;
        CHECK(p.count_degree(1) == 21);
        CHECK(p.count_degree(0) == 1);
        for (const auto& [mono, c] : p.terms()) CHECK(c == GaussianInt(mono.empty() ? -1 : 1));
    }
    CHECK_THROWS_AS(add_normalization(sys), std::logic_error);
}

TEST_CASE("localization") {
    const BilinearSystem base = add_normalization(generate_bilinear_system(catalog_supports()));
    const BilinearSystem loc = localize(base, 1, 2);
    CHECK(loc.equations.size() == 122);
    CHECK(loc.equations.front().poly.coeff({Variable::v(1)}).has_value());
    CHECK_FALSE(loc.equations.front().poly.coeff(uv(1, 1)).has_value());
    CHECK(loc.equations.back().kind == Equation::Kind::localization);
    CHECK(loc.equations.back().poly.to_string() == "u2*w-1");
    CHECK(std::find(loc.vars.begin(), loc.vars.end(), Variable::u(1)) == loc.vars.end());
    CHECK(loc.vars.back() == Variable::w());
    CHECK_THROWS(localize(base, 3, 3));
    CHECK_THROWS(localize(loc, 2, 3));
    CHECK_THROWS(localize(base, 0, 2));

    auto assignment = catalog_assignment<CycloBivariate>([](const CycloBivariate& c) { return c; });
    CHECK(assignment.at(Variable::u(2)) == CycloBivariate::monomial(1, 0, 2));
    assignment.erase(Variable::u(1));
    assignment.emplace(Variable::w(), CycloBivariate::monomial(-1, 0, 2));
    CHECK(all_zero(substitute(loc, assignment, CycloBivariate(1))));
}

TEST_CASE("substitution of the catalog solution") {
    const BilinearSystem sys = add_normalization(generate_bilinear_system(catalog_supports()));
    const auto over_r = catalog_assignment<CycloBivariate>([](const CycloBivariate& c) { return c; });
    const auto r = substitute(sys, over_r, CycloBivariate(1));
    CHECK(r.size() == 123);
    CHECK(all_zero(r));

    auto check_field = [&](const auto& root) {
        using K = std::decay_t<decltype(root)>;
        const auto a = catalog_assignment<K>([&](const CycloBivariate& c) { return specialize_R(c, root, root); });
        CHECK(all_zero(substitute(sys, a, root.scalar(1))));
    };
    check_field(PrimeField(2, 1));
    check_field(PrimeField(17, 2));
    check_field(std::get<QuadExtField>(find_eighth_root(7).root));
    check_field(std::get<QuadExtField>(find_eighth_root(default_modular_prime).root));

    std::map<Variable, GaussianInt> zeros;
    for (const auto& v : sys.vars) zeros.emplace(v, GaussianInt(0));
    const auto rz = substitute(sys, zeros, GaussianInt(1));
    CHECK(rz.front() == GaussianInt(-1));
    CHECK(rz[121] == GaussianInt(-1));
    CHECK(rz[122] == GaussianInt(-1));
    CHECK(std::all_of(rz.begin() + 1, rz.begin() + 121, [](const GaussianInt& x) { return x.is_zero(); }));
    zeros.erase(Variable::v(7));
    CHECK_THROWS_AS(substitute(sys, zeros, GaussianInt(1)), IncompleteAssignmentError);
}

TEST_CASE("character reduction") {
    const BilinearSystem sys = add_normalization(generate_bilinear_system(catalog_supports()));
    const ReducedSystem red =
        reduce_by_characters(sys, catalog_phi0(), catalog_phi1(), catalog_chi0_gaussian(), catalog_chi1_gaussian());
    CHECK(red.report.free_u.size() == 11);
    CHECK(red.report.pinned_u.empty());
    CHECK(red.report.phi0_fixpoints == std::vector<int>{1});
    CHECK(red.system.vars.size() == 11);
    CHECK_FALSE(red.system.is_integral());
    CHECK_THROWS_AS(export_system(red.system, ExportFormat::msolve), ExportFormatError);
    CHECK_THROWS_AS(export_system(red.system, ExportFormat::singular), ExportFormatError);
    CHECK_NOTHROW(export_system(red.system, ExportFormat::json));

    // the catalog solution, pushed to Z[zeta8] with iota -> zeta8^2, solves the reduced system
    const auto q = CyclotomicZeta8::zeta();
    const auto full = catalog_assignment<CyclotomicZeta8>([&](const CycloBivariate& c) { return specialize_R(c, q, q); });
    std::map<Variable, CyclotomicZeta8> reduced;
    for (const auto& v : red.system.vars) reduced.emplace(v, full.at(v));
    CHECK(all_zero(substitute(red.system, reduced, CyclotomicZeta8(1), CyclotomicZeta8::monomial(1, 2))));
    // and the elimination images reproduce the full assignment
    for (const auto& [var, img] : red.report.images) {
        CyclotomicZeta8 value = map_gaussian(img.coeff, CyclotomicZeta8::monomial(1, 2));
        if (img.var) value = value * full.at(*img.var);
        CHECK(value == full.at(var));
    }

    const auto trivial = trivial_character(*P(), GaussianInt(1));
    const ReducedSystem red_trivial = reduce_by_characters(sys, catalog_phi0(), catalog_phi1(), trivial, trivial);
    CHECK(red_trivial.report.free_u.size() == 11);
    CHECK_FALSE(red_trivial.system.equations == red.system.equations);

    // a fixpoint with a nontrivial character value is pinned, not an error
    const SupportPair small = make_support_pair(P(), {Word{}, parse_word("x", *P()), parse_word("x^-1", *P())},
                                                {Word{}, parse_word("x", *P()), parse_word("x^-1", *P())});
    const GroupCharacter<GaussianInt> minus({{"a", GaussianInt(0, 1)}, {"b", GaussianInt(1)}});
    const GeneratorMap id{{"a", Word{{{"a", 1}}}}, {"b", Word{{{"b", 1}}}}};
    const ReducedSystem pinned = reduce_by_characters(generate_bilinear_system(small), id, id, minus, trivial);
    CHECK(pinned.report.pinned_u == std::vector<int>{2, 3});

    const SupportPair not_closed = make_support_pair(P(), {Word{}, parse_word("a", *P())}, {Word{}, parse_word("a", *P())});
    CHECK_THROWS_AS(reduce_by_characters(generate_bilinear_system(not_closed), catalog_phi0(), catalog_phi1(), trivial,
                                         trivial),
                    std::invalid_argument);
}

TEST_CASE("character pairs") {
    const auto pairs = enumerate_character_pairs();
    CHECK(pairs.size() == 256);
    for (std::size_t k = 0; k < pairs.size(); ++k) CHECK(pairs[k].index == static_cast<int>(k));
    const auto& remark = pairs[static_cast<std::size_t>(remark_character_pair_index())];
    CHECK(remark.chi0.at("a") == GaussianInt(0, -1));
    CHECK(remark.chi0.at("b") == GaussianInt(0, -1));
    CHECK(remark.chi1.at("a") == GaussianInt(0, 1));
    CHECK(remark.chi1.at("b") == GaussianInt(-1));
    CHECK(remark.relators_ok);
    CHECK(remark.anti_involution);
    CHECK(pairs[0].relators_ok);
    CHECK(pairs[0].anti_involution);
    const auto valid = std::count_if(pairs.begin(), pairs.end(), [](const CharacterPair& c) { return c.anti_involution; });
    // g -> chi1(g) phi1(g)^-1 is an involution iff chi1(b)^2 = 1
    CHECK(valid == 128);
}

TEST_CASE("exports") {
    const BilinearSystem sys = add_normalization(generate_bilinear_system(catalog_supports()));
    const std::string msolve = export_system(sys, ExportFormat::msolve, 0);
    std::vector<std::string> lines;
    std::istringstream in(msolve);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    REQUIRE(lines.size() == 125);
    std::string header;
    for (int i = 1; i <= 21; ++i) header += "u" + std::to_string(i) + ",";
    for (int j = 1; j <= 21; ++j) header += "v" + std::to_string(j) + (j < 21 ? "," : "");
    CHECK(lines[0] == header);
    CHECK(lines[1] == "0");
    for (std::size_t k = 2; k + 1 < lines.size(); ++k) CHECK(lines[k].back() == ',');
    CHECK(lines.back().back() != ',');
    CHECK(export_system(sys, ExportFormat::msolve, 0) == msolve);
    CHECK(export_system(sys, ExportFormat::msolve, default_modular_prime).find("\n1000000007\n") != std::string::npos);
    CHECK_THROWS_AS(export_system(sys, ExportFormat::msolve, 12), ExportFormatError);

    const std::string singular = export_system(sys, ExportFormat::singular, 0);
    CHECK(singular.rfind("ring r = 0,(u1,u2,", 0) == 0);
    CHECK(singular.find("),dp;\nideal i =\n") != std::string::npos);
    CHECK(singular.substr(singular.size() - 2) == ";\n");

    const auto doc = nlohmann::json::parse(export_system(sys, ExportFormat::json, 0));
    CHECK(doc["vars"].size() == 42);
    CHECK(doc["char"] == 0);
    CHECK(doc["eqs"].size() == 123);
    CHECK(doc["eqs"][0]["label"] == "1");
    CHECK(doc["eqs"][0]["monomials"][0] == nlohmann::json::parse(R"([1, ["u1", "v1"]])"));
    CHECK(doc["eqs"][122]["label"] == "");
}
