#include <doctest.h>

#include "grunit/catalog.hpp"
#include "grunit/group_ring.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace grunit;

namespace {

using Elem = GroupRingElem<CycloBivariate>;

const GroupHandle& P() { return shared_group_P(); }

Elem basis(const std::string& w, const CycloBivariate& c = CycloBivariate(1)) {
    return Elem::from_word(P(), parse_word(w, *P()), c);
}

oracle::GroupRing to_oracle(const Elem& a) {
    oracle::GroupRing out;
    for (const auto& [g, c] : a.terms()) {
        oracle::Matrix m;
        for (const auto& row : g.rows()) m.emplace_back(row.begin(), row.end());
        oracle::Bivariate b;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (c.coeff(i, j)) b[{i, j}] = c.coeff(i, j);
        out[m] = b;
    }
    return out;
}

using AbelImage = std::map<std::pair<int, int>, CycloBivariate>;

AbelImage convolve(const AbelImage& a, const AbelImage& b) {
    AbelImage out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            const std::pair<int, int> key{(ka.first + kb.first) % 4, (ka.second + kb.second) % 4};
            out[key] = out[key] + va * vb;
        }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

TEST_CASE("addition and scaling") {
    gen::Rng rng(31);
    const Elem a = gen::r_element(rng);
    CHECK(gr_add(a, Elem(P())) == a);
    CHECK(gr_add(basis("a"), gr_scale(CycloBivariate(-1), basis("a"))).is_zero());
    CHECK(gr_scale(CycloBivariate(2), gr_add(basis("a"), basis("b"))) ==
          gr_add(basis("a", CycloBivariate(2)), basis("b", CycloBivariate(2))));
    CHECK(gr_add(a, gr_neg(a)).support_size() == 0);
    CHECK_THROWS(gr_add(a, GroupRingElem<CycloBivariate>(shared_group_S())));
}

TEST_CASE("witness invariant") {
    CHECK_THROWS_AS(Elem::basis(P(), P()->eval(parse_word("a", *P())), CycloBivariate(1), parse_word("b", *P())),
                    std::invalid_argument);
    const Elem e = basis("x*z^-1");
    for (const auto& [g, c] : e.terms()) CHECK(P()->eval(*e.witness(g)) == g);
}

TEST_CASE("multiplication") {
    CHECK(gr_mul(basis("a"), basis("b")) == basis("a*b"));
    const Elem prod = gr_mul(basis("a"), basis("b"));
    CHECK(prod.witness(P()->eval(parse_word("a*b", *P())))->to_string() == "a*b");

    gen::Rng rng(32);
    for (int t = 0; t < 200; ++t) {
        const Elem a = gen::r_element(rng), b = gen::r_element(rng);
        CHECK(to_oracle(gr_mul(a, b)) == oracle::mul(to_oracle(a), to_oracle(b)));
    }
}

TEST_CASE("property: associativity, distributivity, star anti-automorphism") {
    gen::Rng rng(33);
    for (int t = 0; t < 500; ++t) {
        const Elem a = gen::r_element(rng), b = gen::r_element(rng), c = gen::r_element(rng);
        CHECK(gr_mul(gr_mul(a, b), c) == gr_mul(a, gr_mul(b, c)));
        CHECK(gr_mul(a, gr_add(b, c)) == gr_add(gr_mul(a, b), gr_mul(a, c)));
        CHECK(gr_star(gr_mul(a, b)) == gr_mul(gr_star(b), gr_star(a)));
        CHECK(gr_star(gr_star(a)) == a);
    }
    const Elem one = Elem::one(P(), CycloBivariate(1));
    CHECK(gr_star(one) == one);
    CHECK(gr_star(basis("a", CycloBivariate::s())) == basis("a^-1", CycloBivariate::s()));
}

TEST_CASE("units and non-triviality") {
    const Elem g = basis("a*b^2"), g_inv = basis("b^-2*a^-1");
    CHECK(gr_verify_unit(g, g_inv));
    const Elem alpha = catalog_alpha_R();
    CHECK_FALSE(gr_verify_unit(alpha, alpha));
    CHECK(gr_is_nontrivial(alpha));
    CHECK_FALSE(gr_is_nontrivial(g));
    CHECK_FALSE(gr_is_nontrivial(Elem(P())));
}

TEST_CASE("twisted automorphisms") {
    const Elem alpha = catalog_alpha_R();
    const auto identity = group_automorphism_only(*P(), {{"a", Word{{{"a", 1}}}}, {"b", Word{{{"b", 1}}}}},
                                                  {{"a", Word{{{"a", 1}}}}, {"b", Word{{{"b", 1}}}}}, CycloBivariate(1));
    CHECK(gr_apply_twisted(identity, alpha) == alpha);
    CHECK(gr_apply_twisted(catalog_theta0(), alpha) == alpha);
    CHECK(gr_apply_twisted(catalog_conjugation_gauge(), alpha) == alpha);
    CHECK(catalog_theta0().is_valid(*P()));
    CHECK(catalog_theta1().is_valid(*P()));

    gen::Rng rng(34);
    for (int t = 0; t < 200; ++t) {
        const Elem a = gen::r_element(rng), b = gen::r_element(rng);
        for (const auto& theta : {catalog_theta0(), catalog_theta1(), catalog_conjugation_gauge()})
            CHECK(gr_apply_twisted(theta, gr_mul(a, b)) == gr_mul(gr_apply_twisted(theta, a), gr_apply_twisted(theta, b)));
    }
}

TEST_CASE("missing witnesses outside P") {
    const auto& s = shared_group_S();
    GroupRingElem<PrimeField> e(s);
    e.add_term(s->eval(parse_word("x", *s)), PrimeField(2, 1));
    CHECK_THROWS_AS(gr_apply_twisted(catalog_phi_S_twisted(), e), MissingWitnessError);
}

TEST_CASE("characters: witness path agrees with abelianization path") {
    const auto chi0 = catalog_chi0();
    CHECK(chi0.is_valid(*P()));
    CHECK(chi0.eval(parse_word("b^-1*a^2*b*a^2", *P()), *P()).is_one());
    gen::Rng rng(35);
    for (int t = 0; t < 300; ++t) {
        const Word w = parse_word(gen::word_text(rng, {"a", "b", "x", "y", "z"}, 8), *P());
        for (const auto& chi : {catalog_chi0(), catalog_chi1()})
            CHECK(chi.eval(w, *P()) == character_via_abelianization_P(chi, P()->eval(w)));
    }
    const GroupCharacter<CycloBivariate> bad({{"a", CycloBivariate::s()}, {"b", CycloBivariate(1)}});
    CHECK_FALSE(bad.is_valid(*P()));
}

TEST_CASE("abelianization image") {
    const auto img = gr_abelianize_P(catalog_alpha_R());
    REQUIRE(img.size() == 1);
    CHECK(img.begin()->first == std::make_pair(0, 0));
    CHECK(img.begin()->second.is_one());
    const auto img_beta = gr_abelianize_P(catalog_beta_R());
    REQUIRE(img_beta.size() == 1);
    CHECK(img_beta.begin()->second.is_one());
    const auto img_x = gr_abelianize_P(basis("x"));
    REQUIRE(img_x.size() == 1);
    CHECK(img_x.begin()->first == std::make_pair(2, 0));

    gen::Rng rng(36);
    for (int t = 0; t < 300; ++t) {
        const Elem a = gen::r_element(rng), b = gen::r_element(rng);
        CHECK(gr_abelianize_P(gr_mul(a, b)) == convolve(gr_abelianize_P(a), gr_abelianize_P(b)));
    }
}

TEST_CASE("rho grading") {
    const auto rho = catalog_rho();
    CHECK(gr_check_rho_grading(catalog_alpha_R(), rho));
    CHECK(gr_check_rho_grading(catalog_beta_R(), rho));
    CHECK(gr_check_rho_grading(Elem::one(P(), CycloBivariate(1)), rho));
    CHECK_FALSE(gr_check_rho_grading(basis("1", CycloBivariate::s()), rho));
    CHECK(rho.contains(CycloBivariate::monomial(-1, 2, 0), parse_word("x", *P()), *P()));
    CHECK(ring_pow(rho.representative(parse_word("a", *P()), *P()), 4) == CycloBivariate(-1));
}

TEST_CASE("coefficient maps keep witnesses") {
    const auto q = CyclotomicZeta8::zeta();
    const auto image = gr_map_coeffs(catalog_alpha_R(), [&](const CycloBivariate& c) { return specialize_R(c, q, q); });
    CHECK(image.support_size() == 21);
    for (const auto& [g, c] : image.terms()) CHECK(image.witness(g) != nullptr);
    CHECK(basis("a*b", CycloBivariate::monomial(-1, 1, 2)).to_string() == "(-s*t^2)*a*b");
}
