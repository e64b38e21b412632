#include <doctest.h>

#include "grunit/json_io.hpp"
#include "support/generators.hpp"

using namespace grunit;

TEST_CASE("group element JSON") {
    const GroupElement a = shared_group_P()->generator("a");
    const json j = element_to_json(a);
    CHECK(j.dump() == R"({"dim":4,"rows":[[1,0,0,1],[0,-1,0,1],[0,0,-1,0],[0,0,0,1]]})");
    CHECK(element_from_json(j) == a);
    CHECK_THROWS_AS(element_from_json(json::parse(R"({"dim":3,"rows":[[1]]})")), JsonFormatError);
}

TEST_CASE("ring JSON round trips") {
    gen::Rng rng(61);
    for (int t = 0; t < 100; ++t) {
        const auto x = gen::cyclo(rng);
        CHECK(cyclo_from_json(ring_to_json(x)) == x);
        const auto z = gen::zeta8(rng);
        CHECK(zeta8_from_json(ring_to_json(z)) == z);
        const auto g = gen::gaussian(rng);
        CHECK(gaussian_from_json(ring_to_json(g)) == g);
    }
    CHECK(ring_to_json(CycloBivariate::s()).dump() == R"({"st":[[0,0,0,0],[1,0,0,0],[0,0,0,0],[0,0,0,0]]})");
    CHECK(ring_to_json(PrimeField(17, 2)).dump() == R"({"p":17,"deg":1,"val":[2]})");
    const auto q = std::get<QuadExtField>(find_eighth_root(7).root);
    CHECK(std::get<QuadExtField>(field_from_json(ring_to_json(q))) == q);
    CHECK(std::get<PrimeField>(field_from_json(ring_to_json(PrimeField(17, 2)))) == PrimeField(17, 2));
    CHECK_THROWS_AS(field_from_json(json::parse(R"({"p":17,"deg":3,"val":[1]})")), JsonFormatError);
    CHECK_THROWS_AS(cyclo_from_json(json::parse(R"({"st":[[1]]})")), JsonFormatError);
}

TEST_CASE("group ring JSON round trip and collisions") {
    const auto alpha = catalog_alpha_R();
    const json j = group_ring_to_json(alpha);
    CHECK(j["group"] == "P");
    CHECK(j["ring"] == "R");
    CHECK(j["terms"].size() == 21);
    CHECK(group_ring_from_json<CycloBivariate>(j, cyclo_from_json) == alpha);

    const json collide = json::parse(R"({"group":"P","ring":"Z[i]","terms":[
        {"word":"a*a","coeff":{"gauss":[1,0]}},
        {"word":"x","coeff":{"gauss":[-1,0]}},
        {"word":"b","coeff":{"gauss":[0,1]}}]})");
    const auto e = group_ring_from_json<GaussianInt>(collide, gaussian_from_json);
    CHECK(e.support_size() == 1);
    CHECK_THROWS_AS(group_ring_from_json<GaussianInt>(json::parse(R"({"group":"P"})"), gaussian_from_json),
                    JsonFormatError);
}

TEST_CASE("supports JSON") {
    const SupportPair sp = catalog_supports();
    const json j = supports_to_json(sp);
    const SupportPair back = supports_from_json(j);
    CHECK(back.g_list == sp.g_list);
    CHECK(back.h_list == sp.h_list);
    const json pair{{"alpha", group_ring_to_json(catalog_alpha_R())}, {"beta", group_ring_to_json(catalog_beta_R())}};
    const SupportPair from_elems = supports_from_json(pair);
    CHECK(from_elems.g_list.size() == 21);
    CHECK_THROWS_AS(supports_from_json(json::parse(R"({"group":"P","g":["x","a^2"],"h":["1"]})")).g_list.size(),
                    std::invalid_argument);
    CHECK_THROWS_AS(supports_from_json(json::parse(R"({"group":"P","g":["1","x"]})")), JsonFormatError);
}
